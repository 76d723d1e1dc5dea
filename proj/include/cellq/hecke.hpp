#pragma once

#include <map>
#include <memory>
#include <vector>

#include "cellq/coxeter.hpp"
#include "cellq/laurent.hpp"

namespace cellq {

/// Sparse element of the Hecke algebra in the standard basis H_w;
/// zero coefficients are never stored.
using HeckeElt = std::map<Elt, ZLaurent>;

/// The Hecke algebra of a finite Weyl group over Z[q,q^-1], with quadratic
/// relation (H_i - q^-1)(H_i + q) = 0, its Kazhdan-Lusztig basis C_w
/// (bar-invariant, C_w in H_w + sum_{x<w} qZ[q] H_x), structure constants,
/// Lusztig's a-function, cells of W, and the asymptotic ring on basis t_w.
class HeckeAlgebra {
public:
    explicit HeckeAlgebra(std::shared_ptr<const WeylGroup> group);

    const WeylGroup& group() const { return *w_; }
    std::shared_ptr<const WeylGroup> group_ptr() const { return w_; }

    // --- standard basis arithmetic --------------------------------------
    static HeckeElt zero() { return {}; }
    static HeckeElt basis(Elt w) { return {{w, ZLaurent(1)}}; }
    static void add_to(HeckeElt& a, Elt w, const ZLaurent& c);
    static HeckeElt add(const HeckeElt& a, const HeckeElt& b);
    static HeckeElt scale(const HeckeElt& a, const ZLaurent& c);

    HeckeElt mult_gen_right(const HeckeElt& a, int s) const; // a * H_s
    HeckeElt mult_gen_left(int s, const HeckeElt& a) const;  // H_s * a
    HeckeElt mult(const HeckeElt& a, const HeckeElt& b) const;
    HeckeElt bar(const HeckeElt& a) const;

    /// q-symmetrizer of a parabolic subset: sum over W_J of
    /// q^{l(w0J) - l(w)} H_w; equals C_{w0J}.
    HeckeElt q_symmetrizer(std::uint32_t j_mask) const;

    // --- Kazhdan-Lusztig basis -------------------------------------------
    /// C_w in the standard basis, as (x, p_{x,w}) sorted by x.
    const std::vector<std::pair<Elt, ZLaurent>>& kl_row(Elt w) const { return kl_[w]; }
    HeckeElt kl_elt(Elt w) const;
    ZLaurent kl_poly(Elt x, Elt w) const; // p_{x,w}
    Int mu(Elt x, Elt w) const;           // coefficient of q in p_{x,w}

    /// expand an element in the KL basis (exact; input is consumed)
    std::map<Elt, ZLaurent> kl_expand(HeckeElt x) const;

    /// structure constants: C_x C_y = sum_z h_{x,y}^z C_z
    std::map<Elt, ZLaurent> h_product(Elt x, Elt y) const;

    // --- asymptotic data (whole-group tables, built on first use) --------
    struct WCells {
        std::vector<int> a;               // Lusztig a-function
        std::vector<int> left, right, two; // cell index per element
        int n_left = 0, n_right = 0, n_two = 0;
        // preorder closures: leq_l[x][z] means z <=_L x
        std::vector<std::vector<bool>> leq_l, leq_r, leq_lr;
    };

    const WCells& w_cells() const;
    int lusztig_a(Elt w) const { return w_cells().a[w]; }

    /// full h-table row: h_{x,y}^z for all z (sorted by z)
    const std::vector<std::pair<Elt, ZLaurent>>& h_row(Elt x, Elt y) const;

    /// asymptotic ring: t_x t_y = sum_z gamma~_{x,y}^{z^-1} t_z, returned as
    /// coefficients on t_z
    std::vector<std::pair<Elt, Int>> asym_product(Elt x, Elt y) const;
    /// gamma~_{x,y}^z: constant term of q^{a(z)} h_{x,y}^z
    Int gamma_tilde(Elt x, Elt y, Elt z) const;

private:
    void ensure_tables() const;

    std::shared_ptr<const WeylGroup> w_;
    std::vector<std::vector<std::pair<Elt, ZLaurent>>> kl_;

    mutable bool tables_built_ = false;
    mutable std::vector<std::vector<std::pair<Elt, ZLaurent>>> h_; // (x*n+y) -> rows
    mutable WCells cells_;
};

} // namespace cellq

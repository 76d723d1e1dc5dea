#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cellq/laurent.hpp"

namespace cellq {

/// Cartan datum for the finite types A-G at rank <= 4.
struct CartanDatum {
    char type = 'A';
    int rank = 0;

    static CartanDatum make(char type, int rank);

    /// Coxeter matrix m[i][j] (orders of s_i s_j), 0-indexed.
    std::vector<std::vector<int>> coxeter_matrix() const;
    /// Integer Cartan matrix a[i][j] = <alpha_j, alpha_i^vee>.
    std::vector<std::vector<int>> cartan_matrix() const;

    std::string name() const { return std::string(1, type) + std::to_string(rank); }
};

using Elt = int; // index into the enumerated group, ShortLex order

/// A finite Weyl group realized by its permutation action on the roots
/// (coordinates in the simple-root basis).  Elements are indices in ShortLex
/// order of their normal forms; the table is immutable once built.
class WeylGroup {
public:
    /// Enumerates the whole group; throws UnsupportedRank when |W| would
    /// exceed `bound` (default keeps F4 admissible, blocks E types).
    static std::shared_ptr<const WeylGroup> build(const CartanDatum& datum, long bound = 1200);

    const CartanDatum& datum() const { return datum_; }
    int rank() const { return datum_.rank; }
    long size() const { return static_cast<long>(length_.size()); }
    long positive_roots() const { return n_pos_; }

    int length(Elt w) const { return length_[w]; }
    const std::vector<std::uint8_t>& word(Elt w) const { return word_[w]; }
    Elt right_mult(Elt w, int s) const { return rmult_[w][s]; }
    Elt left_mult(int s, Elt w) const { return lmult_[w][s]; }
    Elt inverse(Elt w) const { return inv_[w]; }
    Elt mult(Elt x, Elt y) const;
    Elt identity() const { return 0; }
    Elt longest() const { return w0_; }

    bool right_descent(Elt w, int s) const { return (rdesc_[w] >> s) & 1u; }
    bool left_descent(Elt w, int s) const { return (ldesc_[w] >> s) & 1u; }
    std::uint32_t right_descents(Elt w) const { return rdesc_[w]; }
    std::uint32_t left_descents(Elt w) const { return ldesc_[w]; }

    /// Bruhat order (subword property).
    bool bruhat_leq(Elt x, Elt y) const { return bruhat_[y][x]; }

    std::string word_string(Elt w) const;

    // --- parabolic machinery -------------------------------------------

    /// subsets J of {0..rank-1} are passed as bitmasks
    struct Parabolic {
        std::uint32_t mask = 0;
        std::vector<Elt> elements; // the subgroup W_J, ascending Elt order
        Elt longest = 0;           // w_circ^J
        int longest_length = 0;
    };

    const Parabolic& parabolic(std::uint32_t mask) const;

    struct DoubleCoset {
        Elt min_rep = 0;   // unique minimal-length representative
        Elt wplus = 0;     // unique longest element of the coset
        std::vector<Elt> members;
    };

    struct DoubleCosetData {
        std::vector<DoubleCoset> cosets; // ordered by min_rep (ShortLex)
        std::vector<int> coset_of;       // element -> index into cosets
    };

    /// Partition of W into double cosets W_J g W_K.
    const DoubleCosetData& double_cosets(std::uint32_t j_mask, std::uint32_t k_mask) const;

    /// Poincare polynomial of a subset: sum over w of q^{-2 l(w)}.
    ZLaurent poincare(const std::vector<Elt>& subset) const;
    ZLaurent poincare_parabolic(std::uint32_t mask) const;

    /// order of the group predicted by the classical formula for the type
    static long classical_order(const CartanDatum& datum);

private:
    WeylGroup() = default;

    CartanDatum datum_;
    long n_pos_ = 0;
    Elt w0_ = 0;

    std::vector<std::vector<Elt>> rmult_, lmult_;
    std::vector<Elt> inv_;
    std::vector<int> length_;
    std::vector<std::uint32_t> rdesc_, ldesc_;
    std::vector<std::vector<std::uint8_t>> word_;
    std::vector<std::vector<bool>> bruhat_; // bruhat_[y][x] : x <= y

    mutable std::map<std::uint32_t, Parabolic> parabolics_;
    mutable std::map<std::uint64_t, DoubleCosetData> cosets_;
};

} // namespace cellq

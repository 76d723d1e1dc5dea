#include "cellq/hecke.hpp"

#include <algorithm>

#include "cellq/errors.hpp"

namespace cellq {

namespace {

// strongly connected components of a reachability closure
std::pair<std::vector<int>, int> scc_of_closure(const std::vector<std::vector<bool>>& reach) {
    long n = static_cast<long>(reach.size());
    std::vector<int> comp(n, -1);
    int next = 0;
    for (long x = 0; x < n; ++x) {
        if (comp[x] >= 0) continue;
        comp[x] = next;
        for (long y = x + 1; y < n; ++y)
            if (comp[y] < 0 && reach[x][y] && reach[y][x]) comp[y] = next;
        ++next;
    }
    return {comp, next};
}

// transitive closure of a one-step relation (edge[x] = set of z one step
// below x), as leq[x][z] with reflexivity
std::vector<std::vector<bool>> closure(const std::vector<std::vector<bool>>& edge) {
    long n = static_cast<long>(edge.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::vector<long> stack;
    for (long x = 0; x < n; ++x) {
        auto& row = leq[x];
        stack.assign(1, x);
        row[x] = true;
        while (!stack.empty()) {
            long u = stack.back();
            stack.pop_back();
            const auto& e = edge[u];
            for (long z = 0; z < n; ++z) {
                if (e[z] && !row[z]) {
                    row[z] = true;
                    stack.push_back(z);
                }
            }
        }
    }
    return leq;
}

} // namespace

void HeckeAlgebra::add_to(HeckeElt& a, Elt w, const ZLaurent& c) {
    if (is_zero(c)) return;
    auto it = a.find(w);
    if (it == a.end()) {
        a.emplace(w, c);
    } else {
        it->second += c;
        if (is_zero(it->second)) a.erase(it);
    }
}

HeckeElt HeckeAlgebra::add(const HeckeElt& a, const HeckeElt& b) {
    HeckeElt r = a;
    for (const auto& [w, c] : b) add_to(r, w, c);
    return r;
}

HeckeElt HeckeAlgebra::scale(const HeckeElt& a, const ZLaurent& c) {
    HeckeElt r;
    if (is_zero(c)) return r;
    for (const auto& [w, x] : a) r.emplace(w, x * c);
    return r;
}

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const WeylGroup> group) : w_(std::move(group)) {
    // KL basis by induction on length; element indices are already sorted by
    // length, so a single forward pass is an induction on length.
    const WeylGroup& W = *w_;
    long n = W.size();
    kl_.resize(n);
    const ZLaurent q = q_pow(1);
    for (Elt w = 0; w < n; ++w) {
        if (w == 0) {
            kl_[0] = {{0, ZLaurent(1)}};
            continue;
        }
        int s = 0;
        while (!W.left_descent(w, s)) ++s;
        Elt v = W.left_mult(s, w);
        // C_s C_v, with C_s = H_s + q
        HeckeElt prod;
        for (const auto& [x, p] : kl_[v]) {
            add_to(prod, x, p * q);
            Elt sx = W.left_mult(s, x);
            add_to(prod, sx, p);
            if (W.length(sx) < W.length(x)) add_to(prod, x, p * (q_pow(-1) - q));
        }
        // subtract mu(x,v) C_x over x < v with s x < x
        for (const auto& [x, p] : kl_[v]) {
            if (x == v) continue;
            if (W.length(W.left_mult(s, x)) > W.length(x)) continue;
            Int m = p.coeff(1);
            if (is_zero(m)) continue;
            for (const auto& [y, py] : kl_[x]) add_to(prod, y, -py.scaled(m));
        }
        std::vector<std::pair<Elt, ZLaurent>> row(prod.begin(), prod.end());
        for (auto& [x, p] : row) {
            if (!p.all_coeffs_nonnegative())
                throw PositivityViolation("kl polynomial p[" + W.word_string(x) + "," +
                                          W.word_string(w) + "] = " + to_string(p));
            if (x == w) {
                if (p != ZLaurent(1)) throw InvariantError("kl row not unitriangular at top");
            } else if (p.valuation() < 1 || !W.bruhat_leq(x, w)) {
                throw InvariantError("kl row normalization broken at p[" + W.word_string(x) +
                                     "," + W.word_string(w) + "]");
            }
        }
        kl_[w] = std::move(row);
    }
}

HeckeElt HeckeAlgebra::mult_gen_right(const HeckeElt& a, int s) const {
    HeckeElt r;
    const ZLaurent qdiff = q_pow(-1) - q_pow(1);
    for (const auto& [x, c] : a) {
        Elt xs = w_->right_mult(x, s);
        add_to(r, xs, c);
        if (w_->length(xs) < w_->length(x)) add_to(r, x, c * qdiff);
    }
    return r;
}

HeckeElt HeckeAlgebra::mult_gen_left(int s, const HeckeElt& a) const {
    HeckeElt r;
    const ZLaurent qdiff = q_pow(-1) - q_pow(1);
    for (const auto& [x, c] : a) {
        Elt sx = w_->left_mult(x, s);
        add_to(r, sx, c);
        if (w_->length(sx) < w_->length(x)) add_to(r, x, c * qdiff);
    }
    return r;
}

HeckeElt HeckeAlgebra::mult(const HeckeElt& a, const HeckeElt& b) const {
    HeckeElt r;
    for (const auto& [y, c] : b) {
        HeckeElt ay = a;
        for (std::uint8_t s : w_->word(y)) ay = mult_gen_right(ay, s);
        for (const auto& [x, cx] : ay) add_to(r, x, cx * c);
    }
    return r;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& a) const {
    // bar(H_w) = (H_{w^-1})^{-1}; H_s^{-1} = H_s + (q - q^{-1})
    HeckeElt r;
    const ZLaurent qd = q_pow(1) - q_pow(-1);
    for (const auto& [x, c] : a) {
        HeckeElt term = basis(0);
        const auto& word = w_->word(x);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            HeckeElt next = mult_gen_right(term, *it);
            for (const auto& [y, cy] : term) add_to(next, y, cy * qd);
            term = std::move(next);
        }
        ZLaurent cb = c.bar();
        for (const auto& [y, cy] : term) add_to(r, y, cy * cb);
    }
    return r;
}

HeckeElt HeckeAlgebra::q_symmetrizer(std::uint32_t j_mask) const {
    const auto& par = w_->parabolic(j_mask);
    HeckeElt x;
    for (Elt w : par.elements) x.emplace(w, q_pow(par.longest_length - w_->length(w)));
    return x;
}

HeckeElt HeckeAlgebra::kl_elt(Elt w) const {
    HeckeElt r;
    for (const auto& [x, p] : kl_[w]) r.emplace(x, p);
    return r;
}

ZLaurent HeckeAlgebra::kl_poly(Elt x, Elt w) const {
    const auto& row = kl_[w];
    auto it = std::lower_bound(row.begin(), row.end(), x,
                               [](const auto& a, Elt b) { return a.first < b; });
    if (it == row.end() || it->first != x) return {};
    return it->second;
}

Int HeckeAlgebra::mu(Elt x, Elt w) const { return kl_poly(x, w).coeff(1); }

std::map<Elt, ZLaurent> HeckeAlgebra::kl_expand(HeckeElt x) const {
    std::map<Elt, ZLaurent> out;
    while (!x.empty()) {
        // the maximal-index term is maximal-length, and C_z is unitriangular
        auto it = std::prev(x.end());
        Elt z = it->first;
        ZLaurent c = it->second;
        out.emplace(z, c);
        for (const auto& [y, p] : kl_[z]) add_to(x, y, -p * c);
        if (x.count(z)) throw InvariantError("kl_expand: elimination failed");
    }
    return out;
}

std::map<Elt, ZLaurent> HeckeAlgebra::h_product(Elt x, Elt y) const {
    return kl_expand(mult(kl_elt(x), kl_elt(y)));
}

void HeckeAlgebra::ensure_tables() const {
    if (tables_built_) return;
    const WeylGroup& W = *w_;
    long n = W.size();
    h_.assign(static_cast<size_t>(n) * n, {});
    for (Elt x = 0; x < n; ++x) {
        for (Elt y = 0; y < n; ++y) {
            auto prod = h_product(x, y);
            auto& row = h_[static_cast<size_t>(x) * n + y];
            row.assign(prod.begin(), prod.end());
            for (const auto& [z, h] : row)
                if (!h.all_coeffs_nonnegative())
                    throw PositivityViolation("h[" + W.word_string(x) + "," + W.word_string(y) +
                                              "]^" + W.word_string(z) + " = " + to_string(h));
        }
    }
    // a(z) = max over nonzero h_{x,y}^z of -valuation (at least 0)
    cells_.a.assign(n, 0);
    for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y)
            for (const auto& [z, h] : h_[static_cast<size_t>(x) * n + y])
                cells_.a[z] = std::max(cells_.a[z], -h.valuation());

    // cell preorders from one-step "appears in a product" relations
    std::vector<std::vector<bool>> el(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> er(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> elr(n, std::vector<bool>(n, false));
    for (Elt x = 0; x < n; ++x) {
        for (Elt y = 0; y < n; ++y) {
            for (const auto& [z, h] : h_[static_cast<size_t>(x) * n + y]) {
                el[y][z] = true;  // z <=_L y via left factor x
                er[x][z] = true;  // z <=_R x via right factor y
                elr[y][z] = true;
                elr[x][z] = true;
            }
        }
    }
    cells_.leq_l = closure(el);
    cells_.leq_r = closure(er);
    cells_.leq_lr = closure(elr);
    std::tie(cells_.left, cells_.n_left) = scc_of_closure(cells_.leq_l);
    std::tie(cells_.right, cells_.n_right) = scc_of_closure(cells_.leq_r);
    std::tie(cells_.two, cells_.n_two) = scc_of_closure(cells_.leq_lr);
    tables_built_ = true;
}

const HeckeAlgebra::WCells& HeckeAlgebra::w_cells() const {
    ensure_tables();
    return cells_;
}

const std::vector<std::pair<Elt, ZLaurent>>& HeckeAlgebra::h_row(Elt x, Elt y) const {
    ensure_tables();
    return h_[static_cast<size_t>(x) * w_->size() + y];
}

Int HeckeAlgebra::gamma_tilde(Elt x, Elt y, Elt z) const {
    ensure_tables();
    const auto& row = h_[static_cast<size_t>(x) * w_->size() + y];
    auto it = std::lower_bound(row.begin(), row.end(), z,
                               [](const auto& a, Elt b) { return a.first < b; });
    if (it == row.end() || it->first != z) return 0;
    return it->second.coeff(-cells_.a[z]);
}

std::vector<std::pair<Elt, Int>> HeckeAlgebra::asym_product(Elt x, Elt y) const {
    // t_x t_y = sum over u of gamma~_{x,y}^u t_{u^-1}
    ensure_tables();
    std::vector<std::pair<Elt, Int>> out;
    const auto& row = h_[static_cast<size_t>(x) * w_->size() + y];
    for (const auto& [u, h] : row) {
        Int g = h.coeff(-cells_.a[u]);
        if (!is_zero(g)) out.emplace_back(w_->inverse(u), g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cellq

#include "cellq/coxeter.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <unordered_map>

#include "cellq/errors.hpp"

namespace cellq {

CartanDatum CartanDatum::make(char type, int rank) {
    CartanDatum d{type, rank};
    auto bad = [&](const std::string& why) { throw UnsupportedRank(d.name() + ": " + why); };
    switch (type) {
        case 'A':
            if (rank < 1) bad("rank must be >= 1");
            break;
        case 'B':
        case 'C':
            if (rank < 2) bad("rank must be >= 2");
            break;
        case 'D':
            if (rank < 2) bad("rank must be >= 2");
            break;
        case 'E':
            bad("E types need rank 6-8, beyond the supported bound");
            break;
        case 'F':
            if (rank != 4) bad("F requires rank 4");
            break;
        case 'G':
            if (rank != 2) bad("G requires rank 2");
            break;
        default:
            throw UsageError(std::string("unknown Cartan type '") + type + "'");
    }
    return d;
}

std::vector<std::vector<int>> CartanDatum::cartan_matrix() const {
    int d = rank;
    std::vector<std::vector<int>> a(d, std::vector<int>(d, 0));
    for (int i = 0; i < d; ++i) a[i][i] = 2;
    auto bond = [&](int i, int j, int aij, int aji) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < d; ++i) bond(i, i + 1, -1, -1);
            break;
        case 'B': // last simple root short
            for (int i = 0; i + 2 < d; ++i) bond(i, i + 1, -1, -1);
            if (d >= 2) bond(d - 2, d - 1, -1, -2);
            break;
        case 'C': // last simple root long
            for (int i = 0; i + 2 < d; ++i) bond(i, i + 1, -1, -1);
            if (d >= 2) bond(d - 2, d - 1, -2, -1);
            break;
        case 'D':
            // chain on 0..d-2 plus a fork (d-3, d-1); D2 = A1 x A1, D3 = A3
            for (int i = 0; i + 2 < d; ++i) bond(i, i + 1, -1, -1);
            if (d >= 3) bond(d - 3, d - 1, -1, -1);
            break;
        case 'F':
            bond(0, 1, -1, -1);
            bond(1, 2, -1, -2);
            bond(2, 3, -1, -1);
            break;
        case 'G':
            bond(0, 1, -1, -3);
            break;
        default:
            break;
    }
    return a;
}

std::vector<std::vector<int>> CartanDatum::coxeter_matrix() const {
    auto a = cartan_matrix();
    int d = rank;
    std::vector<std::vector<int>> m(d, std::vector<int>(d, 2));
    for (int i = 0; i < d; ++i) {
        m[i][i] = 1;
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            switch (a[i][j] * a[j][i]) {
                case 0: m[i][j] = 2; break;
                case 1: m[i][j] = 3; break;
                case 2: m[i][j] = 4; break;
                case 3: m[i][j] = 6; break;
                default: throw InvariantError("non-finite bond in Cartan matrix");
            }
        }
    }
    return m;
}

long WeylGroup::classical_order(const CartanDatum& datum) {
    long d = datum.rank;
    auto fact = [](long n) {
        long f = 1;
        for (long i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (datum.type) {
        case 'A': return fact(d + 1);
        case 'B':
        case 'C': return (1L << d) * fact(d);
        case 'D': return d >= 2 ? (1L << (d - 1)) * fact(d) : 2;
        case 'F': return 1152;
        case 'G': return 12;
        default: return -1;
    }
}

namespace {

using RootCoord = std::vector<int>; // coordinates in the simple-root basis

struct RootSystem {
    std::vector<RootCoord> roots; // positive roots first, then their negatives
    long n_pos = 0;
    std::vector<int> simple_idx; // position of alpha_i in `roots`

    // s_i as a permutation of all roots
    std::vector<std::vector<int>> simple_perm;
};

RootSystem build_roots(const CartanDatum& datum) {
    int d = datum.rank;
    auto cart = datum.cartan_matrix();
    auto reflect = [&](const RootCoord& v, int i) {
        long pairing = 0;
        for (int j = 0; j < d; ++j) pairing += static_cast<long>(cart[i][j]) * v[j];
        RootCoord r = v;
        r[i] -= static_cast<int>(pairing);
        return r;
    };
    std::map<RootCoord, int> index;
    std::vector<RootCoord> roots;
    for (int i = 0; i < d; ++i) {
        RootCoord e(d, 0);
        e[i] = 1;
        index[e] = static_cast<int>(roots.size());
        roots.push_back(e);
    }
    for (size_t k = 0; k < roots.size(); ++k) {
        for (int i = 0; i < d; ++i) {
            RootCoord r = reflect(roots[k], i);
            if (!index.count(r)) {
                index[r] = static_cast<int>(roots.size());
                roots.push_back(r);
            }
        }
    }
    // reorder: positives (first nonzero coordinate > 0) first
    RootSystem rs;
    std::vector<RootCoord> pos, neg;
    for (auto& r : roots) {
        bool positive = false;
        for (int j = 0; j < d; ++j) {
            if (r[j] != 0) {
                positive = r[j] > 0;
                break;
            }
        }
        (positive ? pos : neg).push_back(r);
    }
    auto lex = [](const RootCoord& a, const RootCoord& b) { return a < b; };
    std::sort(pos.begin(), pos.end(), lex);
    rs.n_pos = static_cast<long>(pos.size());
    rs.roots = pos;
    for (auto& r : pos) {
        RootCoord m(r.size());
        for (size_t j = 0; j < r.size(); ++j) m[j] = -r[j];
        rs.roots.push_back(m);
    }
    std::map<RootCoord, int> idx;
    for (size_t k = 0; k < rs.roots.size(); ++k) idx[rs.roots[k]] = static_cast<int>(k);
    rs.simple_idx.resize(d);
    for (int i = 0; i < d; ++i) {
        RootCoord e(d, 0);
        e[i] = 1;
        rs.simple_idx[i] = idx.at(e);
    }
    rs.simple_perm.assign(d, std::vector<int>(rs.roots.size()));
    for (int i = 0; i < d; ++i)
        for (size_t k = 0; k < rs.roots.size(); ++k) rs.simple_perm[i][k] = idx.at(reflect(rs.roots[k], i));
    return rs;
}

std::string perm_key(const std::vector<int>& p) {
    std::string s(p.size() * sizeof(int), '\0');
    std::memcpy(s.data(), p.data(), s.size());
    return s;
}

} // namespace

std::shared_ptr<const WeylGroup> WeylGroup::build(const CartanDatum& datum, long bound) {
    long expect = classical_order(datum);
    if (expect > bound)
        throw UnsupportedRank(datum.name() + ": group order " + std::to_string(expect) +
                              " exceeds bound " + std::to_string(bound));

    RootSystem rs = build_roots(datum);
    int d = datum.rank;
    long nroots = static_cast<long>(rs.roots.size());

    auto w = std::shared_ptr<WeylGroup>(new WeylGroup());
    w->datum_ = datum;
    w->n_pos_ = rs.n_pos;

    std::vector<std::vector<int>> perms; // element -> root permutation
    std::unordered_map<std::string, Elt> seen;

    std::vector<int> id(nroots);
    for (long k = 0; k < nroots; ++k) id[k] = static_cast<int>(k);
    perms.push_back(id);
    seen[perm_key(id)] = 0;
    w->word_.push_back({});
    w->length_.push_back(0);

    // ShortLex BFS: FIFO over elements, generators ascending; append letters
    // on the right so discovery order is ShortLex on normal forms.
    for (size_t head = 0; head < perms.size(); ++head) {
        w->rmult_.emplace_back(d);
        for (int s = 0; s < d; ++s) {
            // (w s)(root) = w(s(root))
            std::vector<int> p(nroots);
            for (long k = 0; k < nroots; ++k) p[k] = perms[head][rs.simple_perm[s][k]];
            std::string key = perm_key(p);
            auto it = seen.find(key);
            Elt target;
            if (it == seen.end()) {
                target = static_cast<Elt>(perms.size());
                if (target >= bound)
                    throw UnsupportedRank(datum.name() + ": enumeration exceeded bound " + std::to_string(bound));
                seen.emplace(std::move(key), target);
                perms.push_back(std::move(p));
                auto word = w->word_[head];
                word.push_back(static_cast<std::uint8_t>(s));
                w->word_.push_back(std::move(word));
                w->length_.push_back(w->length_[head] + 1);
            } else {
                target = it->second;
            }
            w->rmult_[head][s] = target;
        }
    }

    long n = static_cast<long>(perms.size());
    if (expect >= 0 && n != expect)
        throw InvariantError(datum.name() + ": enumerated " + std::to_string(n) +
                             " elements, classical order is " + std::to_string(expect));

    // descents: l(ws) < l(w) iff w maps alpha_s to a negative root
    w->rdesc_.assign(n, 0);
    w->ldesc_.assign(n, 0);
    for (Elt x = 0; x < n; ++x)
        for (int s = 0; s < d; ++s)
            if (perms[x][rs.simple_idx[s]] >= rs.n_pos) w->rdesc_[x] |= 1u << s;

    // left multiplication: (s w)(root) = s(w(root))
    w->lmult_.assign(n, std::vector<Elt>(d));
    for (Elt x = 0; x < n; ++x) {
        for (int s = 0; s < d; ++s) {
            std::vector<int> p(nroots);
            for (long k = 0; k < nroots; ++k) p[k] = rs.simple_perm[s][perms[x][k]];
            w->lmult_[x][s] = seen.at(perm_key(p));
        }
    }
    for (Elt x = 0; x < n; ++x)
        for (int s = 0; s < d; ++s)
            if (w->length_[w->lmult_[x][s]] < w->length_[x]) w->ldesc_[x] |= 1u << s;

    // inverses
    w->inv_.assign(n, 0);
    for (Elt x = 0; x < n; ++x) {
        std::vector<int> p(nroots);
        for (long k = 0; k < nroots; ++k) p[perms[x][k]] = static_cast<int>(k);
        w->inv_[x] = seen.at(perm_key(p));
    }

    w->w0_ = 0;
    for (Elt x = 0; x < n; ++x)
        if (w->length_[x] > w->length_[w->w0_]) w->w0_ = x;

    // Bruhat table, filled by increasing length:
    //   pick s with s y < y; x <= y iff (s x < x ? s x <= s y : x <= s y)
    std::vector<Elt> by_len(n);
    for (Elt x = 0; x < n; ++x) by_len[x] = x;
    std::stable_sort(by_len.begin(), by_len.end(),
                     [&](Elt a, Elt b) { return w->length_[a] < w->length_[b]; });
    w->bruhat_.assign(n, std::vector<bool>(n, false));
    for (Elt y : by_len) {
        auto& row = w->bruhat_[y];
        if (y == 0) {
            row[0] = true;
            continue;
        }
        int s = 0;
        while (!((w->ldesc_[y] >> s) & 1u)) ++s;
        const auto& prev = w->bruhat_[w->lmult_[y][s]];
        for (Elt x = 0; x < n; ++x) {
            Elt sx = w->lmult_[x][s];
            row[x] = w->length_[sx] < w->length_[x] ? prev[sx] : prev[x];
        }
    }
    return w;
}

Elt WeylGroup::mult(Elt x, Elt y) const {
    Elt r = x;
    for (std::uint8_t s : word_[y]) r = rmult_[r][s];
    return r;
}

std::string WeylGroup::word_string(Elt w) const {
    if (word_[w].empty()) return "e";
    std::string s;
    for (std::uint8_t g : word_[w]) {
        if (!s.empty()) s += ".";
        s += "s" + std::to_string(g + 1);
    }
    return s;
}

const WeylGroup::Parabolic& WeylGroup::parabolic(std::uint32_t mask) const {
    auto it = parabolics_.find(mask);
    if (it != parabolics_.end()) return it->second;
    Parabolic p;
    p.mask = mask;
    // BFS inside the subgroup generated by the masked generators
    std::vector<bool> in(size(), false);
    std::vector<Elt> queue{0};
    in[0] = true;
    for (size_t h = 0; h < queue.size(); ++h) {
        for (int s = 0; s < rank(); ++s) {
            if (!((mask >> s) & 1u)) continue;
            Elt t = rmult_[queue[h]][s];
            if (!in[t]) {
                in[t] = true;
                queue.push_back(t);
            }
        }
    }
    for (Elt x = 0; x < size(); ++x)
        if (in[x]) p.elements.push_back(x);
    p.longest = p.elements[0];
    for (Elt x : p.elements)
        if (length_[x] > length_[p.longest]) p.longest = x;
    p.longest_length = length_[p.longest];
    return parabolics_.emplace(mask, std::move(p)).first->second;
}

const WeylGroup::DoubleCosetData& WeylGroup::double_cosets(std::uint32_t j_mask, std::uint32_t k_mask) const {
    std::uint64_t key = (static_cast<std::uint64_t>(j_mask) << 32) | k_mask;
    auto it = cosets_.find(key);
    if (it != cosets_.end()) return it->second;

    DoubleCosetData data;
    data.coset_of.assign(size(), -1);
    // minimal rep of the coset of x: strip left descents in J and right
    // descents in K until none remain
    std::vector<Elt> min_rep(size());
    for (Elt x = 0; x < size(); ++x) {
        Elt g = x;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int s = 0; s < rank(); ++s) {
                if (((j_mask >> s) & 1u) && left_descent(g, s)) {
                    g = lmult_[g][s];
                    moved = true;
                } else if (((k_mask >> s) & 1u) && right_descent(g, s)) {
                    g = rmult_[g][s];
                    moved = true;
                }
            }
        }
        min_rep[x] = g;
    }
    std::map<Elt, int> rep_index; // ordered by Elt = ShortLex
    for (Elt x = 0; x < size(); ++x) rep_index.emplace(min_rep[x], 0);
    int idx = 0;
    for (auto& [rep, i] : rep_index) i = idx++;
    data.cosets.resize(rep_index.size());
    for (auto& [rep, i] : rep_index) data.cosets[i].min_rep = rep;
    for (Elt x = 0; x < size(); ++x) {
        int c = rep_index.at(min_rep[x]);
        data.coset_of[x] = c;
        data.cosets[c].members.push_back(x);
    }
    for (auto& c : data.cosets) {
        c.wplus = c.members[0];
        for (Elt m : c.members)
            if (length_[m] > length_[c.wplus]) c.wplus = m;
    }
    return cosets_.emplace(key, std::move(data)).first->second;
}

ZLaurent WeylGroup::poincare(const std::vector<Elt>& subset) const {
    ZLaurent p;
    for (Elt w : subset) p += q_pow(-2 * length_[w]);
    return p;
}

ZLaurent WeylGroup::poincare_parabolic(std::uint32_t mask) const {
    return poincare(parabolic(mask).elements);
}

} // namespace cellq

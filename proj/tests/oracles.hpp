#pragma once

// Brute-force oracles used by the test suites.  Everything here is written
// independently of the implementation path it cross-checks: naive
// enumeration, rewriting, and long division only.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cellq/coxeter.hpp"
#include "cellq/int.hpp"
#include "cellq/laurent.hpp"
#include "cellq/rng.hpp"

namespace oracle {

using cellq::Int;
using cellq::Rat;
using cellq::ZLaurent;

// random Laurent polynomial with small coefficients
inline ZLaurent random_laurent(cellq::Rng& rng, int max_terms = 5, int exp_range = 6, long coeff_range = 9) {
    ZLaurent x;
    long terms = rng.below(static_cast<std::uint64_t>(max_terms) + 1);
    for (long i = 0; i < terms; ++i) {
        long c = rng.range(-coeff_range, coeff_range);
        int e = static_cast<int>(rng.range(-exp_range, exp_range));
        x += ZLaurent(Int(c), e);
    }
    return x;
}

// Long-division oracle in Z[q,q^-1]: returns true and the quotient when b
// divides a, reconstructing a == b*c afterwards as a final guard.
inline bool divide_oracle(const ZLaurent& a, const ZLaurent& b, ZLaurent& quot) {
    if (is_zero(b)) return false;
    if (is_zero(a)) {
        quot = ZLaurent();
        return true;
    }
    ZLaurent rem = a;
    ZLaurent q;
    while (!is_zero(rem) && rem.degree() - rem.valuation() >= b.degree() - b.valuation()) {
        Int lead_r = rem.highest_coeff();
        Int lead_b = b.highest_coeff();
        Int c;
        if (!cellq::checked_div(lead_r, lead_b, c)) return false;
        ZLaurent t(c, rem.degree() - b.degree());
        q += t;
        rem -= t * b;
        if (!is_zero(rem) && rem.degree() >= ZLaurent(t * b).degree() && rem.degree() >= a.degree() + 1)
            return false; // no progress guard
    }
    if (!is_zero(rem)) return false;
    if (q * b != a) return false;
    quot = q;
    return true;
}

// ---- free-word reduction oracle for small Coxeter groups ----------------
//
// Elements are represented by the lexicographically-least word among all
// shortest words, found by breadth-first rewriting with the braid and
// idempotent rules.  Only usable for tiny groups.

struct WordGroup {
    int rank;
    std::vector<std::vector<int>> m; // Coxeter matrix

    std::string braid_normalize(std::string w) const {
        // exhaustively rewrite to the minimal equivalent word (BFS over the
        // rewriting graph restricted to words of non-increasing length)
        std::set<std::string> seen{w};
        std::vector<std::string> queue{w};
        std::string best = w;
        for (size_t h = 0; h < queue.size(); ++h) {
            std::string u = queue[h];
            if (u.size() < best.size() || (u.size() == best.size() && u < best)) best = u;
            // idempotent rule: delete adjacent equal letters
            for (size_t i = 0; i + 1 < u.size(); ++i) {
                if (u[i] == u[i + 1]) {
                    std::string v = u.substr(0, i) + u.substr(i + 2);
                    if (seen.insert(v).second) queue.push_back(v);
                }
            }
            // braid rule: swap alternating runs of length m_ij
            for (size_t i = 0; i < u.size(); ++i) {
                for (int t = 0; t < rank; ++t) {
                    int s = u[i] - '1';
                    if (t == s) continue;
                    int order = m[s][t];
                    if (static_cast<size_t>(order) + i > u.size()) continue;
                    bool match = true;
                    for (int k = 0; k < order; ++k) {
                        char expect = static_cast<char>('1' + (k % 2 == 0 ? s : t));
                        if (u[i + k] != expect) {
                            match = false;
                            break;
                        }
                    }
                    if (!match) continue;
                    std::string v = u;
                    for (int k = 0; k < order; ++k) v[i + k] = static_cast<char>('1' + (k % 2 == 0 ? t : s));
                    if (seen.insert(v).second) queue.push_back(v);
                }
            }
        }
        return best;
    }

    // all group elements as canonical words
    std::set<std::string> enumerate() const {
        std::set<std::string> elems{std::string()};
        std::vector<std::string> queue{std::string()};
        for (size_t h = 0; h < queue.size(); ++h) {
            for (int s = 0; s < rank; ++s) {
                std::string w = braid_normalize(queue[h] + static_cast<char>('1' + s));
                if (elems.insert(w).second) queue.push_back(w);
            }
        }
        return elems;
    }
};

// Subword oracle for the Bruhat order: x <= y iff some subsequence of a
// fixed reduced word of y multiplies out to x with l(x) letters.
inline bool bruhat_subword_oracle(const cellq::WeylGroup& w, cellq::Elt x, cellq::Elt y) {
    const auto& wy = w.word(y);
    cellq::Elt target = x;
    size_t n = wy.size();
    // enumerate subsequences of the reduced word of y (n <= ~9 for the desk
    // groups this oracle runs on)
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        cellq::Elt g = 0;
        int picked = 0;
        for (size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1ull) {
                g = w.right_mult(g, wy[i]);
                ++picked;
            }
        }
        if (g == target && picked == w.length(x)) return true;
    }
    return false;
}

} // namespace oracle

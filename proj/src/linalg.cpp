#include "cellq/linalg.hpp"

#include <algorithm>

#include "cellq/errors.hpp"

namespace cellq {
namespace qpoly {

void trim(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly monic(Poly p) {
    trim(p);
    if (p.empty()) return p;
    Rat lead = p.back();
    for (Rat& c : p) c /= lead;
    return p;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    Poly rem = a, quot;
    trim(rem);
    int db = degree(b);
    if (db < 0) throw InvariantError("qpoly::divmod: zero divisor");
    if (degree(rem) < db) return {quot, rem};
    quot.assign(rem.size() - b.size() + 1, Rat(0));
    for (size_t k = quot.size(); k-- > 0;) {
        Rat c = rem[k + db] / b[db];
        if (is_zero(c)) continue;
        quot[k] = c;
        for (int j = 0; j <= db; ++j) rem[k + j] -= c * b[j];
    }
    trim(quot);
    trim(rem);
    return {quot, rem};
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly g = gcd(a, b);
    return monic(divmod(mul(a, b), g).first);
}

Rat eval(const Poly& p, const Rat& x) {
    Rat r(0);
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

std::string to_string(const Poly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (is_zero(p[i])) continue;
        std::string t = cellq::to_string(p[i]);
        if (i > 0) {
            std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
            t = (t == "1") ? xs : (t == "-1" ? "-" + xs : t + "*" + xs);
        }
        if (out.empty()) out = t;
        else if (t[0] == '-') out += " - " + t.substr(1);
        else out += " + " + t;
    }
    return out.empty() ? "0" : out;
}

RootScan rational_roots(const Poly& p0) {
    RootScan out;
    Poly p = p0;
    trim(p);
    if (degree(p) <= 0) return out;
    // Deflate each rational root found; roots of an exact polynomial are
    // found by clearing denominators and scanning divisors of the ends.
    Poly work = p;
    while (degree(work) >= 1) {
        // integerize
        Int denlcm(1);
        for (const Rat& c : work) denlcm = lcm(denlcm, den(c));
        std::vector<Int> ip(work.size());
        for (size_t i = 0; i < work.size(); ++i) ip[i] = num(work[i]) * (denlcm / den(work[i]));
        // strip x^k
        size_t k = 0;
        while (k < ip.size() && is_zero(ip[k])) ++k;
        if (k > 0) {
            if (std::find(out.roots.begin(), out.roots.end(), Rat(0)) == out.roots.end())
                out.roots.push_back(Rat(0));
            Poly next(work.begin() + k, work.end());
            work = std::move(next);
            continue;
        }
        bool found = false;
        std::vector<Int> ps = prime_factors(ip.front());
        std::vector<Int> qs = prime_factors(ip.back());
        // enumerate divisors of |c0| and |lead|
        auto divisors = [](const Int& n, const std::vector<Int>& primes) {
            std::vector<Int> ds{Int(1)};
            Int m = abs_int(n);
            for (const Int& p : primes) {
                size_t sz = ds.size();
                Int pk = p;
                while (m % pk == 0) {
                    for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
                    pk *= p;
                }
            }
            return ds;
        };
        for (const Int& a : divisors(ip.front(), ps)) {
            for (const Int& b : divisors(ip.back(), qs)) {
                for (int s : {1, -1}) {
                    Rat cand(s * a, b);
                    cand.canonicalize();
                    if (is_zero(eval(work, cand))) {
                        out.roots.push_back(cand);
                        Poly lin{-cand, Rat(1)};
                        work = divmod(work, lin).first;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    // distinct-linear split: fully deflated and no repeated roots
    if (degree(work) <= 0) {
        std::vector<Rat> sorted = out.roots;
        std::sort(sorted.begin(), sorted.end());
        bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        out.splits_distinct_linear = distinct && static_cast<int>(out.roots.size()) == degree(p);
    }
    return out;
}

} // namespace qpoly

namespace {

// In-place row echelon; returns pivot columns. When `aug` is nonnull it
// receives the same row operations (must have the same row count).
std::vector<long> echelon(QMat& m, QMat* aug = nullptr) {
    std::vector<long> pivots;
    long rows = m.rows(), cols = m.cols(), r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long p = -1;
        for (long i = r; i < rows; ++i)
            if (!is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) {
            m.row(p).swap(m.row(r));
            if (aug) aug->row(p).swap(aug->row(r));
        }
        Rat inv = 1 / m(r, c);
        m.row(r) *= inv;
        if (aug) aug->row(r) *= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            Rat f = m(i, c);
            m.row(i) -= f * m.row(r);
            if (aug) aug->row(i) -= f * aug->row(r);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

long rank_of(QMat m) { return static_cast<long>(echelon(m).size()); }

QMat kernel_of(QMat m) {
    long cols = m.cols();
    std::vector<long> pivots = echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivots) is_pivot[c] = true;
    long nullity = cols - static_cast<long>(pivots.size());
    QMat ker = QMat::Zero(cols, nullity);
    long k = 0;
    for (long c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        ker(c, k) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < c) ker(pivots[r], k) = -m(static_cast<long>(r), c);
        ++k;
    }
    return ker;
}

std::optional<QVec> solve(QMat m, QVec b) {
    QMat aug(b.rows(), 1);
    aug.col(0) = b;
    std::vector<long> pivots = echelon(m, &aug);
    long rows = m.rows(), cols = m.cols();
    QVec x = QVec::Zero(cols);
    for (size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(static_cast<long>(r), 0);
    for (long r = static_cast<long>(pivots.size()); r < rows; ++r)
        if (!is_zero(aug(r, 0))) return std::nullopt;
    return x;
}

QMat inverse_of(const QMat& m) {
    long n = m.rows();
    if (n != m.cols()) throw InvariantError("inverse_of: not square");
    QMat work = m;
    QMat aug = QMat::Identity(n, n);
    std::vector<long> pivots = echelon(work, &aug);
    if (static_cast<long>(pivots.size()) != n) throw InvariantError("inverse_of: singular matrix");
    return aug;
}

Rat determinant(QMat m) {
    long n = m.rows();
    Rat det(1);
    for (long c = 0; c < n; ++c) {
        long p = -1;
        for (long i = c; i < n; ++i)
            if (!is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != c) {
            m.row(p).swap(m.row(c));
            det = -det;
        }
        det *= m(c, c);
        Rat inv = 1 / m(c, c);
        for (long i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            Rat f = m(i, c) * inv;
            for (long j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

qpoly::Poly min_poly(const QMat& m) {
    long n = m.rows();
    if (n != m.cols()) throw InvariantError("min_poly: not square");
    qpoly::Poly acc{Rat(1)};
    for (long i = 0; i < n; ++i) {
        // Krylov sequence from e_i; first linear dependence gives the local
        // annihilator, and the lcm over all i is the minimal polynomial.
        QMat kry(n, 1);
        kry.setZero();
        kry(i, 0) = 1;
        QVec v = kry.col(0);
        for (long step = 1; step <= n; ++step) {
            v = m * v;
            QMat ext(n, kry.cols() + 1);
            ext.leftCols(kry.cols()) = kry;
            ext.col(kry.cols()) = v;
            // dependence test: solve kry * x = v
            auto x = solve(kry, v);
            if (x) {
                qpoly::Poly p(static_cast<size_t>(kry.cols()) + 1);
                for (long j = 0; j < kry.cols(); ++j) p[j] = -(*x)(j);
                p[kry.cols()] = 1;
                acc = qpoly::lcm(acc, p);
                break;
            }
            kry = ext;
        }
        if (qpoly::degree(acc) == n) break;
    }
    return acc;
}

qpoly::Poly char_poly(const QMat& m) {
    long n = m.rows();
    if (n != m.cols()) throw InvariantError("char_poly: not square");
    // Faddeev-LeVerrier: exact over Q, fine at these sizes.
    qpoly::Poly c(n + 1);
    c[n] = 1;
    QMat M = QMat::Zero(n, n);
    for (long k = 1; k <= n; ++k) {
        M = m * M;
        for (long i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        QMat AM = m * M;
        Rat tr(0);
        for (long i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / k;
    }
    return c;
}

std::optional<QMat> coords_in_basis(const QMat& basis, const QMat& vecs) {
    QMat work = basis;
    QMat aug = vecs;
    std::vector<long> pivots = echelon(work, &aug);
    QMat coords(basis.cols(), vecs.cols());
    coords.setZero();
    for (size_t r = 0; r < pivots.size(); ++r) coords.row(pivots[r]) = aug.row(static_cast<long>(r));
    for (long r = static_cast<long>(pivots.size()); r < aug.rows(); ++r)
        for (long j = 0; j < aug.cols(); ++j)
            if (!is_zero(aug(r, j))) return std::nullopt;
    return coords;
}

QMat column_space_basis(const QMat& m) {
    QMat work = m;
    std::vector<long> pivots = echelon(work);
    QMat basis(m.rows(), static_cast<long>(pivots.size()));
    for (size_t k = 0; k < pivots.size(); ++k) basis.col(static_cast<long>(k)) = m.col(pivots[k]);
    return basis;
}

ZMat hnf_basis(ZMat gens) {
    long rows = gens.rows(), cols = gens.cols();
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        // gcd-reduce column c below row r via row operations
        while (true) {
            long p = -1;
            for (long i = r; i < rows; ++i)
                if (!is_zero(gens(i, c)) && (p < 0 || abs_int(gens(i, c)) < abs_int(gens(p, c)))) p = i;
            if (p < 0) break;
            if (p != r) gens.row(p).swap(gens.row(r));
            bool clean = true;
            for (long i = r + 1; i < rows; ++i) {
                if (is_zero(gens(i, c))) continue;
                Int f;
                mpz_fdiv_q(f.get_mpz_t(), gens(i, c).get_mpz_t(), gens(r, c).get_mpz_t());
                gens.row(i) -= f * gens.row(r);
                if (!is_zero(gens(i, c))) clean = false;
            }
            if (clean) break;
        }
        if (r < rows && !is_zero(gens(r, c))) {
            if (sgn(gens(r, c)) < 0) gens.row(r) = -gens.row(r);
            ++r;
        }
    }
    ZMat h = gens.topRows(r);
    // reduce entries above each pivot into [0, pivot)
    for (long i = r - 1; i >= 0; --i) {
        long c = 0;
        while (c < cols && is_zero(h(i, c))) ++c;
        for (long k = 0; k < i; ++k) {
            Int f;
            mpz_fdiv_q(f.get_mpz_t(), h(k, c).get_mpz_t(), h(i, c).get_mpz_t());
            if (!is_zero(f)) h.row(k) -= f * h.row(i);
        }
    }
    return h;
}

ZMat lattice_hnf(const std::vector<std::vector<Int>>& generators, int dim) {
    ZMat gens(static_cast<long>(generators.size()), dim);
    for (size_t i = 0; i < generators.size(); ++i) {
        if (static_cast<int>(generators[i].size()) != dim)
            throw RankDeficient("lattice_hnf: generator dimension mismatch");
        for (int j = 0; j < dim; ++j) gens(static_cast<long>(i), j) = generators[i][j];
    }
    ZMat h = hnf_basis(gens);
    if (h.rows() != dim)
        throw RankDeficient("lattice_hnf: generators span rank " + std::to_string(h.rows()) +
                            " < " + std::to_string(dim));
    return h;
}

} // namespace cellq

#include <doctest.h>

#include <set>
#include <vector>

#include "cellq/linalg.hpp"
#include "cellq/rng.hpp"

using namespace cellq;

namespace {

template <class M>
bool mat_zero(const M& m) {
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) return false;
    return true;
}

template <class M>
bool mat_eq(const M& a, const M& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

QMat companion(const std::vector<Rat>& monic) {
    long n = static_cast<long>(monic.size()) - 1;
    QMat m = QMat::Zero(n, n);
    for (long i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
    for (long i = 0; i < n; ++i) m(i, n - 1) = -monic[i];
    return m;
}

// Krylov-on-a-random-vector oracle for the minimal polynomial: the monic
// annihilator of one generic vector, always a divisor of it.
qpoly::Poly krylov_oracle(const QMat& m, Rng& rng) {
    long n = m.rows();
    QVec v(n);
    for (long i = 0; i < n; ++i) v(i) = Rat(rng.range(1, 50));
    QMat kry(n, 0);
    QVec cur = v;
    for (long k = 0;; ++k) {
        auto x = solve(kry, cur);
        if (x) {
            qpoly::Poly p(static_cast<size_t>(k) + 1);
            for (long j = 0; j < k; ++j) p[j] = -(*x)(j);
            p[k] = 1;
            return p;
        }
        QMat ext(n, k + 1);
        if (k > 0) ext.leftCols(k) = kry;
        ext.col(k) = cur;
        kry = ext;
        cur = m * cur;
    }
}

// lattice membership oracle: enumerate integer combinations in a small box
std::set<std::vector<long>> lattice_points(const std::vector<std::vector<long>>& gens, long box) {
    std::set<std::vector<long>> pts;
    size_t g = gens.size(), dim = gens[0].size();
    std::vector<long> c(g, -box);
    while (true) {
        std::vector<long> p(dim, 0);
        for (size_t i = 0; i < g; ++i)
            for (size_t j = 0; j < dim; ++j) p[j] += c[i] * gens[i][j];
        bool inside = true;
        for (long x : p) inside &= (x >= -box && x <= box);
        if (inside) pts.insert(p);
        size_t i = 0;
        while (i < g && c[i] == box) c[i++] = -box;
        if (i == g) break;
        ++c[i];
    }
    return pts;
}

} // namespace

TEST_CASE("rank, kernel, solve, inverse") {
    QMat m(2, 3);
    m << 1, 2, 3, 2, 4, 6;
    CHECK(rank_of(m) == 1);
    QMat ker = kernel_of(m);
    CHECK(ker.cols() == 2);
    CHECK(mat_zero(QMat(m * ker)));

    QMat a(2, 2);
    a << 1, 2, 3, 5;
    QMat ainv = inverse_of(a);
    CHECK(mat_eq(QMat(a * ainv), QMat(QMat::Identity(2, 2))));
    CHECK(determinant(a) == Rat(-1));

    QVec b(2);
    b << 5, 11;
    auto x = solve(a, b);
    REQUIRE(x);
    CHECK(mat_eq(QMat(a * (*x)), QMat(b)));
}

TEST_CASE("min_poly examples") {
    QMat id = QMat::Identity(3, 3);
    CHECK(qpoly::to_string(min_poly(id)) == "-1 + x");

    QMat d = QMat::Zero(2, 2);
    d(0, 0) = 1;
    d(1, 1) = 2;
    // (x-1)(x-2) = 2 - 3x + x^2
    qpoly::Poly expect{Rat(2), Rat(-3), Rat(1)};
    CHECK(min_poly(d) == expect);

    // companion matrix of x^2 - x - 1
    std::vector<Rat> monic{Rat(-1), Rat(-1), Rat(1)};
    QMat c = companion(monic);
    Rng rng(kDefaultSeed ^ 0x40);
    CHECK(min_poly(c) == qpoly::Poly(monic));
    CHECK(krylov_oracle(c, rng) == qpoly::Poly(monic));

    // char_poly of a companion matrix is the polynomial itself
    CHECK(char_poly(c) == qpoly::Poly(monic));
}

TEST_CASE("min_poly matches krylov oracle on random matrices") {
    Rng rng(kDefaultSeed ^ 0x41);
    for (int trial = 0; trial < 20; ++trial) {
        long n = 2 + static_cast<long>(rng.below(4));
        QMat m(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) m(i, j) = Rat(rng.range(-3, 3));
        qpoly::Poly mp = min_poly(m);
        qpoly::Poly orc = krylov_oracle(m, rng);
        // oracle annihilator divides the true minimal polynomial
        CHECK(qpoly::divmod(mp, orc).second.empty());
        // min poly divides char poly
        CHECK(qpoly::divmod(char_poly(m), mp).second.empty());
        // and it annihilates the matrix
        QMat acc = QMat::Zero(n, n);
        QMat pw = QMat::Identity(n, n);
        for (size_t k = 0; k < mp.size(); ++k) {
            acc += pw * mp[k];
            pw = m * pw;
        }
        CHECK(mat_zero(acc));
    }
}

TEST_CASE("rational root scan") {
    // (x-1)(x-2)(2x+3)
    qpoly::Poly p = qpoly::mul(qpoly::mul({Rat(-1), Rat(1)}, {Rat(-2), Rat(1)}), {Rat(3), Rat(2)});
    auto scan = qpoly::rational_roots(p);
    CHECK(scan.splits_distinct_linear);
    REQUIRE(scan.roots.size() == 3);
    // x^2+1 has none
    auto none = qpoly::rational_roots({Rat(1), Rat(0), Rat(1)});
    CHECK(none.roots.empty());
    CHECK_FALSE(none.splits_distinct_linear);
    // (x-1)^2 splits but not distinctly
    auto rep = qpoly::rational_roots({Rat(1), Rat(-2), Rat(1)});
    CHECK_FALSE(rep.splits_distinct_linear);
}

TEST_CASE("lattice_hnf examples and oracle") {
    // {(2,0),(0,2),(1,1)} -> {(1,1),(0,2)}
    ZMat h = lattice_hnf({{Int(2), Int(0)}, {Int(0), Int(2)}, {Int(1), Int(1)}}, 2);
    REQUIRE(h.rows() == 2);
    CHECK(h(0, 0) == 1);
    CHECK(h(0, 1) == 1);
    CHECK(h(1, 0) == 0);
    CHECK(h(1, 1) == 2);

    ZMat id = lattice_hnf({{Int(1), Int(0)}, {Int(0), Int(1)}}, 2);
    CHECK(mat_eq(id, ZMat(ZMat::Identity(2, 2))));

    CHECK_THROWS_AS(lattice_hnf({{Int(2), Int(0)}}, 2), RankDeficient);

    // box-enumeration oracle: the generated lattices agree
    auto pts_in = lattice_points({{2, 0}, {0, 2}, {1, 1}}, 4);
    auto pts_out = lattice_points({{1, 1}, {0, 2}}, 4);
    CHECK(pts_in == pts_out);

    // idempotence: hnf(hnf(G)) == hnf(G)
    Rng rng(kDefaultSeed ^ 0x42);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = 2 + static_cast<int>(rng.below(3));
        std::vector<std::vector<Int>> gens;
        for (int i = 0; i < dim + 2; ++i) {
            std::vector<Int> v(dim);
            for (int j = 0; j < dim; ++j) v[j] = Int(rng.range(-6, 6));
            gens.push_back(v);
        }
        ZMat h1;
        try {
            h1 = lattice_hnf(gens, dim);
        } catch (const RankDeficient&) {
            continue;
        }
        std::vector<std::vector<Int>> rows;
        for (long i = 0; i < h1.rows(); ++i) {
            std::vector<Int> v(dim);
            for (int j = 0; j < dim; ++j) v[j] = h1(i, j);
            rows.push_back(v);
        }
        CHECK(mat_eq(lattice_hnf(rows, dim), h1));
    }
}

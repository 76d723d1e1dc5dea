#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace cellq {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline bool fits_long(const Int& x) { return x.fits_slong_p(); }

// Quotient of a by b when exact; returns false (q unspecified) otherwise.
inline bool checked_div(const Int& a, const Int& b, Int& q) {
    Int r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return sgn(r) == 0;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int abs_int(const Int& a) { return sgn(a) < 0 ? Int(-a) : a; }

inline Int num(const Rat& x) { return x.get_num(); }
inline Int den(const Rat& x) { return x.get_den(); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Trial-division factorization; fine for the small integers (f_lambda,
// determinants) this engine produces.
inline std::vector<Int> prime_factors(Int n) {
    std::vector<Int> ps;
    n = abs_int(n);
    if (n <= 1) return ps;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) {
    return is_integer(x) ? x.get_num().get_str() : x.get_str();
}

} // namespace cellq

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 120,
        MulCost = 100,
    };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpz_class NonInteger;
    typedef mpz_class Nested;
    typedef mpz_class Literal;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 60,
    };
};

} // namespace Eigen

namespace cellq {

using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using ZMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline QMat to_rational(const ZMat& m) {
    QMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

} // namespace cellq

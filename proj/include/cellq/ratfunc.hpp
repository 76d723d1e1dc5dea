#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cellq/laurent.hpp"

namespace cellq {

// Polynomials in Z[q] as bare coefficient vectors (ascending, trimmed).
namespace zpoly {

using Poly = std::vector<Int>;

void trim(Poly& p);
int degree(const Poly& p); // -1 for zero
Int content(const Poly& p);
Poly primitive_part(const Poly& p);
Poly mul(const Poly& a, const Poly& b);
Poly divexact(const Poly& a, const Poly& b, const char* what = "polynomial division");
// gcd over Q[q], returned as a primitive polynomial in Z[q] with positive lead
Poly gcd(Poly a, Poly b);

} // namespace zpoly

/// Element of K = Q(q) as a reduced fraction num/den with num in Z[q,q^-1]
/// and den in Z[q]: den has valuation 0, positive leading coefficient, and
/// gcd(num, den) = 1 over Q[q] with coprime integer contents.  The reduced
/// form is canonical, but operator== still cross-multiplies so it never
/// depends on that.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long n) : num_(n), den_(1) {} // NOLINT
    RatFunc(const ZLaurent& x) : num_(x), den_(1) {} // NOLINT
    RatFunc(const Rat& x) : num_(ZLaurent(Int(x.get_num()), 0)), den_(ZLaurent(Int(x.get_den()), 0)) {} // NOLINT
    RatFunc(ZLaurent num, ZLaurent den);

    const ZLaurent& num() const { return num_; }
    const ZLaurent& den() const { return den_; }

    friend bool is_zero(const RatFunc& x) { return is_zero(x.num_); }
    bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inverse() const;

    /// q -> q^{-1}
    RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }

    bool in_laurent_ring() const { return den_ == ZLaurent(1); }
    /// valid only when in_laurent_ring()
    const ZLaurent& as_laurent() const { return num_; }

    /// (exponent, coefficient) of the lowest term of the q-expansion
    std::pair<int, Rat> lowest_term() const;

private:
    ZLaurent num_;       // zero value: num_ = 0, den_ = 1
    ZLaurent den_ = ZLaurent(1);
};

std::string to_string(const RatFunc& x);

} // namespace cellq

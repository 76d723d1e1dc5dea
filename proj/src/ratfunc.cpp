#include "cellq/ratfunc.hpp"

namespace cellq {
namespace zpoly {

void trim(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Int content(const Poly& p) {
    Int c(0);
    for (const Int& x : p) c = cellq::gcd(c, x);
    return c;
}

Poly primitive_part(const Poly& p) {
    Int c = content(p);
    if (is_zero(c) || c == 1) return p;
    Poly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] / c;
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly divexact(const Poly& a, const Poly& b, const char* what) {
    if (b.empty()) throw NotDivisible(std::string(what) + ": zero divisor");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw NotDivisible(what);
    Poly rem = a;
    Poly quot(a.size() - b.size() + 1, Int(0));
    for (size_t k = quot.size(); k-- > 0;) {
        Int top = rem[k + b.size() - 1];
        if (is_zero(top)) continue;
        Int c;
        if (!checked_div(top, b.back(), c)) throw NotDivisible(what);
        quot[k] = c;
        for (size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
    }
    for (const Int& r : rem)
        if (!is_zero(r)) throw NotDivisible(what);
    trim(quot);
    return quot;
}

// pseudo-remainder of a by b (deg a >= deg b > -1)
static Poly prem(Poly a, const Poly& b) {
    int db = degree(b);
    Int lb = b.back();
    while (degree(a) >= db && !a.empty()) {
        int da = degree(a);
        Int la = a.back();
        // a := lb*a - la*q^(da-db)*b
        Poly next(a.size(), Int(0));
        for (size_t i = 0; i < a.size(); ++i) next[i] = lb * a[i];
        for (size_t j = 0; j < b.size(); ++j) next[da - db + j] -= la * b[j];
        a = std::move(next);
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    if (a.empty()) std::swap(a, b);
    if (b.empty()) {
        a = primitive_part(a);
        if (!a.empty() && sgn(a.back()) < 0)
            for (Int& c : a) c = -c;
        return a;
    }
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.empty()) {
        Poly r = prem(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    if (!a.empty() && sgn(a.back()) < 0)
        for (Int& c : a) c = -c;
    return a;
}

} // namespace zpoly

static ZLaurent poly_to_laurent(const zpoly::Poly& p, int offset) {
    return ZLaurent::from_parts(offset, std::vector<Int>(p.begin(), p.end()));
}

RatFunc::RatFunc(ZLaurent num, ZLaurent den) {
    if (is_zero(den)) throw NotDivisible("RatFunc: zero denominator");
    if (is_zero(num)) return;
    // absorb the denominator's q-power into the numerator
    num = num.shifted(-den.valuation());
    zpoly::Poly n(num.coeffs().begin(), num.coeffs().end());
    zpoly::Poly d(den.coeffs().begin(), den.coeffs().end());
    zpoly::Poly g = zpoly::gcd(n, d);
    if (zpoly::degree(g) > 0) {
        // g is primitive, so by Gauss's lemma both divisions are exact over Z
        n = zpoly::divexact(n, g);
        d = zpoly::divexact(d, g);
    }
    Int cn = zpoly::content(n), cd = zpoly::content(d);
    Int c = cellq::gcd(cn, cd);
    if (sgn(d.back()) < 0) c = -c;
    if (c != 1) {
        for (Int& x : n) x /= c;
        for (Int& x : d) x /= c;
    }
    num_ = poly_to_laurent(n, num.valuation());
    den_ = poly_to_laurent(d, 0);
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (is_zero(b)) throw NotDivisible("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero(num_)) throw NotDivisible("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

std::pair<int, Rat> RatFunc::lowest_term() const {
    if (is_zero(num_)) return {0, Rat(0)};
    // den_ has valuation 0, so the expansion's lowest exponent is val(num).
    Rat c(num_.lowest_coeff(), den_.lowest_coeff());
    c.canonicalize();
    return {num_.valuation(), c};
}

std::string to_string(const RatFunc& x) {
    if (x.in_laurent_ring()) return to_string(x.num());
    return "(" + to_string(x.num()) + ")/(" + to_string(x.den()) + ")";
}

} // namespace cellq

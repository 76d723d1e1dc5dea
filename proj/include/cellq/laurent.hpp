#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cellq/errors.hpp"
#include "cellq/int.hpp"

namespace cellq {

/// Laurent polynomial over a commutative coefficient ring C.
///
/// Storage: coeffs()[i] is the coefficient of q^(offset()+i).  Zero is the
/// empty sequence (unique representation); otherwise the first and last
/// stored coefficients are nonzero.
template <class C>
class Laurent {
public:
    Laurent() = default;
    Laurent(long n) : Laurent(C(n), 0) {} // NOLINT: implicit constant lift
    Laurent(const C& c, int exp) {
        if (!is_zero(c)) {
            off_ = exp;
            c_.push_back(c);
        }
    }

    static Laurent q_power(int exp) { return Laurent(C(1), exp); }

    bool is_zero_value() const { return c_.empty(); }
    int offset() const { return off_; }
    const std::vector<C>& coeffs() const { return c_; }

    /// lowest exponent with nonzero coefficient; only valid on nonzero values
    int valuation() const { return off_; }
    /// highest exponent with nonzero coefficient; only valid on nonzero values
    int degree() const { return off_ + static_cast<int>(c_.size()) - 1; }

    C coeff(int exp) const {
        if (exp < off_ || exp >= off_ + static_cast<int>(c_.size())) return C(0);
        return c_[exp - off_];
    }

    C constant_term() const { return coeff(0); }

    C lowest_coeff() const { return c_.empty() ? C(0) : c_.front(); }
    C highest_coeff() const { return c_.empty() ? C(0) : c_.back(); }

    friend bool is_zero(const Laurent& x) { return x.c_.empty(); }

    bool operator==(const Laurent& o) const { return off_ == o.off_ && c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent operator-() const {
        Laurent r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Laurent& operator+=(const Laurent& o) {
        if (o.c_.empty()) return *this;
        if (c_.empty()) { *this = o; return *this; }
        int lo = std::min(off_, o.off_);
        int hi = std::max(degree(), o.degree());
        std::vector<C> out(static_cast<size_t>(hi - lo + 1), C(0));
        for (size_t i = 0; i < c_.size(); ++i) out[off_ - lo + i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) out[o.off_ - lo + i] += o.c_[i];
        off_ = lo;
        c_ = std::move(out);
        trim();
        return *this;
    }

    Laurent& operator-=(const Laurent& o) { return *this += -o; }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.c_.empty() || b.c_.empty()) return Laurent();
        Laurent r;
        r.off_ = a.off_ + b.off_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, C(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }

    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent scaled(const C& c) const {
        if (is_zero(c) || c_.empty()) return Laurent();
        Laurent r(*this);
        for (auto& x : r.c_) x = x * c;
        r.trim();
        return r;
    }

    /// multiply by q^k
    Laurent shifted(int k) const {
        Laurent r(*this);
        if (!r.c_.empty()) r.off_ += k;
        return r;
    }

    /// the bar involution q -> q^{-1}
    Laurent bar() const {
        Laurent r;
        if (c_.empty()) return r;
        r.c_.assign(c_.rbegin(), c_.rend());
        r.off_ = -degree();
        return r;
    }

    bool all_coeffs_nonnegative() const {
        for (const auto& c : c_)
            if (sgn_of(c) < 0) return false;
        return true;
    }

    /// in Z[q], i.e. no negative exponents
    bool is_polynomial() const { return c_.empty() || off_ >= 0; }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (size_t i = 0; i < c_.size(); ++i) fn(off_ + static_cast<int>(i), c_[i]);
    }

    // Construction escape hatch for deserialization; normalizes.
    static Laurent from_parts(int offset, std::vector<C> coeffs) {
        Laurent r;
        r.off_ = offset;
        r.c_ = std::move(coeffs);
        r.trim();
        return r;
    }

private:
    static int sgn_of(const C& c) {
        if constexpr (std::is_same_v<C, Int> || std::is_same_v<C, Rat>) return sgn(c);
        else return is_zero(c) ? 0 : 1;
    }

    void trim() {
        size_t b = 0, e = c_.size();
        while (b < e && is_zero(c_[b])) ++b;
        while (e > b && is_zero(c_[e - 1])) --e;
        if (b == e) {
            c_.clear();
            off_ = 0;
            return;
        }
        if (b > 0 || e < c_.size()) {
            std::vector<C> out(c_.begin() + b, c_.begin() + e);
            off_ += static_cast<int>(b);
            c_ = std::move(out);
        }
    }

    int off_ = 0;
    std::vector<C> c_;
};

using ZLaurent = Laurent<Int>;   // the scalar ring Z[q,q^-1] of the engine
using QLaurent = Laurent<Rat>;   // Laurent polynomials with rational coefficients
using ZLaurent2 = Laurent<ZLaurent>; // bivariate, outer variable independent of q

inline ZLaurent q_pow(int k) { return ZLaurent::q_power(k); }

/// Exact division in Z[q,q^-1].  Throws NotDivisible when b does not divide a;
/// a failed division here signals a broken structure-constant computation
/// upstream, so callers treat it as fatal.
inline ZLaurent exact_div(const ZLaurent& a, const ZLaurent& b, const char* what = "laurent division") {
    if (is_zero(b)) throw NotDivisible(std::string(what) + ": division by zero");
    if (is_zero(a)) return ZLaurent();
    // Work with the coefficient sequences as ordinary polynomials; the
    // q-power offset is additive.
    std::vector<Int> rem(a.coeffs());
    const std::vector<Int>& d = b.coeffs();
    if (rem.size() < d.size()) throw NotDivisible(what);
    std::vector<Int> quot(rem.size() - d.size() + 1, Int(0));
    for (size_t k = quot.size(); k-- > 0;) {
        Int top = rem[k + d.size() - 1];
        if (is_zero(top)) continue;
        Int c;
        if (!checked_div(top, d.back(), c)) throw NotDivisible(what);
        quot[k] = c;
        for (size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
    }
    for (const Int& r : rem)
        if (!is_zero(r)) throw NotDivisible(what);
    return ZLaurent::from_parts(a.offset() - b.offset(), std::move(quot));
}

inline bool divides(const ZLaurent& b, const ZLaurent& a) {
    try {
        exact_div(a, b);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

template <class C>
std::string term_string(const C& c, int e) {
    std::string cs = to_string(c);
    if (e == 0) return cs;
    std::string qs = e == 1 ? "q" : "q^" + std::to_string(e);
    if (cs == "1") return qs;
    if (cs == "-1") return "-" + qs;
    return cs + "*" + qs;
}

template <class C>
std::string to_string(const Laurent<C>& x) {
    if (is_zero(x)) return "0";
    std::string out;
    x.for_each([&](int e, const C& c) {
        std::string t = term_string(c, e);
        if (out.empty()) {
            out = t;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    });
    return out;
}

/// substitute q -> q^{-1}? no: lift an integer-coefficient Laurent into the
/// second indeterminate of a bivariate value (used by associativity-style
/// identities that need two independent variables).
inline ZLaurent2 to_outer_variable(const ZLaurent& x) {
    ZLaurent2 r;
    x.for_each([&](int e, const Int& c) { r += ZLaurent2(ZLaurent(c, 0), e); });
    return r;
}

inline ZLaurent2 to_inner_variable(const ZLaurent& x) { return ZLaurent2(x, 0); }

} // namespace cellq

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridwords/errors.hpp"

namespace gridwords {

// Arbitrary-precision signed integer. Every arithmetic path in the library is
// exact; nothing ever wraps or saturates.
using bigint = boost::multiprecision::cpp_int;

namespace detail {

inline int sign_of(const bigint& x) { return x.sign(); }

// Sign of a + b*sqrt(d) for square-free d >= 0, by pure integer case analysis
// (compare a^2 against b^2*d when the terms disagree in sign). No floating point.
inline int sign_linear(const bigint& a, const bigint& b, const bigint& d) {
    if (b == 0 || d == 0) return a.sign();
    if (a == 0) return b.sign();
    if (a > 0 && b > 0) return 1;
    if (a < 0 && b < 0) return -1;
    const bigint lhs = a * a;
    const bigint rhs = b * b * d;
    if (lhs == rhs) return 0;  // impossible for square-free d > 1, but harmless
    return lhs > rhs ? a.sign() : b.sign();
}

// floor(a / b) for b > 0 (cpp_int division truncates toward zero).
inline bigint floor_div(const bigint& a, const bigint& b) {
    bigint q = a / b;
    if (a % b != 0 && a.sign() < 0) --q;
    return q;
}

// Pull the largest square factor out of d: returns the square-free part and
// multiplies `outer` by the extracted root. Trial division; radicands here are
// small constants (2, 3, 5, ...), the cap is pure paranoia.
inline bigint squarefree_part(bigint d, bigint& outer) {
    for (bigint f = 2; f * f <= d && f <= 1000000; ++f) {
        const bigint sq = f * f;
        while (d % sq == 0) {
            d /= sq;
            outer *= f;
        }
    }
    return d;
}

}  // namespace detail

// Exact quadratic surd (p + q*sqrt(d)) / r, kept in the canonical form
//   r > 0, gcd(p, q, r) = 1, d square-free, and q = 0 <=> d = 0.
// Two surds are in the same field when either is rational or their radicands
// match; mixed-field arithmetic throws incompatible_fields.
class surd {
public:
    surd() = default;

    surd(int v) : p_(v) {}                // NOLINT(google-explicit-constructor)
    surd(long long v) : p_(v) {}          // NOLINT(google-explicit-constructor)
    surd(bigint v) : p_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

    surd(bigint p, bigint q, bigint r, bigint d)
        : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
        normalize();
    }

    static surd rational(bigint num, bigint den) {
        return surd(std::move(num), 0, std::move(den), 0);
    }

    // (1 + sqrt(5)) / 2
    static surd phi() { return surd(1, 1, 2, 5); }

    const bigint& p() const { return p_; }
    const bigint& q() const { return q_; }
    const bigint& r() const { return r_; }
    const bigint& d() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_integer() const { return q_ == 0 && r_ == 1; }

    int sign() const { return detail::sign_linear(p_, q_, d_); }

    bool same_field(const surd& o) const {
        return q_ == 0 || o.q_ == 0 || d_ == o.d_;
    }

    surd operator-() const {
        surd s(*this);
        s.p_ = -s.p_;
        s.q_ = -s.q_;
        return s;
    }

    surd operator+(const surd& o) const {
        const bigint dd = joint_field(o);
        return surd(p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, r_ * o.r_, dd);
    }

    surd operator-(const surd& o) const { return *this + (-o); }

    surd operator*(const surd& o) const {
        const bigint dd = joint_field(o);
        return surd(p_ * o.p_ + q_ * o.q_ * dd, p_ * o.q_ + q_ * o.p_, r_ * o.r_, dd);
    }

    surd recip() const {
        if (is_zero()) throw division_by_zero("reciprocal of zero");
        // r / (p + q*sqrt(d)) = r*(p - q*sqrt(d)) / (p^2 - q^2*d)
        return surd(r_ * p_, -(r_ * q_), p_ * p_ - q_ * q_ * d_, d_);
    }

    surd operator/(const surd& o) const { return *this * o.recip(); }

    bool operator==(const surd& o) const {
        return p_ == o.p_ && q_ == o.q_ && r_ == o.r_ && d_ == o.d_;
    }

    // floor(value), exact. Brackets q*sqrt(d) by an integer square root, then
    // corrects the candidate with exact sign tests (at most one step each way).
    bigint floor() const {
        bigint lo;  // floor(q * sqrt(d))
        if (q_ == 0) {
            lo = 0;
        } else {
            const bigint t = q_ * q_ * d_;
            const bigint s = boost::multiprecision::sqrt(t);
            if (q_ > 0)
                lo = s;
            else
                lo = (s * s == t) ? bigint(-s) : bigint(-s - 1);
        }
        bigint n = detail::floor_div(p_ + lo, r_);
        while (cmp_int(n + 1) >= 0) ++n;  // value >= n+1: candidate was low
        while (cmp_int(n) < 0) --n;       // value < n: candidate was high
        return n;
    }

    double to_double() const {
        const double num = p_.convert_to<double>() +
                           q_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
        return num / r_.convert_to<double>();
    }

private:
    // sign of (value - k)
    int cmp_int(const bigint& k) const {
        return detail::sign_linear(p_ - k * r_, q_, d_);
    }

    bigint joint_field(const surd& o) const {
        if (!same_field(o))
            throw incompatible_fields("surds from distinct quadratic fields (sqrt(" +
                                      d_.str() + ") vs sqrt(" + o.d_.str() + "))");
        return q_ != 0 ? d_ : o.d_;
    }

    void normalize() {
        if (r_ == 0) throw division_by_zero("surd with zero denominator");
        if (d_.sign() < 0) throw error("surd radicand must be non-negative");
        if (r_ < 0) {
            p_ = -p_;
            q_ = -q_;
            r_ = -r_;
        }
        if (q_ == 0 || d_ == 0) {
            q_ = 0;
            d_ = 0;
        } else {
            bigint outer = 1;
            d_ = detail::squarefree_part(d_, outer);
            q_ *= outer;
            if (d_ == 1) {  // sqrt(1) folds into the rational part
                p_ += q_;
                q_ = 0;
                d_ = 0;
            }
        }
        bigint g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(p_), abs(q_)), r_);
        if (g > 1) {
            p_ /= g;
            q_ /= g;
            r_ /= g;
        }
    }

    bigint p_{0};
    bigint q_{0};
    bigint r_{1};
    bigint d_{0};
};

// Three-way comparison, exact: sign of a - b.
inline int cmp(const surd& a, const surd& b) { return (a - b).sign(); }

inline bool operator<(const surd& a, const surd& b) { return cmp(a, b) < 0; }
inline bool operator>(const surd& a, const surd& b) { return cmp(a, b) > 0; }
inline bool operator<=(const surd& a, const surd& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const surd& a, const surd& b) { return cmp(a, b) >= 0; }

// Continued-fraction prefix [q0; q1, q2, ...]. `exact` is true when the list is
// the complete expansion (the argument was rational and the algorithm
// terminated), false when it was cut off at the requested depth and is a
// proper prefix of a longer expansion.
struct cf_expansion {
    std::vector<bigint> quotients;
    bool exact = false;
};

// Iterated floor/reciprocal. Requires a > 0; the first quotient may be 0
// (argument below 1), all later ones are >= 1.
inline cf_expansion cf_expand(const surd& a, std::size_t max_terms) {
    if (a.sign() <= 0) throw non_positive("cf_expand requires a positive argument");
    cf_expansion out;
    surd x = a;
    while (out.quotients.size() < max_terms) {
        const bigint f = x.floor();
        out.quotients.push_back(f);
        const surd rem = x - surd(f);
        if (rem.is_zero()) {
            out.exact = true;
            break;
        }
        x = rem.recip();
    }
    return out;
}

// Exact rational value of a finite quotient list.
inline surd convergent(const cf_expansion& cf) {
    if (cf.quotients.empty()) throw empty_expansion("empty continued fraction");
    bigint num = cf.quotients.back();
    bigint den = 1;
    for (std::size_t i = cf.quotients.size() - 1; i-- > 0;) {
        // x -> a_i + 1/x
        bigint next_num = cf.quotients[i] * num + den;
        den = std::move(num);
        num = std::move(next_num);
    }
    return surd::rational(num, den);
}

// --- text form ---------------------------------------------------------------
//
// Canonical rendering:  "(p+q*sqrt(d))/r"  with "/r" dropped when r = 1, "q*"
// dropped when |q| = 1, and plain "p" / "p/r" for rationals. "phi" is accepted
// on input as (1+sqrt(5))/2.

inline std::string to_string(const surd& s) {
    if (s.is_rational()) {
        std::string out = s.p().str();
        if (s.r() != 1) out += "/" + s.r().str();
        return out;
    }
    std::string out = "(";
    if (s.p() != 0) out += s.p().str();
    const bigint aq = abs(s.q());
    if (s.p() != 0 || s.q() < 0) out += s.q() > 0 ? "+" : "-";
    if (aq != 1) out += aq.str() + "*";
    out += "sqrt(" + s.d().str() + "))";
    if (s.r() != 1) out += "/" + s.r().str();
    return out;
}

namespace detail {

struct surd_parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error("bad surd literal '" + std::string(text) + "': " + why);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    bigint integer() {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) neg = text[pos++] == '-';
        if (!peek_digit()) fail("expected an integer");
        bigint v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return neg ? -v : v;
    }

    bool eat_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }

    // [q *] sqrt ( d ), sign already consumed
    std::pair<bigint, bigint> radical_tail() {
        bigint coeff = 1;
        if (peek_digit()) {
            coeff = integer();
            if (!eat('*')) fail("expected '*' before sqrt");
        }
        if (!eat_word("sqrt")) fail("expected sqrt");
        if (!eat('(')) fail("expected '(' after sqrt");
        bigint d = integer();
        if (d.sign() < 0) fail("negative radicand");
        if (!eat(')')) fail("unclosed sqrt(");
        return {coeff, d};
    }

    // p [+|- radical] | [+|-] radical
    surd numerator() {
        skip_ws();
        if (eat_word("sqrt")) {  // bare sqrt(d)
            pos -= 4;
            auto [q, d] = radical_tail();
            return surd(0, q, 1, d);
        }
        std::size_t mark = pos;
        bigint first = integer();
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {  // q*sqrt(d) with no p
            pos = mark;
            auto [q, d] = radical_tail();
            return surd(0, q, 1, d);
        }
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            const bool neg = text[pos] == '-';
            ++pos;
            auto [q, d] = radical_tail();
            return surd(first, neg ? -q : q, 1, d);
        }
        return surd(first);
    }

    surd parse() {
        skip_ws();
        surd num;
        if (eat_word("phi")) {
            num = surd::phi();
        } else if (eat('(')) {
            num = numerator();
            if (!eat(')')) fail("unclosed '('");
        } else {
            num = numerator();
        }
        bigint den = 1;
        if (eat('/')) den = integer();
        skip_ws();
        if (pos != text.size()) fail("trailing characters");
        if (den == 0) throw division_by_zero("surd literal with zero denominator");
        return surd(num.p(), num.q(), num.r() * den, num.d());
    }
};

}  // namespace detail

inline surd parse_surd(std::string_view text) {
    detail::surd_parser p{text};
    return p.parse();
}

}  // namespace gridwords

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptchain/rational.hpp"

namespace ptchain {

// Exponents of the three formal variables q, a (alpha), b (beta).
// All three may be negative.
struct ExponentTriple {
    int q = 0;
    int a = 0;
    int b = 0;

    friend bool operator==(const ExponentTriple&, const ExponentTriple&) = default;

    ExponentTriple operator+(const ExponentTriple& o) const {
        return {q + o.q, a + o.a, b + o.b};
    }
};

// Term order used for storage and printing: q-degree descending, then the
// alpha and beta exponents ascending (so a^-1 prints before b^-1).
struct TermOrder {
    bool operator()(const ExponentTriple& x, const ExponentTriple& y) const {
        if (x.q != y.q) return x.q > y.q;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

struct LaurentMonomial {
    Rational coeff = 1;  // never zero
    ExponentTriple exps;

    LaurentMonomial() = default;
    LaurentMonomial(Rational c, ExponentTriple e);

    LaurentMonomial operator*(const LaurentMonomial& o) const;
    friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;

    std::string to_string() const;
};

inline LaurentMonomial mono_one() { return {}; }
inline LaurentMonomial mono_q() { return {1, {1, 0, 0}}; }
inline LaurentMonomial mono_alpha() { return {1, {0, 1, 0}}; }
inline LaurentMonomial mono_beta() { return {1, {0, 0, 1}}; }

// Laurent polynomial in q, a, b with exact rational coefficients. Canonical:
// no stored coefficient is zero, so equality is equality of term maps and the
// zero polynomial is the empty map.
class LaurentPoly {
  public:
    using TermMap = std::map<ExponentTriple, Rational, TermOrder>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& constant);  // NOLINT: implicit by design
    LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}
    LaurentPoly(const LaurentMonomial& m);  // NOLINT

    static LaurentPoly zero() { return {}; }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const ExponentTriple& e, const Rational& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // Exact value at (q, a, b); throws if a zero base meets a negative exponent.
    Rational eval(const Rational& q, const Rational& a, const Rational& b) const;

    // Exchanges the roles of a and b in every term.
    LaurentPoly swap_alpha_beta() const;

    // Text form: terms joined by " + ", each "c * q^i * a^j * b^k" with c as
    // num or num/den. The zero polynomial prints as "0".
    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

  private:
    TermMap terms_;
};

LaurentPoly operator*(const Rational& c, const LaurentPoly& p);

}  // namespace ptchain

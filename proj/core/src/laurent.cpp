#include "ptchain/laurent.hpp"

#include <cstdlib>
#include <sstream>

namespace ptchain {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    std::size_t slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("rational: bad integer in '" + text + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("rational: bad integer in '" + text + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("rational: bad integer in '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(mpz_class(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent == 0) return 1;
    if (base == 0) {
        if (exponent < 0) throw std::domain_error("rational_pow: zero base with negative exponent");
        return 0;
    }
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rational r(num, den);
    r.canonicalize();
    if (exponent < 0) r = 1 / r;
    return r;
}

LaurentMonomial::LaurentMonomial(Rational c, ExponentTriple e) : coeff(std::move(c)), exps(e) {
    if (coeff == 0) throw std::invalid_argument("LaurentMonomial: zero coefficient");
}

LaurentMonomial LaurentMonomial::operator*(const LaurentMonomial& o) const {
    return {coeff * o.coeff, exps + o.exps};
}

std::string LaurentMonomial::to_string() const {
    return LaurentPoly(*this).to_string();
}

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (constant != 0) terms_.emplace(ExponentTriple{}, constant);
}

LaurentPoly::LaurentPoly(const LaurentMonomial& m) {
    terms_.emplace(m.exps, m.coeff);
}

void LaurentPoly::add_term(const ExponentTriple& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms()) r.add_term(e, c * pc);
    return r;
}

Rational LaurentPoly::eval(const Rational& q, const Rational& a, const Rational& b) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        t *= rational_pow(q, e.q);
        t *= rational_pow(a, e.a);
        t *= rational_pow(b, e.b);
        acc += t;
    }
    return acc;
}

LaurentPoly LaurentPoly::swap_alpha_beta() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term({e.q, e.b, e.a}, c);
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << rational_to_string(c) << " * q^" << e.q << " * a^" << e.a << " * b^" << e.b;
    }
    return out.str();
}

namespace {

// One term of the text grammar: COEFF * q^INT * a^INT * b^INT.
std::pair<ExponentTriple, Rational> parse_term(const std::string& term) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t star = term.find(" * ", pos);
        if (star == std::string::npos) {
            parts.push_back(term.substr(pos));
            break;
        }
        parts.push_back(term.substr(pos, star - pos));
        pos = star + 3;
    }
    if (parts.size() != 4)
        throw std::invalid_argument("laurent: malformed term '" + term + "'");
    auto expect_power = [&](const std::string& p, const std::string& var) -> int {
        std::string prefix = var + "^";
        if (p.rfind(prefix, 0) != 0)
            throw std::invalid_argument("laurent: expected " + prefix + "... in '" + term + "'");
        const std::string digits = p.substr(prefix.size());
        if (digits.empty()) throw std::invalid_argument("laurent: bad exponent in '" + term + "'");
        std::size_t used = 0;
        int v = std::stoi(digits, &used);
        if (used != digits.size())
            throw std::invalid_argument("laurent: bad exponent in '" + term + "'");
        return v;
    };
    Rational coeff = parse_rational(parts[0]);
    ExponentTriple e{expect_power(parts[1], "q"), expect_power(parts[2], "a"),
                     expect_power(parts[3], "b")};
    return {e, coeff};
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly r;
    if (text == "0") return r;
    std::size_t pos = 0;
    while (true) {
        std::size_t plus = text.find(" + ", pos);
        std::string term =
            plus == std::string::npos ? text.substr(pos) : text.substr(pos, plus - pos);
        auto [e, c] = parse_term(term);
        r.add_term(e, c);
        if (plus == std::string::npos) break;
        pos = plus + 3;
    }
    return r;
}

}  // namespace ptchain

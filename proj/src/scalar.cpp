#include "qplane/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace qplane {

Rational rational_pow(Rational base, int k) {
    if (k < 0) {
        if (base == 0) {
            throw std::domain_error("rational_pow: zero base with negative exponent");
        }
        base = Rational(denominator(base), numerator(base));
        k = -k;
    }
    Rational result(1);
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

QScalar::QScalar(int n) {
    if (n != 0) terms_[0] = Rational(n);
}

QScalar::QScalar(const Rational& r) {
    if (r != 0) terms_[0] = r;
}

QScalar QScalar::q_power(int exponent) {
    QScalar s;
    s.terms_[exponent] = Rational(1);
    return s;
}

QScalar QScalar::term(const Rational& coeff, int exponent) {
    QScalar s;
    if (coeff != 0) s.terms_[exponent] = coeff;
    return s;
}

bool QScalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

void QScalar::add_term(int exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

QScalar& QScalar::operator+=(const QScalar& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
    QScalar out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            out.add_term(ka + kb, ca * cb);
        }
    }
    return out;
}

QScalar& QScalar::operator*=(const QScalar& other) {
    *this = *this * other;
    return *this;
}

QScalar QScalar::operator-() const {
    QScalar out;
    for (const auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}

Rational QScalar::eval_at(const Rational& q0) const {
    if (q0 == 0) {
        throw std::domain_error("QScalar::eval_at: q must be nonzero");
    }
    Rational acc(0);
    for (const auto& [k, c] : terms_) acc += c * rational_pow(q0, k);
    return acc;
}

namespace {

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

// One Laurent term, e.g. "1", "-q", "q^-2", "2/3*q".
std::string term_str(int exponent, const Rational& coeff) {
    if (exponent == 0) return rational_str(coeff);
    std::string q = exponent == 1 ? "q" : "q^" + std::to_string(exponent);
    if (coeff == 1) return q;
    if (coeff == -1) return "-" + q;
    return rational_str(coeff) + "*" + q;
}

} // namespace

std::string to_string(const QScalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : s.terms()) {
        std::string piece = term_str(k, c);
        if (first) {
            out = piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const QScalar& s) {
    return os << to_string(s);
}

} // namespace qplane

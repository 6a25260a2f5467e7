#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace qplane {

using Rational = boost::multiprecision::cpp_rational;

// base^k for integer k; k < 0 inverts, so base must be nonzero then.
Rational rational_pow(Rational base, int k);

/**
 * QScalar: an exact Laurent polynomial in the deformation parameter q with
 * rational coefficients. This is the coefficient domain of every expression
 * in the engine; no floating point is involved anywhere.
 *
 * Representation: exponent -> coefficient, with zero coefficients never
 * stored. The map is therefore canonical and structural equality of the
 * map decides equality of scalars. Zero is the empty map.
 */
class QScalar {
public:
    QScalar() = default; // zero
    QScalar(int n);
    explicit QScalar(const Rational& r);

    static QScalar q_power(int exponent);                       // q^k
    static QScalar term(const Rational& coeff, int exponent);   // c * q^k

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool single_term() const { return terms_.size() == 1; }
    const std::map<int, Rational>& terms() const { return terms_; }

    QScalar& operator+=(const QScalar& other);
    QScalar& operator-=(const QScalar& other);
    QScalar& operator*=(const QScalar& other);

    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    QScalar operator-() const;

    friend bool operator==(const QScalar& a, const QScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    // Substitutes a nonzero rational for q. This is a ring homomorphism;
    // q0 = 0 is rejected because negative exponents occur.
    Rational eval_at(const Rational& q0) const;

private:
    std::map<int, Rational> terms_;

    void add_term(int exponent, const Rational& coeff);
};

// Canonical textual form, e.g. "0", "1", "q^-1 - 1", "-2/3*q^2".
// Terms are listed in ascending exponent order; parses back exactly.
std::string to_string(const QScalar& s);
std::ostream& operator<<(std::ostream& os, const QScalar& s);

} // namespace qplane

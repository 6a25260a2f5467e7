#include "qplane/scalar.hpp"
#include "qplane/verify.hpp"

#include <doctest.h>

#include <sstream>
#include <stdexcept>

using namespace qplane;

TEST_CASE("default scalar is zero and one is one") {
    QScalar zero;
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.is_one());
    QScalar one(1);
    CHECK(one.is_one());
    CHECK_FALSE(one.is_zero());
    CHECK(zero != one);
}

TEST_CASE("q powers multiply by adding exponents") {
    QScalar a = QScalar::q_power(2);
    QScalar b = QScalar::q_power(-3);
    CHECK(a * b == QScalar::q_power(-1));
    CHECK(QScalar::q_power(0).is_one());
}

TEST_CASE("addition cancels exactly") {
    QScalar s = QScalar::q_power(1) - QScalar::q_power(1);
    CHECK(s.is_zero());
    QScalar t = QScalar::term(Rational(1, 2), 0) + QScalar::term(Rational(1, 2), 0);
    CHECK(t.is_one());
}

TEST_CASE("laurent arithmetic keeps exact rational coefficients") {
    QScalar s = QScalar::term(Rational(2, 3), 2) * QScalar::term(Rational(3, 4), -5);
    REQUIRE(s.single_term());
    auto it = s.terms().begin();
    CHECK(it->first == -3);
    CHECK(it->second == Rational(1, 2));
}

TEST_CASE("distributive product over several terms") {
    QScalar a = QScalar(1) + QScalar::q_power(1);
    QScalar b = QScalar(1) - QScalar::q_power(1);
    CHECK(a * b == QScalar(1) - QScalar::q_power(2));
}

TEST_CASE("negation flips every coefficient") {
    QScalar s = QScalar(3) - QScalar::q_power(2);
    CHECK(-s == QScalar(-3) + QScalar::q_power(2));
    CHECK((s + -s).is_zero());
}

TEST_CASE("rendering follows the documented conventions") {
    CHECK(to_string(QScalar()) == "0");
    CHECK(to_string(QScalar(1)) == "1");
    CHECK(to_string(QScalar(-1)) == "-1");
    CHECK(to_string(QScalar::q_power(-1)) == "q^-1");
    CHECK(to_string(QScalar::q_power(1)) == "q");
    CHECK(to_string(QScalar::q_power(-1) - QScalar(1)) == "q^-1 - 1");
    CHECK(to_string(QScalar::term(Rational(-2, 3), 2)) == "-2/3*q^2");
    std::ostringstream os;
    os << (QScalar(1) + QScalar::q_power(2));
    CHECK(os.str() == "1 + q^2");
}

TEST_CASE("evaluation specializes q exactly") {
    QScalar s = QScalar::q_power(-1) - QScalar(1);
    CHECK(s.eval_at(Rational(1)) == Rational(0));
    CHECK(s.eval_at(Rational(2)) == Rational(-1, 2));
    CHECK_THROWS_AS(s.eval_at(Rational(0)), std::domain_error);
}

TEST_CASE("rational_pow handles negative exponents") {
    CHECK(rational_pow(Rational(2), 3) == Rational(8));
    CHECK(rational_pow(Rational(2), -2) == Rational(1, 4));
    CHECK(rational_pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(5);
    auto random_scalar = [&rng]() {
        QScalar s;
        int n = rng.range(1, 4);
        for (int i = 0; i < n; ++i) {
            s += QScalar::term(Rational(rng.range(-5, 5), rng.range(1, 4)),
                               rng.range(-3, 3));
        }
        return s;
    };
    const Rational points[] = {Rational(1), Rational(2), Rational(1, 3)};
    for (int trial = 0; trial < 50; ++trial) {
        QScalar a = random_scalar();
        QScalar b = random_scalar();
        for (const Rational& r : points) {
            CHECK((a * b).eval_at(r) == a.eval_at(r) * b.eval_at(r));
            CHECK((a + b).eval_at(r) == a.eval_at(r) + b.eval_at(r));
        }
    }
}

#include "qplane/hopf.hpp"
#include "qplane/parser.hpp"

#include <doctest.h>

#include <string>
#include <variant>

using namespace qplane;

namespace {

Element gen(const Presentation& p, Gen g) { return Element::generator(p, g); }

Element elem(const std::string& text, const Presentation& p) {
    return parse_element(text, p);
}

} // namespace

TEST_CASE("simple products parse and normalize") {
    const Presentation& A = presentation_A();
    CHECK(elem("x*y", A) == Element::from_word(A, {Gen::x, Gen::y}));
    CHECK(elem("y*x", A) ==
          QScalar::q_power(-1) * Element::from_word(A, {Gen::x, Gen::y}));
    CHECK(elem("x*xi", A) == Element::unit(A));
    CHECK(render(elem("x*xi", A)) == "1");
}

TEST_CASE("rational and q coefficients") {
    const Presentation& A = presentation_A();
    Element e = elem("3/2*q^-2*x", A);
    CHECK(e == QScalar::term(Rational(3, 2), -2) * gen(A, Gen::x));
    CHECK(elem("q^0*x", A) == gen(A, Gen::x));
    CHECK(elem("-2*y", A) == QScalar(-2) * gen(A, Gen::y));
    CHECK(elem("q", A) == QScalar::q_power(1) * Element::unit(A));
}

TEST_CASE("integer literals tolerate leading zeros and arbitrary size") {
    const Presentation& A = presentation_A();
    CHECK(elem("02*x", A) == QScalar(2) * gen(A, Gen::x));
    CHECK(elem("09999999999*x", A) ==
          QScalar(Rational("9999999999")) * gen(A, Gen::x));
}

TEST_CASE("sums, differences, and a leading minus") {
    const Presentation& A = presentation_A();
    Element e = elem("-x + 2*y - 1", A);
    Element expected =
        QScalar(-1) * gen(A, Gen::x) + QScalar(2) * gen(A, Gen::y) - Element::unit(A);
    CHECK(e == expected);
}

TEST_CASE("negative powers alias the inverse generators") {
    const Presentation& A = presentation_A();
    CHECK(elem("x^-1", A) == gen(A, Gen::xi));
    CHECK(elem("x^-2", A) == Element::from_word(A, {Gen::xi, Gen::xi}));
    CHECK(elem("xi^-1", A) == gen(A, Gen::x));
    const Presentation& B = presentation_borel();
    CHECK(elem("K^-1", B) == gen(B, Gen::Ki));
    CHECK(elem("Ki^2", B) == Element::from_word(B, {Gen::Ki, Gen::Ki}));
}

TEST_CASE("the parsed difference form of phi matches its embedding") {
    const Presentation& G = presentation_gamma();
    const Presentation& O = presentation_omega();
    CHECK(parse_element("dy - dx*xi*y", G) ==
          embed_forms(Element::generator(O, Gen::phi)));
}

TEST_CASE("parenthesized subexpressions distribute") {
    const Presentation& A = presentation_A();
    Element e = elem("(x + y)*(x - y)", A);
    Element expected = multiply(gen(A, Gen::x) + gen(A, Gen::y),
                                gen(A, Gen::x) - gen(A, Gen::y));
    CHECK(e == expected);
}

TEST_CASE("tensor expressions parse with the separator") {
    const Presentation& A = presentation_A();
    Parsed v = parse("y (x) 1 + x (x) y", A);
    REQUIRE(std::holds_alternative<TensorElement>(v));
    CHECK(std::get<TensorElement>(v) == coproduct(gen(A, Gen::y)));
    Parsed w = parse("x*y (x) x", A);
    REQUIRE(std::holds_alternative<TensorElement>(w));
    CHECK(std::get<TensorElement>(w) ==
          TensorElement::of(Element::from_word(A, {Gen::x, Gen::y}), gen(A, Gen::x)));
}

TEST_CASE("a leading parenthesized x is not a tensor separator") {
    const Presentation& A = presentation_A();
    CHECK(elem("(x)*y", A) == Element::from_word(A, {Gen::x, Gen::y}));
    CHECK(elem("(x)", A) == gen(A, Gen::x));
}

TEST_CASE("malformed input raises ParseError with a position") {
    const Presentation& A = presentation_A();
    CHECK_THROWS_AS(elem("", A), ParseError);
    CHECK_THROWS_AS(elem("x +", A), ParseError);
    CHECK_THROWS_AS(elem("x & y", A), ParseError);
    CHECK_THROWS_AS(elem("z", A), ParseError);
    CHECK_THROWS_AS(elem("dx", A), ParseError);
    CHECK_THROWS_AS(elem("y^-1", A), ParseError);
    CHECK_THROWS_AS(elem("1/0", A), ParseError);
    CHECK_THROWS_AS(elem("x^5000", A), ParseError);
    CHECK_THROWS_AS(elem("x^123456789", A), ParseError);
    CHECK_THROWS_AS(elem("x*(y", A), ParseError);
    try {
        elem("x & y", A);
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("position 2") != std::string::npos);
    }
}

TEST_CASE("tensors and elements do not mix in a sum") {
    const Presentation& A = presentation_A();
    CHECK_THROWS_AS(parse("x (x) y + x", A), ParseError);
    CHECK_THROWS_AS(parse("x + x (x) y", A), ParseError);
    CHECK_THROWS_AS(parse("x (x) y + x (x) y (x) x", A), ParseError);
}

TEST_CASE("parse_element rejects tensors") {
    CHECK_THROWS_AS(parse_element("x (x) y", presentation_A()), ParseError);
}

TEST_CASE("rendering matches the documented forms") {
    const Presentation& A = presentation_A();
    const Presentation& G = presentation_gamma();
    CHECK(render(Element::zero(A)) == "0");
    CHECK(render(Element::unit(A)) == "1");
    CHECK(render(QScalar::q_power(-1) * Element::from_word(A, {Gen::x, Gen::y})) ==
          "q^-1*x*y");
    CHECK(render(elem("y*dx", G)) == "q^-1*dx*y + (q^-1 - 1)*dy*x");
    TensorElement t({&G, &G});
    t.add_term(QScalar(1), {{Gen::dx}, {Gen::x}});
    t.add_term(QScalar(1), {{Gen::x}, {Gen::dx}});
    CHECK(render(t) == "dx (x) x + x (x) dx");
    CHECK(render(TensorElement::zero({&G, &G})) == "0");
}

TEST_CASE("round-trips are exact on a hand-picked set") {
    const Presentation& G = presentation_gamma();
    for (const char* text : {
             "0",
             "1",
             "q^-1*dx*y + (q^-1 - 1)*dy*x",
             "-q*dx*xi^2",
             "dx (x) x + x (x) dx",
             "dy (x) 1 + dx (x) y + x (x) dy",
         }) {
        Parsed v = parse(text, G);
        if (std::holds_alternative<Element>(v)) {
            CHECK(render(std::get<Element>(v)) == text);
        } else {
            CHECK(render(std::get<TensorElement>(v)) == text);
        }
    }
}

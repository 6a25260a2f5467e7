#include "qplane/hopf.hpp"
#include "qplane/parser.hpp"
#include "qplane/tensor.hpp"
#include "qplane/verify.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace qplane;

namespace {

Element gen(const Presentation& p, Gen g) { return Element::generator(p, g); }

} // namespace

TEST_CASE("tensor construction validates slots and terms") {
    const Presentation& A = presentation_A();
    CHECK_THROWS_AS(TensorElement({&A}), std::invalid_argument);
    TensorElement t({&A, &A});
    CHECK_THROWS_AS(t.add_term(QScalar(1), {{Gen::x}}), std::invalid_argument);
    CHECK_THROWS_AS(t.add_term(QScalar(1), {{Gen::y, Gen::x}, {}}), std::invalid_argument);
    CHECK_NOTHROW(t.add_term(QScalar(1), {{Gen::x, Gen::y}, {}}));
    TensorElement s({&A, nullptr});
    CHECK_THROWS_AS(s.add_term(QScalar(1), {{}, {Gen::x}}), std::invalid_argument);
    CHECK_NOTHROW(s.add_term(QScalar(1), {{Gen::x}, {}}));
}

TEST_CASE("adding opposite terms cancels to the zero tensor") {
    const Presentation& A = presentation_A();
    TensorElement t = TensorElement::of(gen(A, Gen::x), gen(A, Gen::y));
    TensorElement u = QScalar(-1) * TensorElement::of(gen(A, Gen::x), gen(A, Gen::y));
    t += u;
    CHECK(t.is_zero());
}

TEST_CASE("slotwise product without crossings") {
    const Presentation& A = presentation_A();
    TensorElement a = TensorElement::of(Element::unit(A), gen(A, Gen::y));
    TensorElement b = TensorElement::of(gen(A, Gen::x), Element::unit(A));
    TensorElement prod = tensor_multiply(a, b);
    CHECK(prod == TensorElement::of(gen(A, Gen::x), gen(A, Gen::y)));
}

TEST_CASE("Koszul sign appears exactly when odd factors cross") {
    const Presentation& G = presentation_gamma();
    TensorElement left = TensorElement::of(gen(G, Gen::dx), Element::unit(G));
    TensorElement right = TensorElement::of(Element::unit(G), gen(G, Gen::dx));
    TensorElement dxdx = TensorElement::of(gen(G, Gen::dx), gen(G, Gen::dx));
    CHECK(tensor_multiply(left, right) == dxdx);
    CHECK(tensor_multiply(right, left) == QScalar(-1) * dxdx);
    CHECK(tensor_multiply(right, left, TensorSignRule::ungraded) == dxdx);
}

TEST_CASE("tensor products renormalize slot words") {
    const Presentation& A = presentation_A();
    TensorElement a = TensorElement::of(gen(A, Gen::y), Element::unit(A));
    TensorElement b = TensorElement::of(gen(A, Gen::x), Element::unit(A));
    TensorElement prod = tensor_multiply(a, b);
    TensorElement expected({&A, &A});
    expected.add_term(QScalar::q_power(-1), {{Gen::x, Gen::y}, {}});
    CHECK(prod == expected);
}

TEST_CASE("arity and slot mismatches are rejected") {
    const Presentation& A = presentation_A();
    const Presentation& B = presentation_borel();
    TensorElement two = TensorElement::of(gen(A, Gen::x), gen(A, Gen::y));
    TensorElement three = TensorElement::of({gen(A, Gen::x), gen(A, Gen::y), gen(A, Gen::x)});
    CHECK_THROWS_AS(tensor_multiply(two, three), std::invalid_argument);
    TensorElement other = TensorElement::of(gen(B, Gen::K), gen(B, Gen::X));
    CHECK_THROWS_AS(tensor_multiply(two, other), std::invalid_argument);
    CHECK_THROWS_AS(two += three, std::invalid_argument);
}

TEST_CASE("apply_in_slot reproduces coassociativity's two routes") {
    const Presentation& A = presentation_A();
    TensorElement d = coproduct(gen(A, Gen::y));
    TensorElement left = apply_in_slot(slot_coproduct(), 1, d);
    TensorElement right = apply_in_slot(slot_coproduct(), 2, d);
    CHECK(left.arity() == 3);
    CHECK(right.arity() == 3);
    CHECK(left == right);
}

TEST_CASE("apply_in_slot rejects bad slot indices") {
    const Presentation& A = presentation_A();
    TensorElement d = coproduct(gen(A, Gen::y));
    CHECK_THROWS_AS(apply_in_slot(slot_coproduct(), 0, d), std::invalid_argument);
    CHECK_THROWS_AS(apply_in_slot(slot_coproduct(), 3, d), std::invalid_argument);
}

TEST_CASE("counit slots flatten back to elements") {
    const Presentation& A = presentation_A();
    Element e = gen(A, Gen::y) + QScalar(2) * gen(A, Gen::x);
    TensorElement d = coproduct(e);
    TensorElement left = apply_in_slot(slot_counit(), 1, d);
    CHECK(scalar_flatten(left) == e);
    TensorElement right = apply_in_slot(slot_counit(), 2, d);
    CHECK(scalar_flatten(right) == e);
}

TEST_CASE("flatten_mul multiplies the two legs together") {
    const Presentation& A = presentation_A();
    TensorElement d = coproduct(gen(A, Gen::y));
    Element flattened = flatten_mul(d);
    CHECK(flattened == gen(A, Gen::y) + multiply(gen(A, Gen::x), gen(A, Gen::y)));
}

TEST_CASE("promote_slots revalidates words under the wider presentation") {
    const Presentation& A = presentation_A();
    const Presentation& G = presentation_gamma();
    TensorElement t({&A, &A});
    t.add_term(QScalar(1), {{Gen::x, Gen::y}, {}});
    TensorElement wide = promote_slots(t, {&G, &G});
    TensorElement expected({&G, &G});
    expected.add_term(QScalar(1), {{Gen::x, Gen::y}, {}});
    CHECK(wide == expected);
}

TEST_CASE("scalar_flatten requires exactly one algebra slot") {
    const Presentation& A = presentation_A();
    TensorElement nested = TensorElement::of(gen(A, Gen::x), gen(A, Gen::y));
    CHECK_THROWS_AS(scalar_flatten(nested), std::invalid_argument);
}

TEST_CASE("graded tensor multiplication is associative") {
    Rng rng(8);
    for (const Presentation* p : {&presentation_gamma(), &presentation_omega()}) {
        std::vector<Word> pool = canonical_words(*p, 2);
        auto random_tensor = [&]() {
            TensorElement t({p, p});
            int n = rng.range(1, 3);
            for (int i = 0; i < n; ++i) {
                Word a = pool[static_cast<std::size_t>(
                    rng.range(0, static_cast<int>(pool.size()) - 1))];
                Word b = pool[static_cast<std::size_t>(
                    rng.range(0, static_cast<int>(pool.size()) - 1))];
                t.add_term(QScalar(rng.range(1, 3)), {std::move(a), std::move(b)});
            }
            return t;
        };
        for (int trial = 0; trial < 25; ++trial) {
            TensorElement a = random_tensor();
            TensorElement b = random_tensor();
            TensorElement c = random_tensor();
            CHECK(tensor_multiply(tensor_multiply(a, b), c) ==
                  tensor_multiply(a, tensor_multiply(b, c)));
        }
    }
}

TEST_CASE("degree-zero slots never pick up a sign") {
    const Presentation& A = presentation_A();
    Rng rng(9);
    std::vector<Word> pool = canonical_words(A, 2);
    for (int trial = 0; trial < 25; ++trial) {
        Word a = pool[static_cast<std::size_t>(
            rng.range(0, static_cast<int>(pool.size()) - 1))];
        Word b = pool[static_cast<std::size_t>(
            rng.range(0, static_cast<int>(pool.size()) - 1))];
        TensorElement s({&A, &A});
        s.add_term(QScalar(1), {a, b});
        TensorElement t({&A, &A});
        t.add_term(QScalar(1), {b, a});
        CHECK(tensor_multiply(s, t) ==
              tensor_multiply(s, t, TensorSignRule::ungraded));
    }
}

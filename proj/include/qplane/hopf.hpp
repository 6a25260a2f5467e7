#pragma once

#include "qplane/algebra.hpp"
#include "qplane/tensor.hpp"

#include <map>

namespace qplane {

// Sign convention for extending the antipode to products: the graded rule
// treats it as a graded antihomomorphism, reversing a word of k odd
// symbols at the cost of (-1)^(k(k-1)/2); the ungraded rule reverses with
// no sign and exists so tests can show the convention matters.
enum class AntipodeSignRule { graded, ungraded };

/**
 * Structure maps of one presentation, given by their values on generators.
 * All extensions to arbitrary elements live in the free functions below:
 * coproduct, counit and the coactions extend as algebra maps, the antipode
 * as a graded antihomomorphism, the differential by the graded Leibniz
 * rule. Entries are present only where the map is defined (for example
 * only Gamma carries coactions).
 */
struct StructureMaps {
    const Presentation* algebra = nullptr;
    std::map<Gen, TensorElement> coproduct;
    std::map<Gen, QScalar> counit;
    std::map<Gen, Element> antipode;
    std::map<Gen, Element> differential;
    std::map<Gen, TensorElement> coaction_right;
    std::map<Gen, TensorElement> coaction_left;
};

const StructureMaps& maps_A();
const StructureMaps& maps_gamma();
const StructureMaps& maps_omega();
const StructureMaps& maps_borel();
const StructureMaps& structure_maps_for(const Presentation& p);

TensorElement coproduct_on_word(const Presentation& p, const Word& w);
TensorElement coproduct(const Element& e);

QScalar counit_on_word(const Presentation& p, const Word& w);
QScalar counit(const Element& e);

Element antipode_on_word(const Presentation& p, const Word& w,
                         AntipodeSignRule rule = AntipodeSignRule::graded);
Element antipode(const Element& e, AntipodeSignRule rule = AntipodeSignRule::graded);

// The exterior differential. Accepts elements of A or Gamma and lands in
// Gamma; one-form symbols are closed, so a first-order input maps to 0.
Element differential_on_word(const Presentation& p, const Word& w);
Element differential(const Element& e);

// Coactions of the coordinate algebra on Gamma, tagged Gamma (x) A and
// A (x) Gamma respectively. Defined on Gamma only.
TensorElement coaction_right(const Element& e);
TensorElement coaction_left(const Element& e);

// The algebra map Omega -> Gamma identifying the invariant forms with
// theta = dx.x^-1 and phi = dy - dx.x^-1.y; coordinates map to themselves.
Element embed_forms(const Element& e);

// The renaming isomorphism A -> borel (x -> K, x^-1 -> K^-1, y -> X),
// on elements and slotwise on tensors over A.
Element borel_rename(const Element& e);
TensorElement borel_rename(const TensorElement& t);

// Slot-shaped wrappers for apply_in_slot.
SlotMap slot_identity();
SlotMap slot_coproduct();
SlotMap slot_counit();
SlotMap slot_antipode(AntipodeSignRule rule = AntipodeSignRule::graded);
SlotMap slot_differential(); // degree 1
SlotMap slot_coaction_right();
SlotMap slot_coaction_left();

/**
 * Searches the candidate family q^k.S(g), k in [-2, 2], for the value the
 * inverse antipode must take on the generator g of A, certifying the
 * candidate by applying the antipode to it and comparing with g. Exactly
 * one exponent may survive; anything else is a std::domain_error.
 */
struct ProbeResult {
    Gen generator;
    int q_exponent;
    Element inverse_image;
};

ProbeResult antipode_inverse_probe(Gen g);

} // namespace qplane

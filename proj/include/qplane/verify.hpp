#pragma once

#include "qplane/algebra.hpp"
#include "qplane/hopf.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qplane {

/**
 * Deterministic random source for test-set generation. Draws are reduced
 * with modulo arithmetic rather than standard distributions, whose output
 * is implementation-defined; reports must be byte-identical across
 * platforms for a fixed seed.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform-enough integer in [lo, hi], inclusive. The modulo bias is
    // irrelevant here; determinism is what matters.
    int range(int lo, int hi);

private:
    std::mt19937_64 engine_;
};

// Outcome of checking one axiom over one presentation: how many instances
// ran, how many failed, and a rendering of the first failure.
struct AxiomCheck {
    std::string id;       // "<algebra>:<axiom>"
    std::string paper_eq; // equation tag carried into reports
    int instances = 0;
    int failures = 0;
    std::string witness;  // empty when clean
};

// The axiom vocabulary accepted by verify_axiom.
const std::vector<std::string>& axiom_names();

std::string axiom_eq_tag(const std::string& axiom, const Presentation& p);

/**
 * Checks one named axiom over a presentation. Element-wise axioms run per
 * element of test_set; graded-leibniz consumes test_set as consecutive
 * (left, right) pairs; the relation axioms ignore test_set and quantify
 * over the presentation's rewrite rules. Unknown axiom names are
 * std::invalid_argument.
 */
AxiomCheck verify_axiom(const std::string& axiom, const Presentation& p,
                        const std::vector<Element>& test_set);

// All canonical words of length at most max_len, ordered by length and
// then by the presentation's generator order. Deterministic.
std::vector<Word> canonical_words(const Presentation& p, int max_len);

std::vector<Element> basis_elements(const Presentation& p, int max_len);

// Monomials x^a y^b of A with |a| <= max_x_power (negative a through
// x^-1) and 0 <= b <= max_y_power.
std::vector<Element> coordinate_box_elements(int max_x_power, int max_y_power);

// One random linear combination (1 to max_terms terms) over a word pool:
// each term is c * q^k * w with c in [-3, 3] nonzero and k in [-2, 2].
Element random_combination(const Presentation& p, Rng& rng,
                           const std::vector<Word>& pool, int max_terms = 3);

std::vector<Element> random_elements(const Presentation& p, Rng& rng, int count,
                                     int max_len);

// As random_elements, but every element is homogeneous (all words of one
// degree, chosen per element).
std::vector<Element> random_homogeneous_elements(const Presentation& p, Rng& rng,
                                                 int count, int max_len);

// The first-order sweep u.dv over canonical coordinate words u of A with
// length <= max_coord_len and v in {x, y}, as elements of Gamma.
std::vector<Element> first_order_grid(int max_coord_len);

} // namespace qplane

#pragma once

#include "qplane/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qplane {

/**
 * The fixed universe of generator symbols. Each presentation below uses a
 * subset. Enum order doubles as the global normal-ordering of symbols:
 * one-forms precede coordinates, an invertible coordinate precedes its
 * inverse symbol, and the non-invertible coordinate comes last. The order
 * restricts to the canonical generator order of every presentation.
 *
 * xi stands for x^-1 and Ki for K^-1.
 */
enum class Gen : std::uint8_t { theta, phi, dx, dy, x, xi, y, K, Ki, X };

inline constexpr int kGenCount = 10;

int gen_index(Gen g);
int gen_degree(Gen g); // 1 for the one-form symbols theta, phi, dx, dy; else 0
const char* gen_name(Gen g);
std::optional<Gen> gen_from_name(std::string_view name);

using Word = std::vector<Gen>;

int word_degree(const Word& w);

// Term order used everywhere words are ranked: by degree, then
// lexicographically on the generator order (a prefix sorts first).
bool word_less(const Word& a, const Word& b);

struct WordOrder {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

struct RuleTerm {
    QScalar coeff;
    Word word;
};

// An oriented two-symbol rewrite: the word a.b is replaced by the sum on
// the right. Every right-hand word has the same total degree as a.b.
struct RewriteRule {
    Gen a;
    Gen b;
    std::vector<RuleTerm> rhs;
};

/**
 * A presentation fixes the generator subset, the oriented rewrite rules and
 * the pairs of mutually inverse symbols. The four shipped presentations are
 * exposed as singletons below; tests may build their own (for instance with
 * a deliberately broken rule) through the public constructor.
 */
class Presentation {
public:
    Presentation(std::string name, std::vector<Gen> generators,
                 std::vector<RewriteRule> rules,
                 std::vector<std::pair<Gen, Gen>> inverse_pairs);

    const std::string& name() const { return name_; }
    const std::vector<Gen>& generators() const { return gens_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::vector<std::pair<Gen, Gen>>& inverse_pairs() const { return inv_; }

    bool contains(Gen g) const { return member_[static_cast<std::size_t>(gen_index(g))]; }
    const RewriteRule* rule_for(Gen a, Gen b) const;
    std::optional<Gen> inverse_of(Gen g) const;
    bool word_is_canonical(const Word& w) const;

    // Structural sanity of the rule table: every out-of-order symbol pair
    // has a rule, right-hand sides are canonical, inverse pairs cancel.
    // Throws std::logic_error on violation. Confluence is checked
    // separately by check_local_confluence.
    void validate() const;

private:
    std::string name_;
    std::vector<Gen> gens_;
    std::vector<RewriteRule> rules_;
    std::vector<std::pair<Gen, Gen>> inv_;
    std::array<bool, kGenCount> member_{};
    std::array<std::array<int, kGenCount>, kGenCount> table_{}; // rule index + 1, 0 = none
};

Presentation make_presentation_A();
Presentation make_presentation_gamma();
Presentation make_presentation_omega();
Presentation make_presentation_borel();

const Presentation& presentation_A();
const Presentation& presentation_gamma();
const Presentation& presentation_omega();
const Presentation& presentation_borel();

// Lookup by CLI name: "A", "gamma", "omega", "borel". Null if unknown.
const Presentation* presentation_by_name(std::string_view name);

using RawTerm = std::pair<QScalar, Word>;

/**
 * Element: a finite linear combination of canonical words over one
 * presentation. All constructors normalize, so an Element is always in
 * canonical form and the zero element is the empty sum. Equality compares
 * the term maps; two canonical forms are equal exactly when their words
 * and coefficients agree.
 */
class Element {
public:
    explicit Element(const Presentation& p) : pres_(&p) {}

    static Element zero(const Presentation& p) { return Element(p); }
    static Element unit(const Presentation& p);
    static Element generator(const Presentation& p, Gen g);
    static Element from_word(const Presentation& p, Word w, QScalar coeff = QScalar(1));

    const Presentation& presentation() const { return *pres_; }
    const std::map<Word, QScalar, WordOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator-() const;
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const QScalar& c, const Element& e);

private:
    const Presentation* pres_;
    std::map<Word, QScalar, WordOrder> terms_;

    friend Element normalize_terms(const Presentation& p, std::vector<RawTerm> raw);
};

/**
 * The rewrite engine. Reduces every input word to the unique canonical
 * form by repeatedly rewriting the leftmost reducible two-symbol factor.
 * A step budget of 10^6 rule applications per input term guards against a
 * non-terminating rule table (std::runtime_error on overrun; the shipped
 * presentations never come close).
 */
Element normalize_terms(const Presentation& p, std::vector<RawTerm> raw);

Element normalize(const Element& e); // idempotent
Element add(const Element& a, const Element& b);
Element scale(const QScalar& c, const Element& e);
Element multiply(const Element& a, const Element& b);

// Common degree of all words, std::nullopt for inhomogeneous elements.
// The zero element reports degree 0.
std::optional<int> degree_of(const Element& e);

// Evaluates the coefficients of a canonical element of A at q = 1, giving
// the corresponding commutative polynomial in x and y. Elements involving
// x^-1 are rejected (std::domain_error).
Element classical_limit(const Element& e);

struct CriticalPairResult {
    Word overlap; // the three-symbol word both rules act on
    Element left_normal_form;
    Element right_normal_form;
    bool convergent;
};

struct ConfluenceReport {
    std::string presentation;
    std::vector<CriticalPairResult> pairs;
    int divergent_count = 0;
    bool all_convergent() const { return divergent_count == 0; }
};

/**
 * Local confluence by critical pairs: enumerates every three-symbol word
 * g1.g2.g3 whose two overlapping factors both match a rule, reduces the
 * word both ways to canonical form and compares. With two-symbol left-hand
 * sides every genuine overlap has length exactly 3; max_overlap_len >= 3 is
 * accepted for interface stability and values beyond 3 add no overlaps.
 */
ConfluenceReport check_local_confluence(const Presentation& p, int max_overlap_len = 3);

} // namespace qplane

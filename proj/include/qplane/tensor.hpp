#pragma once

#include "qplane/algebra.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace qplane {

// Slot tag of a tensor factor: the presentation the factor lives in, or
// nullptr for a scalar slot (the image of a counit application).
using SlotPres = const Presentation*;

using TensorKey = std::vector<Word>;

// Slotwise comparison with the last slot most significant; each slot is
// ranked by the word order. This groups terms by their rightmost factor,
// matching the conventional reading of coproduct expansions.
bool tensor_key_less(const TensorKey& a, const TensorKey& b);

struct TensorTermOrder {
    bool operator()(const TensorKey& a, const TensorKey& b) const {
        return tensor_key_less(a, b);
    }
};

// Sign convention for the componentwise product on tensor factors. The
// graded rule inserts the Koszul sign; the ungraded rule is provided so
// tests can demonstrate that the sign is load-bearing.
enum class TensorSignRule { graded, ungraded };

/**
 * A finite linear combination of elementary tensors over a fixed list of
 * slots. Every stored word is canonical in its slot's presentation, and a
 * scalar slot only ever carries the empty word (its value lives in the
 * coefficient). Arity is at least 2.
 *
 * Equality compares arity and terms; the slot tags are bookkeeping and do
 * not participate, so a tensor over Gamma (x) A equals the same
 * combination retagged over Gamma (x) Gamma.
 */
class TensorElement {
public:
    explicit TensorElement(std::vector<SlotPres> slots);

    static TensorElement zero(std::vector<SlotPres> slots);
    static TensorElement unit(std::vector<SlotPres> slots);
    static TensorElement of(const Element& a, const Element& b);
    static TensorElement of(const std::vector<Element>& factors);

    int arity() const { return static_cast<int>(slots_.size()); }
    const std::vector<SlotPres>& slots() const { return slots_; }
    const std::map<TensorKey, QScalar, TensorTermOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Folds one term into the combination, dropping it if the coefficient
    // cancels. The key must have one canonical word per slot.
    void add_term(QScalar coeff, TensorKey key);

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.slots_.size() == b.slots_.size() && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) {
        return !(a == b);
    }

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    TensorElement operator-() const;
    friend TensorElement operator*(const QScalar& c, const TensorElement& t);

private:
    std::vector<SlotPres> slots_;
    std::map<TensorKey, QScalar, TensorTermOrder> terms_;
};

/**
 * Componentwise product: (a1 (x) a2)(b1 (x) b2) = s a1b1 (x) a2b2, where
 * under the graded rule s = (-1)^(sum over i > j of deg(a_i) deg(b_j)),
 * the sign of moving each b_j leftward past the later a_i. Slot products
 * are renormalized, so the result is canonical.
 */
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b,
                              TensorSignRule sign_rule = TensorSignRule::graded);

// What a structure map produced on one canonical word: a scalar (counit),
// an element (identity, antipode, differential), or a tensor (coproduct,
// coactions).
struct SlotResult {
    enum class Kind { scalar, element, tensor };
    Kind kind;
    QScalar scalar;
    std::optional<Element> element;
    std::optional<TensorElement> tensor;

    static SlotResult of_scalar(QScalar s);
    static SlotResult of_element(Element e);
    static SlotResult of_tensor(TensorElement t);
};

/**
 * A linear map packaged for slotwise application. shape reports the slot
 * tags the map produces from a given input slot, so zero tensors keep a
 * well-defined type. degree is the map's homogeneous degree; applying a
 * map of odd degree in slot k inserts the Koszul crossing sign
 * (-1)^(degree of the earlier slots) per term.
 */
struct SlotMap {
    std::function<SlotResult(const Presentation&, const Word&)> apply;
    std::function<std::vector<SlotPres>(SlotPres)> shape;
    int degree = 0;
};

// Applies f in the given 1-based slot. The slot must carry an algebra, not
// a scalar.
TensorElement apply_in_slot(const SlotMap& f, int slot, const TensorElement& t);

// Multiplication map on a two-slot tensor over one algebra (a scalar slot
// is tolerated and acts as its value).
Element flatten_mul(const TensorElement& t);

// Drops scalar slots; exactly one algebra slot must remain.
Element scalar_flatten(const TensorElement& t);

// Retags the slots without touching the terms. Each word must be canonical
// in its new slot; a slot can only become scalar if it carries nothing but
// empty words.
TensorElement promote_slots(const TensorElement& t, std::vector<SlotPres> new_slots);

} // namespace qplane

#include "qplane/tensor.hpp"

#include <stdexcept>

namespace qplane {

bool tensor_key_less(const TensorKey& a, const TensorKey& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return word_less(a[i], b[i]);
    }
    return false;
}

TensorElement::TensorElement(std::vector<SlotPres> slots) : slots_(std::move(slots)) {
    if (slots_.size() < 2) {
        throw std::invalid_argument("a tensor needs at least two slots");
    }
}

TensorElement TensorElement::zero(std::vector<SlotPres> slots) {
    return TensorElement(std::move(slots));
}

TensorElement TensorElement::unit(std::vector<SlotPres> slots) {
    TensorElement t(std::move(slots));
    t.add_term(QScalar(1), TensorKey(t.slots_.size()));
    return t;
}

TensorElement TensorElement::of(const Element& a, const Element& b) {
    TensorElement t({&a.presentation(), &b.presentation()});
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            t.add_term(ca * cb, {wa, wb});
        }
    }
    return t;
}

TensorElement TensorElement::of(const std::vector<Element>& factors) {
    std::vector<SlotPres> slots;
    slots.reserve(factors.size());
    for (const Element& f : factors) slots.push_back(&f.presentation());
    TensorElement t(std::move(slots));
    std::function<void(std::size_t, TensorKey&, const QScalar&)> walk =
        [&](std::size_t i, TensorKey& partial, const QScalar& c) {
            if (i == factors.size()) {
                t.add_term(c, partial);
                return;
            }
            for (const auto& [w, fc] : factors[i].terms()) {
                partial.push_back(w);
                walk(i + 1, partial, c * fc);
                partial.pop_back();
            }
        };
    TensorKey partial;
    walk(0, partial, QScalar(1));
    return t;
}

void TensorElement::add_term(QScalar coeff, TensorKey key) {
    if (key.size() != slots_.size()) {
        throw std::invalid_argument("tensor term arity does not match the slot list");
    }
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (slots_[i] == nullptr) {
            if (!key[i].empty()) {
                throw std::invalid_argument("a scalar slot can only carry the empty word");
            }
        } else if (!slots_[i]->word_is_canonical(key[i])) {
            throw std::invalid_argument("tensor term word is not canonical in its slot");
        }
    }
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    if (slots_ != other.slots_) {
        throw std::invalid_argument(
            "tensor slot mismatch in addition; promote_slots to a common type first");
    }
    for (const auto& [key, c] : other.terms_) add_term(c, key);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
    return *this += (-other);
}

TensorElement TensorElement::operator-() const {
    TensorElement r(slots_);
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

TensorElement operator*(const QScalar& c, const TensorElement& t) {
    TensorElement r(t.slots_);
    if (c.is_zero()) return r;
    for (const auto& [key, k] : t.terms_) r.terms_.emplace(key, c * k);
    return r;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b,
                              TensorSignRule sign_rule) {
    if (a.slots().size() != b.slots().size()) {
        throw std::invalid_argument("tensor arity mismatch in multiplication");
    }
    std::size_t n = a.slots().size();
    std::vector<SlotPres> slots(n);
    for (std::size_t i = 0; i < n; ++i) {
        SlotPres pa = a.slots()[i];
        SlotPres pb = b.slots()[i];
        if (pa != nullptr && pb != nullptr && pa != pb) {
            throw std::invalid_argument("tensor slot algebras disagree in multiplication");
        }
        slots[i] = pa != nullptr ? pa : pb;
    }
    TensorElement out(slots);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            int crossings = 0;
            if (sign_rule == TensorSignRule::graded) {
                int deg_b_below = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    crossings += word_degree(ka[i]) * deg_b_below;
                    deg_b_below += word_degree(kb[i]);
                }
            }
            QScalar base = ca * cb;
            if (crossings % 2 != 0) base = -base;
            // Normalize each slot product, then expand the cross product
            // of the per-slot sums into flat terms.
            std::vector<Element> slot_values;
            slot_values.reserve(n);
            bool dead = false;
            for (std::size_t i = 0; i < n; ++i) {
                Word w;
                w.reserve(ka[i].size() + kb[i].size());
                w.insert(w.end(), ka[i].begin(), ka[i].end());
                w.insert(w.end(), kb[i].begin(), kb[i].end());
                if (slots[i] == nullptr) {
                    slot_values.push_back(Element::unit(presentation_A()));
                    continue;
                }
                Element v = Element::from_word(*slots[i], std::move(w));
                if (v.is_zero()) {
                    dead = true;
                    break;
                }
                slot_values.push_back(std::move(v));
            }
            if (dead) continue;
            TensorKey key(n);
            std::function<void(std::size_t, const QScalar&)> walk =
                [&](std::size_t i, const QScalar& c) {
                    if (i == n) {
                        out.add_term(c, key);
                        return;
                    }
                    if (slots[i] == nullptr) {
                        key[i] = Word{};
                        walk(i + 1, c);
                        return;
                    }
                    for (const auto& [w, sc] : slot_values[i].terms()) {
                        key[i] = w;
                        walk(i + 1, c * sc);
                    }
                };
            walk(0, base);
        }
    }
    return out;
}

SlotResult SlotResult::of_scalar(QScalar s) {
    SlotResult r;
    r.kind = Kind::scalar;
    r.scalar = std::move(s);
    return r;
}

SlotResult SlotResult::of_element(Element e) {
    SlotResult r;
    r.kind = Kind::element;
    r.element = std::move(e);
    return r;
}

SlotResult SlotResult::of_tensor(TensorElement t) {
    SlotResult r;
    r.kind = Kind::tensor;
    r.tensor = std::move(t);
    return r;
}

TensorElement apply_in_slot(const SlotMap& f, int slot, const TensorElement& t) {
    int n = t.arity();
    if (slot < 1 || slot > n) {
        throw std::invalid_argument("slot index out of range");
    }
    std::size_t k = static_cast<std::size_t>(slot - 1);
    SlotPres old = t.slots()[k];
    if (old == nullptr) {
        throw std::invalid_argument("cannot apply a structure map in a scalar slot");
    }
    std::vector<SlotPres> inserted = f.shape(old);
    if (inserted.empty()) {
        throw std::logic_error("slot map shape produced no slots");
    }
    std::vector<SlotPres> new_slots;
    new_slots.reserve(t.slots().size() - 1 + inserted.size());
    new_slots.insert(new_slots.end(), t.slots().begin(),
                     t.slots().begin() + static_cast<std::ptrdiff_t>(k));
    new_slots.insert(new_slots.end(), inserted.begin(), inserted.end());
    new_slots.insert(new_slots.end(),
                     t.slots().begin() + static_cast<std::ptrdiff_t>(k) + 1,
                     t.slots().end());
    TensorElement out(new_slots);
    for (const auto& [key, c] : t.terms()) {
        int crossing = 0;
        for (std::size_t j = 0; j < k; ++j) crossing += word_degree(key[j]);
        QScalar base = (f.degree % 2 != 0 && crossing % 2 != 0) ? -c : c;
        SlotResult r = f.apply(*old, key[k]);
        auto splice = [&](const std::vector<Word>& middle) {
            TensorKey nk;
            nk.reserve(key.size() - 1 + middle.size());
            nk.insert(nk.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(k));
            nk.insert(nk.end(), middle.begin(), middle.end());
            nk.insert(nk.end(), key.begin() + static_cast<std::ptrdiff_t>(k) + 1, key.end());
            return nk;
        };
        switch (r.kind) {
            case SlotResult::Kind::scalar: {
                if (inserted.size() != 1 || inserted[0] != nullptr) {
                    throw std::logic_error("slot map shape disagrees with a scalar result");
                }
                out.add_term(base * r.scalar, splice({Word{}}));
                break;
            }
            case SlotResult::Kind::element: {
                if (inserted.size() != 1 || inserted[0] != &r.element->presentation()) {
                    throw std::logic_error("slot map shape disagrees with an element result");
                }
                for (const auto& [w, ec] : r.element->terms()) {
                    out.add_term(base * ec, splice({w}));
                }
                break;
            }
            case SlotResult::Kind::tensor: {
                if (r.tensor->slots() != inserted) {
                    throw std::logic_error("slot map shape disagrees with a tensor result");
                }
                for (const auto& [tk, tc] : r.tensor->terms()) {
                    out.add_term(base * tc, splice(tk));
                }
                break;
            }
        }
    }
    return out;
}

Element flatten_mul(const TensorElement& t) {
    if (t.arity() != 2) {
        throw std::invalid_argument("flatten_mul needs a two-slot tensor");
    }
    SlotPres p1 = t.slots()[0];
    SlotPres p2 = t.slots()[1];
    if (p1 != nullptr && p2 != nullptr && p1 != p2) {
        throw std::invalid_argument("flatten_mul needs both slots over one algebra");
    }
    const Presentation* p = p1 != nullptr ? p1 : p2;
    if (p == nullptr) {
        throw std::invalid_argument("flatten_mul needs at least one algebra slot");
    }
    std::vector<RawTerm> raw;
    raw.reserve(t.terms().size());
    for (const auto& [key, c] : t.terms()) {
        Word w;
        w.reserve(key[0].size() + key[1].size());
        w.insert(w.end(), key[0].begin(), key[0].end());
        w.insert(w.end(), key[1].begin(), key[1].end());
        raw.emplace_back(c, std::move(w));
    }
    return normalize_terms(*p, std::move(raw));
}

Element scalar_flatten(const TensorElement& t) {
    int found = -1;
    for (int i = 0; i < t.arity(); ++i) {
        if (t.slots()[static_cast<std::size_t>(i)] != nullptr) {
            if (found != -1) {
                throw std::invalid_argument("scalar_flatten needs exactly one algebra slot");
            }
            found = i;
        }
    }
    if (found == -1) {
        throw std::invalid_argument("scalar_flatten needs exactly one algebra slot");
    }
    const Presentation& p = *t.slots()[static_cast<std::size_t>(found)];
    std::vector<RawTerm> raw;
    raw.reserve(t.terms().size());
    for (const auto& [key, c] : t.terms()) {
        raw.emplace_back(c, key[static_cast<std::size_t>(found)]);
    }
    return normalize_terms(p, std::move(raw));
}

TensorElement promote_slots(const TensorElement& t, std::vector<SlotPres> new_slots) {
    if (new_slots.size() != t.slots().size()) {
        throw std::invalid_argument("promote_slots cannot change the arity");
    }
    TensorElement out(std::move(new_slots));
    for (const auto& [key, c] : t.terms()) out.add_term(c, key);
    return out;
}

} // namespace qplane

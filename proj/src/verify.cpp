#include "qplane/verify.hpp"

#include "qplane/parser.hpp"
#include "qplane/tensor.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace qplane {

int Rng::range(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

namespace {

struct Outcome {
    bool ok = true;
    std::string witness;
};

Outcome pass() { return Outcome{}; }

Outcome fail(std::string witness) { return Outcome{false, std::move(witness)}; }

std::string rule_label(const RewriteRule& r) {
    return std::string("relation ") + gen_name(r.a) + "*" + gen_name(r.b);
}

AxiomCheck run_over_elements(AxiomCheck check, const std::vector<Element>& set,
                             const std::function<Outcome(const Element&)>& f) {
    for (const Element& e : set) {
        ++check.instances;
        Outcome o = f(e);
        if (!o.ok) {
            ++check.failures;
            if (check.witness.empty()) check.witness = std::move(o.witness);
        }
    }
    return check;
}

AxiomCheck run_over_pairs(AxiomCheck check, const std::vector<Element>& set,
                          const std::function<Outcome(const Element&, const Element&)>& f) {
    for (std::size_t i = 0; i + 1 < set.size(); i += 2) {
        ++check.instances;
        Outcome o = f(set[i], set[i + 1]);
        if (!o.ok) {
            ++check.failures;
            if (check.witness.empty()) check.witness = std::move(o.witness);
        }
    }
    return check;
}

AxiomCheck run_over_rules(AxiomCheck check, const Presentation& p,
                          const std::function<Outcome(const RewriteRule&)>& f) {
    for (const RewriteRule& r : p.rules()) {
        ++check.instances;
        Outcome o = f(r);
        if (!o.ok) {
            ++check.failures;
            if (check.witness.empty()) check.witness = std::move(o.witness);
        }
    }
    return check;
}

Outcome check_coassociativity(const Element& e) {
    TensorElement d1 = coproduct(e);
    TensorElement l = apply_in_slot(slot_coproduct(), 1, d1);
    TensorElement r = apply_in_slot(slot_coproduct(), 2, d1);
    if (l == r) return pass();
    return fail("e = " + render(e) + "; left = " + render(l) + "; right = " + render(r));
}

Outcome check_counit_law(const Element& e) {
    TensorElement d1 = coproduct(e);
    Element l = scalar_flatten(apply_in_slot(slot_counit(), 1, d1));
    Element r = scalar_flatten(apply_in_slot(slot_counit(), 2, d1));
    if (l == e && r == e) return pass();
    return fail("e = " + render(e) + "; left = " + render(l) + "; right = " + render(r));
}

Outcome check_antipode_law(const Element& e) {
    TensorElement d1 = coproduct(e);
    Element l = flatten_mul(apply_in_slot(slot_antipode(), 1, d1));
    Element r = flatten_mul(apply_in_slot(slot_antipode(), 2, d1));
    Element target = scale(counit(e), Element::unit(e.presentation()));
    if (l == target && r == target) return pass();
    return fail("e = " + render(e) + "; left = " + render(l) + "; right = " + render(r) +
                "; target = " + render(target));
}

Outcome check_coproduct_respects(const Presentation& p, const RewriteRule& r) {
    TensorElement l = coproduct_on_word(p, {r.a, r.b});
    TensorElement rhs = TensorElement::zero({&p, &p});
    for (const RuleTerm& t : r.rhs) rhs += t.coeff * coproduct_on_word(p, t.word);
    if (l == rhs) return pass();
    return fail(rule_label(r) + "; left = " + render(l) + "; right = " + render(rhs));
}

Outcome check_counit_respects(const Presentation& p, const RewriteRule& r) {
    QScalar l = counit_on_word(p, {r.a, r.b});
    QScalar rhs;
    for (const RuleTerm& t : r.rhs) rhs += t.coeff * counit_on_word(p, t.word);
    if (l == rhs) return pass();
    return fail(rule_label(r) + "; left = " + render(l) + "; right = " + render(rhs));
}

Outcome check_antipode_respects(const Presentation& p, const RewriteRule& r) {
    Element l = antipode_on_word(p, {r.a, r.b});
    Element rhs = Element::zero(p);
    for (const RuleTerm& t : r.rhs) rhs += t.coeff * antipode_on_word(p, t.word);
    if (l == rhs) return pass();
    return fail(rule_label(r) + "; left = " + render(l) + "; right = " + render(rhs));
}

Outcome check_right_comodule(const Element& e) {
    TensorElement dr = coaction_right(e);
    TensorElement l = apply_in_slot(slot_coaction_right(), 1, dr);
    TensorElement r = apply_in_slot(slot_coproduct(), 2, dr);
    if (l != r) {
        return fail("e = " + render(e) + "; left = " + render(l) + "; right = " + render(r));
    }
    Element back = scalar_flatten(apply_in_slot(slot_counit(), 2, dr));
    if (back != e) {
        return fail("e = " + render(e) + "; counit part = " + render(back));
    }
    return pass();
}

Outcome check_left_comodule(const Element& e) {
    TensorElement dl = coaction_left(e);
    TensorElement l = apply_in_slot(slot_coproduct(), 1, dl);
    TensorElement r = apply_in_slot(slot_coaction_left(), 2, dl);
    if (l != r) {
        return fail("e = " + render(e) + "; left = " + render(l) + "; right = " + render(r));
    }
    Element back = scalar_flatten(apply_in_slot(slot_counit(), 1, dl));
    if (back != e) {
        return fail("e = " + render(e) + "; counit part = " + render(back));
    }
    return pass();
}

Outcome check_bicomodule(const Element& e) {
    TensorElement l = apply_in_slot(slot_coaction_left(), 1, coaction_right(e));
    TensorElement r = apply_in_slot(slot_coaction_right(), 2, coaction_left(e));
    if (l == r) return pass();
    return fail("e = " + render(e) + "; left = " + render(l) + "; right = " + render(r));
}

Outcome check_d_comodule(const Element& e) {
    Element de = differential(e);
    TensorElement lr = coaction_right(de);
    TensorElement rr = apply_in_slot(slot_differential(), 1, coaction_right(e));
    if (lr != rr) {
        return fail("e = " + render(e) + "; right side: left = " + render(lr) +
                    "; right = " + render(rr));
    }
    TensorElement ll = coaction_left(de);
    TensorElement rl = apply_in_slot(slot_differential(), 2, coaction_left(e));
    if (ll != rl) {
        return fail("e = " + render(e) + "; left side: left = " + render(ll) +
                    "; right = " + render(rl));
    }
    return pass();
}

Outcome check_d_squared(const Element& e) {
    Element dd = differential(differential(e));
    if (dd.is_zero()) return pass();
    return fail("e = " + render(e) + "; d(d(e)) = " + render(dd));
}

Outcome check_graded_leibniz(const Element& a, const Element& b) {
    std::optional<int> da = degree_of(a);
    if (!da) {
        throw std::invalid_argument("graded-leibniz needs homogeneous left factors");
    }
    Element lhs = differential(multiply(a, b));
    Element rhs = multiply(differential(a), b);
    Element mixed = multiply(a, differential(b));
    rhs += (*da % 2 != 0) ? -mixed : mixed;
    if (lhs == rhs) return pass();
    return fail("a = " + render(a) + "; b = " + render(b) + "; left = " + render(lhs) +
                "; right = " + render(rhs));
}

Outcome check_coaction_invariance(const RewriteRule& r) {
    const Presentation& G = presentation_gamma();
    const Presentation& A = presentation_A();
    const StructureMaps& m = maps_gamma();
    TensorElement lr = tensor_multiply(m.coaction_right.at(r.a), m.coaction_right.at(r.b));
    TensorElement rr = TensorElement::zero({&G, &A});
    for (const RuleTerm& t : r.rhs) {
        rr += t.coeff * coaction_right(Element::from_word(G, t.word));
    }
    if (lr != rr) {
        return fail(rule_label(r) + " under the right coaction; left = " + render(lr) +
                    "; right = " + render(rr));
    }
    TensorElement ll = tensor_multiply(m.coaction_left.at(r.a), m.coaction_left.at(r.b));
    TensorElement rl = TensorElement::zero({&A, &G});
    for (const RuleTerm& t : r.rhs) {
        rl += t.coeff * coaction_left(Element::from_word(G, t.word));
    }
    if (ll != rl) {
        return fail(rule_label(r) + " under the left coaction; left = " + render(ll) +
                    "; right = " + render(rl));
    }
    return pass();
}

} // namespace

const std::vector<std::string>& axiom_names() {
    static const std::vector<std::string> names = {
        "coassociativity",
        "counit-law",
        "antipode-law",
        "coproduct-respects-relations",
        "counit-respects-relations",
        "antipode-respects-relations",
        "right-comodule",
        "left-comodule",
        "bicomodule-compatibility",
        "d-is-comodule-map",
        "d-squared-zero",
        "graded-leibniz",
        "coaction-relation-invariance",
    };
    return names;
}

std::string axiom_eq_tag(const std::string& axiom, const Presentation& p) {
    if (axiom == "coassociativity") return "(3)";
    if (axiom == "counit-law") return "(5)";
    if (axiom == "antipode-law") return "(8)";
    if (axiom == "right-comodule") return "(20)";
    if (axiom == "left-comodule") return "(22)";
    if (axiom == "bicomodule-compatibility") return "(25)";
    if (axiom == "d-is-comodule-map") return "(26)";
    if (axiom == "d-squared-zero") return "(13)";
    if (axiom == "graded-leibniz") return "(14)";
    if (axiom == "coaction-relation-invariance") return "(15)-(16)";
    bool respects = axiom == "coproduct-respects-relations" ||
                    axiom == "counit-respects-relations" ||
                    axiom == "antipode-respects-relations";
    if (respects) {
        if (p.name() == "A") return "(1)";
        if (p.name() == "gamma") return "(15)-(16)";
        if (p.name() == "borel") return "(46)";
        if (p.name() == "omega") {
            if (axiom == "coproduct-respects-relations") return "(36)-(37)";
            if (axiom == "counit-respects-relations") return "(39)";
            return "(40)";
        }
        return "";
    }
    throw std::invalid_argument("unknown axiom: " + axiom);
}

AxiomCheck verify_axiom(const std::string& axiom, const Presentation& p,
                        const std::vector<Element>& test_set) {
    AxiomCheck check;
    check.id = p.name() + ":" + axiom;
    check.paper_eq = axiom_eq_tag(axiom, p);
    if (axiom == "coassociativity") {
        return run_over_elements(std::move(check), test_set, check_coassociativity);
    }
    if (axiom == "counit-law") {
        return run_over_elements(std::move(check), test_set, check_counit_law);
    }
    if (axiom == "antipode-law") {
        return run_over_elements(std::move(check), test_set, check_antipode_law);
    }
    if (axiom == "coproduct-respects-relations") {
        return run_over_rules(std::move(check), p,
                              [&p](const RewriteRule& r) { return check_coproduct_respects(p, r); });
    }
    if (axiom == "counit-respects-relations") {
        return run_over_rules(std::move(check), p,
                              [&p](const RewriteRule& r) { return check_counit_respects(p, r); });
    }
    if (axiom == "antipode-respects-relations") {
        return run_over_rules(std::move(check), p,
                              [&p](const RewriteRule& r) { return check_antipode_respects(p, r); });
    }
    if (axiom == "right-comodule") {
        return run_over_elements(std::move(check), test_set, check_right_comodule);
    }
    if (axiom == "left-comodule") {
        return run_over_elements(std::move(check), test_set, check_left_comodule);
    }
    if (axiom == "bicomodule-compatibility") {
        return run_over_elements(std::move(check), test_set, check_bicomodule);
    }
    if (axiom == "d-is-comodule-map") {
        return run_over_elements(std::move(check), test_set, check_d_comodule);
    }
    if (axiom == "d-squared-zero") {
        return run_over_elements(std::move(check), test_set, check_d_squared);
    }
    if (axiom == "graded-leibniz") {
        return run_over_pairs(std::move(check), test_set, check_graded_leibniz);
    }
    if (axiom == "coaction-relation-invariance") {
        if (&p != &presentation_gamma()) {
            throw std::invalid_argument("coaction-relation-invariance runs over Gamma");
        }
        return run_over_rules(std::move(check), p, check_coaction_invariance);
    }
    throw std::invalid_argument("unknown axiom: " + axiom);
}

std::vector<Word> canonical_words(const Presentation& p, int max_len) {
    std::vector<Word> out = {Word{}};
    std::vector<Word> layer = {Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer) {
            for (Gen g : p.generators()) {
                if (!w.empty() && p.rule_for(w.back(), g) != nullptr) continue;
                Word extended = w;
                extended.push_back(g);
                next.push_back(std::move(extended));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::vector<Element> basis_elements(const Presentation& p, int max_len) {
    std::vector<Element> out;
    for (Word& w : canonical_words(p, max_len)) {
        out.push_back(Element::from_word(p, std::move(w)));
    }
    return out;
}

std::vector<Element> coordinate_box_elements(int max_x_power, int max_y_power) {
    const Presentation& A = presentation_A();
    std::vector<Element> out;
    for (int a = -max_x_power; a <= max_x_power; ++a) {
        for (int b = 0; b <= max_y_power; ++b) {
            Word w;
            for (int i = 0; i < (a >= 0 ? a : -a); ++i) {
                w.push_back(a >= 0 ? Gen::x : Gen::xi);
            }
            for (int i = 0; i < b; ++i) w.push_back(Gen::y);
            out.push_back(Element::from_word(A, std::move(w)));
        }
    }
    return out;
}

Element random_combination(const Presentation& p, Rng& rng, const std::vector<Word>& pool,
                           int max_terms) {
    if (pool.empty()) throw std::invalid_argument("empty word pool");
    int n = rng.range(1, max_terms);
    std::vector<RawTerm> raw;
    raw.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        int c = 0;
        while (c == 0) c = rng.range(-3, 3);
        int k = rng.range(-2, 2);
        QScalar coeff = QScalar(c) * QScalar::q_power(k);
        raw.emplace_back(std::move(coeff),
                         pool[static_cast<std::size_t>(rng.range(0, static_cast<int>(pool.size()) - 1))]);
    }
    return normalize_terms(p, std::move(raw));
}

std::vector<Element> random_elements(const Presentation& p, Rng& rng, int count, int max_len) {
    std::vector<Word> pool = canonical_words(p, max_len);
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(random_combination(p, rng, pool));
    return out;
}

std::vector<Element> random_homogeneous_elements(const Presentation& p, Rng& rng, int count,
                                                 int max_len) {
    std::map<int, std::vector<Word>> by_degree;
    for (Word& w : canonical_words(p, max_len)) {
        by_degree[word_degree(w)].push_back(std::move(w));
    }
    std::vector<int> degrees;
    degrees.reserve(by_degree.size());
    for (const auto& [d, words] : by_degree) degrees.push_back(d);
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        int d = degrees[static_cast<std::size_t>(rng.range(0, static_cast<int>(degrees.size()) - 1))];
        out.push_back(random_combination(p, rng, by_degree[d]));
    }
    return out;
}

std::vector<Element> first_order_grid(int max_coord_len) {
    const Presentation& G = presentation_gamma();
    std::vector<Element> out;
    for (const Word& u : canonical_words(presentation_A(), max_coord_len)) {
        for (Gen dv : {Gen::dx, Gen::dy}) {
            Word w = u;
            w.push_back(dv);
            out.push_back(Element::from_word(G, std::move(w)));
        }
    }
    return out;
}

} // namespace qplane

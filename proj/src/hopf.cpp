#include "qplane/hopf.hpp"

#include <stdexcept>
#include <string>

namespace qplane {

namespace {

QScalar qp(int k) { return QScalar::q_power(k); }

Element elem(const Presentation& p, std::vector<RawTerm> raw) {
    return normalize_terms(p, std::move(raw));
}

TensorElement tens(SlotPres left, SlotPres right,
                   std::vector<std::pair<QScalar, TensorKey>> terms) {
    TensorElement t({left, right});
    for (auto& [c, key] : terms) t.add_term(std::move(c), std::move(key));
    return t;
}

StructureMaps build_maps_A() {
    using enum Gen;
    const Presentation& A = presentation_A();
    StructureMaps m;
    m.algebra = &A;
    m.coproduct.emplace(x, tens(&A, &A, {{QScalar(1), {{x}, {x}}}}));
    m.coproduct.emplace(xi, tens(&A, &A, {{QScalar(1), {{xi}, {xi}}}}));
    m.coproduct.emplace(y, tens(&A, &A, {{QScalar(1), {{y}, {}}}, {QScalar(1), {{x}, {y}}}}));
    m.counit.emplace(x, QScalar(1));
    m.counit.emplace(xi, QScalar(1));
    m.counit.emplace(y, QScalar(0));
    m.antipode.emplace(x, elem(A, {{QScalar(1), {xi}}}));
    m.antipode.emplace(xi, elem(A, {{QScalar(1), {x}}}));
    m.antipode.emplace(y, elem(A, {{QScalar(-1), {xi, y}}}));
    return m;
}

StructureMaps build_maps_gamma() {
    using enum Gen;
    const Presentation& A = presentation_A();
    const Presentation& G = presentation_gamma();
    StructureMaps m;
    m.algebra = &G;
    m.coproduct.emplace(x, tens(&G, &G, {{QScalar(1), {{x}, {x}}}}));
    m.coproduct.emplace(xi, tens(&G, &G, {{QScalar(1), {{xi}, {xi}}}}));
    m.coproduct.emplace(y, tens(&G, &G, {{QScalar(1), {{y}, {}}}, {QScalar(1), {{x}, {y}}}}));
    m.coproduct.emplace(dx, tens(&G, &G, {{QScalar(1), {{dx}, {x}}}, {QScalar(1), {{x}, {dx}}}}));
    m.coproduct.emplace(dy, tens(&G, &G, {{QScalar(1), {{dy}, {}}},
                                          {QScalar(1), {{dx}, {y}}},
                                          {QScalar(1), {{x}, {dy}}}}));
    m.counit.emplace(x, QScalar(1));
    m.counit.emplace(xi, QScalar(1));
    m.counit.emplace(y, QScalar(0));
    m.counit.emplace(dx, QScalar(0));
    m.counit.emplace(dy, QScalar(0));
    m.antipode.emplace(x, elem(G, {{QScalar(1), {xi}}}));
    m.antipode.emplace(xi, elem(G, {{QScalar(1), {x}}}));
    m.antipode.emplace(y, elem(G, {{QScalar(-1), {xi, y}}}));
    m.antipode.emplace(dx, elem(G, {{-qp(1), {dx, xi, xi}}}));
    m.antipode.emplace(dy, elem(G, {{qp(1), {dx, xi, xi, y}}, {QScalar(-1), {dy, xi}}}));
    m.differential.emplace(x, elem(G, {{QScalar(1), {dx}}}));
    m.differential.emplace(y, elem(G, {{QScalar(1), {dy}}}));
    m.differential.emplace(xi, elem(G, {{-qp(1), {dx, xi, xi}}}));
    m.differential.emplace(dx, Element::zero(G));
    m.differential.emplace(dy, Element::zero(G));
    m.coaction_right.emplace(x, tens(&G, &A, {{QScalar(1), {{x}, {x}}}}));
    m.coaction_right.emplace(xi, tens(&G, &A, {{QScalar(1), {{xi}, {xi}}}}));
    m.coaction_right.emplace(y, tens(&G, &A, {{QScalar(1), {{y}, {}}},
                                              {QScalar(1), {{x}, {y}}}}));
    m.coaction_right.emplace(dx, tens(&G, &A, {{QScalar(1), {{dx}, {x}}}}));
    m.coaction_right.emplace(dy, tens(&G, &A, {{QScalar(1), {{dy}, {}}},
                                               {QScalar(1), {{dx}, {y}}}}));
    m.coaction_left.emplace(x, tens(&A, &G, {{QScalar(1), {{x}, {x}}}}));
    m.coaction_left.emplace(xi, tens(&A, &G, {{QScalar(1), {{xi}, {xi}}}}));
    m.coaction_left.emplace(y, tens(&A, &G, {{QScalar(1), {{y}, {}}},
                                             {QScalar(1), {{x}, {y}}}}));
    m.coaction_left.emplace(dx, tens(&A, &G, {{QScalar(1), {{x}, {dx}}}}));
    m.coaction_left.emplace(dy, tens(&A, &G, {{QScalar(1), {{x}, {dy}}}}));
    return m;
}

StructureMaps build_maps_omega() {
    using enum Gen;
    const Presentation& O = presentation_omega();
    StructureMaps m;
    m.algebra = &O;
    m.coproduct.emplace(x, tens(&O, &O, {{QScalar(1), {{x}, {x}}}}));
    m.coproduct.emplace(xi, tens(&O, &O, {{QScalar(1), {{xi}, {xi}}}}));
    m.coproduct.emplace(y, tens(&O, &O, {{QScalar(1), {{y}, {}}}, {QScalar(1), {{x}, {y}}}}));
    m.coproduct.emplace(theta, tens(&O, &O, {{QScalar(1), {{theta}, {}}},
                                             {QScalar(1), {{}, {theta}}}}));
    m.coproduct.emplace(phi, tens(&O, &O, {{QScalar(1), {{phi}, {}}},
                                           {QScalar(1), {{x}, {phi}}},
                                           {QScalar(-1), {{y}, {theta}}}}));
    m.counit.emplace(x, QScalar(1));
    m.counit.emplace(xi, QScalar(1));
    m.counit.emplace(y, QScalar(0));
    m.counit.emplace(theta, QScalar(0));
    m.counit.emplace(phi, QScalar(0));
    m.antipode.emplace(x, elem(O, {{QScalar(1), {xi}}}));
    m.antipode.emplace(xi, elem(O, {{QScalar(1), {x}}}));
    m.antipode.emplace(y, elem(O, {{QScalar(-1), {xi, y}}}));
    m.antipode.emplace(theta, elem(O, {{QScalar(-1), {theta}}}));
    m.antipode.emplace(phi, elem(O, {{-qp(-1), {phi, xi}}, {QScalar(-1), {theta, xi, y}}}));
    return m;
}

StructureMaps build_maps_borel() {
    using enum Gen;
    const Presentation& B = presentation_borel();
    StructureMaps m;
    m.algebra = &B;
    m.coproduct.emplace(K, tens(&B, &B, {{QScalar(1), {{K}, {K}}}}));
    m.coproduct.emplace(Ki, tens(&B, &B, {{QScalar(1), {{Ki}, {Ki}}}}));
    m.coproduct.emplace(X, tens(&B, &B, {{QScalar(1), {{X}, {}}}, {QScalar(1), {{K}, {X}}}}));
    m.counit.emplace(K, QScalar(1));
    m.counit.emplace(Ki, QScalar(1));
    m.counit.emplace(X, QScalar(0));
    m.antipode.emplace(K, elem(B, {{QScalar(1), {Ki}}}));
    m.antipode.emplace(Ki, elem(B, {{QScalar(1), {K}}}));
    m.antipode.emplace(X, elem(B, {{QScalar(-1), {Ki, X}}}));
    return m;
}

template <typename T>
const T& image_for(const std::map<Gen, T>& table, Gen g, const char* map_name) {
    auto it = table.find(g);
    if (it == table.end()) {
        throw std::invalid_argument(std::string(map_name) + " is not defined on generator " +
                                    gen_name(g));
    }
    return it->second;
}

} // namespace

const StructureMaps& maps_A() {
    static const StructureMaps m = build_maps_A();
    return m;
}

const StructureMaps& maps_gamma() {
    static const StructureMaps m = build_maps_gamma();
    return m;
}

const StructureMaps& maps_omega() {
    static const StructureMaps m = build_maps_omega();
    return m;
}

const StructureMaps& maps_borel() {
    static const StructureMaps m = build_maps_borel();
    return m;
}

const StructureMaps& structure_maps_for(const Presentation& p) {
    if (&p == &presentation_A()) return maps_A();
    if (&p == &presentation_gamma()) return maps_gamma();
    if (&p == &presentation_omega()) return maps_omega();
    if (&p == &presentation_borel()) return maps_borel();
    throw std::invalid_argument("no structure maps registered for presentation " + p.name());
}

TensorElement coproduct_on_word(const Presentation& p, const Word& w) {
    const StructureMaps& m = structure_maps_for(p);
    TensorElement acc = TensorElement::unit({&p, &p});
    for (Gen g : w) {
        acc = tensor_multiply(acc, image_for(m.coproduct, g, "coproduct"));
    }
    return acc;
}

TensorElement coproduct(const Element& e) {
    const Presentation& p = e.presentation();
    TensorElement out = TensorElement::zero({&p, &p});
    for (const auto& [w, c] : e.terms()) {
        out += c * coproduct_on_word(p, w);
    }
    return out;
}

QScalar counit_on_word(const Presentation& p, const Word& w) {
    const StructureMaps& m = structure_maps_for(p);
    QScalar acc(1);
    for (Gen g : w) {
        acc = acc * image_for(m.counit, g, "counit");
        if (acc.is_zero()) break;
    }
    return acc;
}

QScalar counit(const Element& e) {
    QScalar out;
    for (const auto& [w, c] : e.terms()) {
        out += c * counit_on_word(e.presentation(), w);
    }
    return out;
}

Element antipode_on_word(const Presentation& p, const Word& w, AntipodeSignRule rule) {
    const StructureMaps& m = structure_maps_for(p);
    Element acc = Element::unit(p);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        acc = multiply(acc, image_for(m.antipode, *it, "antipode"));
    }
    if (rule == AntipodeSignRule::graded) {
        int odd = 0;
        for (Gen g : w) odd += gen_degree(g) % 2;
        if ((odd * (odd - 1) / 2) % 2 != 0) acc = -acc;
    }
    return acc;
}

Element antipode(const Element& e, AntipodeSignRule rule) {
    Element out = Element::zero(e.presentation());
    for (const auto& [w, c] : e.terms()) {
        out += c * antipode_on_word(e.presentation(), w, rule);
    }
    return out;
}

Element differential_on_word(const Presentation& p, const Word& w) {
    if (&p != &presentation_A() && &p != &presentation_gamma()) {
        throw std::invalid_argument("the differential is defined on A and Gamma only");
    }
    const Presentation& G = presentation_gamma();
    const StructureMaps& m = maps_gamma();
    Element out = Element::zero(G);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Element& img = image_for(m.differential, w[i], "differential");
        if (img.is_zero()) continue;
        Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
        bool odd_prefix = word_degree(prefix) % 2 != 0;
        Element term = multiply(multiply(Element::from_word(G, std::move(prefix)), img),
                                Element::from_word(G, std::move(suffix)));
        out += odd_prefix ? -term : term;
    }
    return out;
}

Element differential(const Element& e) {
    Element out = Element::zero(presentation_gamma());
    for (const auto& [w, c] : e.terms()) {
        out += c * differential_on_word(e.presentation(), w);
    }
    return out;
}

namespace {

TensorElement coaction_on_word(const Element& e, bool right) {
    const Presentation& G = presentation_gamma();
    if (&e.presentation() != &G) {
        throw std::invalid_argument("coactions are defined on Gamma only");
    }
    const StructureMaps& m = maps_gamma();
    const Presentation& A = presentation_A();
    std::vector<SlotPres> slots =
        right ? std::vector<SlotPres>{&G, &A} : std::vector<SlotPres>{&A, &G};
    TensorElement out = TensorElement::zero(slots);
    for (const auto& [w, c] : e.terms()) {
        TensorElement acc = TensorElement::unit(slots);
        for (Gen g : w) {
            acc = tensor_multiply(acc, image_for(right ? m.coaction_right : m.coaction_left,
                                                 g, "coaction"));
        }
        out += c * acc;
    }
    return out;
}

} // namespace

TensorElement coaction_right(const Element& e) { return coaction_on_word(e, true); }

TensorElement coaction_left(const Element& e) { return coaction_on_word(e, false); }

Element embed_forms(const Element& e) {
    using enum Gen;
    if (&e.presentation() != &presentation_omega()) {
        throw std::invalid_argument("embed_forms is defined on Omega only");
    }
    const Presentation& G = presentation_gamma();
    static const std::map<Gen, Element> images = {
        {theta, elem(G, {{QScalar(1), {dx, xi}}})},
        {phi, elem(G, {{QScalar(1), {dy}}, {QScalar(-1), {dx, xi, y}}})},
        {x, elem(G, {{QScalar(1), {x}}})},
        {xi, elem(G, {{QScalar(1), {xi}}})},
        {y, elem(G, {{QScalar(1), {y}}})},
    };
    Element out = Element::zero(G);
    for (const auto& [w, c] : e.terms()) {
        Element acc = Element::unit(G);
        for (Gen g : w) acc = multiply(acc, images.at(g));
        out += c * acc;
    }
    return out;
}

namespace {

Gen rename_gen(Gen g) {
    switch (g) {
        case Gen::x: return Gen::K;
        case Gen::xi: return Gen::Ki;
        case Gen::y: return Gen::X;
        default:
            throw std::invalid_argument(std::string("borel_rename has no image for ") +
                                        gen_name(g));
    }
}

Word rename_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Gen g : w) out.push_back(rename_gen(g));
    return out;
}

} // namespace

Element borel_rename(const Element& e) {
    if (&e.presentation() != &presentation_A()) {
        throw std::invalid_argument("borel_rename is defined on A only");
    }
    std::vector<RawTerm> raw;
    raw.reserve(e.terms().size());
    for (const auto& [w, c] : e.terms()) raw.emplace_back(c, rename_word(w));
    return normalize_terms(presentation_borel(), std::move(raw));
}

TensorElement borel_rename(const TensorElement& t) {
    std::vector<SlotPres> slots;
    slots.reserve(t.slots().size());
    for (SlotPres p : t.slots()) {
        if (p == nullptr) {
            slots.push_back(nullptr);
        } else if (p == &presentation_A()) {
            slots.push_back(&presentation_borel());
        } else {
            throw std::invalid_argument("borel_rename expects tensor slots over A");
        }
    }
    TensorElement out(std::move(slots));
    for (const auto& [key, c] : t.terms()) {
        TensorKey nk;
        nk.reserve(key.size());
        for (const Word& w : key) nk.push_back(rename_word(w));
        out.add_term(c, std::move(nk));
    }
    return out;
}

SlotMap slot_identity() {
    SlotMap f;
    f.apply = [](const Presentation& p, const Word& w) {
        return SlotResult::of_element(Element::from_word(p, w));
    };
    f.shape = [](SlotPres p) { return std::vector<SlotPres>{p}; };
    return f;
}

SlotMap slot_coproduct() {
    SlotMap f;
    f.apply = [](const Presentation& p, const Word& w) {
        return SlotResult::of_tensor(coproduct_on_word(p, w));
    };
    f.shape = [](SlotPres p) { return std::vector<SlotPres>{p, p}; };
    return f;
}

SlotMap slot_counit() {
    SlotMap f;
    f.apply = [](const Presentation& p, const Word& w) {
        return SlotResult::of_scalar(counit_on_word(p, w));
    };
    f.shape = [](SlotPres) { return std::vector<SlotPres>{nullptr}; };
    return f;
}

SlotMap slot_antipode(AntipodeSignRule rule) {
    SlotMap f;
    f.apply = [rule](const Presentation& p, const Word& w) {
        return SlotResult::of_element(antipode_on_word(p, w, rule));
    };
    f.shape = [](SlotPres p) { return std::vector<SlotPres>{p}; };
    return f;
}

SlotMap slot_differential() {
    SlotMap f;
    f.apply = [](const Presentation& p, const Word& w) {
        return SlotResult::of_element(differential_on_word(p, w));
    };
    f.shape = [](SlotPres) { return std::vector<SlotPres>{&presentation_gamma()}; };
    f.degree = 1;
    return f;
}

SlotMap slot_coaction_right() {
    SlotMap f;
    f.apply = [](const Presentation& p, const Word& w) {
        return SlotResult::of_tensor(coaction_right(Element::from_word(p, w)));
    };
    f.shape = [](SlotPres) {
        return std::vector<SlotPres>{&presentation_gamma(), &presentation_A()};
    };
    return f;
}

SlotMap slot_coaction_left() {
    SlotMap f;
    f.apply = [](const Presentation& p, const Word& w) {
        return SlotResult::of_tensor(coaction_left(Element::from_word(p, w)));
    };
    f.shape = [](SlotPres) {
        return std::vector<SlotPres>{&presentation_A(), &presentation_gamma()};
    };
    return f;
}

ProbeResult antipode_inverse_probe(Gen g) {
    const Presentation& A = presentation_A();
    if (!A.contains(g)) {
        throw std::invalid_argument("the antipode inverse probe runs over generators of A");
    }
    Element target = Element::generator(A, g);
    Element s_img = antipode(target);
    std::optional<int> found;
    for (int k = -2; k <= 2; ++k) {
        Element candidate = scale(QScalar::q_power(k), s_img);
        if (antipode(candidate) == target) {
            if (found) {
                throw std::domain_error("antipode inverse probe found two exponents for " +
                                        std::string(gen_name(g)));
            }
            found = k;
        }
    }
    if (!found) {
        throw std::domain_error("antipode inverse probe found no exponent for " +
                                std::string(gen_name(g)));
    }
    return ProbeResult{g, *found, scale(QScalar::q_power(*found), s_img)};
}

} // namespace qplane

#include "qplane/suites.hpp"

#include "qplane/parser.hpp"
#include "qplane/tensor.hpp"
#include "qplane/version.hpp"

#include <stdexcept>
#include <utility>

namespace qplane {

namespace {

QScalar qp(int k) { return QScalar::q_power(k); }

void append(std::vector<AxiomCheck>& into, std::vector<AxiomCheck> more) {
    for (AxiomCheck& c : more) into.push_back(std::move(c));
}

std::vector<AxiomCheck> law_checks(const Presentation& p, const std::vector<Element>& set) {
    std::vector<AxiomCheck> out;
    out.push_back(verify_axiom("coassociativity", p, set));
    out.push_back(verify_axiom("counit-law", p, set));
    out.push_back(verify_axiom("antipode-law", p, set));
    return out;
}

std::vector<AxiomCheck> respect_checks(const Presentation& p) {
    std::vector<AxiomCheck> out;
    out.push_back(verify_axiom("coproduct-respects-relations", p, {}));
    out.push_back(verify_axiom("counit-respects-relations", p, {}));
    out.push_back(verify_axiom("antipode-respects-relations", p, {}));
    return out;
}

std::vector<InfoRecord> probe_records() {
    std::vector<InfoRecord> out;
    {
        ProbeResult p = antipode_inverse_probe(Gen::x);
        InfoRecord r;
        r.id = "A:antipode-inverse-probe-x";
        r.paper_eq = "(7)";
        r.detail = "unique exponent k with S(q^k*S(x)) = x certifies S^-1(x) = " +
                   render(p.inverse_image);
        r.derived = render(QScalar::q_power(p.q_exponent));
        r.stated = "1";
        r.agrees = r.derived == r.stated;
        out.push_back(std::move(r));
    }
    {
        ProbeResult p = antipode_inverse_probe(Gen::y);
        InfoRecord r;
        r.id = "A:antipode-inverse-probe-y";
        r.paper_eq = "(7)";
        r.detail = "unique exponent k with S(q^k*S(y)) = y certifies S^-1(y) = " +
                   render(p.inverse_image);
        r.derived = render(QScalar::q_power(p.q_exponent));
        r.stated = "q^-1";
        r.agrees = r.derived == r.stated;
        out.push_back(std::move(r));
    }
    return out;
}

AxiomCheck confluence_check(const Presentation& p, std::string id, std::string eq) {
    ConfluenceReport rep = check_local_confluence(p);
    AxiomCheck c;
    c.id = std::move(id);
    c.paper_eq = std::move(eq);
    c.instances = static_cast<int>(rep.pairs.size());
    c.failures = rep.divergent_count;
    if (rep.divergent_count > 0) {
        for (const CriticalPairResult& pair : rep.pairs) {
            if (pair.convergent) continue;
            c.witness = "overlap = " + render_word(pair.overlap) +
                        "; left = " + render(pair.left_normal_form) +
                        "; right = " + render(pair.right_normal_form);
            break;
        }
    }
    return c;
}

AxiomCheck negative_control_check() {
    Presentation corrupted = make_misderived_gamma();
    ConfluenceReport rep = check_local_confluence(corrupted);
    AxiomCheck c;
    c.id = "gamma:confluence-negative-control";
    c.paper_eq = "(15)-(16)";
    c.instances = static_cast<int>(rep.pairs.size());
    if (rep.divergent_count == 0) {
        c.failures = 1;
        c.witness = "the mis-derived rule table was not flagged: every critical pair converged";
    }
    return c;
}

AxiomCheck embedding_oracle_check() {
    const Presentation& O = presentation_omega();
    const Presentation& G = presentation_gamma();
    AxiomCheck c;
    c.id = "omega:embedding-oracle";
    c.paper_eq = "(35)";
    for (const RewriteRule& r : O.rules()) {
        ++c.instances;
        Element lhs = multiply(embed_forms(Element::generator(O, r.a)),
                               embed_forms(Element::generator(O, r.b)));
        Element rhs = Element::zero(G);
        for (const RuleTerm& t : r.rhs) {
            rhs += t.coeff * embed_forms(Element::from_word(O, t.word));
        }
        if (lhs != rhs) {
            ++c.failures;
            if (c.witness.empty()) {
                c.witness = "relation " + std::string(gen_name(r.a)) + "*" + gen_name(r.b) +
                            "; embedded left = " + render(lhs) + "; right = " + render(rhs);
            }
        }
    }
    return c;
}

AxiomCheck nilpotency_check() {
    const Presentation& O = presentation_omega();
    AxiomCheck c;
    c.id = "omega:coproduct-square-nilpotency";
    c.paper_eq = "(38)";
    for (Gen g : {Gen::theta, Gen::phi}) {
        ++c.instances;
        TensorElement d = coproduct(Element::generator(O, g));
        TensorElement sq = tensor_multiply(d, d);
        if (!sq.is_zero()) {
            ++c.failures;
            if (c.witness.empty()) {
                c.witness = std::string("delta(") + gen_name(g) + ")^2 = " + render(sq);
            }
        }
    }
    return c;
}

AxiomCheck structure_images_check() {
    using enum Gen;
    const Presentation& B = presentation_borel();
    const StructureMaps& m = maps_borel();
    AxiomCheck c;
    c.id = "borel:structure-images";
    c.paper_eq = "(46)";
    auto expect_tensor = [&](Gen g, const TensorElement& want) {
        ++c.instances;
        if (m.coproduct.at(g) != want) {
            ++c.failures;
            if (c.witness.empty()) {
                c.witness = std::string("delta(") + gen_name(g) + ") = " +
                            render(m.coproduct.at(g)) + "; expected " + render(want);
            }
        }
    };
    auto expect_scalar = [&](Gen g, const QScalar& want) {
        ++c.instances;
        if (m.counit.at(g) != want) {
            ++c.failures;
            if (c.witness.empty()) {
                c.witness = std::string("epsilon(") + gen_name(g) + ") = " +
                            render(m.counit.at(g)) + "; expected " + render(want);
            }
        }
    };
    auto expect_element = [&](Gen g, const Element& want) {
        ++c.instances;
        if (m.antipode.at(g) != want) {
            ++c.failures;
            if (c.witness.empty()) {
                c.witness = std::string("S(") + gen_name(g) + ") = " +
                            render(m.antipode.at(g)) + "; expected " + render(want);
            }
        }
    };
    TensorElement dK({&B, &B});
    dK.add_term(QScalar(1), {{K}, {K}});
    TensorElement dKi({&B, &B});
    dKi.add_term(QScalar(1), {{Ki}, {Ki}});
    TensorElement dX({&B, &B});
    dX.add_term(QScalar(1), {{X}, {}});
    dX.add_term(QScalar(1), {{K}, {X}});
    expect_tensor(K, dK);
    expect_tensor(Ki, dKi);
    expect_tensor(X, dX);
    expect_scalar(K, QScalar(1));
    expect_scalar(Ki, QScalar(1));
    expect_scalar(X, QScalar(0));
    expect_element(K, Element::generator(B, Ki));
    expect_element(Ki, Element::generator(B, K));
    expect_element(X, Element::from_word(B, {Ki, X}, QScalar(-1)));
    return c;
}

AxiomCheck rename_functoriality_check(int max_degree, Rng& rng) {
    const Presentation& A = presentation_A();
    AxiomCheck c;
    c.id = "borel:rename-functoriality";
    c.paper_eq = "(44)-(46)";
    std::vector<Element> set = coordinate_box_elements(2, 2);
    for (Element& e : random_elements(A, rng, 25, max_degree)) set.push_back(std::move(e));
    for (const Element& e : set) {
        ++c.instances;
        Element renamed = borel_rename(e);
        bool ok = coproduct(renamed) == borel_rename(coproduct(e)) &&
                  counit(renamed) == counit(e) &&
                  antipode(renamed) == borel_rename(antipode(e));
        if (!ok) {
            ++c.failures;
            if (c.witness.empty()) c.witness = "e = " + render(e);
        }
    }
    return c;
}

CheckReport base_report(std::string suite, std::string algebra, long long seed) {
    CheckReport r;
    r.suite = std::move(suite);
    r.algebra = std::move(algebra);
    r.seed = seed;
    r.version = kToolVersion;
    return r;
}

CheckReport suite_hopf_A(int max_degree, long long seed) {
    CheckReport r = base_report("hopf-A", "A", seed);
    const Presentation& A = presentation_A();
    Rng rng(static_cast<std::uint64_t>(seed));
    std::vector<Element> set = coordinate_box_elements(2, 4);
    for (Element& e : random_elements(A, rng, 50, max_degree)) set.push_back(std::move(e));
    append(r.checks, law_checks(A, set));
    append(r.checks, respect_checks(A));
    r.informational = probe_records();
    r.sort_records();
    return r;
}

CheckReport suite_diff_gamma(int max_degree, long long seed) {
    CheckReport r = base_report("diff-gamma", "gamma", seed);
    const Presentation& G = presentation_gamma();
    Rng rng(static_cast<std::uint64_t>(seed));
    std::vector<Element> set = basis_elements(G, 3);
    for (Element& e : random_elements(G, rng, 50, max_degree)) set.push_back(std::move(e));
    append(r.checks, law_checks(G, set));
    append(r.checks, respect_checks(G));
    r.checks.push_back(verify_axiom("d-squared-zero", G, basis_elements(G, max_degree)));
    r.checks.push_back(
        verify_axiom("graded-leibniz", G, random_homogeneous_elements(G, rng, 200, max_degree)));
    r.sort_records();
    return r;
}

CheckReport suite_bicovariance(int max_degree, long long seed) {
    CheckReport r = base_report("bicovariance", "gamma", seed);
    const Presentation& G = presentation_gamma();
    std::vector<Element> set = first_order_grid(1);
    for (Element& e : basis_elements(G, std::min(max_degree, 2))) set.push_back(std::move(e));
    r.checks.push_back(verify_axiom("right-comodule", G, set));
    r.checks.push_back(verify_axiom("left-comodule", G, set));
    r.checks.push_back(verify_axiom("bicomodule-compatibility", G, set));
    r.checks.push_back(verify_axiom("d-is-comodule-map", G, set));
    r.checks.push_back(verify_axiom("coaction-relation-invariance", G, {}));
    r.sort_records();
    return r;
}

CheckReport suite_forms(int max_degree, long long seed) {
    CheckReport r = base_report("forms", "omega", seed);
    const Presentation& O = presentation_omega();
    Rng rng(static_cast<std::uint64_t>(seed));
    std::vector<Element> set = basis_elements(O, 3);
    for (Element& e : random_elements(O, rng, 50, max_degree)) set.push_back(std::move(e));
    append(r.checks, law_checks(O, set));
    append(r.checks, respect_checks(O));
    r.checks.push_back(embedding_oracle_check());
    r.checks.push_back(nilpotency_check());
    r.sort_records();
    return r;
}

CheckReport suite_borel(int max_degree, long long seed) {
    CheckReport r = base_report("borel", "borel", seed);
    const Presentation& B = presentation_borel();
    Rng rng(static_cast<std::uint64_t>(seed));
    std::vector<Element> set = basis_elements(B, 3);
    for (Element& e : random_elements(B, rng, 50, max_degree)) set.push_back(std::move(e));
    append(r.checks, law_checks(B, set));
    append(r.checks, respect_checks(B));
    r.checks.push_back(structure_images_check());
    r.checks.push_back(rename_functoriality_check(max_degree, rng));
    r.sort_records();
    return r;
}

CheckReport suite_confluence(long long seed) {
    CheckReport r = base_report("confluence", "all", seed);
    r.checks.push_back(confluence_check(presentation_A(), "A:confluence", "(1)"));
    r.checks.push_back(confluence_check(presentation_gamma(), "gamma:confluence", "(15)-(16)"));
    r.checks.push_back(confluence_check(presentation_omega(), "omega:confluence", "(36)-(37)"));
    r.checks.push_back(confluence_check(presentation_borel(), "borel:confluence", "(46)"));
    r.checks.push_back(negative_control_check());
    r.sort_records();
    return r;
}

CheckReport suite_all(int max_degree, long long seed) {
    CheckReport r = base_report("all", "all", seed);
    for (const std::string& name :
         {"hopf-A", "diff-gamma", "bicovariance", "forms", "borel", "confluence"}) {
        CheckReport sub = run_suite(name, max_degree, seed);
        append(r.checks, std::move(sub.checks));
        for (InfoRecord& i : sub.informational) r.informational.push_back(std::move(i));
    }
    r.sort_records();
    return r;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "all", "hopf-A", "diff-gamma", "bicovariance", "forms", "borel", "confluence",
    };
    return names;
}

CheckReport run_suite(const std::string& suite, int max_degree, long long seed) {
    if (max_degree < 2) {
        throw std::invalid_argument("max_degree must be at least 2");
    }
    if (suite == "hopf-A") return suite_hopf_A(max_degree, seed);
    if (suite == "diff-gamma") return suite_diff_gamma(max_degree, seed);
    if (suite == "bicovariance") return suite_bicovariance(max_degree, seed);
    if (suite == "forms") return suite_forms(max_degree, seed);
    if (suite == "borel") return suite_borel(max_degree, seed);
    if (suite == "confluence") return suite_confluence(seed);
    if (suite == "all") return suite_all(max_degree, seed);
    throw std::invalid_argument("unknown suite: " + suite);
}

Presentation make_misderived_gamma() {
    Presentation good = make_presentation_gamma();
    std::vector<RewriteRule> rules = good.rules();
    bool patched = false;
    for (RewriteRule& r : rules) {
        if (r.a == Gen::y && r.b == Gen::xi) {
            r.rhs = {{qp(-1), {Gen::xi, Gen::y}}};
            patched = true;
        }
    }
    if (!patched) {
        throw std::logic_error("gamma rule table no longer carries a y.x^-1 rule");
    }
    return Presentation("gamma-misderived", good.generators(), std::move(rules),
                        good.inverse_pairs());
}

} // namespace qplane

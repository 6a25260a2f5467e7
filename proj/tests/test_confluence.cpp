#include "qplane/algebra.hpp"
#include "qplane/suites.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace qplane;

TEST_CASE("every shipped presentation is locally confluent") {
    for (const Presentation* p :
         {&presentation_A(), &presentation_gamma(), &presentation_omega(),
          &presentation_borel()}) {
        ConfluenceReport rep = check_local_confluence(*p);
        INFO("presentation ", rep.presentation);
        CHECK(rep.all_convergent());
        CHECK(rep.divergent_count == 0);
        CHECK_FALSE(rep.pairs.empty());
    }
}

TEST_CASE("critical pairs record both normal forms") {
    ConfluenceReport rep = check_local_confluence(presentation_A());
    for (const CriticalPairResult& pair : rep.pairs) {
        REQUIRE(pair.overlap.size() == 3);
        CHECK(pair.convergent);
        CHECK(pair.left_normal_form == pair.right_normal_form);
    }
}

TEST_CASE("the mis-derived calculus table is caught") {
    Presentation bad = make_misderived_gamma();
    ConfluenceReport rep = check_local_confluence(bad);
    CHECK(rep.divergent_count >= 1);
    bool found = false;
    for (const CriticalPairResult& pair : rep.pairs) {
        if (pair.convergent) continue;
        found = true;
        CHECK(pair.left_normal_form != pair.right_normal_form);
    }
    CHECK(found);
}

TEST_CASE("dropping the two-term tail still converges, so the control targets a coefficient") {
    // A corrupted table that merely truncates the y.dx rule to its first term
    // stays locally confluent: no overlap exercises the dropped summand, because
    // nothing rewrites *into* a y.dx factor. The negative control therefore
    // corrupts the y.x^-1 coefficient instead, which a length-3 overlap detects.
    std::vector<RewriteRule> rules = presentation_gamma().rules();
    for (RewriteRule& r : rules) {
        if (r.a == Gen::y && r.b == Gen::dx) {
            r.rhs = {{QScalar::q_power(-1), {Gen::dx, Gen::y}}};
        }
    }
    Presentation truncated("gamma-truncated", presentation_gamma().generators(), rules,
                           presentation_gamma().inverse_pairs());
    ConfluenceReport rep = check_local_confluence(truncated);
    CHECK(rep.all_convergent());
}

TEST_CASE("narrow overlap windows are rejected") {
    CHECK_THROWS_AS(check_local_confluence(presentation_A(), 2), std::invalid_argument);
}

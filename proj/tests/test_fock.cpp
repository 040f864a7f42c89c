#include "cfock/fock.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

using cfock::colour_of;
using cfock::Combination;
using cfock::Convention;
using cfock::coweight_d;
using cfock::coweight_h;
using cfock::Diagram;
using cfock::FockEngine;
using cfock::LaurentPoly;
using cfock::quantum_integer;
using cfock::Report;
using cfock::s_value;
using cfock::verify_relations;
using cfock::weight_of;

namespace {

Diagram example_y() { return Diagram(2, 0, {4, 2, 2, 1, 1}); }

LaurentPoly q_pow(long e) { return LaurentPoly::q_power(e); }

// deliberately wrong colouring: plain residue mod (n+1), which loses the
// +-symmetry of the real palindromic pattern
int asymmetric_colour(long c, int n) {
    long r = c % (2 * n);
    if (r < 0) r += 2 * n;
    return static_cast<int>(r % (n + 1));
}

bool relation_family_hit(const Report& report, const std::string& prefix) {
    for (const auto& f : report.failures)
        if (f.relation.rfind(prefix, 0) == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("combination container") {
    const Diagram one(2, 0, {1});
    Combination v(one);
    CHECK(v.size() == 1);
    CHECK(v.coeff(one) == LaurentPoly(1L));
    CHECK(v.coeff(Diagram(2, 0, {2})) == LaurentPoly());

    v.add_term(Diagram(2, 0, {2}), q_pow(3));
    v.add_term(one, LaurentPoly(-1L));
    CHECK(v.size() == 1);  // the coefficient of [1] cancelled away
    CHECK(v.coeff(one).is_zero());

    CHECK_THROWS_AS(v.add_term(Diagram(2, 1, {1}), LaurentPoly(1L)), std::invalid_argument);
    CHECK_THROWS_AS(v.add_term(Diagram(3, 0, {1}), LaurentPoly(1L)), std::invalid_argument);

    Combination w(2, 0);
    CHECK(w.is_zero());
    CHECK(w.str() == "0");
    w += v;
    w *= quantum_integer(2, 1);
    CHECK(w.coeff(Diagram(2, 0, {2})) == q_pow(4) + q_pow(2));
    w -= w;
    CHECK(w.is_zero());

    // canonical print order: [2] before [1,1]
    Combination both(Diagram(2, 0, {1, 1}), q_pow(-1));
    both.add_term(Diagram(2, 0, {2}), LaurentPoly(1L));
    CHECK(both.str() == "(1)*[0;2] + (q^-1)*[0;1,1]");
    CHECK(Combination(Diagram(2, 0, {1}), quantum_integer(2, 1)).str() == "(q + q^-1)*[0;1]");
}

TEST_CASE("site operators") {
    CHECK(cfock::e_site(Diagram(2, 0, {1}), 1, -1) == Diagram(2, 0));
    CHECK(cfock::e_site(example_y(), 5, -1) == Diagram(2, 0, {4, 2, 2, 1}));
    CHECK(cfock::f_site(Diagram(2, 0), 0, 0) == Diagram(2, 0, {1}));
    CHECK(cfock::f_site(Diagram(2, 0, {1}), 0, -1) == Diagram(2, 0, {2}));
    CHECK(cfock::f_site(example_y(), 1, -2) == Diagram(2, 0, {4, 3, 2, 1, 1}));

    CHECK_THROWS_AS(cfock::e_site(Diagram(2, 0), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(cfock::f_site(example_y(), 2, -2), std::invalid_argument);
}

TEST_CASE("exponent statistics") {
    // [1]: the concave 1-corner at (1,0) sees one concave 1-corner below
    CHECK(cfock::b_exponent(1, 1, 0, Diagram(2, 0, {1})) == -1);
    CHECK(cfock::b_exponent(1, 0, -1, Diagram(2, 0, {1})) == 0);
    // [2,1]: the convex 1-corner at (1,-2) sees one convex 1-corner above
    CHECK(cfock::a_exponent(1, 1, -2, Diagram(2, 0, {2, 1})) == -1);
    CHECK(cfock::a_exponent(1, 2, -1, Diagram(2, 0, {2, 1})) == 0);
    // a different colour sees a different corner set: the only 0-coloured
    // corner of [2,1] is concave at diagonal 0, above the site
    CHECK(cfock::a_exponent(0, 1, -2, Diagram(2, 0, {2, 1})) == 1);
}

TEST_CASE("raising and lowering: frozen actions") {
    const FockEngine upper{Convention::Upper, colour_of};
    const FockEngine lower{Convention::Lower, colour_of};
    const Combination one(Diagram(2, 0, {1}));

    Combination want_upper(Diagram(2, 0, {1, 1}), q_pow(-1));
    want_upper.add_term(Diagram(2, 0, {2}), LaurentPoly(1L));
    CHECK(upper.act_f(1, one) == want_upper);

    Combination want_lower(Diagram(2, 0, {1, 1}), LaurentPoly(1L));
    want_lower.add_term(Diagram(2, 0, {2}), q_pow(1));
    CHECK(lower.act_f(1, one) == want_lower);

    Combination want_e(Diagram(2, 0, {1, 1}), q_pow(-1));
    want_e.add_term(Diagram(2, 0, {2}), LaurentPoly(1L));
    CHECK(upper.act_e(1, Combination(Diagram(2, 0, {2, 1}))) == want_e);

    // no corner of the requested colour: the action is zero, not an error
    CHECK(upper.act_f(0, one).is_zero());
    CHECK(upper.act_e(2, one).is_zero());
    CHECK(upper.act_e(0, Combination(Diagram(2, 0))).is_zero());

    // linearity over a two-term input
    Combination mixed = one;
    mixed.add_term(Diagram(2, 0, {2}), q_pow(2));
    CHECK(upper.act_f(1, mixed) ==
          upper.act_f(1, one) + upper.act_f(1, Combination(Diagram(2, 0, {2}), q_pow(2))));
}

TEST_CASE("torus operators") {
    const FockEngine engine{Convention::Upper, colour_of};
    const Combination vac0(Diagram(2, 0));
    const Combination vac1(Diagram(2, 1));
    const Combination y(example_y());

    CHECK(engine.act_t(1, 1, vac1) == vac1 * q_pow(1));
    CHECK(engine.act_t(1, 1, vac0) == vac0);
    CHECK(engine.act_t(0, 1, vac0) == vac0 * q_pow(2));   // q_0 = q^2
    CHECK(engine.act_t(0, -1, vac0) == vac0 * q_pow(-2));
    CHECK(engine.act_t(1, 1, Combination(Diagram(2, 0, {1, 1}))) ==
          Combination(Diagram(2, 0, {1, 1})));
    CHECK(engine.act_t(2, 1, y) == y * q_pow(2));

    CHECK(engine.act_td(Combination(Diagram(2, 0, {1}))) ==
          Combination(Diagram(2, 0, {1})) * q_pow(-1));
    CHECK(engine.act_td(y) == y * q_pow(-3));  // three 0-coloured boxes
    CHECK(engine.act_td(vac1) == vac1);

    CHECK_THROWS_AS(engine.act_t(1, 0, vac0), std::invalid_argument);

    // q^h against the coweight basis
    CHECK(engine.act_qh(coweight_h(0, 2), vac0) == vac0 * q_pow(1));
    CHECK(engine.act_qh(coweight_d(2), Combination(Diagram(2, 0, {1}))) ==
          Combination(Diagram(2, 0, {1})) * q_pow(-1));
    CHECK(engine.act_qh(coweight_h(1, 2), y) == y);

    CHECK(engine.weight(example_y()) == weight_of(example_y()));
    CHECK(engine.weight(Diagram(2, 1)) == cfock::fundamental_weight(1, 2));
}

TEST_CASE("commutators") {
    for (const Convention conv : {Convention::Upper, Convention::Lower}) {
        const FockEngine engine{conv, colour_of};
        const Combination one(Diagram(2, 0, {1}));

        CHECK(engine.commutator_ef(1, 1, one) == one * quantum_integer(2, 1));
        CHECK(engine.commutator_ef(0, 0, one) == one * quantum_integer(-1, 2));
        CHECK(engine.commutator_ef(0, 1, one).is_zero());
        CHECK(engine.commutator_ef(1, 0, one).is_zero());
        CHECK(engine.commutator_ef(2, 1, one).is_zero());

        // i = j always returns the quantum integer of the weight pairing
        for (const Diagram& y : cfock::enumerate_diagrams(2, 2, 5))
            for (int i = 0; i <= 2; ++i) {
                const long pairing = coweight_h(i, 2).pair(weight_of(y));
                CHECK(engine.commutator_ef(i, i, Combination(y)) ==
                      Combination(y) * quantum_integer(pairing, s_value(i, 2)));
            }
    }
}

TEST_CASE("quantum Serre sums vanish") {
    const FockEngine engine{Convention::Upper, colour_of};
    const Combination y(Diagram(2, 0, {2, 1}));
    CHECK(engine.serre_sum(FockEngine::Gen::E, 0, 1, y).is_zero());
    CHECK(engine.serre_sum(FockEngine::Gen::F, 1, 0, y).is_zero());
    CHECK(engine.serre_sum(FockEngine::Gen::F, 2, 1, y).is_zero());
    CHECK_THROWS_AS(engine.serre_sum(FockEngine::Gen::E, 1, 1, y), std::invalid_argument);
}

TEST_CASE("relation suite passes at small scale") {
    const Report upper = verify_relations(2, 0, 4, Convention::Upper);
    CHECK(upper.ok());
    // 12 diagrams with <= 4 boxes; per diagram: 24 conjugation checks
    // (3 colours x 4 coweights x E/F), 7 torus cross-checks, 9 commutators,
    // 12 Serre sums
    CHECK(upper.checked == 624);

    CHECK(verify_relations(2, 0, 4, Convention::Lower).ok());
    CHECK(verify_relations(2, 2, 4, Convention::Upper).ok());
    CHECK(verify_relations(3, 1, 3, Convention::Lower).ok());
}

TEST_CASE("broken colouring is caught, and only where it should be") {
    // the conjugation identities hold for any colouring by construction;
    // the Serre family is what detects the damage
    const Report report = verify_relations(2, 0, 4, Convention::Upper, asymmetric_colour);
    CHECK(!report.ok());
    CHECK(relation_family_hit(report, "serre"));
    CHECK(!relation_family_hit(report, "conjugation"));
}

// The inequality layer: reports, pencil bounds, the b_10 elimination, ratio
// thresholds, the epsilon table, the two-branch check, effectivity of the
// pushed square, and the canonical pushforward. Also pins the shape of the
// verification suite's results.

#include <catch2/catch_amalgamated.hpp>

#include <mslope/curves.hpp>
#include <mslope/theorems.hpp>
#include <mslope/verification.hpp>

#include "test_support.hpp"

#include <array>
#include <utility>
#include <vector>

using namespace mslope;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("compare_verdict") {
    REQUIRE(compare_verdict(1, Relation::geq, 1) == Verdict::equality);
    REQUIRE(compare_verdict(2, Relation::geq, 1) == Verdict::pass);
    REQUIRE(compare_verdict(0, Relation::geq, 1) == Verdict::fail);
    REQUIRE(compare_verdict(1, Relation::leq, 2) == Verdict::pass);
    REQUIRE(compare_verdict(3, Relation::leq, 2) == Verdict::fail);
    REQUIRE(compare_verdict(1, Relation::eq, 1) == Verdict::pass);
    REQUIRE(compare_verdict(1, Relation::eq, 2) == Verdict::fail);
    REQUIRE(relation_tag(Relation::geq) == ">=");
    REQUIRE(verdict_tag(Verdict::equality) == "equality");
}

TEST_CASE("pencil inequality reports") {
    SECTION("sharp at the k3 divisor") {
        const CheckReport r1 = check_pencil_inequality(k3_divisor(), 1);
        REQUIRE(r1.verdict == Verdict::equality);
        REQUIRE(r1.left == Rational(5));
        const CheckReport r2 = check_pencil_inequality(k3_divisor(), 2);
        REQUIRE(r2.str() == "pencil-bound(i=2, g=10): 9 >= 9 — equality [pairing with B_2^10]");
        REQUIRE(r2.satisfied());
    }
    SECTION("sharp for brill-noether at i = 1, 2") {
        for (int g : {5, 7, 8, 9, 11}) {
            REQUIRE(check_pencil_inequality(brill_noether(g), 1).verdict == Verdict::equality);
            REQUIRE(check_pencil_inequality(brill_noether(g), 2).verdict == Verdict::equality);
        }
    }
    SECTION("verdict tracks the sign of the glued-pencil pairing") {
        for (int k = 0; k < 25; ++k) {
            const DivisorClass d = testsupport::random_unpointed(10);
            for (int i = 1; i <= 5; ++i) {
                const CheckReport rep = check_pencil_inequality(d, i);
                const Rational pairing = intersect(glued_pencil(i, 10), d);
                REQUIRE(rep.left - rep.right == pairing);
                REQUIRE(rep.satisfied() == (pairing >= Rational(0)));
                REQUIRE((rep.verdict == Verdict::equality) == (pairing == Rational(0)));
            }
        }
    }
    SECTION("argument validation") {
        const DivisorClass d = testsupport::random_unpointed(10);
        REQUIRE_THROWS_AS(check_pencil_inequality(d, 0), validation_error);
        REQUIRE_THROWS_AS(check_pencil_inequality(d, 12), validation_error);
        REQUIRE_THROWS_AS(check_pencil_inequality(d, 6), validation_error); // delta_6 absent at genus 10
        REQUIRE_THROWS_AS(check_pencil_inequality(k3_divisor(), 3), indeterminate_error);
        REQUIRE_THROWS_AS(check_pencil_inequality(PartialDivisorClass(Space::Mg1, 10), 1), validation_error);
    }
}

TEST_CASE("b10 derivation: recomputed forms and constants") {
    const B10Derivation d = derive_b10_bound();
    REQUIRE(d.alpha == Rational(45045, 631));
    REQUIRE(d.beta == Rational(6435, 631));
    REQUIRE(d.alpha == 7 * d.beta);
    REQUIRE((d.lambda_form == std::array<Rational, 4>{990, 0, 642, -6930}));
    REQUIRE((d.delta0_form == std::array<Rational, 4>{0, -990, -55, 990}));
    REQUIRE((d.m_lower_form == std::array<Rational, 3>{-11, 78, -1}));
    REQUIRE(d.assumptions.size() == 3);
}

TEST_CASE("b10 derivation: unit-tuple coefficients of the pushed product") {
    REQUIRE(pushed_w_e_coefficients(1, 0, 0, 0) == std::make_pair(Rational(990), Rational(0)));
    REQUIRE(pushed_w_e_coefficients(0, 1, 0, 0) == std::make_pair(Rational(0), Rational(-990)));
    REQUIRE(pushed_w_e_coefficients(0, 0, 1, 0) == std::make_pair(Rational(642), Rational(-55)));
    REQUIRE(pushed_w_e_coefficients(0, 0, 0, 1) == std::make_pair(Rational(-6930), Rational(990)));
}

TEST_CASE("corollary thresholds") {
    REQUIRE(corollary_threshold(1) == Rational(11));
    REQUIRE(corollary_threshold(2) == Rational(29, 3));
    REQUIRE(corollary_threshold(5) == Rational(47, 6));
    REQUIRE(corollary_threshold(9) == Rational(71, 10));
    REQUIRE(corollary_threshold(10) == Rational(44414, 6435));
    REQUIRE(corollary_threshold(10).decimal(4) == "6.9019");
    REQUIRE(corollary_threshold(11) == Rational(83, 12));
    SECTION("strictly decreasing through i = 10, then back up at 11") {
        for (int i = 1; i <= 9; ++i) REQUIRE(corollary_threshold(i + 1) < corollary_threshold(i));
        REQUIRE(corollary_threshold(11) > corollary_threshold(10));
    }
    REQUIRE_THROWS_AS(corollary_threshold(0), validation_error);
    REQUIRE_THROWS_AS(corollary_threshold(12), validation_error);
}

TEST_CASE("slope certificate") {
    SECTION("certifies the k3 divisor at slope 7") {
        const CheckReport rep = certify_slope_equals_a_over_b0(k3_divisor());
        REQUIRE(rep.str() ==
                "slope-certificate(g=10): 7 <= 47/6 — pass [binding threshold at i=5; on pass, slope = a/b_0 = 7]");
    }
    SECTION("honest: completing the class at the pencil bounds gives slope a/b_0") {
        DivisorClass full(10);
        full.lambda = 7;
        full.delta = {-1, -5, -9, -8, -7, -6};
        REQUIRE(slope(full).value() == Rational(7));
        for (int i = 3; i <= 5; ++i) REQUIRE(check_pencil_inequality(full, i).verdict == Verdict::equality);
    }
    SECTION("fails when the ratio exceeds the binding threshold") {
        PartialDivisorClass d(Space::Mg, 10);
        d.lambda = Coeff(8);
        d.delta[0] = Coeff(-1);
        for (int i = 1; i <= 5; ++i) d.delta[static_cast<size_t>(i)] = Coeff::unknown();
        const CheckReport rep = certify_slope_equals_a_over_b0(d);
        REQUIRE_FALSE(rep.satisfied());
        REQUIRE(rep.left == Rational(8));
    }
    SECTION("argument validation") {
        REQUIRE_THROWS_AS(certify_slope_equals_a_over_b0(testsupport::random_unpointed(24)), validation_error);
        DivisorClass bad(10);
        bad.lambda = -1;
        bad.delta[0] = -1;
        REQUIRE_THROWS_AS(certify_slope_equals_a_over_b0(bad), validation_error); // a <= 0
        DivisorClass bad2(10);
        bad2.lambda = 1;
        bad2.delta[0] = 1;
        REQUIRE_THROWS_AS(certify_slope_equals_a_over_b0(bad2), validation_error); // b_0 <= 0
    }
}

TEST_CASE("epsilon table") {
    const std::vector<EpsilonRow> rows = epsilon_table(3, 23);
    REQUIRE(rows.size() == 21);
    for (const EpsilonRow& r : rows) REQUIRE(r.epsilon > Rational(0));

    auto row = [&](int g) -> const EpsilonRow& { return rows[static_cast<size_t>(g - 3)]; };
    REQUIRE(row(3).source == UpperBoundSource::brill_noether);
    REQUIRE(row(3).u == Rational(9));
    REQUIRE(row(3).binding_i == 1);
    REQUIRE(row(3).threshold == Rational(11));
    REQUIRE(row(3).epsilon == Rational(2));

    REQUIRE(row(4).source == UpperBoundSource::petri);
    REQUIRE(row(4).u == Rational(17, 2));
    REQUIRE(row(4).epsilon == Rational(7, 6));

    REQUIRE(row(10).source == UpperBoundSource::petri);
    REQUIRE(row(10).u == Rational(36, 5));
    REQUIRE(row(10).binding_i == 5);
    REQUIRE(row(10).threshold == Rational(47, 6));
    REQUIRE(row(10).epsilon == Rational(19, 30));

    REQUIRE(row(12).source == UpperBoundSource::petri);
    REQUIRE(row(12).u == Rational(295, 42));
    REQUIRE(row(12).epsilon == Rational(23, 42));

    REQUIRE(row(20).source == UpperBoundSource::brill_noether);
    REQUIRE(row(20).u == Rational(46, 7));
    REQUIRE(row(20).binding_i == 10);
    REQUIRE(row(20).threshold == Rational(44414, 6435));
    REQUIRE(row(20).epsilon == Rational(14888, 45045));

    REQUIRE(row(22).source == UpperBoundSource::petri);
    REQUIRE(row(22).u == Rational(145, 22));

    REQUIRE(row(23).u == Rational(13, 2));
    REQUIRE(row(23).epsilon == Rational(5173, 12870));

    REQUIRE(upper_bound_source_tag(UpperBoundSource::petri) == "petri");
    REQUIRE_THROWS_AS(epsilon_table(2, 23), validation_error);
    REQUIRE_THROWS_AS(epsilon_table(3, 24), validation_error);
    REQUIRE_THROWS_AS(epsilon_table(10, 5), validation_error);
}

TEST_CASE("two-branch b10 check") {
    auto genus20 = [](long a, long b0, long b10) {
        DivisorClass d(20);
        d.lambda = a;
        d.delta[0] = -b0;
        d.delta[10] = -b10;
        return d;
    };
    SECTION("branch 2 equality at (7, 1, 0)") {
        const CheckReport rep = check_thm1b(genus20(7, 1, 0));
        REQUIRE(rep.str() ==
                "b10-two-branch(g=20): 0 >= 0 — equality [branch 2: elimination bound b_10 >= alpha b_0 - beta a]");
    }
    SECTION("branch 1 when the pencil bound already holds") {
        const CheckReport rep = check_thm1b(genus20(11, 1, 0));
        REQUIRE(rep.satisfied());
        REQUIRE(rep.witness == "branch 1: glued-pencil bound at i=10");
    }
    SECTION("branch 2 strictly") {
        const CheckReport rep = check_thm1b(genus20(0, 1, 72));
        REQUIRE(rep.verdict == Verdict::pass);
        REQUIRE(rep.witness == "branch 2: elimination bound b_10 >= alpha b_0 - beta a");
    }
    SECTION("failing both branches reports the easier bound") {
        const CheckReport rep = check_thm1b(genus20(0, 1, 70));
        REQUIRE_FALSE(rep.satisfied());
        REQUIRE(rep.witness == "fails both branches");
        REQUIRE(rep.right == Rational(45045, 631));
    }
    SECTION("argument validation") {
        REQUIRE_THROWS_AS(check_thm1b(testsupport::random_unpointed(19)), validation_error);
        REQUIRE_THROWS_AS(check_thm1b(PartialDivisorClass(Space::Mg1, 20)), validation_error);
    }
}

TEST_CASE("effectivity ratios of the pushed square") {
    const CheckReport rep = prop_effectivity_report(5);
    REQUIRE(rep.satisfied());
    REQUIRE(rep.left == Rational(15, 164));
    REQUIRE(rep.right == Rational(1, 8));
    REQUIRE(rep.witness == "binding: delta_0 ratio vs (g+1)/(6g+18)");
    for (int g : {8, 9, 14, 20, 24}) REQUIRE(prop_effectivity_report(g).satisfied());
    REQUIRE_THROWS_AS(prop_effectivity_report(3), validation_error);
    REQUIRE_THROWS_AS(prop_effectivity_report(4), validation_error);  // 5 prime: no comparison class
    REQUIRE_THROWS_AS(prop_effectivity_report(10), validation_error); // 11 prime: no comparison class
}

TEST_CASE("canonical-times-weierstrass pushforward") {
    const KodairaReport std3 = kodaira_slope_report(3, Convention::standard);
    REQUIRE(std3.pushed.str() == "380*lambda - 54*delta0 - 84*delta1");
    REQUIRE(std3.slope_value.value() == Rational(190, 27));
    REQUIRE(std3.published_slope == Rational(38, 9));
    REQUIRE(std3.lambda_match);
    const KodairaReport pub3 = kodaira_slope_report(3, Convention::published);
    REQUIRE(pub3.pushed.str() == "380*lambda - 6*delta0 - 84*delta1");
    REQUIRE(pub3.slope_value.value() == Rational(190, 3));
    REQUIRE(pub3.lambda_match);
    SECTION("lambda coefficient is the cubic under both conventions") {
        REQUIRE(kodaira_lambda_poly().str() == "13*g^3 + 6*g^2 - 9*g + 2");
        for (int g = 3; g <= 20; ++g)
            for (const Convention conv : {Convention::published, Convention::standard})
                REQUIRE(kodaira_slope_report(g, conv).lambda_match);
    }
    REQUIRE_THROWS_AS(kodaira_slope_report(2, Convention::standard), validation_error);
    REQUIRE_THROWS_AS(kodaira_slope_report(21, Convention::standard), validation_error);
}

TEST_CASE("verification criteria are wired") {
    REQUIRE_THROWS_AS(run_criterion(0), validation_error);
    REQUIRE_THROWS_AS(run_criterion(12), validation_error);
    const CriterionResult c2 = run_criterion(2);
    REQUIRE(c2.id == "projection-formula");
    REQUIRE_FALSE(c2.passed);
    REQUIRE(c2.details.size() == 6); // the even-genus middle self-pairs, g = 2, 4, ..., 12
    const std::vector<Discrepancy> ds = known_discrepancies();
    REQUIRE(ds.size() == 2);
    REQUIRE(ds[0].id == "threshold-i10-decimal");
    REQUIRE(ds[1].id == "canonical-pushforward-slope");
}

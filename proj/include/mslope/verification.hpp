#pragma once

// The one-shot verification suite: eleven numbered criteria, each an exact
// recomputation of a published figure or identity, plus the ledger of the two
// places where the recomputed value and the printed value disagree.
//
// Criterion 2 (degree-2 vanishing of pulled-back products) is expected to
// fail at exactly the six even-genus middle self-pairs delta_{g/2} x
// delta_{g/2}, g in {2, 4, 6, 8, 10, 12}: the rule-table entry
// delta_{g/2}^2 -> -delta_{g/2} (forced by the closed-form coefficients of
// criterion 3) and the projection formula pi_*(pi^*A.psi) = (2g-2)A (forced
// by criterion 1's psi rules) pin the middle pullback multiplier to 2, and
// then pi_*(pi^*(delta_{g/2})^2) = -4 delta_{g/2} + 2 delta_{g/2} != 0. No
// constant multiplier satisfies all three criteria at once; the suite keeps
// the identity as stated and reports the six failures rather than bending a
// rule to hide them.

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mslope/catalog.hpp"
#include "mslope/classes.hpp"
#include "mslope/curves.hpp"
#include "mslope/errors.hpp"
#include "mslope/genus_polynomial.hpp"
#include "mslope/pushpull.hpp"
#include "mslope/rational.hpp"
#include "mslope/theorems.hpp"

namespace mslope {

struct CriterionResult {
    int number = 0;
    std::string id;
    bool passed = false;
    std::string summary;               // one line, printed by verify-all
    std::vector<std::string> details;  // per-instance failures, if any
};

// A place where the recomputed value and the printed value disagree. Both
// sides are carried verbatim so reports can show them side by side.
struct Discrepancy {
    std::string id;
    std::string description;
    std::string computed;
    std::string printed;
};

namespace detail {

inline PointedDivisorClass unit_pointed(int g, const Basis& b) { return make_pointed(g, {{b, Rational(1)}}); }
inline DivisorClass unit_unpointed(int g, const Basis& b) { return make_unpointed(g, {{b, Rational(1)}}); }

inline void note_failure(CriterionResult& r, std::string what) {
    r.passed = false;
    r.details.push_back(std::move(what));
}

inline CriterionResult finish(CriterionResult r, std::string pass_summary) {
    if (r.passed) {
        r.summary = std::move(pass_summary);
    } else {
        r.summary = std::to_string(r.details.size()) + " identity failure(s); first: " + r.details.front();
    }
    return r;
}

} // namespace detail

// 1. The ten push rules hold as engine identities for g = 2..12, in both
// argument orders, compared against independently constructed expectations.
inline CriterionResult check_rule_table_identities() {
    CriterionResult r{1, "push-rule-table", true, "", {}};
    for (int g = 2; g <= 12; ++g) {
        const auto basis = basis_of(Space::Mg1, g);
        auto expected = [&](const Basis& x, const Basis& y) {
            DivisorClass e(g);
            using K = Basis::Kind;
            const Basis* a = &x;
            const Basis* b = &y;
            auto rank = [](const Basis& v) { return v.kind == K::lambda ? 0 : v.kind == K::psi ? 1 : 2 + v.index; };
            if (rank(*a) > rank(*b)) std::swap(a, b);
            if (a->kind == K::lambda && b->kind == K::psi) e.lambda = 2 * g - 2;
            else if (a->kind == K::psi && b->kind == K::psi) {
                e.lambda = 12;
                for (auto& c : e.delta) c = -1;
            } else if (a->kind == K::psi && b->kind == K::delta) {
                const int i = b->index;
                e.delta[static_cast<size_t>(std::min(i, g - i))] = (i == 0) ? 2 * g - 2 : 2 * i - 1;
            } else if (a->kind == K::delta && b->kind == K::delta && a->index >= 1 && b->index >= 1) {
                const int i = std::min(a->index, b->index);
                const int j = std::max(a->index, b->index);
                if (i == j) e.delta[static_cast<size_t>(std::min(i, g - i))] = -1;
                else if (i + j == g) e.delta[static_cast<size_t>(i)] = 1;
            }
            return e; // lambda^2, lambda.delta_i, delta_0.delta_i, split pairs: zero
        };
        for (const Basis& x : basis)
            for (const Basis& y : basis) {
                const DivisorClass got = push_quadratic(detail::unit_pointed(g, x), detail::unit_pointed(g, y));
                if (!(got == expected(x, y)))
                    detail::note_failure(r, "g=" + std::to_string(g) + ": push(" + x.str() + "." + y.str() + ") = " +
                                                got.str());
            }
    }
    return detail::finish(std::move(r), "all ten push rules hold for g = 2..12, both argument orders");
}

// 2. Degree-2 projection-formula identities for g = 2..12: the psi half
// pi_*(pi^*A.psi) = (2g-2)A holds everywhere; the vanishing half
// pi_*(pi^*A.pi^*B) = 0 fails at the six even-genus middle self-pairs (see
// the header comment) and nowhere else.
inline CriterionResult check_projection_formula() {
    CriterionResult r{2, "projection-formula", true, "", {}};
    int checked = 0;
    for (int g = 2; g <= 12; ++g) {
        const PointedDivisorClass psi_unit = detail::unit_pointed(g, Basis::psi());
        const auto basis = basis_of(Space::Mg, g);
        for (const Basis& a : basis) {
            const DivisorClass ua = detail::unit_unpointed(g, a);
            const PointedDivisorClass pa = pull_forgetful(ua);
            ++checked;
            if (!(push_quadratic(pa, psi_unit) == (2 * g - 2) * ua))
                detail::note_failure(r, "g=" + std::to_string(g) + ": push(pull(" + a.str() + ").psi) != " +
                                            std::to_string(2 * g - 2) + "*" + a.str());
            for (const Basis& b : basis) {
                const DivisorClass prod = push_quadratic(pa, pull_forgetful(detail::unit_unpointed(g, b)));
                ++checked;
                if (!(prod == DivisorClass(g)))
                    detail::note_failure(r, "g=" + std::to_string(g) + ": push(pull(" + a.str() + ").pull(" + b.str() +
                                                ")) = " + prod.str());
            }
        }
    }
    if (r.passed) {
        r.summary = "all " + std::to_string(checked) + " projection-formula identities hold for g = 2..12";
    } else {
        r.summary = std::to_string(r.details.size()) + " of " + std::to_string(checked) +
                    " identities fail (the even-genus middle self-pairs; documented rule-table obstruction)";
    }
    return r;
}

// 3. The closed-form coefficients of pi_*(W^2) match the engine for
// g = 2..30, including the two literal spot values at g = 2 and g = 4.
inline CriterionResult check_pushed_square_closed_forms() {
    CriterionResult r{3, "pushed-square-closed-forms", true, "", {}};
    for (int g = 2; g <= 30; ++g) {
        const PointedDivisorClass w = weierstrass(g);
        const DivisorClass engine = push_quadratic(w, w);
        const DivisorClass closed = pushed_weierstrass_square_closed(g);
        if (!(engine == closed))
            detail::note_failure(r, "g=" + std::to_string(g) + ": engine " + engine.str() + " vs closed " +
                                        closed.str());
    }
    const DivisorClass g2 = pushed_weierstrass_square_closed(2);
    if (g2.str() != "96*lambda - 9*delta0 - 16*delta1")
        detail::note_failure(r, "g=2 literal: " + g2.str());
    const DivisorClass g4 = pushed_weierstrass_square_closed(4);
    if (g4.str() != "1080*lambda - 100*delta0 - 345*delta1 - 289*delta2")
        detail::note_failure(r, "g=4 literal: " + g4.str());
    return detail::finish(std::move(r), "closed forms equal the engine pushforward for g = 2..30");
}

// 4. The recomputed lambda- and delta_0-coefficients of pi_*(W.E) agree with
// the display forms 642 b_10 + 990(a - 7m) and -55(b_10 + 18(b_0 - m)) at
// five generic rational tuples.
inline CriterionResult check_display_linear_forms() {
    CriterionResult r{4, "b10-display-forms", true, "", {}};
    const std::array<std::array<Rational, 4>, 5> tuples{{
        {Rational(5, 3), Rational(7, 2), Rational(-11, 4), Rational(13, 6)},
        {Rational(-1, 2), Rational(3, 5), Rational(8, 7), Rational(-9, 11)},
        {Rational(22, 7), Rational(-355, 113), Rational(2, 3), Rational(5, 8)},
        {Rational(0), Rational(1, 9), Rational(-7, 5), Rational(4, 3)},
        {Rational(17, 13), Rational(19, 23), Rational(29, 31), Rational(-37, 41)},
    }};
    for (const auto& t : tuples) {
        const Rational &a = t[0], &b0 = t[1], &b10 = t[2], &m = t[3];
        const auto [l, d0] = pushed_w_e_coefficients(a, b0, b10, m);
        const Rational l_display = 642 * b10 + 990 * (a - 7 * m);
        const Rational d0_display = -55 * (b10 + 18 * (b0 - m));
        if (l != l_display)
            detail::note_failure(r, "lambda form at (" + a.str() + ", " + b0.str() + ", " + b10.str() + ", " +
                                        m.str() + "): engine " + l.str() + " vs display " + l_display.str());
        if (d0 != d0_display)
            detail::note_failure(r, "delta_0 form at (" + a.str() + ", " + b0.str() + ", " + b10.str() + ", " +
                                        m.str() + "): engine " + d0.str() + " vs display " + d0_display.str());
    }
    return detail::finish(std::move(r), "display linear forms match the engine at 5 generic tuples");
}

// 5. The eliminated bound constants are exactly (45045/631, 6435/631), and
// their 4-place decimal renderings are 71.3866 and 10.1980.
inline CriterionResult check_elimination_constants() {
    CriterionResult r{5, "b10-elimination-constants", true, "", {}};
    const B10Derivation d = derive_b10_bound();
    if (d.alpha != Rational(45045, 631)) detail::note_failure(r, "alpha = " + d.alpha.str() + ", expected 45045/631");
    if (d.beta != Rational(6435, 631)) detail::note_failure(r, "beta = " + d.beta.str() + ", expected 6435/631");
    if (d.alpha.decimal(4) != "71.3866") detail::note_failure(r, "alpha decimal = " + d.alpha.decimal(4));
    if (d.beta.decimal(4) != "10.1980") detail::note_failure(r, "beta decimal = " + d.beta.decimal(4));
    return detail::finish(std::move(r), "b_10 bound constants are 45045/631 (71.3866) and 6435/631 (10.1980)");
}

// 6. The slope-7 counterexample: the slope certificate passes for Kbar with
// ratio 7, the conjectured genus-10 bound 78/11 strictly exceeds 7, and the
// genus-10 K3 pencil pairs to -1 with Kbar.
inline CriterionResult check_counterexample() {
    CriterionResult r{6, "slope-counterexample", true, "", {}};
    const PartialDivisorClass k = k3_divisor();
    const CheckReport cert = certify_slope_equals_a_over_b0(k);
    if (!cert.satisfied() || cert.left != Rational(7))
        detail::note_failure(r, "slope certificate: " + cert.str());
    if (!(Rational(7) < Rational(78, 11))) detail::note_failure(r, "7 < 78/11 comparison failed");
    const Rational pairing = intersect(lefschetz_pencil(10), k);
    if (pairing != Rational(-1)) detail::note_failure(r, "B.Kbar = " + pairing.str() + ", expected -1");
    return detail::finish(std::move(r), "Kbar certified: slope 7, strictly below the conjectured 78/11; B.Kbar = -1");
}

// 7. Sharpness of the first two pencil inequalities for the Brill-Noether
// classes at g in {5, 7, 8, 9, 11} and for Kbar: all are exact equalities.
inline CriterionResult check_sharpness() {
    CriterionResult r{7, "pencil-sharpness", true, "", {}};
    auto expect_equality = [&](const CheckReport& rep, const std::string& label) {
        if (rep.verdict != Verdict::equality)
            detail::note_failure(r, label + ": " + rep.str());
    };
    for (int g : {5, 7, 8, 9, 11}) {
        const DivisorClass bn = brill_noether(g);
        expect_equality(check_pencil_inequality(bn, 1), "brill_noether(" + std::to_string(g) + "), i=1");
        expect_equality(check_pencil_inequality(bn, 2), "brill_noether(" + std::to_string(g) + "), i=2");
    }
    const PartialDivisorClass k = k3_divisor();
    expect_equality(check_pencil_inequality(k, 1), "k3_divisor, i=1");
    expect_equality(check_pencil_inequality(k, 2), "k3_divisor, i=2");
    return detail::finish(std::move(r), "pencil bounds sharp (equality) at i = 1, 2 for Brill-Noether and Kbar");
}

// 8. The slope-gap table: epsilon_g > 0 for every g in 3..23, the upper
// bound u_g stays below 69/10 for g in 20..23, and the ratio thresholds
// reproduce 71/10 (over i <= 9) and 83/12 (at i = 11).
inline CriterionResult check_epsilon_table() {
    CriterionResult r{8, "epsilon-table", true, "", {}};
    for (const EpsilonRow& row : epsilon_table(3, 23)) {
        if (!(row.epsilon > Rational(0)))
            detail::note_failure(r, "g=" + std::to_string(row.g) + ": epsilon = " + row.epsilon.str());
        if (row.g >= 20 && !(row.u < Rational(69, 10)))
            detail::note_failure(r, "g=" + std::to_string(row.g) + ": u = " + row.u.str() + " not < 69/10");
    }
    Rational min_through_9 = corollary_threshold(1);
    for (int i = 2; i <= 9; ++i) min_through_9 = std::min(min_through_9, corollary_threshold(i));
    if (min_through_9 != Rational(71, 10))
        detail::note_failure(r, "min threshold over i <= 9 is " + min_through_9.str() + ", expected 71/10");
    if (corollary_threshold(11) != Rational(83, 12))
        detail::note_failure(r, "threshold(11) = " + corollary_threshold(11).str() + ", expected 83/12");
    return detail::finish(std::move(r), "epsilon_g > 0 for g = 3..23; u_g < 69/10 for g >= 20; thresholds 71/10, 83/12");
}

// 9. Effectivity ratio conditions for the pushed Weierstrass square hold for
// every g in 4..30 with g+1 composite.
inline CriterionResult check_effectivity() {
    CriterionResult r{9, "pushed-square-effectivity", true, "", {}};
    for (int g = 4; g <= 30; ++g) {
        if (!detail::is_composite(g + 1)) continue;
        const CheckReport rep = prop_effectivity_report(g);
        if (!rep.satisfied()) detail::note_failure(r, rep.str());
    }
    return detail::finish(std::move(r), "effectivity ratios hold for all g in 4..30 with g+1 composite");
}

// 10. The lambda-coefficient of pi_*(K.W) equals 13g^3+6g^2-9g+2 for
// g = 3..20 under both delta_0 conventions. The full slope comparison is
// informational only — see the discrepancy ledger.
inline CriterionResult check_canonical_pushforward() {
    CriterionResult r{10, "canonical-pushforward-lambda", true, "", {}};
    for (int g = 3; g <= 20; ++g)
        for (const Convention conv : {Convention::published, Convention::standard}) {
            const KodairaReport rep = kodaira_slope_report(g, conv);
            if (!rep.lambda_match)
                detail::note_failure(r, "g=" + std::to_string(g) + ", " + convention_tag(conv) +
                                            ": lambda = " + rep.pushed.lambda.str() + " vs " +
                                            kodaira_lambda_poly().eval(g).str());
        }
    return detail::finish(std::move(r),
                          "lambda-coefficient matches 13g^3+6g^2-9g+2 for g = 3..20 under both conventions "
                          "(slope comparison informational; see discrepancy ledger)");
}

// The two places where a recomputed value disagrees with the printed one.
// Values are recomputed here, not pasted, so the ledger can never drift from
// the engine.
inline std::vector<Discrepancy> known_discrepancies() {
    std::vector<Discrepancy> out;

    const Rational t10 = corollary_threshold(10);
    out.push_back({"threshold-i10-decimal",
                   "ratio threshold guaranteeing b_10 >= b_0 (minimum of the two branch thresholds at i = 10)",
                   t10.str() + " = " + t10.decimal(4) + "...", "6.906..."});

    const KodairaReport std_conv = kodaira_slope_report(3, Convention::standard);
    const KodairaReport pub_conv = kodaira_slope_report(3, Convention::published);
    out.push_back({"canonical-pushforward-slope",
                   "slope of pi_*(K.W) at g = 3 vs the printed closed form 2(13g^3+6g^2-9g+2)/(g(g+1)(4g+3))",
                   std_conv.slope_value.str() + " (standard delta_0 convention) or " + pub_conv.slope_value.str() +
                       " (published-form convention)",
                   std_conv.published_slope.str()});
    return out;
}

// 11. The discrepancy ledger holds exactly the two documented entries, each
// carrying a live-recomputed value that genuinely differs from the printed
// one.
inline CriterionResult check_discrepancy_ledger() {
    CriterionResult r{11, "discrepancy-ledger", true, "", {}};
    const std::vector<Discrepancy> ds = known_discrepancies();
    if (ds.size() != 2) detail::note_failure(r, "ledger has " + std::to_string(ds.size()) + " entries, expected 2");

    const Rational t10 = corollary_threshold(10);
    if (t10 != Rational(44414, 6435)) detail::note_failure(r, "threshold(10) = " + t10.str());
    if (t10.decimal(3) == "6.906") detail::note_failure(r, "threshold(10) rounds to the printed 6.906 — no discrepancy");

    const KodairaReport rep = kodaira_slope_report(3, Convention::standard);
    const KodairaReport pub = kodaira_slope_report(3, Convention::published);
    if (rep.slope_value.is_infinite() || rep.slope_value.value() == rep.published_slope ||
        pub.slope_value.is_infinite() || pub.slope_value.value() == pub.published_slope)
        detail::note_failure(r, "canonical pushforward slope matches the printed formula — no discrepancy");
    for (const Discrepancy& d : ds)
        if (d.computed.empty() || d.printed.empty() || d.computed == d.printed)
            detail::note_failure(r, "entry " + d.id + " does not carry distinct computed/printed values");
    return detail::finish(std::move(r), "exactly 2 discrepancies on ledger, both live-recomputed and genuine");
}

inline CriterionResult run_criterion(int n) {
    switch (n) {
    case 1: return check_rule_table_identities();
    case 2: return check_projection_formula();
    case 3: return check_pushed_square_closed_forms();
    case 4: return check_display_linear_forms();
    case 5: return check_elimination_constants();
    case 6: return check_counterexample();
    case 7: return check_sharpness();
    case 8: return check_epsilon_table();
    case 9: return check_effectivity();
    case 10: return check_canonical_pushforward();
    case 11: return check_discrepancy_ledger();
    default: throw validation_error("run_criterion: no criterion number " + std::to_string(n));
    }
}

inline std::vector<CriterionResult> run_all_criteria() {
    std::vector<CriterionResult> out;
    for (int n = 1; n <= 11; ++n) out.push_back(run_criterion(n));
    return out;
}

} // namespace mslope

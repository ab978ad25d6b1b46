#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "gfd/ring.hpp"
#include "test_util.hpp"

using namespace gfd;
using gfd::testing::make_grid;
using gfd::testing::rel_close;

namespace {
const double kPi = std::acos(-1.0);

double exact_d(const Expr& f, double alpha, const WeightSpec& w, double t) {
    return gfd_derivative(f, Alpha(alpha), w, t, ExactReduction{});
}
}  // namespace

TEST_CASE("linearity holds and is tight") {
    const auto grid = make_grid(0.5, 5.0, 0.5);
    auto r = check_linearity(parse("t^2"), parse("sin(t)"), 2.0, -3.0, Alpha(0.5),
                             WeightSpec::one(), grid);
    CHECK(r.passed());
    CHECK(r.max_rel_residual <= 1e-12);

    auto zero = check_linearity(parse("t^2"), parse("sin(t)"), 0.0, 0.0, Alpha(0.5),
                                WeightSpec::one(), grid);
    CHECK(zero.passed());
    for (const auto& row : zero.rows) {
        CHECK(row.lhs == 0.0);
        CHECK(row.rhs == 0.0);
    }

    auto cancel = check_linearity(parse("exp(t)"), parse("exp(t)"), 1.0, -1.0, Alpha(0.7),
                                  WeightSpec::alpha_const(), grid);
    CHECK(cancel.passed());
    CHECK(cancel.max_abs_residual <= 1e-12);
}

TEST_CASE("product rule values match the hand expansion") {
    const auto grid = make_grid(0.5, 5.0, 0.5);
    auto r = check_leibniz(parse("t^2"), parse("sin(t)"), Alpha(0.5), WeightSpec::one(), grid);
    CHECK(r.passed());
    // at t = 2 both sides equal sqrt(2) (2*2*sin 2 + 4*cos 2)
    const double expected = std::sqrt(2.0) * (4.0 * std::sin(2.0) + 4.0 * std::cos(2.0));
    bool found = false;
    for (const auto& row : r.rows) {
        if (row.t == 2.0) {
            CHECK(row.lhs == doctest::Approx(expected).epsilon(1e-13));
            CHECK(row.rhs == doctest::Approx(expected).epsilon(1e-13));
            found = true;
        }
    }
    CHECK(found);

    // multiplying by the ring unity changes nothing
    auto unity = check_leibniz(parse("t^2+1"), Expr::constant(1.0), Alpha(0.4),
                               WeightSpec::alpha_const(), grid);
    CHECK(unity.passed());
    for (const auto& row : unity.rows)
        CHECK(row.lhs ==
              doctest::Approx(exact_d(parse("t^2+1"), 0.4, WeightSpec::alpha_const(), row.t)));

    auto sq = check_leibniz(parse("t"), parse("t"), Alpha(1.0), WeightSpec::one(), grid);
    CHECK(sq.passed());
    for (const auto& row : sq.rows) CHECK(row.lhs == doctest::Approx(2.0 * row.t));
}

TEST_CASE("quotient rule") {
    const auto grid = make_grid(1.0, 5.0, 1.0);
    auto r = check_quotient(parse("sin(t)"), parse("t"), Alpha(0.5), WeightSpec::alpha_const(),
                            grid);
    CHECK(r.passed());

    auto same = check_quotient(parse("exp(t)"), parse("exp(t)"), Alpha(0.5), WeightSpec::one(),
                               grid);
    CHECK(same.passed());
    for (const auto& row : same.rows) {
        CHECK(std::fabs(row.lhs) <= 1e-12);
        CHECK(std::fabs(row.rhs) <= 1e-12);
    }

    auto half = check_quotient(parse("t^3"), Expr::constant(2.0), Alpha(0.8), WeightSpec::one(),
                               grid);
    CHECK(half.passed());
    for (const auto& row : half.rows)
        CHECK(row.lhs ==
              doctest::Approx(0.5 * exact_d(parse("t^3"), 0.8, WeightSpec::one(), row.t)));

    // zero crossings of the denominator are excluded with a note
    auto excl = check_quotient(parse("t"), parse("sin(t)"), Alpha(0.5), WeightSpec::one(),
                               std::vector<double>{kPi});
    CHECK_FALSE(excl.notes.empty());
}

TEST_CASE("chain-rule audit: identity inner function collapses both readings") {
    const auto grid = make_grid(0.5, 3.0, 0.5);
    for (auto reading : {ChainReading::CompositeInT, ChainReading::OuterAtInner}) {
        auto r = check_chain(parse("x^2"), parse("t"), Alpha(0.6), WeightSpec::one(), grid,
                             reading);
        CHECK(r.verdict == Verdict::Audit);
        CHECK(r.max_abs_residual <= 1e-10);
    }
}

TEST_CASE("chain-rule audit at alpha = 1 quantifies both readings") {
    const auto grid = make_grid(0.5, 2.0, 0.5);
    const Expr f = parse("x^2"), g = parse("t^2");
    auto composite =
        check_chain(f, g, Alpha(1.0), WeightSpec::one(), grid, ChainReading::CompositeInT);
    for (const auto& row : composite.rows) {
        const double t = row.t;
        const double predicted = std::fabs(2.0 * t * t * 2.0 * t * (2.0 * t - 1.0));
        CHECK(row.abs_residual == doctest::Approx(predicted).epsilon(1e-12));
    }
    auto outer =
        check_chain(f, g, Alpha(1.0), WeightSpec::one(), grid, ChainReading::OuterAtInner);
    CHECK(outer.max_abs_residual <= 1e-10);
}

TEST_CASE("chain-rule audit on the generic fixture shows a real gap") {
    const std::vector<double> grid{2.0};
    auto r = check_chain(parse("x^2"), parse("t^2"), Alpha(0.5), WeightSpec::one(), grid,
                         ChainReading::OuterAtInner);
    CHECK(r.verdict == Verdict::Audit);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].lhs == doctest::Approx(4.0 * std::pow(2.0, 3.5)).epsilon(1e-13));
    CHECK(r.rows[0].rhs == doctest::Approx(64.0).epsilon(1e-13));
    CHECK(r.rows[0].abs_residual > 0.1);
}

TEST_CASE("composition-law audit") {
    const auto grid = make_grid(1.0, 2.0, 1.0);
    auto zero = check_composition_law(Expr::constant(3.0), Alpha(0.5), Alpha(0.5),
                                      WeightSpec::one(), grid);
    CHECK(zero.verdict == Verdict::Audit);
    for (const auto& row : zero.rows)
        if (row.property_id == "composition_law") CHECK(row.abs_residual == 0.0);

    // f = t at t = 1: left side 1, right side 1/2
    auto lin = check_composition_law(parse("t"), Alpha(0.5), Alpha(0.5), WeightSpec::one(),
                                     std::vector<double>{1.0});
    REQUIRE(lin.rows.size() == 2);
    CHECK(lin.rows[0].lhs == doctest::Approx(1.0));
    CHECK(lin.rows[0].rhs == doctest::Approx(0.5));
    CHECK(lin.rows[0].abs_residual == doctest::Approx(0.5));

    auto expo = check_composition_law(parse("exp(t)"), Alpha(0.5), Alpha(0.5), WeightSpec::one(),
                                      make_grid(1.0, 2.0, 1.0));
    CHECK(expo.verdict == Verdict::Audit);
    for (const auto& row : expo.rows)
        if (row.property_id == "composition_law") CHECK(row.abs_residual > 1e-6);
    bool has_structural_note = false;
    for (const auto& n : expo.notes)
        if (n.find("second derivative") != std::string::npos) has_structural_note = true;
    CHECK(has_structural_note);

    // orders summing above 1 route through the higher-order operator
    auto above = check_composition_law(parse("t^2"), Alpha(0.75), Alpha(0.75), WeightSpec::one(),
                                       std::vector<double>{1.0});
    CHECK(above.rows[0].lhs == doctest::Approx(2.0));  // t^(2-1.5) * 2 at t = 1
}

TEST_CASE("closed-form identity family") {
    const auto grid = make_grid(0.5, 5.0, 0.5);
    auto r = check_identities(Alpha(0.5), WeightSpec::alpha_const(), grid);
    CHECK(r.passed());
    CHECK(r.max_rel_residual <= 1e-10);

    {
        auto one_pt =
            check_identities(Alpha(0.5), WeightSpec::alpha_const(), std::vector<double>{3.0});
        REQUIRE(one_pt.rows.size() == 4);
        CHECK(one_pt.rows[0].property_id == "identity_power");
        CHECK(one_pt.rows[0].lhs == doctest::Approx(1.0).epsilon(1e-13));
    }
    {
        auto at4 = check_identities(Alpha(0.5), WeightSpec::one(), std::vector<double>{4.0});
        // sin identity: derivative equals cos(t^a/(a w)) = cos(4) at t = 4
        CHECK(at4.rows[1].property_id == "identity_sin");
        CHECK(at4.rows[1].lhs == doctest::Approx(std::cos(4.0)).epsilon(1e-13));
        CHECK(at4.rows[3].property_id == "identity_exp");
        CHECK(at4.rows[3].lhs == doctest::Approx(std::exp(4.0)).epsilon(1e-13));
    }
    {
        auto classical =
            check_identities(Alpha(1.0), WeightSpec::one(), std::vector<double>{0.7});
        CHECK(classical.rows[3].lhs == doctest::Approx(std::exp(0.7)).epsilon(1e-14));
    }

    CHECK_THROWS_AS(check_identities(Alpha(0.5), WeightSpec::power_t(), grid), WeightClassError);
}

TEST_CASE("vanishing-derivative witness") {
    auto w = find_rolle_witness(parse("(t-1)*(t-3)"), 1.0, 3.0, Alpha(0.5), WeightSpec::one());
    CHECK(std::fabs(w.c - 2.0) <= 1e-8);
    CHECK(std::fabs(w.achieved_value) <= 1e-9);
    CHECK(w.target_value == 0.0);

    auto flat = find_rolle_witness(Expr::constant(5.0), 1.0, 2.0, Alpha(0.5), WeightSpec::one());
    CHECK(flat.c == doctest::Approx(1.5));

    auto trig = find_rolle_witness(parse("sin(t)"), kPi / 4.0, 3.0 * kPi / 4.0, Alpha(0.3),
                                   WeightSpec::alpha_const());
    CHECK(std::fabs(trig.c - kPi / 2.0) <= 1e-8);

    CHECK_THROWS_AS(find_rolle_witness(parse("t"), 1.0, 2.0, Alpha(0.5), WeightSpec::one()),
                    ParameterError);
    CHECK_THROWS_AS(find_rolle_witness(parse("t"), -1.0, 2.0, Alpha(0.5), WeightSpec::one()),
                    ParameterError);
}

TEST_CASE("mean-value witness uses the corrected constant and audits the printed one") {
    auto w = find_mvt_witness(parse("t^2"), 1.0, 2.0, Alpha(0.5), WeightSpec::one());
    const double target = 1.5 / (std::sqrt(2.0) - 1.0);
    CHECK(w.corrected_target == doctest::Approx(target).epsilon(1e-14));
    CHECK(std::fabs(w.corrected.achieved_value - target) <= 1e-9);
    // analytic witness: 2 c^1.5 = K  =>  c = (K/2)^(2/3)
    const double c_analytic = std::pow(target / 2.0, 2.0 / 3.0);
    CHECK(std::fabs(w.corrected.c - c_analytic) <= 1e-9);
    CHECK(w.corrected.c > 1.0);
    CHECK(w.corrected.c < 2.0);

    CHECK(w.printed_target == doctest::Approx(1.5));
    CHECK_FALSE(w.printed_attainable);  // would need c = 0.75^(2/3) < 1
    CHECK(w.note.find("no witness") != std::string::npos);

    // linear f at alpha = 1: every point qualifies, midpoint returned
    auto lin = find_mvt_witness(parse("3*t"), 1.0, 2.0, Alpha(1.0), WeightSpec::one());
    CHECK(lin.corrected.c == doctest::Approx(1.5));
    CHECK(lin.printed_attainable);

    CHECK_THROWS_AS(find_mvt_witness(parse("t^2"), 1.0, 2.0, Alpha(0.5), WeightSpec::power_t()),
                    WeightClassError);
}

TEST_CASE("product rule fails above order one by an exact gap") {
    auto r1 = leibniz_counterexample_higher(Alpha(1.5), WeightSpec::one(), 1.0);
    CHECK(r1.passed());
    REQUIRE(r1.rows.size() == 1);
    CHECK(r1.rows[0].lhs == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r1.rows[0].rhs == 0.0);

    auto r4 = leibniz_counterexample_higher(Alpha(1.5), WeightSpec::one(), 4.0);
    CHECK(r4.rows[0].abs_residual == doctest::Approx(4.0).epsilon(1e-14));

    auto classical = leibniz_counterexample_higher(Alpha(2.0), WeightSpec::one(), 1.0);
    CHECK(classical.rows[0].abs_residual == doctest::Approx(2.0).epsilon(1e-14));

    // gap formula 2 w t^(ceil(alpha)-alpha) across random inputs
    ExprSampler sampler(31);
    for (int i = 0; i < 30; ++i) {
        const double a = sampler.uniform(1.01, 2.0);
        const double t = sampler.uniform(0.1, 5.0);
        const WeightSpec& w = (i % 2) ? WeightSpec::one() : WeightSpec::alpha_const();
        auto r = leibniz_counterexample_higher(Alpha(a), w, t);
        const double predicted = 2.0 * w(t, a) * std::pow(t, std::ceil(a) - a);
        CHECK(rel_close(r.rows[0].abs_residual, predicted, 1e-9));
        CHECK(r.passed());
    }

    CHECK_THROWS_AS(leibniz_counterexample_higher(Alpha(0.5), WeightSpec::one(), 1.0),
                    AlphaError);
}

TEST_CASE("ring axioms hold across seeded random pairs") {
    ExprSampler sampler(20240615);
    const auto grid = make_grid(0.5, 5.0, 0.5);
    const WeightSpec weights[] = {WeightSpec::one(), WeightSpec::alpha_const(),
                                  WeightSpec::power_t()};
    const auto nonvanishing = [&grid](const Expr& e) {
        double worst = 0.0;
        for (double t : grid) worst = std::max(worst, std::fabs(e.evaluate(Bindings{{"t", t}})));
        return worst > 1e-6;
    };
    for (int i = 0; i < 30; ++i) {
        const Expr f = sampler.safe_expr(3, "t");
        Expr g = sampler.safe_expr(3, "t");
        while (!nonvanishing(g)) g = sampler.safe_expr(3, "t");
        const double alpha = sampler.uniform(0.05, 1.0);
        const double a = sampler.uniform(-2.0, 2.0);
        const double b = sampler.uniform(-2.0, 2.0);
        const WeightSpec& w = weights[i % 3];
        CAPTURE(f.to_string());
        CAPTURE(g.to_string());
        CHECK(check_linearity(f, g, a, b, Alpha(alpha), w, grid).passed());
        CHECK(check_leibniz(f, g, Alpha(alpha), w, grid).passed());
        CHECK(check_quotient(f, g, Alpha(alpha), w, grid).passed());
    }
}

TEST_CASE("report serialization shape") {
    auto r = check_linearity(parse("t"), parse("t^2"), 1.0, 1.0, Alpha(0.5), WeightSpec::one(),
                             std::vector<double>{1.0, 2.0});
    std::ostringstream os;
    r.write_csv(os);
    const std::string csv = os.str();
    CHECK(csv.rfind("property_id,t,lhs,rhs,abs_residual\n", 0) == 0);
    CHECK(csv.find("linearity,1,") != std::string::npos);
    const std::string summary = r.summary_json();
    CHECK(summary.find("\"property_id\":\"linearity\"") != std::string::npos);
    CHECK(summary.find("\"verdict\":\"PASS\"") != std::string::npos);
    CHECK(summary.find("max_rel_residual") != std::string::npos);
}

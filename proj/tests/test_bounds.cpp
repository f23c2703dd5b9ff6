#include "cfdim/bounds.hpp"

#include "cfdim/determinant.hpp"
#include "paper_values.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <functional>
#include <vector>

using namespace cfdim;
using testutil::agrees_to;

namespace {
const PrecisionContext ctx(50);  // 125 working digits

const Real& s_minus() {
    static Real s(refvals::S_MINUS);
    return s;
}

const ContractionData& paper_disc() {
    static ContractionData cd = optimize_disc(DigitSet({1, 2}), ctx);
    return cd;
}
}  // namespace

TEST_CASE("hardy norms reproduce the published table") {
    ctx.activate();
    long nodes = 0;
    Real n0 = hardy_norm(0, s_minus(), paper_disc(), ctx, &nodes);
    CHECK(agrees_to(n0, refvals::HARDY_NORM[0], 50));
    CHECK(nodes >= 128);
    Real n10 = hardy_norm(10, s_minus(), paper_disc(), ctx);
    CHECK(agrees_to(n10, refvals::HARDY_NORM[10], 50));
}

TEST_CASE("hardy norm is stable at doubled node counts") {
    ctx.activate();
    const ContractionData& cd = paper_disc();
    long nodes = 0;
    Real base = hardy_norm(3, s_minus(), cd, ctx, &nodes);

    // The same boundary integrand, handed to the quadrature with every node
    // count doubled relative to the adaptive stopping point.
    const std::uint32_t k = 3;
    auto integrand = [&](const Real& t) {
        Complex g = cd.disc.center + cd.disc.radius * unit_circle(t);
        Complex total;
        for (std::uint32_t i : cd.digits.digits) {
            Complex shifted = Real(static_cast<int>(i)) + g;
            Complex v = 1 / shifted;
            v.re = (v.re - cd.disc.center) / cd.image_radius;
            v.im = v.im / cd.image_radius;
            total += pow_real(shifted, -2 * s_minus()) * pow_int(v, k);
        }
        return abs2(total);
    };
    QuadratureOptions opt;
    opt.initial_nodes = 2 * nodes;
    Real refined =
        pow(cd.ratio, static_cast<int>(k)) * sqrt(integrate_periodic(integrand, ctx, opt).value);
    CHECK(abs(base - refined) < ctx.epsilon(5));
}

TEST_CASE("norm table obeys the decay envelope") {
    ctx.activate();
    DigitSet A({1, 2});
    NormTable table = build_norm_table(A, paper_disc(), s_minus(), 20, ctx);
    REQUIRE(table.norms.size() == 21);
    Real envelope = table.constants.weight_sum;
    for (std::uint32_t k = 0; k <= 20; ++k) {
        CHECK(table.norms[k] > 0);
        CHECK(table.norms[k] <= envelope + ctx.epsilon(10));
        envelope *= paper_disc().ratio;
    }
    for (std::uint32_t k = 0; k <= 10; ++k)
        CHECK(agrees_to(table.norms[k], refvals::HARDY_NORM[k], 45));
}

TEST_CASE("approximation and Taylor bounds at N = 200 match the published values") {
    ctx.activate();
    DigitSet A({1, 2});
    // Shared across subcases; the N-tail correction relative to the published
    // N = 600 values is below h^(2N), far beyond the digits compared.
    static NormTable table = build_norm_table(A, paper_disc(), s_minus(), 200, ctx);
    static BoundLadder ladder = build_bound_ladder(table, 28, 150, ctx);

    SUBCASE("upper approximation bounds") {
        for (std::uint32_t n = 1; n <= 10; ++n) {
            ApproxBounds ab = approx_bounds(table, n);
            CHECK(ab.lower <= ab.upper);
            CHECK(agrees_to(ab.upper, refvals::ALPHA_PLUS[n - 1], 45));
        }
    }

    SUBCASE("ladder invariants and published beta values") {
        CHECK(ladder.beta_minus[0] == 1);
        CHECK(ladder.beta_plus[0] == 1);
        for (std::uint32_t n : {1u, 2u, 3u, 10u, 18u, 25u, 26u, 27u, 28u})
            CHECK(agrees_to(ladder.beta_plus[n], refvals::BETA_PLUS[n - 1], 25));
        for (std::uint32_t n = 1; n <= 28; ++n) {
            CHECK(ladder.alpha_minus[n] <= ladder.alpha_plus[n]);
            CHECK(ladder.beta_minus[n] <= ladder.beta_plus[n]);
            CHECK(ladder.alpha_plus[n] <=
                  ladder.j_const * pow(paper_disc().ratio, static_cast<int>(n)) +
                      ctx.epsilon(10));
        }
        for (std::uint32_t n = 2; n <= 150; ++n)
            CHECK(ladder.alpha_plus[n] <= ladder.alpha_plus[n - 1]);
    }

    SUBCASE("coefficients sit below the computed Taylor and Euler bounds") {
        OrbitTable orbits = build_orbit_table(A, 18, ctx);
        DetSeries series = det_series(orbits, 18, s_minus());
        Real k_s = table.constants.k_s;
        for (std::uint32_t n = 1; n <= 18; ++n) {
            CHECK(abs(series.coeffs[n]) <= ladder.beta_plus[n]);
            CHECK(abs(series.coeffs[n]) <= euler_bound(n, k_s, paper_disc().ratio));
        }
    }

    SUBCASE("beta enclosure tightens as the product lengthens") {
        std::vector<Real> widths;
        for (std::uint32_t m : {50u, 100u, 150u}) {
            BoundLadder l = build_bound_ladder(table, 20, m, ctx);
            widths.push_back(l.beta_plus[20] - l.beta_minus[20]);
        }
        CHECK(widths[1] < widths[0]);
        CHECK(widths[2] < widths[1]);
    }
}

TEST_CASE("euler factor: closed form against subset enumeration") {
    ctx.activate();
    // E_1(r) = r/(1-r); with K = 1, h = 1/2 the first bound is exactly 1.
    CHECK(abs(euler_bound(1, Real(1), Real("0.5")) - 1) < ctx.epsilon(5));

    // Brute-force sum of h^(i1+...+in) over increasing tuples bounded by 60
    // versus the closed form; the cut tail is far below the compared margin.
    Real h(refvals::DISC_RATIO);
    std::vector<Real> h_pow(61);
    h_pow[0] = 1;
    for (int i = 1; i <= 60; ++i) h_pow[i] = h_pow[i - 1] * h;
    for (std::uint32_t n = 1; n <= 4; ++n) {
        Real brute = 0;
        std::function<void(std::uint32_t, std::uint32_t, const Real&)> rec =
            [&](std::uint32_t depth, std::uint32_t start, const Real& partial) {
                if (depth == n) {
                    brute += partial;
                    return;
                }
                for (std::uint32_t i = start; i <= 60; ++i)
                    rec(depth + 1, i + 1, partial * h_pow[i]);
            };
        rec(0, 1, Real(1));
        Real closed = euler_factor(n, h);
        CHECK(abs(closed - brute) < closed * pow(h, 50));
    }

    CHECK_THROWS_AS(euler_bound(3, Real(1), Real(1)), std::invalid_argument);
    CHECK_THROWS_AS(euler_bound(0, Real(1), Real("0.5")), std::invalid_argument);
}

TEST_CASE("euler bounds reproduce the published rows") {
    ctx.activate();
    OperatorConstants oc = operator_constants(DigitSet({1, 2}), paper_disc(), s_minus());
    for (std::uint32_t n = 26; n <= 32; ++n)
        CHECK(agrees_to(euler_bound(n, oc.k_s, paper_disc().ratio),
                        refvals::EULER_BOUND[n - 26], 40));
}

TEST_CASE("parameter ordering is enforced") {
    ctx.activate();
    DigitSet A({1, 2});
    NormTable table = build_norm_table(A, paper_disc(), s_minus(), 30, ctx);
    CHECK_THROWS_AS(build_bound_ladder(table, 20, 10, ctx), std::invalid_argument);
    CHECK_THROWS_AS(build_bound_ladder(table, 10, 40, ctx), std::invalid_argument);
    CHECK_THROWS_AS(approx_bounds(table, 0), std::invalid_argument);
    CHECK_THROWS_AS(approx_bounds(table, 31), std::invalid_argument);
}

// Acceptance suite: one line per criterion, PASS / FAIL / SKIP, exit status =
// number of failures. Heavy optional work (the full 100-digit certification)
// runs only when CFDIM_FULL_SCALE=1; CFDIM_ACCEPTANCE_FAST=1 switches the
// first criterion to its period-18 fallback.

#include "cfdim/certify.hpp"

#include "paper_values.hpp"
#include "test_util.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace cfdim;
using testutil::agrees_to;
using testutil::digit_prefix;
using testutil::matches_printed;

namespace {

struct Outcome {
    enum State { PASS, FAIL, SKIP } state;
    std::string detail;
};

Outcome pass(std::string detail = "") { return {Outcome::PASS, std::move(detail)}; }
Outcome fail(std::string detail) { return {Outcome::FAIL, std::move(detail)}; }
Outcome skip(std::string detail) { return {Outcome::SKIP, std::move(detail)}; }

bool env_flag(const char* name) {
    const char* v = std::getenv(name);
    return v && std::string(v) == "1";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const DigitSet& set12() {
    static DigitSet A({1, 2});
    return A;
}

// Shared context for the table-reproduction criteria (3,4,5,6,7).
const PrecisionContext& table_ctx() {
    static PrecisionContext ctx(60);  // 140 working digits
    return ctx;
}

const ContractionData& shared_disc() {
    table_ctx().activate();
    static ContractionData cd = optimize_disc(set12(), table_ctx());
    return cd;
}

const NormTable& shared_norms() {
    table_ctx().activate();
    static NormTable table =
        build_norm_table(set12(), shared_disc(), Real(refvals::S_MINUS), 200, table_ctx());
    return table;
}

// --- criterion 1: Table 2 -------------------------------------------------

Outcome criterion1() {
    bool fast = env_flag("CFDIM_ACCEPTANCE_FAST");
    std::uint32_t period = fast ? 18 : 25;
    PrecisionContext ctx(150);  // 275 working digits carry delta_25 ~ 1e-130
    ctx.activate();

    for (std::uint32_t d = 1; d <= period; ++d) {
        // necklace-count oracle is checked against the built table below
        if (lyndon_count(2, d) <= 0) return fail("lyndon count nonpositive");
    }
    OrbitTable table = build_orbit_table(set12(), period, ctx);
    for (std::uint32_t d = 1; d <= period; ++d)
        if (BigInt(table.by_period[d - 1].size()) != lyndon_count(2, d))
            return fail("record count mismatch at period " + std::to_string(d));

    DetSeries series = det_series(table, period, Real(refvals::S_MINUS));
    for (std::uint32_t n = 1; n <= period; ++n) {
        if (!matches_printed(series.coeffs[n], refvals::DELTA[n - 1]))
            return fail("delta_" + std::to_string(n) + " does not match the published row");
    }
    return pass("delta_1.." + std::to_string(period) +
                (fast ? " (period-18 fallback)" : " at period 25") +
                ", every printed digit, counts match the necklace formula");
}

// --- criterion 2: Table 1 row 18 -------------------------------------------

Outcome criterion2() {
    auto start = std::chrono::steady_clock::now();
    PrecisionContext ctx(100);  // 200 working digits
    ctx.activate();
    OrbitTable table = build_orbit_table(set12(), 18, ctx);
    Real s18 = estimate_dimension(table, 18, ctx);
    double elapsed = seconds_since(start);
    if (!agrees_to(s18, refvals::DIM_ESTIMATE[0], 100))
        return fail("s_18 short of 100 digits");
    if (elapsed > 1800) return fail("runtime over 30 minutes");
    std::ostringstream os;
    os << "s_18 to >= 100 digits in " << static_cast<int>(elapsed) << "s";
    return pass(os.str());
}

// --- criterion 3: Table 3 ---------------------------------------------------

Outcome criterion3() {
    const NormTable& table = shared_norms();
    for (std::uint32_t k = 0; k <= 10; ++k) {
        if (!agrees_to(table.norms[k], refvals::HARDY_NORM[k], 40))
            return fail("norm k=" + std::to_string(k) + " short of 40 digits");
        if (table.node_counts[k] >= (1 << 20))
            return fail("node cap reached at k=" + std::to_string(k));
    }
    return pass("Hardy norms k=0..10 to >= 40 digits, all integrals converged");
}

// --- criterion 4: Table 4 ---------------------------------------------------

Outcome criterion4() {
    const NormTable& table = shared_norms();
    for (std::uint32_t n = 1; n <= 10; ++n) {
        ApproxBounds ab = approx_bounds(table, n);
        if (!agrees_to(ab.upper, refvals::ALPHA_PLUS[n - 1], 40))
            return fail("alpha_plus n=" + std::to_string(n) + " short of 40 digits");
    }
    return pass("alpha bounds n=1..10 to >= 40 digits with N=200");
}

// --- criterion 5: Table 5 ---------------------------------------------------

Outcome criterion5() {
    table_ctx().activate();
    OperatorConstants oc =
        operator_constants(set12(), shared_disc(), Real(refvals::S_MINUS));
    for (std::uint32_t n = 26; n <= 32; ++n) {
        if (!agrees_to(euler_bound(n, oc.k_s, shared_disc().ratio),
                       refvals::EULER_BOUND[n - 26], 30))
            return fail("Euler bound n=" + std::to_string(n) + " short of 30 digits");
    }
    Real tail = euler_tail(28, oc.k_s, shared_disc().ratio);
    if (!(tail <= Real("4e-109"))) return fail("euler_tail(28) above 4e-109");
    return pass("Euler bounds n=26..32 to >= 30 digits, tail(28) <= 4e-109");
}

// --- criterion 6: Table 6 ---------------------------------------------------

Outcome criterion6() {
    BoundLadder ladder = build_bound_ladder(shared_norms(), 28, 150, table_ctx());
    for (std::uint32_t n : {1u, 2u, 10u, 26u, 27u, 28u}) {
        if (!agrees_to(ladder.beta_plus[n], refvals::BETA_PLUS[n - 1], 20))
            return fail("beta_plus n=" + std::to_string(n) + " short of 20 digits");
    }
    return pass("Taylor bounds n in {1,2,10,26,27,28} to >= 20 digits with M=150, N=200");
}

// --- criterion 7: disc constants ---------------------------------------------

Outcome criterion7() {
    const ContractionData& cd = shared_disc();
    if (!agrees_to(cd.disc.center, refvals::DISC_CENTER, 60)) return fail("center");
    if (!agrees_to(cd.disc.radius, refvals::DISC_RADIUS, 60)) return fail("radius");
    if (!agrees_to(cd.image_radius, refvals::DISC_IMAGE_RADIUS, 60))
        return fail("image radius");
    if (!agrees_to(cd.ratio, refvals::DISC_RATIO, 60)) return fail("contraction ratio");
    Real poly = 0;
    for (int coef : refvals::CENTER_POLY) poly = poly * cd.disc.center + coef;
    if (!(abs(poly) < pow(Real(10), -100))) return fail("polynomial residual over 1e-100");
    return pass("c, rho, rho', h to >= 60 digits; degree-7 residual < 1e-100");
}

// --- criterion 8: desk certification -----------------------------------------

Outcome criterion8() {
    auto start = std::chrono::steady_clock::now();
    PrecisionContext ctx(50);  // 125 working digits
    ctx.activate();
    Certificate cert = certify_dimension(set12(), 50, CertifyParams{18, 24, 150, 200}, ctx);
    double elapsed = seconds_since(start);
    if (!cert.verdict) return fail("verdict false");
    if (elapsed > 3600) return fail("runtime over 1 hour");

    // Digits pinned by the interval must prefix the published expansion.
    std::string lo = digit_prefix(cert.lower.s, 60), hi = digit_prefix(cert.upper.s, 60);
    std::string pinned;
    for (std::size_t i = 0; i < lo.size() && i < hi.size() && lo[i] == hi[i]; ++i)
        pinned.push_back(lo[i]);
    if (pinned.size() < 50) return fail("interval pins fewer than 50 digits");
    if (digit_prefix(refvals::DIM_E2, pinned.size()) != pinned)
        return fail("pinned digits disagree with the published value");
    std::ostringstream os;
    os << "verdict true, " << pinned.size() << " digits pinned, "
       << static_cast<int>(elapsed) << "s";
    return pass(os.str());
}

// --- criterion 9: full-scale certification (optional stretch) ---------------

Outcome criterion9() {
    if (!env_flag("CFDIM_FULL_SCALE"))
        return skip("stretch criterion; set CFDIM_FULL_SCALE=1 to run (~hours)");
    auto start = std::chrono::steady_clock::now();
    PrecisionContext ctx(100);  // 200 working digits
    ctx.activate();
    Certificate cert =
        certify_dimension(set12(), 100, CertifyParams{25, 28, 400, 600}, ctx);
    double elapsed = seconds_since(start);
    if (!cert.verdict) return fail("verdict false");
    if (cert.lower.s != refvals::S_MINUS) return fail("s_minus differs from the published endpoint");
    if (cert.upper.s != refvals::S_PLUS) return fail("s_plus differs from the published endpoint");
    if (elapsed > 86400) return fail("runtime over 24 hours");
    std::ostringstream os;
    os << "endpoints match the published 100-digit interval exactly, "
       << static_cast<int>(elapsed) << "s";
    return pass(os.str());
}

// --- criterion 10: soundness property suite ----------------------------------

Outcome criterion10() {
    PrecisionContext ctx(40);  // 110 working digits
    ctx.activate();
    const DigitSet& A = set12();
    OrbitTable table = build_orbit_table(A, 12, ctx);
    ContractionData cd = optimize_disc(A, ctx);

    std::mt19937 rng(20260809);
    auto random_s = [&rng] {
        std::uniform_real_distribution<double> u(0.4, 0.7);
        return Real(u(rng));
    };
    std::vector<Real> s_values{random_s(), random_s(), random_s()};

    const std::uint32_t Q = 14, M = 60, N = 80;
    for (const Real& s : s_values) {
        for (std::uint32_t n = 1; n <= 12; ++n) {
            Real lhs = trace(table, n, s);
            Real rhs = trace_naive(A, n, s, ctx);
            if (!(abs(lhs - rhs) < ctx.epsilon(5)))
                return fail("trace != trace_naive at n=" + std::to_string(n));
        }
        DetSeries series = det_series(table, 12, s);
        NormTable norms = build_norm_table(A, cd, s, N, ctx);
        BoundLadder ladder = build_bound_ladder(norms, Q, M, ctx);
        for (std::uint32_t n = 1; n <= 12; ++n) {
            if (!(abs(series.coeffs[n]) <= ladder.beta_plus[n]))
                return fail("|delta_n| above beta_plus at n=" + std::to_string(n));
            if (!(abs(series.coeffs[n]) <= euler_bound(n, ladder.k_s, cd.ratio)))
                return fail("|delta_n| above the Euler bound at n=" + std::to_string(n));
        }
        for (std::uint32_t n = 1; n <= Q; ++n) {
            if (!(ladder.alpha_minus[n] <= ladder.alpha_plus[n]))
                return fail("alpha ordering violated");
            if (!(ladder.alpha_plus[n] <=
                  ladder.j_const * pow(cd.ratio, static_cast<int>(n)) + ctx.epsilon(10)))
                return fail("alpha_plus above J h^n");
        }
    }

    // Galerkin oracle at the first sampled s: project the operator onto the
    // first K+1 basis monomials via boundary quadrature, expand the matrix
    // determinant through its power traces, and compare coefficients.
    const Real s = s_values[0];
    const int K = 80;
    const long nodes = 1024;
    std::vector<std::vector<Real>> B(K + 1, std::vector<Real>(K + 1, Real(0)));
    for (long j = 0; j < nodes; ++j) {
        Real t = Real(j) / nodes;
        Complex g = cd.disc.center + cd.disc.radius * unit_circle(t);
        std::vector<Complex> images;
        std::vector<Complex> weights;
        for (std::uint32_t i : A.digits) {
            Complex shifted = Real(static_cast<int>(i)) + g;
            weights.push_back(pow_real(shifted, -2 * s));
            Complex v = 1 / shifted;
            v.re = (v.re - cd.disc.center) / cd.disc.radius;
            v.im = v.im / cd.disc.radius;
            images.push_back(v);
        }
        std::vector<Complex> column(K + 1);
        std::vector<Complex> powers(A.size(), Complex{Real(1), Real(0)});
        for (int col = 0; col <= K; ++col) {
            Complex sum;
            for (std::size_t i = 0; i < A.size(); ++i) sum += weights[i] * powers[i];
            column[col] = sum;
            for (std::size_t i = 0; i < A.size(); ++i) powers[i] *= images[i];
        }
        Complex phase = unit_circle(-t);
        Complex ek{Real(1), Real(0)};
        for (int k = 0; k <= K; ++k) {
            for (int col = 0; col <= K; ++col)
                B[k][col] += (column[col] * ek).re;
            ek *= phase;
        }
    }
    for (auto& row : B)
        for (auto& entry : row) entry /= nodes;

    // Power traces tr(B^m), m = 1..10, then the same log-derivative recursion.
    std::vector<std::vector<Real>> power = B;
    std::vector<Real> matrix_traces;
    for (int m = 1; m <= 10; ++m) {
        if (m > 1) {
            std::vector<std::vector<Real>> next(K + 1, std::vector<Real>(K + 1, Real(0)));
            for (int a = 0; a <= K; ++a)
                for (int b = 0; b <= K; ++b) {
                    Real sum = 0;
                    for (int c = 0; c <= K; ++c) sum += power[a][c] * B[c][b];
                    next[a][b] = sum;
                }
            power = std::move(next);
        }
        Real tr = 0;
        for (int a = 0; a <= K; ++a) tr += power[a][a];
        matrix_traces.push_back(tr);
    }
    DetSeries galerkin = det_coeffs(matrix_traces, s);
    DetSeries exact = det_series(table, 10, s);
    for (std::uint32_t n = 1; n <= 10; ++n) {
        Real rel = abs(galerkin.coeffs[n] - exact.coeffs[n]) / abs(exact.coeffs[n]);
        if (!(rel <= pow(Real(10), -25)))
            return fail("Galerkin coefficient n=" + std::to_string(n) +
                        " short of 25 digits");
    }
    return pass("traces, Taylor/Euler domination, alpha ordering, Galerkin oracle");
}

}  // namespace

int main() {
    struct Criterion {
        int index;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "determinant coefficients (Table 2)", criterion1},
        {2, "dimension estimate s_18 (Table 1)", criterion2},
        {3, "Hardy norms (Table 3)", criterion3},
        {4, "approximation bounds (Table 4)", criterion4},
        {5, "Euler bounds (Table 5)", criterion5},
        {6, "computed Taylor bounds (Table 6)", criterion6},
        {7, "optimized disc constants", criterion7},
        {8, "desk-scale certification, 50 digits", criterion8},
        {9, "full-scale certification, 100 digits", criterion9},
        {10, "soundness property suite", criterion10},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        const char* label = outcome.state == Outcome::PASS   ? "PASS"
                            : outcome.state == Outcome::FAIL ? "FAIL"
                                                             : "SKIP";
        if (outcome.state == Outcome::FAIL) ++failures;
        std::cout << "CRITERION " << criterion.index << " [" << label << "] "
                  << criterion.title;
        if (!outcome.detail.empty()) std::cout << " -- " << outcome.detail;
        std::cout << std::endl;
    }
    return failures;
}

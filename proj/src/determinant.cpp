#include "cfdim/determinant.hpp"

namespace cfdim {

DetSeries det_coeffs(const std::vector<Real>& traces, const Real& s) {
    if (traces.empty()) throw std::invalid_argument("det_coeffs: need at least one trace");
    DetSeries series{s, {}};
    series.coeffs.reserve(traces.size() + 1);
    series.coeffs.emplace_back(1);
    for (std::size_t n = 1; n <= traces.size(); ++n) {
        Real sum = 0;
        for (std::size_t k = 1; k <= n; ++k) sum += traces[k - 1] * series.coeffs[n - k];
        series.coeffs.push_back(-sum / static_cast<int>(n));
    }
    return series;
}

std::vector<Real> traces_from_coeffs(const DetSeries& series) {
    std::vector<Real> traces;
    traces.reserve(series.order());
    for (std::size_t n = 1; n <= series.order(); ++n) {
        Real sum = static_cast<int>(n) * series.coeffs[n];
        for (std::size_t k = 1; k < n; ++k) sum += traces[k - 1] * series.coeffs[n - k];
        traces.push_back(-sum);
    }
    return traces;
}

DetSeries det_series(const OrbitTable& table, std::uint32_t order, const Real& s) {
    return det_coeffs(trace_all(table, order, s), s);
}

Real eval_DN(const DetSeries& series, std::uint32_t N) {
    if (N > series.order())
        throw std::invalid_argument("eval_DN: N exceeds series order");
    Real sum = 1;
    for (std::uint32_t n = 1; n <= N; ++n) sum += series.coeffs[n];
    return sum;
}

Real estimate_dimension(const OrbitTable& table, std::uint32_t N,
                        const PrecisionContext& ctx) {
    if (N < 1 || N > table.max_period)
        throw std::invalid_argument("estimate_dimension: table does not cover period " +
                                    std::to_string(N));
    auto truncation = [&](const Real& s) { return eval_DN(det_series(table, N, s), N); };

    Real lo("0.01"), hi("0.99");
    for (int attempt = 0;; ++attempt) {
        if (truncation(lo) < 0 && truncation(hi) > 0) break;
        if (attempt >= 5)
            throw RootBracketError(
                "estimate_dimension: no sign change on [" + to_decimal(lo, 6) + ", " +
                to_decimal(hi, 6) + "]; widen the bracket");
        Real quarter = (hi - lo) / 4;
        lo += quarter;
        hi -= quarter;
    }
    return bisect_root(truncation, lo, hi, ctx.root_tolerance()).midpoint();
}

Real estimate_dimension(const DigitSet& A, std::uint32_t N, const PrecisionContext& ctx) {
    return estimate_dimension(build_orbit_table(A, N, ctx), N, ctx);
}

}  // namespace cfdim

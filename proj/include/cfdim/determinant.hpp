#pragma once

#include "cfdim/orbits.hpp"

namespace cfdim {

/// Taylor coefficients delta_0..delta_P of det(I - zL_s) at a fixed s,
/// with delta_0 = 1.
struct DetSeries {
    Real s;
    std::vector<Real> coeffs;

    std::uint32_t order() const { return static_cast<std::uint32_t>(coeffs.size()) - 1; }
};

/// Coefficients from traces t_n = tr(L_s^n). Writing the determinant as
/// det(I - zL) = exp(-sum_n z^n t_n / n) and differentiating the logarithm
/// gives Delta'(z) = -Delta(z) * sum_n z^{n-1} t_n; matching powers of z
/// yields the recursion
///     n * delta_n = -sum_{k=1}^{n} t_k delta_{n-k},   delta_0 = 1,
/// which costs O(P^2) operations and is numerically benign here since the
/// traces are positive and decreasing.
DetSeries det_coeffs(const std::vector<Real>& traces, const Real& s);

/// Inverse of det_coeffs: t_n = -n delta_n - sum_{k=1}^{n-1} t_k delta_{n-k}.
/// Exposed for round-trip validation.
std::vector<Real> traces_from_coeffs(const DetSeries& series);

/// Convenience: traces from the orbit table, then the recursion.
DetSeries det_series(const OrbitTable& table, std::uint32_t order, const Real& s);

/// Truncation value 1 + sum_{n<=N} delta_n. Requires N <= series order.
Real eval_DN(const DetSeries& series, std::uint32_t N);

/// Dimension estimate s_N: midpoint of a bisection bracket of width
/// <= 10^-(target_digits+10) for the unique zero in (0,1) of
/// s -> 1 + sum_{n<=N} delta_n(s), which is increasing near that zero.
/// The initial bracket [0.01, 0.99] is sign-checked and halved inward on
/// failure; if no sign change is found the caller must widen.
Real estimate_dimension(const OrbitTable& table, std::uint32_t N,
                        const PrecisionContext& ctx);
Real estimate_dimension(const DigitSet& A, std::uint32_t N, const PrecisionContext& ctx);

}  // namespace cfdim

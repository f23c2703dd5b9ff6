#pragma once

#include "cfdim/disc.hpp"

#include <vector>

namespace cfdim {

/// Hardy-space norms ||L_s(m_k)|| of the transfer-operator images of the
/// monomial basis m_k(z) = rho^-k (z-c)^k, for k = 0..N, with the weight data
/// used by the tail bounds. Entries are positive and lie under the envelope
/// h^k * sum_i ||w_{i,s}||.
struct NormTable {
    Real s;
    ContractionData disc;
    std::uint32_t upper_index;          // N
    std::vector<Real> norms;            // k = 0..N
    std::vector<long> node_counts;      // quadrature nodes per k
    OperatorConstants constants;
};

/// ||L_s(m_k)||: square root of the circle integral
///   int_0^1 | sum_i (T_i(g(t)) - c)^k / (rho^k (g(t)+i)^{2s}) |^2 dt,
/// g(t) = c + rho e^{2 pi i t}, principal-branch powers (valid since
/// Re(g+i) >= i + c - rho > 0 on an admissible disc). The integrand handed to
/// the quadrature is scaled by (radius/image_radius)^k so it stays O(1) for
/// every k and the absolute stopping test keeps full relative accuracy; the
/// returned value is identical, the exact factor h^k being reapplied.
Real hardy_norm(std::uint32_t k, const Real& s, const ContractionData& cd,
                const PrecisionContext& ctx, long* nodes_used = nullptr);

class ConsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Norms for k = 0..N. Throws ConsistencyError if an entry escapes the
/// decay envelope (which would signal a quadrature or disc bug).
NormTable build_norm_table(const DigitSet& A, const ContractionData& cd, const Real& s,
                           std::uint32_t N, const PrecisionContext& ctx);

/// Lower/upper computed approximation bounds
///   alpha_minus = (sum_{k=n-1}^N norms_k^2)^{1/2},
///   alpha_plus  = (alpha_minus^2 + (sum_i ||w_i||)^2 h^{2(N+1)}/(1-h^2))^{1/2};
/// they enclose the n-th approximation number of L_s.
struct ApproxBounds {
    Real lower, upper;
};
ApproxBounds approx_bounds(const NormTable& table, std::uint32_t n);

/// E_n(r) = r^{n(n+1)/2} / prod_{i=1}^n (1-r^i)
///        = sum over i_1 < ... < i_n of r^{i_1+...+i_n}.
Real euler_factor(std::uint32_t n, const Real& r);

/// K^n E_n(h): the closed-form bound on the n-th determinant coefficient.
/// Requires 0 < h < 1.
Real euler_bound(std::uint32_t n, const Real& K, const Real& h);

/// The full ladder of computed bounds at one s:
///  - alpha bounds for n = 1..M,
///  - J = K_s (1 + h^{2(N+2-Q)})^{1/2}, which dominates alpha_plus[n] h^-n
///    for n <= Q,
///  - beta_minus[n] = coefficient of z^n in prod_{i=1}^M (1 + alpha_plus[i] z),
///  - beta_plus[n]  = beta_minus[n]
///        + sum_{l<n} J^{n-l} beta_minus[l] h^{M(n-l)} E_{n-l}(h),
/// so |delta_n(s)| <= beta_plus[n] for n <= Q. The product is accumulated by
/// sequential degree-truncated polynomial multiplication, which equals the
/// increasing-subset sum by distributivity.
struct BoundLadder {
    Real s;
    std::uint32_t upper_index, product_length, coeff_count;  // N, M, Q
    std::vector<Real> alpha_minus, alpha_plus;               // n = 1..M at [n]
    Real k_s;
    Real j_const;
    std::vector<Real> beta_minus, beta_plus;                 // n = 0..Q
};

BoundLadder build_bound_ladder(const NormTable& table, std::uint32_t Q, std::uint32_t M,
                               const PrecisionContext& ctx);

}  // namespace cfdim

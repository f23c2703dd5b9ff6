#pragma once

#include "cfdim/mobius.hpp"

#include <vector>

namespace cfdim {

/// Open disc with real center; all digit maps preserve the real axis, so
/// every disc in this library is real-centered. The admissibility condition
/// center - radius > -min(A) keeps the poles -i outside the closure and makes
/// Re(z+i) > 0 hold there, which is what the principal-branch powers need.
struct Disc {
    Real center;
    Real radius;
};

class DiscError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Disc plus the hull data of its digit-map images: image_radius is the
/// radius of the smallest concentric disc containing every T_i(D), ratio is
/// image_radius/radius, and admissible means ratio < 1 with the pole
/// condition satisfied. Carries the digit set it was computed for.
struct ContractionData {
    DigitSet digits;
    Disc disc;
    Real image_radius;
    Real ratio;
    bool admissible = false;
};

/// Möbius image of a real-centered disc under z -> 1/(z+i). Writing a = c+i,
/// the map is inversion of the disc |u - a| < rho, which (for a^2 > rho^2)
/// is again a disc: center a/(a^2 - rho^2), radius rho/(a^2 - rho^2). Its two
/// real extreme points are T_i(c - rho) and T_i(c + rho). Throws DiscError if
/// the pole lies inside the closure.
Disc image_disc(std::uint32_t i, const Disc& D);

/// Hull of the digit-map images: image_radius = max_i (|center_i - c| +
/// radius_i). Returns admissible = false (with zeroed hull data) when the
/// pole condition c - rho > -min(A) fails, rather than throwing, so callers
/// can probe candidate discs.
ContractionData contraction_data(const DigitSet& A, const Disc& D);

/// Admissible disc locally minimizing the contraction ratio. The inner step
/// fixes rho(c) by equalizing the extreme image points,
///     T_min(A)(c - rho) - c = c - T_max(A)(c + rho),
/// which reduces to a quadratic in rho; the outer step is a golden-section
/// search over the center, followed by bisection on the analytic derivative
/// of c -> ratio(c) (the golden-section alone cannot localize the flat
/// quadratic minimum beyond half the working digits). Throws DiscError if no
/// admissible center exists.
ContractionData optimize_disc(const DigitSet& A, const PrecisionContext& ctx);

/// The disc of the equalization family at a given center: radius solves the
/// extreme-image equalization above. Throws DiscError when the quadratic has
/// no usable root or the resulting disc is inadmissible.
ContractionData equalized_contraction(const DigitSet& A, const Real& center);

/// Sup norms of the weights w_{i,s}(z) = (z+i)^{-2s} over the disc, attained
/// at z = c - rho for s > 0, plus the derived constant
/// K_s = (sum_i ||w_{i,s}||) / (h sqrt(1-h^2)) that bounds the approximation
/// numbers by K_s h^n.
struct OperatorConstants {
    std::vector<Real> weight_norms;  // one per digit, in digit order
    Real weight_sum;
    Real k_s;
};

OperatorConstants operator_constants(const DigitSet& A, const ContractionData& cd,
                                     const Real& s);

}  // namespace cfdim

#include "cfdim/disc.hpp"

#include <optional>

namespace cfdim {

Disc image_disc(std::uint32_t i, const Disc& D) {
    Real a = D.center + static_cast<int>(i);
    Real denom = a * a - D.radius * D.radius;
    if (!(denom > 0))
        throw DiscError("image_disc: pole -" + std::to_string(i) +
                        " inside the disc closure");
    return {a / denom, D.radius / denom};
}

ContractionData contraction_data(const DigitSet& A, const Disc& D) {
    ContractionData cd{A, D, Real(0), Real(0), false};
    if (!(D.radius > 0)) return cd;
    if (!(D.center - D.radius + static_cast<int>(A.min()) > 0)) return cd;
    Real hull = 0;
    for (std::uint32_t i : A.digits) {
        Disc img = image_disc(i, D);
        Real reach = abs(img.center - D.center) + img.radius;
        if (reach > hull) hull = reach;
    }
    cd.image_radius = hull;
    cd.ratio = hull / D.radius;
    cd.admissible = cd.ratio < 1;
    return cd;
}

namespace {

// rho(c) from the equalization T_a(c-rho) - c = c - T_b(c+rho) with
// a = min(A), b = max(A). Clearing denominators gives
//   2c rho^2 + 2c(b-a) rho + (a+b+2c) - 2c(a+c)(b+c) = 0,
// whose positive root is the one wanted (the constant term is negative on
// the admissible range). Returns nothing if the root is not usable.
std::optional<Real> equalized_radius(const Real& c, std::uint32_t a_digit,
                                     std::uint32_t b_digit) {
    if (!(c > 0)) return std::nullopt;
    Real a(static_cast<int>(a_digit)), b(static_cast<int>(b_digit));
    Real qa = 2 * c;
    Real qb = 2 * c * (b - a);
    Real qc = (a + b + 2 * c) - 2 * c * (a + c) * (b + c);
    Real disc = qb * qb - 4 * qa * qc;
    if (!(disc > 0)) return std::nullopt;
    Real rho = (-qb + sqrt(disc)) / (2 * qa);
    if (!(rho > 0)) return std::nullopt;
    return rho;
}

std::optional<ContractionData> candidate(const DigitSet& A, const Real& c) {
    auto rho = equalized_radius(c, A.min(), A.max());
    if (!rho) return std::nullopt;
    ContractionData cd = contraction_data(A, Disc{c, *rho});
    if (!cd.admissible) return std::nullopt;
    return cd;
}

// d(ratio)/dc along the equalization constraint, computed analytically so the
// stationary center can be bisected to full working precision. With
// F(rho, c) = 0 the constraint, rho'(c) = -F_c/F_rho; then
// ratio(c) = (1/(a + c - rho) - c)/rho.
Real ratio_derivative(const DigitSet& A, const Real& c) {
    Real a(static_cast<int>(A.min())), b(static_cast<int>(A.max()));
    auto rho_opt = equalized_radius(c, A.min(), A.max());
    if (!rho_opt) throw DiscError("ratio_derivative: no equalized radius");
    Real rho = *rho_opt;
    Real f_rho = 4 * c * rho + 2 * c * (b - a);
    Real f_c = 2 * rho * rho + 2 * (b - a) * rho + 2 -
               2 * ((a + c) * (b + c) + c * (b + c) + c * (a + c));
    Real drho = -f_c / f_rho;
    Real u = a + c - rho;
    Real hull = 1 / u - c;                       // image_radius
    Real dhull = -(1 - drho) / (u * u) - 1;
    return (dhull * rho - hull * drho) / (rho * rho);
}

}  // namespace

ContractionData equalized_contraction(const DigitSet& A, const Real& center) {
    auto cd = candidate(A, center);
    if (!cd)
        throw DiscError("equalized_contraction: no admissible disc at center " +
                        to_decimal(center, 25));
    return *cd;
}

ContractionData optimize_disc(const DigitSet& A, const PrecisionContext& ctx) {
    if (A.size() < 2) throw DiscError("optimize_disc: need at least two digits");

    // Coarse scan for an admissible bracket around the minimum of ratio(c).
    const int grid = 149;
    Real best_c;
    Real best_ratio;
    bool found = false;
    for (int k = 1; k <= grid; ++k) {
        Real c = Real("0.02") + Real(k) * (Real("1.5") - Real("0.02")) / (grid + 1);
        auto cd = candidate(A, c);
        if (!cd) continue;
        if (!found || cd->ratio < best_ratio) {
            best_c = c;
            best_ratio = cd->ratio;
            found = true;
        }
    }
    if (!found)
        throw DiscError("optimize_disc: no admissible real-centered disc for digits " +
                        A.to_string() + "; supply a disc manually");

    Real step = (Real("1.5") - Real("0.02")) / (grid + 1);
    Real lo = best_c - step, hi = best_c + step;
    auto ratio_at = [&](const Real& c) {
        auto cd = candidate(A, c);
        return cd ? cd->ratio : Real(10);  // inadmissible edges repel the search
    };

    // Golden-section until the bracket is well inside the quadratic basin.
    const Real golden = (sqrt(Real(5)) - 1) / 2;
    Real x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
    Real f1 = ratio_at(x1), f2 = ratio_at(x2);
    const Real gss_tol = pow(Real(10), -20);
    while (hi - lo > gss_tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - golden * (hi - lo);
            f1 = ratio_at(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + golden * (hi - lo);
            f2 = ratio_at(x2);
        }
    }

    // The ratio is flat (quadratic) at the minimum, so finish on its analytic
    // derivative, which crosses zero linearly there.
    Real d_lo = lo - gss_tol, d_hi = hi + gss_tol;
    if (!(ratio_derivative(A, d_lo) < 0 && ratio_derivative(A, d_hi) > 0))
        throw DiscError("optimize_disc: derivative bracket failed near c = " +
                        to_decimal((lo + hi) / 2, 25));
    const Real tol = ctx.epsilon(8);
    while (d_hi - d_lo > tol) {
        Real mid = (d_lo + d_hi) / 2;
        if (ratio_derivative(A, mid) < 0)
            d_lo = mid;
        else
            d_hi = mid;
    }
    Real c_star = (d_lo + d_hi) / 2;
    auto cd = candidate(A, c_star);
    if (!cd) throw DiscError("optimize_disc: refined center lost admissibility");
    return *cd;
}

OperatorConstants operator_constants(const DigitSet& A, const ContractionData& cd,
                                     const Real& s) {
    if (!(s > 0))
        throw std::invalid_argument(
            "operator_constants: s must be positive (weight sup location needs it)");
    if (!cd.admissible) throw DiscError("operator_constants: disc not admissible");
    OperatorConstants oc;
    Real edge = cd.disc.center - cd.disc.radius;
    Real sum = 0;
    for (std::uint32_t i : A.digits) {
        Real norm = pow(edge + static_cast<int>(i), -2 * s);
        oc.weight_norms.push_back(norm);
        sum += norm;
    }
    oc.weight_sum = sum;
    Real h = cd.ratio;
    oc.k_s = sum / (h * sqrt(1 - h * h));
    return oc;
}

}  // namespace cfdim

#include "cfdim/bounds.hpp"

#include "parallel.hpp"

namespace cfdim {

Real hardy_norm(std::uint32_t k, const Real& s, const ContractionData& cd,
                const PrecisionContext& ctx, long* nodes_used) {
    if (!cd.admissible) throw DiscError("hardy_norm: disc not admissible");
    if (!(s > 0)) throw std::invalid_argument("hardy_norm: s must be positive");
    const Real& c = cd.disc.center;
    const Real& rho = cd.disc.radius;
    const Real& hull = cd.image_radius;
    const Real two_s = 2 * s;

    auto integrand = [&](const Real& t) {
        Complex g = c + rho * unit_circle(t);
        Complex total;
        for (std::uint32_t i : cd.digits.digits) {
            Complex shifted = Real(static_cast<int>(i)) + g;
            Complex weight = pow_real(shifted, -two_s);
            // (T_i(g) - c)/hull, so powers stay bounded by 1 in modulus.
            Complex v = 1 / shifted;
            v.re = (v.re - c) / hull;
            v.im = v.im / hull;
            total += weight * pow_int(v, k);
        }
        return abs2(total);
    };

    QuadratureOptions opt;
    opt.label = "hardy_norm(k=" + std::to_string(k) + ")";
    QuadratureResult q = integrate_periodic(integrand, ctx, opt);
    if (nodes_used) *nodes_used = q.node_count;
    return pow(cd.ratio, static_cast<int>(k)) * sqrt(q.value);
}

NormTable build_norm_table(const DigitSet& A, const ContractionData& cd, const Real& s,
                           std::uint32_t N, const PrecisionContext& ctx) {
    NormTable table{s, cd, N, {}, {}, operator_constants(A, cd, s)};
    table.norms.resize(N + 1);
    table.node_counts.resize(N + 1);
    detail::parallel_for_index(N + 1, ctx.working_digits, [&](std::size_t k) {
        table.norms[k] =
            hardy_norm(static_cast<std::uint32_t>(k), s, cd, ctx, &table.node_counts[k]);
    });

    const Real slack = ctx.epsilon(10);
    Real envelope = table.constants.weight_sum;
    for (std::uint32_t k = 0; k <= N; ++k) {
        if (!(table.norms[k] > 0))
            throw ConsistencyError("build_norm_table: nonpositive norm at k = " +
                                   std::to_string(k));
        if (table.norms[k] > envelope + slack)
            throw ConsistencyError("build_norm_table: norm above decay envelope at k = " +
                                   std::to_string(k));
        envelope *= cd.ratio;
    }
    return table;
}

ApproxBounds approx_bounds(const NormTable& table, std::uint32_t n) {
    if (n < 1 || n > table.upper_index)
        throw std::invalid_argument("approx_bounds: need 1 <= n <= N");
    Real sum2 = 0;
    for (std::uint32_t k = n - 1; k <= table.upper_index; ++k)
        sum2 += table.norms[k] * table.norms[k];
    const Real& h = table.disc.ratio;
    Real tail = table.constants.weight_sum * table.constants.weight_sum *
                pow(h, 2 * static_cast<int>(table.upper_index + 1)) / (1 - h * h);
    return {sqrt(sum2), sqrt(sum2 + tail)};
}

Real euler_factor(std::uint32_t n, const Real& r) {
    Real numerator = pow(r, static_cast<int>(static_cast<long long>(n) * (n + 1) / 2));
    Real denom = 1;
    Real r_pow = 1;
    for (std::uint32_t i = 1; i <= n; ++i) {
        r_pow *= r;
        denom *= 1 - r_pow;
    }
    return numerator / denom;
}

Real euler_bound(std::uint32_t n, const Real& K, const Real& h) {
    if (n < 1) throw std::invalid_argument("euler_bound: n must be >= 1");
    if (!(h > 0 && h < 1)) throw std::invalid_argument("euler_bound: need 0 < h < 1");
    return pow(K, static_cast<int>(n)) * euler_factor(n, h);
}

BoundLadder build_bound_ladder(const NormTable& table, std::uint32_t Q, std::uint32_t M,
                               const PrecisionContext& ctx) {
    if (!(1 <= Q && Q <= M && M <= table.upper_index))
        throw std::invalid_argument("build_bound_ladder: need 1 <= Q <= M <= N");
    const Real& h = table.disc.ratio;

    BoundLadder ladder;
    ladder.s = table.s;
    ladder.upper_index = table.upper_index;
    ladder.product_length = M;
    ladder.coeff_count = Q;
    ladder.k_s = table.constants.k_s;
    ladder.j_const =
        ladder.k_s * sqrt(1 + pow(h, 2 * static_cast<int>(table.upper_index + 2 - Q)));

    ladder.alpha_minus.resize(M + 1);
    ladder.alpha_plus.resize(M + 1);
    // One backward sweep shares the squared-norm tail across all n.
    {
        Real tail_term = table.constants.weight_sum * table.constants.weight_sum *
                         pow(h, 2 * static_cast<int>(table.upper_index + 1)) / (1 - h * h);
        Real sum2 = 0;
        for (std::uint32_t k = table.upper_index + 1; k-- > 0;) {
            sum2 += table.norms[k] * table.norms[k];
            std::uint32_t n = k + 1;
            if (n <= M) {
                ladder.alpha_minus[n] = sqrt(sum2);
                ladder.alpha_plus[n] = sqrt(sum2 + tail_term);
            }
        }
    }

    // beta_minus: degree-Q truncation of prod_{i=1}^M (1 + alpha_plus[i] z).
    ladder.beta_minus.assign(Q + 1, Real(0));
    ladder.beta_minus[0] = 1;
    for (std::uint32_t i = 1; i <= M; ++i) {
        const Real& a = ladder.alpha_plus[i];
        for (std::uint32_t n = std::min(Q, i); n >= 1; --n)
            ladder.beta_minus[n] += a * ladder.beta_minus[n - 1];
    }

    ladder.beta_plus.assign(Q + 1, Real(0));
    ladder.beta_plus[0] = 1;
    for (std::uint32_t n = 1; n <= Q; ++n) {
        Real correction = 0;
        for (std::uint32_t l = 0; l < n; ++l) {
            correction += pow(ladder.j_const, static_cast<int>(n - l)) *
                          ladder.beta_minus[l] *
                          pow(h, static_cast<int>(M * (n - l))) *
                          euler_factor(n - l, h);
        }
        ladder.beta_plus[n] = ladder.beta_minus[n] + correction;
    }

    // Ladder invariants; violations indicate an upstream computation bug.
    const Real slack = ctx.epsilon(10);
    for (std::uint32_t n = 1; n <= M; ++n) {
        if (!(ladder.alpha_minus[n] <= ladder.alpha_plus[n]))
            throw ConsistencyError("bound ladder: alpha ordering failed");
        if (n > 1 && ladder.alpha_plus[n] > ladder.alpha_plus[n - 1] + slack)
            throw ConsistencyError("bound ladder: alpha_plus not non-increasing");
    }
    for (std::uint32_t n = 1; n <= Q; ++n) {
        if (!(ladder.alpha_plus[n] <= ladder.j_const * pow(h, static_cast<int>(n)) + slack))
            throw ConsistencyError("bound ladder: alpha_plus exceeds J h^n");
        if (!(ladder.beta_minus[n] <= ladder.beta_plus[n]))
            throw ConsistencyError("bound ladder: beta ordering failed");
    }
    return ladder;
}

}  // namespace cfdim

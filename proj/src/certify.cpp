#include "cfdim/certify.hpp"

#include <json.hpp>

namespace cfdim {

Real euler_tail(std::uint32_t Q, const Real& K, const Real& h) {
    Real hq = pow(h, static_cast<int>(Q + 2));
    Real r = K * hq / (1 - hq);
    if (!(r < 1))
        throw CertificationError("euler_tail: domination ratio >= 1, raise Q (Q = " +
                                 std::to_string(Q) + ")");
    return euler_bound(Q + 1, K, h) / (1 - r);
}

namespace {

std::string decimal_string_of_scaled(const BigInt& n, unsigned frac_digits) {
    // n * 10^-frac_digits with 0 < value < 1, rendered exactly.
    std::string digits = n.str();
    if (digits.size() > frac_digits)
        throw CertificationError("endpoint fell outside (0,1)");
    return "0." + std::string(frac_digits - digits.size(), '0') + digits;
}

struct EndpointComputation {
    EndpointData data;
    Real k_s;
};

EndpointComputation evaluate_endpoint(const OrbitTable& table, const ContractionData& cd,
                                      const BigInt& numerator, unsigned frac_digits,
                                      const CertifyParams& p, const PrecisionContext& ctx) {
    if (!(numerator > 0)) throw CertificationError("endpoint fell outside (0,1)");
    EndpointComputation out;
    out.data.s = decimal_string_of_scaled(numerator, frac_digits);
    Real s = to_real(numerator) / pow(Real(10), static_cast<int>(frac_digits));

    out.data.truncation = eval_DN(det_series(table, p.P, s), p.P);
    NormTable norms = build_norm_table(table.digit_set, cd, s, p.N, ctx);
    BoundLadder ladder = build_bound_ladder(norms, p.Q, p.M, ctx);
    Real tail_beta = 0;
    for (std::uint32_t n = p.P + 1; n <= p.Q; ++n) tail_beta += ladder.beta_plus[n];
    out.data.tail_beta = tail_beta;
    out.data.tail_euler = euler_tail(p.Q, ladder.k_s, cd.ratio);
    out.k_s = ladder.k_s;
    return out;
}

}  // namespace

Certificate certify_dimension(const DigitSet& A, unsigned target_digits,
                              const CertifyParams& p, const PrecisionContext& ctx,
                              const CertifyOptions& opt) {
    if (!(p.P >= 1 && p.P <= p.Q && p.Q <= p.M && p.M <= p.N))
        throw std::invalid_argument("certify_dimension: need 1 <= P <= Q <= M <= N");

    std::optional<OrbitTable> local_table;
    const OrbitTable* table = opt.table;
    if (table == nullptr || table->max_period < p.P) {
        local_table = build_orbit_table(A, p.P, ctx);
        table = &*local_table;
    }

    Real s_est = estimate_dimension(*table, p.P, ctx);

    const unsigned frac = target_digits + 1;
    BigInt trunc_numerator =
        static_cast<BigInt>(floor(s_est * pow(Real(10), static_cast<int>(frac))));

    ContractionData cd = optimize_disc(A, ctx);  // the disc does not depend on s

    Real best_margin = 0;
    for (int widening = 0; widening <= opt.max_widenings; ++widening) {
        BigInt offset = BigInt(1) << widening;
        EndpointComputation lower =
            evaluate_endpoint(*table, cd, trunc_numerator - offset, frac, p, ctx);
        EndpointComputation upper =
            evaluate_endpoint(*table, cd, trunc_numerator + offset, frac, p, ctx);

        Real tail_beta = lower.data.tail_beta > upper.data.tail_beta
                             ? lower.data.tail_beta
                             : upper.data.tail_beta;
        Real tail_euler = lower.data.tail_euler > upper.data.tail_euler
                              ? lower.data.tail_euler
                              : upper.data.tail_euler;
        bool ok_lower = lower.data.truncation + tail_beta + tail_euler < 0;
        bool ok_upper = upper.data.truncation - tail_beta - tail_euler > 0;
        best_margin = tail_beta + tail_euler;

        if (ok_lower && ok_upper) {
            Certificate cert(A);
            cert.params = p;
            cert.target_digits = target_digits;
            cert.working_digits = ctx.working_digits;
            cert.disc_center = to_decimal(cd.disc.center, ctx.working_digits);
            cert.disc_radius = to_decimal(cd.disc.radius, ctx.working_digits);
            cert.disc_image_radius = to_decimal(cd.image_radius, ctx.working_digits);
            cert.disc_ratio = to_decimal(cd.ratio, ctx.working_digits);
            cert.lower = lower.data;
            cert.upper = upper.data;
            cert.interval_width = BigInt(2 * offset).str() + "e-" + std::to_string(frac);
            cert.tail_beta = tail_beta;
            cert.tail_euler = tail_euler;
            cert.verdict = true;
            cert.assumed_theorems = {
                "the truncated determinant map s -> D(s) is continuous and strictly "
                "increasing through its unique zero in (0,1), so opposite certified "
                "signs at the endpoints bracket the dimension",
                "the transfer operator acts as a trace-class operator on the Hardy "
                "space of the chosen disc, and the Taylor coefficients of its "
                "determinant equal the periodic-orbit sums evaluated here"};
            return cert;
        }
    }
    throw CertificationError(
        "certify_dimension: sign test failed after all widenings; achieved tail bound " +
        to_decimal(best_margin, 10) + " -- raise P");
}

Certificate::Certificate(DigitSet A) : digit_set(std::move(A)) {}

namespace {
nlohmann::ordered_json real_pair(const Real& x, unsigned digits) {
    return {{"decimal", to_decimal(x, digits)}, {"hex", to_hex(x)}};
}
Real parse_real_pair(const nlohmann::json& j) {
    return from_hex(j.at("hex").get<std::string>());
}
nlohmann::ordered_json endpoint_json(const EndpointData& e, unsigned digits) {
    return {{"s", e.s},
            {"truncation", real_pair(e.truncation, digits)},
            {"tail_beta", real_pair(e.tail_beta, digits)},
            {"tail_euler", real_pair(e.tail_euler, digits)}};
}
EndpointData endpoint_from_json(const nlohmann::json& j) {
    EndpointData e;
    e.s = j.at("s").get<std::string>();
    e.truncation = parse_real_pair(j.at("truncation"));
    e.tail_beta = parse_real_pair(j.at("tail_beta"));
    e.tail_euler = parse_real_pair(j.at("tail_euler"));
    return e;
}
}  // namespace

std::string Certificate::to_json() const {
    unsigned digits = working_digits;
    nlohmann::ordered_json j;
    j["schema_version"] = schema_version;
    j["digit_set"] = digit_set.digits;
    j["params"] = {{"P", params.P}, {"Q", params.Q}, {"M", params.M}, {"N", params.N}};
    j["precision"] = {{"target_digits", target_digits}, {"working_digits", working_digits}};
    j["disc"] = {{"center", disc_center},
                 {"radius", disc_radius},
                 {"image_radius", disc_image_radius},
                 {"ratio", disc_ratio}};
    j["s_minus"] = lower.s;
    j["s_plus"] = upper.s;
    j["interval_width"] = interval_width;
    j["endpoints"] = {{"lower", endpoint_json(lower, digits)},
                      {"upper", endpoint_json(upper, digits)}};
    j["tail_beta"] = real_pair(tail_beta, digits);
    j["tail_euler"] = real_pair(tail_euler, digits);
    j["verdict"] = verdict;
    j["assumed_theorems"] = assumed_theorems;
    return j.dump(1);
}

Certificate Certificate::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Certificate cert(DigitSet(j.at("digit_set").get<std::vector<std::uint32_t>>()));
    cert.schema_version = j.at("schema_version").get<int>();
    cert.params = {j.at("params").at("P").get<std::uint32_t>(),
                   j.at("params").at("Q").get<std::uint32_t>(),
                   j.at("params").at("M").get<std::uint32_t>(),
                   j.at("params").at("N").get<std::uint32_t>()};
    cert.target_digits = j.at("precision").at("target_digits").get<unsigned>();
    cert.working_digits = j.at("precision").at("working_digits").get<unsigned>();
    cert.disc_center = j.at("disc").at("center").get<std::string>();
    cert.disc_radius = j.at("disc").at("radius").get<std::string>();
    cert.disc_image_radius = j.at("disc").at("image_radius").get<std::string>();
    cert.disc_ratio = j.at("disc").at("ratio").get<std::string>();
    cert.lower = endpoint_from_json(j.at("endpoints").at("lower"));
    cert.upper = endpoint_from_json(j.at("endpoints").at("upper"));
    cert.interval_width = j.at("interval_width").get<std::string>();
    cert.tail_beta = parse_real_pair(j.at("tail_beta"));
    cert.tail_euler = parse_real_pair(j.at("tail_euler"));
    cert.verdict = j.at("verdict").get<bool>();
    cert.assumed_theorems = j.at("assumed_theorems").get<std::vector<std::string>>();
    return cert;
}

}  // namespace cfdim

// cfdim: estimates and rigorously certifies the Hausdorff dimension of
// bounded-type continued-fraction Cantor sets. Subcommands:
//   estimate   print the period-P dimension estimate
//   certify    write a JSON certificate for a verified enclosing interval
//   disc       print the optimized disc constants (c, rho, rho', h)
//   tables     emit the intermediate quantities as CSV
// All outputs are decimal strings, and identical configurations produce
// byte-identical output.

#include "cfdim/certify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cfdim;

struct CommonFlags {
    std::string set;
    unsigned digits = 50;
    std::uint32_t period = 18;
    unsigned working = 0;  // 0 = derive from digits by the guard policy
    unsigned threads = 1;
    std::string cache_dir;
    std::string format;  // text | json | csv; default depends on subcommand
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string pick_format(const CommonFlags& flags, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
    std::string format = flags.format.empty() ? fallback : flags.format;
    for (const char* option : allowed)
        if (format == option) return format;
    throw UsageError("unsupported --format '" + format + "' for this subcommand");
}

PrecisionContext make_context(const CommonFlags& flags) {
    set_worker_threads(flags.threads);
    if (flags.working == 0) return PrecisionContext(flags.digits);
    return PrecisionContext(flags.digits, flags.working);
}

std::string cache_path(const CommonFlags& flags, const DigitSet& A, std::uint32_t P,
                       unsigned working_digits) {
    std::string dir = flags.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("CFDIM_CACHE_DIR")) dir = env;
    }
    if (dir.empty()) return {};
    std::string name = "orbits_A" + A.to_string() + "_P" + std::to_string(P) + "_wd" +
                       std::to_string(working_digits) + ".json";
    for (auto& ch : name)
        if (ch == ',') ch = '-';
    return (std::filesystem::path(dir) / name).string();
}

OrbitTable obtain_orbit_table(const CommonFlags& flags, const DigitSet& A, std::uint32_t P,
                              const PrecisionContext& ctx) {
    std::string path = cache_path(flags, A, P, ctx.working_digits);
    if (!path.empty() && std::filesystem::exists(path)) {
        std::ifstream in(path);
        return load_orbit_table(in, ctx);
    }
    OrbitTable table = build_orbit_table(A, P, ctx);
    if (!path.empty()) {
        std::filesystem::create_directories(std::filesystem::path(path).parent_path());
        std::ofstream out(path);
        dump_orbit_table(table, out);
    }
    return table;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
}

int run_estimate(const CommonFlags& flags, const std::string& out_path) {
    std::string format = pick_format(flags, "text", {"text", "json"});
    PrecisionContext ctx = make_context(flags);
    ctx.activate();
    DigitSet A = DigitSet::parse(flags.set);
    OrbitTable table = obtain_orbit_table(flags, A, flags.period, ctx);
    Real s = estimate_dimension(table, flags.period, ctx);
    std::ostringstream os;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["digit_set"] = A.digits;
        j["period"] = flags.period;
        j["estimate"] = to_decimal(s, flags.digits + 5);
        os << j.dump(1) << "\n";
    } else {
        os << to_decimal(s, flags.digits + 5) << "\n";
    }
    write_output(os.str(), out_path);
    return 0;
}

int run_certify(const CommonFlags& flags, const CertifyParams& params,
                const std::string& out_path) {
    pick_format(flags, "json", {"json"});
    PrecisionContext ctx = make_context(flags);
    ctx.activate();
    DigitSet A = DigitSet::parse(flags.set);
    OrbitTable table = obtain_orbit_table(flags, A, params.P, ctx);
    CertifyOptions opt;
    opt.table = &table;
    Certificate cert = certify_dimension(A, flags.digits, params, ctx, opt);
    write_output(cert.to_json() + "\n", out_path.empty() ? "certificate.json" : out_path);
    std::cout << "dim(E_{" << A.to_string() << "}) in (" << cert.lower.s << ", "
              << cert.upper.s << ")\n"
              << "verdict: " << (cert.verdict ? "certified" : "not certified") << "\n";
    return cert.verdict ? 0 : 1;
}

int run_disc(const CommonFlags& flags, const std::string& out_path) {
    std::string format = pick_format(flags, "text", {"text", "json"});
    PrecisionContext ctx = make_context(flags);
    ctx.activate();
    DigitSet A = DigitSet::parse(flags.set);
    ContractionData cd = optimize_disc(A, ctx);
    unsigned digits = flags.digits + 5;
    std::ostringstream os;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["digit_set"] = A.digits;
        j["center"] = to_decimal(cd.disc.center, digits);
        j["radius"] = to_decimal(cd.disc.radius, digits);
        j["image_radius"] = to_decimal(cd.image_radius, digits);
        j["ratio"] = to_decimal(cd.ratio, digits);
        os << j.dump(1) << "\n";
    } else {
        os << "center        " << to_decimal(cd.disc.center, digits) << "\n"
           << "radius        " << to_decimal(cd.disc.radius, digits) << "\n"
           << "image_radius  " << to_decimal(cd.image_radius, digits) << "\n"
           << "ratio         " << to_decimal(cd.ratio, digits) << "\n";
    }
    write_output(os.str(), out_path);
    return 0;
}

struct TablesFlags {
    int which = 2;
    std::uint32_t from = 0, to = 0;
    std::string s_value;      // explicit evaluation point
    unsigned s_digits = 0;    // derive the endpoint s from the estimate
    std::uint32_t n_norms = 200, m_product = 150, q_coeffs = 0;
};

// Evaluation point for the s-dependent tables: an explicit decimal wins;
// otherwise the paper-style lower endpoint derived from this run's own
// estimate at the requested digit count (which the table's period must be
// able to support), else the raw estimate.
Real table_s(const TablesFlags& tf, const OrbitTable& table, const CommonFlags& flags,
             const PrecisionContext& ctx) {
    if (!tf.s_value.empty()) return Real(tf.s_value);
    Real s_est = estimate_dimension(table, flags.period, ctx);
    if (tf.s_digits == 0) return s_est;
    unsigned frac = tf.s_digits + 1;
    Real scale = pow(Real(10), static_cast<int>(frac));
    BigInt trunc = static_cast<BigInt>(floor(s_est * scale));
    return to_real(BigInt(trunc - 1)) / scale;
}

int run_tables(const CommonFlags& flags, const TablesFlags& tf, const std::string& out_path) {
    pick_format(flags, "csv", {"csv"});
    PrecisionContext ctx = make_context(flags);
    ctx.activate();
    DigitSet A = DigitSet::parse(flags.set);
    unsigned digits = ctx.working_digits;
    std::ostringstream os;

    if (tf.which == 1) {
        std::uint32_t from = tf.from ? tf.from : 1, to = tf.to ? tf.to : flags.period;
        OrbitTable table = obtain_orbit_table(flags, A, to, ctx);
        os << "n,dimension_estimate\n";
        for (std::uint32_t n = from; n <= to; ++n)
            os << n << "," << to_decimal(estimate_dimension(table, n, ctx), digits) << "\n";
    } else if (tf.which == 2) {
        OrbitTable table = obtain_orbit_table(flags, A, flags.period, ctx);
        Real s = table_s(tf, table, flags, ctx);
        DetSeries series = det_series(table, flags.period, s);
        std::uint32_t from = tf.from, to = tf.to ? tf.to : flags.period;
        os << "n,delta_n\n";
        for (std::uint32_t n = from; n <= to; ++n)
            os << n << "," << to_decimal(series.coeffs[n], digits) << "\n";
    } else if (tf.which >= 3 && tf.which <= 6) {
        OrbitTable table = obtain_orbit_table(flags, A, flags.period, ctx);
        Real s = table_s(tf, table, flags, ctx);
        ContractionData cd = optimize_disc(A, ctx);
        if (tf.which == 5) {
            OperatorConstants oc = operator_constants(A, cd, s);
            std::uint32_t from = tf.from ? tf.from : 26, to = tf.to ? tf.to : 32;
            os << "n,euler_bound\n";
            for (std::uint32_t n = from; n <= to; ++n)
                os << n << "," << to_decimal(euler_bound(n, oc.k_s, cd.ratio), digits)
                   << "\n";
        } else {
            NormTable norms = build_norm_table(A, cd, s, tf.n_norms, ctx);
            if (tf.which == 3) {
                std::uint32_t from = tf.from, to = tf.to ? tf.to : 10;
                os << "k,hardy_norm\n";
                for (std::uint32_t k = from; k <= to; ++k)
                    os << k << "," << to_decimal(norms.norms[k], digits) << "\n";
            } else if (tf.which == 4) {
                std::uint32_t from = tf.from ? tf.from : 1, to = tf.to ? tf.to : 10;
                os << "n,alpha_plus\n";
                for (std::uint32_t n = from; n <= to; ++n)
                    os << n << "," << to_decimal(approx_bounds(norms, n).upper, digits)
                       << "\n";
            } else {
                std::uint32_t q = tf.q_coeffs ? tf.q_coeffs : 28;
                BoundLadder ladder = build_bound_ladder(norms, q, tf.m_product, ctx);
                std::uint32_t from = tf.from, to = tf.to ? tf.to : q;
                os << "n,beta_plus\n";
                for (std::uint32_t n = from; n <= to; ++n)
                    os << n << "," << to_decimal(ladder.beta_plus[n], digits) << "\n";
            }
        }
    } else {
        throw std::runtime_error("tables: --which must be 1..6");
    }
    write_output(os.str(), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimension estimates and certificates for bounded-type "
                 "continued-fraction Cantor sets"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    CommonFlags flags;
    std::string out_path;
    app.add_option("--set", flags.set, "comma-separated digit set, e.g. 1,2")->required();
    app.add_option("--digits", flags.digits, "requested certified decimal digits");
    app.add_option("--period", flags.period, "largest period evaluated exactly (P)");
    app.add_option("--precision", flags.working,
                   "working decimal digits (default: guard policy from --digits)");
    app.add_option("--threads", flags.threads, "worker thread cap");
    app.add_option("--cache-dir", flags.cache_dir,
                   "orbit-table cache directory (or CFDIM_CACHE_DIR)");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--format", flags.format,
                   "output format: text|json (estimate, disc), json (certify), csv (tables)");

    auto* cmd_estimate = app.add_subcommand("estimate", "print the dimension estimate s_P");

    CertifyParams params{18, 24, 150, 200};
    auto* cmd_certify = app.add_subcommand("certify", "write a dimension certificate");
    cmd_certify->add_option("--Q", params.Q, "last computed-Taylor-bound index");
    cmd_certify->add_option("--M", params.M, "bound product length");
    cmd_certify->add_option("--N", params.N, "number of Hardy norms");

    auto* cmd_disc = app.add_subcommand("disc", "print optimized disc constants");

    TablesFlags tf;
    auto* cmd_tables = app.add_subcommand("tables", "emit intermediate tables as CSV");
    cmd_tables->add_option("--which", tf.which, "table number 1..6")
        ->required()
        ->check(CLI::Range(1, 6));
    cmd_tables->add_option("--from", tf.from, "first row");
    cmd_tables->add_option("--to", tf.to, "last row");
    cmd_tables->add_option("--s", tf.s_value, "evaluation point as a decimal string");
    cmd_tables->add_option("--s-digits", tf.s_digits,
                           "derive the endpoint s from the estimate at this digit count");
    cmd_tables->add_option("--N", tf.n_norms, "number of Hardy norms (tables 3,4,6)");
    cmd_tables->add_option("--M", tf.m_product, "bound product length (table 6)");
    cmd_tables->add_option("--Q", tf.q_coeffs, "coefficient count (table 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_estimate)) return run_estimate(flags, out_path);
        if (app.got_subcommand(cmd_certify)) {
            params.P = flags.period;
            if (!(params.P <= params.Q && params.Q <= params.M && params.M <= params.N)) {
                std::cerr << "invalid parameters: need P <= Q <= M <= N\n";
                return 2;
            }
            return run_certify(flags, params, out_path);
        }
        if (app.got_subcommand(cmd_disc)) return run_disc(flags, out_path);
        if (app.got_subcommand(cmd_tables)) return run_tables(flags, tf, out_path);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

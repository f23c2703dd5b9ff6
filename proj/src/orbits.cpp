#include "cfdim/orbits.hpp"

#include "parallel.hpp"

#include <json.hpp>

#include <istream>
#include <numeric>
#include <ostream>

namespace cfdim {

BigInt lyndon_count(std::uint64_t alphabet, std::uint32_t d) {
    // Moebius mu via trial factorization of the small divisor arguments.
    auto moebius = [](std::uint32_t n) -> int {
        int mu = 1;
        for (std::uint32_t p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                mu = -mu;
            }
        }
        if (n > 1) mu = -mu;
        return mu;
    };
    BigInt sum = 0;
    for (std::uint32_t e = 1; e <= d; ++e) {
        if (d % e) continue;
        int mu = moebius(d / e);
        if (mu == 0) continue;
        BigInt term = pow(BigInt(alphabet), e);
        sum += mu * term;
    }
    return sum / d;
}

void lyndon_words(const DigitSet& A, std::uint32_t max_len,
                  const std::function<void(const Word&)>& visit) {
    if (max_len < 1) throw std::invalid_argument("lyndon_words: max_len must be >= 1");
    const std::size_t k = A.size();
    // Duval's algorithm over letter indices; the digit values are sorted, so
    // index order is digit order.
    std::vector<std::size_t> w{0};
    Word out;
    while (!w.empty()) {
        if (w.size() <= max_len) {
            out.resize(w.size());
            for (std::size_t j = 0; j < w.size(); ++j) out[j] = A.digits[w[j]];
            visit(out);
        }
        std::size_t n = w.size();
        w.resize(max_len);
        for (std::size_t j = n; j < max_len; ++j) w[j] = w[j - n];
        while (!w.empty() && w.back() == k - 1) w.pop_back();
        if (!w.empty()) ++w.back();
    }
}

std::uint64_t OrbitTable::record_count() const {
    std::uint64_t total = 0;
    for (const auto& group : by_period) total += group.size();
    return total;
}

OrbitTable build_orbit_table(const DigitSet& A, std::uint32_t max_period,
                             const PrecisionContext& ctx, const OrbitTableOptions& opt) {
    if (max_period < 1) throw std::invalid_argument("build_orbit_table: period must be >= 1");
    BigInt expected = 0;
    for (std::uint32_t d = 1; d <= max_period; ++d) expected += lyndon_count(A.size(), d);
    if (expected > opt.max_records)
        throw ResourceLimitError("build_orbit_table: P = " + std::to_string(max_period) +
                                 " needs " + expected.str() + " records, over the cap of " +
                                 std::to_string(opt.max_records));

    OrbitTable table{A, max_period, ctx.working_digits, {}};
    table.by_period.resize(max_period);
    for (std::uint32_t d = 1; d <= max_period; ++d)
        table.by_period[d - 1].reserve(
            static_cast<std::size_t>(lyndon_count(A.size(), d)));

    // Enumerate first (cheap integer work), then fill the multiplier data,
    // possibly on several threads; each record owns its slot so the result is
    // independent of scheduling.
    lyndon_words(A, max_period, [&](const Word& w) {
        auto& group = table.by_period[w.size() - 1];
        group.push_back(OrbitRecord{w, static_cast<std::uint32_t>(w.size()), Real(), Real()});
    });

    for (auto& group : table.by_period) {
        detail::parallel_for_index(group.size(), ctx.working_digits, [&](std::size_t idx) {
            OrbitRecord& rec = group[idx];
            rec.multiplier = orbit_multiplier_of(word_matrix(rec.word));
            rec.log_multiplier = log(rec.multiplier);
        });
    }
    return table;
}

namespace {
int alternating_sign(std::uint32_t n) { return (n % 2) ? -1 : 1; }
}  // namespace

Real trace(const OrbitTable& table, std::uint32_t n, const Real& s) {
    if (n < 1 || n > table.max_period)
        throw std::invalid_argument("trace: n out of range 1.." +
                                    std::to_string(table.max_period));
    const int sign = alternating_sign(n);
    Real total = 0;
    for (std::uint32_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        const std::uint32_t k = n / d;
        for (const OrbitRecord& rec : table.by_period[d - 1]) {
            Real num = exp(rec.log_multiplier * (s * k));
            Real lam_k = pow(rec.multiplier, static_cast<int>(k));
            total += d * num / (1 - sign * lam_k);
        }
    }
    return total;
}

std::vector<Real> trace_all(const OrbitTable& table, std::uint32_t max_n, const Real& s) {
    if (max_n < 1 || max_n > table.max_period)
        throw std::invalid_argument("trace_all: max_n out of range");
    std::vector<Real> traces(max_n + 1, Real(0));
    for (std::uint32_t d = 1; d <= max_n; ++d) {
        for (const OrbitRecord& rec : table.by_period[d - 1]) {
            Real u = exp(rec.log_multiplier * s);  // m^s
            Real num = u;                          // m^{s k} for k = 1
            Real lam = rec.multiplier;             // m^k for k = 1
            for (std::uint32_t n = d; n <= max_n; n += d) {
                traces[n] += d * num / (1 - alternating_sign(n) * lam);
                num *= u;
                lam *= rec.multiplier;
            }
        }
    }
    traces.erase(traces.begin());
    return traces;
}

Real trace_naive(const DigitSet& A, std::uint32_t n, const Real& s,
                 const PrecisionContext& ctx) {
    double words = std::pow(static_cast<double>(A.size()), n);
    if (words > 1e6)
        throw ResourceLimitError("trace_naive: |A|^n exceeds the 10^6 enumeration guard");
    const int sign = alternating_sign(n);
    Real total = 0;
    Word w(n, A.digits[0]);
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        Real m = orbit_multiplier(w, ctx);
        total += exp(log(m) * s) / (1 - sign * m);
        // odometer over A^n
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < A.size()) {
                w[pos] = A.digits[idx[pos]];
                break;
            }
            idx[pos] = 0;
            w[pos] = A.digits[0];
            if (pos == 0) return total;
        }
    }
}

namespace {
constexpr int kDumpSchemaVersion = 1;
}

void dump_orbit_table(const OrbitTable& table, std::ostream& out) {
    nlohmann::ordered_json j;
    j["schema_version"] = kDumpSchemaVersion;
    j["digit_set"] = table.digit_set.digits;
    j["max_period"] = table.max_period;
    j["working_digits"] = table.working_digits;
    auto& groups = j["periods"] = nlohmann::ordered_json::array();
    for (std::uint32_t d = 1; d <= table.max_period; ++d) {
        nlohmann::ordered_json group;
        group["period"] = d;
        auto& records = group["records"] = nlohmann::ordered_json::array();
        for (const OrbitRecord& rec : table.by_period[d - 1]) {
            records.push_back({{"word", rec.word},
                               {"log_multiplier", to_hex(rec.log_multiplier)},
                               {"multiplier", to_hex(rec.multiplier)}});
        }
        groups.push_back(std::move(group));
    }
    out << j.dump(1) << '\n';
}

OrbitTable load_orbit_table(std::istream& in, const PrecisionContext& ctx) {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("schema_version").get<int>() != kDumpSchemaVersion)
        throw std::runtime_error("load_orbit_table: unsupported schema version");
    if (j.at("working_digits").get<unsigned>() != ctx.working_digits)
        throw std::runtime_error("load_orbit_table: stored precision differs from context");
    DigitSet A(j.at("digit_set").get<std::vector<std::uint32_t>>());
    OrbitTable table{A, j.at("max_period").get<std::uint32_t>(), ctx.working_digits, {}};
    table.by_period.resize(table.max_period);
    for (const auto& group : j.at("periods")) {
        std::uint32_t d = group.at("period").get<std::uint32_t>();
        if (d < 1 || d > table.max_period)
            throw std::runtime_error("load_orbit_table: period out of range");
        for (const auto& item : group.at("records")) {
            OrbitRecord rec;
            rec.word = item.at("word").get<Word>();
            rec.period = d;
            rec.log_multiplier = from_hex(item.at("log_multiplier").get<std::string>());
            rec.multiplier = from_hex(item.at("multiplier").get<std::string>());
            table.by_period[d - 1].push_back(std::move(rec));
        }
    }
    for (std::uint32_t d = 1; d <= table.max_period; ++d) {
        BigInt expect = lyndon_count(A.size(), d);
        if (BigInt(table.by_period[d - 1].size()) != expect)
            throw std::runtime_error("load_orbit_table: record count mismatch at period " +
                                     std::to_string(d));
    }
    return table;
}

}  // namespace cfdim

#pragma once

#include "cfdim/mobius.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

namespace cfdim {

/// One primitive periodic orbit: its Lyndon word (the strictly smallest
/// rotation, hence aperiodic), the period, the orbit multiplier and its
/// logarithm. log_multiplier < 0 always; the multiplier is cached alongside
/// because trace evaluation needs both the s-power and the plain power.
struct OrbitRecord {
    Word word;
    std::uint32_t period;
    Real log_multiplier;
    Real multiplier;
};

/// Number of Lyndon words of length d over k letters,
/// (1/d) * sum_{e|d} mu(d/e) k^e.
BigInt lyndon_count(std::uint64_t alphabet, std::uint32_t d);

/// Visits every Lyndon word over A of length <= max_len exactly once, in
/// lexicographic order (Duval's generation).
void lyndon_words(const DigitSet& A, std::uint32_t max_len,
                  const std::function<void(const Word&)>& visit);

struct OrbitTableOptions {
    std::uint64_t max_records = 100'000'000;
};

/// All primitive orbit data of period <= max_period, grouped by period.
/// Immutable after construction; one table serves every trace evaluation at
/// any s. Record counts per period always equal lyndon_count.
struct OrbitTable {
    DigitSet digit_set;
    std::uint32_t max_period;
    unsigned working_digits;
    std::vector<std::vector<OrbitRecord>> by_period;  // index d-1

    std::uint64_t record_count() const;
};

class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

OrbitTable build_orbit_table(const DigitSet& A, std::uint32_t max_period,
                             const PrecisionContext& ctx,
                             const OrbitTableOptions& opt = {});

/// tr(L_s^n) from the table: every length-n word is a rotation of a primitive
/// period-d Lyndon word repeated n/d times (d | n), the d rotations contribute
/// identical terms, and repeating multiplies the orbit product's exponent by
/// n/d. Hence
///   tr = sum_{d|n} sum_{period-d records} d * m^{s n/d} / (1 - (-1)^n m^{n/d}).
/// Requires 1 <= n <= max_period.
Real trace(const OrbitTable& table, std::uint32_t n, const Real& s);

/// All traces tr(L_s^1..max_n) in one sweep over the table (one exp per
/// record plus cheap repeated multiplications); agrees with per-n trace()
/// calls to rounding. This is the evaluation used by the root finder.
std::vector<Real> trace_all(const OrbitTable& table, std::uint32_t max_n, const Real& s);

/// Literal sum over all |A|^n words of |T_w'(z_w)|^s / (1 - T_w'(z_w)),
/// recomputing each fixed point; test oracle for the cyclic reduction.
/// Guarded to |A|^n <= 10^6.
Real trace_naive(const DigitSet& A, std::uint32_t n, const Real& s,
                 const PrecisionContext& ctx);

/// Table serialization, keyed by (digit set, max period, working digits).
/// Reals are stored as exact hex-float strings, so a reload reproduces the
/// table bit-for-bit at the same working precision.
void dump_orbit_table(const OrbitTable& table, std::ostream& out);
OrbitTable load_orbit_table(std::istream& in, const PrecisionContext& ctx);

}  // namespace cfdim

#pragma once

#include "cfdim/bounds.hpp"
#include "cfdim/determinant.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cfdim {

struct CertifyParams {
    std::uint32_t P;  // largest period evaluated exactly
    std::uint32_t Q;  // last coefficient covered by computed Taylor bounds
    std::uint32_t M;  // factors in the bound product
    std::uint32_t N;  // norms computed
};

/// One endpoint's evaluations: the truncation value and the two tail bounds
/// computed at that s.
struct EndpointData {
    std::string s;        // exact decimal string
    Real truncation;      // D_P(s)
    Real tail_beta;       // sum_{n=P+1}^{Q} beta_plus[n]
    Real tail_euler;      // bound on sum_{n>Q} K_s^n E_n(h)
};

/// Machine-checkable record that the determinant truncation is negative at
/// s_minus and positive at s_plus after adding the rigorous tail bounds, so
/// the dimension lies in (s_minus, s_plus). The stored tail_beta/tail_euler
/// are maximized over the two endpoints; verdict uses those maxima, which is
/// at least as strict as the per-endpoint test.
struct Certificate {
    explicit Certificate(DigitSet A);

    int schema_version = 1;
    DigitSet digit_set;
    CertifyParams params;
    unsigned target_digits;
    unsigned working_digits;
    std::string disc_center, disc_radius, disc_image_radius, disc_ratio;
    EndpointData lower, upper;
    std::string interval_width;  // exact decimal, = s_plus - s_minus
    Real tail_beta;
    Real tail_euler;
    bool verdict = false;
    std::vector<std::string> assumed_theorems;

    std::string to_json() const;
    static Certificate from_json(const std::string& text);
};

/// Geometric domination bound on the Euler-bound tail sum_{n>Q} K^n E_n(h):
/// the term ratio E_{n+1}/E_n = h^{n+1}/(1 - h^{n+1}) decreases, so with
/// r = K h^{Q+2}/(1 - h^{Q+2}) < 1 the tail is at most K^{Q+1} E_{Q+1}(h)/(1-r).
/// Throws (asking for a larger Q) when r >= 1.
Real euler_tail(std::uint32_t Q, const Real& K, const Real& h);

class CertificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct CertifyOptions {
    int max_widenings = 5;
    const OrbitTable* table = nullptr;  // reuse a prebuilt/cached table
};

/// Full pipeline: estimate the dimension from periods <= P, place the
/// candidate interval by truncating the estimate to target_digits+1 digits
/// and stepping one unit down/up in the last place, then certify the sign of
/// the truncation-plus-tail at both endpoints independently. On a failed sign
/// test the interval width is doubled (around the truncated estimate) up to
/// max_widenings times before giving up with the achieved tail bound.
Certificate certify_dimension(const DigitSet& A, unsigned target_digits,
                              const CertifyParams& params, const PrecisionContext& ctx,
                              const CertifyOptions& opt = {});

}  // namespace cfdim

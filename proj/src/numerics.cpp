#include "cfdim/numerics.hpp"

#include <boost/math/constants/constants.hpp>

#include <atomic>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

namespace cfdim {

namespace {
unsigned guard_digits(unsigned target) {
    return static_cast<unsigned>(std::ceil(1.5 * target)) + 50;
}
}  // namespace

PrecisionContext::PrecisionContext(unsigned target)
    : target_digits(target), working_digits(guard_digits(target)) {
    if (target == 0) throw std::invalid_argument("target_digits must be positive");
}

PrecisionContext::PrecisionContext(unsigned target, unsigned working)
    : target_digits(target), working_digits(working) {
    if (target == 0) throw std::invalid_argument("target_digits must be positive");
    if (working < guard_digits(target))
        throw std::invalid_argument("working_digits below guard-digit policy: need >= " +
                                    std::to_string(guard_digits(target)));
}

void PrecisionContext::activate() const { Real::default_precision(working_digits); }

Real PrecisionContext::epsilon(unsigned drop) const {
    return pow(Real(10), -static_cast<int>(working_digits - drop));
}

Real PrecisionContext::root_tolerance() const {
    return pow(Real(10), -static_cast<int>(target_digits + 10));
}

Real to_real(const BigInt& n) {
    Real x;
    mpfr_set_z(x.backend().data(), n.backend().data(), MPFR_RNDN);
    return x;
}

Complex operator+(const Real& a, const Complex& z) { return {a + z.re, z.im}; }

Complex operator*(const Real& a, const Complex& z) { return {a * z.re, a * z.im}; }

Complex operator/(const Real& a, const Complex& z) {
    Real d = z.re * z.re + z.im * z.im;
    return {a * z.re / d, -a * z.im / d};
}

Real abs2(const Complex& z) { return z.re * z.re + z.im * z.im; }

Complex pow_int(Complex z, std::uint64_t k) {
    Complex result{Real(1), Real(0)};
    while (k) {
        if (k & 1) result *= z;
        z *= z;
        k >>= 1;
    }
    return result;
}

Complex pow_real(const Complex& z, const Real& a) {
    // exp(a log z) with the principal logarithm.
    Real log_mod = log(abs2(z)) / 2;
    Real arg = atan2(z.im, z.re);
    Real mod = exp(a * log_mod);
    Real phase = a * arg;
    return {mod * cos(phase), mod * sin(phase)};
}

Complex unit_circle(const Real& t) {
    Real theta = 2 * boost::math::constants::pi<Real>() * t;
    return {cos(theta), sin(theta)};
}

QuadratureResult integrate_periodic(const std::function<Real(const Real&)>& f,
                                    const PrecisionContext& ctx,
                                    const QuadratureOptions& opt) {
    const Real tol = ctx.epsilon(5);
    long m = opt.initial_nodes;

    std::vector<Real> values(m);
    for (long j = 0; j < m; ++j) values[j] = f(Real(j) / m);

    auto rule_value = [&](long nodes) {
        Real sum = 0;
        for (long j = 0; j < nodes; ++j) sum += values[j];
        return sum / nodes;
    };

    Real prev = rule_value(m);
    while (2 * m <= opt.max_nodes) {
        long m2 = 2 * m;
        std::vector<Real> next(m2);
        for (long j = 0; j < m; ++j) next[2 * j] = values[j];
        for (long j = 0; j < m; ++j) next[2 * j + 1] = f(Real(2 * j + 1) / m2);
        values = std::move(next);
        m = m2;
        Real cur = rule_value(m);
        if (abs(cur - prev) <= tol) return {cur, m};
        prev = cur;
    }
    throw QuadratureError("integrate_periodic: no convergence for '" + opt.label +
                          "' within " + std::to_string(opt.max_nodes) + " nodes");
}

Bracket bisect_root(const std::function<Real(const Real&)>& f, Real lo, Real hi,
                    const Real& tol) {
    Real flo = f(lo), fhi = f(hi);
    if (!(flo < 0 && fhi > 0))
        throw RootBracketError("bisect_root: sign precondition violated, f(lo) = " +
                               to_decimal(flo, 20) + ", f(hi) = " + to_decimal(fhi, 20));
    while (hi - lo > tol) {
        Real mid = (lo + hi) / 2;
        Real fm = f(mid);
        if (fm < 0)
            lo = mid;
        else if (fm > 0)
            hi = mid;
        else {
            // Exact zero at a bisection midpoint: return the tightest strict
            // bracket around it that the tolerance allows.
            lo = mid - tol / 2;
            hi = mid + tol / 2;
            break;
        }
    }
    if (!(f(lo) < 0 && f(hi) > 0))
        throw RootBracketError("bisect_root: bracket invariant failed at [" +
                               to_decimal(lo, 30) + ", " + to_decimal(hi, 30) + "]");
    return {lo, hi};
}

std::string to_decimal(const Real& x, unsigned digits) {
    return x.str(digits, std::ios_base::fmtflags(0));
}

std::string to_hex(const Real& x) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", x.backend().data());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real from_hex(const std::string& s) {
    Real x;
    char* end = nullptr;
    mpfr_strtofr(x.backend().data(), s.c_str(), &end, 0, MPFR_RNDN);
    if (end == s.c_str())
        throw std::invalid_argument("from_hex: unparsable value '" + s + "'");
    return x;
}

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_worker_threads(unsigned n) { g_threads.store(n == 0 ? 1 : n); }
unsigned worker_threads() { return g_threads.load(); }

}  // namespace cfdim

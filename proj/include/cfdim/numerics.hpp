#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <functional>
#include <stdexcept>
#include <string>

namespace cfdim {

/// Arbitrary-precision real, decimal-digit precision set at runtime.
/// Arithmetic is deterministic for a fixed precision (MPFR round-to-nearest).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Exact arbitrary-size integer.
using BigInt = boost::multiprecision::mpz_int;

/// BigInt -> Real at the current default precision. (The implicit Boost
/// conversion takes its precision from the integer's digit count, which is
/// useless here.)
Real to_real(const BigInt& n);

/// Precision policy for a whole run: `target_digits` is the number of
/// certified decimal digits requested, `working_digits` the precision every
/// Real carries. The guard-digit rule working >= ceil(1.5*target) + 50 keeps
/// accumulated rounding over ~1e7 additions at least 40 digits below target.
struct PrecisionContext {
    unsigned target_digits;
    unsigned working_digits;

    explicit PrecisionContext(unsigned target);
    PrecisionContext(unsigned target, unsigned working);

    /// Makes `working_digits` the construction precision for new Reals.
    /// Call once per run (or per precision change); not thread-safe against
    /// concurrent activation.
    void activate() const;

    /// 10^-(working_digits - drop)
    Real epsilon(unsigned drop = 0) const;

    /// Bisection width for dimension estimates: 10^-(target_digits + 10).
    Real root_tolerance() const;
};

/// Complex number over Real. std::complex is not specified for
/// user-defined scalars, so the few operations needed are spelled out here.
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        *this = *this * o;
        return *this;
    }
};

Complex operator+(const Real& a, const Complex& z);
Complex operator*(const Real& a, const Complex& z);
Complex operator/(const Real& a, const Complex& z);

/// |z|^2 without the square root.
Real abs2(const Complex& z);

/// z^k by square-and-multiply.
Complex pow_int(Complex z, std::uint64_t k);

/// Principal-branch z^a for real a; requires z != 0. Callers in this library
/// only use it with Re(z) > 0, where the principal branch is the natural one.
Complex pow_real(const Complex& z, const Real& a);

/// e^{2 pi i t}
Complex unit_circle(const Real& t);

struct QuadratureResult {
    Real value;
    long node_count;
};

struct QuadratureOptions {
    long initial_nodes = 64;
    long max_nodes = 1 << 20;
    std::string label = "integrand";
};

class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Integral over one period of a smooth 1-periodic function, by the
/// equal-weight endpoint-free rule (1/M) * sum_{j<M} f(j/M). For periodic
/// analytic integrands this converges exponentially in M. M is doubled from
/// 64 until two successive doublings agree to within 10^-(working_digits-5);
/// previously evaluated nodes are reused, and the sum is always taken in
/// increasing node order so results are bit-identical run to run.
///
/// Throws QuadratureError (naming opt.label) if M exceeds opt.max_nodes.
QuadratureResult integrate_periodic(const std::function<Real(const Real&)>& f,
                                    const PrecisionContext& ctx,
                                    const QuadratureOptions& opt = {});

struct Bracket {
    Real lo, hi;
    Real midpoint() const { return (lo + hi) / 2; }
};

class RootBracketError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bisection for an increasing function with f(lo) < 0 < f(hi). Returns a
/// bracket [a,b] with f(a) < 0 < f(b) and b - a <= tol; the sign condition is
/// re-checked on the returned endpoints. Throws RootBracketError (reporting
/// both endpoint values) if the precondition fails.
Bracket bisect_root(const std::function<Real(const Real&)>& f, Real lo, Real hi,
                    const Real& tol);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Real& x, unsigned digits);

/// Exact hexadecimal-float rendering (round-trips bit-for-bit at equal
/// precision) and its inverse.
std::string to_hex(const Real& x);
Real from_hex(const std::string& s);

/// Process-wide cap on worker threads used by the few parallel loops
/// (orbit-table construction, norm tables). 1 = fully sequential. Results are
/// bit-identical for any setting: work is split into fixed chunks combined in
/// chunk order.
void set_worker_threads(unsigned n);
unsigned worker_threads();

}  // namespace cfdim

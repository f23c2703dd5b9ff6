#pragma once

#include "cfdim/numerics.hpp"

#include <cstdint>
#include <vector>

namespace cfdim {

/// Finite set A of allowed continued-fraction digits, kept strictly
/// increasing. A single digit gives a one-point attractor, so dimension
/// computations require at least two.
struct DigitSet {
    std::vector<std::uint32_t> digits;

    explicit DigitSet(std::vector<std::uint32_t> values);

    std::size_t size() const { return digits.size(); }
    std::uint32_t min() const { return digits.front(); }
    std::uint32_t max() const { return digits.back(); }
    bool contains(std::uint32_t i) const;

    /// Parses "1,2,5" style lists.
    static DigitSet parse(const std::string& csv);
    std::string to_string() const;
};

/// Finite word over a digit set; index 0 is the outermost map of the
/// composition.
using Word = std::vector<std::uint32_t>;

/// z -> (az+b)/(cz+d) with exact integer entries. Compositions of the digit
/// maps z -> 1/(z+i) stay in this form with determinant (-1)^n, all entries
/// nonnegative, and (c,d) never both zero; carrying them exactly means no
/// rounding error accumulates through composition.
struct MobiusMatrix {
    BigInt a, b, c, d;

    BigInt determinant() const { return a * d - b * c; }
    MobiusMatrix operator*(const MobiusMatrix& o) const;
};

/// Matrix of the single digit map z -> 1/(z+i), i.e. (0,1,1,i). Requires i >= 1.
MobiusMatrix digit_matrix(std::uint32_t i);

/// Left-to-right product digit_matrix(w[0]) * ... * digit_matrix(w[n-1]),
/// representing the composition that applies w[n-1] innermost.
MobiusMatrix word_matrix(const Word& w);

/// The unique fixed point in (0,1) of the word's composition: the positive
/// root of c z^2 + (d-a) z - b = 0, evaluated at working precision from the
/// exact integer entries. The square root is the only inexact step.
Real fixed_point(const Word& w, const PrecisionContext& ctx);

/// Absolute derivative of the composition at its fixed point,
/// |T_w'(z_w)| = 1/(c z_w + d)^2, a value in (0,1). Equals the squared
/// product of the fixed point's forward orbit.
Real orbit_multiplier(const Word& w, const PrecisionContext& ctx);

/// Same two quantities computed from an already-built matrix; used by the
/// orbit enumerator to avoid rebuilding the product per word.
Real fixed_point_of(const MobiusMatrix& m);
Real orbit_multiplier_of(const MobiusMatrix& m);

}  // namespace cfdim

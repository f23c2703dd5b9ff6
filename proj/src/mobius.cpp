#include "cfdim/mobius.hpp"

#include <algorithm>
#include <sstream>

namespace cfdim {

DigitSet::DigitSet(std::vector<std::uint32_t> values) : digits(std::move(values)) {
    if (digits.empty()) throw std::invalid_argument("DigitSet: empty");
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 1) throw std::invalid_argument("DigitSet: digits must be >= 1");
        if (i > 0 && digits[i] <= digits[i - 1])
            throw std::invalid_argument("DigitSet: digits must be strictly increasing");
    }
}

bool DigitSet::contains(std::uint32_t i) const {
    return std::binary_search(digits.begin(), digits.end(), i);
}

DigitSet DigitSet::parse(const std::string& csv) {
    std::vector<std::uint32_t> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    return DigitSet(std::move(values));
}

std::string DigitSet::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(digits[i]);
    }
    return out;
}

MobiusMatrix MobiusMatrix::operator*(const MobiusMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

MobiusMatrix digit_matrix(std::uint32_t i) {
    if (i < 1) throw std::invalid_argument("digit_matrix: digit must be >= 1");
    return {BigInt(0), BigInt(1), BigInt(1), BigInt(i)};
}

MobiusMatrix word_matrix(const Word& w) {
    if (w.empty()) throw std::invalid_argument("word_matrix: empty word");
    // Right-multiplying by (0,1,1,i) sends (a,b;c,d) to (b, a+bi; d, c+di).
    MobiusMatrix m = digit_matrix(w[0]);
    for (std::size_t k = 1; k < w.size(); ++k) {
        BigInt i(w[k]);
        BigInt na = m.b, nb = m.a + m.b * i;
        BigInt nc = m.d, nd = m.c + m.d * i;
        m = {std::move(na), std::move(nb), std::move(nc), std::move(nd)};
    }
    return m;
}

Real fixed_point_of(const MobiusMatrix& m) {
    // c z^2 + (d-a) z - b = 0; the discriminant (d-a)^2 + 4bc is positive and
    // exactly one root lies in (0,1).
    BigInt disc = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
    return (to_real(BigInt(m.a - m.d)) + sqrt(to_real(disc))) / (2 * to_real(m.c));
}

Real orbit_multiplier_of(const MobiusMatrix& m) {
    Real denom = to_real(m.c) * fixed_point_of(m) + to_real(m.d);
    return 1 / (denom * denom);
}

Real fixed_point(const Word& w, const PrecisionContext&) {
    return fixed_point_of(word_matrix(w));
}

Real orbit_multiplier(const Word& w, const PrecisionContext&) {
    return orbit_multiplier_of(word_matrix(w));
}

}  // namespace cfdim

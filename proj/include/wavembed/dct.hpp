#ifndef WAVEMBED_DCT_HPP
#define WAVEMBED_DCT_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "wavembed/matrix.hpp"

namespace wavembed {

// Orthonormal DCT-II:
//   c[k] = s(k) * sum_{n=0}^{N-1} x[n] * cos(pi * (2n+1) * k / (2N))
// with s(0) = sqrt(1/N) and s(k>0) = sqrt(2/N). This normalization makes
// the transform an isometry (||c|| == ||x||) and gives the identity
// c[0] = sqrt(N) * mean(x). Evaluation is the direct O(N^2) sum; inputs
// here are sentence lengths, where a fast transform buys nothing.

struct DctCoefficients {
    std::vector<double> values;
    std::size_t source_len = 0;
};

inline DctCoefficients dct_ii(std::span<const double> x) {
    if (x.empty()) throw std::invalid_argument("dct_ii: empty input");
    const std::size_t n = x.size();
    const double theta = std::numbers::pi / (2.0 * static_cast<double>(n));
    const double s0 = std::sqrt(1.0 / static_cast<double>(n));
    const double sk = std::sqrt(2.0 / static_cast<double>(n));

    DctCoefficients out;
    out.source_len = n;
    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            sum += x[j] * std::cos(theta * static_cast<double>((2 * j + 1) * k));
        }
        out.values[k] = (k == 0 ? s0 : sk) * sum;
    }
    return out;
}

// Inverse (DCT-III with the same scaling); idct(dct_ii(x)) == x.
inline std::vector<double> idct(const DctCoefficients& c) {
    if (c.values.empty()) throw std::invalid_argument("idct: empty input");
    const std::size_t n = c.values.size();
    const double theta = std::numbers::pi / (2.0 * static_cast<double>(n));
    const double s0 = std::sqrt(1.0 / static_cast<double>(n));
    const double sk = std::sqrt(2.0 / static_cast<double>(n));

    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = s0 * c.values[0];
        for (std::size_t k = 1; k < n; ++k) {
            sum += sk * c.values[k] * std::cos(theta * static_cast<double>((2 * j + 1) * k));
        }
        x[j] = sum;
    }
    return x;
}

// Each column independently replaced by its DCT-II coefficients; row k of
// the result holds c[k] of every column.
inline Matrix dct_columns(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("dct_columns: empty matrix");
    const std::size_t n = m.rows();
    Matrix out(n, m.cols());
    std::vector<double> column(n);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < n; ++r) column[r] = m(r, c);
        DctCoefficients coeffs = dct_ii(column);
        for (std::size_t r = 0; r < n; ++r) out(r, c) = coeffs.values[r];
    }
    return out;
}

}  // namespace wavembed

#endif  // WAVEMBED_DCT_HPP

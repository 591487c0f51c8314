#ifndef WAVEMBED_DWT_HPP
#define WAVEMBED_DWT_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wavembed/wavelet_filters.hpp"

namespace wavembed {

// One step of the periodized orthogonal DWT.
//
// Conventions (fixed so that coefficient files are reproducible):
//   * Boundary handling is periodization. An odd-length signal is first
//     extended by repeating its last element once, giving an even working
//     length n; indices then wrap modulo n.
//   * Analysis applies the decomposition taps as a sliding inner product
//     anchored at even offsets: out[i] = sum_k f[k] * x[(2i + k) mod n],
//     i.e. the even-indexed outputs of the circular correlation.
//   * Each subband has ceil(len(signal) / 2) coefficients.
//
// With these choices the analysis operator on the extended signal is
// orthogonal for every length, which gives exact Parseval energy balance
// and perfect reconstruction by the transposed operator in idwt_1d.

struct DwtPair {
    std::vector<double> approx;  // cA, low-pass branch
    std::vector<double> detail;  // cD, high-pass branch
};

namespace detail {

// Periodized sample of the odd-extended signal, j < 2*ceil(len/2).
inline double extended_at(std::span<const double> signal, std::size_t j) {
    return signal[j < signal.size() ? j : signal.size() - 1];
}

}  // namespace detail

inline DwtPair dwt_1d(std::span<const double> signal, const WaveletFilter& filter) {
    if (signal.empty()) throw std::invalid_argument("dwt_1d: empty signal");
    const std::size_t half = (signal.size() + 1) / 2;
    const std::size_t n = 2 * half;
    const std::size_t taps = filter.length();
    const double* h = filter.lowpass.data();
    const double* g = filter.highpass.data();

    DwtPair out;
    out.approx.resize(half);
    out.detail.resize(half);
    for (std::size_t i = 0; i < half; ++i) {
        double a = 0.0;
        double d = 0.0;
        std::size_t j = 2 * i;
        for (std::size_t k = 0; k < taps; ++k) {
            const double x = detail::extended_at(signal, j);
            a += h[k] * x;
            d += g[k] * x;
            if (++j == n) j = 0;
        }
        out.approx[i] = a;
        out.detail[i] = d;
    }
    return out;
}

// Transposed (synthesis) operator; reconstructs `original_length` samples.
inline std::vector<double> idwt_1d(std::span<const double> approx,
                                   std::span<const double> detail,
                                   const WaveletFilter& filter,
                                   std::size_t original_length) {
    if (original_length == 0) throw std::invalid_argument("idwt_1d: zero output length");
    const std::size_t half = (original_length + 1) / 2;
    if (approx.size() != half || detail.size() != half) {
        throw std::invalid_argument(
            "idwt_1d: expected " + std::to_string(half) + " coefficients per subband, got cA=" +
            std::to_string(approx.size()) + " cD=" + std::to_string(detail.size()));
    }
    const std::size_t n = 2 * half;
    const std::size_t taps = filter.length();
    const double* h = filter.lowpass.data();
    const double* g = filter.highpass.data();

    std::vector<double> signal(n, 0.0);
    for (std::size_t i = 0; i < half; ++i) {
        const double a = approx[i];
        const double d = detail[i];
        std::size_t j = 2 * i;
        for (std::size_t k = 0; k < taps; ++k) {
            signal[j] += h[k] * a + g[k] * d;
            if (++j == n) j = 0;
        }
    }
    signal.resize(original_length);  // drops the duplicated odd-extension sample
    return signal;
}

// Wavelet-packet node addressed by a path over {A, D}: 'A' descends into
// the approximation branch, 'D' into the detail branch. "AD" is the detail
// of the level-1 approximation.
struct Subband {
    std::string path;
    std::vector<double> coeffs;
    std::size_t source_len = 0;  // length of the root signal
};

// Subband length after `depth` ceil-halving splits.
inline std::size_t subband_length(std::size_t n, std::size_t depth) {
    for (std::size_t i = 0; i < depth; ++i) n = (n + 1) / 2;
    return n;
}

inline Subband packet_node(std::span<const double> signal, const WaveletFilter& filter,
                           std::string_view path) {
    if (path.empty()) throw std::invalid_argument("packet_node: empty path");
    for (char c : path) {
        if (c != 'A' && c != 'D') {
            throw std::invalid_argument("packet_node: invalid path character '" +
                                        std::string(1, c) + "' (alphabet is {A, D})");
        }
    }
    Subband node;
    node.path = std::string(path);
    node.source_len = signal.size();

    DwtPair step = dwt_1d(signal, filter);
    node.coeffs = std::move(path[0] == 'A' ? step.approx : step.detail);
    for (char c : path.substr(1)) {
        step = dwt_1d(node.coeffs, filter);
        node.coeffs = std::move(c == 'A' ? step.approx : step.detail);
    }
    return node;
}

// All 2^levels depth-`levels` packet nodes, ordered lexicographically by
// path with A < D ("AA..A" first). Breadth-first expansion applies exactly
// the same dwt_1d steps as packet_node, so matching nodes agree bitwise.
inline std::vector<Subband> packet_level(std::span<const double> signal,
                                         const WaveletFilter& filter, int levels) {
    if (levels < 1) throw std::invalid_argument("packet_level: levels must be >= 1");
    std::vector<Subband> nodes;
    nodes.push_back({"", std::vector<double>(signal.begin(), signal.end()), signal.size()});
    for (int level = 0; level < levels; ++level) {
        std::vector<Subband> next;
        next.reserve(nodes.size() * 2);
        for (const Subband& node : nodes) {
            DwtPair step = dwt_1d(node.coeffs, filter);
            next.push_back({node.path + "A", std::move(step.approx), signal.size()});
            next.push_back({node.path + "D", std::move(step.detail), signal.size()});
        }
        nodes = std::move(next);
    }
    return nodes;
}

}  // namespace wavembed

#endif  // WAVEMBED_DWT_HPP

#ifndef WAVEMBED_STATS_HPP
#define WAVEMBED_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "wavembed/error.hpp"

namespace wavembed {

inline double cosine(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw std::invalid_argument("cosine: length mismatch");
    if (u.empty()) throw std::invalid_argument("cosine: empty vectors");
    double dot = 0.0;
    double nu = 0.0;
    double nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0) throw DegenerateInputError("cosine: zero vector");
    double c = dot / (std::sqrt(nu) * std::sqrt(nv));
    return std::clamp(c, -1.0, 1.0);
}

// Average ranks (1-based); ties receive the mean of the ranks they span.
inline std::vector<double> average_ranks(std::span<const double> xs) {
    const std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
        const double mean_rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = mean_rank;
        i = j + 1;
    }
    return ranks;
}

inline double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("pearson: length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("pearson: need at least 2 points");
    const std::size_t n = xs.size();
    // exact constancy check: the variance test below can miss it when the
    // mean itself rounds
    bool const_x = true;
    bool const_y = true;
    for (std::size_t i = 1; i < n; ++i) {
        const_x = const_x && xs[i] == xs[0];
        const_y = const_y && ys[i] == ys[0];
    }
    if (const_x || const_y) {
        throw DegenerateInputError("pearson: constant input, correlation undefined");
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw DegenerateInputError("pearson: constant input, correlation undefined");
    }
    return sxy / (std::sqrt(sxx) * std::sqrt(syy));
}

// Spearman rank correlation: Pearson over tie-averaged ranks.
inline double spearman(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("spearman: length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("spearman: need at least 2 points");
    const std::vector<double> rx = average_ranks(xs);
    const std::vector<double> ry = average_ranks(ys);
    return pearson(rx, ry);
}

}  // namespace wavembed

#endif  // WAVEMBED_STATS_HPP

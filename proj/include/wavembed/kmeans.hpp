#ifndef WAVEMBED_KMEANS_HPP
#define WAVEMBED_KMEANS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <span>
#include <stdexcept>
#include <vector>

#include "wavembed/matrix.hpp"

namespace wavembed {

struct KmeansResult {
    std::vector<std::size_t> assignment;  // point -> cluster id in [0, k)
    double inertia = 0.0;                 // sum of squared distances to centers
};

namespace detail {

// mt19937_64 output mapped to [0,1); std::uniform_real_distribution is
// implementation-defined, this is not.
inline double canonical_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline KmeansResult kmeans_single(const Matrix& points, std::size_t k, std::mt19937_64& rng,
                                  int max_iters) {
    const std::size_t n = points.rows();
    const std::size_t dim = points.cols();

    // k-means++ seeding
    Matrix centers(k, dim);
    std::vector<double> dist2(n, std::numeric_limits<double>::infinity());
    std::size_t first = static_cast<std::size_t>(rng() % n);
    for (std::size_t c = 0; c < dim; ++c) centers(0, c) = points(first, c);
    for (std::size_t ci = 1; ci < k; ++ci) {
        double total = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            const double d = sq_dist(points.row(p), centers.row(ci - 1));
            if (d < dist2[p]) dist2[p] = d;
            total += dist2[p];
        }
        std::size_t chosen = n - 1;
        if (total > 0.0) {
            const double target = canonical_unit(rng) * total;
            double acc = 0.0;
            for (std::size_t p = 0; p < n; ++p) {
                acc += dist2[p];
                if (acc > target) {
                    chosen = p;
                    break;
                }
            }
        } else {
            chosen = static_cast<std::size_t>(rng() % n);  // all points coincide
        }
        for (std::size_t c = 0; c < dim; ++c) centers(ci, c) = points(chosen, c);
    }

    std::vector<std::size_t> assignment(n, 0);
    std::vector<std::size_t> counts(k, 0);
    double inertia = 0.0;
    for (int iter = 0; iter < max_iters; ++iter) {
        bool changed = false;
        inertia = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_c = 0;
            for (std::size_t ci = 0; ci < k; ++ci) {
                const double d = sq_dist(points.row(p), centers.row(ci));
                if (d < best) {
                    best = d;
                    best_c = ci;
                }
            }
            if (assignment[p] != best_c) {
                assignment[p] = best_c;
                changed = true;
            }
            inertia += best;
        }
        if (!changed && iter > 0) break;

        // recompute centers
        counts.assign(k, 0);
        Matrix sums(k, dim);
        for (std::size_t p = 0; p < n; ++p) {
            const std::size_t ci = assignment[p];
            ++counts[ci];
            for (std::size_t c = 0; c < dim; ++c) sums(ci, c) += points(p, c);
        }
        for (std::size_t ci = 0; ci < k; ++ci) {
            if (counts[ci] == 0) {
                // adopt the point farthest from its current center
                double far = -1.0;
                std::size_t far_p = 0;
                for (std::size_t p = 0; p < n; ++p) {
                    const double d = sq_dist(points.row(p), centers.row(assignment[p]));
                    if (d > far) {
                        far = d;
                        far_p = p;
                    }
                }
                for (std::size_t c = 0; c < dim; ++c) centers(ci, c) = points(far_p, c);
                continue;
            }
            const double inv = 1.0 / static_cast<double>(counts[ci]);
            for (std::size_t c = 0; c < dim; ++c) centers(ci, c) = sums(ci, c) * inv;
        }
    }
    return {std::move(assignment), inertia};
}

}  // namespace detail

// Lloyd iterations with k-means++ seeding, `restarts` independent runs;
// the best inertia wins, ties going to the earliest restart. Each restart
// derives its own generator from (seed, restart index), so runs are
// reproducible regardless of scheduling.
inline KmeansResult kmeans(const Matrix& points, std::size_t k, std::uint64_t seed,
                           int restarts = 10, int max_iters = 100) {
    if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
    if (points.rows() < k) throw std::invalid_argument("kmeans: fewer points than clusters");
    KmeansResult best;
    bool have = false;
    for (int r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r));
        KmeansResult run = detail::kmeans_single(points, k, rng, max_iters);
        if (!have || run.inertia < best.inertia) {
            best = std::move(run);
            have = true;
        }
    }
    return best;
}

// Fraction of points whose cluster's majority gold label matches their
// own: sum over clusters of the dominant label count, divided by n.
inline double purity(std::span<const std::size_t> assignment, std::span<const std::size_t> labels,
                     std::size_t k_clusters, std::size_t k_labels) {
    if (assignment.size() != labels.size()) throw std::invalid_argument("purity: length mismatch");
    if (assignment.empty()) throw std::invalid_argument("purity: empty input");
    std::vector<std::size_t> counts(k_clusters * k_labels, 0);
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        ++counts[assignment[i] * k_labels + labels[i]];
    }
    std::size_t agree = 0;
    for (std::size_t c = 0; c < k_clusters; ++c) {
        std::size_t dominant = 0;
        for (std::size_t l = 0; l < k_labels; ++l) {
            dominant = std::max(dominant, counts[c * k_labels + l]);
        }
        agree += dominant;
    }
    return static_cast<double>(agree) / static_cast<double>(assignment.size());
}

}  // namespace wavembed

#endif  // WAVEMBED_KMEANS_HPP

#ifndef WAVEMBED_COMPRESS_HPP
#define WAVEMBED_COMPRESS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wavembed/dwt.hpp"
#include "wavembed/embedding.hpp"
#include "wavembed/wavelet_filters.hpp"

namespace wavembed {

// Recipe for subband-concatenation embeddings: which packet-tree nodes to
// keep, in which order. The paper-style display name follows the cX
// convention (path "AD" -> "cAD"): detail-of-approximation and so on.
struct CompressionSpec {
    std::string filter;
    std::vector<std::string> paths;
    std::string label;
};

inline void validate_spec(const CompressionSpec& spec) {
    if (spec.paths.empty()) throw std::invalid_argument("compression spec: no paths");
    for (std::size_t i = 0; i < spec.paths.size(); ++i) {
        const std::string& p = spec.paths[i];
        if (p.empty()) throw std::invalid_argument("compression spec: empty path");
        for (char c : p) {
            if (c != 'A' && c != 'D') {
                throw std::invalid_argument("compression spec: invalid path character '" +
                                            std::string(1, c) + "'");
            }
        }
        for (std::size_t j = i + 1; j < spec.paths.size(); ++j) {
            if (spec.paths[j] == p) {
                throw std::invalid_argument("compression spec: duplicate path '" + p + "'");
            }
        }
    }
}

// "D,AD,AAD" -> {"D", "AD", "AAD"}
inline std::vector<std::string> parse_path_list(std::string_view csv) {
    std::vector<std::string> paths;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        paths.emplace_back(csv.substr(start, comma - start));
        start = comma + 1;
        if (comma == csv.size()) break;
    }
    return paths;
}

inline std::string spec_label(std::span<const std::string> paths) {
    std::string label;
    for (const std::string& p : paths) {
        if (!label.empty()) label += '+';
        label += 'c';
        label += p;
    }
    return label;
}

// Exact output dimension by ceil-halving arithmetic, no data needed.
inline std::size_t output_dim(const CompressionSpec& spec, std::size_t dim) {
    validate_spec(spec);
    std::size_t total = 0;
    for (const std::string& p : spec.paths) total += subband_length(dim, p.size());
    return total;
}

inline std::vector<double> compress_word(std::span<const double> v, const WaveletFilter& filter,
                                         std::span<const std::string> paths) {
    std::vector<double> out;
    for (const std::string& p : paths) {
        Subband node = packet_node(v, filter, p);
        out.insert(out.end(), node.coeffs.begin(), node.coeffs.end());
    }
    return out;
}

inline std::vector<double> compress_word(std::span<const double> v, const CompressionSpec& spec) {
    validate_spec(spec);
    const WaveletFilter filter = make_filter(spec.filter);
    return compress_word(v, filter, spec.paths);
}

// Per-word compression of a whole table; vocabulary and order preserved,
// name annotated with the spec label.
inline EmbeddingTable compress_table(const EmbeddingTable& table, const CompressionSpec& spec) {
    validate_spec(spec);
    const WaveletFilter filter = make_filter(spec.filter);
    const std::string label = spec.label.empty() ? spec_label(spec.paths) : spec.label;

    EmbeddingTable out(output_dim(spec, table.dim()),
                       table.name().empty() ? label : table.name() + " " + label,
                       table.lowercase_keys());
    for (std::size_t i = 0; i < table.size(); ++i) {
        out.insert(table.vocab()[i], compress_word(table.vector_at(i), filter, spec.paths));
    }
    return out;
}

// Index subset for the random-pooling baseline: `keep` distinct indices
// out of `dim`, ascending. Depends only on (dim, keep, seed), so a
// table-level application draws one subset shared by every word.
inline std::vector<std::size_t> random_pool_indices(std::size_t dim, std::size_t keep,
                                                    std::uint64_t seed) {
    if (keep < 1 || keep > dim) {
        throw std::invalid_argument("random_pool: keep must be in [1, dim], got " +
                                    std::to_string(keep) + " of " + std::to_string(dim));
    }
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> pool(dim);
    for (std::size_t i = 0; i < dim; ++i) pool[i] = i;
    // partial Fisher-Yates; rng() % m is deterministic across platforms,
    // unlike std::uniform_int_distribution
    for (std::size_t i = 0; i < keep; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (dim - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(keep);
    std::sort(pool.begin(), pool.end());
    return pool;
}

inline std::vector<double> random_pool(std::span<const double> v, std::size_t keep,
                                       std::uint64_t seed) {
    std::vector<std::size_t> idx = random_pool_indices(v.size(), keep, seed);
    std::vector<double> out;
    out.reserve(keep);
    for (std::size_t i : idx) out.push_back(v[i]);
    return out;
}

inline EmbeddingTable random_pool_table(const EmbeddingTable& table, std::size_t keep,
                                        std::uint64_t seed) {
    std::vector<std::size_t> idx = random_pool_indices(table.dim(), keep, seed);
    EmbeddingTable out(keep, table.name().empty() ? "random-pool" : table.name() + " random-pool",
                       table.lowercase_keys());
    std::vector<double> row(keep);
    for (std::size_t w = 0; w < table.size(); ++w) {
        std::span<const double> v = table.vector_at(w);
        for (std::size_t i = 0; i < keep; ++i) row[i] = v[idx[i]];
        out.insert(table.vocab()[w], row);
    }
    return out;
}

inline std::vector<double> average_words(const std::vector<std::vector<double>>& words) {
    if (words.empty()) throw std::invalid_argument("average_words: empty list");
    const std::size_t dim = words.front().size();
    std::vector<double> mean(dim, 0.0);
    for (const auto& w : words) {
        if (w.size() != dim) throw std::invalid_argument("average_words: ragged vector lengths");
        for (std::size_t i = 0; i < dim; ++i) mean[i] += w[i];
    }
    const double inv = 1.0 / static_cast<double>(words.size());
    for (double& x : mean) x *= inv;
    return mean;
}

}  // namespace wavembed

#endif  // WAVEMBED_COMPRESS_HPP

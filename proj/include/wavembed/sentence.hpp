#ifndef WAVEMBED_SENTENCE_HPP
#define WAVEMBED_SENTENCE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavembed/compress.hpp"
#include "wavembed/dct.hpp"
#include "wavembed/dwt.hpp"
#include "wavembed/embedding.hpp"
#include "wavembed/error.hpp"
#include "wavembed/matrix.hpp"

namespace wavembed {

// Fixed-size sentence encoding: stack the N word vectors into an N x d
// matrix, replace each row by the concatenation of its 2^L depth-L packet
// subbands (canonical A<D order), optionally thin columns (K=2), then take
// the first K rows of the column-wise DCT.
//
//   K=1: output is the c[0] row, width 2^L * ceil_halve(d, L); equals d
//        when 2^L divides d.
//   K=2: every other column is dropped first (even block-local indices
//        kept, each subband block halving independently), so the two
//        concatenated coefficient rows again total d when 2^(L+1) | d.
//
// L=0 skips the wavelet step entirely (the plain DCT model); sentences
// shorter than K zero-fill the missing coefficient rows.

enum class OovPolicy { Skip, ZeroVector };
enum class EmptySentencePolicy { ZeroVector, Error };

struct SentenceEncoderConfig {
    std::string filter = "coif2";
    int levels = 1;        // L >= 0
    int coefficients = 1;  // K in {1, 2}
    bool lowercase = false;
    OovPolicy oov_policy = OovPolicy::Skip;
    EmptySentencePolicy empty_policy = EmptySentencePolicy::ZeroVector;
};

struct SentenceVector {
    std::vector<double> values;
    SentenceEncoderConfig config;
};

inline void validate_config(const SentenceEncoderConfig& cfg) {
    if (cfg.levels < 0) throw std::invalid_argument("sentence encoder: levels must be >= 0");
    if (cfg.coefficients != 1 && cfg.coefficients != 2) {
        throw std::invalid_argument("sentence encoder: K must be 1 or 2, got " +
                                    std::to_string(cfg.coefficients));
    }
}

// Output length for word dimension `dim`, independent of sentence length.
inline std::size_t encoded_length(const SentenceEncoderConfig& cfg, std::size_t dim) {
    validate_config(cfg);
    const std::size_t blocks = cfg.levels == 0 ? 1 : (std::size_t{1} << cfg.levels);
    std::size_t block_width = subband_length(dim, static_cast<std::size_t>(cfg.levels));
    if (cfg.coefficients == 2) block_width = (block_width + 1) / 2;
    return static_cast<std::size_t>(cfg.coefficients) * blocks * block_width;
}

inline SentenceVector encode(const std::vector<std::vector<double>>& words,
                             const SentenceEncoderConfig& cfg) {
    validate_config(cfg);
    if (words.empty()) throw std::invalid_argument("encode: no word vectors");
    const std::size_t n = words.size();
    const std::size_t dim = words.front().size();
    if (dim == 0) throw std::invalid_argument("encode: zero-dimensional words");
    for (const auto& w : words) {
        if (w.size() != dim) throw std::invalid_argument("encode: ragged word dimensions");
    }

    const std::size_t levels = static_cast<std::size_t>(cfg.levels);
    const std::size_t blocks = cfg.levels == 0 ? 1 : (std::size_t{1} << levels);
    const std::size_t block_width = subband_length(dim, levels);

    Matrix m(n, blocks * block_width);
    if (cfg.levels == 0) {
        for (std::size_t r = 0; r < n; ++r) {
            std::span<double> row = m.row(r);
            for (std::size_t c = 0; c < dim; ++c) row[c] = words[r][c];
        }
    } else {
        const WaveletFilter filter = make_filter(cfg.filter);
        for (std::size_t r = 0; r < n; ++r) {
            std::span<double> row = m.row(r);
            std::size_t offset = 0;
            for (const Subband& node : packet_level(words[r], filter, cfg.levels)) {
                for (double v : node.coeffs) row[offset++] = v;
            }
        }
    }

    if (cfg.coefficients == 2) {
        const std::size_t kept = (block_width + 1) / 2;
        Matrix thinned(n, blocks * kept);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t b = 0; b < blocks; ++b) {
                for (std::size_t c = 0; c < kept; ++c) {
                    thinned(r, b * kept + c) = m(r, b * block_width + 2 * c);
                }
            }
        }
        m = std::move(thinned);
    }

    const Matrix spectrum = dct_columns(m);
    const std::size_t width = spectrum.cols();
    SentenceVector out;
    out.config = cfg;
    out.values.resize(static_cast<std::size_t>(cfg.coefficients) * width, 0.0);
    for (std::size_t k = 0; k < static_cast<std::size_t>(cfg.coefficients); ++k) {
        if (k >= n) break;  // c[k] of an n-point column does not exist: stays zero
        for (std::size_t c = 0; c < width; ++c) out.values[k * width + c] = spectrum(k, c);
    }
    return out;
}

namespace detail {

inline std::vector<std::vector<double>> gather_word_vectors(std::span<const std::string> tokens,
                                                            const EmbeddingTable& table,
                                                            bool lowercase,
                                                            OovPolicy oov_policy) {
    std::vector<std::vector<double>> words;
    words.reserve(tokens.size());
    for (const std::string& token : tokens) {
        auto vec = table.lookup(lowercase ? to_lower_ascii(token) : token);
        if (vec) {
            words.emplace_back(vec->begin(), vec->end());
        } else if (oov_policy == OovPolicy::ZeroVector) {
            words.emplace_back(table.dim(), 0.0);
        }
    }
    return words;
}

}  // namespace detail

inline SentenceVector encode_tokens(std::span<const std::string> tokens,
                                    const EmbeddingTable& table,
                                    const SentenceEncoderConfig& cfg) {
    validate_config(cfg);
    auto words = detail::gather_word_vectors(tokens, table, cfg.lowercase, cfg.oov_policy);
    if (words.empty()) {
        if (cfg.empty_policy == EmptySentencePolicy::Error) {
            throw EmptySentenceError("encode_tokens: no representable words in sentence");
        }
        return {std::vector<double>(encoded_length(cfg, table.dim()), 0.0), cfg};
    }
    return encode(words, cfg);
}

// Mean-of-word-vectors baseline with the same OOV handling.
inline SentenceVector encode_avg(std::span<const std::string> tokens, const EmbeddingTable& table,
                                 bool lowercase, OovPolicy oov_policy) {
    auto words = detail::gather_word_vectors(tokens, table, lowercase, oov_policy);
    if (words.empty()) throw EmptySentenceError("encode_avg: no representable words in sentence");
    SentenceVector out;
    out.values = average_words(words);
    out.config.filter.clear();  // provenance: plain averaging, no transform
    out.config.levels = 0;
    out.config.lowercase = lowercase;
    out.config.oov_policy = oov_policy;
    return out;
}

}  // namespace wavembed

#endif  // WAVEMBED_SENTENCE_HPP

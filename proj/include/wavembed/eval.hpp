#ifndef WAVEMBED_EVAL_HPP
#define WAVEMBED_EVAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wavembed/detail/text.hpp"
#include "wavembed/embedding.hpp"
#include "wavembed/error.hpp"
#include "wavembed/kmeans.hpp"
#include "wavembed/sentence.hpp"
#include "wavembed/stats.hpp"

namespace wavembed {

struct EvalReport {
    std::string metric;
    double value = 0.0;
    std::size_t n_evaluated = 0;
    std::size_t n_skipped_oov = 0;
};

// ---------------------------------------------------------------------
// Datasets
// ---------------------------------------------------------------------

struct WordPair {
    std::string word1;
    std::string word2;
    double score = 0.0;
};

struct WordSimDataset {
    std::string name;
    std::vector<WordPair> pairs;
};

struct CategorizationItem {
    std::string word;
    std::string label;
};

struct CategorizationDataset {
    std::string name;
    std::vector<CategorizationItem> items;
    std::size_t num_categories = 0;
};

struct SentencePairRecord {
    std::string sentence1;
    std::string sentence2;
    double score = 0.0;
};

struct StsDataset {
    std::string name;
    std::vector<SentencePairRecord> pairs;
};

// word1 word2 score, whitespace or tab separated; '#' lines are comments.
inline WordSimDataset load_word_sim(std::istream& in, std::string name = {}) {
    WordSimDataset ds;
    ds.name = std::move(name);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = detail::split_whitespace(line);
        if (fields.size() != 3) continue;
        double score = 0.0;
        if (!detail::parse_double(fields[2], score) || std::isnan(score)) continue;
        ds.pairs.push_back({std::string(fields[0]), std::string(fields[1]), score});
    }
    if (ds.pairs.empty()) throw ParseError("word-similarity dataset has no usable pairs");
    return ds;
}

// word<TAB>category
inline CategorizationDataset load_categorization(std::istream& in, std::string name = {}) {
    CategorizationDataset ds;
    ds.name = std::move(name);
    std::map<std::string, std::size_t> seen;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) continue;
        CategorizationItem item{line.substr(0, tab), line.substr(tab + 1)};
        seen.try_emplace(item.label, seen.size());
        ds.items.push_back(std::move(item));
    }
    ds.num_categories = seen.size();
    if (ds.items.empty()) throw ParseError("categorization dataset has no usable items");
    if (ds.num_categories < 2) throw ParseError("categorization dataset needs >= 2 categories");
    return ds;
}

// sentence1<TAB>sentence2<TAB>score
inline StsDataset load_sts(std::istream& in, std::string name = {}) {
    StsDataset ds;
    ds.name = std::move(name);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::size_t t1 = line.find('\t');
        if (t1 == std::string::npos) continue;
        const std::size_t t2 = line.find('\t', t1 + 1);
        if (t2 == std::string::npos) continue;
        double score = 0.0;
        if (!detail::parse_double(std::string_view(line).substr(t2 + 1), score) ||
            std::isnan(score)) {
            continue;
        }
        ds.pairs.push_back({line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1), score});
    }
    if (ds.pairs.empty()) throw ParseError("sentence-pair dataset has no usable pairs");
    return ds;
}

// ---------------------------------------------------------------------
// Evaluations
// ---------------------------------------------------------------------

// Spearman correlation between model cosine similarities and gold scores.
// Pairs with an OOV word on either side are skipped and counted.
inline EvalReport eval_word_similarity(const EmbeddingTable& table, const WordSimDataset& ds) {
    std::vector<double> model;
    std::vector<double> gold;
    std::size_t skipped = 0;
    for (const WordPair& p : ds.pairs) {
        auto u = table.lookup(p.word1);
        auto v = table.lookup(p.word2);
        if (!u || !v) {
            ++skipped;
            continue;
        }
        model.push_back(cosine(*u, *v));
        gold.push_back(p.score);
    }
    if (model.size() < 2) {
        throw InsufficientDataError("eval_word_similarity: fewer than 2 evaluable pairs (" +
                                    std::to_string(skipped) + " skipped as OOV)");
    }
    return {"spearman", spearman(model, gold), model.size(), skipped};
}

// Top-k cosine neighbours of `word`, query excluded, ties broken by
// vocabulary order. Zero-norm candidates cannot be ranked and are skipped.
inline std::vector<std::pair<std::string, double>> knn(const EmbeddingTable& table,
                                                       std::string_view word, std::size_t k) {
    if (k < 1) throw std::invalid_argument("knn: k must be >= 1");
    auto query_idx = table.index_of(word);
    if (!query_idx) throw OovError("knn: query word '" + std::string(word) + "' not in vocabulary");
    std::span<const double> q = table.vector_at(*query_idx);

    std::vector<std::pair<std::size_t, double>> scored;
    scored.reserve(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (i == *query_idx) continue;
        std::span<const double> v = table.vector_at(i);
        double norm2 = 0.0;
        for (double x : v) norm2 += x * x;
        if (norm2 == 0.0) continue;
        scored.emplace_back(i, cosine(q, v));
    }
    const std::size_t take = std::min(k, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take),
                      scored.end(), [](const auto& a, const auto& b) {
                          if (a.second != b.second) return a.second > b.second;
                          return a.first < b.first;
                      });
    std::vector<std::pair<std::string, double>> out;
    out.reserve(take);
    for (std::size_t i = 0; i < take; ++i) {
        out.emplace_back(table.vocab()[scored[i].first], scored[i].second);
    }
    return out;
}

// k-means (k = number of gold categories, k-means++ seeding, 10 restarts,
// best inertia) over the evaluable word vectors; metric is cluster purity.
inline EvalReport eval_categorization(const EmbeddingTable& table, const CategorizationDataset& ds,
                                      std::uint64_t seed) {
    std::map<std::string, std::size_t> label_ids;
    std::vector<std::size_t> labels;
    std::vector<std::size_t> rows;
    std::size_t skipped = 0;
    for (const CategorizationItem& item : ds.items) {
        auto idx = table.index_of(item.word);
        if (!idx) {
            ++skipped;
            continue;
        }
        rows.push_back(*idx);
        labels.push_back(label_ids.try_emplace(item.label, label_ids.size()).first->second);
    }
    const std::size_t k = ds.num_categories;
    if (rows.size() < k) {
        throw InsufficientDataError("eval_categorization: " + std::to_string(rows.size()) +
                                    " evaluable words for " + std::to_string(k) + " categories");
    }
    Matrix points(rows.size(), table.dim());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::span<const double> v = table.vector_at(rows[r]);
        for (std::size_t c = 0; c < v.size(); ++c) points(r, c) = v[c];
    }
    KmeansResult clusters = kmeans(points, k, seed);
    const double p = purity(clusters.assignment, labels, k, label_ids.size());
    return {"purity", p, rows.size(), skipped};
}

// Sentence encoder for STS-style evaluation: tokens -> embedding. A zero
// (or empty) result marks the sentence as unencodable; such pairs are
// skipped and counted.
using SentenceEncoderFn = std::function<std::vector<double>(std::span<const std::string>)>;

inline EvalReport eval_sts(const StsDataset& ds, const SentenceEncoderFn& encoder) {
    std::vector<double> model;
    std::vector<double> gold;
    std::size_t skipped = 0;
    for (const SentencePairRecord& pair : ds.pairs) {
        auto tokens1 = detail::split_whitespace(pair.sentence1);
        auto tokens2 = detail::split_whitespace(pair.sentence2);
        std::vector<std::string> t1(tokens1.begin(), tokens1.end());
        std::vector<std::string> t2(tokens2.begin(), tokens2.end());
        const std::vector<double> e1 = encoder(t1);
        const std::vector<double> e2 = encoder(t2);
        auto is_zero = [](const std::vector<double>& v) {
            for (double x : v) {
                if (x != 0.0) return false;
            }
            return true;
        };
        if (e1.empty() || e2.empty() || is_zero(e1) || is_zero(e2)) {
            ++skipped;
            continue;
        }
        model.push_back(cosine(e1, e2));
        gold.push_back(pair.score);
    }
    if (model.size() < 2) {
        throw InsufficientDataError("eval_sts: fewer than 2 evaluable pairs (" +
                                    std::to_string(skipped) + " skipped)");
    }
    return {"pearson", pearson(model, gold), model.size(), skipped};
}

inline EvalReport eval_sts(const StsDataset& ds, const EmbeddingTable& table,
                           const SentenceEncoderConfig& cfg) {
    SentenceEncoderConfig zero_cfg = cfg;
    zero_cfg.empty_policy = EmptySentencePolicy::ZeroVector;
    return eval_sts(ds, [&](std::span<const std::string> tokens) {
        return encode_tokens(tokens, table, zero_cfg).values;
    });
}

// Averaging baseline over the same dataset and skip semantics.
inline EvalReport eval_sts_avg(const StsDataset& ds, const EmbeddingTable& table, bool lowercase) {
    return eval_sts(ds, [&](std::span<const std::string> tokens) -> std::vector<double> {
        auto words = detail::gather_word_vectors(tokens, table, lowercase, OovPolicy::Skip);
        if (words.empty()) return {};
        return average_words(words);
    });
}

}  // namespace wavembed

#endif  // WAVEMBED_EVAL_HPP

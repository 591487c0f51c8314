#ifndef WAVEMBED_EMBEDDING_HPP
#define WAVEMBED_EMBEDDING_HPP

#include <cstddef>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wavembed/detail/text.hpp"
#include "wavembed/error.hpp"

namespace wavembed {

// Vocabulary-to-vector map with a uniform dimension. Insertion order is
// preserved; lookups go through a hash index. Immutable in practice once
// loaded, so concurrent readers need no synchronization.
class EmbeddingTable {
  public:
    EmbeddingTable() = default;
    EmbeddingTable(std::size_t dim, std::string name = {}, bool lowercase_keys = false)
        : dim_(dim), lowercase_(lowercase_keys), name_(std::move(name)) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return vocab_.size(); }
    bool lowercase_keys() const noexcept { return lowercase_; }
    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const std::vector<std::string>& vocab() const noexcept { return vocab_; }

    std::span<const double> vector_at(std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }

    // Exact-match retrieval (after the table's case policy); absent means
    // out-of-vocabulary and is never an error.
    std::optional<std::span<const double>> lookup(std::string_view word) const {
        std::string key = lowercase_ ? detail::to_lower_ascii(word) : std::string(word);
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return vector_at(it->second);
    }

    std::optional<std::size_t> index_of(std::string_view word) const {
        std::string key = lowercase_ ? detail::to_lower_ascii(word) : std::string(word);
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Returns false (and keeps the first occurrence) on duplicate tokens.
    bool insert(std::string token, std::span<const double> vec) {
        if (vec.size() != dim_) {
            throw DimensionError("insert: vector of length " + std::to_string(vec.size()) +
                                 " into table of dimension " + std::to_string(dim_));
        }
        if (lowercase_) token = detail::to_lower_ascii(token);
        auto [it, added] = index_.try_emplace(token, vocab_.size());
        if (!added) return false;
        vocab_.push_back(std::move(token));
        data_.insert(data_.end(), vec.begin(), vec.end());
        return true;
    }

  private:
    std::size_t dim_ = 0;
    bool lowercase_ = false;
    std::string name_;
    std::vector<std::string> vocab_;
    std::vector<double> data_;  // size() * dim_ flat, row per word
    std::unordered_map<std::string, std::size_t> index_;
};

struct LoadOptions {
    std::optional<std::size_t> expected_dim;
    bool lowercase = false;
    std::optional<std::size_t> max_vocab;
};

struct LoadResult {
    EmbeddingTable table;
    std::size_t skipped_lines = 0;     // malformed records
    std::size_t duplicate_tokens = 0;  // later occurrences dropped
};

// Whitespace text format, one record per line: token followed by d numbers.
// A first line of exactly two integers is the fastText .vec header "V D"
// and is consumed, not treated as a word. CRLF is accepted; duplicate
// tokens keep the first occurrence; unparseable lines are skipped and
// counted. Dimension disagreements between parseable lines are an error.
inline LoadResult load_embeddings(std::istream& in, const LoadOptions& options = {}) {
    LoadResult result;
    std::optional<std::size_t> dim = options.expected_dim;
    const bool dim_was_requested = options.expected_dim.has_value();
    bool table_started = false;
    bool saw_header = false;
    bool any_line = false;

    std::string line;
    std::size_t line_no = 0;
    std::vector<double> values;
    while (std::getline(in, line)) {
        ++line_no;
        any_line = true;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto fields = detail::split_whitespace(line);
        if (line_no == 1 && fields.size() == 2) {
            std::size_t v = 0;
            std::size_t d = 0;
            if (detail::parse_size(fields[0], v) && detail::parse_size(fields[1], d)) {
                saw_header = true;
                if (dim && d != *dim) {
                    throw DimensionError("header declares dimension " + std::to_string(d) +
                                         " but expected " + std::to_string(*dim));
                }
                if (!dim) dim = d;
                continue;
            }
        }
        if (fields.size() < 2) {
            ++result.skipped_lines;
            continue;
        }

        values.clear();
        values.reserve(fields.size() - 1);
        bool ok = true;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            double x = 0.0;
            if (!detail::parse_double(fields[i], x)) {
                ok = false;
                break;
            }
            values.push_back(x);
        }
        if (!ok) {
            ++result.skipped_lines;
            continue;
        }

        if (!dim) dim = values.size();
        if (values.size() != *dim) {
            if (dim_was_requested) {
                throw DimensionError("line " + std::to_string(line_no) + ": record of dimension " +
                                     std::to_string(values.size()) + " does not match expected " +
                                     std::to_string(*dim));
            }
            throw DimensionError("line " + std::to_string(line_no) +
                                 ": inconsistent dimension " + std::to_string(values.size()) +
                                 " (file established " + std::to_string(*dim) + ")");
        }
        if (!table_started) {
            result.table = EmbeddingTable(*dim, {}, options.lowercase);
            table_started = true;
        }
        if (!result.table.insert(std::string(fields[0]), values)) {
            ++result.duplicate_tokens;
            continue;
        }
        if (options.max_vocab && result.table.size() >= *options.max_vocab) break;
    }

    if (!any_line) throw ParseError("load_embeddings: empty input");
    if (!table_started) {
        if (!saw_header && result.skipped_lines > 0) {
            throw ParseError("load_embeddings: no parseable records");
        }
        result.table = EmbeddingTable(dim.value_or(0), {}, options.lowercase);
    }
    return result;
}

// Same line format, no header, LF line endings, fixed decimal precision.
inline void save_embeddings(const EmbeddingTable& table, std::ostream& out, int precision = 6) {
    if (precision < 0 || precision > 100) {
        throw std::invalid_argument("save_embeddings: precision must be in [0, 100]");
    }
    char buf[512];  // %.100f of the largest double still fits
    for (std::size_t i = 0; i < table.size(); ++i) {
        out << table.vocab()[i];
        for (double x : table.vector_at(i)) {
            std::snprintf(buf, sizeof(buf), " %.*f", precision, x);
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw ParseError("save_embeddings: write failure");
}

}  // namespace wavembed

#endif  // WAVEMBED_EMBEDDING_HPP

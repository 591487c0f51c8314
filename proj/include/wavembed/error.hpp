#ifndef WAVEMBED_ERROR_HPP
#define WAVEMBED_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wavembed {

// Unsupported wavelet family name.
struct UnknownFilterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Embedding or dataset record whose width disagrees with the table.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unreadable or structurally empty input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Correlation of a constant series, cosine of a zero vector, and similar
// inputs for which the requested statistic is undefined.
struct DegenerateInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sentence with no representable words under the active policies.
struct EmptySentenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Query word absent from the vocabulary where a vector is required.
struct OovError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dataset too small to evaluate (fewer than 2 pairs, fewer words than
// clusters, ...).
struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wavembed

#endif  // WAVEMBED_ERROR_HPP

#ifndef WAVEMBED_WAVELET_FILTERS_HPP
#define WAVEMBED_WAVELET_FILTERS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wavembed/detail/wavelet_tables.hpp"
#include "wavembed/error.hpp"

namespace wavembed {

// Orthogonal decomposition filter pair. `lowpass` holds the published
// decomposition taps; `highpass` is derived by the quadrature mirror
// relation g[k] = (-1)^k h[len-1-k], so sum(h) = sqrt(2), sum(g) = 0 and
// the shift-orthonormality sum_k h[k]h[k+2m] = delta(m) all hold to
// machine precision.
struct WaveletFilter {
    std::string name;
    std::vector<double> lowpass;
    std::vector<double> highpass;

    std::size_t length() const noexcept { return lowpass.size(); }
};

// Supported family members: haar, db2..db10, sym2..sym10, coif1..coif5.
inline const std::vector<std::string>& filter_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        v.reserve(detail::kFilterCount);
        for (const auto& entry : detail::kFilterTable) v.emplace_back(entry.name);
        return v;
    }();
    return names;
}

inline WaveletFilter make_filter(std::string_view name) {
    for (const auto& entry : detail::kFilterTable) {
        if (entry.name != name) continue;
        WaveletFilter f;
        f.name = std::string(name);
        f.lowpass.assign(entry.dec_lo.begin(), entry.dec_lo.end());
        const std::size_t len = f.lowpass.size();
        f.highpass.resize(len);
        for (std::size_t k = 0; k < len; ++k) {
            const double tap = f.lowpass[len - 1 - k];
            f.highpass[k] = (k % 2 == 0) ? tap : -tap;
        }
        return f;
    }
    throw UnknownFilterError("unknown wavelet family: '" + std::string(name) + "'");
}

}  // namespace wavembed

#endif  // WAVEMBED_WAVELET_FILTERS_HPP

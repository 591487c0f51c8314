#ifndef WAVEMBED_WAVEMBED_HPP
#define WAVEMBED_WAVEMBED_HPP

#include "wavembed/compress.hpp"
#include "wavembed/dct.hpp"
#include "wavembed/dwt.hpp"
#include "wavembed/embedding.hpp"
#include "wavembed/error.hpp"
#include "wavembed/eval.hpp"
#include "wavembed/kmeans.hpp"
#include "wavembed/matrix.hpp"
#include "wavembed/sentence.hpp"
#include "wavembed/stats.hpp"
#include "wavembed/wavelet_filters.hpp"

#endif  // WAVEMBED_WAVEMBED_HPP

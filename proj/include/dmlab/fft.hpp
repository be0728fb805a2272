#pragma once

#include <vector>

#include "dmlab/util.hpp"

namespace dmlab::detail {

// Unnormalized DFT, kernel exp(-2*pi*i*j*m/n); backward uses the + sign.
// Plans are cached per size; execution is thread-safe.
std::vector<complexd> dft_forward(const std::vector<complexd>& in);
std::vector<complexd> dft_backward(const std::vector<complexd>& in);

}  // namespace dmlab::detail

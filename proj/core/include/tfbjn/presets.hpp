#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tfbjn/metrics.hpp"
#include "tfbjn/signal.hpp"

namespace tfbjn {

// Pinned synthetic scenes (defaults n = 512, fs = 32 Hz, grid t in [-8, 8)):
//   zero            all-zero signal
//   four-gaussians  unit atoms at (t,f) = (-3,0),(3,0),(0,-3),(0,3), spread 1
//   two-gaussians   unit atoms at (-2,-1),(2,1), spread 1
//   two-chirps      unit chirps sweeping 1->5 Hz and 3->7 Hz
//   bat-surrogate   descending chirps 7->3, 5.5->2, 4->1.5 Hz

std::vector<std::string_view> preset_names();

Signal make_preset(std::string_view name, std::size_t n_samples = 512, double sample_rate = 32.0);

/// Midpoint cross-term box for presets with two components: centered at the
/// component midpoint, atom presets use side = 4 spreads, the chirp preset
/// the central half of the sweep between the ridges.
std::optional<TFBox> preset_cross_term_box(std::string_view name);

}  // namespace tfbjn

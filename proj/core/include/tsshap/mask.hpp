#ifndef TSSHAP_MASK_HPP
#define TSSHAP_MASK_HPP

#include "tsshap/types.hpp"

namespace tsshap {

/// h_x: cells owned by players in `z` keep the window values, every other
/// cell takes the baseline value. In feature mode a player toggles its whole
/// trajectory. `out` must already have the window's shape; no allocation
/// happens, so this is the call to use inside enumeration loops.
void mask_into(const SeriesWindow& window, const Coalition& z, const Baseline& baseline,
               const PlayerIndexing& idx, SeriesWindow& out);

/// Pure wrapper around mask_into that returns a fresh window.
SeriesWindow mask_window(const SeriesWindow& window, const Coalition& z,
                         const Baseline& baseline, const PlayerIndexing& idx);

/// Fast path for cell-mode enumeration with d <= 64: coalition given as the
/// low d bits of `mask`, players in cell order.
void mask_into_bits(const SeriesWindow& window, std::uint64_t mask, const Baseline& baseline,
                    const PlayerIndexing& idx, SeriesWindow& out);

}  // namespace tsshap

#endif

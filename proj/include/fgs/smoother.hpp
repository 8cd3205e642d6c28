#pragma once

#include <optional>

#include "fgs/config.hpp"
#include "fgs/image.hpp"
#include "fgs/trace.hpp"
#include "fgs/weights.hpp"

namespace fgs {

enum class PassOrder { kRowsFirst, kColumnsFirst };

struct SmoothOptions {
  PassOrder order = PassOrder::kRowsFirst;
  // Initial value of both split variables; defaults to f.
  std::optional<Image> warm_start;
};

struct SmoothResult {
  Image u;
  SolverTrace trace;
};

// Alternating 1D smoothing with penalty continuation. Each iteration solves
// every row (weights w.h) against (f + beta v) / (1 + beta), then every column
// (weights w.v) against (f + beta u) / (1 + beta), then grows beta by alpha.
// cfg.prior must be kWls or kWtv. Returns the row-pass variable u and the
// energy at u after each iteration.
//
// Rows, and then columns, are solved concurrently with OpenMP.
SmoothResult smooth(const Image& f, const EdgeWeights& w,
                    const SmootherConfig& cfg, const SmoothOptions& opts = {});

// Same iteration, single-threaded. Bit-identical to smooth().
SmoothResult smooth_serial(const Image& f, const EdgeWeights& w,
                           const SmootherConfig& cfg,
                           const SmoothOptions& opts = {});

// ||u - v||_inf
double coupling_gap(const Image& u, const Image& v);

}  // namespace fgs

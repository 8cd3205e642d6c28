#include "fgs/smoother.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "fgs/energy.hpp"
#include "fgs/errors.hpp"
#include "fgs/solver1d.hpp"

namespace fgs {
namespace {

enum class Exec { kSerial, kParallel };
enum class Axis { kRows, kColumns };

struct LineScratch {
  LineWorkspace ws;
  std::vector<double> rhs, weights, out;
};

// One 1D pass over every row (or column) of every channel:
//   dst = argmin over lines of (z - (f + beta other) / (1 + beta))^2
//         + scale * w * phi(Dz)
// where scale = 2 lambda / (1 + beta).
class Pass {
 public:
  Pass(const Image& f, const EdgeWeights& w, Prior prior)
      : f_(f), w_(w), prior_(prior) {}

  void run(Axis axis, const Image& other, Image& dst, double beta, double scale,
           Exec exec) const {
    const int W = f_.width(), H = f_.height();
    const int per_channel = axis == Axis::kRows ? H : W;
    const int lines = per_channel * f_.channels();
    auto body = [&](int line, LineScratch& s) {
      const int c = line / per_channel, i = line % per_channel;
      if (axis == Axis::kRows)
        solve_row(c, i, other, dst, beta, scale, s);
      else
        solve_column(c, i, other, dst, beta, scale, s);
    };
    if (exec == Exec::kParallel) {
      // Inputs are validated before the first pass, so the 1D solvers
      // cannot throw inside the parallel region.
#pragma omp parallel
      {
        LineScratch s;
#pragma omp for schedule(static)
        for (int line = 0; line < lines; ++line) body(line, s);
      }
    } else {
      LineScratch s;
      for (int line = 0; line < lines; ++line) body(line, s);
    }
  }

 private:
  void solve_line(std::span<const double> rhs, std::span<const double> w,
                  std::span<double> out, LineWorkspace& ws) const {
    if (prior_ == Prior::kWls)
      wls_1d(rhs, w, out, ws);
    else
      wtv_1d(rhs, w, out, ws);
  }

  void solve_row(int c, int y, const Image& other, Image& dst, double beta,
                 double scale, LineScratch& s) const {
    const int W = f_.width();
    s.rhs.resize(W);
    s.weights.resize(W - 1);
    const double t = beta / (1.0 + beta);
    for (int x = 0; x < W; ++x) {
      const double fx = f_.at(x, y, c);
      s.rhs[x] = fx + t * (other.at(x, y, c) - fx);
    }
    for (int x = 0; x + 1 < W; ++x) s.weights[x] = scale * w_.h(x, y);
    solve_line(s.rhs, s.weights,
               dst.plane(c).subspan(static_cast<std::size_t>(y) * W, W), s.ws);
  }

  void solve_column(int c, int x, const Image& other, Image& dst, double beta,
                    double scale, LineScratch& s) const {
    const int H = f_.height();
    s.rhs.resize(H);
    s.weights.resize(H - 1);
    s.out.resize(H);
    const double t = beta / (1.0 + beta);
    for (int y = 0; y < H; ++y) {
      const double fy = f_.at(x, y, c);
      s.rhs[y] = fy + t * (other.at(x, y, c) - fy);
    }
    for (int y = 0; y + 1 < H; ++y) s.weights[y] = scale * w_.v(x, y);
    solve_line(s.rhs, s.weights, s.out, s.ws);
    for (int y = 0; y < H; ++y) dst.at(x, y, c) = s.out[y];
  }

  const Image& f_;
  const EdgeWeights& w_;
  Prior prior_;
};

double mean_abs_diff(const Image& a, const Image& b) {
  double s = 0.0;
  const auto& as = a.samples();
  const auto& bs = b.samples();
  for (std::size_t i = 0; i < as.size(); ++i) s += std::abs(as[i] - bs[i]);
  return s / static_cast<double>(as.size());
}

SmoothResult smooth_impl(const Image& f, const EdgeWeights& w,
                         const SmootherConfig& cfg, const SmoothOptions& opts,
                         Exec exec) {
  cfg.validate();
  if (cfg.prior != Prior::kWls && cfg.prior != Prior::kWtv)
    throw ParameterError(std::string("smooth: prior must be wls or wtv, got ") +
                         prior_name(cfg.prior));
  if (!w.matches(f)) throw DimensionError("smooth: weights do not match image");
  f.check_finite();
  for (double e : w.horizontal())
    if (!(e >= 0.0) || !std::isfinite(e))
      throw ParameterError("smooth: invalid edge weight");
  for (double e : w.vertical())
    if (!(e >= 0.0) || !std::isfinite(e))
      throw ParameterError("smooth: invalid edge weight");

  Image u = f, v = f;
  if (opts.warm_start) {
    if (!opts.warm_start->same_shape(f))
      throw DimensionError("smooth: warm start does not match image");
    opts.warm_start->check_finite();
    u = v = *opts.warm_start;
  }

  const Pass pass(f, w, cfg.prior);
  const Potential pot =
      cfg.prior == Prior::kWls ? Potential::quadratic() : Potential::abs();
  const Axis first =
      opts.order == PassOrder::kRowsFirst ? Axis::kRows : Axis::kColumns;
  const Axis second = first == Axis::kRows ? Axis::kColumns : Axis::kRows;

  SmoothResult result;
  result.trace.entries.reserve(cfg.iters_T);
  Image previous = u;
  double beta = cfg.beta1;
  for (int t = 1; t <= cfg.iters_T; ++t) {
    const auto start = std::chrono::steady_clock::now();
    const double scale = 2.0 * cfg.lambda / (1.0 + beta);
    pass.run(first, v, u, beta, scale, exec);
    pass.run(second, u, v, beta, scale, exec);
    beta *= cfg.alpha;
    const auto stop = std::chrono::steady_clock::now();

    TraceEntry e;
    e.iteration = t;
    e.energy = energy(u, f, w, cfg.lambda, pot);
    e.gap = coupling_gap(u, v);
    e.ms = std::chrono::duration<double, std::milli>(stop - start).count();
    e.mean_step = mean_abs_diff(u, previous);
    result.trace.entries.push_back(e);
    previous = u;
  }
  result.u = std::move(u);
  return result;
}

}  // namespace

SmoothResult smooth(const Image& f, const EdgeWeights& w,
                    const SmootherConfig& cfg, const SmoothOptions& opts) {
  return smooth_impl(f, w, cfg, opts, Exec::kParallel);
}

SmoothResult smooth_serial(const Image& f, const EdgeWeights& w,
                           const SmootherConfig& cfg,
                           const SmoothOptions& opts) {
  return smooth_impl(f, w, cfg, opts, Exec::kSerial);
}

double coupling_gap(const Image& u, const Image& v) {
  if (!u.same_shape(v)) throw DimensionError("coupling_gap: shape mismatch");
  double g = 0.0;
  for (std::size_t i = 0; i < u.samples().size(); ++i)
    g = std::max(g, std::abs(u.samples()[i] - v.samples()[i]));
  return g;
}

}  // namespace fgs

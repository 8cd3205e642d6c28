#include "fgs/reweighted.hpp"

#include <cmath>
#include <vector>

#include "fgs/energy.hpp"
#include "fgs/errors.hpp"

namespace fgs {
namespace {

template <class WeightFn>
EdgeWeights surrogate_weights(const Image& u, const EdgeWeights& w,
                              WeightFn&& fn) {
  if (u.channels() != 1)
    throw DimensionError("surrogate weights need a single-channel iterate");
  if (!w.matches(u)) throw DimensionError("weights do not match iterate");
  const int W = u.width(), H = u.height();
  EdgeWeights a(W, H);
  for (int y = 0; y < H; ++y)
    for (int x = 0; x + 1 < W; ++x)
      a.h(x, y) = w.h(x, y) * fn(u.at(x + 1, y) - u.at(x, y));
  for (int y = 0; y + 1 < H; ++y)
    for (int x = 0; x < W; ++x)
      a.v(x, y) = w.v(x, y) * fn(u.at(x, y + 1) - u.at(x, y));
  return a;
}

// Outer majorize-minimize loop. Channels are independent: with fixed w the
// energy separates over channels, so each gets its own surrogate weights.
template <class WeightMap>
SmoothResult reweight(const Image& f, const EdgeWeights& w,
                      const SmootherConfig& cfg, const Potential& pot,
                      Prior inner_prior, WeightMap&& weight_map) {
  SmootherConfig inner = cfg;
  inner.prior = inner_prior;
  inner.validate();
  if (!w.matches(f)) throw DimensionError("weights do not match image");

  std::vector<Image> fc, uc;
  for (int c = 0; c < f.channels(); ++c) fc.push_back(channel(f, c));
  uc = fc;

  SmoothResult result;
  for (int k = 1; k <= cfg.iters_K; ++k) {
    TraceEntry e;
    e.iteration = k;
    double step = 0.0, total_energy = 0.0;
    for (int c = 0; c < f.channels(); ++c) {
      const EdgeWeights a = weight_map(uc[c]);
      SmoothOptions opts;
      opts.warm_start = uc[c];
      SmoothResult r = smooth(fc[c], a, inner, opts);
      const TraceEntry& last = r.trace.back();
      e.gap = std::max(e.gap, last.gap);
      for (const auto& t : r.trace.entries) e.ms += t.ms;
      for (std::size_t i = 0; i < r.u.samples().size(); ++i)
        step += std::abs(r.u.samples()[i] - uc[c].samples()[i]);
      uc[c] = std::move(r.u);
      total_energy += energy(uc[c], fc[c], w, cfg.lambda, pot);
    }
    e.energy = total_energy;
    e.mean_step = step / static_cast<double>(f.samples().size());
    result.trace.entries.push_back(e);
  }
  result.u = merge_channels(uc);
  return result;
}

}  // namespace

EdgeWeights irls_weights(const Image& u, const EdgeWeights& w,
                         const Potential& pot) {
  if (!pot.has_irls_ratio())
    throw ParameterError("potential " + pot.name() +
                         " has no finite IRLS weight at zero");
  return surrogate_weights(u, w, [&](double d) { return pot.irls_ratio(d); });
}

EdgeWeights irl1_weights(const Image& u, const EdgeWeights& w,
                         const Potential& pot) {
  if (!pot.has_irl1_weight())
    throw ParameterError("potential " + pot.name() + " has no IRL1 weight");
  return surrogate_weights(u, w, [&](double d) { return pot.irl1_weight(d); });
}

SmoothResult firls(const Image& f, const EdgeWeights& w,
                   const SmootherConfig& cfg, const Potential& pot) {
  if (!pot.has_irls_ratio())
    throw ParameterError("FIRLS: potential " + pot.name() +
                         " has no finite IRLS weight at zero");
  return reweight(f, w, cfg, pot, Prior::kWls,
                  [&](const Image& u) { return irls_weights(u, w, pot); });
}

SmoothResult firl1(const Image& f, const EdgeWeights& w,
                   const SmootherConfig& cfg, const Potential& pot) {
  if (!pot.has_irl1_weight())
    throw ParameterError("FIRL1: potential " + pot.name() +
                         " has no IRL1 weight");
  return reweight(f, w, cfg, pot, Prior::kWtv,
                  [&](const Image& u) { return irl1_weights(u, w, pot); });
}

SmoothResult run(const Image& f, const EdgeWeights& w,
                 const SmootherConfig& cfg) {
  switch (cfg.prior) {
    case Prior::kWls:
    case Prior::kWtv: return smooth(f, w, cfg);
    case Prior::kFirls: return firls(f, w, cfg, cfg.potential);
    case Prior::kFirl1: return firl1(f, w, cfg, cfg.potential);
  }
  throw ParameterError("unknown prior");
}

}  // namespace fgs

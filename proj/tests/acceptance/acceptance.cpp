// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fgs/energy.hpp"
#include "fgs/reference.hpp"
#include "fgs/reweighted.hpp"
#include "fgs/smoother.hpp"
#include "fgs/solver1d.hpp"
#include "fgs/tridiagonal.hpp"
#include "support.hpp"

using namespace fgs;
using fgs::testing::Rng;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double inf_norm(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

SmootherConfig wls_config(int T, double alpha = 4.0) {
  SmootherConfig cfg;
  cfg.prior = Prior::kWls;
  cfg.iters_T = T;
  cfg.alpha = alpha;
  return cfg;
}

// Largest rise of a trace over its predecessor, as a fraction of e0.
double worst_rise(const std::vector<double>& e, double e0) {
  double worst = 0.0;
  for (std::size_t i = 1; i < e.size(); ++i) worst = std::max(worst, (e[i] - e[i - 1]) / e0);
  return worst;
}

Outcome wtv_oracle() {
  Rng rng(1001);
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.integer(2, 32);
    const auto f = rng.vector(n, 0, 255);
    const auto w = rng.vector(n - 1, 0, 200);
    worst = std::max(worst, max_abs_diff(wtv_1d(f, w), reference::wtv_1d(f, w).z));
  }
  const double s = seconds_since(t0);
  return {worst <= 1e-6 && s < 30.0, fmt("max err %.3g over 1000 signals, %.2f s", worst, s)};
}

Outcome wls_exact() {
  Rng rng(1002);
  double worst = 0.0, worst_cert = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.integer(1, 64);
    const auto f = rng.vector(n, 0, 255);
    const auto w = rng.vector(n - 1, 0, 500);
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) a[i * n + i] = 1.0;
    for (int i = 0; i + 1 < n; ++i) {
      a[i * n + i] += w[i];
      a[(i + 1) * n + i + 1] += w[i];
      a[i * n + i + 1] -= w[i];
      a[(i + 1) * n + i] -= w[i];
    }
    const auto z = wls_1d(f, w);
    worst = std::max(worst, max_abs_diff(z, reference::dense_solve(a, f)));
    worst_cert = std::max(worst_cert,
                          residual_inf(wls_system(w), z, f) / (1.0 + inf_norm(f)));
  }
  return {worst <= 1e-8 && worst_cert <= 1e-8,
          fmt("max err %.3g, max scaled residual %.3g", worst, worst_cert)};
}

Outcome wtv_kkt() {
  Rng rng(1003);
  int failures = 0, total = 0;
  double boundary = 0.0, box = 0.0, sat = 0.0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = rng.integer(1, 200);
    auto f = rng.vector(n, 0, 255);
    if (trial % 3 == 0)
      for (double& v : f) v = std::round(v / 32.0) * 32.0;
    auto w = rng.vector(n - 1, 0, trial % 2 ? 400.0 : 20.0);
    if (trial % 5 == 0)
      for (double& v : w) v = rng.uniform() < 0.2 ? 0.0 : v;
    const auto k = check_wtv_optimality(f, w, wtv_1d(f, w));
    ++total;
    failures += !k.ok;
    boundary = std::max(boundary, k.boundary);
    box = std::max(box, k.box_excess);
    sat = std::max(sat, k.saturation);
  }
  return {failures == 0, fmt("%d/%d certified; boundary %.2g, box excess %.2g, saturation %.2g",
                             total - failures, total, boundary, box, sat)};
}

Outcome wls_ssim() {
  const int sizes[10][2] = {{64, 64},  {80, 64},   {96, 72},  {64, 128}, {128, 96},
                            {112, 80}, {72, 112},  {128, 64}, {100, 100}, {128, 128}};
  const auto t0 = Clock::now();
  double min3 = 1.0, min5 = 1.0, mean3 = 0.0, mean5 = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Image f = fgs::testing::synthetic_scene(sizes[i][0], sizes[i][1], i,
                                                  i % 3 == 2 ? 1.0 : 4.0, i == 4 ? 3 : 1);
    const auto w = compute_weights(f, 7.65);
    const Image exact = reference::wls_2d(f, w, 400.0);
    const double s3 = reference::ssim(smooth(f, w, wls_config(3)).u, exact);
    const double s5 = reference::ssim(smooth(f, w, wls_config(5)).u, exact);
    min3 = std::min(min3, s3), min5 = std::min(min5, s5);
    mean3 += s3 / 10, mean5 += s5 / 10;
  }
  const double s = seconds_since(t0);
  return {min3 >= 0.97 && min5 >= 0.985 && s < 60.0,
          fmt("T=3 min %.4f mean %.4f; T=5 min %.4f mean %.4f; %.2f s", min3, mean3, min5,
              mean5, s)};
}

Outcome convergence_profile() {
  const Image f = fgs::testing::synthetic_scene(128, 128, 0);
  const auto w = compute_weights(f, 7.65);
  Outcome out;
  for (Prior prior : {Prior::kWls, Prior::kWtv}) {
    auto cfg = wls_config(20);
    cfg.prior = prior;
    const auto pot = prior == Prior::kWls ? Potential::quadratic() : Potential::abs();
    const auto e = smooth(f, w, cfg).trace.energies();
    const double e0 = energy(f, f, w, cfg.lambda, pot);
    const double rel = std::abs(e[4] - e[19]) / e[19];
    const double rise = worst_rise(e, e0);
    out.pass = out.pass && rel <= 0.01 && rise <= 1e-3;
    out.detail += fmt("%s E5/E20-1 = %.4f, worst rise %.2g E(f); ", prior_name(prior), rel, rise);
  }
  out.detail.resize(out.detail.size() - 2);
  return out;
}

int iterations_to_final(const std::vector<double>& e) {
  const double final = e.back();
  int t = static_cast<int>(e.size());
  while (t > 1 && std::abs(e[t - 2] - final) <= 0.01 * final) --t;
  return t;
}

Outcome continuation() {
  const Image f = fgs::testing::synthetic_scene(96, 96, 3);
  const auto w = compute_weights(f, 7.65);
  const auto e2 = smooth(f, w, wls_config(20, 2.0)).trace.energies();
  const auto e8 = smooth(f, w, wls_config(20, 8.0)).trace.energies();
  const int i2 = iterations_to_final(e2), i8 = iterations_to_final(e8);
  return {e8.back() >= e2.back() && i8 <= i2,
          fmt("E(a=8) %.1f >= E(a=2) %.1f; iterations to 1%%: a=8 %d, a=2 %d", e8.back(),
              e2.back(), i8, i2)};
}

Outcome reweighted_stability() {
  Outcome out;
  double worst_irls = 0.0, worst_irl1 = 0.0;
  int fluctuating = 0;
  const auto welsch = Potential::welsch(7.65);
  const auto log = Potential::log_abs();
  for (int variant = 0; variant < 4; ++variant) {
    const Image f = fgs::testing::synthetic_scene(64, 64, variant);
    const auto w = compute_weights(f, 7.65);
    SmootherConfig cfg;
    cfg.iters_K = 5;
    cfg.iters_T = 5;
    worst_irls = std::max(worst_irls, worst_rise(firls(f, w, cfg, welsch).trace.energies(),
                                                 energy(f, f, w, cfg.lambda, welsch)));
    worst_irl1 = std::max(worst_irl1, worst_rise(firl1(f, w, cfg, log).trace.energies(),
                                                 energy(f, f, w, cfg.lambda, log)));
    cfg.iters_T = 1;
    cfg.iters_K = 8;
    const auto e = firls(f, w, cfg, welsch).trace.energies();
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i] > e[i - 1]) {
        ++fluctuating;
        break;
      }
  }
  out.pass = worst_irls <= 1e-3 && worst_irl1 <= 1e-3;
  out.detail = fmt("worst rise FIRLS %.2g, FIRL1 %.2g of E(f); T=1 FIRLS non-monotone on %d/4 "
                   "fixtures (recorded)",
                   worst_irls, worst_irl1, fluctuating);
  return out;
}

Outcome linear_scaling() {
  const int sizes[3] = {128, 256, 512};
  double per_iter[3];
  for (int i = 0; i < 3; ++i) {
    const Image f = fgs::testing::synthetic_scene(sizes[i], sizes[i], 5);
    const auto w = compute_weights(f, 7.65);
    double best = INFINITY;
    for (int rep = 0; rep < 3; ++rep) {
      const auto t0 = Clock::now();
      smooth(f, w, wls_config(5));
      best = std::min(best, seconds_since(t0) / 5.0);
    }
    per_iter[i] = best;
  }
  // Each step quadruples the pixel count: two doublings.
  const double r1 = per_iter[1] / per_iter[0], r2 = per_iter[2] / per_iter[1];
  const double per_doubling = std::sqrt(std::max(r1, r2));
  return {per_doubling <= 2.5,
          fmt("per-iteration %.2f / %.2f / %.2f ms; ratio per doubling %.2f, %.2f",
              1e3 * per_iter[0], 1e3 * per_iter[1], 1e3 * per_iter[2], std::sqrt(r1),
              std::sqrt(r2))};
}

Outcome properties() {
  Rng rng(1009);
  int failed = 0;
  std::string which;
  auto record = [&](const char* name, bool ok) {
    if (!ok && which.find(name) == std::string::npos) which += std::string(" ") + name;
    failed += !ok;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const int W = rng.integer(2, 24), H = rng.integer(2, 24);
    const Image f = fgs::testing::random_image(W, H, 1, rng);
    const Image g = fgs::testing::random_image(W, H, 1, rng);
    const auto w = fgs::testing::random_weights(W, H, rng, 0.0, 1.0);
    const double c = rng.uniform(-100, 100);
    const auto lambda_cfg = [&](Prior prior) {
      SmootherConfig cfg = wls_config(rng.integer(1, 6));
      cfg.prior = prior;
      cfg.lambda = rng.uniform(0.5, 500);
      return cfg;
    };

    // Translation equivariance, 1D and 2D.
    {
      const int n = rng.integer(1, 64);
      const auto x = rng.vector(n, 0, 255);
      const auto ww = rng.vector(n - 1, 0, 300);
      auto xs = x;
      for (double& v : xs) v += c;
      const auto a = wls_1d(x, ww), b = wls_1d(xs, ww);
      const auto p = wtv_1d(x, ww), q = wtv_1d(xs, ww);
      double err = 0.0;
      for (int i = 0; i < n; ++i)
        err = std::max({err, std::abs(b[i] - a[i] - c), std::abs(q[i] - p[i] - c)});
      for (Prior prior : {Prior::kWls, Prior::kWtv}) {
        const auto cfg = lambda_cfg(prior);
        Image fs = f;
        for (double& v : fs.samples()) v += c;
        const auto u = smooth(f, w, cfg).u, us = smooth(fs, w, cfg).u;
        for (std::size_t i = 0; i < u.samples().size(); ++i)
          err = std::max(err, std::abs(us.samples()[i] - u.samples()[i] - c));
      }
      record("translation", err <= 1e-8);
    }
    // WLS linearity, 1D to 1e-10 and 2D to 1e-8 relative.
    {
      const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
      const int n = rng.integer(1, 64);
      const auto x = rng.vector(n, 0, 255), y = rng.vector(n, 0, 255);
      const auto ww = rng.vector(n - 1, 0, 300);
      std::vector<double> mix(n);
      for (int i = 0; i < n; ++i) mix[i] = a * x[i] + b * y[i];
      const auto zx = wls_1d(x, ww), zy = wls_1d(y, ww), zm = wls_1d(mix, ww);
      double err1 = 0.0;
      for (int i = 0; i < n; ++i) err1 = std::max(err1, std::abs(zm[i] - a * zx[i] - b * zy[i]));
      const double scale1 = std::abs(a) * 255 + std::abs(b) * 255;
      const auto cfg = lambda_cfg(Prior::kWls);
      Image m = f;
      for (std::size_t i = 0; i < m.samples().size(); ++i)
        m.samples()[i] = a * f.samples()[i] + b * g.samples()[i];
      const auto uf = smooth(f, w, cfg).u, ug = smooth(g, w, cfg).u, um = smooth(m, w, cfg).u;
      double err2 = 0.0;
      for (std::size_t i = 0; i < um.samples().size(); ++i)
        err2 = std::max(err2, std::abs(um.samples()[i] - a * uf.samples()[i] -
                                       b * ug.samples()[i]));
      record("linearity", err1 <= 1e-10 * (1 + scale1) && err2 <= 1e-8 * (1 + scale1));
    }
    // WTV nonexpansiveness in the 2-norm.
    {
      const int n = rng.integer(1, 64);
      const auto x = rng.vector(n, 0, 255);
      auto y = x;
      for (double& v : y) v += rng.uniform(-20, 20);
      const auto ww = rng.vector(n - 1, 0, 300);
      const auto zx = wtv_1d(x, ww), zy = wtv_1d(y, ww);
      double dz = 0.0, df = 0.0;
      for (int i = 0; i < n; ++i) {
        dz += (zx[i] - zy[i]) * (zx[i] - zy[i]);
        df += (x[i] - y[i]) * (x[i] - y[i]);
      }
      record("nonexpansive", std::sqrt(dz) <= std::sqrt(df) * (1 + 1e-12) + 1e-12);
    }
    // Constant images are fixed points.
    {
      const Image k(W, H, rng.integer(0, 1) ? 3 : 1, rng.uniform(0, 255));
      bool ok = true;
      for (Prior prior : {Prior::kWls, Prior::kWtv}) {
        const auto r = smooth(k, w, lambda_cfg(prior));
        ok = ok && r.u.samples() == k.samples() && r.trace.back().energy == 0.0;
      }
      record("fixed-point", ok);
    }
    // Transposed input with swapped pass order gives the transposed output.
    {
      bool ok = true;
      for (Prior prior : {Prior::kWls, Prior::kWtv}) {
        const auto cfg = lambda_cfg(prior);
        const auto a = smooth(f, w, cfg);
        SmoothOptions opts;
        opts.order = PassOrder::kColumnsFirst;
        const auto b = smooth(transpose(f), transpose(w), cfg, opts);
        ok = ok && max_abs_diff(transpose(b.u).samples(), a.u.samples()) <= 1e-12;
      }
      record("transpose", ok);
    }
  }
  return {failed == 0, failed == 0 ? "5 suites x 100 trials"
                                   : fmt("%d failures in:%s", failed, which.c_str())};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "1D WTV matches oracle", wtv_oracle},
      {2, "1D WLS matches dense solve", wls_exact},
      {3, "1D WTV optimality certificate", wtv_kkt},
      {4, "2D WLS SSIM vs direct solve", wls_ssim},
      {5, "convergence profile", convergence_profile},
      {6, "continuation trade-off", continuation},
      {7, "reweighted stability", reweighted_stability},
      {8, "linear scaling", linear_scaling},
      {9, "property suites", properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("INFO [10] absolute runtimes and full-scale image-set means are not reproduced; "
              "criteria 4-8 stand in for them\n");
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

#include "fgs/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fgs/errors.hpp"

namespace fgs::reference {
namespace {

// Symmetric positive definite band matrix, lower band stored row by row:
// entry (i, j) with 0 <= i - j <= bw lives at i * (bw + 1) + (i - j).
class BandMatrix {
 public:
  BandMatrix(std::size_t n, std::size_t bw)
      : n_(n), bw_(bw), data_(n * (bw + 1), 0.0) {}

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * (bw_ + 1) + (i - j)];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * (bw_ + 1) + (i - j)];
  }
  std::size_t size() const { return n_; }
  std::size_t bandwidth() const { return bw_; }

 private:
  std::size_t n_, bw_;
  std::vector<double> data_;
};

// In-place Cholesky A = L L^T within the band.
void cholesky(BandMatrix& a) {
  const std::size_t n = a.size(), bw = a.bandwidth();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i > bw ? i - bw : 0;
    for (std::size_t j = lo; j <= i; ++j) {
      double s = a(i, j);
      for (std::size_t k = lo; k < j; ++k) s -= a(i, k) * a(j, k);
      if (i == j) {
        if (!(s > 0.0)) throw OracleError("wls_2d: matrix not positive definite");
        a(i, i) = std::sqrt(s);
      } else {
        a(i, j) = s / a(j, j);
      }
    }
  }
}

std::vector<double> cholesky_solve(const BandMatrix& l, std::vector<double> b) {
  const std::size_t n = l.size(), bw = l.bandwidth();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i > bw ? i - bw : 0;
    double s = b[i];
    for (std::size_t k = lo; k < i; ++k) s -= l(i, k) * b[k];
    b[i] = s / l(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t hi = std::min(n - 1, i + bw);
    double s = b[i];
    for (std::size_t k = i + 1; k <= hi; ++k) s -= l(k, i) * b[k];
    b[i] = s / l(i, i);
  }
  return b;
}

// Graph Laplacian system I + lambda sum_j D_j^T W_j D_j on a W x H grid with
// an index map chosen to keep the bandwidth at min(W, H).
struct GridSystem {
  int width, height;
  bool column_major;  // true when H < W

  std::size_t index(int x, int y) const {
    return column_major ? static_cast<std::size_t>(x) * height + y
                        : static_cast<std::size_t>(y) * width + x;
  }
  std::size_t bandwidth() const {
    return static_cast<std::size_t>(column_major ? height : width);
  }
};

template <class EdgeFn>
void for_each_edge(const GridSystem& g, const EdgeWeights& w, EdgeFn&& fn) {
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x + 1 < g.width; ++x)
      fn(g.index(x, y), g.index(x + 1, y), w.h(x, y));
  for (int y = 0; y + 1 < g.height; ++y)
    for (int x = 0; x < g.width; ++x)
      fn(g.index(x, y), g.index(x, y + 1), w.v(x, y));
}

std::vector<double> apply_system(const GridSystem& g, const EdgeWeights& w,
                                 double lambda, const std::vector<double>& u) {
  std::vector<double> out = u;
  for_each_edge(g, w, [&](std::size_t p, std::size_t q, double we) {
    const double flux = lambda * we * (u[p] - u[q]);
    out[p] += flux;
    out[q] -= flux;
  });
  return out;
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

}  // namespace

Image wls_2d(const Image& f, const EdgeWeights& w, double lambda) {
  if (f.pixel_count() > kMaxDirectPixels)
    throw ParameterError("wls_2d: image has more than " +
                         std::to_string(kMaxDirectPixels) + " pixels");
  if (!w.matches(f)) throw DimensionError("wls_2d: weights do not match");
  if (!(lambda >= 0.0)) throw ParameterError("wls_2d: lambda must be >= 0");

  const GridSystem g{f.width(), f.height(), f.height() < f.width()};
  const std::size_t n = f.pixel_count();
  BandMatrix a(n, g.bandwidth());
  for (std::size_t p = 0; p < n; ++p) a(p, p) = 1.0;
  for_each_edge(g, w, [&](std::size_t p, std::size_t q, double we) {
    const double c = lambda * we;
    a(p, p) += c;
    a(q, q) += c;
    a(std::max(p, q), std::min(p, q)) -= c;
  });
  cholesky(a);

  Image u(f.width(), f.height(), f.channels());
  for (int c = 0; c < f.channels(); ++c) {
    std::vector<double> rhs(n);
    for (int y = 0; y < f.height(); ++y)
      for (int x = 0; x < f.width(); ++x) rhs[g.index(x, y)] = f.at(x, y, c);

    std::vector<double> sol = cholesky_solve(a, rhs);
    // One step of iterative refinement.
    auto r = apply_system(g, w, lambda, sol);
    for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - r[i];
    const auto corr = cholesky_solve(a, r);
    for (std::size_t i = 0; i < n; ++i) sol[i] += corr[i];

    r = apply_system(g, w, lambda, sol);
    for (std::size_t i = 0; i < n; ++i) r[i] -= rhs[i];
    const double res = inf_norm(r);
    if (res > 1e-9 * (1.0 + inf_norm(rhs)))
      throw OracleError("wls_2d: residual " + std::to_string(res) +
                        " above certificate bound");

    for (int y = 0; y < f.height(); ++y)
      for (int x = 0; x < f.width(); ++x) u.at(x, y, c) = sol[g.index(x, y)];
  }
  return u;
}

WtvOracleResult wtv_1d(std::span<const double> f, std::span<const double> w) {
  const std::size_t n = f.size();
  if (n == 0 || n > 4096) throw ParameterError("wtv oracle: need 1 <= n <= 4096");
  if (w.size() + 1 != n) throw DimensionError("wtv oracle: weight count");
  for (double e : w)
    if (!(e >= 0.0)) throw ParameterError("wtv oracle: negative weight");

  // Dual: minimize ||f + B d||^2 over |d_x| <= w_x / 2 with
  // (B d)_i = d_i - d_{i-1}; the primal point is z = f + B d.
  WtvOracleResult res;
  res.z.assign(f.begin(), f.end());
  res.dual.assign(n - 1, 0.0);
  auto& z = res.z;
  auto& d = res.dual;

  auto gap = [&] {
    // P(z) - D(d) = sum_x w_x |dz_x| - 2 d_x dz_x with dz = z_{x+1} - z_x.
    double g = 0.0;
    for (std::size_t x = 0; x + 1 < n; ++x) {
      const double dz = z[x + 1] - z[x];
      g += w[x] * std::abs(dz) - 2.0 * d[x] * dz;
    }
    return g;
  };

  constexpr double kOmega = 1.8;  // projected SOR relaxation
  constexpr int kMaxSweeps = 2'000'000;
  const double change_tol = 1e-13 * (1.0 + std::abs(*std::max_element(
                                               f.begin(), f.end(),
                                               [](double a, double b) {
                                                 return std::abs(a) < std::abs(b);
                                               })));
  for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
    double max_change = 0.0;
    for (std::size_t x = 0; x + 1 < n; ++x) {
      const double a = z[x] - d[x];          // z_x without d_x
      const double b = z[x + 1] + d[x];      // z_{x+1} without -d_x
      const double exact = 0.5 * (b - a);
      const double half = 0.5 * w[x];
      const double next =
          std::clamp(d[x] + kOmega * (exact - d[x]), -half, half);
      const double delta = next - d[x];
      d[x] = next;
      z[x] += delta;
      z[x + 1] -= delta;
      max_change = std::max(max_change, std::abs(delta));
    }
    res.sweeps = sweep;
    if (max_change <= change_tol) {
      res.duality_gap = gap();
      if (res.duality_gap <= 1e-9) return res;
    }
  }
  res.duality_gap = gap();
  if (res.duality_gap <= 1e-9) return res;
  throw OracleError("wtv oracle: sweep cap reached with gap " +
                    std::to_string(res.duality_gap));
}

std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  if (a.size() != n * n) throw DimensionError("dense_solve: size mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k])) piv = i;
    if (a[piv * n + k] == 0.0) throw OracleError("dense_solve: singular");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = a[i * n + k] / a[k * n + k];
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= m * a[k * n + j];
      b[i] -= m * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i * n + j] * x[j];
    x[i] = s / a[i * n + i];
  }
  return x;
}

Image to_luma(const Image& img) {
  if (img.channels() == 1) return img;
  Image y(img.width(), img.height(), 1);
  for (int yy = 0; yy < img.height(); ++yy)
    for (int x = 0; x < img.width(); ++x)
      y.at(x, yy) = 0.299 * img.at(x, yy, 0) + 0.587 * img.at(x, yy, 1) +
                    0.114 * img.at(x, yy, 2);
  return y;
}

double ssim(const Image& a_in, const Image& b_in) {
  if (!a_in.same_shape(b_in)) throw DimensionError("ssim: shape mismatch");
  const Image a = to_luma(a_in), b = to_luma(b_in);
  const int W = a.width(), H = a.height();
  const int ww = std::min(8, W), wh = std::min(8, H);
  const double c1 = (0.01 * 255) * (0.01 * 255);
  const double c2 = (0.03 * 255) * (0.03 * 255);
  const double count = static_cast<double>(ww) * wh;
  double total = 0.0;
  int windows = 0;
  for (int y0 = 0; y0 + wh <= H; ++y0) {
    for (int x0 = 0; x0 + ww <= W; ++x0) {
      double ma = 0, mb = 0;
      for (int y = y0; y < y0 + wh; ++y)
        for (int x = x0; x < x0 + ww; ++x) {
          ma += a.at(x, y);
          mb += b.at(x, y);
        }
      ma /= count;
      mb /= count;
      double va = 0, vb = 0, cov = 0;
      for (int y = y0; y < y0 + wh; ++y)
        for (int x = x0; x < x0 + ww; ++x) {
          const double da = a.at(x, y) - ma, db = b.at(x, y) - mb;
          va += da * da;
          vb += db * db;
          cov += da * db;
        }
      va /= count;
      vb /= count;
      cov /= count;
      total += ((2 * ma * mb + c1) * (2 * cov + c2)) /
               ((ma * ma + mb * mb + c1) * (va + vb + c2));
      ++windows;
    }
  }
  return total / windows;
}

double psnr(const Image& a, const Image& b) {
  if (!a.same_shape(b)) throw DimensionError("psnr: shape mismatch");
  double se = 0.0;
  for (std::size_t i = 0; i < a.samples().size(); ++i) {
    const double d = a.samples()[i] - b.samples()[i];
    se += d * d;
  }
  if (se == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = se / static_cast<double>(a.samples().size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace fgs::reference

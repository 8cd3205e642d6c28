#pragma once

#include <span>
#include <vector>

#include "fgs/image.hpp"
#include "fgs/weights.hpp"

// Slow, independently written solvers and metrics. Test and validation use
// only; nothing here shares code with the fast solvers.
namespace fgs::reference {

inline constexpr std::size_t kMaxDirectPixels = 16384;

// Exact minimizer of the 2D WLS energy: (I + lambda sum_j D_j^T W_j D_j) u = f,
// solved per channel by banded Cholesky. Throws ParameterError for images over
// kMaxDirectPixels and OracleError if the residual exceeds 1e-9 (1 + ||f||).
Image wls_2d(const Image& f, const EdgeWeights& w, double lambda);

struct WtvOracleResult {
  std::vector<double> z;
  std::vector<double> dual;  // n-1 edge duals, |dual_x| <= w_x / 2
  double duality_gap = 0.0;
  int sweeps = 0;
};

// Projected coordinate descent on the box-constrained dual of the 1D WTV
// problem, run until the duality gap is below 1e-9. n <= 4096. Throws
// OracleError when the sweep cap is hit first.
WtvOracleResult wtv_1d(std::span<const double> f, std::span<const double> w);

// Dense Gaussian elimination with partial pivoting; a is row-major n x n.
std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b);

// BT.601 luma of a 3-channel image; single-channel images pass through.
Image to_luma(const Image& img);

// Mean SSIM over all 8x8 windows (clipped to the image for smaller images),
// C1 = (0.01 * 255)^2, C2 = (0.03 * 255)^2. Color inputs go through to_luma.
double ssim(const Image& a, const Image& b);

// 10 log10(255^2 / MSE); +infinity for identical images.
double psnr(const Image& a, const Image& b);

}  // namespace fgs::reference

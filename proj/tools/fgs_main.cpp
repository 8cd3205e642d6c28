// fgs: command-line front end for the fast global smoothing library.
//
//   fgs smooth   --input in.pgm --output out.pgm [--guidance g.pgm] --prior wls
//   fgs texture  --input in.ppm --output out.ppm --lambda 2000
//   fgs quantize --input in.ppm --output out.ppm --lambda 30
//
// Exit codes: 0 success, 1 I/O or decode error, 2 invalid parameters.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fgs/errors.hpp"
#include "fgs/pnm.hpp"
#include "fgs/presets.hpp"
#include "fgs/smoother.hpp"
#include "fgs/weights.hpp"

namespace {

constexpr int kIoError = 1;
constexpr int kParamError = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fgs::Image load(const std::string& path) {
  try {
    return fgs::load_pnm(path);
  } catch (const fgs::DecodeError& e) {
    throw IoError(path + ": " + e.what());
  } catch (const fgs::ParameterError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

void save(const std::string& path, const fgs::Image& img) {
  try {
    fgs::save_pnm(path, img);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

void save_trace(const std::string& path, const fgs::SolverTrace& trace) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  fgs::write_trace_csv(out, trace);
  if (!out) throw IoError("write failed for " + path);
}

struct SmoothArgs {
  std::string input, output, guidance, trace;
  std::string prior = "wls";
  fgs::SmootherConfig cfg;
};

struct TextureArgs {
  std::string input, output, trace;
  fgs::TextureParams params;
};

struct QuantizeArgs {
  std::string input, output, trace;
  fgs::QuantizeParams params;
};

void run_smooth(const SmoothArgs& a) {
  fgs::SmootherConfig cfg = a.cfg;
  cfg.prior = a.prior == "wtv" ? fgs::Prior::kWtv : fgs::Prior::kWls;
  cfg.validate();
  const fgs::Image f = load(a.input);
  const fgs::Image g = a.guidance.empty() ? f : load(a.guidance);
  if (g.width() != f.width() || g.height() != f.height())
    throw fgs::DimensionError("guidance size differs from input");
  const auto w = fgs::compute_weights(g, cfg.kappa);
  const auto result = fgs::smooth(f, w, cfg);
  save(a.output, result.u);
  if (!a.trace.empty()) save_trace(a.trace, result.trace);
}

void run_texture(const TextureArgs& a) {
  const fgs::Image f = load(a.input);
  const auto result = fgs::remove_texture(f, a.params);
  save(a.output, result.u);
  if (!a.trace.empty()) save_trace(a.trace, result.trace);
}

void run_quantize(const QuantizeArgs& a) {
  const fgs::Image f = load(a.input);
  const auto result = fgs::quantize_colors(f, a.params);
  save(a.output, result.u);
  if (!a.trace.empty()) save_trace(a.trace, result.trace);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fast global edge-preserving image smoothing"};
  app.require_subcommand(1);

  SmoothArgs sm;
  auto* smooth = app.add_subcommand("smooth", "WLS or WTV smoothing");
  smooth->add_option("--input", sm.input, "input PGM/PPM")->required();
  smooth->add_option("--output", sm.output, "output PGM/PPM")->required();
  smooth->add_option("--guidance", sm.guidance, "guidance image (default: input)");
  smooth->add_option("--prior", sm.prior, "wls or wtv")
      ->check(CLI::IsMember({"wls", "wtv"}));
  smooth->add_option("--lambda", sm.cfg.lambda, "smoothing strength")
      ->capture_default_str();
  smooth->add_option("--kappa", sm.cfg.kappa, "weight falloff")
      ->capture_default_str();
  smooth->add_option("--alpha", sm.cfg.alpha, "penalty growth factor")
      ->capture_default_str();
  smooth->add_option("--beta", sm.cfg.beta1, "initial penalty")
      ->capture_default_str();
  smooth->add_option("--iters", sm.cfg.iters_T, "iterations T")
      ->capture_default_str();
  smooth->add_option("--trace", sm.trace, "write iter,energy,gap,ms CSV");

  TextureArgs tx;
  auto* texture =
      app.add_subcommand("texture", "texture removal (Welsch FIRLS)");
  texture->add_option("--input", tx.input, "input PGM/PPM")->required();
  texture->add_option("--output", tx.output, "output PGM/PPM")->required();
  texture->add_option("--lambda", tx.params.lambda, "smoothing strength")
      ->required();
  texture->add_option("--sigma", tx.params.sigma, "Welsch scale")
      ->capture_default_str();
  texture->add_option("--kappa", tx.params.kappa, "weight falloff")
      ->capture_default_str();
  texture->add_option("--alpha", tx.params.alpha, "penalty growth factor")
      ->capture_default_str();
  texture->add_option("--beta", tx.params.beta1, "initial penalty")
      ->capture_default_str();
  texture->add_option("--K", tx.params.iters_K, "outer iterations")
      ->capture_default_str();
  texture->add_option("--T", tx.params.iters_T, "inner iterations")
      ->capture_default_str();
  texture->add_option("--trace", tx.trace, "write iter,energy,gap,ms CSV");

  QuantizeArgs qu;
  auto* quantize =
      app.add_subcommand("quantize", "color quantization (log FIRL1)");
  quantize->add_option("--input", qu.input, "input PGM/PPM")->required();
  quantize->add_option("--output", qu.output, "output PGM/PPM")->required();
  quantize->add_option("--lambda", qu.params.lambda, "smoothing strength")
      ->required();
  quantize->add_option("--alpha", qu.params.alpha, "penalty growth factor")
      ->capture_default_str();
  quantize->add_option("--beta", qu.params.beta1, "initial penalty")
      ->capture_default_str();
  quantize->add_option("--K", qu.params.iters_K, "outer iterations")
      ->capture_default_str();
  quantize->add_option("--T", qu.params.iters_T, "inner iterations")
      ->capture_default_str();
  quantize->add_option("--trace", qu.trace, "write iter,energy,gap,ms CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParamError;
  }

  try {
    if (*smooth) run_smooth(sm);
    if (*texture) run_texture(tx);
    if (*quantize) run_quantize(qu);
  } catch (const IoError& e) {
    std::cerr << "fgs: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fgs: invalid parameter: " << e.what() << '\n';
    return kParamError;
  } catch (const std::exception& e) {
    std::cerr << "fgs: " << e.what() << '\n';
    return kIoError;
  }
  return 0;
}

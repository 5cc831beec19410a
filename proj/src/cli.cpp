#include "llf/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <tuple>

#include "llf/errors.hpp"
#include "llf/hwsim.hpp"
#include "llf/image_io.hpp"
#include "llf/local_laplacian.hpp"
#include "llf/metrics.hpp"
#include "llf/parallel.hpp"
#include "llf/test_card.hpp"

namespace llf {

namespace {

int parse_threads(const std::string& spec) {
  if (spec == "auto") return 0;
  try {
    size_t pos = 0;
    const int n = std::stoi(spec, &pos);
    if (pos == spec.size() && n >= 1) return n;
  } catch (const std::exception&) {
  }
  throw ValidationError("--threads expects a positive integer or 'auto', got '" + spec + "'");
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", ms);
  return buf;
}

std::string format_psnr(double db) {
  if (std::isinf(db)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", db);
  return buf;
}

void write_text(const std::string& text, const std::string& path, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError(path + ": cannot open for writing");
  f << text;
  if (!f) throw IoError(path + ": write failed");
}

struct RunOptions {
  std::string input;
  std::string output;
  double alpha = 1.0;
  double beta = 1.0;
  double sigma = 0.2;
  std::string path = "reference";
  int bands = 3;
  std::string threads = "auto";
};

int cmd_run(const RunOptions& opt, std::ostream& out) {
  const LoadedImage img = load_image(opt.input);
  const RemapParams params(opt.alpha, opt.beta, opt.sigma);
  const int threads = parse_threads(opt.threads);
  if (opt.bands < 1) throw ValidationError("--bands must be at least 1");

  StageTimings timings;
  std::array<Plane, 3> result;
  if (opt.path == "reference") {
    for (int c = 0; c < 3; ++c) {
      result[c] = llf_reference(img.planes[c], params, opt.bands, threads, &timings);
    }
  } else {
    if (opt.bands != 3) {
      throw ValidationError("the accelerator path is fixed at 3 bands plus residual");
    }
    result = llf_accel_model(img.planes, params, threads, &timings);
  }
  save_image(result, opt.output);
  out << "stage timings, software model (ms):\n"
      << "  host pyramid      " << format_ms(timings.host_pyramid_ms) << "\n"
      << "  band computation  " << format_ms(timings.bands_ms) << "\n"
      << "  collapse          " << format_ms(timings.collapse_ms) << "\n";
  return kExitOk;
}

struct SweepOptions {
  std::string input;
  std::string output;
  bool default_grid = false;
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<double> sigmas;
  std::string threads = "auto";
};

std::vector<std::tuple<double, double, double>> sweep_grid(const SweepOptions& opt) {
  std::vector<std::tuple<double, double, double>> grid;
  if (!opt.default_grid && !(opt.alphas.empty() && opt.betas.empty() && opt.sigmas.empty())) {
    const auto& alphas = opt.alphas.empty() ? std::vector<double>{1.0} : opt.alphas;
    const auto& betas = opt.betas.empty() ? std::vector<double>{1.0} : opt.betas;
    const auto& sigmas = opt.sigmas.empty() ? std::vector<double>{0.2} : opt.sigmas;
    for (double a : alphas) {
      for (double b : betas) {
        for (double s : sigmas) grid.emplace_back(a, b, s);
      }
    }
    return grid;
  }
  // Detail block (beta = 1), then edge block (alpha = 1).
  for (double a : {0.25, 0.5, 2.0}) {
    for (double s : {0.1, 0.2, 0.4}) grid.emplace_back(a, 1.0, s);
  }
  for (double b : {0.0, 0.5, 1.0}) {
    for (double s : {0.1, 0.2, 0.4}) grid.emplace_back(1.0, b, s);
  }
  return grid;
}

std::string format_param(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out) {
  const LoadedImage img = load_image(opt.input);
  const int threads = parse_threads(opt.threads);
  std::string csv = "alpha,beta,sigma,psnr_db\n";
  for (const auto& [alpha, beta, sigma] : sweep_grid(opt)) {
    const RemapParams params(alpha, beta, sigma);
    std::array<Plane, 3> reference;
    for (int c = 0; c < 3; ++c) {
      reference[c] = llf_reference(img.planes[c], params, 3, threads);
    }
    const std::array<Plane, 3> accel = llf_accel_model(img.planes, params, threads);
    const QualityReport q = psnr(export_u8(reference), export_u8(accel));
    csv += format_param(alpha) + "," + format_param(beta) + "," + format_param(sigma) + "," +
           format_psnr(q.psnr_db) + "\n";
  }
  write_text(csv, opt.output, out);
  return kExitOk;
}

struct SimOptions {
  std::vector<std::string> bandwidths;
  int instances = 0;
  int width = 256;
  int height = 256;
  std::string output;
};

int64_t parse_bandwidth(const std::string& token) {
  if (token == "inf") return kUnlimitedBandwidth;
  try {
    size_t pos = 0;
    const long long bits = std::stoll(token, &pos);
    if (pos == token.size() && bits > 0) return bits;
  } catch (const std::exception&) {
  }
  throw ValidationError("--bandwidth expects positive bit counts or 'inf', got '" + token + "'");
}

int cmd_sim(const SimOptions& opt, std::ostream& out) {
  std::string csv;
  if (opt.instances > 0) {
    ReplicationScenarioStats scenario{"replication", {}};
    for (int n = 1; n <= opt.instances; ++n) {
      scenario.rows.push_back(
          simulate_replication(opt.width, opt.height, ReplicationPlan{n, 1.28}));
    }
    csv = emit_sim_csv(std::vector<ReplicationScenarioStats>{scenario});
  } else {
    std::vector<std::string> tokens = opt.bandwidths;
    if (tokens.empty()) tokens = {"32", "64", "128", "256"};
    std::vector<BandwidthScenarioStats> scenarios;
    for (const std::string& token : tokens) {
      const int64_t bits = parse_bandwidth(token);
      StreamConfig cfg;
      cfg.total_bandwidth_bits = bits;
      scenarios.push_back(
          BandwidthScenarioStats{"bw_sweep", bits, simulate_lpus(opt.width, opt.height, cfg)});
    }
    csv = emit_sim_csv(scenarios);
  }
  write_text(csv, opt.output, out);
  return kExitOk;
}

struct BenchOptions {
  std::vector<double> sizes_mp = {0.25, 0.5, 0.75, 1.0};
};

double time_band_ms(const std::array<Plane, 3>& card, const std::array<Pyramid, 3>& gauss,
                    int level, const RemapLut& lut) {
  const LpuConfig cfg = LpuConfig::make(level, Arithmetic::fixed_point);
  const auto start = std::chrono::steady_clock::now();
  for (int c = 0; c < 3; ++c) {
    run_lpu(card[c], gauss[c].levels[level], cfg, lut, 1);
  }
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
  const RemapParams params(0.5, 1.0, 0.2);
  const RemapLut lut = build_lut(params);

  // Warm-up pass so allocator and caches do not penalize the first row.
  {
    const std::array<Plane, 3> warm = make_test_card(64, 64);
    std::array<Pyramid, 3> gauss;
    for (int c = 0; c < 3; ++c) gauss[c] = gaussian_pyramid(warm[c], 4);
    time_band_ms(warm, gauss, 0, lut);
  }

  out << "band computation latency, software model (ms), single-threaded\n";
  out << "size_mp,L1,L2,L3,sequential,parallel\n";
  for (double mp : opt.sizes_mp) {
    if (mp <= 0.0) throw ValidationError("--sizes expects positive megapixel counts");
    const int dim = static_cast<int>(std::lround(std::sqrt(mp * 1e6)));
    const std::array<Plane, 3> card = make_test_card(dim, dim);
    std::array<Pyramid, 3> gauss;
    for (int c = 0; c < 3; ++c) gauss[c] = gaussian_pyramid(card[c], 4);
    double total = 0.0;
    double widest = 0.0;
    std::string row = format_param(mp);
    for (int level = 0; level < 3; ++level) {
      const double ms = time_band_ms(card, gauss, level, lut);
      total += ms;
      widest = std::max(widest, ms);
      row += "," + format_ms(ms);
    }
    row += "," + format_ms(total) + "," + format_ms(widest);
    out << row << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local Laplacian filtering engine with a fixed-point accelerator model"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "Filter one image");
  run->add_option("--input", run_opt.input, "Input image (PNG or PPM P6)")->required();
  run->add_option("--output", run_opt.output, "Output image (.png or .ppm)")->required();
  run->add_option("--alpha", run_opt.alpha, "Detail exponent (> 0)");
  run->add_option("--beta", run_opt.beta, "Edge gain (>= 0)");
  run->add_option("--sigma", run_opt.sigma, "Detail/edge threshold in (0,1]");
  run->add_option("--path", run_opt.path, "Arithmetic path")
      ->check(CLI::IsMember({"reference", "accel"}));
  run->add_option("--bands", run_opt.bands, "Output band count (reference path)");
  run->add_option("--threads", run_opt.threads, "Worker threads or 'auto'");

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand("sweep", "Accel-vs-reference PSNR over a parameter grid");
  sweep->add_option("--input", sweep_opt.input, "Input image")->required();
  sweep->add_option("--output", sweep_opt.output, "CSV output file (default stdout)");
  sweep->add_flag("--default-grid", sweep_opt.default_grid, "Use the 18-cell default grid");
  sweep->add_option("--alphas", sweep_opt.alphas, "Alpha values")->delimiter(',');
  sweep->add_option("--betas", sweep_opt.betas, "Beta values")->delimiter(',');
  sweep->add_option("--sigmas", sweep_opt.sigmas, "Sigma values")->delimiter(',');
  sweep->add_option("--threads", sweep_opt.threads, "Worker threads or 'auto'");

  SimOptions sim_opt;
  CLI::App* sim = app.add_subcommand("sim", "Dataflow simulation of the nine-stream accelerator");
  sim->add_option("--bandwidth", sim_opt.bandwidths, "Aggregate bits per cycle (list, 'inf' ok)")
      ->delimiter(',');
  sim->add_option("--instances", sim_opt.instances, "Replication study up to N instances")
      ->check(CLI::Range(1, 6));
  sim->add_option("--width", sim_opt.width, "Image width")->check(CLI::PositiveNumber);
  sim->add_option("--height", sim_opt.height, "Image height")->check(CLI::PositiveNumber);
  sim->add_option("--output", sim_opt.output, "CSV output file (default stdout)");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "Time the accelerator model on synthetic images");
  bench->add_option("--sizes", bench_opt.sizes_mp, "Image sizes in megapixels")->delimiter(',');

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("llf");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (run->parsed()) return cmd_run(run_opt, out);
    if (sweep->parsed()) return cmd_sweep(sweep_opt, out);
    if (sim->parsed()) return cmd_sim(sim_opt, out);
    if (bench->parsed()) return cmd_bench(bench_opt, out);
    err << "error: no subcommand given\n";
    return kExitValidation;
  } catch (const CLI::CallForHelp&) {
    CLI::App* active = &app;
    for (CLI::App* sub : app.get_subcommands()) active = sub;
    out << active->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace llf

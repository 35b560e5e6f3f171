// Benchmark driver: times graph loading, cloning, batch updates, reverse
// walks, and raw allocator workloads, emitting one CSV row per trial plus
// per-group geometric means.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grapharena/bench.hpp"

namespace {

// Accepts "1e-7..1e-1" (decade steps), a single value, or a comma list.
std::vector<double> parseFractions(const std::string& text) {
  std::vector<double> out;
  auto range = text.find("..");
  if (range != std::string::npos) {
    double lo = std::stod(text.substr(0, range));
    double hi = std::stod(text.substr(range + 2));
    if (!(lo > 0) || !(hi > 0) || lo > hi)
      throw grapharena::UsageError("bad --fractions range: " + text);
    for (double f = lo; f <= hi * 1.0000001; f *= 10) out.push_back(f);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(std::stod(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph and allocator benchmark harness"};
  grapharena::BenchConfig cfg;
  std::string fractionsText;
  std::string outPath;

  app.add_option("--workload", cfg.workload,
                 "one of: load clone delete delete-new insert insert-new walk "
                 "alloc-alloc alloc-free alloc-mixed")
      ->required();
  app.add_option("--graph", cfg.graphSpec, "path to a .mtx file, or synth:<n>,<m>,<seed>");
  app.add_option("--fractions", fractionsText,
                 "batch sizes as fractions of |E|: a..b decade range or comma list "
                 "(default 1e-7..1e-1)");
  app.add_option("--repeats", cfg.repeats, "trials per configuration (default 5)");
  app.add_option("--threads", cfg.threads,
                 "worker threads; the OMP_NUM_THREADS environment variable overrides this");
  app.add_option("--steps", cfg.steps, "reverse-walk steps (default 42)");
  app.add_option("--seed", cfg.seed, "random seed for batches (default 42)");
  app.add_option("--out", outPath, "CSV output path (default: stdout)");
  app.add_option("--count", cfg.allocCount, "operations per allocator workload (default 2^20)");
  app.add_option("--rounds", cfg.allocRounds, "rounds for alloc-mixed (default 8)");
  app.add_option("--rho", cfg.rho, "loader partitions (default 4)");
  app.add_option("--beta", cfg.beta, "loader block size in bytes (default 262144)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!fractionsText.empty()) {
      try {
        cfg.fractions = parseFractions(fractionsText);
      } catch (const grapharena::UsageError&) {
        throw;
      } catch (const std::exception&) {
        throw grapharena::UsageError("bad --fractions value: " + fractionsText);
      }
    }

    if (!outPath.empty()) {
      std::ofstream file(outPath);
      if (!file) throw grapharena::InputError("cannot open output file: " + outPath);
      grapharena::runSuite(cfg, file);
    } else {
      grapharena::runSuite(cfg, std::cout);
    }
  } catch (const grapharena::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const grapharena::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

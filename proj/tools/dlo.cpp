#include "dlo/endo_ops.hpp"
#include "dlo/enumeration.hpp"
#include "dlo/piecewise.hpp"
#include "dlo/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace dlo;

PiecewiseEndo load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_piecewise(ss.str());
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

int cmd_classify(const std::string& path) {
  PiecewiseEndo f = load_map(path);
  EndoClass c = classify(f);
  std::cout << "class: " << (c.automorphism() ? "automorphism" : to_string(c)) << "\n";
  const IntervalUnion image = f.image();
  std::cout << "image: " << to_string(image) << "\n";
  if (!c.surjective) std::cout << "missing: " << to_string(image.complement()) << "\n";
  auto w = cancellability_witness(f);
  if (w.left)
    std::cout << "not left-cancellable: f(" << to_string(w.left->x) << ") = f(" << to_string(w.left->y)
              << ") = " << to_string(f(w.left->x)) << "\n";
  if (w.right)
    std::cout << "not right-cancellable: maps differing only at " << to_string(w.right->missing)
              << " agree after f\n";
  return 0;
}

int cmd_factorize(const std::string& path, const RunConfig& cfg) {
  PiecewiseEndo h = load_map(path);
  auto fac = epi_mono_factorize(h);
  std::map<Rat, Rat> fx;
  std::size_t bad = 0;
  for (std::uint64_t i = 0; i < cfg.budget; ++i) {
    Rat x = enumerate(i);
    fx[x] = fac.f(x);
    if (fac.g(fx[x]) != h(x)) {
      ++bad;
      std::cout << "composite differs at " << to_string(x) << "\n";
    }
  }
  bool monotone = true;
  const Rat* prev = nullptr;
  for (const auto& [x, y] : fx) {
    if (prev && !(*prev < y)) monotone = false;
    prev = &y;
  }
  std::size_t pre_bad = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rat r = enumerate(i);
    if (fac.g(fac.g_preimage(r)) != r) ++pre_bad;
  }
  std::cout << "h = g o f with f " << fac.f.describe() << " and g " << fac.g.describe() << "\n";
  if (bad == 0) std::cout << "composite verified on " << cfg.budget << " points\n";
  std::cout << "f strictly monotone on samples: " << (monotone ? "yes" : "no") << "\n";
  std::cout << "g preimages verified on " << 100 - pre_bad << " of 100 targets\n";
  std::cout << "memo snapshot:\n" << fac.theta->dump();
  return bad == 0 && monotone && pre_bad == 0 ? 0 : 1;
}

int cmd_suite(const std::string& name, const RunConfig& cfg) {
  auto reports = run_suite(name, cfg);
  std::cout << render(reports, cfg.format);
  for (const auto& r : reports)
    if (!r.ok()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Endomorphisms of the rational order: property suites and map tools"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  app.add_option("--seed", cfg.seed, "Seed for randomized corpora")->capture_default_str();
  app.add_option("--budget", cfg.budget, "Sample points per factorization check")->capture_default_str();
  app.add_option("--depth", cfg.depth, "Scan depth of the metric")->capture_default_str();
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "rows"}))->capture_default_str();

  std::string file, suite;
  auto* classify = app.add_subcommand("classify", "Classify a piecewise map file");
  classify->add_option("file", file)->required();
  auto* factorize = app.add_subcommand("factorize", "Epi-mono factorization of a piecewise map file");
  factorize->add_option("file", file)->required();
  auto* run = app.add_subcommand("suite", "Run a property suite");
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  run->add_option("name", suite)->required()->check(CLI::IsMember(names));
  std::string forest;
  run->add_option("--forest", forest, "Extra forest file for the actions suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.format = format == "rows" ? OutputFormat::rows : OutputFormat::text;
  if (!forest.empty()) cfg.forest_file = forest;
  try {
    if (*classify) return cmd_classify(file);
    if (*factorize) return cmd_factorize(file, cfg);
    return cmd_suite(suite, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

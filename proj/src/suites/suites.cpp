#include "dlo/suites.hpp"

#include "internal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dlo {

void Property::check(bool ok, const std::function<std::string()>& what) {
  ++checks;
  if (ok) return;
  ++failed;
  if (counterexamples.size() < 5) counterexamples.push_back(what());
}

bool SuiteReport::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const Property& p) { return p.ok(); });
}

namespace suites {

std::mt19937_64 rng_for(const RunConfig& cfg, const std::string& suite) {
  std::seed_seq seq(suite.begin(), suite.end());
  std::vector<std::uint32_t> salt(2);
  seq.generate(salt.begin(), salt.end());
  std::seed_seq mixed{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32), salt[0], salt[1]};
  return std::mt19937_64(mixed);
}

Property& add(SuiteReport& r, std::string name, int criterion) {
  r.properties.push_back(Property{std::move(name), criterion, 0, 0, {}, {}});
  return r.properties.back();
}

}  // namespace suites

namespace {

using SuiteFn = SuiteReport (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"ratcore", suites::ratcore}, {"sim", suites::sim},         {"gamma", suites::gamma},
      {"recover", suites::recover}, {"factor", suites::factor},   {"actions", suites::actions},
      {"clone", suites::clone},     {"topology", suites::topology},
  };
  return r;
}

std::string pad(std::string s, std::size_t n) {
  if (s.size() < n) s.append(n - s.size(), ' ');
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const RunConfig& cfg) {
  std::vector<SuiteReport> out;
  for (const auto& [n, f] : registry())
    if (name == "all" || name == n) out.push_back(f(cfg));
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

std::string render(const std::vector<SuiteReport>& reports, OutputFormat format) {
  std::string out;
  std::size_t props = 0, failed = 0;
  if (format == OutputFormat::rows) out += "suite\tproperty\tcriterion\tchecks\tfailed\tstatus\tnote\n";
  for (const auto& r : reports) {
    if (format == OutputFormat::text) out += "suite " + r.suite + "\n";
    for (const auto& p : r.properties) {
      ++props;
      if (!p.ok()) ++failed;
      std::string status = p.ok() ? "pass" : "fail";
      if (format == OutputFormat::rows) {
        out += r.suite + "\t" + p.name + "\t" + std::to_string(p.criterion) + "\t" + std::to_string(p.checks) + "\t" +
               std::to_string(p.failed) + "\t" + status + "\t" + p.note + "\n";
        continue;
      }
      out += "  " + std::string(p.ok() ? "PASS" : "FAIL") + "  " + pad(p.name, 40) + " checks=" + std::to_string(p.checks);
      if (p.criterion) out += "  [criterion " + std::to_string(p.criterion) + "]";
      out += "\n";
      if (!p.note.empty()) out += "        " + p.note + "\n";
      for (const auto& c : p.counterexamples) out += "        counterexample: " + c + "\n";
      if (p.failed > p.counterexamples.size())
        out += "        (" + std::to_string(p.failed - p.counterexamples.size()) + " more)\n";
    }
  }
  if (format == OutputFormat::text)
    out += "summary: " + std::to_string(props) + " properties, " + std::to_string(failed) + " failed\n";
  return out;
}

}  // namespace dlo

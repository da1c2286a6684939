#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dlo {

enum class OutputFormat { text, rows };

struct RunConfig {
  std::uint64_t seed = 20161;
  std::size_t budget = 300;   // points checked per factorization
  std::uint64_t depth = 2048; // scan depth of the metric
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> forest_file;  // extra forest for the actions suite
};

struct Property {
  std::string name;
  int criterion = 0;  // acceptance criterion this feeds, 0 for none
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> counterexamples;  // first few
  std::string note;

  void check(bool ok, const std::function<std::string()>& what);
  // A property with no checks has not been shown.
  bool ok() const { return failed == 0 && checks > 0; }
};

struct SuiteReport {
  std::string suite;
  std::deque<Property> properties;  // stable references while filling
  bool ok() const;
};

const std::vector<std::string>& suite_names();  // without "all"

// Throws std::invalid_argument for an unknown name; "all" runs every suite.
std::vector<SuiteReport> run_suite(const std::string& name, const RunConfig& cfg);

std::string render(const std::vector<SuiteReport>& reports, OutputFormat format);

}  // namespace dlo

#include "dlo/suites.hpp"

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <sys/wait.h>

namespace {

struct Child {
  FILE* pipe = nullptr;
  std::string out;
  int status = -1;
};

void finish(Child& c) {
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, c.pipe)) > 0) c.out.append(buf, n);
  int raw = pclose(c.pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

const std::map<int, std::string> kCriteria = {
    {1, "colour density between enumerated pairs"},
    {2, "~ is an equivalence on interval-union images"},
    {3, "generic certificates per variant"},
    {4, "extend_pair on random P-pairs"},
    {5, "recovery witnesses and fixed-point transfer"},
    {6, "composed and absorbed certificates"},
    {7, "right inverses and epi-mono factorization"},
    {8, "classification matches cancellability witnesses"},
    {9, "forest action laws, containment, fixpoints"},
    {10, "rho preservation iff essentially unary on grids"},
    {11, "ultrametric, lifted moduli, density witnesses"},
    {12, "suite all is deterministic and exits 0"},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: dlo_acceptance PATH_TO_CLI\n";
    return 2;
  }
  std::string cmd = std::string("'") + argv[1] + "' suite all 2>&1";
  // Started before the in-process run so the two overlap where cores allow.
  Child cli;
  cli.pipe = popen(cmd.c_str(), "r");
  if (!cli.pipe) {
    std::cerr << "cannot start " << argv[1] << "\n";
    return 2;
  }

  auto reports = dlo::run_suite("all", dlo::RunConfig{});
  std::map<int, std::size_t> checks, props, failed;
  for (const auto& r : reports)
    for (const auto& p : r.properties) {
      if (!p.criterion) continue;
      checks[p.criterion] += p.checks;
      ++props[p.criterion];
      if (!p.ok()) ++failed[p.criterion];
    }

  std::string local = dlo::render(reports, dlo::OutputFormat::text);
  finish(cli);
  bool all = true;
  for (const auto& [n, what] : kCriteria) {
    bool pass;
    std::string detail;
    if (n == 12) {
      pass = cli.status == 0 && cli.out == local && !local.empty();
      detail = "cli exit " + std::to_string(cli.status) +
               (cli.out == local ? ", report identical to an independent run" : ", reports differ");
    } else {
      pass = props[n] > 0 && failed[n] == 0;
      detail = std::to_string(props[n]) + " properties, " + std::to_string(checks[n]) + " checks, " +
               std::to_string(failed[n]) + " failing";
    }
    all = all && pass;
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << "  " << what << " (" << detail << ")\n";
  }
  return all ? 0 : 1;
}

#pragma once

#include "dlo/suites.hpp"

#include <random>
#include <string>

namespace dlo::suites {

// Independent generator per suite, so suites give the same output alone or
// inside "all".
std::mt19937_64 rng_for(const RunConfig& cfg, const std::string& suite);

Property& add(SuiteReport& r, std::string name, int criterion);

SuiteReport ratcore(const RunConfig& cfg);
SuiteReport sim(const RunConfig& cfg);
SuiteReport gamma(const RunConfig& cfg);
SuiteReport recover(const RunConfig& cfg);
SuiteReport factor(const RunConfig& cfg);
SuiteReport actions(const RunConfig& cfg);
SuiteReport clone(const RunConfig& cfg);
SuiteReport topology(const RunConfig& cfg);

}  // namespace dlo::suites

#pragma once

#include "rmc/machines.hpp"
#include "rmc/morphism.hpp"
#include "rmc/program.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rmc {

struct Fixture {
  std::string name;
  Program program;
  std::optional<WitnessSpec> spec;  // set for witness programs
};

/// Identity program plus identity and constant-head witnesses.
std::vector<Fixture> chain_fixtures();

/// Inputs of length <= max_len; most lie in Dom, a few are random words.
std::vector<Word> fixture_inputs(const Fixture& f, std::size_t count, unsigned seed, unsigned max_len = 40);

struct SuiteOptions {
  std::size_t samples = 50;
  unsigned parallel = 1;
  unsigned seed = 1;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> lines;
  double seconds = 0;
};

/// star-identity, factorization, regular-factorization, right-ideal,
/// balanced-inverse, inversion, witness-family, suffix-tracer, s-growth,
/// n-sequence, budget, fpref
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace rmc

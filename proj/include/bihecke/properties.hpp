#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bihecke/coxeter.hpp"

namespace bihecke {

struct PropertyOptions {
  std::size_t exhaustive_limit = 200;  // groups up to this size are checked element by element
  std::size_t pair_limit = 48;         // groups up to this size are checked on all pairs
  std::size_t samples = 200;           // sampled elements, pairs or functions otherwise
  std::size_t function_limit = 600;    // monoids up to this size are checked function by function
  std::size_t monoid_cap = 6000;       // larger biHecke monoids skip the monoid properties
  std::size_t linear_cap = 600;        // dimension cap for linear algebra on monoid algebras
  std::size_t operator_cap = 1000;     // exact span of the operators of T_w only below this count
  std::size_t cartan_cap = 200;        // full q-Cartan matrix only for biHecke monoids up to this size
  bool modular = false;                // modular arithmetic for the full q-Cartan matrix
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string scratch_dir;             // where the cache round trip writes; temp dir when empty
  std::vector<std::string> only;       // name prefixes to run; empty runs everything
  std::function<void(const std::string&)> progress;
};

enum class PropertyStatus { Pass, Fail, Skip };

struct PropertyResult {
  std::string name;
  PropertyStatus status = PropertyStatus::Pass;
  std::size_t cases = 0;
  std::string detail;  // first failure, or the reason for a skip
  double seconds = 0;
};

// Names of all properties, in run order ("module.property").
std::vector<std::string> property_names();

// Runs the selected properties on g. Each property seeds its own generator
// from opts.seed and its name, so results do not depend on the selection.
std::vector<PropertyResult> run_property_suite(const CoxeterGroup& g, const PropertyOptions& opts = {});

std::string format_property_result(const PropertyResult& r);

}  // namespace bihecke

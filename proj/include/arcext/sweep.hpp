#pragma once

#include <string>
#include <vector>

#include "arcext/extensions.hpp"
#include "arcext/surface.hpp"

namespace arcext {

struct SweepOptions {
  int max_len = 4;
  int parallel = 1;
};

struct SweepIssue {
  std::string kind;
  std::string detail;
};

struct SweepResult {
  long strings = 0;
  long pairs = 0;
  long crossings = 0;
  double seconds = 0;
  std::vector<SweepIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Exhaustive consistency sweep over all string pairs up to max_len letters:
// combinatorial Ext dimensions against the linear-algebra oracle, the
// string/snake-graph roundtrip, dual-route smoothing agreement, dimension
// identities and triangle counts.
SweepResult check_surface(const Surface& S, const SweepOptions& opt);

}  // namespace arcext

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pfsemi {

struct SweepRow {
  std::string condition;
  std::size_t passed = 0;
  std::size_t total = 0;
};

struct SweepSummary {
  std::size_t base_size = 0;
  std::size_t systems = 0;
  std::size_t invertible_systems = 0;
  std::vector<SweepRow> rows;
  // Informational lines that never fail the sweep.
  std::vector<std::string> notes;

  bool all_pass() const;
  std::string to_text() const;
};

// Size limits applied per row; systems above a limit are left out of that
// row's total.
struct SweepLimits {
  std::size_t closure_subsets = 5;     // every H ⊆ G
  std::size_t domain_intersection = 5; // every H ⊆ Φ
  std::size_t unrolled_depth1 = 4;     // singletons and doubletons
  std::size_t unrolled_depth2 = 3;     // singletons
  std::size_t minimality = 4;
  std::size_t chi0 = 24;               // rows that synthesize chi0
};

/// Runs every necessity property over all ∩-closed semigroups on
/// {0..base-1}, and the injective-map conditions over the invertible ones.
SweepSummary run_sweep(std::size_t base_size, const SweepLimits& limits = {});

}  // namespace pfsemi

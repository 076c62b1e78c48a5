#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pfsemi/abstract_system.hpp"
#include "pfsemi/check_report.hpp"
#include "pfsemi/partial_map.hpp"

namespace pfsemi {

/// An assignment of one partial map per abstract element.
struct Representation {
  std::size_t base_size = 0;
  std::vector<PartialMap> assignment;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Records rep.injective, rep.mul (P(xy) = P(y) o P(x)), rep.meet
/// (P(x⋏y) = P(x) ∩ P(y)), rep.delta (x ⊢ y iff im P(x) ⊆ dom P(y)) and, when
/// the system carries χ, rep.chi (x ⊏ y iff dom P(x) ⊆ dom P(y)).
CheckReport verify_representation(const AbstractSystem& s,
                                  const Representation& r);

enum class SearchStatus { Found, NotFoundUpToBound, ConditionsFail };

struct SearchOptions {
  std::size_t max_base = 2;
  // Only injective maps, and right distributivity joins the gate.
  bool invertible = false;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::NotFoundUpToBound;
  std::optional<Representation> representation;  // iff Found
  CheckReport conditions;  // the gating report, always filled
};

inline constexpr std::size_t kMaxSearchBase = 4;
// Guard on max_base * |G|.
inline constexpr std::size_t kMaxSearchWork = 48;

/// The gate run before searching: the structural checks, then (if those
/// pass) the delta characterization, plus right distributivity in
/// invertible mode.
CheckReport representation_conditions(const AbstractSystem& s, bool invertible);

/// Gates on representation_conditions(); on failure no representation can
/// exist. Otherwise tries base sizes 1..max_base in turn, assigning elements
/// in index order and candidate maps in canonical order, and rejects a
/// partial assignment as soon as a law instance over assigned elements
/// fails. The first complete assignment found is canonical. A miss is
/// inconclusive: larger bases are not ruled out.
SearchOutcome find_representation(const AbstractSystem& s,
                                  const SearchOptions& options);

}  // namespace pfsemi

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pfsemi/abstract_system.hpp"
#include "pfsemi/partial_map.hpp"

namespace pfsemi {

/// A finite set of partial maps closed under composition (and, when
/// with_meet() is set, under intersection), held in canonical order.
class TransSemigroup {
 public:
  /// Sorts and deduplicates `elements`. Throws IntegrityError if they are not
  /// closed as flagged, and UsageError on mixed base sizes or an empty set.
  TransSemigroup(std::size_t base_size, std::vector<PartialMap> elements,
                 bool with_meet);

  std::size_t base_size() const { return base_size_; }
  std::span<const PartialMap> elements() const { return elements_; }
  const PartialMap& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t size() const { return elements_.size(); }
  bool with_meet() const { return with_meet_; }
  // Every element is injective.
  bool invertible_only() const { return invertible_only_; }

  std::optional<std::size_t> index_of(const PartialMap& f) const;

  friend bool operator==(const TransSemigroup&, const TransSemigroup&) = default;

 private:
  std::size_t base_size_;
  std::vector<PartialMap> elements_;
  bool with_meet_;
  bool invertible_only_;
};

/// Smallest set containing `generators` and closed under composition, and
/// under intersection if `with_meet`.
TransSemigroup generate(std::size_t base_size,
                        std::span<const PartialMap> generators, bool with_meet);

/// Reads off (G, ·, ⋏, δ, χ) with x·y = "apply x, then y", i.e. the index of
/// compose(elem(y), elem(x)). Requires with_meet().
AbstractSystem extract_abstract(const TransSemigroup& phi);

/// Largest base size enumerate_all accepts. Base sizes up to
/// kFullEnumerationBase are enumerated over the whole powerset of maps;
/// above that, over the semigroups generated by one or two maps.
inline constexpr std::size_t kMaxEnumerationBase = 3;
inline constexpr std::size_t kFullEnumerationBase = 2;

using SemigroupSink = std::function<void(const TransSemigroup&)>;

/// Streams every closed, non-empty set of maps on {0..n-1} exactly once, in
/// increasing order of its membership bitmask over all_maps(n).
void enumerate_all(std::size_t base_size, bool with_meet, bool invertible_only,
                   const SemigroupSink& sink);

std::vector<TransSemigroup> enumerate_all(std::size_t base_size, bool with_meet,
                                          bool invertible_only);

}  // namespace pfsemi

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfsemi/bits.hpp"

namespace pfsemi {

/// A finite system (G, ·, ⋏, δ) with optional χ, given by Cayley tables and
/// bit matrices on G = {0..m-1}.
///
/// Only index ranges are validated on construction. Whether `mul` is
/// associative or `meet` is a semilattice are separate checks, so broken
/// candidates can be held and reported on.
class AbstractSystem {
 public:
  AbstractSystem(std::size_t size, std::vector<std::uint8_t> mul,
                 std::vector<std::uint8_t> meet, Relation delta,
                 std::optional<Relation> chi = std::nullopt,
                 std::string name = {});

  std::size_t size() const { return size_; }
  std::size_t mul(std::size_t x, std::size_t y) const { return mul_[x * size_ + y]; }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x * size_ + y]; }
  const Relation& delta() const { return delta_; }
  const std::optional<Relation>& chi() const { return chi_; }
  const std::string& name() const { return name_; }

  std::span<const std::uint8_t> mul_table() const { return mul_; }
  std::span<const std::uint8_t> meet_table() const { return meet_; }

  AbstractSystem with_delta(Relation delta) const;
  AbstractSystem with_chi(std::optional<Relation> chi) const;
  AbstractSystem with_name(std::string name) const;

  // The name is a label only and does not take part in equality.
  friend bool operator==(const AbstractSystem& a, const AbstractSystem& b) {
    return a.size_ == b.size_ && a.mul_ == b.mul_ && a.meet_ == b.meet_ &&
           a.delta_ == b.delta_ && a.chi_ == b.chi_;
  }

 private:
  std::size_t size_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> meet_;
  Relation delta_;
  std::optional<Relation> chi_;
  std::string name_;
};

/// An element of G extended by one formal element e. Depending on context e
/// plays the adjoined identity of G¹, the element e of G*, or the empty
/// symbol; in every role it is a two-sided identity for the product.
class StarElement {
 public:
  static constexpr StarElement e() { return StarElement(-1); }
  static constexpr StarElement elem(std::size_t i) {
    return StarElement(static_cast<long>(i));
  }

  constexpr bool is_e() const { return v_ < 0; }
  constexpr std::size_t index() const { return static_cast<std::size_t>(v_); }
  // Witness encoding; e maps to kWitnessE.
  constexpr long code() const { return v_; }

  friend constexpr bool operator==(StarElement, StarElement) = default;

 private:
  constexpr explicit StarElement(long v) : v_(v) {}
  long v_;
};

/// ee = e, ex = xe = x, otherwise the product of G.
StarElement star_mul(const AbstractSystem& s, StarElement a, StarElement b);

/// G followed by e: the range of quantifiers over G*.
std::vector<StarElement> star_range(const AbstractSystem& s);

/// Parses the line-oriented algebra format (see serialize()).
AbstractSystem parse_system(std::string_view text);
AbstractSystem load_system(const std::string& path);

/// Emits `size m`, then `mul`, `meet`, `delta` and optionally `chi` blocks,
/// then `end`. A non-empty name is written as a leading comment.
std::string serialize(const AbstractSystem& s);

/// Rows of a bit matrix, space separated, one row per line.
std::string format_relation_rows(const Relation& r);

}  // namespace pfsemi

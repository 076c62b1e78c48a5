#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pfsemi {

using Point = std::uint8_t;

// Point sets are bitmasks, so the base set is capped at 64 points.
inline constexpr std::size_t kMaxBaseSize = 64;

/// A subset of the base set {0..n-1}.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  constexpr bool contains(std::size_t a) const { return (bits_ >> a) & 1U; }
  constexpr void insert(std::size_t a) { bits_ |= std::uint64_t{1} << a; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(PointSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr std::uint64_t bits() const { return bits_; }
  std::size_t size() const;

  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  friend constexpr bool operator==(PointSet, PointSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// A partial transformation of the finite set {0..n-1}.
///
/// Entries are stored shifted by one so that the undefined sentinel (0) sorts
/// before every point; the defaulted ordering on the stored table is then the
/// canonical order used for element indexing throughout the library.
class PartialMap {
 public:
  /// Builds a map from its table; std::nullopt marks an undefined entry.
  /// Throws UsageError on an empty table, a table longer than kMaxBaseSize,
  /// or an entry outside the base set.
  explicit PartialMap(std::span<const std::optional<Point>> table);
  PartialMap(std::initializer_list<std::optional<Point>> table);

  static PartialMap empty(std::size_t base_size);

  std::size_t base_size() const { return codes_.size(); }
  bool defined_at(std::size_t a) const { return codes_[a] != kUndefinedCode; }
  std::optional<Point> at(std::size_t a) const;
  // Unchecked; only valid where defined_at(a).
  Point value(std::size_t a) const { return static_cast<Point>(codes_[a] - 1); }

  PointSet domain() const;
  PointSet image() const;

  friend bool operator==(const PartialMap&, const PartialMap&) = default;
  friend std::strong_ordering operator<=>(const PartialMap& a,
                                          const PartialMap& b);

  std::size_t hash() const;

 private:
  static constexpr std::uint8_t kUndefinedCode = 0;

  PartialMap() = default;

  std::vector<std::uint8_t> codes_;

  friend PartialMap compose(const PartialMap&, const PartialMap&);
  friend PartialMap meet(const PartialMap&, const PartialMap&);
  friend PartialMap identity_on(PointSet, std::size_t);
};

/// (g o f)(a) = g(f(a)), defined iff f is defined at a and g at f(a).
PartialMap compose(const PartialMap& g, const PartialMap& f);

/// Intersection of graphs: defined where both agree.
PartialMap meet(const PartialMap& f, const PartialMap& g);

inline PointSet domain(const PartialMap& f) { return f.domain(); }
inline PointSet image(const PartialMap& f) { return f.image(); }

/// Graph inclusion f ⊆ g.
bool rel_zeta(const PartialMap& f, const PartialMap& g);
/// Domain inclusion dom f ⊆ dom g.
bool rel_chi(const PartialMap& f, const PartialMap& g);
/// Semiadjacency: im f ⊆ dom g.
bool rel_delta(const PartialMap& f, const PartialMap& g);

/// Injective on its domain. The empty map is invertible.
bool is_invertible(const PartialMap& f);

/// The partial identity fixing exactly the points of `points`.
PartialMap identity_on(PointSet points, std::size_t base_size);

/// Every partial map on {0..n-1}, in canonical order; (n+1)^n of them.
std::vector<PartialMap> all_maps(std::size_t base_size);

/// Parses a comma-separated literal such as "1,-" ('-' is undefined).
PartialMap parse_map(std::string_view literal);
std::string to_literal(const PartialMap& f);

/// Parses a semicolon-separated list of map literals ("1,-;0,0").
std::vector<PartialMap> parse_map_list(std::string_view literals);

}  // namespace pfsemi

template <>
struct std::hash<pfsemi::PartialMap> {
  std::size_t operator()(const pfsemi::PartialMap& f) const noexcept {
    return f.hash();
  }
};

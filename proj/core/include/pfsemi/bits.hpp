#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pfsemi {

// Element sets and relations are bitmasks over the carrier, so abstract
// systems are capped at 64 elements.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of the carrier {0..m-1} of an abstract system.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t size, std::uint64_t bits);

  static ElementSet none(std::size_t size) { return ElementSet(size, 0); }
  static ElementSet all(std::size_t size);
  static ElementSet singleton(std::size_t size, std::size_t x);

  std::size_t universe() const { return size_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(std::size_t x) const { return (bits_ >> x) & 1U; }
  void insert(std::size_t x) { bits_ |= std::uint64_t{1} << x; }
  bool empty() const { return bits_ == 0; }
  std::size_t count() const;
  bool subset_of(const ElementSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  std::vector<std::size_t> members() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t size_ = 0;
  std::uint64_t bits_ = 0;
};

/// An m x m bit matrix; row x holds {y | (x, y) in the relation}.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t size);

  static Relation full(std::size_t size);
  static Relation identity(std::size_t size);

  std::size_t size() const { return rows_.size(); }
  bool test(std::size_t x, std::size_t y) const { return (rows_[x] >> y) & 1U; }
  void set(std::size_t x, std::size_t y, bool value = true);
  ElementSet row(std::size_t x) const { return ElementSet(size(), rows_[x]); }
  void set_row(std::size_t x, const ElementSet& row) { rows_[x] = row.bits(); }
  std::uint64_t row_bits(std::size_t x) const { return rows_[x]; }
  bool subset_of(const Relation& other) const;
  std::size_t count() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<std::uint64_t> rows_;
};

}  // namespace pfsemi

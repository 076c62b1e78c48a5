#include "pfsemi/bits.hpp"

#include <bit>
#include <string>

#include "pfsemi/errors.hpp"

namespace pfsemi {

namespace {
std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}
}  // namespace

ElementSet::ElementSet(std::size_t size, std::uint64_t bits)
    : size_(size), bits_(bits) {
  if (size > kMaxElements) {
    throw UsageError("element set: carrier exceeds " +
                     std::to_string(kMaxElements) + " elements");
  }
  if ((bits & ~low_mask(size)) != 0) {
    throw UsageError("element set: member outside carrier of size " +
                     std::to_string(size));
  }
}

ElementSet ElementSet::all(std::size_t size) {
  return ElementSet(size, low_mask(size));
}

ElementSet ElementSet::singleton(std::size_t size, std::size_t x) {
  if (x >= size) {
    throw UsageError("element set: index " + std::to_string(x) +
                     " outside carrier of size " + std::to_string(size));
  }
  return ElementSet(size, std::uint64_t{1} << x);
}

std::size_t ElementSet::count() const { return std::popcount(bits_); }

std::vector<std::size_t> ElementSet::members() const {
  std::vector<std::size_t> out;
  for (auto b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

Relation::Relation(std::size_t size) : rows_(size, 0) {
  if (size > kMaxElements) {
    throw UsageError("relation: carrier exceeds " +
                     std::to_string(kMaxElements) + " elements");
  }
}

Relation Relation::full(std::size_t size) {
  Relation r(size);
  for (auto& row : r.rows_) {
    row = low_mask(size);
  }
  return r;
}

Relation Relation::identity(std::size_t size) {
  Relation r(size);
  for (std::size_t x = 0; x < size; ++x) {
    r.set(x, x);
  }
  return r;
}

void Relation::set(std::size_t x, std::size_t y, bool value) {
  if (value) {
    rows_[x] |= std::uint64_t{1} << y;
  } else {
    rows_[x] &= ~(std::uint64_t{1} << y);
  }
}

bool Relation::subset_of(const Relation& other) const {
  if (size() != other.size()) {
    return false;
  }
  for (std::size_t x = 0; x < size(); ++x) {
    if ((rows_[x] & ~other.rows_[x]) != 0) {
      return false;
    }
  }
  return true;
}

std::size_t Relation::count() const {
  std::size_t n = 0;
  for (auto row : rows_) {
    n += std::popcount(row);
  }
  return n;
}

}  // namespace pfsemi

#include "pfsemi/partial_map.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "pfsemi/errors.hpp"

namespace pfsemi {

namespace {

void require_same_base(const PartialMap& a, const PartialMap& b,
                       const char* op) {
  if (a.base_size() != b.base_size()) {
    throw UsageError(std::string(op) + ": base sizes differ (" +
                     std::to_string(a.base_size()) + " vs " +
                     std::to_string(b.base_size()) + ")");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::size_t PointSet::size() const { return std::popcount(bits_); }

PartialMap::PartialMap(std::span<const std::optional<Point>> table) {
  if (table.empty()) {
    throw UsageError("partial map: base size must be positive");
  }
  if (table.size() > kMaxBaseSize) {
    throw UsageError("partial map: base size exceeds " +
                     std::to_string(kMaxBaseSize));
  }
  codes_.reserve(table.size());
  for (const auto& entry : table) {
    if (!entry) {
      codes_.push_back(kUndefinedCode);
      continue;
    }
    if (*entry >= table.size()) {
      throw UsageError("partial map: entry " + std::to_string(*entry) +
                       " outside base set of size " +
                       std::to_string(table.size()));
    }
    codes_.push_back(static_cast<std::uint8_t>(*entry + 1));
  }
}

PartialMap::PartialMap(std::initializer_list<std::optional<Point>> table)
    : PartialMap(std::span<const std::optional<Point>>(table.begin(),
                                                       table.size())) {}

PartialMap PartialMap::empty(std::size_t base_size) {
  std::vector<std::optional<Point>> table(base_size);
  return PartialMap(table);
}

std::optional<Point> PartialMap::at(std::size_t a) const {
  if (!defined_at(a)) {
    return std::nullopt;
  }
  return value(a);
}

PointSet PartialMap::domain() const {
  PointSet out;
  for (std::size_t a = 0; a < codes_.size(); ++a) {
    if (codes_[a] != kUndefinedCode) {
      out.insert(a);
    }
  }
  return out;
}

PointSet PartialMap::image() const {
  PointSet out;
  for (auto c : codes_) {
    if (c != kUndefinedCode) {
      out.insert(c - 1U);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const PartialMap& a, const PartialMap& b) {
  if (auto c = a.base_size() <=> b.base_size(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(
      a.codes_.begin(), a.codes_.end(), b.codes_.begin(), b.codes_.end());
}

std::size_t PartialMap::hash() const {
  // FNV-1a
  std::size_t h = 1469598103934665603ULL;
  for (auto c : codes_) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

PartialMap compose(const PartialMap& g, const PartialMap& f) {
  require_same_base(g, f, "compose");
  PartialMap out;
  out.codes_.resize(f.base_size(), PartialMap::kUndefinedCode);
  for (std::size_t a = 0; a < f.base_size(); ++a) {
    if (f.defined_at(a)) {
      out.codes_[a] = g.codes_[f.value(a)];
    }
  }
  return out;
}

PartialMap meet(const PartialMap& f, const PartialMap& g) {
  require_same_base(f, g, "meet");
  PartialMap out;
  out.codes_.resize(f.base_size(), PartialMap::kUndefinedCode);
  for (std::size_t a = 0; a < f.base_size(); ++a) {
    if (f.codes_[a] == g.codes_[a]) {
      out.codes_[a] = f.codes_[a];
    }
  }
  return out;
}

bool rel_zeta(const PartialMap& f, const PartialMap& g) {
  require_same_base(f, g, "rel_zeta");
  for (std::size_t a = 0; a < f.base_size(); ++a) {
    if (f.defined_at(a) && f.at(a) != g.at(a)) {
      return false;
    }
  }
  return true;
}

bool rel_chi(const PartialMap& f, const PartialMap& g) {
  require_same_base(f, g, "rel_chi");
  return f.domain().subset_of(g.domain());
}

bool rel_delta(const PartialMap& f, const PartialMap& g) {
  require_same_base(f, g, "rel_delta");
  return f.image().subset_of(g.domain());
}

bool is_invertible(const PartialMap& f) {
  PointSet seen;
  for (std::size_t a = 0; a < f.base_size(); ++a) {
    if (!f.defined_at(a)) {
      continue;
    }
    if (seen.contains(f.value(a))) {
      return false;
    }
    seen.insert(f.value(a));
  }
  return true;
}

PartialMap identity_on(PointSet points, std::size_t base_size) {
  if (base_size == 0 || base_size > kMaxBaseSize) {
    throw UsageError("identity_on: base size out of range");
  }
  if (base_size < 64 && (points.bits() >> base_size) != 0) {
    throw UsageError("identity_on: point outside base set of size " +
                     std::to_string(base_size));
  }
  PartialMap out;
  out.codes_.resize(base_size, PartialMap::kUndefinedCode);
  for (std::size_t a = 0; a < base_size; ++a) {
    if (points.contains(a)) {
      out.codes_[a] = static_cast<std::uint8_t>(a + 1);
    }
  }
  return out;
}

std::vector<PartialMap> all_maps(std::size_t base_size) {
  if (base_size == 0 || base_size > 4) {
    throw UsageError("all_maps: base size must be in 1..4");
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < base_size; ++i) {
    count *= base_size + 1;
  }
  std::vector<PartialMap> out;
  out.reserve(count);
  // Odometer over codes: most significant digit first gives canonical order.
  std::vector<std::size_t> digits(base_size, 0);
  std::vector<std::optional<Point>> table(base_size);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t a = 0; a < base_size; ++a) {
      table[a] = digits[a] == 0 ? std::nullopt
                                : std::optional<Point>(digits[a] - 1);
    }
    out.emplace_back(table);
    for (std::size_t a = base_size; a-- > 0;) {
      if (++digits[a] <= base_size) {
        break;
      }
      digits[a] = 0;
    }
  }
  return out;
}

PartialMap parse_map(std::string_view literal) {
  std::vector<std::optional<Point>> table;
  std::size_t start = 0;
  while (true) {
    auto comma = literal.find(',', start);
    auto field = trim(literal.substr(start, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - start));
    if (field == "-") {
      table.emplace_back(std::nullopt);
    } else {
      unsigned v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(0, "map literal '" + std::string(literal) +
                                "': bad entry '" + std::string(field) + "'");
      }
      if (v >= kMaxBaseSize) {
        throw ParseError(0, "map literal '" + std::string(literal) +
                                "': entry " + std::to_string(v) + " out of range");
      }
      table.emplace_back(static_cast<Point>(v));
    }
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  for (const auto& e : table) {
    if (e && *e >= table.size()) {
      throw ParseError(0, "map literal '" + std::string(literal) + "': entry " +
                              std::to_string(*e) + " outside base set of size " +
                              std::to_string(table.size()));
    }
  }
  if (table.size() > kMaxBaseSize) {
    throw ParseError(0, "map literal '" + std::string(literal) + "': too many entries");
  }
  return PartialMap(table);
}

std::string to_literal(const PartialMap& f) {
  std::string out;
  for (std::size_t a = 0; a < f.base_size(); ++a) {
    if (a > 0) {
      out += ',';
    }
    out += f.defined_at(a) ? std::to_string(f.value(a)) : "-";
  }
  return out;
}

std::vector<PartialMap> parse_map_list(std::string_view literals) {
  std::vector<PartialMap> out;
  std::size_t start = 0;
  while (start <= literals.size()) {
    auto semi = literals.find(';', start);
    auto item = trim(literals.substr(
        start, semi == std::string_view::npos ? std::string_view::npos
                                              : semi - start));
    if (!item.empty()) {
      out.push_back(parse_map(item));
    }
    if (semi == std::string_view::npos) {
      break;
    }
    start = semi + 1;
  }
  return out;
}

}  // namespace pfsemi

#include "pfsemi/trans_semigroup.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <unordered_set>

#include "pfsemi/errors.hpp"

namespace pfsemi {

namespace {

// Composition and intersection tables over all_maps(n), by canonical index.
struct MapTables {
  std::vector<PartialMap> maps;
  std::vector<std::size_t> then;  // then[i*k+j] = index of compose(j, i)
  std::vector<std::size_t> meet;

  explicit MapTables(std::size_t n) : maps(all_maps(n)) {
    auto k = maps.size();
    then.resize(k * k);
    meet.resize(k * k);
    auto index = [&](const PartialMap& f) {
      return static_cast<std::size_t>(
          std::lower_bound(maps.begin(), maps.end(), f) - maps.begin());
    };
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        then[i * k + j] = index(compose(maps[j], maps[i]));
        meet[i * k + j] = index(pfsemi::meet(maps[i], maps[j]));
      }
    }
  }

  bool closed(std::uint64_t mask, bool with_meet) const {
    auto k = maps.size();
    for (auto a = mask; a != 0; a &= a - 1) {
      auto i = static_cast<std::size_t>(std::countr_zero(a));
      for (auto b = mask; b != 0; b &= b - 1) {
        auto j = static_cast<std::size_t>(std::countr_zero(b));
        if (!((mask >> then[i * k + j]) & 1U)) {
          return false;
        }
        if (with_meet && !((mask >> meet[i * k + j]) & 1U)) {
          return false;
        }
      }
    }
    return true;
  }

  std::uint64_t close(std::uint64_t mask, bool with_meet) const {
    auto k = maps.size();
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto a = mask; a != 0; a &= a - 1) {
        auto i = static_cast<std::size_t>(std::countr_zero(a));
        for (auto b = mask; b != 0; b &= b - 1) {
          auto j = static_cast<std::size_t>(std::countr_zero(b));
          auto add = (std::uint64_t{1} << then[i * k + j]);
          if (with_meet) {
            add |= std::uint64_t{1} << meet[i * k + j];
          }
          if ((mask | add) != mask) {
            mask |= add;
            grew = true;
          }
        }
      }
    }
    return mask;
  }

  TransSemigroup build(std::size_t n, std::uint64_t mask, bool with_meet) const {
    std::vector<PartialMap> elems;
    for (auto a = mask; a != 0; a &= a - 1) {
      elems.push_back(maps[static_cast<std::size_t>(std::countr_zero(a))]);
    }
    return TransSemigroup(n, std::move(elems), with_meet);
  }
};

}  // namespace

TransSemigroup::TransSemigroup(std::size_t base_size,
                               std::vector<PartialMap> elements, bool with_meet)
    : base_size_(base_size),
      elements_(std::move(elements)),
      with_meet_(with_meet),
      invertible_only_(true) {
  if (elements_.empty()) {
    throw UsageError("transformation semigroup must be non-empty");
  }
  for (const auto& f : elements_) {
    if (f.base_size() != base_size_) {
      throw UsageError("transformation semigroup: element " + to_literal(f) +
                       " has base size " + std::to_string(f.base_size()) +
                       ", expected " + std::to_string(base_size_));
    }
    invertible_only_ = invertible_only_ && is_invertible(f);
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  for (const auto& f : elements_) {
    for (const auto& g : elements_) {
      if (!index_of(compose(g, f))) {
        throw IntegrityError("not closed under composition: " + to_literal(g) +
                             " o " + to_literal(f));
      }
      if (with_meet_ && !index_of(meet(f, g))) {
        throw IntegrityError("not closed under intersection: " + to_literal(f) +
                             " & " + to_literal(g));
      }
    }
  }
}

std::optional<std::size_t> TransSemigroup::index_of(const PartialMap& f) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), f);
  if (it == elements_.end() || *it != f) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

TransSemigroup generate(std::size_t base_size,
                        std::span<const PartialMap> generators, bool with_meet) {
  if (generators.empty()) {
    throw UsageError("generate: at least one generator is required");
  }
  for (const auto& g : generators) {
    if (g.base_size() != base_size) {
      throw UsageError("generate: generator " + to_literal(g) + " has base size " +
                       std::to_string(g.base_size()) + ", expected " +
                       std::to_string(base_size));
    }
  }
  std::vector<PartialMap> elems;
  std::unordered_set<PartialMap> seen;
  std::vector<std::size_t> worklist;
  auto add = [&](PartialMap f) {
    if (seen.insert(f).second) {
      elems.push_back(std::move(f));
      worklist.push_back(elems.size() - 1);
    }
  };
  for (const auto& g : generators) {
    add(g);
  }
  // Each new element is combined with everything already present, on both
  // sides; pairs among later elements are handled when those are popped.
  while (!worklist.empty()) {
    auto i = worklist.back();
    worklist.pop_back();
    for (std::size_t j = 0; j < elems.size(); ++j) {
      PartialMap f = elems[i];
      PartialMap g = elems[j];
      add(compose(f, g));
      add(compose(g, f));
      if (with_meet) {
        add(meet(f, g));
      }
    }
  }
  return TransSemigroup(base_size, std::move(elems), with_meet);
}

AbstractSystem extract_abstract(const TransSemigroup& phi) {
  if (!phi.with_meet()) {
    throw UsageError("extract_abstract: semigroup must be closed under intersection");
  }
  auto m = phi.size();
  if (m > kMaxElements) {
    throw UsageError("extract_abstract: more than " +
                     std::to_string(kMaxElements) + " elements");
  }
  std::vector<std::uint8_t> mul(m * m);
  std::vector<std::uint8_t> mt(m * m);
  Relation delta(m);
  Relation chi(m);
  auto locate = [&](const PartialMap& f, std::size_t x, std::size_t y,
                    const char* op) {
    auto idx = phi.index_of(f);
    if (!idx) {
      throw IntegrityError(std::string("extract_abstract: ") + op +
                           " of elements " + std::to_string(x) + " and " +
                           std::to_string(y) + " leaves the semigroup");
    }
    return static_cast<std::uint8_t>(*idx);
  };
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      mul[x * m + y] = locate(compose(phi[y], phi[x]), x, y, "product");
      mt[x * m + y] = locate(meet(phi[x], phi[y]), x, y, "meet");
      delta.set(x, y, rel_delta(phi[x], phi[y]));
      chi.set(x, y, rel_chi(phi[x], phi[y]));
    }
  }
  return AbstractSystem(m, std::move(mul), std::move(mt), std::move(delta),
                        std::move(chi));
}

void enumerate_all(std::size_t base_size, bool with_meet, bool invertible_only,
                   const SemigroupSink& sink) {
  if (base_size == 0 || base_size > kMaxEnumerationBase) {
    throw UsageError("enumerate: base size must be in 1.." +
                     std::to_string(kMaxEnumerationBase));
  }
  MapTables tables(base_size);
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < tables.maps.size(); ++i) {
    if (!invertible_only || is_invertible(tables.maps[i])) {
      pool.push_back(i);
    }
  }

  if (base_size <= kFullEnumerationBase) {
    // Every subset of the pool, as a mask over the pool, mapped back to a mask
    // over all maps. Pool indices are increasing, so the emitted order is
    // increasing in the full mask as well.
    const std::uint64_t limit = std::uint64_t{1} << pool.size();
    for (std::uint64_t sub = 1; sub < limit; ++sub) {
      std::uint64_t mask = 0;
      for (std::size_t b = 0; b < pool.size(); ++b) {
        if ((sub >> b) & 1U) {
          mask |= std::uint64_t{1} << pool[b];
        }
      }
      if (tables.closed(mask, with_meet)) {
        sink(tables.build(base_size, mask, with_meet));
      }
    }
    return;
  }

  std::set<std::uint64_t> found;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    auto one = std::uint64_t{1} << pool[a];
    found.insert(tables.close(one, with_meet));
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      found.insert(tables.close(one | (std::uint64_t{1} << pool[b]), with_meet));
    }
  }
  for (auto mask : found) {
    sink(tables.build(base_size, mask, with_meet));
  }
}

std::vector<TransSemigroup> enumerate_all(std::size_t base_size, bool with_meet,
                                          bool invertible_only) {
  std::vector<TransSemigroup> out;
  enumerate_all(base_size, with_meet, invertible_only,
                [&](const TransSemigroup& s) { out.push_back(s); });
  return out;
}

}  // namespace pfsemi

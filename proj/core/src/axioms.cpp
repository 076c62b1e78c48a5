#include "pfsemi/axioms.hpp"

#include <string>

#include "pfsemi/errors.hpp"
#include "scanners.hpp"

namespace pfsemi {

namespace scan {

std::optional<Witness> quasi_order(const Relation& r) {
  auto m = r.size();
  for (std::size_t x = 0; x < m; ++x) {
    if (!r.test(x, x)) {
      return Witness{long(x)};
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (!r.test(x, y)) {
        continue;
      }
      for (std::size_t z = 0; z < m; ++z) {
        if (r.test(y, z) && !r.test(x, z)) {
          return Witness{long(x), long(y), long(z)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> stable(const AbstractSystem& s, const Relation& r) {
  auto m = s.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (!r.test(x, y)) {
        continue;
      }
      for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
          if (r.test(u, v) && !r.test(s.mul(x, u), s.mul(y, v))) {
            return Witness{long(x), long(y), long(u), long(v)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> left_regular(const AbstractSystem& s, const Relation& r) {
  auto m = s.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = 0; v < m; ++v) {
        if (r.test(u, v) && !r.test(s.mul(x, u), s.mul(x, v))) {
          return Witness{long(x), long(u), long(v)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> right_regular(const AbstractSystem& s, const Relation& r) {
  auto m = s.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (!r.test(x, y)) {
        continue;
      }
      for (std::size_t u = 0; u < m; ++u) {
        if (!r.test(s.mul(x, u), s.mul(y, u))) {
          return Witness{long(x), long(y), long(u)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> left_ideal(const AbstractSystem& s, const Relation& r) {
  auto m = s.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (!r.test(x, y)) {
        continue;
      }
      for (std::size_t u = 0; u < m; ++u) {
        if (!r.test(s.mul(u, x), y)) {
          return Witness{long(x), long(y), long(u)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> right_negative(const AbstractSystem& s,
                                      const Relation& r) {
  auto m = s.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (r.test(x, y)) {
        continue;
      }
      for (std::size_t u = 0; u < m; ++u) {
        if (r.test(x, s.mul(y, u))) {
          return Witness{long(x), long(y), long(u)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> contains(const Relation& r, const Relation& order) {
  auto m = r.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (order.test(x, y) && !r.test(x, y)) {
        return Witness{long(x), long(y)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> chi_meet_product(const AbstractSystem& s,
                                        const Relation& r) {
  auto m = s.size();
  auto range = star_range(s);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = 0; z < m; ++z) {
        if (!r.test(x, s.meet(y, z))) {
          continue;
        }
        for (std::size_t v = 0; v < m; ++v) {
          auto zv = StarElement::elem(s.meet(z, v));
          auto yzv = StarElement::elem(s.meet(s.meet(y, z), v));
          for (auto u : range) {
            if (r.test(x, star_mul(s, zv, u).index()) &&
                !r.test(x, star_mul(s, yzv, u).index())) {
              return Witness{long(x), long(y), long(z), long(v), u.code()};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> delta_implies_chi_product(const AbstractSystem& s,
                                                 const Relation& r) {
  auto m = s.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (s.delta().test(x, y) && !r.test(x, s.mul(x, y))) {
        return Witness{long(x), long(y)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> chi_meet_order(const AbstractSystem& s, const Relation& r,
                                      const Relation& order) {
  auto m = s.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (r.test(x, s.meet(x, y)) && !order.test(x, y)) {
        return Witness{long(x), long(y)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> meet_product_order(const AbstractSystem& s,
                                          const Relation& order, bool with_e) {
  auto m = s.size();
  auto range = star_range(s);
  if (!with_e) {
    range.pop_back();
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      auto xy = StarElement::elem(s.meet(x, y));
      for (auto u : range) {
        auto lhs = star_mul(s, xy, u).index();
        auto rhs = star_mul(s, StarElement::elem(y), u).index();
        if (!order.test(lhs, rhs)) {
          return Witness{long(x), long(y), u.code()};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace scan

namespace {

void require_valid(const AbstractSystem& s, const char* who) {
  if (!is_structurally_valid(s)) {
    throw UsageError(std::string(who) +
                     ": requires an associative product and a semilattice meet");
  }
}

const Relation& require_chi(const AbstractSystem& s, const char* who) {
  if (!s.chi()) {
    throw UsageError(std::string(who) + ": system has no chi relation");
  }
  return *s.chi();
}

// G¹ as a quantifier range: G if it has an identity, else G plus e.
std::vector<StarElement> unital_range(const AbstractSystem& s) {
  auto range = star_range(s);
  if (find_identity(s)) {
    range.pop_back();
  }
  return range;
}

}  // namespace

CheckReport is_semigroup(const AbstractSystem& s) {
  CheckReport report;
  auto m = s.size();
  std::optional<Witness> bad;
  for (std::size_t x = 0; x < m && !bad; ++x) {
    for (std::size_t y = 0; y < m && !bad; ++y) {
      for (std::size_t z = 0; z < m && !bad; ++z) {
        if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z))) {
          bad = Witness{long(x), long(y), long(z)};
        }
      }
    }
  }
  report.add("semigroup.associative", bad);
  return report;
}

CheckReport is_semilattice(const AbstractSystem& s) {
  CheckReport report;
  auto m = s.size();
  std::optional<Witness> bad;
  for (std::size_t x = 0; x < m && !bad; ++x) {
    if (s.meet(x, x) != x) {
      bad = Witness{long(x)};
    }
  }
  report.add("semilattice.idempotent", bad);
  bad.reset();
  for (std::size_t x = 0; x < m && !bad; ++x) {
    for (std::size_t y = 0; y < m && !bad; ++y) {
      if (s.meet(x, y) != s.meet(y, x)) {
        bad = Witness{long(x), long(y)};
      }
    }
  }
  report.add("semilattice.commutative", bad);
  bad.reset();
  for (std::size_t x = 0; x < m && !bad; ++x) {
    for (std::size_t y = 0; y < m && !bad; ++y) {
      for (std::size_t z = 0; z < m && !bad; ++z) {
        if (s.meet(s.meet(x, y), z) != s.meet(x, s.meet(y, z))) {
          bad = Witness{long(x), long(y), long(z)};
        }
      }
    }
  }
  report.add("semilattice.associative", bad);
  return report;
}

bool is_structurally_valid(const AbstractSystem& s) {
  return is_semigroup(s).all_pass() && is_semilattice(s).all_pass();
}

Relation natural_order(const AbstractSystem& s) {
  if (!is_semilattice(s).all_pass()) {
    throw UsageError("natural_order: meet is not a semilattice");
  }
  Relation order(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < s.size(); ++y) {
      order.set(x, y, s.meet(x, y) == x);
    }
  }
  return order;
}

std::optional<std::size_t> find_identity(const AbstractSystem& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool identity = true;
    for (std::size_t x = 0; x < s.size() && identity; ++x) {
      identity = s.mul(i, x) == x && s.mul(x, i) == x;
    }
    if (identity) {
      return i;
    }
  }
  return std::nullopt;
}

CheckReport relation_properties(const AbstractSystem& s, const Relation& rho,
                                std::string_view prefix) {
  if (rho.size() != s.size()) {
    throw UsageError("relation_properties: relation has the wrong size");
  }
  std::string p(prefix);
  CheckReport report;
  report.add(p + "quasi-order", scan::quasi_order(rho));
  report.add(p + "stable", scan::stable(s, rho));
  report.add(p + "left-regular", scan::left_regular(s, rho));
  report.add(p + "right-regular", scan::right_regular(s, rho));
  report.add(p + "left-ideal", scan::left_ideal(s, rho));
  report.add(p + "right-negative", scan::right_negative(s, rho));
  return report;
}

CheckReport check_left_distributive(const AbstractSystem& s) {
  require_valid(s, "check_left_distributive");
  auto m = s.size();
  std::optional<Witness> bad;
  for (std::size_t x = 0; x < m && !bad; ++x) {
    for (std::size_t y = 0; y < m && !bad; ++y) {
      for (std::size_t z = 0; z < m && !bad; ++z) {
        if (s.mul(x, s.meet(y, z)) != s.meet(s.mul(x, y), s.mul(x, z))) {
          bad = Witness{long(x), long(y), long(z)};
        }
      }
    }
  }
  CheckReport report;
  report.add("left-distributive", bad);
  return report;
}

CheckReport check_meet_exchange(const AbstractSystem& s) {
  require_valid(s, "check_meet_exchange");
  auto m = s.size();
  auto range = unital_range(s);
  std::optional<Witness> bad;
  for (std::size_t x = 0; x < m && !bad; ++x) {
    for (std::size_t y = 0; y < m && !bad; ++y) {
      for (std::size_t z = 0; z < m && !bad; ++z) {
        auto yz = StarElement::elem(s.meet(y, z));
        auto xyz = StarElement::elem(s.meet(s.meet(x, y), z));
        auto xy = StarElement::elem(s.meet(x, y));
        for (auto u : range) {
          for (auto v : range) {
            auto right = star_mul(s, yz, v).index();
            auto lhs = s.meet(star_mul(s, xyz, u).index(), right);
            auto rhs = s.meet(star_mul(s, xy, u).index(), right);
            if (lhs != rhs) {
              bad = Witness{long(x), long(y), long(z), u.code(), v.code()};
              break;
            }
          }
          if (bad) {
            break;
          }
        }
      }
    }
  }
  CheckReport report;
  report.add("meet-exchange", bad);
  return report;
}

CheckReport check_right_distributive(const AbstractSystem& s) {
  require_valid(s, "check_right_distributive");
  auto m = s.size();
  std::optional<Witness> bad;
  for (std::size_t x = 0; x < m && !bad; ++x) {
    for (std::size_t y = 0; y < m && !bad; ++y) {
      for (std::size_t z = 0; z < m && !bad; ++z) {
        if (s.mul(s.meet(x, y), z) != s.meet(s.mul(x, z), s.mul(y, z))) {
          bad = Witness{long(x), long(y), long(z)};
        }
      }
    }
  }
  CheckReport report;
  report.add("right-distributive", bad);
  return report;
}

CheckReport check_square_closure(const AbstractSystem& s) {
  require_valid(s, "check_square_closure");
  auto range = unital_range(s);
  std::optional<Witness> bad;
  for (auto x : range) {
    for (auto y : range) {
      for (auto u : range) {
        for (auto v : range) {
          auto xv = star_mul(s, x, v);
          auto uv = star_mul(s, u, v);
          auto uy = star_mul(s, u, y);
          auto xy = star_mul(s, x, y);
          if (xv.is_e() || uv.is_e() || uy.is_e() || xy.is_e()) {
            continue;
          }
          auto three = s.meet(s.meet(xv.index(), uv.index()), uy.index());
          if (s.meet(three, xy.index()) != three) {
            bad = Witness{x.code(), y.code(), u.code(), v.code()};
            break;
          }
        }
        if (bad) break;
      }
      if (bad) break;
    }
    if (bad) break;
  }
  CheckReport report;
  report.add("square-closure", bad);
  return report;
}

CheckReport check_projection_conditions(const AbstractSystem& s) {
  const Relation& chi = require_chi(s, "check_projection_conditions");
  require_valid(s, "check_projection_conditions");
  auto order = natural_order(s);
  CheckReport report;
  report.add("chi.quasi-order", scan::quasi_order(chi));
  report.add("chi.left-regular", scan::left_regular(s, chi));
  report.add("chi.right-negative", scan::right_negative(s, chi));
  report.add("order-in-chi", scan::contains(chi, order));
  report.append(check_left_distributive(s));
  report.add("chi-meet-order", scan::chi_meet_order(s, chi, order));
  report.add("meet-product-order", scan::meet_product_order(s, order, true));
  report.add("chi-meet-product", scan::chi_meet_product(s, chi));
  return report;
}

CheckReport check_projection_conditions_invertible(const AbstractSystem& s) {
  auto report = check_projection_conditions(s);
  report.append(check_right_distributive(s));
  return report;
}

CheckReport check_delta_chi_link(const AbstractSystem& s) {
  const Relation& chi = require_chi(s, "check_delta_chi_link");
  auto m = s.size();
  std::optional<Witness> bad;
  for (std::size_t x = 0; x < m && !bad; ++x) {
    for (std::size_t y = 0; y < m && !bad; ++y) {
      if (s.delta().test(x, y) != chi.test(x, s.mul(x, y))) {
        bad = Witness{long(x), long(y)};
      }
    }
  }
  CheckReport report;
  report.add("delta-chi-link", bad);
  return report;
}

}  // namespace pfsemi

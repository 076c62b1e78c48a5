#include "pfsemi/abstract_system.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "pfsemi/errors.hpp"

namespace pfsemi {

namespace {

void check_table(const std::vector<std::uint8_t>& table, std::size_t size,
                 const char* what) {
  if (table.size() != size * size) {
    throw UsageError(std::string(what) + " table must have " +
                     std::to_string(size * size) + " entries");
  }
  for (auto v : table) {
    if (v >= size) {
      throw UsageError(std::string(what) + " table entry " + std::to_string(v) +
                       " out of range for size " + std::to_string(size));
    }
  }
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) {
    out.push_back(tok);
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto nl = text.find('\n', start);
      auto raw = text.substr(start, nl == std::string_view::npos
                                        ? std::string_view::npos
                                        : nl - start);
      ++number;
      std::string line(raw);
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      auto first = line.find_first_not_of(" \t");
      if (first != std::string::npos && line[first] != '#') {
        auto last = line.find_last_not_of(" \t");
        lines_.push_back({number, line.substr(first, last - first + 1)});
      }
      if (nl == std::string_view::npos) {
        break;
      }
      start = nl + 1;
    }
    last_line_ = number;
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const {
    if (done()) {
      throw ParseError(last_line_, "unexpected end of input");
    }
    return lines_[pos_];
  }
  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }
  void expect_keyword(const char* keyword) {
    const Line& l = next();
    if (l.text != keyword) {
      throw ParseError(l.number, std::string("expected '") + keyword +
                                     "', found '" + l.text + "'");
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

std::size_t parse_index(const std::string& tok, std::size_t line,
                        std::size_t bound) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "bad index '" + tok + "'");
  }
  if (v >= bound) {
    throw ParseError(line, "index " + tok + " out of range for size " +
                               std::to_string(bound));
  }
  return v;
}

std::vector<std::uint8_t> read_table(Reader& in, std::size_t m) {
  std::vector<std::uint8_t> table;
  table.reserve(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    const Line& l = in.next();
    auto toks = split_ws(l.text);
    if (toks.size() != m) {
      throw ParseError(l.number, "row has " + std::to_string(toks.size()) +
                                     " entries, expected " + std::to_string(m));
    }
    for (const auto& t : toks) {
      table.push_back(static_cast<std::uint8_t>(parse_index(t, l.number, m)));
    }
  }
  return table;
}

// Bit rows may be written either space separated ("1 0 1") or packed ("101").
Relation read_bits(Reader& in, std::size_t m) {
  Relation r(m);
  for (std::size_t x = 0; x < m; ++x) {
    const Line& l = in.next();
    auto toks = split_ws(l.text);
    if (toks.size() == 1 && m > 1) {
      toks.clear();
      for (char c : l.text) {
        toks.emplace_back(1, c);
      }
    }
    if (toks.size() != m) {
      throw ParseError(l.number, "row has " + std::to_string(toks.size()) +
                                     " bits, expected " + std::to_string(m));
    }
    for (std::size_t y = 0; y < m; ++y) {
      if (toks[y] == "1") {
        r.set(x, y);
      } else if (toks[y] != "0") {
        throw ParseError(l.number, "bad bit '" + toks[y] + "'");
      }
    }
  }
  return r;
}

}  // namespace

AbstractSystem::AbstractSystem(std::size_t size, std::vector<std::uint8_t> mul,
                               std::vector<std::uint8_t> meet, Relation delta,
                               std::optional<Relation> chi, std::string name)
    : size_(size),
      mul_(std::move(mul)),
      meet_(std::move(meet)),
      delta_(std::move(delta)),
      chi_(std::move(chi)),
      name_(std::move(name)) {
  if (size_ == 0 || size_ > kMaxElements) {
    throw UsageError("abstract system: size must be in 1.." +
                     std::to_string(kMaxElements));
  }
  check_table(mul_, size_, "mul");
  check_table(meet_, size_, "meet");
  if (delta_.size() != size_) {
    throw UsageError("abstract system: delta has the wrong size");
  }
  if (chi_ && chi_->size() != size_) {
    throw UsageError("abstract system: chi has the wrong size");
  }
}

AbstractSystem AbstractSystem::with_delta(Relation delta) const {
  return AbstractSystem(size_, mul_, meet_, std::move(delta), chi_, name_);
}

AbstractSystem AbstractSystem::with_chi(std::optional<Relation> chi) const {
  return AbstractSystem(size_, mul_, meet_, delta_, std::move(chi), name_);
}

AbstractSystem AbstractSystem::with_name(std::string name) const {
  return AbstractSystem(size_, mul_, meet_, delta_, chi_, std::move(name));
}

StarElement star_mul(const AbstractSystem& s, StarElement a, StarElement b) {
  if (a.is_e()) {
    return b;
  }
  if (b.is_e()) {
    return a;
  }
  return StarElement::elem(s.mul(a.index(), b.index()));
}

std::vector<StarElement> star_range(const AbstractSystem& s) {
  std::vector<StarElement> out;
  out.reserve(s.size() + 1);
  for (std::size_t x = 0; x < s.size(); ++x) {
    out.push_back(StarElement::elem(x));
  }
  out.push_back(StarElement::e());
  return out;
}

AbstractSystem parse_system(std::string_view text) {
  Reader in(text);
  const Line& header = in.next();
  auto toks = split_ws(header.text);
  if (toks.size() != 2 || toks[0] != "size") {
    throw ParseError(header.number, "expected 'size <m>'");
  }
  std::size_t m = 0;
  auto [ptr, ec] =
      std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), m);
  if (ec != std::errc() || ptr != toks[1].data() + toks[1].size() || m == 0 ||
      m > kMaxElements) {
    throw ParseError(header.number, "size must be an integer in 1.." +
                                        std::to_string(kMaxElements));
  }
  in.expect_keyword("mul");
  auto mul = read_table(in, m);
  in.expect_keyword("meet");
  auto meet = read_table(in, m);
  in.expect_keyword("delta");
  auto delta = read_bits(in, m);
  std::optional<Relation> chi;
  if (in.peek().text == "chi") {
    in.next();
    chi = read_bits(in, m);
  }
  in.expect_keyword("end");
  if (!in.done()) {
    throw ParseError(in.peek().number, "trailing content after 'end'");
  }
  return AbstractSystem(m, std::move(mul), std::move(meet), std::move(delta),
                        std::move(chi));
}

AbstractSystem load_system(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw UsageError("cannot open algebra file '" + path + "'");
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  return parse_system(buf.str()).with_name(name);
}

std::string format_relation_rows(const Relation& r) {
  std::string out;
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      if (y > 0) {
        out += ' ';
      }
      out += r.test(x, y) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string serialize(const AbstractSystem& s) {
  std::string out;
  if (!s.name().empty()) {
    out += "# " + s.name() + "\n";
  }
  auto m = s.size();
  out += "size " + std::to_string(m) + "\n";
  auto table = [&](const char* keyword, auto at) {
    out += keyword;
    out += '\n';
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        if (y > 0) {
          out += ' ';
        }
        out += std::to_string(at(x, y));
      }
      out += '\n';
    }
  };
  table("mul", [&](auto x, auto y) { return s.mul(x, y); });
  table("meet", [&](auto x, auto y) { return s.meet(x, y); });
  out += "delta\n" + format_relation_rows(s.delta());
  if (s.chi()) {
    out += "chi\n" + format_relation_rows(*s.chi());
  }
  out += "end\n";
  return out;
}

}  // namespace pfsemi

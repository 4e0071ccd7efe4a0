#include "rlat/rlat_format.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace rlat {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream is{std::string(line)};
  for (std::string w; is >> w;) words.push_back(w);
  return words;
}

}  // namespace

RawTables parse_rlat(std::string_view text) {
  RawTables raw;
  std::map<std::string, Element, std::less<>> index;
  std::optional<std::string> bottom, top;
  bool have_name = false, have_elements = false, ended = false;
  struct Row {
    Element x, y, v;
    std::size_t line;
  };
  std::vector<Row> muls, ress;

  auto lookup = [&](const std::string& tok, std::size_t line) -> Element {
    if (!have_elements) throw ParseError(line, "element token before 'elements' line");
    auto it = index.find(tok);
    if (it == index.end()) throw ParseError(line, "unknown element '" + tok + "'");
    return it->second;
  };

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    if (ended) throw ParseError(lineno, "content after 'end'");
    const auto& kw = words[0];
    auto want = [&](std::size_t count) {
      if (words.size() != count) throw ParseError(lineno, "'" + kw + "' expects " + std::to_string(count - 1) + " argument(s)");
    };
    if (kw == "lattice") {
      want(2);
      if (have_name) throw ParseError(lineno, "duplicate 'lattice' line");
      raw.name = words[1];
      have_name = true;
    } else if (kw == "elements") {
      if (have_elements) throw ParseError(lineno, "duplicate 'elements' line");
      if (words.size() < 3) throw ParseError(lineno, "need at least two elements");
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!index.emplace(words[i], static_cast<Element>(i - 1)).second)
          throw ParseError(lineno, "duplicate element '" + words[i] + "'");
        raw.element_names.push_back(words[i]);
      }
      if (raw.element_names.size() > kMaxElements)
        throw ParseError(lineno, "more than " + std::to_string(kMaxElements) + " elements");
      have_elements = true;
    } else if (kw == "bottom") {
      want(2);
      if (bottom) throw ParseError(lineno, "duplicate 'bottom' line");
      raw.bottom = lookup(words[1], lineno);
      bottom = words[1];
    } else if (kw == "top") {
      want(2);
      if (top) throw ParseError(lineno, "duplicate 'top' line");
      raw.top = lookup(words[1], lineno);
      top = words[1];
    } else if (kw == "cover") {
      want(3);
      raw.order.emplace_back(lookup(words[1], lineno), lookup(words[2], lineno));
    } else if (kw == "mul") {
      want(4);
      muls.push_back({lookup(words[1], lineno), lookup(words[2], lineno), lookup(words[3], lineno), lineno});
    } else if (kw == "res") {
      want(4);
      ress.push_back({lookup(words[1], lineno), lookup(words[2], lineno), lookup(words[3], lineno), lineno});
    } else if (kw == "end") {
      want(1);
      ended = true;
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_name) throw ParseError(lineno, "missing 'lattice' line");
  if (!have_elements) throw ParseError(lineno, "missing 'elements' line");
  if (!bottom) throw ParseError(lineno, "missing 'bottom' line");
  if (!top) throw ParseError(lineno, "missing 'top' line");
  if (!ended) throw ParseError(lineno, "missing 'end' line");
  if (raw.bottom == raw.top) throw ParseError(lineno, "bottom and top coincide");

  const std::size_t n = raw.element_names.size();
  raw.prod.assign(n * n, std::nullopt);
  for (const auto& r : muls) {
    if (raw.prod[r.x * n + r.y]) throw ParseError(r.line, "duplicate mul row for " + raw.element_names[r.x] + " " + raw.element_names[r.y]);
    raw.prod[r.x * n + r.y] = r.v;
    raw.prod[r.y * n + r.x] = r.v;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      auto& e = raw.prod[x * n + y];
      if (e) continue;
      std::optional<Element> dflt;
      if (x == raw.bottom || y == raw.bottom) dflt = raw.bottom;
      else if (x == raw.top) dflt = y;
      else if (y == raw.top) dflt = x;
      if (!dflt)
        throw ParseError(lineno, "missing mul row for " + raw.element_names[x] + " " + raw.element_names[y]);
      e = dflt;
      raw.prod[y * n + x] = dflt;
    }
  }
  if (!ress.empty()) {
    raw.res.assign(n * n, std::nullopt);
    for (const auto& r : ress) {
      if (raw.res[r.x * n + r.y]) throw ParseError(r.line, "duplicate res row");
      raw.res[r.x * n + r.y] = r.v;
    }
  }
  return raw;
}

RawTables read_rlat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_rlat(ss.str());
}

std::string write_rlat(const ResiduatedLattice& lat) {
  std::ostringstream os;
  const auto& nm = lat.element_names();
  os << "lattice " << lat.name() << "\n";
  os << "elements";
  for (const auto& t : nm) os << " " << t;
  os << "\nbottom " << nm[lat.bottom()] << "\ntop " << nm[lat.top()] << "\n";
  for (auto [x, y] : lat.covers()) os << "cover " << nm[x] << " " << nm[y] << "\n";
  const auto n = static_cast<Element>(lat.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      if (x == lat.bottom() || y == lat.bottom() || x == lat.top() || y == lat.top()) continue;
      os << "mul " << nm[x] << " " << nm[y] << " " << nm[lat.prod(x, y)] << "\n";
    }
  }
  os << "end\n";
  return os.str();
}

}  // namespace rlat

#include "rlat/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rlat {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Malformed: return "Malformed";
    case ViolationKind::NotALattice: return "NotALattice";
    case ViolationKind::BoundsMismatch: return "BoundsMismatch";
    case ViolationKind::NotMonoid: return "NotMonoid";
    case ViolationKind::NotAdjoint: return "NotAdjoint";
    case ViolationKind::ResiduumGap: return "ResiduumGap";
    case ViolationKind::ResTableMismatch: return "ResTableMismatch";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind kind) const { return first(kind) != nullptr; }

const Violation* ValidationReport::first(ViolationKind kind) const {
  for (const auto& v : violations)
    if (v.kind == kind) return &v;
  return nullptr;
}

namespace {

std::string describe(const ValidationReport& report) {
  std::ostringstream os;
  os << "invalid residuated lattice:";
  for (const auto& v : report.violations) os << " [" << to_string(v.kind) << ": " << v.message << "]";
  return os.str();
}

// Accumulates one witness per axiom.
class Checker {
 public:
  Checker(const RawTables& raw, ValidationReport& report) : raw_(raw), report_(report) {}

  void fail(ViolationKind kind, std::string axiom, std::vector<Element> witness, const std::string& what) {
    for (const auto& v : report_.violations)
      if (v.axiom == axiom) return;
    std::ostringstream os;
    os << axiom << " fails at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << token(witness[i]);
    os << ")";
    if (!what.empty()) os << ": " << what;
    report_.violations.push_back({kind, std::move(axiom), std::move(witness), os.str()});
  }

  std::string token(Element x) const {
    return x < raw_.element_names.size() ? raw_.element_names[x] : "#" + std::to_string(x);
  }

 private:
  const RawTables& raw_;
  ValidationReport& report_;
};

bool valid_token(const std::string& t) {
  if (t.empty()) return false;
  return std::none_of(t.begin(), t.end(), [](unsigned char c) {
    return std::isspace(c) || c == ',' || c == '#' || c == '{' || c == '}';
  });
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)) {}

ValidationResult validate(const RawTables& raw, ValidateOptions opts) {
  ValidationResult result;
  auto& report = result.report;
  Checker check(raw, report);
  const std::size_t n = raw.element_names.size();

  // Shape.
  const std::size_t min_n = opts.allow_degenerate ? 1 : 2;
  if (n < min_n || n > kMaxElements) {
    check.fail(ViolationKind::Malformed, "size", {}, "element count " + std::to_string(n) + " outside [" +
                                                         std::to_string(min_n) + ", " +
                                                         std::to_string(kMaxElements) + "]");
    return result;
  }
  {
    std::set<std::string> seen;
    for (Element i = 0; i < n; ++i) {
      const auto& t = raw.element_names[i];
      if (!valid_token(t)) check.fail(ViolationKind::Malformed, "token", {i}, "bad element token '" + t + "'");
      if (!seen.insert(t).second) check.fail(ViolationKind::Malformed, "distinct names", {i}, "duplicate token");
    }
  }
  if (raw.bottom >= n || raw.top >= n) {
    check.fail(ViolationKind::Malformed, "bounds", {}, "bottom/top index out of range");
    return result;
  }
  if (raw.prod.size() != n * n) {
    check.fail(ViolationKind::Malformed, "product shape", {}, "product table is not n×n");
    return result;
  }
  if (!raw.res.empty() && raw.res.size() != n * n) {
    check.fail(ViolationKind::Malformed, "residuum shape", {}, "residuum table is not n×n");
    return result;
  }
  for (auto [x, y] : raw.order) {
    if (x >= n || y >= n) {
      check.fail(ViolationKind::Malformed, "order relation", {}, "order index out of range");
      return result;
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const auto& e = raw.prod[x * n + y];
      if (!e) {
        check.fail(ViolationKind::Malformed, "product entry", {x, y}, "missing product entry");
        return result;
      }
      if (*e >= n) {
        check.fail(ViolationKind::Malformed, "product entry", {x, y}, "product value out of range");
        return result;
      }
    }
  }
  if (!report.ok()) return result;

  auto p = [&](Element x, Element y) { return *raw.prod[x * n + y]; };

  // Order: reflexive-transitive closure, then antisymmetry.
  std::vector<ElementSubset> up(n);
  for (Element x = 0; x < n; ++x) up[x].insert(x);
  for (auto [x, y] : raw.order) up[x].insert(y);
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x = 0; x < n; ++x) {
      ElementSubset next = up[x];
      for (Element y : up[x]) next |= up[y];
      if (next != up[x]) {
        up[x] = next;
        changed = true;
      }
    }
  }
  auto leq = [&](Element x, Element y) { return up[x].contains(y); };
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (leq(x, y) && leq(y, x)) check.fail(ViolationKind::NotALattice, "antisymmetry", {x, y}, "x ≤ y ≤ x");
  if (!report.ok()) return result;

  std::vector<ElementSubset> down(n);
  for (Element x = 0; x < n; ++x)
    for (Element y : up[x]) down[y].insert(x);

  // Joins and meets: least upper bound / greatest lower bound.
  std::vector<Element> join(n * n), meet(n * n);
  bool lattice_ok = true;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ElementSubset ub = up[x] & up[y];
      ElementSubset lb = down[x] & down[y];
      std::optional<Element> lub, glb;
      for (Element z : ub)
        if (ub.is_subset_of(up[z])) lub = z;
      for (Element z : lb)
        if (lb.is_subset_of(down[z])) glb = z;
      if (!lub) {
        check.fail(ViolationKind::NotALattice, "joins exist", {x, y}, "no least upper bound");
        lattice_ok = false;
      } else {
        join[x * n + y] = *lub;
      }
      if (!glb) {
        check.fail(ViolationKind::NotALattice, "meets exist", {x, y}, "no greatest lower bound");
        lattice_ok = false;
      } else {
        meet[x * n + y] = *glb;
      }
    }
  }

  if (up[raw.bottom] != ElementSubset::full(n))
    check.fail(ViolationKind::BoundsMismatch, "bottom is least", {raw.bottom}, "declared bottom is not below everything");
  if (down[raw.top] != ElementSubset::full(n))
    check.fail(ViolationKind::BoundsMismatch, "top is greatest", {raw.top}, "declared top is not above everything");

  // Commutative monoid with unit top.
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p(x, y) != p(y, x)) check.fail(ViolationKind::NotMonoid, "commutativity", {x, y}, "x⊙y ≠ y⊙x");
  for (Element x = 0; x < n; ++x)
    if (p(x, raw.top) != x) check.fail(ViolationKind::NotMonoid, "unit", {x}, "x⊙1 ≠ x");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (p(p(x, y), z) != p(x, p(y, z)))
          check.fail(ViolationKind::NotMonoid, "associativity", {x, y, z}, "(x⊙y)⊙z ≠ x⊙(y⊙z)");

  // Residuum: maximum of {z | x⊙z ≤ y}, then the adjunction itself.
  std::vector<Element> res(n * n, 0);
  bool res_ok = true;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ElementSubset s;
      for (Element z = 0; z < n; ++z)
        if (leq(p(x, z), y)) s.insert(z);
      std::optional<Element> max;
      for (Element z : s)
        if (s.is_subset_of(down[z])) max = z;
      if (!max) {
        check.fail(ViolationKind::ResiduumGap, "residuum exists", {x, y}, "{z | x⊙z ≤ y} has no maximum");
        res_ok = false;
        continue;
      }
      res[x * n + y] = *max;
      for (Element z = 0; z < n; ++z)
        if (leq(p(x, z), y) != leq(z, *max))
          check.fail(ViolationKind::NotAdjoint, "adjunction", {x, y, z}, "x⊙z ≤ y ⇔ z ≤ x→y fails");
    }
  }
  if (lattice_ok) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!leq(p(x, y), meet[x * n + y]))
          check.fail(ViolationKind::NotAdjoint, "product below meet", {x, y}, "x⊙y ≰ x∧y");
  }
  if (res_ok && !raw.res.empty()) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (const auto& given = raw.res[x * n + y]; given && *given != res[x * n + y])
          check.fail(ViolationKind::ResTableMismatch, "residuum table", {x, y},
                     "supplied x→y = " + check.token(*given) + ", derived " + check.token(res[x * n + y]));
  }

  if (!report.ok()) return result;

  ResiduatedLattice lat;
  lat.name_ = raw.name;
  lat.names_ = raw.element_names;
  lat.bottom_ = raw.bottom;
  lat.top_ = raw.top;
  lat.up_ = std::move(up);
  lat.down_ = std::move(down);
  lat.join_ = std::move(join);
  lat.meet_ = std::move(meet);
  lat.prod_.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i) lat.prod_[i] = *raw.prod[i];
  lat.res_ = std::move(res);
  result.lattice = std::move(lat);
  return result;
}

ResiduatedLattice validate_or_throw(const RawTables& raw, ValidateOptions opts) {
  auto r = validate(raw, opts);
  if (!r.lattice) throw ValidationError(std::move(r.report));
  return std::move(*r.lattice);
}

std::optional<Element> ResiduatedLattice::find(std::string_view token) const {
  for (Element i = 0; i < names_.size(); ++i)
    if (names_[i] == token) return i;
  return std::nullopt;
}

Element ResiduatedLattice::power(Element x, unsigned k) const {
  Element r = top_;
  for (unsigned i = 0; i < k; ++i) r = prod(r, x);
  return r;
}

std::vector<std::pair<Element, Element>> ResiduatedLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  const auto n = size();
  for (Element x = 0; x < n; ++x) {
    for (Element y : up_[x]) {
      if (y == x) continue;
      // y covers x iff nothing lies strictly between.
      ElementSubset between = (up_[x] & down_[y]) - ElementSubset::of({x, y});
      if (between.empty()) out.emplace_back(x, y);
    }
  }
  return out;
}

RawTables ResiduatedLattice::to_raw() const {
  RawTables raw;
  raw.name = name_;
  raw.element_names = names_;
  raw.bottom = bottom_;
  raw.top = top_;
  raw.order = covers();
  raw.prod.assign(prod_.begin(), prod_.end());
  return raw;
}

DerivedOps derived_element_ops(const ResiduatedLattice& lat, Element x, unsigned k) {
  return {lat.neg(x), lat.power(x, k)};
}

namespace {

std::string product_token(const std::string& a, const std::string& b) {
  auto wrap = [](const std::string& t) { return t.find('.') == std::string::npos ? t : "(" + t + ")"; };
  return wrap(a) + "." + wrap(b);
}

}  // namespace

ResiduatedLattice direct_product(const ResiduatedLattice& a, const ResiduatedLattice& b) {
  if (a.degenerate() || b.degenerate())
    throw SizeLimitError("direct_product: factors must have at least two elements");
  const std::size_t n1 = a.size(), n2 = b.size();
  if (n1 * n2 > kMaxElements)
    throw SizeLimitError("direct_product: " + std::to_string(n1) + "×" + std::to_string(n2) + " exceeds " +
                         std::to_string(kMaxElements) + " elements");
  const std::size_t n = n1 * n2;
  auto idx = [n2](Element i, Element j) { return static_cast<Element>(i * n2 + j); };

  RawTables raw;
  raw.name = a.name() + "x" + b.name();
  for (Element i = 0; i < n1; ++i)
    for (Element j = 0; j < n2; ++j) raw.element_names.push_back(product_token(a.element_name(i), b.element_name(j)));
  raw.bottom = idx(a.bottom(), b.bottom());
  raw.top = idx(a.top(), b.top());
  for (auto [x, y] : a.covers())
    for (Element j = 0; j < n2; ++j) raw.order.emplace_back(idx(x, j), idx(y, j));
  for (auto [x, y] : b.covers())
    for (Element i = 0; i < n1; ++i) raw.order.emplace_back(idx(i, x), idx(i, y));
  raw.prod.resize(n * n);
  for (Element i1 = 0; i1 < n1; ++i1)
    for (Element j1 = 0; j1 < n2; ++j1)
      for (Element i2 = 0; i2 < n1; ++i2)
        for (Element j2 = 0; j2 < n2; ++j2)
          raw.prod[idx(i1, j1) * n + idx(i2, j2)] = idx(a.prod(i1, i2), b.prod(j1, j2));
  return validate_or_throw(raw);
}

std::string format_subset(const ResiduatedLattice& lat, ElementSubset s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ",";
    out += lat.element_name(x);
    first = false;
  }
  return out + "}";
}

ElementSubset parse_subset(const ResiduatedLattice& lat, std::string_view csv) {
  ElementSubset s;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto next = csv.find(',', pos);
    if (next == std::string_view::npos) next = csv.size();
    auto tok = csv.substr(pos, next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      auto x = lat.find(tok);
      if (!x) throw std::invalid_argument("unknown element token '" + std::string(tok) + "'");
      s.insert(*x);
    }
    pos = next + 1;
  }
  return s;
}

}  // namespace rlat

#include "rlat/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "rlat/classify.hpp"
#include "rlat/fixtures.hpp"
#include "rlat/instance.hpp"
#include "rlat/purity.hpp"
#include "rlat/spectra.hpp"

namespace rlat {

namespace detail {
const char* property_manifest_text();
}

// ---------------------------------------------------------------- generators

namespace {

RawTables chain_skeleton(std::size_t n, const char* family) {
  if (n < 2 || n > kMaxElements)
    throw SizeLimitError(std::string(family) + " chain size " + std::to_string(n) + " outside [2, " +
                         std::to_string(kMaxElements) + "]");
  RawTables raw;
  raw.element_names.push_back("0");
  for (std::size_t i = 1; i + 1 < n; ++i) raw.element_names.push_back("x" + std::to_string(i));
  raw.element_names.push_back("1");
  raw.bottom = 0;
  raw.top = static_cast<Element>(n - 1);
  for (Element i = 0; i + 1 < n; ++i) raw.order.emplace_back(i, i + 1);
  raw.prod.resize(n * n);
  return raw;
}

}  // namespace

RawTables godel_chain_tables(std::size_t n) {
  auto raw = chain_skeleton(n, "Gödel");
  raw.name = "G" + std::to_string(n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) raw.prod[i * n + j] = std::min(i, j);
  return raw;
}

RawTables lukasiewicz_chain_tables(std::size_t n) {
  auto raw = chain_skeleton(n, "Łukasiewicz");
  raw.name = "L" + std::to_string(n);
  const auto top = static_cast<long>(n - 1);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) raw.prod[i * n + j] = static_cast<Element>(std::max(0L, long(i) + long(j) - top));
  return raw;
}

ResiduatedLattice godel_chain(std::size_t n) { return validate_or_throw(godel_chain_tables(n)); }
ResiduatedLattice lukasiewicz_chain(std::size_t n) { return validate_or_throw(lukasiewicz_chain_tables(n)); }

std::string Generator::id() const {
  switch (kind) {
    case Kind::fixture: return fixture_name;
    case Kind::godel_chain: return "G" + std::to_string(n);
    case Kind::lukasiewicz_chain: return "L" + std::to_string(n);
    case Kind::product: return factors.at(0).id() + "x" + factors.at(1).id();
  }
  return {};
}

std::size_t Generator::size() const {
  switch (kind) {
    case Kind::fixture: return rlat::fixture(fixture_name).size();
    case Kind::godel_chain:
    case Kind::lukasiewicz_chain: return n;
    case Kind::product: return factors.at(0).size() * factors.at(1).size();
  }
  return 0;
}

ResiduatedLattice generate(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::fixture: return fixture(g.fixture_name);
    case Generator::Kind::godel_chain: return godel_chain(g.n);
    case Generator::Kind::lukasiewicz_chain: return lukasiewicz_chain(g.n);
    case Generator::Kind::product:
      if (g.factors.size() != 2) throw std::invalid_argument("product needs exactly two factors");
      return direct_product(generate(g.factors[0]), generate(g.factors[1]));
  }
  throw std::invalid_argument("unknown generator");
}

std::vector<ResiduatedLattice> generate(const std::vector<Generator>& gs) {
  std::vector<ResiduatedLattice> out;
  out.reserve(gs.size());
  for (const auto& g : gs) out.push_back(generate(g));
  return out;
}

std::vector<Generator> standard_family() {
  std::vector<Generator> base;
  for (const auto& name : fixture_names()) base.push_back(Generator::fixture(name));
  for (std::size_t n = 2; n <= 8; ++n) base.push_back(Generator::godel(n));
  for (std::size_t n = 2; n <= 8; ++n) base.push_back(Generator::lukasiewicz(n));
  std::vector<Generator> out = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j)
      if (base[i].size() * base[j].size() <= 16) out.push_back(Generator::product(base[i], base[j]));
  return out;
}

// ------------------------------------------------------------------- suites

const char* to_string(Suite s) {
  switch (s) {
    case Suite::core: return "core";
    case Suite::purity: return "purity";
    case Suite::spp: return "spp";
    case Suite::gelfand: return "gelfand";
    case Suite::mp: return "mp";
    case Suite::all: return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view s) {
  for (Suite k : {Suite::core, Suite::purity, Suite::spp, Suite::gelfand, Suite::mp, Suite::all})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "n/a";
  }
  return "?";
}

namespace {

std::string fs(const ResiduatedLattice& lat, const Filter& f) { return format_subset(lat, f.elements()); }
std::string es(const ResiduatedLattice& lat, ElementSubset s) { return format_subset(lat, s); }

bool contains(const std::vector<Filter>& v, const Filter& f) { return std::find(v.begin(), v.end(), f) != v.end(); }

std::set<std::uint32_t> bits_of(const std::vector<Filter>& v) {
  std::set<std::uint32_t> out;
  for (const auto& f : v) out.insert(f.elements().bits());
  return out;
}

std::string listing(const ResiduatedLattice& lat, std::vector<Filter> v) {
  std::sort(v.begin(), v.end(), [](const Filter& a, const Filter& b) { return canonical_less(a, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + fs(lat, v[i]);
  return out + "]";
}

std::set<std::string> rendered(const ResiduatedLattice& lat, const std::vector<Filter>& v) {
  std::set<std::string> out;
  for (const auto& f : v) out.insert(fs(lat, f));
  return out;
}

std::string joined(const std::set<std::string>& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& x : s) {
    out += (first ? "" : " ") + x;
    first = false;
  }
  return out + "]";
}

Filter meet_all(const ResiduatedLattice& lat, const std::vector<Filter>& v) {
  ElementSubset acc = lat.carrier();
  for (const auto& f : v) acc &= f.elements();
  return Filter::unchecked(acc);
}

bool comaximal(const ResiduatedLattice& lat, const Filter& f, const Filter& g) {
  return filter_join(lat, f, g) == whole_filter(lat);
}

bool is_antichain(const std::vector<Filter>& v) {
  for (const auto& a : v)
    for (const auto& b : v)
      if (a != b && a.is_subset_of(b)) return false;
  return true;
}

std::string pset(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (auto p : s) {
    out += (first ? "" : ",") + std::to_string(p);
    first = false;
  }
  return out + "}";
}

/// Subspace topology on the points in s, relabelled in increasing order.
FiniteSpace subspace(const FiniteSpace& space, PointSet s) {
  std::vector<std::size_t> keep(s.begin(), s.end());
  std::vector<PointLabel> labels;
  for (auto p : keep) labels.push_back(space.label(p));
  std::vector<PointSet> opens;
  for (auto u : space.opens()) {
    PointSet t;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (u.contains(static_cast<std::uint32_t>(keep[i]))) t.insert(static_cast<std::uint32_t>(i));
    opens.push_back(t);
  }
  return FiniteSpace::generated(std::move(labels), opens);
}

// Expected tables for the built-in algebras.
struct FixtureTable {
  const char* name;
  std::set<std::string> filters, max, min, alpha, pure;
  const char* beta;
  bool gelfand, mp;
};

const std::vector<FixtureTable>& fixture_tables() {
  static const std::vector<FixtureTable> t = {
      {"A6",
       {"{1}", "{a,b,d,1}", "{c,d,1}", "{d,1}", "{0,a,b,c,d,1}"},
       {"{a,b,d,1}", "{c,d,1}"},
       {"{1}"},
       {"{1}", "{0,a,b,c,d,1}"},
       {"{1}", "{0,a,b,c,d,1}"},
       "{0,1}",
       false,
       true},
      {"B6",
       {"{1}", "{a,c,1}", "{d,1}", "{0,a,b,c,d,1}"},
       {"{a,c,1}", "{d,1}"},
       {"{a,c,1}", "{d,1}"},
       {"{1}", "{a,c,1}", "{d,1}", "{0,a,b,c,d,1}"},
       {"{1}", "{a,c,1}", "{d,1}", "{0,a,b,c,d,1}"},
       "{0,a,d,1}",
       true,
       true},
      {"C6", {"{1}", "{0,a,b,c,d,1}"}, {"{1}"}, {"{1}"}, {"{1}", "{0,a,b,c,d,1}"}, {"{1}", "{0,a,b,c,d,1}"}, "{0,1}",
       true, true},
      {"A8",
       {"{1}", "{a,c,d,e,f,1}", "{c,e,1}", "{f,1}", "{0,a,b,c,d,e,f,1}"},
       {"{a,c,d,e,f,1}"},
       {"{c,e,1}", "{f,1}"},
       {"{1}", "{c,e,1}", "{f,1}", "{0,a,b,c,d,e,f,1}"},
       {"{1}", "{0,a,b,c,d,e,f,1}"},
       "{0,1}",
       true,
       false},
  };
  return t;
}

const FixtureTable& table_for(const std::string& name) {
  for (const auto& t : fixture_tables())
    if (name == t.name) return t;
  throw std::out_of_range(name);
}

/// Everything a property may need about one algebra, computed on first use.
class Ctx {
 public:
  explicit Ctx(ResiduatedLattice lat) : inst_(std::move(lat)) {}

  const Instance& inst() const { return inst_; }
  const ResiduatedLattice& L() const { return inst_.lattice(); }
  const FiltersLattice& fl() const { return inst_.filters(); }
  const std::vector<Filter>& filters() const { return inst_.filters().all(); }
  const std::vector<Filter>& spec() const { return inst_.spec(); }
  const std::vector<Filter>& max() const { return inst_.max(); }
  const std::vector<Filter>& min() const { return inst_.min(); }

  const std::vector<Filter>& pure() {
    if (!pure_) pure_ = pure_filters(inst_);
    return *pure_;
  }
  const PureSpectrum& spp() {
    if (!spp_) spp_ = pure_spectrum(inst_);
    return *spp_;
  }
  const ClassificationReport& cls() {
    if (!cls_) cls_ = classify(inst_);
    return *cls_;
  }
  const std::vector<Clause>& gelfand_clauses() {
    if (!gel_) gel_ = evaluate_gelfand_clauses(inst_);
    return *gel_;
  }
  const std::vector<Clause>& mp_clauses() {
    if (!mp_) mp_ = evaluate_mp_clauses(inst_);
    return *mp_;
  }
  const FiniteSpace& spec_space(HullFlavor f) {
    auto& slot = spaces_[static_cast<int>(f)];
    if (!slot) slot = hull_kernel_space(L(), spec(), f);
    return *slot;
  }
  const Filter& sig(const Filter& f) { return cached(sigma_, f, [&] { return sigma(inst_, f); }); }
  const Filter& rh(const Filter& f) { return cached(rho_, f, [&] { return rho(inst_, f); }); }
  Filter D(const Filter& p) const { return D_operator(L(), fl(), p); }
  Filter rad(const Filter& f) const { return radical(L(), fl(), f); }
  Filter join(const Filter& a, const Filter& b) const { return filter_join(L(), a, b); }
  bool is_pure(const Filter& f) { return contains(pure(), f); }
  ElementSubset beta() { return cls().boolean_center; }
  bool hyper() { return cls().hyperarchimedean.holds; }
  /// Primes contained in p.
  std::vector<Filter> below(const Filter& p) const {
    std::vector<Filter> out;
    for (const auto& q : spec())
      if (q.is_subset_of(p)) out.push_back(q);
    return out;
  }
  /// Maximal filters containing f.
  std::vector<Filter> max_over(const Filter& f) const {
    std::vector<Filter> out;
    for (const auto& m : max())
      if (f.is_subset_of(m)) out.push_back(m);
    return out;
  }

  /// Ideals of the underlying lattice grouped by their ω-filter.
  const std::map<std::uint32_t, std::vector<LatticeIdeal>>& ideals_by_omega() {
    if (!omega_) {
      omega_.emplace();
      for (const auto& i : enumerate_lattice_ideals(L())) (*omega_)[omega_filter(L(), i).elements().bits()].push_back(i);
    }
    return *omega_;
  }
  /// F ∨^ω G = ω(I_F ∨ I_G); nullopt if F or G is not an ω-filter or the
  /// value depends on the chosen ideals.
  std::optional<Filter> omega_join(const Filter& f, const Filter& g) {
    const auto& by = ideals_by_omega();
    auto fi = by.find(f.elements().bits()), gi = by.find(g.elements().bits());
    if (fi == by.end() || gi == by.end()) return std::nullopt;
    std::optional<Filter> out;
    for (const auto& i : fi->second)
      for (const auto& j : gi->second) {
        ElementSubset s;
        for (Element x : i.elements())
          for (Element y : j.elements()) s |= L().down(L().join(x, y));
        auto w = omega_filter(L(), LatticeIdeal::unchecked(s));
        if (out && *out != w) return std::nullopt;
        out = w;
      }
    return out;
  }

 private:
  template <typename Make>
  const Filter& cached(std::unordered_map<ElementSubset, Filter>& memo, const Filter& f, Make make) {
    auto it = memo.find(f.elements());
    if (it == memo.end()) it = memo.emplace(f.elements(), make()).first;
    return it->second;
  }

  Instance inst_;
  std::optional<std::vector<Filter>> pure_;
  std::optional<PureSpectrum> spp_;
  std::optional<ClassificationReport> cls_;
  std::optional<std::vector<Clause>> gel_, mp_;
  std::optional<FiniteSpace> spaces_[3];
  std::unordered_map<ElementSubset, Filter> sigma_, rho_;
  std::optional<std::map<std::uint32_t, std::vector<LatticeIdeal>>> omega_;
};

struct Outcome {
  Verdict verdict = Verdict::pass;
  std::string witness;
};

/// Collects the first counterexample.
class Probe {
 public:
  template <typename W>
  bool expect(bool ok, W&& witness) {
    if (!ok && !failed_) {
      failed_ = true;
      witness_ = witness();
    }
    return ok;
  }
  bool failed() const { return failed_; }
  Outcome outcome() const { return failed_ ? Outcome{Verdict::fail, witness_} : Outcome{}; }

 private:
  bool failed_ = false;
  std::string witness_;
};

Outcome na(std::string why) { return {Verdict::not_applicable, std::move(why)}; }

enum class Needs { nothing, gelfand, mp };

struct Property {
  PropertyInfo info;
  Needs needs;
  std::function<Outcome(Ctx&)> run;
};

const Clause& clause(const std::vector<Clause>& cs, const std::string& id) {
  for (const auto& c : cs)
    if (c.id == id) return c;
  throw std::logic_error("no clause " + id);
}

std::string yn(bool b) { return b ? "true" : "false"; }

/// A characterization: the flag and each listed clause agree.
Outcome equivalence(Ctx& c, bool flag, const char* flag_name, const std::vector<Clause>& cs,
                    std::initializer_list<const char*> ids) {
  Probe p;
  for (const char* id : ids) {
    const auto& cl = clause(cs, id);
    p.expect(cl.holds == flag, [&] {
      return std::string(flag_name) + "=" + yn(flag) + " but " + id + " (" + cl.statement + ") is " + yn(cl.holds) +
             (cl.witness.empty() ? "" : ": " + cl.witness);
    });
  }
  (void)c;
  return p.outcome();
}

Outcome implied(const std::vector<Clause>& cs, std::initializer_list<const char*> ids) {
  Probe p;
  for (const char* id : ids) {
    const auto& cl = clause(cs, id);
    p.expect(cl.holds, [&] { return std::string(id) + " (" + cl.statement + "): " + cl.witness; });
  }
  return p.outcome();
}

/// n/a unless the algebra is (isomorphic by equality to) a built-in fixture.
std::optional<std::string> matching_fixture(const Ctx& c) {
  for (const auto& name : fixture_names())
    if (c.L() == fixture(name)) return name;
  return std::nullopt;
}

Outcome example_tables(Ctx& c, const std::string& name) {
  auto fx = matching_fixture(c);
  if (!fx || *fx != name) return na("not the built-in algebra " + name);
  const auto& t = table_for(name);
  const auto& L = c.L();
  Probe p;
  auto cmp = [&](const char* what, const std::set<std::string>& want, const std::vector<Filter>& got) {
    auto g = rendered(L, got);
    p.expect(g == want, [&] { return std::string(what) + ": expected " + joined(want) + " got " + joined(g); });
  };
  cmp("filters", t.filters, c.filters());
  cmp("Max", t.max, c.max());
  cmp("Min", t.min, c.min());
  cmp("α-filters", t.alpha, enumerate_alpha(L, c.fl()));
  cmp("pure filters", t.pure, c.pure());
  return p.outcome();
}

// ------------------------------------------------------------ core suite

std::vector<Property> core_properties() {
  std::vector<Property> v;
  auto add = [&](const char* id, const char* statement, std::function<Outcome(Ctx&)> f) {
    v.push_back({{id, Suite::core, statement}, Needs::nothing, std::move(f)});
  };

  add("resproposition", "x⊙(y∨z) = (x⊙y)∨(x⊙z) and x∨(y⊙z) ≥ (x∨y)⊙(x∨z)", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (Element x = 0; x < L.size(); ++x)
      for (Element y = 0; y < L.size(); ++y)
        for (Element z = 0; z < L.size(); ++z) {
          auto w = [&] { return "x=" + L.element_name(x) + " y=" + L.element_name(y) + " z=" + L.element_name(z); };
          p.expect(L.prod(x, L.join(y, z)) == L.join(L.prod(x, y), L.prod(x, z)), w);
          p.expect(L.leq(L.prod(L.join(x, y), L.join(x, z)), L.join(x, L.prod(y, z))), w);
        }
    return p.outcome();
  });
  for (const char* name : {"A6", "B6", "C6", "A8"}) {
    static const std::map<std::string, const char*> ids = {
        {"A6", "exa6"}, {"B6", "exb6"}, {"C6", "exc6"}, {"A8", "exa8"}};
    std::string n = name;
    add(ids.at(n), "the built-in algebra validates and reproduces its filter, spectrum, α and pure tables",
        [n](Ctx& c) { return example_tables(c, n); });
  }
  add("compeleex", "Boolean centers of the built-in algebras", [](Ctx& c) {
    auto fx = matching_fixture(c);
    if (!fx) return na("not a built-in algebra");
    auto got = format_subset(c.L(), c.beta());
    const char* want = table_for(*fx).beta;
    Probe p;
    p.expect(got == want, [&] { return "β expected " + std::string(want) + " got " + got; });
    return p.outcome();
  });
  add("genfilprop", "𝔽(F,x) = {a | f⊙x^n ≤ a}; monotone in x; ∩ gives x∨y; ⋁ gives x⊙y", [](Ctx& c) {
    const auto& L = c.L();
    const auto& fl = c.fl();
    Probe p;
    for (std::size_t fi = 0; fi < fl.size(); ++fi) {
      const auto& f = fl[fi];
      std::vector<std::size_t> ext(L.size());
      for (Element x = 0; x < L.size(); ++x) {
        auto e = filter_extend(L, f, x);
        ext[x] = *fl.index_of(e);
        ElementSubset direct;
        for (Element a : f.elements())
          for (unsigned n = 1; n <= L.size(); ++n) direct |= L.up(L.prod(a, L.power(x, n)));
        p.expect(direct == e.elements(), [&] { return "𝔽(" + fs(L, f) + "," + L.element_name(x) + ") ≠ " + es(L, direct); });
      }
      for (Element x = 0; x < L.size(); ++x)
        for (Element y = 0; y < L.size(); ++y) {
          auto w = [&] { return "F=" + fs(L, f) + " x=" + L.element_name(x) + " y=" + L.element_name(y); };
          if (L.leq(x, y)) p.expect(fl[ext[y]].is_subset_of(fl[ext[x]]), w);
          p.expect(fl.meet(ext[x], ext[y]) == ext[L.join(x, y)], w);
          p.expect(fl.join(ext[x], ext[y]) == ext[L.prod(x, y)], w);
        }
    }
    return p.outcome();
  });
  add("intprimfilt", "𝔽(X) is the intersection of the primes containing X", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    auto check = [&](ElementSubset xs) {
      ElementSubset acc = L.carrier();
      for (const auto& q : c.spec())
        if (xs.is_subset_of(q.elements())) acc &= q.elements();
      p.expect(generated_filter(L, xs).elements() == acc, [&] { return "X=" + es(L, xs); });
    };
    for (Element x = 0; x < L.size(); ++x)
      for (Element y = x; y < L.size(); ++y) check(ElementSubset::of({x, y}));
    for (const auto& f : c.filters()) check(f.elements());
    return p.outcome();
  });
  add("filqou", "filters of A/F are the images of the filters containing F", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (const auto& f : c.filters()) {
      auto q = quotient(L, f);
      std::set<std::uint32_t> images;
      for (const auto& g : c.filters()) {
        if (!f.is_subset_of(g)) continue;
        auto im = q.image(g.elements());
        images.insert(im.bits());
        p.expect(q.preimage(im) == g.elements(), [&] { return "F=" + fs(L, f) + " G=" + fs(L, g) + " not saturated"; });
      }
      p.expect(bits_of(enumerate_filters(q.quotient).all()) == images, [&] { return "F=" + fs(L, f); });
    }
    return p.outcome();
  });
  add("canonflat", "π_F flat iff (G⋁F:a) ⊆ (G:a)⋁F for all G, a", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (const auto& f : c.filters()) {
      auto r = is_projection_flat(L, c.fl(), f);
      bool direct = true;
      for (const auto& g : c.filters()) {
        const auto gf = c.join(g, f);
        for (Element a = 0; a < L.size(); ++a) {
          ElementSubset ga;
          for (Element x = 0; x < L.size(); ++x)
            if (g.contains(L.join(x, a))) ga.insert(x);
          const auto rhs = generated_filter(L, ga | f.elements());
          for (Element x = 0; x < L.size(); ++x)
            if (gf.contains(L.join(x, a)) && !rhs.contains(x)) direct = false;
        }
      }
      p.expect(r.flat == direct, [&] { return "F=" + fs(L, f) + " flatness test disagrees with the definition"; });
      if (r.witness) {
        const auto& w = *r.witness;
        bool valid = c.join(w.g, f).contains(L.join(w.x, w.a)) &&
                     !filter_join(L, coannihilator(L, w.g, ElementSubset::single(w.a)), f).contains(w.x);
        p.expect(valid, [&] { return "F=" + fs(L, f) + " flatness witness does not re-verify"; });
      }
    }
    return p.outcome();
  });
  add("omegprop", "γ is a sublattice of Ω; D(p) = k𝒢(p) = k(𝒢(p)∩Min); p minimal iff p = D(p)", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    std::vector<Filter> gamma;
    for (Element x = 0; x < L.size(); ++x) gamma.push_back(annihilator(L, x));
    const auto omega = omega_filters(L);
    for (const auto& g : gamma) p.expect(contains(omega, g), [&] { return fs(L, g) + " is not an ω-filter"; });
    for (const auto& f : gamma)
      for (const auto& g : gamma) {
        auto w = [&] { return "coannulets " + fs(L, f) + ", " + fs(L, g); };
        p.expect(contains(gamma, intersection(f, g)), w);
        auto j = c.omega_join(f, g);
        p.expect(j && contains(gamma, *j), w);
      }
    for (const auto& q : c.spec()) {
      auto d = c.D(q);
      auto below = c.below(q);
      std::vector<Filter> below_min;
      for (const auto& b : below)
        if (contains(c.min(), b)) below_min.push_back(b);
      p.expect(d == meet_all(L, below) && d == meet_all(L, below_min), [&] { return "p=" + fs(L, q); });
      p.expect(contains(c.min(), q) == (d == q), [&] { return "p=" + fs(L, q) + " D(p)=" + fs(L, d); });
    }
    return p.outcome();
  });
  add("hulkerinstr", "Max_h and Min_d are compact", [](Ctx& c) {
    hull_kernel_space(c.L(), c.max(), HullFlavor::h);
    hull_kernel_space(c.L(), c.min(), HullFlavor::d);
    return Outcome{Verdict::pass, "trivially compact (finite)"};
  });
  add("opensd", "opens of Spec_d are the sets {p | p∩X ≠ ∅}", [](Ctx& c) {
    const auto& L = c.L();
    const auto& spec = c.spec();
    std::set<std::uint32_t> formed;
    for (std::uint32_t bits = 0; bits < (1U << L.size()); ++bits) {
      PointSet s;
      for (std::uint32_t i = 0; i < spec.size(); ++i)
        if (spec[i].elements().intersects(ElementSubset(bits))) s.insert(i);
      formed.insert(s.bits());
    }
    std::set<std::uint32_t> opens;
    for (auto u : c.spec_space(HullFlavor::d).opens()) opens.insert(u.bits());
    Probe p;
    p.expect(formed == opens, [&] {
      return std::to_string(opens.size()) + " opens against " + std::to_string(formed.size()) + " sets of the form";
    });
    return p.outcome();
  });
  add("closefalzai", "h-closed iff patch-closed and 𝒮-stable", [](Ctx& c) {
    const auto& h = c.spec_space(HullFlavor::h);
    const auto& patch = c.spec_space(HullFlavor::patch);
    Probe p;
    for (std::uint32_t bits = 0; bits < (1U << c.spec().size()); ++bits) {
      PointSet s(bits);
      bool stable = stability(c.spec(), s, StabilityMode::specialization).is_stable;
      p.expect(h.is_closed(s) == (patch.is_closed(s) && stable), [&] { return "points " + pset(s); });
    }
    return p.outcome();
  });
  add("mp", "every prime contains a minimal prime", [](Ctx& c) {
    Probe p;
    for (const auto& q : c.spec()) {
      bool found = std::any_of(c.min().begin(), c.min().end(), [&](const Filter& m) { return m.is_subset_of(q); });
      p.expect(found, [&] { return "p=" + fs(c.L(), q); });
    }
    return p.outcome();
  });
  add("1mineq", "a prime is minimal iff it contains exactly one of x, x^⊥ for each x", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (const auto& q : c.spec()) {
      bool exactly_one = true;
      for (Element x = 0; x < L.size(); ++x)
        if (q.contains(x) == annihilator(L, x).is_subset_of(q)) exactly_one = false;
      p.expect(contains(c.min(), q) == exactly_one, [&] { return "p=" + fs(L, q); });
    }
    return p.outcome();
  });
  add("boleleprop", "for e ∈ β: 𝔽(e) = ↑e, e⊙x = e∧x, ¬e is the complement of e and lies in β", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    const auto beta = c.beta();
    for (Element e : beta) {
      auto w = [&] { return "e=" + L.element_name(e); };
      p.expect(principal_filter(L, e).elements() == L.up(e), w);
      for (Element x = 0; x < L.size(); ++x) p.expect(L.prod(e, x) == L.meet(e, x), w);
      const Element ne = L.neg(e);
      p.expect(L.join(e, ne) == L.top() && L.meet(e, ne) == L.bottom() && beta.contains(ne) && L.neg(ne) == e, w);
    }
    return p.outcome();
  });
  add("direcindbeta", "directly indecomposable iff β = {0,1}", [](Ctx& c) {
    const auto& L = c.L();
    const auto& cls = c.cls();
    const bool trivial = c.beta() == ElementSubset::of({L.bottom(), L.top()});
    Probe p;
    p.expect(trivial == cls.directly_indecomposable.holds && trivial == (cls.direct_summands.size() == 2),
             [&] { return "β=" + es(L, c.beta()) + " summands " + listing(L, cls.direct_summands); });
    return p.outcome();
  });
  add("b9fxpro", "F ⋁ F^⊥ = A iff F = 𝔽(e) for some e ∈ β", [](Ctx& c) {
    const auto& L = c.L();
    std::vector<Filter> from_beta;
    for (Element e : c.beta()) from_beta.push_back(principal_filter(L, e));
    Probe p;
    for (const auto& f : c.filters()) {
      bool summand = c.join(f, annihilator(L, f.elements())) == whole_filter(L);
      p.expect(summand == contains(from_beta, f), [&] { return "F=" + fs(L, f); });
    }
    return p.outcome();
  });
  add("hperarchpri", "complemented filters = principal filters iff 𝔽(β) = principal filters iff hyperarchimedean",
      [](Ctx& c) {
        const auto& L = c.L();
        std::vector<Filter> principal, from_beta, complemented;
        for (Element x = 0; x < L.size(); ++x) principal.push_back(principal_filter(L, x));
        for (Element e : c.beta()) from_beta.push_back(principal_filter(L, e));
        for (const auto& f : c.filters())
          for (const auto& g : c.filters())
            if (intersection(f, g) == unit_filter(L) && c.join(f, g) == whole_filter(L)) {
              complemented.push_back(f);
              break;
            }
        const bool one = bits_of(complemented) == bits_of(principal);
        const bool two = bits_of(from_beta) == bits_of(principal);
        const bool three = is_antichain(c.spec());
        Probe p;
        p.expect(one == two && two == three, [&] {
          return "complemented=principal " + yn(one) + ", 𝔽(β)=principal " + yn(two) + ", Spec antichain " + yn(three);
        });
        return p.outcome();
      });
  return v;
}

// ---------------------------------------------------------- purity suite

std::vector<Property> purity_properties() {
  std::vector<Property> v;
  auto add = [&](const char* id, const char* statement, std::function<Outcome(Ctx&)> f) {
    v.push_back({{id, Suite::purity, statement}, Needs::nothing, std::move(f)});
  };

  add("sigfildef", "σ(F) = k𝒢h(F)", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (const auto& f : c.filters()) {
      std::vector<Filter> gen;
      for (const auto& q : c.spec())
        if (f.is_subset_of(q))
          for (const auto& b : c.below(q)) gen.push_back(b);
      p.expect(meet_all(L, gen) == c.sig(f), [&] { return "F=" + fs(L, f); });
    }
    return p.outcome();
  });
  add("sigmafequiv", "the six descriptions of σ(F) agree", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (const auto& f : c.filters())
      for (int k : kSigmaFormulas) {
        auto got = sigma_formula(c.inst(), f, k);
        p.expect(got == c.sig(f).elements(), [&] {
          return "F=" + fs(L, f) + " formula " + std::to_string(k) + " gives " + es(L, got) + " not " + fs(L, c.sig(f));
        });
      }
    return p.outcome();
  });
  add("sigmapro", "σ(F) is a filter; σ is monotone; σ(p) ⊆ D(p); σ(m) = D(m)", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (const auto& f : c.filters()) {
      p.expect(is_filter(L, c.sig(f).elements()), [&] { return "σ(" + fs(L, f) + ") is not a filter"; });
      for (const auto& g : c.filters())
        if (f.is_subset_of(g))
          p.expect(c.sig(f).is_subset_of(c.sig(g)), [&] { return "F=" + fs(L, f) + " G=" + fs(L, g); });
    }
    for (const auto& q : c.spec()) p.expect(c.sig(q).is_subset_of(c.D(q)), [&] { return "p=" + fs(L, q); });
    for (const auto& m : c.max()) p.expect(c.sig(m) == c.D(m), [&] { return "m=" + fs(L, m); });
    return p.outcome();
  });
  add("primesigmad", "σ(F) ⊆ F; σ(F∩G) = σ(F)∩σ(G); σ(F)⋁σ(G) ⊆ σ(F⋁G)", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (const auto& f : c.filters()) {
      p.expect(c.sig(f).is_subset_of(f), [&] { return "F=" + fs(L, f); });
      for (const auto& g : c.filters()) {
        auto w = [&] { return "F=" + fs(L, f) + " G=" + fs(L, g); };
        p.expect(c.sig(intersection(f, g)) == intersection(c.sig(f), c.sig(g)), w);
        p.expect(c.join(c.sig(f), c.sig(g)).is_subset_of(c.sig(c.join(f, g))), w);
      }
    }
    return p.outcome();
  });
  add("puredef", "F is pure iff σ(F) = F; {1} and A are pure", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (const auto& f : c.filters())
      p.expect(c.is_pure(f) == (c.sig(f) == f) && is_pure(c.inst(), f) == c.is_pure(f), [&] { return "F=" + fs(L, f); });
    p.expect(c.is_pure(unit_filter(L)) && c.is_pure(whole_filter(L)), [] { return std::string("{1} or A not pure"); });
    return p.outcome();
  });
  add("fbetasig", "direct summands are pure", [](Ctx& c) {
    Probe p;
    for (const auto& f : c.cls().direct_summands)
      p.expect(c.is_pure(f), [&] { return "summand " + fs(c.L(), f) + " is not pure"; });
    return p.outcome();
  });
  add("flatpurethe", "π_F is flat iff F is pure", [](Ctx& c) {
    Probe p;
    for (const auto& f : c.filters())
      p.expect(is_projection_flat(c.L(), c.fl(), f).flat == c.is_pure(f), [&] { return "F=" + fs(c.L(), f); });
    return p.outcome();
  });
  add("pureequalsupport", "F is pure iff d(F) = Supp(F); then F = {a | d(a) ⊆ Supp(F)}", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (const auto& f : c.filters()) {
      const auto supp = support(L, c.spec(), f);
      const auto d = dual_hull(c.spec(), f.elements());
      p.expect((d == supp) == c.is_pure(f), [&] { return "F=" + fs(L, f) + " d(F)=" + pset(d) + " Supp=" + pset(supp); });
      if (c.is_pure(f)) {
        ElementSubset back;
        for (Element a = 0; a < L.size(); ++a)
          if (dual_hull(c.spec(), ElementSubset::single(a)).is_subset_of(supp)) back.insert(a);
        p.expect(back == f.elements(), [&] { return "F=" + fs(L, f) + " recovered " + es(L, back); });
      }
    }
    return p.outcome();
  });
  add("purestable", "F is pure iff d(F) is 𝒮-stable", [](Ctx& c) {
    Probe p;
    for (const auto& f : c.filters()) {
      bool stable = stability(c.spec(), dual_hull(c.spec(), f.elements()), StabilityMode::specialization).is_stable;
      p.expect(stable == c.is_pure(f), [&] { return "F=" + fs(c.L(), f); });
    }
    return p.outcome();
  });
  add("sigmfiltlatt", "σ(A) is a frame under ∩, ⋁ and under ∩, ∨^α, and a lattice under ∩, ∨^ω", [](Ctx& c) {
    const auto& L = c.L();
    const auto& pure = c.pure();
    const auto alpha = enumerate_alpha(L, c.fl());
    Probe p;
    for (const auto& f : pure) {
      p.expect(contains(alpha, f), [&] { return fs(L, f) + " is pure but not an α-filter"; });
      for (const auto& g : pure) {
        auto w = [&] { return "F=" + fs(L, f) + " G=" + fs(L, g); };
        const auto j = c.join(f, g);
        p.expect(c.is_pure(intersection(f, g)) && c.is_pure(j), w);
        p.expect(alpha_closure(L, f.elements() | g.elements()) == j, w);
        auto oj = c.omega_join(f, g);
        p.expect(oj && *oj == j, w);
        for (const auto& h : pure)
          p.expect(intersection(f, c.join(g, h)) == c.join(intersection(f, g), intersection(f, h)),
                   [&] { return w() + " H=" + fs(L, h); });
      }
    }
    return p.outcome();
  });
  add("sigmahyper", "principal filters pure iff hyperarchimedean iff every filter pure", [](Ctx& c) {
    const auto& L = c.L();
    bool principal = true;
    for (Element x = 0; x < L.size(); ++x) principal = principal && c.is_pure(principal_filter(L, x));
    const bool all = c.pure().size() == c.filters().size();
    const bool hyper = is_antichain(c.spec());
    Probe p;
    p.expect(principal == hyper && all == hyper, [&] {
      return "principal pure " + yn(principal) + ", all pure " + yn(all) + ", Spec antichain " + yn(hyper);
    });
    return p.outcome();
  });
  add("huldtopohyper", "hull-kernel topology = 𝒟-topology on Spec iff hyperarchimedean", [](Ctx& c) {
    const bool same = d_topology(c.inst()) == c.spec_space(HullFlavor::h);
    Probe p;
    p.expect(same == c.hyper(), [&] { return "topologies equal " + yn(same) + ", hyperarchimedean " + yn(c.hyper()); });
    return p.outcome();
  });
  add("rfilter", "properties of ρ: inside σ, largest pure subfilter, interior operator, ∩, ⋁, recovery formulas",
      [](Ctx& c) {
        const auto& L = c.L();
        Probe p;
        for (const auto& f : c.filters()) {
          auto w = [&] { return "F=" + fs(L, f); };
          const auto& r = c.rh(f);
          p.expect(r.is_subset_of(c.sig(f)), w);
          for (const auto& g : c.pure())
            if (g.is_subset_of(f)) p.expect(g.is_subset_of(r), w);
          p.expect(c.is_pure(r) && r.is_subset_of(f) && c.rh(r) == r, w);
          p.expect((r == f) == c.is_pure(f), w);
          for (const auto& g : c.filters()) {
            auto w2 = [&] { return w() + " G=" + fs(L, g); };
            if (f.is_subset_of(g)) p.expect(r.is_subset_of(c.rh(g)), w2);
            p.expect(c.rh(intersection(f, g)) == intersection(r, c.rh(g)), w2);
            p.expect(c.join(r, c.rh(g)).is_subset_of(c.rh(c.join(f, g))), w2);
          }
          if (c.is_pure(f)) {
            std::vector<Filter> parts;
            for (const auto& m : c.max_over(f)) parts.push_back(c.rh(m));
            p.expect(meet_all(L, parts) == f, [&] { return w() + " ⋂ρ(m) over h_M(F)"; });
            p.expect(c.rh(c.rad(f)) == f, [&] { return w() + " ρ(Rad F)"; });
          }
        }
        for (const auto& q : c.spec()) p.expect(c.rh(q) == c.rh(c.D(q)), [&] { return "p=" + fs(L, q); });
        return p.outcome();
      });
  add("comxpureprime", "distinct pure primes are comaximal", [](Ctx& c) {
    Probe p;
    std::vector<Filter> pp;
    for (const auto& q : c.spec())
      if (c.is_pure(q)) pp.push_back(q);
    for (const auto& a : pp)
      for (const auto& b : pp)
        if (a != b) p.expect(comaximal(c.L(), a, b), [&] { return fs(c.L(), a) + " and " + fs(c.L(), b); });
    return p.outcome();
  });
  add("prinpuregen", "a principal pure filter is generated by a complemented element", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (Element x = 0; x < L.size(); ++x) {
      auto f = principal_filter(L, x);
      if (!c.is_pure(f)) continue;
      bool found = false;
      for (Element e : c.beta()) found = found || principal_filter(L, e) == f;
      p.expect(found, [&] { return "𝔽(" + L.element_name(x) + ")=" + fs(L, f); });
    }
    return p.outcome();
  });
  // For non-pure F the unit filter π_F(F) of A/F is pure while F is not.
  add("purefilqou", "σ(A/F) = {π_F(H) | F ⊆ H pure} for pure F", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (const auto& f : c.pure()) {
      auto q = quotient(L, f);
      std::set<std::uint32_t> images;
      for (const auto& h : c.pure())
        if (f.is_subset_of(h)) images.insert(q.image(h.elements()).bits());
      Instance qi(q.quotient);
      p.expect(bits_of(pure_filters(qi)) == images,
               [&] { return "F=" + fs(L, f) + " σ(A/F)=" + listing(q.quotient, pure_filters(qi)); });
    }
    return p.outcome();
  });
  return v;
}

// ------------------------------------------------------------- spp suite

std::vector<Property> spp_properties() {
  std::vector<Property> v;
  auto add = [&](const char* id, const char* statement, std::function<Outcome(Ctx&)> f) {
    v.push_back({{id, Suite::spp, statement}, Needs::nothing, std::move(f)});
  };

  add("r1filter", "Max(σ) ⊆ ρ(Max); ρ(Spec) ⊆ Spp; pure F = ⋂{p ∈ Spp | F ⊆ p}", [](Ctx& c) {
    const auto& L = c.L();
    const auto& spp = c.spp();
    Probe p;
    std::vector<Filter> rho_max;
    for (const auto& m : c.max()) rho_max.push_back(c.rh(m));
    for (const auto& f : c.pure()) {
      if (!is_proper(L, f)) continue;
      bool maximal = std::none_of(c.pure().begin(), c.pure().end(),
                                  [&](const Filter& g) { return is_proper(L, g) && g != f && f.is_subset_of(g); });
      if (maximal) p.expect(contains(rho_max, f), [&] { return "purely-maximal " + fs(L, f) + " not in ρ(Max)"; });
    }
    for (const auto& q : c.spec())
      p.expect(contains(spp.points, c.rh(q)), [&] { return "ρ(" + fs(L, q) + ") not purely-prime"; });
    for (const auto& f : c.pure()) {
      std::vector<Filter> over;
      for (const auto& q : spp.points)
        if (f.is_subset_of(q)) over.push_back(q);
      p.expect(meet_all(L, over) == f, [&] { return "F=" + fs(L, f); });
    }
    return p.outcome();
  });
  add("preqpropu", "a proper pure p is purely-prime iff F1∩F2 ⊆ p forces F1 ⊆ p or F2 ⊆ p over pure F1, F2",
      [](Ctx& c) {
        const auto& L = c.L();
        Probe p;
        for (const auto& q : c.pure()) {
          if (!is_proper(L, q)) continue;
          bool prime_like = true;
          for (const auto& a : c.pure())
            for (const auto& b : c.pure())
              if (intersection(a, b).is_subset_of(q) && !a.is_subset_of(q) && !b.is_subset_of(q)) prime_like = false;
          p.expect(prime_like == contains(c.spp().points, q), [&] { return "p=" + fs(L, q); });
        }
        return p.outcome();
      });
  add("comppurpri", "a purely-prime filter contains exactly one of e, ¬e for e ∈ β", [](Ctx& c) {
    const auto& L = c.L();
    Probe p;
    for (const auto& q : c.spp().points)
      for (Element e : c.beta())
        p.expect(q.contains(e) != q.contains(L.neg(e)), [&] { return "p=" + fs(L, q) + " e=" + L.element_name(e); });
    return p.outcome();
  });
  add("minpurfil", "every purely-prime filter contains a purely-minimal one", [](Ctx& c) {
    const auto& spp = c.spp();
    Probe p;
    for (std::size_t i = 0; i < spp.points.size(); ++i) {
      bool found = false;
      for (std::size_t j = 0; j < spp.points.size(); ++j)
        found = found || (spp.purely_minimal[j] && spp.points[j].is_subset_of(spp.points[i]));
      p.expect(found, [&] { return "p=" + fs(c.L(), spp.points[i]); });
    }
    return p.outcome();
  });
  add("purpriprithe", "purely-maximal principal iff purely-prime principal iff pure principal", [](Ctx& c) {
    const auto& L = c.L();
    auto principal = [&](const Filter& f) {
      for (Element x = 0; x < L.size(); ++x)
        if (principal_filter(L, x) == f) return true;
      return false;
    };
    const auto& spp = c.spp();
    bool one = true, two = true, three = true;
    for (std::size_t i = 0; i < spp.points.size(); ++i) {
      if (spp.purely_maximal[i]) one = one && principal(spp.points[i]);
      two = two && principal(spp.points[i]);
    }
    for (const auto& f : c.pure()) three = three && principal(f);
    Probe p;
    p.expect(one == two && two == three, [&] { return "clauses " + yn(one) + "/" + yn(two) + "/" + yn(three); });
    return p.outcome();
  });
  add("sigmad", "F ↦ d_κ(F) is a lattice isomorphism from σ(A) onto its image", [](Ctx& c) {
    const auto& L = c.L();
    const auto& spp = c.spp();
    Probe p;
    for (const auto& f : c.pure())
      for (const auto& g : c.pure()) {
        auto w = [&] { return "F=" + fs(L, f) + " G=" + fs(L, g); };
        p.expect((f == g) == (spp.d_kappa(f) == spp.d_kappa(g)), w);
        p.expect(spp.d_kappa(intersection(f, g)) == (spp.d_kappa(f) & spp.d_kappa(g)), w);
        p.expect(spp.d_kappa(c.join(f, g)) == (spp.d_kappa(f) | spp.d_kappa(g)), w);
      }
    return p.outcome();
  });
  add("puresppcomp", "Spp is compact", [](Ctx& c) {
    c.spp();
    return Outcome{Verdict::pass, "trivially compact (finite)"};
  });
  add("closurofp", "cl_κ(p) = h_κ(p)", [](Ctx& c) {
    const auto& spp = c.spp();
    Probe p;
    for (std::size_t i = 0; i < spp.points.size(); ++i)
      p.expect(spp.space.point_closure(i) == spp.h_kappa(spp.points[i]), [&] { return "p=" + fs(c.L(), spp.points[i]); });
    return p.outcome();
  });
  add("t0spppacecon", "Spp is T0", [](Ctx& c) {
    Probe p;
    p.expect(separation_report(c.spp().space).t0, [] { return std::string("two points share all neighbourhoods"); });
    return p.outcome();
  });
  add("t1spaspp", "Spp is T1 iff its points form an antichain", [](Ctx& c) {
    const bool t1 = separation_report(c.spp().space).t1;
    const bool anti = is_antichain(c.spp().points);
    Probe p;
    p.expect(t1 == anti, [&] { return "T1 " + yn(t1) + ", antichain " + yn(anti); });
    return p.outcome();
  });
  add("Soberspec", "Spp is sober", [](Ctx& c) {
    Probe p;
    p.expect(separation_report(c.spp().space).sober, [] { return std::string("an irreducible closed set lacks a unique generic point"); });
    return p.outcome();
  });
  add("irrsppdclosub", "irreducible closed subsets of Spp are the sets h_κ(p)", [](Ctx& c) {
    const auto& spp = c.spp();
    std::set<std::uint32_t> irr, hk;
    for (const auto& ic : irreducible_closed_sets(spp.space)) irr.insert(ic.set.bits());
    for (const auto& q : spp.points) hk.insert(spp.h_kappa(q).bits());
    Probe p;
    p.expect(irr == hk, [&] { return std::to_string(irr.size()) + " irreducible closed sets, " + std::to_string(hk.size()) + " hulls"; });
    return p.outcome();
  });
  add("spsppconti", "the pure part map Spec_h → Spp is continuous", [](Ctx& c) {
    Probe p;
    auto m = pure_part_map(c.inst());
    p.expect(map_analysis(m.view()).continuous, [] { return std::string("a preimage of an open set is not open"); });
    return p.outcome();
  });
  add("grothfundres", "e ↦ d_κ(𝔽(e)) is a bijection from β onto Clop(Spp)", [](Ctx& c) {
    Probe p;
    auto pairs = grothendieck_check(c.inst());
    const auto clop = clopens(c.spp().space);
    std::set<std::uint32_t> hit;
    for (const auto& g : pairs) hit.insert(g.clopen.bits());
    p.expect(pairs.size() == c.beta().size() && hit.size() == clop.size() && pairs.size() == clop.size(), [&] {
      return "|β|=" + std::to_string(c.beta().size()) + " |Clop|=" + std::to_string(clop.size());
    });
    return p.outcome();
  });
  add("sppconn", "directly indecomposable iff Spp connected", [](Ctx& c) {
    const bool di = c.cls().directly_indecomposable.holds;
    const bool conn = separation_report(c.spp().space).connected;
    Probe p;
    p.expect(di == conn, [&] { return "indecomposable " + yn(di) + ", connected " + yn(conn); });
    return p.outcome();
  });
  add("qoepuruspec", "for pure F, π_F induces a homeomorphism Spp(A/F) ≅ h_κ(F)", [](Ctx& c) {
    const auto& L = c.L();
    const auto& spp = c.spp();
    Probe p;
    for (const auto& f : c.pure()) {
      auto q = quotient(L, f);
      if (q.degenerate) continue;
      auto w = [&] { return "F=" + fs(L, f); };
      Instance qi(q.quotient);
      auto qspp = pure_spectrum(qi);
      const auto hk = spp.h_kappa(f);
      auto target = subspace(spp.space, hk);
      OwnedPointMap m{qspp.space, target, {}};
      bool landed = true;
      for (const auto& pt : qspp.points) {
        auto pre = Filter::unchecked(q.preimage(pt.elements()));
        auto idx = target.find(pre);
        if (!idx) {
          landed = false;
          break;
        }
        m.image.push_back(*idx);
      }
      if (!p.expect(landed, [&] { return w() + ": preimage leaves h_κ(F)"; })) continue;
      p.expect(map_analysis(m.view()).homeomorphism, [&] { return w() + ": not a homeomorphism"; });
    }
    return p.outcome();
  });
  return v;
}

// ------------------------------------------------- Gelfand and mp suites

Witness gelfand_witness(Ctx& c) { return c.cls().gelfand.witness; }

/// A prime below two maximal filters (or above two minimal primes).
std::optional<std::string> reverify_split(Ctx& c, const Witness& w, bool above) {
  const auto& L = c.L();
  if (w.filters.size() < 3) return "witness names fewer than three filters";
  const auto& p = w.filters[0];
  if (!is_prime(L, p)) return fs(L, p) + " is not prime";
  for (std::size_t i = 1; i < w.filters.size(); ++i) {
    const auto& m = w.filters[i];
    if (above && (!contains(c.max(), m) || !p.is_subset_of(m))) return fs(L, m) + " is not a maximal filter over p";
    if (!above && (!contains(c.min(), m) || !m.is_subset_of(p))) return fs(L, m) + " is not a minimal prime under p";
  }
  return std::nullopt;
}

std::vector<Property> gelfand_properties() {
  std::vector<Property> v;
  auto add = [&](const char* id, const char* statement, Needs needs, std::function<Outcome(Ctx&)> f) {
    v.push_back({{id, Suite::gelfand, statement}, needs, std::move(f)});
  };
  auto eq = [](std::initializer_list<const char*> ids) {
    std::vector<const char*> list(ids);
    return [list](Ctx& c) {
      Probe p;
      for (const char* id : list) {
        auto o = equivalence(c, c.cls().gelfand.holds, "Gelfand", c.gelfand_clauses(), {id});
        p.expect(o.verdict == Verdict::pass, [&] { return o.witness; });
      }
      return p.outcome();
    };
  };
  auto imp = [](std::initializer_list<const char*> ids) {
    std::vector<const char*> list(ids);
    return [list](Ctx& c) {
      Probe p;
      for (const char* id : list) {
        auto o = implied(c.gelfand_clauses(), {id});
        p.expect(o.verdict == Verdict::pass, [&] { return o.witness; });
      }
      return p.outcome();
    };
  };

  add("quanorexas", "A6 is not Gelfand; B6, C6, A8 are", Needs::nothing, [](Ctx& c) {
    auto fx = matching_fixture(c);
    if (!fx) return na("not a built-in algebra");
    const bool want = table_for(*fx).gelfand;
    Probe p;
    p.expect(c.cls().gelfand.holds == want, [&] { return *fx + " Gelfand=" + yn(c.cls().gelfand.holds); });
    if (!c.cls().gelfand.holds) {
      auto bad = reverify_split(c, gelfand_witness(c), true);
      p.expect(!bad, [&] { return "witness does not re-verify: " + *bad; });
    }
    return p.outcome();
  });
  add("pmprop", "Gelfand iff D(m), D(n) comaximal for distinct maximal m, n iff F⋁m = A implies F⋁D(m) = A",
      Needs::nothing, eq({"pmprop3", "pmprop7"}));
  add("gelnor", "Gelfand iff Max_h is a retract of Spec_h", Needs::nothing, eq({"retract"}));
  add("equgelchaunit", "Gelfand iff σ(F) ⊆ m ⇒ F ⊆ m iff h_M(F) = h_M(σ(F)) iff Rad(F) = Rad(σ(F))", Needs::nothing,
      [](Ctx& c) {
        const auto& L = c.L();
        bool two = true, four = true;
        for (const auto& f : c.filters()) {
          four = four && c.rad(f) == c.rad(c.sig(f));
          for (const auto& m : c.max()) two = two && (!c.sig(f).is_subset_of(m) || f.is_subset_of(m));
        }
        const bool g = c.cls().gelfand.holds;
        auto o = equivalence(c, g, "Gelfand", c.gelfand_clauses(), {"equgelchaunit"});
        Probe p;
        p.expect(o.verdict == Verdict::pass, [&] { return o.witness; });
        p.expect(two == g && four == g, [&] { return "Gelfand=" + yn(g) + " clause(2)=" + yn(two) + " clause(4)=" + yn(four); });
        (void)L;
        return p.outcome();
      });
  add("equgelchapure",
      "Gelfand iff ρ(F) ⊆ m ⇒ F ⊆ m iff h_M(F) = h_M(ρ(F)) iff ρ(m), ρ(n) comaximal; (ρ, Rad) adjoint when Gelfand",
      Needs::nothing, [](Ctx& c) {
        const auto& L = c.L();
        const bool g = c.cls().gelfand.holds;
        bool three = true, seven = true;
        for (const auto& f : c.filters())
          three = three && hull(c.max(), f.elements()) == hull(c.max(), c.rh(f).elements());
        for (const auto& m : c.max())
          for (const auto& n : c.max())
            if (m != n) seven = seven && comaximal(L, c.rh(m), c.rh(n));
        Probe p;
        auto o = equivalence(c, g, "Gelfand", c.gelfand_clauses(), {"equgelchapure"});
        p.expect(o.verdict == Verdict::pass, [&] { return o.witness; });
        p.expect(three == g && seven == g, [&] { return "Gelfand=" + yn(g) + " clause(3)=" + yn(three) + " clause(7)=" + yn(seven); });
        if (g) {
          auto adj = implied(c.gelfand_clauses(), {"rhoradgel"});
          p.expect(adj.verdict == Verdict::pass, [&] { return adj.witness; });
        }
        return p.outcome();
      });
  add("rhosigmanorg", "Gelfand ⇒ ρ(F) = σ(F)", Needs::gelfand, imp({"rhosigmanorg"}));
  add("gelfmaxpure", "Gelfand ⇒ Spp = Max(σ) = ρ(Max)", Needs::gelfand, imp({"gelfmaxpure"}));
  add("gelspphau", "Gelfand ⇒ Spp Hausdorff", Needs::gelfand, imp({"gelspphau"}));
  add("sppgelfch", "Gelfand iff ρ_m: Max_h → Spp is a homeomorphism", Needs::nothing, eq({"sppgelfch"}));
  add("gelpurefcl", "Gelfand ⇒ pure filters are ⋂{D(m) | m ∈ Max ∩ C}, C h-closed", Needs::gelfand, imp({"gelpurefcl"}));
  add("gelfhulldmin", "Gelfand iff hull-kernel and 𝒟-topology coincide on Max", Needs::nothing, eq({"gelfhulldmin"}));
  return v;
}

std::vector<Property> mp_properties() {
  std::vector<Property> v;
  auto add = [&](const char* id, const char* statement, Needs needs, std::function<Outcome(Ctx&)> f) {
    v.push_back({{id, Suite::mp, statement}, needs, std::move(f)});
  };
  auto eq = [](std::initializer_list<const char*> ids) {
    std::vector<const char*> list(ids);
    return [list](Ctx& c) {
      Probe p;
      for (const char* id : list) {
        auto o = equivalence(c, c.cls().mp.holds, "mp", c.mp_clauses(), {id});
        p.expect(o.verdict == Verdict::pass, [&] { return o.witness; });
      }
      return p.outcome();
    };
  };
  auto imp = [](std::initializer_list<const char*> ids) {
    std::vector<const char*> list(ids);
    return [list](Ctx& c) {
      Probe p;
      for (const char* id : list) {
        auto o = implied(c.mp_clauses(), {id});
        p.expect(o.verdict == Verdict::pass, [&] { return o.witness; });
      }
      return p.outcome();
    };
  };

  add("quanorempxas", "A6, B6, C6 are mp; A8 is not", Needs::nothing, [](Ctx& c) {
    auto fx = matching_fixture(c);
    if (!fx) return na("not a built-in algebra");
    const bool want = table_for(*fx).mp;
    Probe p;
    p.expect(c.cls().mp.holds == want, [&] { return *fx + " mp=" + yn(c.cls().mp.holds); });
    if (!c.cls().mp.holds) {
      auto bad = reverify_split(c, c.cls().mp.witness, false);
      p.expect(!bad, [&] { return "witness does not re-verify: " + *bad; });
    }
    return p.outcome();
  });
  add("noco", "mp iff minimal primes pairwise comaximal iff D(m) minimal prime iff x∨y = 1 ⇒ x^⊥⋁y^⊥ = A",
      Needs::nothing, eq({"noco1", "noco4", "noco5"}));
  // A finite Min_d is discrete, so only this direction can carry content.
  add("mpmpropd", "mp ⇒ Min_d Hausdorff", Needs::mp, imp({"mpmpropd"}));
  add("norgammsig", "mp iff Ω ⊆ σ iff γ ⊆ σ", Needs::nothing, [](Ctx& c) {
    const auto& L = c.L();
    bool omega = true, gamma = true;
    for (const auto& f : omega_filters(L)) omega = omega && c.is_pure(f);
    for (Element x = 0; x < L.size(); ++x) gamma = gamma && c.is_pure(annihilator(L, x));
    const bool mp = c.cls().mp.holds;
    Probe p;
    p.expect(omega == mp && gamma == mp, [&] { return "mp=" + yn(mp) + " Ω⊆σ " + yn(omega) + " γ⊆σ " + yn(gamma); });
    return p.outcome();
  });
  // D(m) pure for every maximal m does not force mp (A8: D(m) = {1}).
  add("norgammsige", "mp iff D(p) pure for primes iff Min ⊆ σ; mp ⇒ D(m) pure for maximal m", Needs::nothing,
      [](Ctx& c) {
        bool primes = true, maxes = true, mins = true;
        for (const auto& q : c.spec()) primes = primes && c.is_pure(c.D(q));
        for (const auto& m : c.max()) maxes = maxes && c.is_pure(c.D(m));
        for (const auto& m : c.min()) mins = mins && c.is_pure(m);
        const bool mp = c.cls().mp.holds;
        Probe p;
        p.expect(primes == mp && mins == mp && (!mp || maxes),
                 [&] { return "mp=" + yn(mp) + " clauses " + yn(primes) + "/" + yn(maxes) + "/" + yn(mins); });
        return p.outcome();
      });
  add("normpurprimxa", "mp iff Min = Max(σ)", Needs::nothing, eq({"normpurprimxa"}));
  add("mp2minspp", "mp iff Min = Spp", Needs::nothing, eq({"mp2minspp"}));
  add("mpminspp", "mp ⇒ Spp ⊆ Max(σ)", Needs::mp, imp({"mpminspp"}));
  add("equmpflatmin", "mp iff the identity Spp → Min_d is a homeomorphism", Needs::nothing, eq({"equmpflatmin"}));
  add("mpspphau", "mp ⇒ Spp Hausdorff", Needs::mp, imp({"mpspphau"}));
  add("pureinterd", "mp ⇒ F = kh_m(F) for proper pure F", Needs::mp, imp({"pureinterd"}));
  add("mppurefcl", "mp ⇒ pure filters are ⋂(Min ∩ C) for d-closed C, equivalently ⋂{ρ(m) | m ∈ h_M(F)}", Needs::mp,
      imp({"mppurefcl", "mppure"}));
  add("mppureco1", "mp ⇒ a^⊥ ∩ F_a = {1}", Needs::mp, imp({"mppureco1"}));
  add("mppu1re", "mp ⇒ m = ⋁_{a∈m} F_a for minimal primes m", Needs::mp, imp({"mppu1re"}));
  add("minspprick", "mp ⇒ Min_h ≅ Spp (Min_h is compact at finite size)", Needs::mp, imp({"minspprick"}));
  return v;
}

const std::vector<Property>& registry() {
  static const std::vector<Property> all = [] {
    std::vector<Property> v;
    for (auto part : {core_properties(), purity_properties(), spp_properties(), gelfand_properties(), mp_properties()})
      for (auto& p : part) v.push_back(std::move(p));
    return v;
  }();
  return all;
}

bool selected(Suite prop, Suite wanted) { return wanted == Suite::all || prop == wanted; }

}  // namespace

const std::vector<PropertyInfo>& property_registry() {
  static const std::vector<PropertyInfo> infos = [] {
    std::vector<PropertyInfo> v;
    for (const auto& p : registry()) v.push_back(p.info);
    return v;
  }();
  return infos;
}

const std::vector<std::string>& property_manifest() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    std::istringstream in(detail::property_manifest_text());
    std::string line;
    while (std::getline(in, line)) {
      auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      auto e = line.find_last_not_of(" \t\r");
      v.push_back(line.substr(b, e - b + 1));
    }
    return v;
  }();
  return ids;
}

std::string InventoryResult::describe() const {
  if (ok()) return "inventory ok";
  std::string out = "property inventory mismatch:";
  auto part = [&](const char* what, const std::vector<std::string>& ids) {
    if (ids.empty()) return;
    out += std::string(" ") + what + " [";
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " " : "") + ids[i];
    out += "]";
  };
  part("missing", missing);
  part("extra", extra);
  part("duplicate", duplicates);
  return out;
}

InventoryResult inventory_check() {
  InventoryResult r;
  std::set<std::string> manifest(property_manifest().begin(), property_manifest().end());
  std::set<std::string> seen;
  for (const auto& p : property_registry()) {
    if (!seen.insert(p.id).second) r.duplicates.push_back(p.id);
    if (!manifest.count(p.id)) r.extra.push_back(p.id);
  }
  for (const auto& id : manifest)
    if (!seen.count(id)) r.missing.push_back(id);
  return r;
}

namespace {

InstanceVerdicts run_one(const ResiduatedLattice& lat, Suite suite) {
  InstanceVerdicts out{lat.name(), {}, {}};
  Ctx c(lat);
  for (const auto& prop : registry()) {
    if (!selected(prop.info.suite, suite)) continue;
    PropertyVerdict pv{prop.info.id, Verdict::pass, {}};
    try {
      if (prop.needs == Needs::gelfand && !c.cls().gelfand.holds) {
        pv = {prop.info.id, Verdict::not_applicable, "not Gelfand: " + c.cls().gelfand.witness.text};
      } else if (prop.needs == Needs::mp && !c.cls().mp.holds) {
        pv = {prop.info.id, Verdict::not_applicable, "not mp: " + c.cls().mp.witness.text};
      } else {
        auto o = prop.run(c);
        pv.verdict = o.verdict;
        pv.witness = o.witness;
      }
    } catch (const std::exception& e) {
      // Internal cross-checks throw on disagreement; that is a failure of
      // the property being evaluated.
      pv = {prop.info.id, Verdict::fail, std::string("internal check: ") + e.what()};
    }
    out.verdicts.push_back(std::move(pv));
  }
  return out;
}

void tally(SuiteReport& r) {
  for (const auto& inst : r.instances)
    for (const auto& v : inst.verdicts) {
      if (v.verdict == Verdict::pass) ++r.passed;
      else if (v.verdict == Verdict::fail) ++r.failed;
      else ++r.not_applicable;
    }
}

void require_inventory() {
  auto inv = inventory_check();
  if (!inv.ok()) throw InventoryError(inv);
}

}  // namespace

SuiteReport run_theorem_suite(const std::vector<ResiduatedLattice>& instances, Suite suite) {
  require_inventory();
  SuiteReport r;
  r.suite = suite;
  for (const auto& lat : instances) r.instances.push_back(run_one(lat, suite));
  tally(r);
  return r;
}

SuiteReport run_theorem_suite(const std::vector<RawTables>& inputs, Suite suite) {
  require_inventory();
  SuiteReport r;
  r.suite = suite;
  for (const auto& raw : inputs) {
    auto v = validate(raw);
    if (v.lattice) {
      r.instances.push_back(run_one(*v.lattice, suite));
      continue;
    }
    InstanceVerdicts iv{raw.name, {}, {}};
    for (const auto& viol : v.report.violations) {
      if (!iv.validation_error.empty()) iv.validation_error += "; ";
      iv.validation_error += std::string(to_string(viol.kind)) + ": " + viol.message;
    }
    for (const auto& prop : registry())
      if (selected(prop.info.suite, suite))
        iv.verdicts.push_back({prop.info.id, Verdict::not_applicable, "input failed validation"});
    r.instances.push_back(std::move(iv));
  }
  tally(r);
  return r;
}

std::string format_report(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite " << to_string(r.suite) << ": " << r.instances.size() << " instances, " << r.passed << " pass, "
      << r.failed << " fail, " << r.not_applicable << " n/a\n";
  for (const auto& inst : r.instances) {
    out << inst.instance;
    if (!inst.validation_error.empty()) out << "  invalid: " << inst.validation_error;
    out << "\n";
    for (const auto& v : inst.verdicts) {
      out << "  " << v.property << " " << to_string(v.verdict);
      if (v.verdict != Verdict::pass && !v.witness.empty()) out << "  " << v.witness;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace rlat

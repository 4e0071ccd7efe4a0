#include "rlat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rlat/classify.hpp"
#include "rlat/fixtures.hpp"
#include "rlat/harness.hpp"
#include "rlat/purity.hpp"
#include "rlat/rlat_format.hpp"

namespace rlat::cli {

using json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A property or certificate was violated; the output is still printed.
struct Violated {
  std::string message;
};

struct Output {
  std::string lattice;
  std::string command;
  json result = json::object();
  json witnesses = json::array();
  std::string text;
  int code = kOk;
  std::string error;
};

json tokens(const ResiduatedLattice& L, ElementSubset s) {
  json a = json::array();
  for (Element x : s) a.push_back(L.element_name(x));
  return a;
}

json tokens(const ResiduatedLattice& L, const Filter& f) { return tokens(L, f.elements()); }

json filter_list(const ResiduatedLattice& L, const std::vector<Filter>& v) {
  json a = json::array();
  for (const auto& f : v) a.push_back(tokens(L, f));
  return a;
}

std::string fs(const ResiduatedLattice& L, const Filter& f) { return format_subset(L, f.elements()); }

std::string lines(const ResiduatedLattice& L, const std::vector<Filter>& v) {
  std::string out;
  for (const auto& f : v) out += fs(L, f) + "\n";
  return out;
}

std::string point_set(const FiniteSpace& s, const ResiduatedLattice& L, PointSet u) {
  std::string out = "[";
  bool first = true;
  for (auto p : u) {
    out += (first ? "" : " ") + describe(L, s.label(p));
    first = false;
  }
  return out + "]";
}

json point_set_json(const FiniteSpace& s, const ResiduatedLattice& L, PointSet u) {
  json a = json::array();
  for (auto p : u) {
    const auto& lab = s.label(p);
    if (const auto* f = std::get_if<Filter>(&lab)) a.push_back(tokens(L, *f));
    else a.push_back(std::get<std::string>(lab));
  }
  return a;
}

json witness_json(const ResiduatedLattice& L, const Witness& w) {
  json j{{"text", w.text}, {"filters", filter_list(L, w.filters)}, {"elements", json::array()}};
  for (Element e : w.elements) j["elements"].push_back(L.element_name(e));
  return j;
}

json separation_json(const SeparationReport& r) {
  return {{"t0", r.t0},         {"t1", r.t1},           {"hausdorff", r.hausdorff},
          {"sober", r.sober},   {"connected", r.connected}, {"compact", r.compact_note}};
}

std::string separation_text(const SeparationReport& r) {
  auto b = [](bool x) { return x ? "true" : "false"; };
  return std::string("t0 ") + b(r.t0) + ", t1 " + b(r.t1) + ", hausdorff " + b(r.hausdorff) + ", sober " + b(r.sober) +
         ", connected " + b(r.connected) + "; " + r.compact_note + "\n";
}

RawTables read_input(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  return read_rlat_file(path);
}

ResiduatedLattice load(const std::string& path) { return validate_or_throw(read_input(path)); }

Filter filter_arg(const ResiduatedLattice& L, const std::string& csv) {
  ElementSubset s;
  try {
    s = parse_subset(L, csv);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--filter: ") + e.what());
  }
  if (!is_filter(L, s)) throw UsageError("--filter: " + format_subset(L, s) + " is not a filter of " + L.name());
  return Filter::unchecked(s);
}

/// A file path, or a generator id: A6, G4, L3.
ResiduatedLattice operand(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load(arg);
  for (const auto& n : fixture_names())
    if (arg == n) return fixture(n);
  if (arg.size() >= 2 && (arg[0] == 'G' || arg[0] == 'L') &&
      arg.find_first_not_of("0123456789", 1) == std::string::npos) {
    const auto n = static_cast<std::size_t>(std::stoul(arg.substr(1)));
    return arg[0] == 'G' ? godel_chain(n) : lukasiewicz_chain(n);
  }
  throw UsageError("not a file or generator id: " + arg);
}

json lattice_json(const ResiduatedLattice& L) {
  json j{{"name", L.name()}, {"elements", L.element_names()},
         {"bottom", L.element_name(L.bottom())}, {"top", L.element_name(L.top())},
         {"covers", json::array()}, {"prod", json::array()}};
  for (auto [x, y] : L.covers()) j["covers"].push_back({L.element_name(x), L.element_name(y)});
  for (Element x = 0; x < L.size(); ++x) {
    json row = json::array();
    for (Element y = 0; y < L.size(); ++y) row.push_back(L.element_name(L.prod(x, y)));
    j["prod"].push_back(row);
  }
  return j;
}

// ------------------------------------------------------------ subcommands

void cmd_validate(Output& o, const std::string& path, const std::string& dot_path) {
  auto raw = read_input(path);
  o.lattice = raw.name;
  auto v = validate(raw);
  o.result["valid"] = v.report.ok();
  o.result["violations"] = json::array();
  if (!v.lattice) {
    o.code = kValidationFailure;
    o.text += raw.name + ": invalid\n";
    for (const auto& viol : v.report.violations) {
      json w = json::array();
      std::string toks;
      for (Element x : viol.witness) {
        const auto& name = x < raw.element_names.size() ? raw.element_names[x] : std::to_string(x);
        w.push_back(name);
        toks += (toks.empty() ? "" : ",") + name;
      }
      o.result["violations"].push_back(
          {{"kind", to_string(viol.kind)}, {"axiom", viol.axiom}, {"witness", w}, {"message", viol.message}});
      o.text += std::string("  ") + to_string(viol.kind) + " [" + viol.axiom + "] " + viol.message +
                (toks.empty() ? "" : " (" + toks + ")") + "\n";
    }
    return;
  }
  const auto& L = *v.lattice;
  o.result["size"] = L.size();
  o.result["elements"] = L.element_names();
  o.text += L.name() + ": valid residuated lattice with " + std::to_string(L.size()) + " elements\n";
  if (!dot_path.empty()) {
    std::ofstream(dot_path) << hasse_dot(L);
    o.result["dot"] = dot_path;
  }
}

void cmd_filters(Output& o, const ResiduatedLattice& L) {
  auto fl = enumerate_filters(L);
  o.result["filters"] = filter_list(L, fl.all());
  o.text = lines(L, fl.all());
}

void cmd_spectrum(Output& o, const ResiduatedLattice& L, const std::string& kind_arg) {
  SpectrumKind kind = SpectrumKind::prime;
  if (kind_arg == "maximal") kind = SpectrumKind::maximal;
  else if (kind_arg == "minimal") kind = SpectrumKind::minimal_prime;
  else if (kind_arg != "prime") throw UsageError("--kind must be prime, maximal or minimal");
  auto fl = enumerate_filters(L);
  auto sel = spectrum(L, fl, kind);
  o.result["kind"] = kind_arg;
  o.result["points"] = filter_list(L, sel.points);
  o.text = lines(L, sel.points);
}

void cmd_alpha(Output& o, const ResiduatedLattice& L) {
  auto fl = enumerate_filters(L);
  auto a = enumerate_alpha(L, fl);
  o.result["alpha"] = filter_list(L, a);
  o.text = lines(L, a);
}

void cmd_pure(Output& o, const ResiduatedLattice& L) {
  Instance inst(L);
  auto p = pure_filters(inst);
  o.result["pure"] = filter_list(L, p);
  o.text = lines(L, p);
}

void cmd_sigma(Output& o, const ResiduatedLattice& L, const std::string& csv, bool all_formulas) {
  Instance inst(L);
  auto f = filter_arg(L, csv);
  Filter s;
  try {
    s = sigma(inst, f, all_formulas ? SigmaCheck::all_formulas : SigmaCheck::primary_only);
  } catch (const FormulaMismatch& e) {
    o.witnesses.push_back({{"text", e.what()}, {"formula", e.formula()}, {"element", L.element_name(e.element())}});
    throw Violated{e.what()};
  }
  o.result["filter"] = tokens(L, f);
  o.result["sigma"] = tokens(L, s);
  o.result["pure"] = s == f;
  o.text = "σ(" + fs(L, f) + ") = " + fs(L, s) + "\n";
}

void cmd_rho(Output& o, const ResiduatedLattice& L, const std::string& csv) {
  Instance inst(L);
  auto f = filter_arg(L, csv);
  auto r = rho(inst, f);
  o.result["filter"] = tokens(L, f);
  o.result["rho"] = tokens(L, r);
  o.text = "ρ(" + fs(L, f) + ") = " + fs(L, r) + "\n";
}

void cmd_spp(Output& o, const ResiduatedLattice& L, const std::string& dot_path) {
  Instance inst(L);
  auto spp = pure_spectrum(inst);
  auto sep = separation_report(spp.space);
  json pts = json::array();
  o.text = "Spp(" + L.name() + "): " + std::to_string(spp.points.size()) + " points\n";
  for (std::size_t i = 0; i < spp.points.size(); ++i) {
    pts.push_back({{"filter", tokens(L, spp.points[i])},
                   {"purely_maximal", bool(spp.purely_maximal[i])},
                   {"purely_minimal", bool(spp.purely_minimal[i])}});
    o.text += "  " + fs(L, spp.points[i]) + (spp.purely_maximal[i] ? " purely-maximal" : "") +
              (spp.purely_minimal[i] ? " purely-minimal" : "") + "\n";
  }
  json opens = json::array();
  o.text += "opens:\n";
  for (auto u : spp.space.opens()) {
    opens.push_back(point_set_json(spp.space, L, u));
    o.text += "  " + point_set(spp.space, L, u) + "\n";
  }
  o.result["points"] = pts;
  o.result["opens"] = opens;
  o.result["separation"] = separation_json(sep);
  o.text += separation_text(sep);
  if (!dot_path.empty()) {
    const auto dot = to_dot(spp.space, L, "Spp(" + L.name() + ")");
    if (dot_path == "-") {
      o.text = dot;
    } else {
      std::ofstream(dot_path) << dot;
      o.result["dot"] = dot_path;
    }
  }
}

void cmd_dtop(Output& o, const ResiduatedLattice& L) {
  Instance inst(L);
  auto d = d_topology(inst);
  auto h = hull_kernel_space(L, inst.spec(), HullFlavor::h);
  json opens = json::array();
  o.text = "𝒟-topology on Spec(" + L.name() + "): " + std::to_string(d.opens().size()) + " opens\n";
  for (auto u : d.opens()) {
    opens.push_back(point_set_json(d, L, u));
    o.text += "  " + point_set(d, L, u) + "\n";
  }
  o.result["points"] = filter_list(L, inst.spec());
  o.result["opens"] = opens;
  o.result["equals_hull_kernel"] = d == h;
  o.text += std::string("equals hull-kernel topology: ") + (d == h ? "true" : "false") + "\n";
}

void cmd_classify(Output& o, const ResiduatedLattice& L) {
  Instance inst(L);
  auto r = classify(inst);
  auto flag = [&](const char* key, const char* label, const Flag& f) {
    o.result[key] = f.holds;
    o.text += std::string(label) + ": " + (f.holds ? "true" : "false");
    if (!f.holds) {
      o.text += "  (" + f.witness.text + ")";
      json w = witness_json(L, f.witness);
      w["property"] = key;
      o.witnesses.push_back(w);
    }
    o.text += "\n";
  };
  flag("hyperarchimedean", "hyperarchimedean", r.hyperarchimedean);
  flag("gelfand", "gelfand", r.gelfand);
  flag("mp", "mp", r.mp);
  flag("directly_indecomposable", "directly indecomposable", r.directly_indecomposable);
  o.result["boolean_center"] = tokens(L, r.boolean_center);
  o.result["direct_summands"] = filter_list(L, r.direct_summands);
  o.text += "boolean center: " + format_subset(L, r.boolean_center) + "\n";
  o.text += "direct summands:";
  for (const auto& f : r.direct_summands) o.text += " " + fs(L, f);
  o.text += "\n";
}

void cmd_structure(Output& o, const ResiduatedLattice& L, bool gelfand) {
  Instance inst(L);
  const char* kind = gelfand ? "Gelfand" : "mp";
  StructureReport rep;
  try {
    rep = gelfand ? gelfand_structure(inst) : mp_structure(inst);
  } catch (const NotApplicable& e) {
    o.result["applicable"] = false;
    o.witnesses.push_back(witness_json(L, e.witness()));
    o.text = L.name() + " is not " + kind + ": " + e.witness().text + "\n";
    throw Violated{e.what()};
  } catch (const CertificateFailure& e) {
    o.result["applicable"] = true;
    o.result["certified"] = false;
    o.witnesses.push_back({{"text", e.clause().witness}, {"clause", e.clause().id}});
    o.text = "clause " + e.clause().id + " failed: " + e.clause().witness + "\n";
    throw Violated{e.what()};
  }
  o.result["applicable"] = true;
  o.result["certified"] = true;
  o.result["clauses"] = json::array();
  o.text = L.name() + " is " + kind + "; " + std::to_string(rep.clauses.size()) + " clauses certified\n";
  for (const auto& c : rep.clauses) {
    json j{{"id", c.id}, {"statement", c.statement}, {"holds", c.holds}};
    if (!c.note.empty()) j["note"] = c.note;
    o.result["clauses"].push_back(j);
    o.text += "  " + c.id + ": " + c.statement + (c.note.empty() ? "" : " [" + c.note + "]") + "\n";
  }
}

void cmd_quotient(Output& o, const ResiduatedLattice& L, const std::string& csv) {
  auto f = filter_arg(L, csv);
  auto q = quotient(L, f);
  json classes = json::array();
  o.text = L.name() + "/" + fs(L, f) + ": " + std::to_string(q.classes.size()) + " classes\n";
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    classes.push_back({{"name", q.quotient.element_name(static_cast<Element>(c))}, {"members", tokens(L, q.classes[c])}});
    o.text += "  " + q.quotient.element_name(static_cast<Element>(c)) + " = " + format_subset(L, q.classes[c]) + "\n";
  }
  o.result["filter"] = tokens(L, f);
  o.result["degenerate"] = q.degenerate;
  o.result["classes"] = classes;
  o.result["quotient"] = lattice_json(q.quotient);
  if (!q.degenerate) o.text += write_rlat(q.quotient);
}

void cmd_gen(Output& o, const std::string& family, std::size_t size, const std::vector<std::string>& product) {
  ResiduatedLattice L = [&] {
    if (!product.empty()) {
      if (!family.empty()) throw UsageError("gen: --family and --product are exclusive");
      return direct_product(operand(product[0]), operand(product[1]));
    }
    if (family == "godel") return godel_chain(size);
    if (family == "lukasiewicz") return lukasiewicz_chain(size);
    throw UsageError("gen: --family godel|lukasiewicz with --size N, or --product A B");
  }();
  o.lattice = L.name();
  o.result = lattice_json(L);
  o.text = write_rlat(L);
}

void cmd_check(Output& o, const std::vector<std::string>& paths, const std::string& suite_arg) {
  auto suite = parse_suite(suite_arg);
  if (!suite) throw UsageError("--suite must be core, purity, spp, gelfand, mp or all");
  SuiteReport r;
  if (paths.empty()) {
    o.lattice = "standard-family";
    r = run_theorem_suite(generate(standard_family()), *suite);
  } else {
    std::vector<RawTables> raws;
    for (const auto& p : paths) raws.push_back(read_input(p));
    o.lattice = raws.size() == 1 ? raws[0].name : "multiple";
    r = run_theorem_suite(raws, *suite);
  }
  json insts = json::array();
  bool invalid = false;
  for (const auto& inst : r.instances) {
    json vs = json::array();
    for (const auto& v : inst.verdicts) {
      json j{{"property", v.property}, {"verdict", to_string(v.verdict)}};
      if (!v.witness.empty()) j["witness"] = v.witness;
      vs.push_back(j);
      if (v.verdict == Verdict::fail)
        o.witnesses.push_back({{"instance", inst.instance}, {"property", v.property}, {"text", v.witness}});
    }
    json ij{{"instance", inst.instance}, {"verdicts", vs}};
    if (!inst.validation_error.empty()) {
      ij["validation_error"] = inst.validation_error;
      invalid = true;
    }
    insts.push_back(ij);
  }
  o.result = {{"suite", to_string(r.suite)},  {"passed", r.passed},   {"failed", r.failed},
              {"not_applicable", r.not_applicable}, {"instances", insts}};
  o.text = format_report(r);
  if (!r.ok()) o.code = kViolation;
  else if (invalid) o.code = kValidationFailure;
}

}  // namespace

std::string hasse_dot(const ResiduatedLattice& lat) {
  std::ostringstream os;
  os << "digraph \"" << lat.name() << "\" {\n  rankdir=BT;\n";
  for (Element x = 0; x < lat.size(); ++x) os << "  e" << x << " [label=\"" << lat.element_name(x) << "\"];\n";
  for (auto [x, y] : lat.covers()) os << "  e" << x << " -> e" << y << ";\n";
  os << "}\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite residuated lattices: filters, spectra, pure filters and structure checks", "rlat"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand");

  bool as_json = false;
  std::string path, csv, kind = "prime", dot_path, family, suite = "all";
  std::size_t size = 0;
  bool all_formulas = false;
  std::vector<std::string> product, paths;

  auto sub = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->add_flag("--json", as_json, "Emit the JSON layout");
    return s;
  };
  auto with_file = [&](CLI::App* s) {
    s->add_option("lattice", path, "Lattice file (.rlat)")->required();
    return s;
  };

  auto* validate_cmd = with_file(sub("validate", "Check the axioms"));
  validate_cmd->add_option("--dot", dot_path, "Write the Hasse diagram as DOT")->excludes("--json");
  with_file(sub("filters", "List all filters"));
  auto* spectrum_cmd = with_file(sub("spectrum", "Prime, maximal or minimal prime filters"));
  spectrum_cmd->add_option("--kind", kind, "prime|maximal|minimal")->check(CLI::IsMember({"prime", "maximal", "minimal"}));
  with_file(sub("alpha", "List α-filters"));
  with_file(sub("pure", "List pure filters"));
  auto* sigma_cmd = with_file(sub("sigma", "Sink σ(F)"));
  sigma_cmd->add_option("--filter", csv, "Comma-separated element tokens")->required();
  sigma_cmd->add_flag("--all-formulas", all_formulas, "Cross-check every description of σ");
  auto* rho_cmd = with_file(sub("rho", "Pure part ρ(F)"));
  rho_cmd->add_option("--filter", csv, "Comma-separated element tokens")->required();
  auto* spp_cmd = with_file(sub("spp", "Pure spectrum with its topology"));
  spp_cmd->add_option("--dot", dot_path, "Write the specialization order as DOT ('-' for stdout)")->excludes("--json");
  with_file(sub("dtop", "𝒟-topology on Spec"));
  with_file(sub("classify", "Hyperarchimedean, Gelfand, mp, directly indecomposable"));
  with_file(sub("gelfand", "Certify the Gelfand structure"));
  with_file(sub("mp", "Certify the mp structure"));
  auto* quotient_cmd = with_file(sub("quotient", "Quotient by a filter"));
  quotient_cmd->add_option("--filter", csv, "Comma-separated element tokens")->required();
  auto* gen_cmd = sub("gen", "Generate a chain or a product");
  auto* fam_opt = gen_cmd->add_option("--family", family, "godel|lukasiewicz")->check(CLI::IsMember({"godel", "lukasiewicz"}));
  gen_cmd->add_option("--size", size, "Chain length")->needs(fam_opt);
  gen_cmd->add_option("--product", product, "Two lattice files or generator ids")->expected(2)->excludes(fam_opt);
  auto* check_cmd = sub("check", "Run the property suite");
  check_cmd->add_option("--suite", suite, "core|purity|spp|gelfand|mp|all")
      ->check(CLI::IsMember({"core", "purity", "spp", "gelfand", "mp", "all"}));
  check_cmd->add_option("lattices", paths, "Lattice files; the standard family when omitted");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rlat: " << e.what() << "\n";
    return kUsage;
  }

  auto* chosen = app.get_subcommands().front();
  Output o;
  o.command = chosen->get_name();
  try {
    const std::string& c = o.command;
    if (c == "validate") {
      cmd_validate(o, path, dot_path);
    } else if (c == "gen") {
      cmd_gen(o, family, size, product);
    } else if (c == "check") {
      cmd_check(o, paths, suite);
    } else {
      const auto L = load(path);
      o.lattice = L.name();
      if (c == "filters") cmd_filters(o, L);
      else if (c == "spectrum") cmd_spectrum(o, L, kind);
      else if (c == "alpha") cmd_alpha(o, L);
      else if (c == "pure") cmd_pure(o, L);
      else if (c == "sigma") cmd_sigma(o, L, csv, all_formulas);
      else if (c == "rho") cmd_rho(o, L, csv);
      else if (c == "spp") cmd_spp(o, L, dot_path);
      else if (c == "dtop") cmd_dtop(o, L);
      else if (c == "classify") cmd_classify(o, L);
      else if (c == "gelfand") cmd_structure(o, L, true);
      else if (c == "mp") cmd_structure(o, L, false);
      else if (c == "quotient") cmd_quotient(o, L, csv);
    }
  } catch (const Violated& v) {
    o.code = kViolation;
    o.error = v.message;
  } catch (const ParseError& e) {
    err << "rlat: " << path << ": " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "rlat: " << path << ": not a residuated lattice\n";
    for (const auto& viol : e.report().violations)
      err << "  " << to_string(viol.kind) << " [" << viol.axiom << "] " << viol.message << "\n";
    return kValidationFailure;
  } catch (const UsageError& e) {
    err << "rlat: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeLimitError& e) {
    err << "rlat: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    // Internal cross-checks disagreeing count as violations.
    err << "rlat: " << e.what() << "\n";
    return kViolation;
  }

  if (as_json) {
    json j{{"lattice", o.lattice}, {"command", o.command}, {"result", o.result}, {"witnesses", o.witnesses}};
    out << j.dump(2) << "\n";
  } else {
    out << o.text;
  }
  if (!o.error.empty()) err << "rlat: " << o.error << "\n";
  return o.code;
}

}  // namespace rlat::cli

// stratkit command-line front end.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stratkit/fan.hpp"
#include "stratkit/newton_okounkov.hpp"
#include "stratkit/pluecker.hpp"
#include "stratkit/strat.hpp"
#include "stratkit/tableaux.hpp"
#include "stratkit/valuation.hpp"

using namespace stratkit;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string builtin;
  std::string input;
  int n = 0;
  std::string k;
  std::string d;
  std::string chain;
  std::string expr;
  std::string shape;
  bool count = false;
  std::string stratum;
  std::string schubert;
  std::string format = "text";
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> order_seed;
  std::string suite;
};

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) throw UsageError(std::string("bad ") + what + ": " + text);
    try {
      size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw UsageError(std::string("bad ") + what + ": " + text);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("bad ") + what + ": " + text);
    }
  }
  if (v.empty()) throw UsageError(std::string("missing ") + what);
  return v;
}

std::string tuple_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::uint64_t seed_of(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("STRATKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("bad STRATKIT_SEED: ") + env);
    }
  }
  return kDefaultSeed;
}

StratData load(const Options& o) {
  if (!o.builtin.empty() && !o.input.empty()) throw UsageError("give either --builtin or --input, not both");
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot read " + o.input);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw DomainError(std::string("invalid JSON: ") + e.what());
    }
    return strat_from_json(j);
  }
  if (o.builtin.empty()) throw UsageError("an input is required (--builtin or --input)");
  if (o.builtin == "typeA") {
    if (o.n <= 0 || o.k.empty()) throw UsageError("typeA needs --n and --k");
    return build_type_a(o.n, parse_ints(o.k, "--k"));
  }
  auto names = builtin_names();
  if (std::find(names.begin(), names.end(), o.builtin) == names.end())
    throw UsageError("unknown builtin: " + o.builtin);
  return builtin_example(o.builtin);
}

Degree degree_of(const Options& o, const StratData& s) {
  if (o.d.empty()) throw UsageError("--d is required");
  Degree d = parse_ints(o.d, "--d");
  if (static_cast<int>(d.size()) != s.m) throw UsageError("--d needs " + std::to_string(s.m) + " entries");
  for (int x : d)
    if (x < 0) throw UsageError("--d must be non-negative");
  return d;
}

std::vector<Chain> chains_of(const Options& o, const StratData& s) {
  if (!o.chain.empty()) return {parse_chain(s.poset, o.chain)};
  return maximal_chains(s.poset);
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("format " + o.format + " is not available for this command");
}

std::string cmd_hasse(const Options& o) {
  require_format(o, {"text", "json"});
  StratData s = load(o);
  if (o.format == "json") return to_json(s).dump(2) + "\n";
  return export_hasse(s.poset);
}

std::string cmd_chains(const Options& o) {
  StratData s = load(o);
  auto chains = maximal_chains(s.poset);
  std::ostringstream os;
  if (o.format == "json") {
    json a = json::array();
    for (const auto& c : chains) a.push_back(chain_to_string(s.poset, c));
    return a.dump(2) + "\n";
  }
  if (o.format == "csv") os << "index,chain,length\n";
  for (size_t i = 0; i < chains.size(); ++i) {
    if (o.format == "csv") os << i + 1 << "," << chain_to_string(s.poset, chains[i]) << "," << chains[i].size() << "\n";
    else os << "C" << i + 1 << ": " << chain_to_string(s.poset, chains[i]) << "\n";
  }
  return os.str();
}

std::string cmd_gamma(const Options& o) {
  require_format(o, {"text", "json"});
  StratData s = load(o);
  std::ostringstream os;
  json a = json::array();
  for (const auto& c : chains_of(o, s)) {
    MonoidDesc m = gamma_for_chain(s, c);
    if (o.format == "json") {
      a.push_back(to_json(m, s.poset));
      continue;
    }
    os << chain_to_string(s.poset, c) << " [" << flavor_name(m.flavor) << (m.saturated ? ", saturated" : "") << "]\n";
    for (const auto& g : m.generators) os << "  " << format(g, s.poset) << "\n";
  }
  if (o.format == "json") return a.dump(2) + "\n";
  return os.str();
}

std::string cmd_veronese(const Options& o) {
  require_format(o, {"text", "json"});
  StratData s = load(o);
  Degree d = degree_of(o, s);
  VeronesePoset vp = veronese_poset(s, d);
  auto chains = maximal_chains(s.poset);
  auto idx = [&](const Chain& c) {
    return "C" + std::to_string(std::find(chains.begin(), chains.end(), c) - chains.begin() + 1);
  };
  auto image = [&](const Chain& c) { return c.empty() ? std::string("{}") : chain_to_string(s.poset, c); };
  if (o.format == "json") {
    json comps = json::array();
    for (const auto& comp : vp.maximal) {
      json cs = json::array();
      for (const auto& c : comp.chains) cs.push_back(chain_to_string(s.poset, c));
      comps.push_back({{"image", image(comp.image)}, {"chains", cs}});
    }
    json els = json::array();
    for (const auto& c : vp.elements) els.push_back(image(c));
    return json{{"d", d}, {"elements", els}, {"maximal", comps}}.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& c : chains) os << idx(c) << " -> " << image(restrict_chain(s, c, d)) << "\n";
  os << "maximal:\n";
  for (const auto& comp : vp.maximal) {
    os << "  " << image(comp.image) << " <-";
    for (const auto& c : comp.chains) os << " " << idx(c);
    os << "\n";
  }
  return os.str();
}

std::string cmd_polytope(const Options& o) {
  require_format(o, {"text", "json"});
  StratData s = load(o);
  Degree d = degree_of(o, s);
  std::ostringstream os;
  json a = json::array();
  for (const auto& c : chains_of(o, s)) {
    PolytopeDesc p = polytope(s, c, d);
    if (o.format == "json") {
      a.push_back(to_json(p, s));
      continue;
    }
    os << chain_to_string(s.poset, c) << ": ";
    if (p.empty) {
      os << "empty\n";
      continue;
    }
    os << "dim " << p.dim << ", " << p.vertices.size() << " vertices\n";
    for (const auto& v : p.vertices) os << "  " << format(v, s.poset) << "\n";
  }
  if (o.format == "json") return a.dump(2) + "\n";
  return os.str();
}

std::string cmd_volume(const Options& o) {
  StratData s = load(o);
  Degree d = degree_of(o, s);
  Fan fan = fan_of_monoids(s);
  std::ostringstream os;
  json a = json::array();
  if (o.format == "csv") os << "chain,volume,dim,rank,collapsed\n";
  for (const auto& c : chains_of(o, s)) {
    VolumeResult v = chain_volume(s, fan, c, d);
    std::string name = chain_to_string(s.poset, c);
    if (o.format == "json") {
      a.push_back({{"chain", name}, {"volume", to_string(v.value)}, {"dim", v.dim}, {"rank", v.r}, {"collapsed", v.collapsed}});
    } else if (o.format == "csv") {
      os << name << "," << to_string(v.value) << "," << v.dim << "," << v.r << "," << (v.collapsed ? "true" : "false") << "\n";
    } else {
      os << name << ": " << to_string(v.value);
      if (v.dim < 0) os << " (empty)";
      else if (v.collapsed) os << " (collapsed, dim " << v.dim << " < " << v.r << ")";
      os << "\n";
    }
  }
  if (o.format == "json") return a.dump(2) + "\n";
  return os.str();
}

std::string cmd_leading_term(const Options& o) {
  require_format(o, {"text", "json"});
  StratData s = load(o);
  Degree d = degree_of(o, s);
  Fan fan = fan_of_monoids(s);
  LeadingTerm lt = leading_term(s, d, fan);
  if (o.format == "json") {
    json terms = json::array();
    for (const auto& [c, v] : lt.terms) terms.push_back({{"chain", chain_to_string(s.poset, c)}, {"volume", to_string(v)}});
    return json{{"d", d}, {"value", to_string(lt.value)}, {"terms", terms}, {"warnings", lt.warnings}}.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& w : lt.warnings) os << "warning: " << w << "\n";
  for (const auto& [c, v] : lt.terms) os << chain_to_string(s.poset, c) << ": " << to_string(v) << "\n";
  os << "G_R" << tuple_str(d) << " = " << to_string(lt.value) << "\n";
  return os.str();
}

std::string cmd_multidegree(const Options& o) {
  StratData s = load(o);
  auto table = multidegrees(s);
  std::ostringstream os;
  if (o.format == "json") {
    json a = json::array();
    for (const auto& [k, v] : table) a.push_back({{"k", k}, {"degree", v.get_str()}});
    return a.dump(2) + "\n";
  }
  if (o.format == "csv") {
    for (int i = 1; i <= s.m; ++i) os << "k" << i << ",";
    os << "degree\n";
    for (const auto& [k, v] : table) {
      for (int x : k) os << x << ",";
      os << v << "\n";
    }
    return os.str();
  }
  for (const auto& [k, v] : table) os << "deg_" << tuple_str(k) << " = " << v << "\n";
  return os.str();
}

TotalOrder order_of(const Options& o, const StratData& s) {
  return o.order_seed ? random_linear_extension(s.poset, *o.order_seed) : linearize(s.poset);
}

std::string cmd_quasi_val(const Options& o) {
  require_format(o, {"text", "json"});
  StratData s = load(o);
  if (o.expr.empty()) throw UsageError("--expr is required");
  TotalOrder order = order_of(o, s);
  if (s.type_a) {
    PlueckerExpr e = parse_pluecker(o.expr, s.type_a->n, s.type_a->k);
    QVector v = quasi_valuation_pluecker(e, *s.type_a, order, seed_of(o));
    if (o.format == "json") return json{{"value", to_json(v, s.poset)}, {"text", format(v, s.poset)}}.dump(2) + "\n";
    return format(v, s.poset) + "\n";
  }
  ChartAtlas atlas = builtin_atlas(s);
  MultiGradedPoly g = parse_poly(o.expr, atlas.ring);
  ValuationResult r = quasi_valuation(g, atlas, s, order);
  if (o.format == "json") {
    json per = json::array();
    for (const auto& cv : r.per_chain) {
      json nu = json::array();
      for (const auto& x : cv.nu) nu.push_back(to_string(x));
      per.push_back({{"chain", chain_to_string(s.poset, cv.chain)},
                     {"value", format(cv.value, s.poset)},
                     {"nu", nu},
                     {"bond", cv.bond}});
    }
    return json{{"value", to_json(r.value, s.poset)},
                {"text", format(r.value, s.poset)},
                {"chain", chain_to_string(s.poset, r.chain)},
                {"per_chain", per}}
               .dump(2) +
           "\n";
  }
  return format(r.value, s.poset) + "\n";
}

std::pair<int, std::vector<int>> type_a_params(const Options& o) {
  if (!o.builtin.empty() && o.builtin != "typeA") throw UsageError("this command works on --builtin typeA");
  if (o.n <= 0 || o.k.empty()) throw UsageError("--n and --k are required");
  return {o.n, parse_ints(o.k, "--k")};
}

std::string cmd_straighten(const Options& o) {
  auto [n, k] = type_a_params(o);
  if (o.expr.empty()) throw UsageError("--expr is required");
  std::uint64_t seed = seed_of(o);
  Straightening st = straighten(parse_pluecker(o.expr, n, k), seed);
  if (o.format == "json") {
    json terms = json::array();
    for (const auto& [m, c] : st.result.terms) terms.push_back({{"monomial", m.str()}, {"coefficient", to_string(c)}});
    return json{{"input", o.expr}, {"terms", terms}, {"seed", seed}}.dump(2) + "\n";
  }
  if (o.format == "csv") {
    std::ostringstream os;
    os << "coefficient,monomial\n";
    for (const auto& [m, c] : st.result.terms) os << to_string(c) << "," << m.str() << "\n";
    return os.str();
  }
  return st.result.str() + "\n";
}

std::string cmd_ssyt(const Options& o) {
  auto [n, k] = type_a_params(o);
  if (o.shape.empty()) throw UsageError("--shape is required");
  std::vector<int> d = parse_ints(o.shape, "--shape");
  if (d.size() != k.size()) throw UsageError("--shape needs one entry per k");
  for (int x : d)
    if (x < 0) throw UsageError("--shape must be non-negative");
  if (o.count) return std::to_string(count_ssyt(n, k, d)) + "\n";
  auto all = enumerate_ssyt(n, k, d);
  if (o.format == "json") {
    json a = json::array();
    for (const auto& t : all) a.push_back(to_json(t));
    return a.dump(2) + "\n";
  }
  std::ostringstream os;
  for (size_t i = 0; i < all.size(); ++i) os << (i ? "\n" : "") << all[i].str();
  return os.str();
}

std::string cmd_standard_count(const Options& o) {
  require_format(o, {"text", "json"});
  StratData s = load(o);
  Degree d = degree_of(o, s);
  long long count;
  std::string where;
  if (!o.schubert.empty()) {
    if (!s.type_a) throw DomainError("--schubert needs a type A stratification");
    std::vector<int> w;
    for (char c : o.schubert)
      if (std::isdigit(static_cast<unsigned char>(c))) w.push_back(c - '0');
    Coset tau = Coset::permutation(w);
    count = nonvanishing_schubert_count(s.type_a->n, s.type_a->k, d, tau);
    where = "Schubert " + o.schubert;
  } else {
    if (o.stratum.empty()) throw UsageError("--stratum or --schubert is required");
    int p = s.element(o.stratum);
    count = standard_on_stratum_count(s, fan_of_monoids(s), p, d);
    where = s.display_name(p);
  }
  if (o.format == "json") return json{{"where", where}, {"d", d}, {"count", count}}.dump(2) + "\n";
  return std::to_string(count) + "\n";
}

// Returns the report and whether everything was valid.
std::pair<std::string, bool> cmd_validate(const Options& o) {
  require_format(o, {"text", "json"});
  StratData s = load(o);
  std::vector<std::string> diags = validate_strat(s);
  if (s.name == "y0y1" && o.input.empty()) {
    ChartAtlas atlas = builtin_atlas(s);
    for (const auto& ch : atlas.charts)
      for (const auto& msg : validate_chart(ch, s, atlas))
        diags.push_back("chart " + chain_to_string(s.poset, ch.chain) + ": " + msg);
  }
  Classification cl = classify(s);
  if (o.format == "json")
    return {json{{"diagnostics", diags}, {"hodge", cl.is_hodge}, {"ls_candidate", cl.is_ls_candidate}}.dump(2) + "\n",
            diags.empty()};
  std::ostringstream os;
  for (const auto& d : diags) os << d << "\n";
  if (diags.empty()) os << "ok\n";
  os << "hodge: " << (cl.is_hodge ? "yes" : "no") << "\nls candidate: " << (cl.is_ls_candidate ? "yes" : "no") << "\n";
  return {os.str(), diags.empty()};
}

std::vector<std::string> split_args(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, any = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      any = true;
    } else if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
      if (any) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += c;
      any = true;
    }
  }
  if (quoted) throw UsageError("unbalanced quote in: " + line);
  if (any) out.push_back(cur);
  return out;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

std::pair<std::string, bool> cmd_golden(const Options& o) {
  if (o.suite.empty()) throw UsageError("--suite is required");
  if (!fs::is_directory(o.suite)) throw DomainError("missing suite: " + o.suite);
  std::vector<fs::path> cases;
  for (const auto& e : fs::directory_iterator(o.suite))
    if (e.path().extension() == ".args") cases.push_back(e.path());
  std::sort(cases.begin(), cases.end());
  std::ostringstream os;
  int failed = 0;
  for (const auto& c : cases) {
    std::ifstream in(c);
    std::string line, all;
    while (std::getline(in, line)) all += line + " ";
    fs::path expected_path = c;
    expected_path.replace_extension(".out");
    std::ifstream ein(expected_path, std::ios::binary);
    std::string name = c.stem().string();
    if (!ein) {
      os << "MISSING " << name << "\n";
      ++failed;
      continue;
    }
    std::string expected((std::istreambuf_iterator<char>(ein)), std::istreambuf_iterator<char>());
    std::ostringstream got, gerr;
    int code = run(split_args(all), got, gerr);
    if (code == 0 && got.str() == expected) {
      os << "ok       " << name << "\n";
    } else {
      os << "MISMATCH " << name << (code ? " (exit " + std::to_string(code) + ": " + gerr.str() + ")" : "") << "\n";
      ++failed;
    }
  }
  os << cases.size() - failed << "/" << cases.size() << " golden cases passed\n";
  return {os.str(), failed == 0};
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial invariants of multiprojective Seshadri stratifications", "stratkit"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed = 0, order_seed = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--builtin", o.builtin, "y1, y0y1, antiA2 or typeA");
    sub->add_option("--input", o.input, "stratification JSON file");
    sub->add_option("--n", o.n, "type A: size of the matrices");
    sub->add_option("--k", o.k, "type A: column lengths, e.g. 1,2");
    sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", o.out, "write to this file instead of stdout");
  };
  struct Sub {
    const char* name;
    const char* help;
  };
  const std::vector<Sub> subs = {
      {"hasse", "Hasse diagram as DOT"},
      {"chains", "maximal chains"},
      {"gamma", "monoid generators per maximal chain"},
      {"veronese", "the chains C_d and the maximal components"},
      {"polytope", "vertices of Delta_C^(d)"},
      {"volume", "lattice-normalized volume per chain"},
      {"leading-term", "leading term of the Hilbert polynomial at d"},
      {"multidegree", "multidegrees from chain counts"},
      {"quasi-val", "quasi-valuation of a polynomial or Pluecker expression"},
      {"straighten", "expansion in the standard monomial basis"},
      {"ssyt", "semistandard tableaux of a shape"},
      {"standard-count", "standard monomials on a stratum or Schubert variety"},
      {"validate", "check the stratification data"},
      {"golden", "compare outputs against a golden suite"},
  };
  std::map<std::string, CLI::App*> cmd;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    cmd[s.name] = sub;
  }
  for (const char* name : {"veronese", "polytope", "volume", "leading-term", "standard-count"})
    cmd[name]->add_option("--d", o.d, "degree, e.g. 1,1");
  for (const char* name : {"gamma", "polytope", "volume"})
    cmd[name]->add_option("--chain", o.chain, "chain such as \"X>01>0\" (default: all maximal chains)");
  for (const char* name : {"quasi-val", "straighten"}) {
    cmd[name]->add_option("--expr", o.expr, "expression");
    cmd[name]->add_option("--seed", seed, "seed for random evaluation points");
  }
  cmd["quasi-val"]->add_option("--order-seed", order_seed, "use a random linear extension");
  cmd["ssyt"]->add_option("--shape", o.shape, "columns per length, e.g. 1,1");
  cmd["ssyt"]->add_flag("--count", o.count, "print only the number");
  cmd["standard-count"]->add_option("--stratum", o.stratum, "stratum label or name");
  cmd["standard-count"]->add_option("--schubert", o.schubert, "permutation in one-line notation");
  cmd["golden"]->add_option("--suite", o.suite, "directory of *.args / *.out pairs");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }
  for (const auto& s : subs) {
    CLI::App* sub = cmd[s.name];
    if (!sub->parsed()) continue;
    if (auto* opt = sub->get_option_no_throw("--seed"); opt && opt->count()) o.seed = seed;
    if (auto* opt = sub->get_option_no_throw("--order-seed"); opt && opt->count()) o.order_seed = order_seed;
    try {
      std::string text;
      bool ok = true;
      std::string name = s.name;
      if (name == "hasse") text = cmd_hasse(o);
      else if (name == "chains") text = cmd_chains(o);
      else if (name == "gamma") text = cmd_gamma(o);
      else if (name == "veronese") text = cmd_veronese(o);
      else if (name == "polytope") text = cmd_polytope(o);
      else if (name == "volume") text = cmd_volume(o);
      else if (name == "leading-term") text = cmd_leading_term(o);
      else if (name == "multidegree") text = cmd_multidegree(o);
      else if (name == "quasi-val") text = cmd_quasi_val(o);
      else if (name == "straighten") text = cmd_straighten(o);
      else if (name == "ssyt") text = cmd_ssyt(o);
      else if (name == "standard-count") text = cmd_standard_count(o);
      else if (name == "validate") std::tie(text, ok) = cmd_validate(o);
      else if (name == "golden") std::tie(text, ok) = cmd_golden(o);
      if (o.out.empty()) {
        out << text;
      } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw DomainError("cannot write " + o.out);
        f << text;
      }
      return ok ? 0 : 2;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n" << sub->help();
      return 1;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

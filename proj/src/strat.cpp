#include "stratkit/strat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace stratkit {

int StratData::total_degree(int p) const { return std::accumulate(degrees[p].begin(), degrees[p].end(), 0); }

int StratData::bottom_bond(int p) const { return total_degree(p); }

int StratData::element(const std::string& name_or_label) const {
  if (auto p = poset.find(name_or_label)) return *p;
  for (const auto& [p, n] : stratum_names)
    if (n == name_or_label) return p;
  throw DomainError("unknown element or stratum: " + name_or_label);
}

std::string StratData::display_name(int p) const {
  auto it = stratum_names.find(p);
  return it == stratum_names.end() ? poset.label(p) : it->second;
}

std::string index_set_string(const IndexSet& I) {
  std::string s = "{";
  for (size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i]);
  return s + "}";
}

namespace {

bool subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

IndexSet difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Longest ascending chain in the inclusion order, counted in elements.
int longest_chain(const std::vector<IndexSet>& ip) {
  std::vector<int> best(ip.size(), 1);
  std::vector<size_t> order(ip.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return ip[a].size() < ip[b].size(); });
  int out = ip.empty() ? 0 : 1;
  for (size_t x : order)
    for (size_t y : order)
      if (ip[y].size() < ip[x].size() && subset(ip[y], ip[x])) {
        best[x] = std::max(best[x], best[y] + 1);
        out = std::max(out, best[x]);
      }
  return out;
}

}  // namespace

std::vector<std::string> validate_strat(const StratData& s) {
  std::vector<std::string> out = validate(s.poset);
  const size_t n = s.size();
  if (s.m < 1) out.push_back("m must be positive");
  if (s.index_sets.size() != n || s.degrees.size() != n) {
    out.push_back("index sets or degrees missing for some element");
    return out;
  }
  for (size_t p = 0; p < n; ++p) {
    const auto& I = s.index_sets[p];
    const std::string& l = s.poset.label(p);
    if (I.empty()) out.push_back("empty index set: " + l);
    for (size_t i = 0; i < I.size(); ++i)
      if (I[i] < 1 || I[i] > s.m || (i && I[i] <= I[i - 1])) {
        out.push_back("malformed index set: " + l);
        break;
      }
    if (static_cast<int>(s.degrees[p].size()) != s.m) {
      out.push_back("degree has wrong length: " + l);
      continue;
    }
    bool nonzero = false;
    for (int x : s.degrees[p]) {
      if (x < 0) out.push_back("negative degree: " + l);
      if (x) nonzero = true;
    }
    if (!nonzero) out.push_back("zero degree: " + l);
    for (int i = 1; i <= s.m; ++i)
      if (s.degrees[p][i - 1] != 0 && !std::binary_search(I.begin(), I.end(), i))
        out.push_back("degree outside index set: " + l);
  }
  if (!out.empty()) return out;

  IndexSet full(s.m);
  std::iota(full.begin(), full.end(), 1);
  auto maxima = s.poset.maximal_elements();
  if (maxima.size() != 1) out.push_back("no unique maximal element");
  else if (s.index_sets[maxima[0]] != full) out.push_back("maximal element must have index set [m]");

  for (auto [top, bottom] : s.poset.covers()) {
    const auto& It = s.index_sets[top];
    const auto& Ib = s.index_sets[bottom];
    std::string e = s.poset.label(top) + " > " + s.poset.label(bottom);
    if (!subset(Ib, It)) {
      out.push_back("index sets not monotone: " + e);
      continue;
    }
    auto diff = difference(It, Ib);
    if (diff.size() > 1) out.push_back("cover drops more than one index: " + e);
    if (diff.size() == 1 && s.poset.bond(top, bottom) != s.degrees[top][diff[0] - 1])
      out.push_back("bond/degree mismatch: " + e);
  }
  for (int p : s.poset.minimal_elements())
    if (s.index_sets[p].size() != 1) out.push_back("minimal element with non-singleton index set: " + s.poset.label(p));

  auto ip = index_poset(s);
  if (longest_chain(ip) != s.m) out.push_back("index poset is not of length m-1");
  return out;
}

std::vector<IndexSet> index_poset(const StratData& s) {
  std::set<IndexSet> sets(s.index_sets.begin(), s.index_sets.end());
  return {sets.begin(), sets.end()};
}

IndexSet underline_index(const std::vector<IndexSet>& ip, const IndexSet& I) {
  if (std::find(ip.begin(), ip.end(), I) == ip.end()) throw DomainError("index set not in the index poset");
  std::set<int> out;
  bool minimal = true;
  for (const auto& J : ip) {
    if (J.size() >= I.size() || !subset(J, I)) continue;
    minimal = false;
    bool cover = true;
    for (const auto& K : ip)
      if (K.size() > J.size() && K.size() < I.size() && subset(J, K) && subset(K, I)) cover = false;
    if (!cover) continue;
    for (int x : difference(I, J)) out.insert(x);
  }
  if (minimal) return I;
  return {out.begin(), out.end()};
}

IndexSet underline_index(const StratData& s, const IndexSet& I) { return underline_index(index_poset(s), I); }

Classification classify(const StratData& s) {
  Classification c;
  c.is_hodge = true;
  for (auto [top, bottom] : s.poset.covers())
    if (s.poset.bond(top, bottom) != 1) c.is_hodge = false;
  for (int p : s.poset.minimal_elements())
    if (s.bottom_bond(p) != 1) c.is_hodge = false;

  c.is_ls_candidate = true;
  auto ip = index_poset(s);
  for (size_t p = 0; p < s.size() && c.is_ls_candidate; ++p) {
    for (int x : s.degrees[p])
      if (x > 1) c.is_ls_candidate = false;
    Degree e(s.m, 0);
    for (int i : underline_index(ip, s.index_sets[p])) e[i - 1] = 1;
    if (e != s.degrees[p]) c.is_ls_candidate = false;
    for (size_t q = 0; q < s.size(); ++q)
      if (s.index_sets[p] == s.index_sets[q] && s.degrees[p] != s.degrees[q]) c.is_ls_candidate = false;
  }
  return c;
}

StratData build_type_a(int n, const std::vector<int>& k_list) {
  UnderlineW uw = build_underline_w(n, k_list);
  StratData s;
  s.name = "typeA";
  s.m = uw.m();
  s.poset = uw.poset;
  for (size_t p = 0; p < s.poset.size(); ++p) {
    int i = uw.index[p];
    IndexSet I;
    for (int j = i; j <= s.m; ++j) I.push_back(j);
    Degree d(s.m, 0);
    d[i - 1] = 1;
    s.index_sets.push_back(I);
    s.degrees.push_back(d);
    Coset top = uw.max_q_i(static_cast<int>(p));
    std::string w = top.str();
    if (top.cuts == all_cuts(n) && n <= 9) w.erase(std::remove(w.begin(), w.end(), '|'), w.end());
    s.stratum_names[static_cast<int>(p)] = "X^(" + std::to_string(i) + ")_" + w;
  }
  s.type_a = std::move(uw);
  return s;
}

namespace {

struct Row {
  const char* label;
  IndexSet I;
  Degree deg;
};

StratData from_rows(const std::string& name, int m, const std::vector<Row>& rows,
                    const std::vector<std::pair<std::string, std::string>>& covers,
                    const std::map<std::pair<std::string, std::string>, int>& bonds) {
  std::vector<std::string> labels;
  for (const auto& r : rows) labels.push_back(r.label);
  StratData s;
  s.name = name;
  s.m = m;
  s.poset = GradedPoset::from_labels(labels, covers, bonds);
  for (const auto& r : rows) {
    s.index_sets.push_back(r.I);
    s.degrees.push_back(r.deg);
  }
  return s;
}

StratData example_y1() {
  return from_rows("y1", 2,
                   {{"X", {1, 2}, {0, 1}},
                    {"01", {1}, {2, 0}},
                    {"00b", {1, 2}, {1, 1}},
                    {"1", {1}, {1, 0}},
                    {"0", {1}, {1, 0}},
                    {"0b", {2}, {0, 1}}},
                   {{"X", "01"}, {"X", "00b"}, {"01", "1"}, {"01", "0"}, {"00b", "0"}, {"00b", "0b"}}, {});
}

StratData example_y0y1() {
  StratData s = from_rows("y0y1", 2,
                          {{"X", {1, 2}, {0, 2}},
                           {"00b", {1, 2}, {0, 1}},
                           {"01", {1}, {2, 0}},
                           {"11b", {1, 2}, {0, 1}},
                           {"0", {1}, {1, 0}},
                           {"1", {1}, {1, 0}}},
                          {{"X", "00b"}, {"X", "01"}, {"X", "11b"}, {"00b", "0"}, {"01", "0"}, {"01", "1"}, {"11b", "1"}},
                          {{{"X", "01"}, 2}});
  const auto& P = s.poset;
  auto e = [&](const char* l, Q c = 1) { return QVector::unit(P.id(l), c); };
  QVector half = e("X", make_q(1, 2)) + e("01", make_q(1, 2));
  s.monoid_generators[parse_chain(P, "X>00b>0")] = {e("X"), e("00b"), e("0")};
  s.monoid_generators[parse_chain(P, "X>01>0")] = {e("X"), e("01"), e("0"), half};
  s.monoid_generators[parse_chain(P, "X>01>1")] = {e("X"), e("01"), e("1"), half};
  s.monoid_generators[parse_chain(P, "X>11b>1")] = {e("X"), e("11b"), e("1")};
  s.monoids_saturated = true;
  return s;
}

StratData example_anti_a2() {
  StratData s = from_rows("antiA2", 2,
                          {{"23", {1, 2}, {1, 0}},
                           {"13", {1, 2}, {1, 0}},
                           {"12", {1, 2}, {1, 0}},
                           {"3", {2}, {0, 1}},
                           {"2", {2}, {0, 1}},
                           {"1", {2}, {0, 1}}},
                          {{"23", "13"}, {"13", "12"}, {"13", "3"}, {"12", "2"}, {"3", "2"}, {"2", "1"}}, {});
  const std::map<std::string, std::string> names = {{"23", "X^(1)_321"}, {"13", "X^(1)_312"}, {"12", "X^(1)_213"},
                                                    {"3", "X^(2)_312"},  {"2", "X^(2)_213"},  {"1", "X^(2)_123"}};
  for (const auto& [l, n] : names) s.stratum_names[s.poset.id(l)] = n;
  return s;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"y1", "y0y1", "antiA2"}; }

StratData builtin_example(const std::string& name) {
  if (name == "y1") return example_y1();
  if (name == "y0y1") return example_y0y1();
  if (name == "antiA2") return example_anti_a2();
  throw DomainError("unknown builtin example: " + name);
}

nlohmann::json to_json(const StratData& s) {
  nlohmann::json els = nlohmann::json::array();
  for (size_t p = 0; p < s.size(); ++p)
    els.push_back({{"label", s.poset.label(p)},
                   {"rank", s.poset.rank(p)},
                   {"index_set", s.index_sets[p]},
                   {"degree", s.degrees[p]}});
  nlohmann::json covers = nlohmann::json::array();
  for (auto [t, b] : s.poset.covers())
    covers.push_back({{"top", s.poset.label(t)}, {"bottom", s.poset.label(b)}, {"bond", s.poset.bond(t, b)}});
  nlohmann::json j = {{"name", s.name}, {"m", s.m}, {"elements", els}, {"covers", covers}};
  if (!s.monoid_generators.empty()) {
    nlohmann::json mons = nlohmann::json::array();
    for (const auto& [c, gens] : s.monoid_generators) {
      nlohmann::json g = nlohmann::json::array();
      for (const auto& v : gens) g.push_back(to_json(v, s.poset));
      mons.push_back({{"chain", chain_to_string(s.poset, c)}, {"generators", g}});
    }
    j["monoids"] = mons;
    j["saturated"] = s.monoids_saturated;
  }
  return j;
}

StratData strat_from_json(const nlohmann::json& j) {
  try {
    StratData s;
    s.name = j.value("name", std::string("custom"));
    s.m = j.at("m").get<int>();
    std::vector<std::string> labels;
    std::vector<int> ranks;
    for (const auto& e : j.at("elements")) {
      labels.push_back(e.at("label").get<std::string>());
      ranks.push_back(e.at("rank").get<int>());
      s.index_sets.push_back(e.at("index_set").get<IndexSet>());
      std::sort(s.index_sets.back().begin(), s.index_sets.back().end());
      s.degrees.push_back(e.at("degree").get<Degree>());
    }
    std::map<std::string, int> id;
    for (size_t p = 0; p < labels.size(); ++p) id[labels[p]] = static_cast<int>(p);
    auto lookup = [&](const nlohmann::json& x) {
      auto it = id.find(x.get<std::string>());
      if (it == id.end()) throw DomainError("cover references unknown element: " + x.get<std::string>());
      return it->second;
    };
    std::vector<GradedPoset::Edge> covers;
    std::map<GradedPoset::Edge, int> bonds;
    for (const auto& c : j.at("covers")) {
      GradedPoset::Edge e{lookup(c.at("top")), lookup(c.at("bottom"))};
      covers.push_back(e);
      int b = c.value("bond", 1);
      if (b != 1) bonds[e] = b;
    }
    s.poset = GradedPoset(labels, covers, ranks, bonds);
    if (j.contains("monoids")) {
      for (const auto& mon : j.at("monoids")) {
        Chain c = parse_chain(s.poset, mon.at("chain").get<std::string>());
        for (const auto& g : mon.at("generators")) s.monoid_generators[c].push_back(qvector_from_json(g, s.poset));
      }
      s.monoids_saturated = j.value("saturated", false);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad stratification json: ") + e.what());
  }
}

}  // namespace stratkit

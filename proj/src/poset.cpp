#include "stratkit/poset.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "stratkit/rational.hpp"

namespace stratkit {

GradedPoset::GradedPoset(std::vector<std::string> labels, std::vector<Edge> covers,
                         std::vector<int> ranks, std::map<Edge, int> bonds)
    : labels_(std::move(labels)), covers_(std::move(covers)), ranks_(std::move(ranks)),
      bonds_(std::move(bonds)) {
  if (ranks_.size() != labels_.size()) throw ShapeError("ranks and elements differ in size");
  index();
}

void GradedPoset::index() {
  size_t n = labels_.size();
  for (size_t i = 0; i < n; ++i) by_label_.emplace(labels_[i], static_cast<int>(i));
  down_.assign(n, {});
  up_.assign(n, {});
  for (auto [t, b] : covers_) {
    if (t < 0 || b < 0 || t >= static_cast<int>(n) || b >= static_cast<int>(n))
      throw ShapeError("cover refers to unknown element");
    down_[t].push_back(b);
    up_[b].push_back(t);
  }
  auto by_lab = [this](int a, int b) { return labels_[a] < labels_[b]; };
  for (auto& v : down_) std::sort(v.begin(), v.end(), by_lab);
  for (auto& v : up_) std::sort(v.begin(), v.end(), by_lab);

  below_.assign(n, std::vector<bool>(n, false));
  for (size_t p = 0; p < n; ++p) {
    std::vector<int> stack{static_cast<int>(p)};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (below_[p][x]) continue;
      below_[p][x] = true;
      for (int y : down_[x]) stack.push_back(y);
    }
  }
  for (auto [t, b] : covers_)
    if (below_[b][t]) acyclic_ = false;
}

GradedPoset GradedPoset::from_covers(std::vector<std::string> labels, std::vector<Edge> covers,
                                     std::map<Edge, int> bonds) {
  size_t n = labels.size();
  std::vector<std::vector<int>> down(n);
  for (auto [t, b] : covers) {
    if (t < 0 || b < 0 || t >= static_cast<int>(n) || b >= static_cast<int>(n))
      throw ShapeError("cover refers to unknown element");
    down[t].push_back(b);
  }
  std::vector<int> rank(n, -1);
  std::vector<int> state(n, 0);
  std::function<int(int)> visit = [&](int p) -> int {
    if (state[p] == 2) return rank[p];
    if (state[p] == 1) throw DomainError("cover relation has a cycle");
    state[p] = 1;
    int r = 0;
    for (int q : down[p]) r = std::max(r, visit(q) + 1);
    state[p] = 2;
    return rank[p] = r;
  };
  for (size_t p = 0; p < n; ++p) visit(static_cast<int>(p));
  return GradedPoset(std::move(labels), std::move(covers), std::move(rank), std::move(bonds));
}

GradedPoset GradedPoset::from_labels(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& covers,
    const std::map<std::pair<std::string, std::string>, int>& bonds) {
  std::map<std::string, int> id;
  for (size_t i = 0; i < labels.size(); ++i) id[labels[i]] = static_cast<int>(i);
  auto get = [&](const std::string& s) {
    auto it = id.find(s);
    if (it == id.end()) throw DomainError("unknown element: " + s);
    return it->second;
  };
  std::vector<Edge> cv;
  for (const auto& [t, b] : covers) cv.emplace_back(get(t), get(b));
  std::map<Edge, int> bd;
  for (const auto& [e, v] : bonds) bd[{get(e.first), get(e.second)}] = v;
  return from_covers(labels, std::move(cv), std::move(bd));
}

std::optional<int> GradedPoset::find(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

int GradedPoset::id(const std::string& label) const {
  auto r = find(label);
  if (!r) throw DomainError("unknown element: " + label);
  return *r;
}

bool GradedPoset::is_cover(int top, int bottom) const {
  const auto& d = down_.at(top);
  return std::find(d.begin(), d.end(), bottom) != d.end();
}

int GradedPoset::bond(int top, int bottom) const {
  if (!is_cover(top, bottom))
    throw DomainError("not a cover: " + label(top) + " > " + label(bottom));
  auto it = bonds_.find({top, bottom});
  return it == bonds_.end() ? 1 : it->second;
}

bool GradedPoset::is_chain(const std::vector<int>& elems) const {
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (!comparable(elems[i], elems[j])) return false;
  return true;
}

std::vector<int> GradedPoset::maximal_elements() const {
  std::vector<int> out;
  for (size_t p = 0; p < size(); ++p)
    if (up_[p].empty()) out.push_back(static_cast<int>(p));
  std::sort(out.begin(), out.end(), [this](int a, int b) { return labels_[a] < labels_[b]; });
  return out;
}

std::vector<int> GradedPoset::minimal_elements() const {
  std::vector<int> out;
  for (size_t p = 0; p < size(); ++p)
    if (down_[p].empty()) out.push_back(static_cast<int>(p));
  std::sort(out.begin(), out.end(), [this](int a, int b) { return labels_[a] < labels_[b]; });
  return out;
}

TotalOrder TotalOrder::from_order(std::vector<int> order) {
  TotalOrder t;
  t.pos.assign(order.size(), -1);
  for (size_t i = 0; i < order.size(); ++i) t.pos.at(order[i]) = static_cast<int>(i);
  t.order = std::move(order);
  return t;
}

std::vector<std::string> validate(const GradedPoset& poset) {
  std::vector<std::string> diags;
  std::set<std::string> seen;
  for (const auto& l : poset.labels())
    if (!seen.insert(l).second) diags.push_back("duplicate label: " + l);
  for (size_t p = 0; p < poset.size(); ++p)
    if (poset.rank(static_cast<int>(p)) < 0) diags.push_back("negative rank: " + poset.label(p));

  std::set<GradedPoset::Edge> edges;
  for (auto e : poset.covers()) {
    auto [t, b] = e;
    if (t == b) diags.push_back("self cover: " + poset.label(t));
    if (!edges.insert(e).second)
      diags.push_back("duplicate cover: " + poset.label(t) + " > " + poset.label(b));
  }
  if (!poset.acyclic()) {
    diags.push_back("cyclic cover relation");
    return diags;
  }
  for (auto [t, b] : poset.covers()) {
    if (t == b) continue;
    std::string name = poset.label(t) + " > " + poset.label(b);
    for (int r : poset.lower_covers(t)) {
      if (r != b && poset.leq(b, r)) {
        diags.push_back("transitively redundant cover: " + name);
        break;
      }
    }
    if (poset.rank(t) != poset.rank(b) + 1) diags.push_back("rank gap: " + name);
  }
  for (const auto& [e, v] : poset.explicit_bonds()) {
    if (!edges.count(e)) diags.push_back("bond on a non-cover pair");
    else if (v < 1)
      diags.push_back("bond < 1: " + poset.label(e.first) + " > " + poset.label(e.second));
  }
  auto chains = maximal_chains(poset);
  std::set<size_t> lens;
  for (const auto& c : chains) lens.insert(c.size());
  if (lens.size() > 1) diags.push_back("maximal chains of different lengths");
  return diags;
}

std::vector<Chain> maximal_chains(const GradedPoset& poset) {
  std::vector<Chain> out;
  Chain cur;
  std::function<void(int)> dfs = [&](int p) {
    cur.push_back(p);
    const auto& d = poset.lower_covers(p);
    if (d.empty()) out.push_back(cur);
    for (int q : d) dfs(q);
    cur.pop_back();
  };
  for (int p : poset.maximal_elements()) dfs(p);
  auto key = [&](const Chain& c) {
    std::vector<std::string> k;
    for (int p : c) k.push_back(poset.label(p));
    return k;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const Chain& a, const Chain& b) { return key(a) < key(b); });
  return out;
}

TotalOrder linearize(const GradedPoset& poset) {
  std::vector<int> order(poset.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (poset.rank(a) != poset.rank(b)) return poset.rank(a) > poset.rank(b);
    return poset.label(a) < poset.label(b);
  });
  return TotalOrder::from_order(std::move(order));
}

TotalOrder random_linear_extension(const GradedPoset& poset, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  size_t n = poset.size();
  std::vector<int> remaining_up(n);
  for (size_t p = 0; p < n; ++p) remaining_up[p] = static_cast<int>(poset.upper_covers(p).size());
  std::vector<int> ready;
  for (size_t p = 0; p < n; ++p)
    if (remaining_up[p] == 0) ready.push_back(static_cast<int>(p));
  std::vector<int> order;
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end());
    std::uniform_int_distribution<size_t> pick(0, ready.size() - 1);
    size_t k = pick(rng);
    int p = ready[k];
    ready.erase(ready.begin() + static_cast<long>(k));
    order.push_back(p);
    for (int q : poset.lower_covers(p))
      if (--remaining_up[q] == 0) ready.push_back(q);
  }
  if (order.size() != n) throw DomainError("poset has a cycle");
  return TotalOrder::from_order(std::move(order));
}

bool refines(const GradedPoset& poset, const TotalOrder& order) {
  for (size_t a = 0; a < poset.size(); ++a)
    for (size_t b = 0; b < poset.size(); ++b)
      if (a != b && poset.leq(static_cast<int>(b), static_cast<int>(a)) &&
          !order.greater(static_cast<int>(a), static_cast<int>(b)))
        return false;
  return true;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_hasse(const GradedPoset& poset) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  TotalOrder t = linearize(poset);
  for (int p : t.order) os << "  " << dot_quote(poset.label(p)) << ";\n";
  std::vector<GradedPoset::Edge> edges = poset.covers();
  std::sort(edges.begin(), edges.end(), [&](auto a, auto b) {
    return std::make_pair(t.pos[a.first], t.pos[a.second]) <
           std::make_pair(t.pos[b.first], t.pos[b.second]);
  });
  for (auto [a, b] : edges) {
    os << "  " << dot_quote(poset.label(a)) << " -> " << dot_quote(poset.label(b));
    int bd = poset.bond(a, b);
    if (bd != 1) os << " [label=\"" << bd << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string chain_to_string(const GradedPoset& poset, const Chain& chain) {
  std::string s;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (i) s += " > ";
    s += poset.label(chain[i]);
  }
  return s;
}

Chain parse_chain(const GradedPoset& poset, const std::string& text) {
  Chain c;
  std::string cur;
  auto flush = [&] {
    std::string t;
    for (char ch : cur)
      if (ch != ' ') t += ch;
    if (t.empty()) throw DomainError("empty element in chain: " + text);
    c.push_back(poset.id(t));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '>') flush();
    else cur += ch;
  }
  flush();
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (!(poset.leq(c[i + 1], c[i]) && c[i] != c[i + 1]))
      throw DomainError("not a descending chain: " + text);
  return c;
}

nlohmann::json to_json(const GradedPoset& poset) {
  nlohmann::json j;
  j["elements"] = poset.labels();
  j["covers"] = nlohmann::json::array();
  j["bonds"] = nlohmann::json::array();
  j["ranks"] = nlohmann::json::object();
  for (size_t p = 0; p < poset.size(); ++p) j["ranks"][poset.label(p)] = poset.rank(p);
  for (auto [a, b] : poset.covers()) {
    j["covers"].push_back({poset.label(a), poset.label(b)});
    int bd = poset.bond(a, b);
    if (bd != 1) j["bonds"].push_back({poset.label(a), poset.label(b), bd});
  }
  return j;
}

GradedPoset poset_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> labels = j.at("elements").get<std::vector<std::string>>();
    std::map<std::string, int> id;
    for (size_t i = 0; i < labels.size(); ++i) id[labels[i]] = static_cast<int>(i);
    auto get = [&](const std::string& s) {
      auto it = id.find(s);
      if (it == id.end()) throw DomainError("unknown element: " + s);
      return it->second;
    };
    std::vector<GradedPoset::Edge> covers;
    for (const auto& c : j.at("covers"))
      covers.emplace_back(get(c.at(0).get<std::string>()), get(c.at(1).get<std::string>()));
    std::map<GradedPoset::Edge, int> bonds;
    if (j.contains("bonds"))
      for (const auto& b : j.at("bonds"))
        bonds[{get(b.at(0).get<std::string>()), get(b.at(1).get<std::string>())}] =
            b.at(2).get<int>();
    if (!j.contains("ranks")) return GradedPoset::from_covers(labels, covers, bonds);
    std::vector<int> ranks(labels.size(), 0);
    for (const auto& [k, v] : j.at("ranks").items()) ranks.at(get(k)) = v.get<int>();
    return GradedPoset(labels, covers, ranks, bonds);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad poset json: ") + e.what());
  }
}

}  // namespace stratkit

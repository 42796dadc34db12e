#include "stratkit/valuation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace stratkit {

MultiGradedPoly::MultiGradedPoly(std::vector<std::string> vars, std::vector<Degree> degrees)
    : vars_(std::move(vars)), degs_(std::move(degrees)) {
  if (vars_.size() != degs_.size()) throw ShapeError("one degree per variable required");
}

MultiGradedPoly MultiGradedPoly::constant(const MultiGradedPoly& like, const Q& c) {
  MultiGradedPoly p(like.vars_, like.degs_);
  p.add_term(Exponent(like.vars_.size(), 0), c);
  return p;
}

MultiGradedPoly MultiGradedPoly::variable(const MultiGradedPoly& like, const std::string& name) {
  auto it = std::find(like.vars_.begin(), like.vars_.end(), name);
  if (it == like.vars_.end()) throw DomainError("unknown variable: " + name);
  MultiGradedPoly p(like.vars_, like.degs_);
  Exponent e(like.vars_.size(), 0);
  e[it - like.vars_.begin()] = 1;
  p.add_term(e, 1);
  return p;
}

void MultiGradedPoly::add_term(const Exponent& e, const Q& c) {
  if (e.size() != vars_.size()) throw ShapeError("exponent length differs from variable count");
  Q v = terms_[e] + c;
  if (v == 0) terms_.erase(e);
  else terms_[e] = v;
}

Degree MultiGradedPoly::degree_of(const Exponent& e) const {
  size_t m = degs_.empty() ? 0 : degs_[0].size();
  Degree d(m, 0);
  for (size_t v = 0; v < e.size(); ++v)
    for (size_t i = 0; i < m; ++i) d[i] += e[v] * degs_[v][i];
  return d;
}

bool MultiGradedPoly::is_homogeneous() const { return components().size() <= 1; }

Degree MultiGradedPoly::degree() const {
  auto c = components();
  if (c.size() != 1) throw DomainError("polynomial is not multihomogeneous");
  return c.begin()->first;
}

std::map<Degree, MultiGradedPoly> MultiGradedPoly::components() const {
  std::map<Degree, MultiGradedPoly> out;
  for (const auto& [e, c] : terms_) {
    auto it = out.try_emplace(degree_of(e), vars_, degs_).first;
    it->second.add_term(e, c);
  }
  return out;
}

void MultiGradedPoly::check_same(const MultiGradedPoly& o) const {
  if (vars_ != o.vars_) throw ShapeError("polynomials over different variables");
}

MultiGradedPoly MultiGradedPoly::operator+(const MultiGradedPoly& o) const {
  check_same(o);
  MultiGradedPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiGradedPoly MultiGradedPoly::operator-(const MultiGradedPoly& o) const {
  check_same(o);
  MultiGradedPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiGradedPoly MultiGradedPoly::operator*(const MultiGradedPoly& o) const {
  check_same(o);
  MultiGradedPoly r(vars_, degs_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiGradedPoly MultiGradedPoly::pow(int k) const {
  if (k < 0) throw DomainError("negative power");
  MultiGradedPoly r = constant(*this, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string MultiGradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // Highest exponents first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[v];
      if (e[v] != 1) mono += "^" + std::to_string(e[v]);
    }
    Q a = abs(c);
    std::string coeff = (a == 1 && !mono.empty()) ? "" : to_string(a);
    if (!coeff.empty() && !mono.empty()) coeff += "*";
    if (first) s += (c < 0 ? "-" : "");
    else s += (c < 0 ? " - " : " + ");
    s += coeff + mono;
    first = false;
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const MultiGradedPoly& like) : s_(text), like_(like) {}

  MultiGradedPoly parse() {
    MultiGradedPoly p = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse polynomial at position " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  MultiGradedPoly sum() {
    MultiGradedPoly acc(like_.variables(), like_.variable_degrees());
    bool neg = false;
    if (peek('+')) ++i_;
    else if (peek('-')) {
      ++i_;
      neg = true;
    }
    while (true) {
      MultiGradedPoly t = product();
      acc = neg ? acc - t : acc + t;
      if (peek('+')) {
        ++i_;
        neg = false;
      } else if (peek('-')) {
        ++i_;
        neg = true;
      } else {
        break;
      }
    }
    return acc;
  }

  MultiGradedPoly product() {
    MultiGradedPoly acc = power();
    while (true) {
      if (peek('*')) {
        ++i_;
        acc = acc * power();
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiGradedPoly power() {
    MultiGradedPoly base = atom();
    if (peek('^')) {
      ++i_;
      skip();
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("exponent expected");
      base = base.pow(std::stoi(s_.substr(start, i_ - start)));
    }
    return base;
  }

  MultiGradedPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("operand expected");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      MultiGradedPoly inner = sum();
      if (!peek(')')) fail("')' expected");
      ++i_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      }
      return MultiGradedPoly::constant(like_, parse_q(s_.substr(start, i_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      return MultiGradedPoly::variable(like_, s_.substr(start, i_ - start));
    }
    fail("unexpected character");
  }

  std::string s_;
  const MultiGradedPoly& like_;
  size_t i_ = 0;
};

}  // namespace

MultiGradedPoly parse_poly(const std::string& text, const MultiGradedPoly& like) {
  return PolyParser(text, like).parse();
}

std::map<Exponent, Q> ChainChart::pullback(const MultiGradedPoly& g) const {
  if (g.variables().size() != substitution.size()) throw ShapeError("chart and polynomial variables differ");
  std::map<Exponent, Q> out;
  for (const auto& [e, c] : g.terms()) {
    Exponent t(chain.size(), 0);
    for (size_t v = 0; v < e.size(); ++v)
      for (size_t k = 0; k < t.size(); ++k) t[k] += e[v] * substitution[v][k];
    Q val = out[t] + c;
    if (val == 0) out.erase(t);
    else out[t] = val;
  }
  return out;
}

const ChainChart& ChartAtlas::chart(const Chain& c) const {
  for (const auto& ch : charts)
    if (ch.chain == c) return ch;
  throw DomainError("no chart for the chain");
}

ChartAtlas builtin_atlas(const StratData& s) {
  if (s.name != "y0y1") throw DomainError("no charts available for " + s.name);
  ChartAtlas a;
  a.ring = MultiGradedPoly({"x0", "x1", "y0", "y1"}, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
  auto P = [&](const std::string& t) { return parse_poly(t, a.ring); };
  auto id = [&](const char* l) { return s.poset.id(l); };
  a.relations = {P("x0*y1 - x1*y0")};
  a.extremal = {{id("X"), P("y0*y1")},  {id("00b"), P("y0")}, {id("01"), P("x0*x1")},
                {id("11b"), P("y1")},   {id("0"), P("x0")},   {id("1"), P("x1")}};
  a.vanishing = {{id("X"), {}},
                 {id("00b"), {"x1", "y1"}},
                 {id("01"), {"y0", "y1"}},
                 {id("11b"), {"x0", "y0"}},
                 {id("0"), {"x1", "y0", "y1"}},
                 {id("1"), {"x0", "y0", "y1"}}};
  // Substitutions for x0, x1, y0, y1; exponents of (t2, t1, t0).
  a.charts = {
      {parse_chain(s.poset, "X>00b>0"), {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}, {1, 1, 0}}},
      {parse_chain(s.poset, "X>01>0"), {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}}},
      {parse_chain(s.poset, "X>01>1"), {{0, 1, 1}, {0, 0, 1}, {1, 1, 1}, {1, 0, 1}}},
      {parse_chain(s.poset, "X>11b>1"), {{1, 0, 1}, {0, 0, 1}, {1, 1, 0}, {0, 1, 0}}},
  };
  return a;
}

namespace {

using Laurent = std::map<Exponent, Q>;

Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) {
      Exponent e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      Q v = r[e] + c1 * c2;
      if (v == 0) r.erase(e);
      else r[e] = v;
    }
  return r;
}

Laurent power(const Laurent& a, int k) {
  Laurent r{{Exponent(a.begin()->first.size(), 0), Q(1)}};
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int bond_at(const Chain& c, size_t t, const StratData& s) {
  return t + 1 < c.size() ? s.poset.bond(c[t], c[t + 1]) : s.bottom_bond(c[t]);
}

}  // namespace

ChainValuation chain_valuation(const MultiGradedPoly& g, const ChainChart& chart, const StratData& s,
                               const ChartAtlas& atlas) {
  const Chain& c = chart.chain;
  ChainValuation res;
  res.chain = c;
  Laurent cur = chart.pullback(g);
  if (cur.empty()) throw DomainError("g vanishes on chart");
  Q weight = 1;
  for (size_t t = 0; t < c.size(); ++t) {
    int b = bond_at(c, t, s);
    int nu = std::min_element(cur.begin(), cur.end(), [&](const auto& x, const auto& y) {
               return x.first[t] < y.first[t];
             })->first[t];
    Laurent lead;
    for (const auto& [e, coef] : cur)
      if (e[t] == nu) lead[e] = coef;
    auto fit = atlas.extremal.find(c[t]);
    if (fit == atlas.extremal.end()) throw DomainError("missing extremal function for " + s.poset.label(c[t]));
    Laurent f = chart.pullback(fit->second);
    if (f.size() != 1) throw DomainError("extremal function pullback must be a monomial");
    // g_{next} = lead^b / f^nu, then forget t (its exponent is now zero).
    Laurent next = power(lead, b);
    const auto& [fe, fc] = *f.begin();
    Laurent divided;
    for (const auto& [e, coef] : next) {
      Exponent ne = e;
      for (size_t k = 0; k < ne.size(); ++k) ne[k] -= nu * fe[k];
      Q fpow = 1;
      for (int k = 0; k < std::abs(nu); ++k) fpow *= fc;
      Q v = nu >= 0 ? Q(coef / fpow) : Q(coef * fpow);
      ne[t] = 0;
      divided[ne] += v;
    }
    std::erase_if(divided, [](const auto& kv) { return kv.second == 0; });
    weight *= b;
    res.nu.push_back(nu);
    res.bond.push_back(b);
    res.value.add(c[t], Q(nu) / weight);
    cur = divided;
    if (cur.empty()) throw DomainError("restriction vanished during the recursion");
  }
  return res;
}

ValuationResult quasi_valuation(const MultiGradedPoly& g, const ChartAtlas& atlas, const StratData& s,
                                const TotalOrder& order) {
  if (g.is_zero()) throw DomainError("quasi-valuation of zero");
  ValuationResult r;
  auto chains = maximal_chains(s.poset);
  for (const auto& c : chains) r.per_chain.push_back(chain_valuation(g, atlas.chart(c), s, atlas));
  size_t best = 0;
  for (size_t i = 1; i < r.per_chain.size(); ++i)
    if (lex_compare(r.per_chain[i].value, r.per_chain[best].value, order) < 0) best = i;
  r.value = r.per_chain[best].value;
  r.chain = r.per_chain[best].chain;
  if (!r.value.non_negative()) throw std::logic_error("quasi-valuation has a negative entry");
  if (g.is_homogeneous()) {
    Degree d = g.degree();
    QVec dv = degree_map(r.value, s);
    for (size_t i = 0; i < d.size(); ++i)
      if (dv[i] != d[i]) throw std::logic_error("quasi-valuation is not degree compatible");
  }
  return r;
}

QVector min_homogeneous_components(const MultiGradedPoly& h, const ChartAtlas& atlas, const StratData& s,
                                   const TotalOrder& order) {
  if (h.is_zero()) throw DomainError("quasi-valuation of zero");
  std::optional<QVector> best;
  for (const auto& [d, part] : h.components()) {
    QVector v = quasi_valuation(part, atlas, s, order).value;
    if (!best || lex_compare(v, *best, order) < 0) best = v;
  }
  QVector direct = quasi_valuation(h, atlas, s, order).value;
  if (direct != *best) throw std::logic_error("minimum over homogeneous components differs from the direct value");
  return *best;
}

std::vector<std::string> validate_chart(const ChainChart& chart, const StratData& s, const ChartAtlas& atlas) {
  std::vector<std::string> out;
  const Chain& c = chart.chain;
  const auto& vars = atlas.ring.variables();
  if (chart.substitution.size() != vars.size()) {
    out.push_back("substitution has wrong number of variables");
    return out;
  }
  for (const auto& e : chart.substitution)
    if (e.size() != c.size()) {
      out.push_back("substitution exponent has wrong length");
      return out;
    }
  for (const auto& rel : atlas.relations)
    if (!chart.pullback(rel).empty()) out.push_back("relation not annihilated: " + rel.str());
  auto vanishes = [&](int p, size_t v) {
    auto it = atlas.vanishing.find(p);
    if (it == atlas.vanishing.end()) return false;
    return std::find(it->second.begin(), it->second.end(), vars[v]) != it->second.end();
  };
  for (size_t t = 0; t + 1 < c.size(); ++t) {
    std::string e = s.poset.label(c[t]) + " > " + s.poset.label(c[t + 1]);
    for (size_t v = 0; v < vars.size(); ++v) {
      int ord = chart.substitution[v][t];
      if (vanishes(c[t + 1], v) && !vanishes(c[t], v) && ord <= 0)
        out.push_back("coordinate " + vars[v] + " does not vanish along " + e);
      if (!vanishes(c[t + 1], v) && ord != 0) out.push_back("coordinate " + vars[v] + " vanishes along " + e);
    }
  }
  for (size_t t = 0; t < c.size(); ++t) {
    auto it = atlas.extremal.find(c[t]);
    if (it == atlas.extremal.end()) {
      out.push_back("missing extremal function for " + s.poset.label(c[t]));
      continue;
    }
    auto f = chart.pullback(it->second);
    if (f.size() != 1) {
      out.push_back("extremal function of " + s.poset.label(c[t]) + " does not pull back to a monomial");
      continue;
    }
    const Exponent& fe = f.begin()->first;
    for (size_t u = 0; u < t; ++u)
      if (fe[u] != 0) out.push_back("extremal function of " + s.poset.label(c[t]) + " vanishes on its stratum");
    int expected = t + 1 < c.size() ? s.poset.bond(c[t], c[t + 1]) : s.bottom_bond(c[t]);
    if (fe[t] != expected)
      out.push_back("bond mismatch at " + s.poset.label(c[t]) + ": chart gives " + std::to_string(fe[t]) +
                    ", poset has " + std::to_string(expected));
  }
  return out;
}

}  // namespace stratkit

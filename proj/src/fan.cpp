#include "stratkit/fan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "stratkit/linalg.hpp"

namespace stratkit {

namespace {

Q dot(const QVec& a, const QVec& b) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Scales so the first non-zero entry has absolute value 1.
QVec normalize(QVec a) {
  for (const auto& x : a)
    if (x != 0) {
      Q f = abs(x);
      for (auto& y : a) y /= f;
      break;
    }
  return a;
}

Q total(const QVec& v) {
  Q s = 0;
  for (const auto& x : v) s += x;
  return s;
}

void require_subset(const QVector& v, const Chain& c) {
  for (int p : v.support())
    if (std::find(c.begin(), c.end(), p) == c.end()) throw DomainError("support not contained in the chain");
}

bool support_in(const QVector& v, const Chain& c) {
  for (int p : v.support())
    if (std::find(c.begin(), c.end(), p) == c.end()) return false;
  return true;
}

// Greatest and least element of the support, which must be a chain.
int max_supp(const QVector& v, const GradedPoset& poset) {
  auto s = v.support();
  return *std::max_element(s.begin(), s.end(), [&](int a, int b) { return poset.rank(a) < poset.rank(b); });
}

int min_supp(const QVector& v, const GradedPoset& poset) {
  auto s = v.support();
  return *std::min_element(s.begin(), s.end(), [&](int a, int b) { return poset.rank(a) < poset.rank(b); });
}

// Deterministic order: chain coordinates, larger entries at the top first.
bool chain_order(const QVector& a, const QVector& b, const GradedPoset& poset) {
  auto o = linearize(poset);
  return lex_compare(a, b, o) > 0;
}

}  // namespace

QVec degree_map(const QVector& v, const StratData& s) {
  QVec d(s.m, Q(0));
  for (const auto& [p, c] : v.entries()) {
    if (p < 0 || p >= static_cast<int>(s.size())) throw DomainError("unknown element in vector");
    for (int i = 0; i < s.m; ++i) d[i] += c * s.degrees[p][i];
  }
  return d;
}

std::string flavor_name(MonoidFlavor f) {
  switch (f) {
    case MonoidFlavor::FreeHodge: return "free-hodge";
    case MonoidFlavor::LS: return "ls";
    case MonoidFlavor::Explicit: return "explicit";
  }
  return "";
}

bool ConeHrep::contains(const QVec& x) const {
  for (const auto& a : equations)
    if (dot(a, x) != 0) return false;
  for (const auto& a : inequalities)
    if (dot(a, x) < 0) return false;
  return true;
}

ConeHrep cone_hrep(const std::vector<QVec>& gens_in, size_t dim) {
  std::vector<QVec> gens;
  for (const auto& g : gens_in)
    if (std::any_of(g.begin(), g.end(), [](const Q& x) { return x != 0; })) gens.push_back(g);
  ConeHrep h;
  if (gens.empty()) {
    for (size_t i = 0; i < dim; ++i) {
      QVec e(dim, Q(0));
      e[i] = 1;
      h.equations.push_back(e);
    }
    return h;
  }
  h.equations = linalg::nullspace(gens, dim);
  auto rr = linalg::rref(gens);
  std::vector<QVec> span(rr.r.begin(), rr.r.begin() + rr.pivots.size());
  size_t k = span.size();
  std::set<QVec> found;
  std::vector<size_t> pick;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (pick.size() == k - 1) {
      // Normal inside the span, orthogonal to the picked generators.
      QMat m;
      for (size_t g : pick) {
        QVec row;
        for (const auto& sv : span) row.push_back(dot(sv, gens[g]));
        m.push_back(row);
      }
      auto ns = linalg::nullspace(m, k);
      if (ns.size() != 1) return;
      QVec a(dim, Q(0));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < dim; ++j) a[j] += ns[0][i] * span[i][j];
      bool pos = false, neg = false;
      for (const auto& g : gens) {
        Q v = dot(a, g);
        if (v > 0) pos = true;
        if (v < 0) neg = true;
      }
      if (pos && neg) return;
      if (!pos && !neg) return;
      if (neg)
        for (auto& x : a) x = -x;
      found.insert(normalize(a));
      return;
    }
    for (size_t g = start; g < gens.size(); ++g) {
      pick.push_back(g);
      rec(g + 1);
      pick.pop_back();
    }
  };
  rec(0);
  h.inequalities.assign(found.begin(), found.end());
  return h;
}

bool LatticeDesc::contains(const QVec& coords) const {
  if (membership) {
    for (const auto& x : linalg::mul(*membership, coords))
      if (!is_integer(x)) return false;
    return true;
  }
  return linalg::integer_combination(basis, coords).has_value();
}

bool LatticeDesc::contains(const QVector& v) const {
  if (!support_in(v, chain)) return false;
  return contains(v.on_chain(chain));
}

bool MonoidDesc::contains(const QVector& v) const {
  if (!support_in(v, chain)) return false;
  QVec x = v.on_chain(chain);
  if (!cone.contains(x) || !lattice.contains(x)) return false;
  if (saturated) return true;
  // Exact search over generator sums.
  std::vector<QVec> g;
  for (const auto& gen : generators) g.push_back(gen.on_chain(chain));
  std::set<QVec> dead;
  std::function<bool(const QVec&)> rec = [&](const QVec& r) {
    if (std::all_of(r.begin(), r.end(), [](const Q& q) { return q == 0; })) return true;
    if (dead.count(r)) return false;
    for (const auto& gv : g) {
      QVec rest = r;
      bool ok = true;
      for (size_t i = 0; i < r.size(); ++i) {
        rest[i] -= gv[i];
        if (rest[i] < 0) ok = false;
      }
      if (ok && rec(rest)) return true;
    }
    dead.insert(r);
    return false;
  };
  return rec(x);
}

LatticeDesc ls_lattice(const GradedPoset& poset, const Chain& c) {
  const size_t n = c.size();
  for (size_t t = 0; t + 1 < n; ++t)
    if (!poset.is_cover(c[t], c[t + 1])) throw DomainError("LS lattice needs a chain of covers");
  LatticeDesc l;
  l.chain = c;
  // Coordinates top-down: position t holds p_{n-1-t}.
  for (size_t t = 0; t + 1 < n; ++t) {
    Q b = poset.bond(c[t], c[t + 1]);
    QVec v(n, Q(0));
    v[t] = 1 / b;
    v[t + 1] = -1 / b;
    l.basis.push_back(v);
  }
  QVec bottom(n, Q(0));
  bottom[n - 1] = 1;
  l.basis.push_back(bottom);
  QMat b;
  for (size_t t = 0; t + 1 < n; ++t) {
    QVec row(n, Q(0));
    Q bond = poset.bond(c[t], c[t + 1]);
    for (size_t u = 0; u <= t; ++u) row[u] = bond;
    b.push_back(row);
  }
  b.push_back(QVec(n, Q(1)));
  l.membership = b;
  return l;
}

bool ls_lattice_contains(const GradedPoset& poset, const Chain& c, const QVector& v) {
  return ls_lattice(poset, c).contains(v);
}

LatticeDesc lattice_from_valuations(const Chain& c, const std::vector<QVector>& vals) {
  const size_t n = c.size();
  if (vals.size() != n) throw ShapeError("need one valuation per chain element");
  QMat m(n, QVec(n, Q(0)));
  for (size_t j = 0; j < n; ++j) {
    require_subset(vals[j], c);
    QVec col = vals[j].on_chain(c);
    for (size_t t = 0; t < n; ++t) {
      if (t < j && col[t] != 0) throw ShapeError("valuations are not triangular");
      m[t][j] = col[t];
    }
    if (col[j] == 0) throw ShapeError("valuations are not triangular");
  }
  auto inv = linalg::inverse(m);
  if (!inv) throw DomainError("valuation matrix is singular");
  for (const auto& row : *inv)
    for (const auto& x : row)
      if (!is_integer(x)) throw DomainError("B_C is not integral");
  LatticeDesc l;
  l.chain = c;
  for (const auto& v : vals) l.basis.push_back(v.on_chain(c));
  l.membership = *inv;
  return l;
}

namespace {

QVector from_coords(const Chain& c, const QVec& x) { return QVector::from_chain(c, x); }

// Keeps the generators that are not a sum of a generator and a non-zero element.
std::vector<QVector> irreducible(const std::vector<QVector>& cand, const MonoidDesc& m) {
  std::vector<QVector> out;
  for (size_t i = 0; i < cand.size(); ++i) {
    bool red = false;
    for (size_t j = 0; j < cand.size() && !red; ++j) {
      if (i == j || cand[i] == cand[j]) continue;
      QVector rest = cand[i] - cand[j];
      if (!rest.is_zero() && rest.non_negative() && m.contains(rest)) red = true;
    }
    if (!red && std::find(out.begin(), out.end(), cand[i]) == out.end()) out.push_back(cand[i]);
  }
  return out;
}

}  // namespace

MonoidDesc gamma_for_chain(const StratData& s, const Chain& c, GammaSource source) {
  if (c.empty() || !s.poset.is_chain(c)) throw DomainError("not a chain");
  MonoidDesc m;
  m.chain = c;
  const size_t n = c.size();
  auto explicit_it = s.monoid_generators.find(c);
  Classification cls = classify(s);

  std::vector<QVec> units;
  for (size_t t = 0; t < n; ++t) {
    QVec e(n, Q(0));
    e[t] = 1;
    units.push_back(e);
  }

  if (source == GammaSource::Auto && cls.is_hodge) {
    m.flavor = MonoidFlavor::FreeHodge;
    for (int p : c) m.generators.push_back(QVector::unit(p));
    m.lattice.chain = c;
    m.lattice.basis = units;
    m.lattice.membership = linalg::identity(n);
    m.cone = cone_hrep(units, n);
    return m;
  }
  if (source == GammaSource::Auto && cls.is_ls_candidate) {
    m.flavor = MonoidFlavor::LS;
    m.lattice = ls_lattice(s.poset, c);
    m.cone = cone_hrep(units, n);
    Z big = 1;
    for (size_t t = 0; t + 1 < n; ++t) big = lcm(big, Z(s.poset.bond(c[t], c[t + 1])));
    long N = big.get_si();
    // Lattice points of (1/N)Z^C in the half-open unit cube.
    std::vector<QVector> cand;
    for (int p : c) cand.push_back(QVector::unit(p));
    std::vector<long> idx(n, 0);
    while (true) {
      size_t t = 0;
      while (t < n && ++idx[t] == N) idx[t++] = 0;
      if (t == n) break;
      QVec x(n);
      for (size_t u = 0; u < n; ++u) x[u] = make_q(idx[u], N);
      if (m.lattice.contains(x)) cand.push_back(from_coords(c, x));
    }
    m.generators = irreducible(cand, m);
    std::sort(m.generators.begin(), m.generators.end(),
              [&](const QVector& a, const QVector& b) { return chain_order(a, b, s.poset); });
    return m;
  }
  if (explicit_it == s.monoid_generators.end())
    throw DomainError("explicit generators required for chain " + chain_to_string(s.poset, c));
  m.flavor = MonoidFlavor::Explicit;
  m.saturated = s.monoids_saturated;
  std::vector<QVec> g;
  for (const auto& v : explicit_it->second) {
    require_subset(v, c);
    if (!v.non_negative()) throw DomainError("monoid generators must be non-negative");
    g.push_back(v.on_chain(c));
  }
  m.lattice.chain = c;
  m.lattice.basis = linalg::lattice_basis(g, n);
  m.cone = cone_hrep(g, n);
  m.generators = explicit_it->second;
  m.generators = irreducible(m.generators, m);
  return m;
}

const MonoidDesc& Fan::monoid(const Chain& c) const {
  for (const auto& m : monoids)
    if (m.chain == c) return m;
  throw DomainError("chain has no monoid");
}

bool Fan::contains(const QVector& v) const {
  for (const auto& m : monoids)
    if (m.contains(v)) return true;
  return false;
}

Fan fan_of_monoids(const StratData& s, GammaSource source) {
  Fan f;
  f.strat = s;
  for (const auto& c : maximal_chains(s.poset)) f.monoids.push_back(gamma_for_chain(s, c, source));
  return f;
}

std::vector<QVector> monoid_elements(const MonoidDesc& m, const StratData& s, int bound) {
  std::vector<QVector> gens = m.generators;
  std::vector<Q> deg;
  for (const auto& g : gens) deg.push_back(total(degree_map(g, s)));
  std::set<QVector> seen;
  QVector cur;
  std::function<void(size_t, Q)> rec = [&](size_t j, Q used) {
    if (j == gens.size()) {
      seen.insert(cur);
      return;
    }
    rec(j + 1, used);
    QVector save = cur;
    Q u = used;
    while (u + deg[j] <= bound) {
      u += deg[j];
      cur += gens[j];
      rec(j + 1, u);
    }
    cur = save;
  };
  rec(0, Q(0));
  std::vector<QVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const QVector& a, const QVector& b) {
    Q da = total(degree_map(a, s)), db = total(degree_map(b, s));
    if (da != db) return da < db;
    return chain_order(a, b, s.poset);
  });
  return out;
}

std::vector<QVector> veronese_generators(const MonoidDesc& m, const StratData& s, const std::vector<int>& d) {
  if (static_cast<int>(d.size()) != s.m) throw ShapeError("degree has wrong length");
  if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) return {};
  for (int x : d)
    if (x < 0) throw ShapeError("negative degree");
  const auto& gens = m.generators;
  const size_t ng = gens.size();
  if (ng > 20) throw DomainError("too many generators for the Veronese search");
  std::vector<QVec> D;
  for (const auto& g : gens) D.push_back(degree_map(g, s));
  QVec dq(d.begin(), d.end());
  size_t lead = 0;
  while (d[lead] == 0) ++lead;

  // Equations forcing deg(sum n_j g_j) into the line through d.
  auto perp = linalg::nullspace(QMat{dq}, s.m);
  QMat A;
  for (const auto& w : perp) {
    QVec row;
    for (const auto& Dj : D) row.push_back(dot(w, Dj));
    A.push_back(row);
  }

  // Extreme rays of {n >= 0 : A n = 0}: minimal-support solutions.
  std::vector<std::pair<ZVec, Z>> rays;  // (n, k)
  for (unsigned long mask = 1; mask < (1ul << ng); ++mask) {
    std::vector<size_t> cols;
    for (size_t j = 0; j < ng; ++j)
      if (mask >> j & 1) cols.push_back(j);
    QMat sub;
    for (const auto& row : A) {
      QVec r;
      for (size_t j : cols) r.push_back(row[j]);
      sub.push_back(r);
    }
    std::vector<QVec> ns = A.empty() ? std::vector<QVec>{} : linalg::nullspace(sub, cols.size());
    if (A.empty()) {
      if (cols.size() != 1) continue;
      ns = {QVec{Q(1)}};
    }
    if (ns.size() != 1) continue;
    QVec v = ns[0];
    if (v[0] < 0)
      for (auto& x : v) x = -x;
    if (!std::all_of(v.begin(), v.end(), [](const Q& x) { return x > 0; })) continue;
    Z den = linalg::lcm_den(v);
    ZVec n(ng, Z(0));
    Z g = 0;
    for (size_t i = 0; i < cols.size(); ++i) {
      n[cols[i]] = Q(v[i] * den).get_num();
      g = gcd(g, n[cols[i]]);
    }
    for (auto& x : n) x /= g;
    Q k = 0;
    for (size_t j = 0; j < ng; ++j) k += Q(n[j]) * D[j][lead];
    k /= d[lead];
    Z kd = k.get_den();
    for (auto& x : n) x *= kd;
    rays.emplace_back(n, Q(k * kd).get_num());
  }
  if (rays.empty()) return {};
  QMat rm;
  Z max_k = 0, max_norm = 0;
  for (const auto& [n, k] : rays) {
    QVec r;
    Z norm = 0;
    for (const auto& x : n) {
      r.push_back(Q(x));
      norm += x;
    }
    rm.push_back(r);
    max_k = std::max(max_k, k);
    max_norm = std::max(max_norm, norm);
  }
  Z dim = linalg::rank(rm);
  // Hilbert basis elements lie in the half-open parallelepiped of dim rays.
  Q k_bound = Q(dim * max_k);
  Z n_bound = dim * max_norm;

  std::vector<std::pair<Z, QVector>> found;
  std::set<QVector> seen;
  ZVec n(ng, Z(0));
  QVec partial(s.m, Q(0));
  std::function<void(size_t, Z)> rec = [&](size_t j, Z used) {
    if (j == ng) {
      if (used == 0) return;
      Q k = partial[lead] / d[lead];
      if (!is_integer(k)) return;
      for (int i = 0; i < s.m; ++i)
        if (partial[i] != k * d[i]) return;
      QVector x;
      for (size_t t = 0; t < ng; ++t)
        if (n[t] != 0) x += Q(n[t]) * gens[t];
      if (seen.insert(x).second) found.emplace_back(k.get_num(), x);
      return;
    }
    rec(j + 1, used);
    Z c = 0;
    QVec save = partial;
    while (used + c + 1 <= n_bound) {
      bool ok = true;
      for (int i = 0; i < s.m; ++i) {
        partial[i] += D[j][i];
        if (partial[i] > k_bound * d[i]) ok = false;
      }
      if (!ok) break;
      ++c;
      n[j] = c;
      rec(j + 1, used + c);
    }
    n[j] = 0;
    partial = save;
  };
  rec(0, Z(0));
  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return chain_order(a.second, b.second, s.poset);
  });
  std::vector<QVector> out;
  for (const auto& [k, x] : found) {
    bool red = false;
    for (const auto& [k2, y] : found) {
      if (k2 >= k) break;
      QVector rest = x - y;
      if (rest.non_negative() && m.contains(rest)) {
        red = true;
        break;
      }
    }
    if (!red) out.push_back(x);
  }
  return out;
}

namespace {

Q total_degree(const QVector& v, const StratData& s) { return total(degree_map(v, s)); }

const MonoidDesc* monoid_for(const QVector& v, const Fan& fan) {
  for (const auto& m : fan.monoids)
    if (m.contains(v)) return &m;
  return nullptr;
}

bool ordered(const QVector& upper, const QVector& lower, const GradedPoset& poset) {
  if (upper.is_zero() || lower.is_zero()) return true;
  return poset.leq(max_supp(lower, poset), min_supp(upper, poset));
}

bool decomposable_in(const QVector& a, const MonoidDesc& m, const std::vector<QVector>& elems, const GradedPoset& poset) {
  if (a.is_zero()) return true;
  for (const auto& b : elems) {
    if (b.is_zero() || b == a || !b.leq_componentwise(a)) continue;
    QVector c = a - b;
    if (m.contains(c) && ordered(b, c, poset)) return true;
  }
  return false;
}

}  // namespace

bool is_decomposable(const QVector& a, const Fan& fan) {
  if (a.is_zero()) return true;
  const MonoidDesc* m = monoid_for(a, fan);
  if (!m) throw DomainError("element is not in the fan of monoids");
  Q deg = total_degree(a, fan.strat);
  auto elems = monoid_elements(*m, fan.strat, static_cast<int>(floor_q(deg).get_si()));
  return decomposable_in(a, *m, elems, fan.strat.poset);
}

std::vector<QVector> indecomposables(const Fan& fan, int bound) {
  const StratData& s = fan.strat;
  if (bound <= 0)
    for (const auto& m : fan.monoids)
      for (const auto& g : m.generators) bound = std::max(bound, static_cast<int>(ceil_q(total_degree(g, s)).get_si()));
  std::set<QVector> out;
  for (const auto& m : fan.monoids) {
    auto elems = monoid_elements(m, s, bound);
    for (const auto& a : elems)
      if (!a.is_zero() && !decomposable_in(a, m, elems, s.poset)) out.insert(a);
  }
  std::vector<QVector> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), [&](const QVector& a, const QVector& b) { return chain_order(a, b, s.poset); });
  return v;
}

std::vector<QVector> decompose(const QVector& a, const Fan& fan) {
  const auto& poset = fan.strat.poset;
  if (a.is_zero()) return {};
  const MonoidDesc* m = monoid_for(a, fan);
  if (!m) throw DomainError("element is not in the fan of monoids");
  if (m->flavor == MonoidFlavor::FreeHodge) {
    std::vector<int> supp = a.support();
    std::sort(supp.begin(), supp.end(), [&](int x, int y) { return poset.rank(x) > poset.rank(y); });
    std::vector<QVector> parts;
    for (int p : supp)
      for (long i = 0; i < a.get(p).get_num().get_si(); ++i) parts.push_back(QVector::unit(p));
    return parts;
  }
  Q deg = total_degree(a, fan.strat);
  auto elems = monoid_elements(*m, fan.strat, static_cast<int>(floor_q(deg).get_si()));
  std::vector<QVector> atoms;
  for (const auto& b : elems)
    if (!b.is_zero() && b.leq_componentwise(a) && !decomposable_in(b, *m, elems, poset)) atoms.push_back(b);
  std::vector<QVector> parts;
  std::function<bool(const QVector&)> rec = [&](const QVector& rest) {
    if (rest.is_zero()) return true;
    for (const auto& b : atoms) {
      if (!b.leq_componentwise(rest)) continue;
      if (!parts.empty() && !ordered(parts.back(), b, poset)) continue;
      QVector r = rest - b;
      if (!m->contains(r) || !ordered(b, r, poset)) continue;
      parts.push_back(b);
      if (rec(r)) return true;
      parts.pop_back();
    }
    return false;
  };
  if (!rec(a)) throw DomainError("no decomposition into indecomposables found");
  return parts;
}

std::optional<QVector> fan_algebra_product(const QVector& a, const QVector& b, const GradedPoset& poset) {
  auto sa = a.support(), sb = b.support();
  std::vector<int> all;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(all));
  if (!poset.is_chain(all)) return std::nullopt;
  return a + b;
}

nlohmann::json to_json(const MonoidDesc& m, const GradedPoset& poset) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : m.generators) gens.push_back(format(g, poset));
  return {{"chain", chain_to_string(poset, m.chain)},
          {"flavor", flavor_name(m.flavor)},
          {"saturated", m.saturated},
          {"generators", gens}};
}

}  // namespace stratkit

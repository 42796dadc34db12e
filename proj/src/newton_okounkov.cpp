#include "stratkit/newton_okounkov.hpp"

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

QVec to_q(const Degree& d) { return QVec(d.begin(), d.end()); }

QVec deg_of(const StratData& s, int p) { return to_q(s.degrees[p]); }

bool is_zero(const Degree& d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

// Subchains of c as index masks, chains kept top-down.
Chain sub(const Chain& c, unsigned long mask) {
  Chain out;
  for (size_t t = 0; t < c.size(); ++t)
    if (mask >> t & 1) out.push_back(c[t]);
  return out;
}

Q factorial(long n) {
  Q f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

bool ConeDesc::contains(const Degree& d) const { return hrep.contains(to_q(d)); }

ConeDesc sigma_cone(const StratData& s, const Chain& c) {
  ConeDesc cd;
  cd.chain = c;
  for (int p : c) cd.generators.push_back(deg_of(s, p));
  cd.hrep = cone_hrep(cd.generators, s.m);
  cd.dim = cd.generators.empty() ? 0 : linalg::rank(cd.generators);
  return cd;
}

Chain restrict_chain(const StratData& s, const Chain& c, const Degree& d) {
  if (static_cast<int>(d.size()) != s.m) throw ShapeError("degree has wrong length");
  ConeDesc cone = sigma_cone(s, c);
  if (c.empty() || !cone.contains(d)) return {};
  QVec dq = to_q(d);
  std::vector<QVec> tight;
  for (const auto& a : cone.hrep.inequalities)
    if (dot(a, dq) == 0) tight.push_back(a);
  Chain out;
  for (int p : c) {
    bool on_all = true;
    for (const auto& a : tight)
      if (dot(a, deg_of(s, p)) != 0) on_all = false;
    if (on_all) out.push_back(p);
  }
  return out;
}

VeronesePoset veronese_poset(const StratData& s, const Degree& d) {
  VeronesePoset vp;
  auto chains = maximal_chains(s.poset);
  std::set<Chain> images;
  std::vector<Chain> max_images;
  for (const auto& c : chains) {
    if (c.size() > 24) throw DomainError("chain too long for subchain enumeration");
    for (unsigned long mask = 0; mask < (1ul << c.size()); ++mask) images.insert(restrict_chain(s, sub(c, mask), d));
    max_images.push_back(restrict_chain(s, c, d));
  }
  vp.elements.assign(images.begin(), images.end());
  auto contained = [](const Chain& a, const Chain& b) {
    return std::all_of(a.begin(), a.end(), [&](int p) { return std::find(b.begin(), b.end(), p) != b.end(); });
  };
  for (size_t i = 0; i < chains.size(); ++i) {
    const Chain& img = max_images[i];
    bool maximal = true;
    for (const auto& other : vp.elements)
      if (other.size() > img.size() && contained(img, other)) maximal = false;
    if (!maximal) continue;
    auto it = std::find_if(vp.maximal.begin(), vp.maximal.end(), [&](const auto& comp) { return comp.image == img; });
    if (it == vp.maximal.end()) vp.maximal.push_back({img, {chains[i]}});
    else it->chains.push_back(chains[i]);
  }
  return vp;
}

const Face* PolytopeDesc::face(const Chain& s) const {
  for (const auto& f : faces)
    if (f.subchain == s) return &f;
  return nullptr;
}

PolytopeDesc polytope(const StratData& s, const Chain& c, const Degree& d) {
  PolytopeDesc p;
  p.chain = c;
  p.d = d;
  if (c.size() > 24) throw DomainError("chain too long for face enumeration");
  if (is_zero(d)) {
    p.empty = false;
    p.dim = 0;
    p.vertices.push_back(QVector());
    p.faces.push_back({Chain{}, 0, {0}});
    return p;
  }
  if (!sigma_cone(s, c).contains(d)) return p;
  p.empty = false;
  QVec dq = to_q(d);
  for (unsigned long mask = 1; mask < (1ul << c.size()); ++mask) {
    Chain S = sub(c, mask);
    if (restrict_chain(s, S, d) != S) continue;
    ConeDesc cone = sigma_cone(s, S);
    Face f;
    f.subchain = S;
    f.dim = static_cast<int>(S.size() - cone.dim);
    if (f.dim == 0) {
      QMat a(s.m, QVec(S.size()));
      for (size_t j = 0; j < S.size(); ++j)
        for (int i = 0; i < s.m; ++i) a[i][j] = s.degrees[S[j]][i];
      auto lam = linalg::solve(a, dq);
      if (!lam) throw DomainError("vertex system has no solution");
      p.vertices.push_back(QVector::from_chain(S, *lam));
    }
    p.faces.push_back(f);
  }
  for (auto& f : p.faces) {
    for (size_t v = 0; v < p.vertices.size(); ++v) {
      bool inside = true;
      for (int q : p.vertices[v].support())
        if (std::find(f.subchain.begin(), f.subchain.end(), q) == f.subchain.end()) inside = false;
      if (inside) f.vertices.push_back(static_cast<int>(v));
    }
    p.dim = std::max(p.dim, f.dim);
  }
  return p;
}

QVec RationalStructure::project(const QVector& x, const QVector& base) const {
  QVec diff = (x - base).on_chain(chain);
  if (l0_basis.empty()) return {};
  auto sol = linalg::solve(linalg::transpose(l0_basis), diff);
  if (!sol) throw DomainError("point is not in the degree slice");
  return *sol;
}

QVector RationalStructure::offset(const Degree& d) const {
  QVector v;
  for (size_t i = 0; i < d.size() && i < sections.size(); ++i) v += Q(d[i]) * sections[i];
  return v;
}

RationalStructure rational_structure(const StratData& s, const Chain& c, const LatticeDesc& lattice) {
  RationalStructure rs;
  rs.chain = c;
  rs.lattice = lattice;
  if (lattice.chain != c) throw ShapeError("lattice lives on a different chain");
  std::vector<QVec> degs;
  for (const auto& b : lattice.basis) degs.push_back(degree_map(QVector::from_chain(c, b), s));
  for (const auto& k : linalg::integer_left_kernel(degs)) {
    QVec v(c.size(), Q(0));
    for (size_t j = 0; j < k.size(); ++j)
      for (size_t t = 0; t < c.size(); ++t) v[t] += Q(k[j]) * lattice.basis[j][t];
    rs.l0_basis.push_back(v);
  }
  rs.l0_basis = linalg::lattice_basis(rs.l0_basis, c.size());
  for (int i = 0; i < s.m; ++i) {
    QVec e(s.m, Q(0));
    e[i] = 1;
    std::optional<QVector> b;
    // Prefer the unit vector of the lowest element of degree e_i.
    for (auto it = c.rbegin(); it != c.rend() && !b; ++it)
      if (deg_of(s, *it) == e && lattice.contains(QVector::unit(*it))) b = QVector::unit(*it);
    if (!b) {
      auto sol = linalg::integer_combination(degs, e);
      if (sol) {
        QVec v(c.size(), Q(0));
        for (size_t j = 0; j < sol->size(); ++j)
          for (size_t t = 0; t < c.size(); ++t) v[t] += Q((*sol)[j]) * lattice.basis[j][t];
        b = QVector::from_chain(c, v);
      }
    }
    if (!b) throw DomainError("lattice not graded-surjective (check input)");
    rs.sections.push_back(*b);
  }
  return rs;
}

namespace {

// Pulling triangulation through the face lattice, v0 the smallest vertex.
std::vector<std::vector<int>> triangulate(const PolytopeDesc& p, const Face& f,
                                          std::map<Chain, std::vector<std::vector<int>>>& memo) {
  auto it = memo.find(f.subchain);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<int>> out;
  if (f.dim == 0) {
    out.push_back({f.vertices.at(0)});
  } else {
    int v0 = *std::min_element(f.vertices.begin(), f.vertices.end());
    for (const auto& g : p.faces) {
      if (g.dim != f.dim - 1) continue;
      bool inside = std::all_of(g.subchain.begin(), g.subchain.end(), [&](int q) {
        return std::find(f.subchain.begin(), f.subchain.end(), q) != f.subchain.end();
      });
      if (!inside) continue;
      if (std::find(g.vertices.begin(), g.vertices.end(), v0) != g.vertices.end()) continue;
      for (auto simplex : triangulate(p, g, memo)) {
        simplex.insert(simplex.begin(), v0);
        out.push_back(simplex);
      }
    }
  }
  memo[f.subchain] = out;
  return out;
}

}  // namespace

VolumeResult volume(const PolytopeDesc& p, const RationalStructure& rs) {
  VolumeResult res;
  res.r = static_cast<int>(rs.rank());
  res.dim = p.dim;
  if (p.empty) {
    res.collapsed = true;
    return res;
  }
  if (p.dim < res.r) {
    res.collapsed = true;
    return res;
  }
  if (res.r == 0) {
    res.value = 1;
    return res;
  }
  const Face* top = nullptr;
  for (const auto& f : p.faces)
    if (f.dim == p.dim) top = &f;
  std::map<Chain, std::vector<std::vector<int>>> memo;
  const QVector& base = p.vertices.front();
  std::vector<QVec> coords;
  for (const auto& v : p.vertices) coords.push_back(rs.project(v, base));
  Q total = 0;
  for (const auto& simplex : triangulate(p, *top, memo)) {
    QMat m;
    for (size_t k = 1; k < simplex.size(); ++k) {
      QVec row(res.r);
      for (int j = 0; j < res.r; ++j) row[j] = coords[simplex[k]][j] - coords[simplex[0]][j];
      m.push_back(row);
    }
    total += abs(linalg::det(m));
  }
  res.value = total / factorial(res.r);
  return res;
}

VolumeResult chain_volume(const StratData& s, const Fan& fan, const Chain& c, const Degree& d) {
  const MonoidDesc& m = fan.monoid(c);
  return volume(polytope(s, c, d), rational_structure(s, c, m.lattice));
}

LeadingTerm leading_term(const StratData& s, const Degree& d, const Fan& fan) {
  LeadingTerm lt;
  if (is_zero(d)) return lt;
  VeronesePoset vp = veronese_poset(s, d);
  for (const auto& c : maximal_chains(s.poset)) {
    Chain cd = restrict_chain(s, c, d);
    if (!cd.empty() && cd != c)
      lt.warnings.push_back("d lies on the boundary of sigma_C for " + chain_to_string(s.poset, c));
  }
  for (const auto& comp : vp.maximal) {
    if (comp.image.empty()) continue;
    const Chain& c = comp.chains.front();
    VolumeResult v = chain_volume(s, fan, c, d);
    if (v.collapsed)
      lt.warnings.push_back("collapsed polytope for " + chain_to_string(s.poset, c));
    lt.terms.emplace_back(c, v.value);
    lt.value += v.value;
  }
  return lt;
}

namespace {

struct Blocks {
  std::vector<IndexSet> sets;         // I_1 ⊊ ... ⊊ I_m, bottom-up
  std::vector<std::vector<int>> els;  // C_j
};

Blocks chain_blocks(const StratData& s, const Chain& c) {
  Blocks b;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const IndexSet& I = s.index_sets[*it];
    if (b.sets.empty() || b.sets.back() != I) {
      b.sets.push_back(I);
      b.els.emplace_back();
    }
    b.els.back().push_back(*it);
  }
  return b;
}

Z chain_bond(const StratData& s, const Chain& c) {
  Z b = s.bottom_bond(c.back());
  for (size_t t = 0; t + 1 < c.size(); ++t) b *= s.poset.bond(c[t], c[t + 1]);
  return b;
}

}  // namespace

Q ls_volume(const StratData& s, const Chain& c, const Degree& d) {
  if (!classify(s).is_ls_candidate) throw DomainError("ls_volume needs LS-type data");
  Blocks b = chain_blocks(s, c);
  if (static_cast<int>(b.sets.size()) != s.m) throw DomainError("chain does not meet every index set level");
  auto ip = index_poset(s);
  QMat M(s.m, QVec(s.m, Q(0)));
  for (int j = 0; j < s.m; ++j)
    for (int i : underline_index(ip, b.sets[j])) M[i - 1][j] = 1;
  auto phi = linalg::solve(M, to_q(d));
  if (!phi || linalg::rank(M) != static_cast<size_t>(s.m)) throw DomainError("M_C is singular");
  Q v = Q(chain_bond(s, c));
  for (int j = 0; j < s.m; ++j) {
    long e = static_cast<long>(b.els[j].size()) - 1;
    Q pw = 1;
    for (long k = 0; k < e; ++k) pw *= (*phi)[j];
    v *= pw / factorial(e);
  }
  return v;
}

std::map<std::vector<int>, Z> multidegrees(const StratData& s) {
  auto ip = index_poset(s);
  for (size_t a = 0; a < ip.size(); ++a)
    for (size_t b = 0; b < ip.size(); ++b) {
      const auto &x = ip[a], &y = ip[b];
      if (!std::includes(x.begin(), x.end(), y.begin(), y.end()) &&
          !std::includes(y.begin(), y.end(), x.begin(), x.end()))
        throw DomainError("multidegrees need a totally ordered index poset");
    }
  std::map<std::vector<int>, Z> out;
  for (const auto& c : maximal_chains(s.poset)) {
    std::vector<int> count(s.m, 0);
    for (int p : c) {
      int factor = -1;
      for (int i = 0; i < s.m; ++i) {
        Degree e(s.m, 0);
        e[i] = 1;
        if (s.degrees[p] == e) factor = i;
      }
      if (factor < 0) throw DomainError("extremal degree is not a unit vector");
      ++count[factor];
    }
    std::vector<int> k(s.m);
    for (int i = 0; i < s.m; ++i) {
      if (count[i] == 0) throw DomainError("chain misses a factor");
      k[i] = count[i] - 1;
    }
    out[k] += chain_bond(s, c);
  }
  return out;
}

Z ehrhart_count(const PolytopeDesc& p, const StratData& s, const LatticeDesc& lattice, long n) {
  if (p.empty) return 0;
  const Chain& c = lattice.chain;
  const size_t dim = c.size();
  for (const auto& v : p.vertices)
    for (int q : v.support())
      if (std::find(c.begin(), c.end(), q) == c.end()) throw ShapeError("polytope not inside the lattice chain");
  // A lattice point of degree n d, and L_0.
  std::vector<QVec> degs;
  for (const auto& b : lattice.basis) degs.push_back(degree_map(QVector::from_chain(c, b), s));
  QVec target(s.m);
  for (int i = 0; i < s.m; ++i) target[i] = Q(n) * p.d[i];
  auto sol = linalg::integer_combination(degs, target);
  if (!sol) return 0;
  QVec base(dim, Q(0));
  for (size_t j = 0; j < sol->size(); ++j)
    for (size_t t = 0; t < dim; ++t) base[t] += Q((*sol)[j]) * lattice.basis[j][t];
  std::vector<QVec> l0;
  for (const auto& k : linalg::integer_left_kernel(degs)) {
    QVec v(dim, Q(0));
    for (size_t j = 0; j < k.size(); ++j)
      for (size_t t = 0; t < dim; ++t) v[t] += Q(k[j]) * lattice.basis[j][t];
    l0.push_back(v);
  }
  l0 = linalg::lattice_basis(l0, dim);
  const size_t r = l0.size();
  if (r == 0) {
    bool inside = std::all_of(base.begin(), base.end(), [](const Q& x) { return x >= 0; });
    return inside ? 1 : 0;
  }
  // Bounding box in L_0 coordinates from the dilated vertices.
  QMat lt = linalg::transpose(l0);
  std::vector<Z> lo(r), hi(r);
  bool first = true;
  for (const auto& v : p.vertices) {
    QVec x = v.on_chain(c);
    for (size_t t = 0; t < dim; ++t) x[t] = Q(n) * x[t] - base[t];
    auto y = linalg::solve(lt, x);
    if (!y) throw DomainError("vertex outside the lattice span");
    for (size_t j = 0; j < r; ++j) {
      Z f = floor_q((*y)[j]), g = ceil_q((*y)[j]);
      if (first || f < lo[j]) lo[j] = f;
      if (first || g > hi[j]) hi[j] = g;
    }
    first = false;
  }
  // Walk the box as an odometer on integer points scaled by a common denominator.
  Z den = linalg::lcm_den(base);
  for (const auto& v : l0) den = lcm(den, linalg::lcm_den(v));
  std::vector<Z> point(dim);
  std::vector<std::vector<Z>> step(r, std::vector<Z>(dim));
  for (size_t t = 0; t < dim; ++t) {
    Q x = base[t];
    for (size_t j = 0; j < r; ++j) x += Q(lo[j]) * l0[j][t];
    point[t] = Z(x * den);
    for (size_t j = 0; j < r; ++j) step[j][t] = Z(l0[j][t] * den);
  }
  Z count = 0;
  std::vector<Z> cur(lo);
  while (true) {
    if (std::all_of(point.begin(), point.end(), [](const Z& x) { return x >= 0; })) ++count;
    size_t j = 0;
    for (; j < r; ++j) {
      if (++cur[j] <= hi[j]) {
        for (size_t t = 0; t < dim; ++t) point[t] += step[j][t];
        break;
      }
      Z back = hi[j] - lo[j];
      for (size_t t = 0; t < dim; ++t) point[t] -= back * step[j][t];
      cur[j] = lo[j];
    }
    if (j == r) break;
  }
  return count;
}

nlohmann::json to_json(const PolytopeDesc& p, const StratData& s) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : p.vertices) verts.push_back(format(v, s.poset));
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& f : p.faces) faces.push_back({{"subchain", chain_to_string(s.poset, f.subchain)}, {"dim", f.dim}, {"vertices", f.vertices}});
  return {{"chain", chain_to_string(s.poset, p.chain)},
          {"d", p.d},
          {"empty", p.empty},
          {"dimension", p.dim},
          {"vertices", verts},
          {"faces", faces}};
}

}  // namespace stratkit

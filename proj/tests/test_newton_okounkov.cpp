#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "stratkit/newton_okounkov.hpp"
#include "stratkit/tableaux.hpp"

using namespace stratkit;

namespace {

struct Named {
  StratData s;
  explicit Named(const char* name) : s(builtin_example(name)) {}
  int id(const char* l) const { return s.poset.id(l); }
  QVector e(const char* l, Q c = 1) const { return QVector::unit(id(l), c); }
  Chain chain(const char* text) const { return parse_chain(s.poset, text); }
};

std::set<QVector> vertex_set(const PolytopeDesc& p) { return {p.vertices.begin(), p.vertices.end()}; }

QVec to_qvec(const Degree& d) { return QVec(d.begin(), d.end()); }

// Leading coefficient of a degree-r polynomial in n from its values at 0..r.
Q leading_coefficient(const std::vector<Q>& values, int r) {
  std::vector<Q> v = values;
  for (int k = 0; k < r; ++k)
    for (size_t i = 0; i + 1 < v.size() - k; ++i) v[i] = v[i + 1] - v[i];
  Q f = 1;
  for (int k = 2; k <= r; ++k) f *= k;
  return v[0] / f;
}

Degree random_point_in_cone(const StratData& s, const Chain& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(0, 3);
  Degree d(s.m, 0);
  while (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; }))
    for (int p : c) {
      int a = coef(rng);
      for (int i = 0; i < s.m; ++i) d[i] += a * s.degrees[p][i];
    }
  return d;
}

}  // namespace

TEST_CASE("sigma cones") {
  StratData a2 = build_type_a(3, {1, 2});
  for (const auto& c : maximal_chains(a2.poset)) {
    ConeDesc cone = sigma_cone(a2, c);
    CHECK(cone.dim == 2);
    CHECK(cone.contains({0, 1}));
    CHECK(cone.contains({3, 2}));
    CHECK_FALSE(cone.contains({-1, 1}));
  }
  Named y1("y1");
  ConeDesc c = sigma_cone(y1.s, y1.chain("X>00b>0b"));
  CHECK(c.contains({1, 1}));
  CHECK(c.contains({0, 1}));
  CHECK(c.contains({2, 5}));
  CHECK_FALSE(c.contains({1, 0}));
  CHECK_FALSE(c.contains({5, 3}));
  ConeDesc ray = sigma_cone(y1.s, {y1.id("X")});
  CHECK(ray.dim == 1);
  CHECK(ray.contains({0, 4}));
  CHECK_FALSE(ray.contains({1, 4}));
}

TEST_CASE("restricted chains") {
  Named y("y0y1");
  Chain c2 = y.chain("X>01>0");
  CHECK(restrict_chain(y.s, c2, {0, 1}) == Chain{y.id("X")});
  CHECK(restrict_chain(y.s, c2, {1, 1}) == c2);
  CHECK(restrict_chain(y.s, y.chain("X>00b>0"), {0, 1}) == y.chain("X>00b"));
  Named y1("y1");
  CHECK(restrict_chain(y1.s, y1.chain("X>00b>0b"), {5, 3}).empty());
}

TEST_CASE("veronese poset of y0y1") {
  Named y("y0y1");
  VeronesePoset vp = veronese_poset(y.s, {0, 1});
  std::set<Chain> marked;
  for (const auto& comp : vp.maximal)
    for (const auto& c : comp.chains) marked.insert(c);
  CHECK(marked == std::set<Chain>{y.chain("X>00b>0"), y.chain("X>11b>1")});
  vp = veronese_poset(y.s, {1, 1});
  CHECK(vp.maximal.size() == 4);
}

TEST_CASE("polytopes of y1") {
  Named y1("y1");
  for (int d1 = 1; d1 <= 4; ++d1)
    for (int d2 = 1; d2 <= 4; ++d2) {
      PolytopeDesc p = polytope(y1.s, y1.chain("X>01>0"), {d1, d2});
      CHECK_FALSE(p.empty);
      CHECK(p.dim == 1);
      CHECK(vertex_set(p) == std::set<QVector>{y1.e("0", d1) + y1.e("X", d2),
                                               y1.e("01", make_q(d1, 2)) + y1.e("X", d2)});
      PolytopeDesc q = polytope(y1.s, y1.chain("X>00b>0b"), {d1, d2});
      CHECK(q.empty == (d1 > d2));
    }
  PolytopeDesc zero = polytope(y1.s, y1.chain("X>01>1"), {0, 0});
  CHECK(zero.dim == 0);
  CHECK(zero.vertices.size() == 1);

  // Unit-degree face on a type-A chain: a single vertex per index.
  StratData a2 = build_type_a(3, {1, 2});
  for (const auto& c : maximal_chains(a2.poset)) {
    PolytopeDesc p = polytope(a2, c, {1, 0});
    CHECK(p.dim >= 0);
    for (const auto& v : p.vertices) CHECK(degree_map(v, a2) == QVec{1, 0});
  }
}

TEST_CASE("rational structure of a y1 chain") {
  Named y1("y1");
  Chain c = y1.chain("X>01>0");
  Fan fan = fan_of_monoids(y1.s);
  RationalStructure rs = rational_structure(y1.s, c, fan.monoid(c).lattice);
  REQUIRE(rs.rank() == 1);
  QVec b = rs.l0_basis[0];
  // Degree-zero vector in chain coordinates (X, 01, 0).
  CHECK(b[0] == 0);
  CHECK(b[2] == -2 * b[1]);
  CHECK(abs(b[1]) == 1);
  CHECK(rs.sections.size() == 2);
  CHECK(rs.sections[0] == y1.e("0"));
  CHECK(rs.sections[1] == y1.e("X"));
  CHECK(rs.offset({2, 3}) == y1.e("0", 2) + y1.e("X", 3));
  for (int d1 = 1; d1 <= 4; ++d1) {
    PolytopeDesc p = polytope(y1.s, c, {d1, 2});
    QVec a = rs.project(p.vertices[0], p.vertices[0]);
    QVec z = rs.project(p.vertices[1], p.vertices[0]);
    CHECK(a == QVec{0});
    CHECK(abs(z[0]) == make_q(d1, 2));
  }
  CHECK_THROWS(rs.project(y1.e("X"), QVector()));
}

TEST_CASE("volumes and leading term of y1") {
  Named y1("y1");
  Fan fan = fan_of_monoids(y1.s);
  for (int d1 = 1; d1 <= 5; ++d1)
    for (int d2 = 1; d2 <= 5; ++d2) {
      Degree d{d1, d2};
      CHECK(chain_volume(y1.s, fan, y1.chain("X>01>0"), d).value == make_q(d1, 2));
      CHECK(chain_volume(y1.s, fan, y1.chain("X>01>1"), d).value == make_q(d1, 2));
      CHECK(chain_volume(y1.s, fan, y1.chain("X>00b>0"), d).value == std::min(d1, d2));
      VolumeResult v = chain_volume(y1.s, fan, y1.chain("X>00b>0b"), d);
      CHECK(v.value == std::max(d2 - d1, 0));
      CHECK(v.collapsed == (d2 <= d1));
      CHECK(leading_term(y1.s, d, fan).value == d1 + d2);
    }
  CHECK(leading_term(y1.s, {0, 0}, fan).value == 0);
  LeadingTerm edge = leading_term(y1.s, {0, 2}, fan);
  CHECK_FALSE(edge.warnings.empty());
}

TEST_CASE("leading term of A2") {
  StratData a2 = build_type_a(3, {1, 2});
  Fan fan = fan_of_monoids(a2);
  for (int d1 = 1; d1 <= 3; ++d1)
    for (int d2 = 1; d2 <= 3; ++d2) {
      Q expect = Q(d1 * d1 * d2 + d1 * d2 * d2) / 2;
      CHECK(leading_term(a2, {d1, d2}, fan).value == expect);
    }
}

TEST_CASE("leading term against the Hilbert function" * doctest::timeout(60)) {
  // G_R(d) is the n^r coefficient of dim R_{nd}; the Weyl formula gives the
  // Hilbert function exactly, so finite differences recover it.
  struct Case {
    int n;
    std::vector<int> k;
    Degree d;
  };
  std::vector<Case> cases{{3, {1, 2}, {1, 1}}, {3, {1, 2}, {2, 1}}, {3, {1}, {2}},       {4, {2}, {1}},
                          {4, {1, 3}, {1, 2}}, {4, {1, 2}, {1, 1}}, {4, {1, 2, 3}, {1, 1, 1}}};
  for (const auto& cs : cases) {
    StratData s = build_type_a(cs.n, cs.k);
    Fan fan = fan_of_monoids(s);
    Chain c = maximal_chains(s.poset).front();
    int r = static_cast<int>(c.size()) - s.m;
    std::vector<Q> h;
    for (int t = 0; t <= r; ++t) {
      std::vector<int> nd;
      for (int x : cs.d) nd.push_back(t * x);
      h.push_back(oracle::weyl_dimension(cs.n, cs.k, nd));
    }
    CAPTURE(cs.n);
    CHECK(leading_term(s, cs.d, fan).value == leading_coefficient(h, r));
  }
}

TEST_CASE("ls volume closed form") {
  StratData a2 = build_type_a(3, {1, 2});
  Fan fan = fan_of_monoids(a2);
  for (const auto& c : maximal_chains(a2.poset))
    for (int d1 = 1; d1 <= 3; ++d1)
      for (int d2 = 1; d2 <= 3; ++d2)
        CHECK(ls_volume(a2, c, {d1, d2}) == chain_volume(a2, fan, c, {d1, d2}).value);

  // One factor: d^r / r!.
  StratData p3 = build_type_a(4, {1});
  for (const auto& c : maximal_chains(p3.poset)) CHECK(ls_volume(p3, c, {2}) == make_q(4, 3));

  for (auto k : std::vector<std::vector<int>>{{1, 3}, {2}, {1, 2, 3}}) {
    StratData s = build_type_a(4, k);
    Fan f = fan_of_monoids(s);
    Degree d(k.size(), 1);
    d[0] = 2;
    for (const auto& c : maximal_chains(s.poset)) CHECK(ls_volume(s, c, d) == chain_volume(s, f, c, d).value);
  }
  CHECK_THROWS_AS(ls_volume(builtin_example("y0y1"), maximal_chains(builtin_example("y0y1").poset)[0], {1, 1}),
                  DomainError);
}

TEST_CASE("multidegrees") {
  auto a2 = multidegrees(build_type_a(3, {1, 2}));
  CHECK(a2 == std::map<std::vector<int>, Z>{{{1, 2}, 1}, {{2, 1}, 1}});
  auto a3 = multidegrees(build_type_a(4, {1, 2, 3}));
  Z total = 0;
  for (const auto& [k, v] : a3) {
    CHECK(k[0] + k[1] + k[2] == 6);
    total += v;
  }
  CHECK(a3.size() == 8);
  CHECK(total == 12);
  CHECK(multidegrees(build_type_a(4, {1})) == std::map<std::vector<int>, Z>{{{3}, 1}});
  CHECK(multidegrees(build_type_a(4, {2})) == std::map<std::vector<int>, Z>{{{4}, 2}});
  CHECK_THROWS_AS(multidegrees(builtin_example("y1")), DomainError);
}

TEST_CASE("ehrhart counts") {
  Named y1("y1");
  Fan fan = fan_of_monoids(y1.s);
  Chain c = y1.chain("X>01>0");
  PolytopeDesc seg = polytope(y1.s, c, {2, 0});
  for (long n = 0; n <= 6; ++n) CHECK(ehrhart_count(seg, y1.s, fan.monoid(c).lattice, n) == n + 1);
  Chain e = y1.chain("X>00b>0b");
  CHECK(ehrhart_count(polytope(y1.s, e, {5, 3}), y1.s, fan.monoid(e).lattice, 3) == 0);

  // y0y1: the half-vector lattice of X>01>0 sees the extra points.
  Named y("y0y1");
  Fan yf = fan_of_monoids(y.s);
  Chain c2 = y.chain("X>01>0");
  PolytopeDesc p = polytope(y.s, c2, {1, 1});
  // n = 1: only (1/2)e_X + (1/2)e_01; n = 2 adds e_X + 2e_0.
  CHECK(ehrhart_count(p, y.s, yf.monoid(c2).lattice, 1) == 1);
  CHECK(ehrhart_count(p, y.s, yf.monoid(c2).lattice, 2) == 2);
}

TEST_CASE("property: vertices match the basic-solution oracle") {
  std::mt19937_64 rng(911);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    StratData s = oracle::random_strat(rng);
    REQUIRE(validate_strat(s).empty());
    for (const auto& c : maximal_chains(s.poset)) {
      Degree d = random_point_in_cone(s, c, rng);
      std::vector<QVec> degs;
      for (int p : c) degs.push_back(to_qvec(s.degrees[p]));
      std::set<QVector> expect;
      for (const auto& x : oracle::polytope_vertices(degs, to_qvec(d))) expect.insert(QVector::from_chain(c, x));
      PolytopeDesc p = polytope(s, c, d);
      CHECK(vertex_set(p) == expect);
      // dim Delta = |C_d| - dim sigma_{C_d}
      Chain cd = restrict_chain(s, c, d);
      CHECK(p.dim == static_cast<int>(cd.size() - sigma_cone(s, cd).dim));
      ++checked;
    }
  }
  CHECK(checked >= 60);
}

TEST_CASE("property: common vertices of two chains") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    StratData s = oracle::random_strat(rng);
    auto chains = maximal_chains(s.poset);
    Degree d(s.m, 0);
    for (int i = 0; i < s.m; ++i) d[i] = std::uniform_int_distribution<int>(1, 3)(rng);
    for (size_t a = 0; a < chains.size(); ++a)
      for (size_t b = a + 1; b < chains.size(); ++b) {
        Chain both;
        for (int p : chains[a])
          if (std::find(chains[b].begin(), chains[b].end(), p) != chains[b].end()) both.push_back(p);
        auto va = vertex_set(polytope(s, chains[a], d));
        auto vb = vertex_set(polytope(s, chains[b], d));
        std::set<QVector> common;
        for (const auto& v : va)
          if (vb.count(v)) common.insert(v);
        CHECK(vertex_set(polytope(s, both, d)) == common);
      }
  }
}

TEST_CASE("property: rank of the degree-zero lattice") {
  // Random degrees need not make Z^C surject onto Z^m; those chains are skipped.
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    StratData s = oracle::random_strat(rng);
    for (const auto& c : maximal_chains(s.poset)) {
      LatticeDesc z{c, {}, std::nullopt};
      for (size_t t = 0; t < c.size(); ++t) {
        QVec row(c.size(), Q(0));
        row[t] = 1;
        z.basis.push_back(row);
      }
      RationalStructure rs;
      try {
        rs = rational_structure(s, c, z);
      } catch (const DomainError&) {
        continue;
      }
      CHECK(rs.rank() == c.size() - sigma_cone(s, c).dim);
      for (const auto& b : rs.l0_basis) CHECK(degree_map(QVector::from_chain(c, b), s) == QVec(s.m, Q(0)));
      for (int i = 0; i < s.m; ++i) {
        QVec e(s.m, Q(0));
        e[i] = 1;
        CHECK(degree_map(rs.sections[i], s) == e);
      }
      ++checked;
    }
  }
  CHECK(checked >= 20);
}

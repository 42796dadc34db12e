#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "stratkit/fan.hpp"
#include "stratkit/tableaux.hpp"

using namespace stratkit;

namespace {

std::vector<std::vector<int>> ascending_k_lists(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> k;
    for (int i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1) k.push_back(i);
    out.push_back(k);
  }
  return out;
}

// All d with entries >= 0 and sum <= total.
void shapes(size_t m, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    shapes(m, total - x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("semistandard predicate") {
  CHECK(is_semistandard(Tableau{{{1, 3}, {2}}}));
  CHECK_FALSE(is_semistandard(Tableau{{{2, 3}, {1}}}));
  CHECK_FALSE(is_semistandard(Tableau{{{1}, {1, 2}}}));
  CHECK_FALSE(is_semistandard(Tableau{{{2, 2}}}));
  CHECK(is_semistandard(Tableau{}));
}

TEST_CASE("anti tableaux") {
  CHECK(is_semistandard_anti(Tableau{{{1}, {2}, {1, 2}, {2, 4}, {1, 3, 4}}}));
  CHECK_FALSE(is_semistandard_anti(Tableau{{{2}, {1, 2}, {1, 3}, {2, 2, 4}, {2, 3, 4}}}));
}

TEST_CASE("enumeration") {
  CHECK(enumerate_ssyt(3, {1, 2}, {1, 1}).size() == 8);
  auto empty = enumerate_ssyt(3, {1, 2}, {0, 0});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].columns.empty());
  CHECK(enumerate_ssyt(3, {1, 2}, {1, 0}).size() == 3);
  for (const auto& t : enumerate_ssyt(4, {1, 2, 3}, {1, 1, 1})) CHECK(is_semistandard(t));
  auto all = enumerate_ssyt(4, {1, 3}, {2, 1});
  CHECK(std::set<Tableau>(all.begin(), all.end()).size() == all.size());
}

TEST_CASE("tableaux and gamma") {
  UnderlineW uw = build_underline_w(3, {1, 2});
  auto e = [&](const char* l) { return QVector::unit(uw.poset.id(l)); };
  Tableau t{{{1, 3}, {2}}};
  CHECK(tableau_to_gamma(t, uw) == e("2") + e("13"));
  CHECK(tableau_to_gamma(Tableau{}, uw).is_zero());
  CHECK(gamma_to_tableau(e("2") + e("13"), uw) == t);
  CHECK_THROWS_AS(tableau_to_gamma(Tableau{{{2, 3}, {1}}}, uw), DomainError);
  // 1 and 23 are incomparable
  CHECK_THROWS_AS(gamma_to_tableau(e("1") + e("23"), uw), DomainError);
  for (const auto& s : enumerate_ssyt(3, {1, 2}, {1, 1})) CHECK(gamma_to_tableau(tableau_to_gamma(s, uw), uw) == s);
  CHECK(degree_of_tableau(t, {1, 2}) == std::vector<int>{1, 1});
  CHECK(degree_of_tableau(Tableau{}, {1, 2}) == std::vector<int>{0, 0});

  StratData s = build_type_a(3, {1, 2});
  for (const auto& x : enumerate_ssyt(3, {1, 2}, {2, 1})) {
    auto d = degree_of_tableau(x, {1, 2});
    CHECK(degree_map(tableau_to_gamma(x, *s.type_a), s) == QVec(d.begin(), d.end()));
  }
}

TEST_CASE("json") {
  Tableau t{{{1, 3}, {2}}};
  CHECK(tableau_from_json(to_json(t)) == t);
  CHECK(t.str() == "1 2\n3\n");
}

TEST_CASE("property: tableau counts match the Weyl dimension formula") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& k : ascending_k_lists(n)) {
      std::vector<std::vector<int>> ds;
      std::vector<int> cur;
      shapes(k.size(), 4, cur, ds);
      for (const auto& d : ds) {
        CAPTURE(n);
        CAPTURE(d);
        REQUIRE(Q(static_cast<long>(count_ssyt(n, k, d))) == oracle::weyl_dimension(n, k, d));
      }
    }
}

TEST_CASE("property: tableaux fill out the degree slices of the fan") {
  for (auto [n, k] : std::vector<std::pair<int, std::vector<int>>>{{3, {1, 2}}, {4, {1, 2, 3}}, {4, {2}}, {4, {1, 3}}}) {
    StratData s = build_type_a(n, k);
    Fan fan = fan_of_monoids(s);
    std::vector<std::vector<int>> ds;
    std::vector<int> cur;
    shapes(k.size(), 2, cur, ds);
    for (const auto& d : ds) {
      int total = 0;
      for (int x : d) total += x;
      std::set<QVector> from_fan, from_tableaux;
      for (const auto& mon : fan.monoids)
        for (const auto& v : monoid_elements(mon, s, total))
          if (degree_map(v, s) == QVec(d.begin(), d.end())) from_fan.insert(v);
      for (const auto& t : enumerate_ssyt(n, k, d)) from_tableaux.insert(tableau_to_gamma(t, *s.type_a));
      CHECK(from_fan == from_tableaux);
    }
  }
}

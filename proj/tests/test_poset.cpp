#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stratkit/poset.hpp"
#include "stratkit/strat.hpp"
#include "stratkit/weyl.hpp"

using namespace stratkit;

namespace {

int count_edges(const std::string& dot) {
  int n = 0;
  for (size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; pos += 2) ++n;
  return n;
}

GradedPoset chain_poset(int len) {
  std::vector<std::string> labels;
  std::vector<GradedPoset::Edge> covers;
  for (int i = 0; i < len; ++i) labels.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < len; ++i) covers.emplace_back(i, i + 1);
  return GradedPoset::from_covers(labels, covers);
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(build_underline_w(3, {1, 2}).poset).empty());
  CHECK(validate(GradedPoset::from_covers({"a"}, {})).empty());

  GradedPoset gap({"a", "b"}, {{0, 1}}, {2, 0});
  auto d = validate(gap);
  REQUIRE(d.size() == 1);
  CHECK(d[0].rfind("rank gap", 0) == 0);

  // a > b > c plus the redundant a > c
  GradedPoset redundant({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}, {2, 1, 0});
  bool found = false;
  for (const auto& msg : validate(redundant)) found |= msg.rfind("transitively redundant", 0) == 0;
  CHECK(found);

  GradedPoset bad_bond = GradedPoset::from_covers({"a", "b"}, {{0, 1}}, {{{0, 1}, 0}});
  CHECK(validate(bad_bond).size() == 1);
}

TEST_CASE("maximal chains") {
  auto a2 = build_underline_w(3, {1, 2}).poset;
  auto c2 = maximal_chains(a2);
  CHECK(c2.size() == 2);
  for (const auto& c : c2) CHECK(c.size() == 5);

  auto a3 = build_underline_w(4, {1, 2, 3}).poset;
  auto c3 = maximal_chains(a3);
  CHECK(c3.size() == 12);
  // dim G/B + m - 1 = 6 + 3 - 1, so nine elements
  for (const auto& c : c3) CHECK(c.size() == 9);

  auto single = chain_poset(4);
  auto cs = maximal_chains(single);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0] == Chain{0, 1, 2, 3});

  auto y = builtin_example("y0y1").poset;
  std::vector<std::string> names;
  for (const auto& c : maximal_chains(y)) names.push_back(chain_to_string(y, c));
  CHECK(names == std::vector<std::string>{"X > 00b > 0", "X > 01 > 0", "X > 01 > 1", "X > 11b > 1"});
}

TEST_CASE("linearize") {
  auto ch = chain_poset(5);
  CHECK(linearize(ch).order == std::vector<int>{0, 1, 2, 3, 4});

  auto a2 = build_underline_w(3, {1, 2}).poset;
  TotalOrder t = linearize(a2);
  REQUIRE(t.order.size() == 6);
  CHECK(a2.label(t.order[0]) == "3");

  GradedPoset anti = GradedPoset::from_covers({"b", "a"}, {});
  TotalOrder ta = linearize(anti);
  CHECK(anti.label(ta.order[0]) == "a");
  CHECK(anti.label(ta.order[1]) == "b");
}

TEST_CASE("hasse export") {
  auto y = builtin_example("y0y1").poset;
  std::string dot = export_hasse(y);
  size_t first = dot.find("[label=\"2\"]");
  CHECK(first != std::string::npos);
  CHECK(dot.find("[label=", first + 1) == std::string::npos);
  CHECK(dot.find("\"X\" -> \"01\" [label=\"2\"]") != std::string::npos);

  CHECK(export_hasse(chain_poset(3)).find("label=") == std::string::npos);

  auto a3 = build_underline_w(4, {1, 2, 3}).poset;
  CHECK(a3.size() == 14);
  CHECK(count_edges(export_hasse(a3)) == 18);
}

TEST_CASE("json round trip") {
  auto y = builtin_example("y0y1").poset;
  auto back = poset_from_json(to_json(y));
  CHECK(back.labels() == y.labels());
  CHECK(back.covers() == y.covers());
  CHECK(back.bond(back.id("X"), back.id("01")) == 2);
}

TEST_CASE("property: chains have full length and match the subset oracle") {
  std::mt19937_64 rng(7);
  std::vector<GradedPoset> posets = {build_underline_w(3, {1, 2}).poset, build_underline_w(4, {1, 2, 3}).poset,
                                     build_underline_w(4, {2}).poset, builtin_example("y1").poset,
                                     builtin_example("y0y1").poset, builtin_example("antiA2").poset};
  for (int i = 0; i < 40; ++i) posets.push_back(oracle::random_strat(rng).poset);
  for (const auto& P : posets) {
    REQUIRE(validate(P).empty());
    auto chains = maximal_chains(P);
    int top_rank = P.rank(chains.front().front());
    for (const auto& c : chains) CHECK(static_cast<int>(c.size()) == top_rank + 1);
    if (P.size() <= 20) {
      std::set<std::vector<int>> mine(chains.begin(), chains.end());
      CHECK(mine.size() == chains.size());
      CHECK(mine == oracle::chains_by_subsets(P));
    }
  }
}

TEST_CASE("property: linear extensions refine the order") {
  std::mt19937_64 rng(11);
  std::vector<GradedPoset> posets = {build_underline_w(4, {1, 2, 3}).poset, builtin_example("y0y1").poset};
  for (int i = 0; i < 20; ++i) posets.push_back(oracle::random_strat(rng).poset);
  for (const auto& P : posets) {
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
      for (const TotalOrder& t : {linearize(P), random_linear_extension(P, seed)}) {
        CHECK(refines(P, t));
        for (size_t a = 0; a < P.size(); ++a)
          for (size_t b = 0; b < P.size(); ++b)
            if (a != b && P.leq(b, a)) CHECK(t.greater(a, b));
      }
    }
  }
}

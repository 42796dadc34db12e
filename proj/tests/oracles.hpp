// Independent reference implementations used by the tests. Nothing here calls
// the library routine it is meant to check.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "stratkit/linalg.hpp"
#include "stratkit/strat.hpp"

namespace oracle {

using stratkit::Q;
using stratkit::QMat;
using stratkit::QVec;

// dim V(lambda) for sl_n, lambda = sum d_i omega_{k_i}.
inline Q weyl_dimension(int n, const std::vector<int>& k, const std::vector<int>& d) {
  std::vector<long> lambda(n + 1, 0);
  for (int a = 1; a <= n; ++a)
    for (size_t i = 0; i < k.size(); ++i)
      if (k[i] >= a) lambda[a] += d[i];
  Q v = 1;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) v *= Q(lambda[a] - lambda[b] + b - a) / Q(b - a);
  return v;
}

inline int inversions(const std::vector<int>& w) {
  int c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

// Bruhat order on S_n as the transitive closure of w < w t whenever the
// transposition t raises the length. Index = position in the sorted list.
struct BruhatClosure {
  std::vector<std::vector<int>> perms;
  std::vector<std::vector<bool>> leq;

  explicit BruhatClosure(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do perms.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    std::map<std::vector<int>, size_t> id;
    for (size_t i = 0; i < perms.size(); ++i) id[perms[i]] = i;
    size_t N = perms.size();
    std::vector<std::vector<size_t>> up(N);
    for (size_t i = 0; i < N; ++i)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          auto u = perms[i];
          std::swap(u[a], u[b]);
          if (inversions(u) > inversions(perms[i])) up[i].push_back(id[u]);
        }
    leq.assign(N, std::vector<bool>(N, false));
    for (size_t i = 0; i < N; ++i) {
      std::vector<size_t> stack{i};
      leq[i][i] = true;
      while (!stack.empty()) {
        size_t x = stack.back();
        stack.pop_back();
        for (size_t y : up[x])
          if (!leq[i][y]) {
            leq[i][y] = true;
            stack.push_back(y);
          }
      }
    }
  }
  size_t index(const std::vector<int>& w) const {
    return std::lower_bound(perms.begin(), perms.end(), w) - perms.begin();
  }
};

// Maximal chains as inclusion-maximal totally ordered subsets, top-down.
inline std::set<std::vector<int>> chains_by_subsets(const stratkit::GradedPoset& P) {
  int N = static_cast<int>(P.size());
  std::vector<std::vector<int>> chains;
  for (long mask = 1; mask < (1L << N); ++mask) {
    std::vector<int> el;
    for (int i = 0; i < N; ++i)
      if (mask >> i & 1) el.push_back(i);
    bool ok = true;
    for (size_t a = 0; a < el.size() && ok; ++a)
      for (size_t b = a + 1; b < el.size() && ok; ++b) ok = P.comparable(el[a], el[b]);
    if (!ok) continue;
    bool maximal = true;
    for (int x = 0; x < N && maximal; ++x) {
      if (mask >> x & 1) continue;
      if (std::all_of(el.begin(), el.end(), [&](int y) { return P.comparable(x, y); })) maximal = false;
    }
    if (!maximal) continue;
    std::sort(el.begin(), el.end(), [&](int a, int b) { return P.leq(b, a); });
    chains.push_back(el);
  }
  return {chains.begin(), chains.end()};
}

// Vertices of {x >= 0 : sum x_p deg_p = d} by solving every subsystem in which
// all coordinates outside a column set vanish and the columns are independent.
inline std::set<QVec> polytope_vertices(const std::vector<QVec>& degs, const QVec& d) {
  size_t s = degs.size(), m = d.size();
  std::set<QVec> out;
  for (long mask = 0; mask < (1L << s); ++mask) {
    std::vector<size_t> cols;
    for (size_t j = 0; j < s; ++j)
      if (mask >> j & 1) cols.push_back(j);
    QMat A = stratkit::linalg::zeros(m, cols.size());
    for (size_t i = 0; i < m; ++i)
      for (size_t c = 0; c < cols.size(); ++c) A[i][c] = degs[cols[c]][i];
    if (stratkit::linalg::rank(A) != cols.size()) continue;
    auto x = stratkit::linalg::solve(A, d);
    if (!x) continue;
    if (std::any_of(x->begin(), x->end(), [](const Q& v) { return v < 0; })) continue;
    QVec full(s, Q(0));
    for (size_t c = 0; c < cols.size(); ++c) full[cols[c]] = (*x)[c];
    out.insert(full);
  }
  return out;
}

// Is v a non-negative integer combination of gens? Depth-first, coordinatewise bounded.
inline bool generator_sum(const QVec& v, const std::vector<QVec>& gens) {
  std::function<bool(size_t, QVec)> rec = [&](size_t j, QVec rest) -> bool {
    if (std::all_of(rest.begin(), rest.end(), [](const Q& x) { return x == 0; })) return true;
    if (j == gens.size()) return false;
    QVec cur = rest;
    while (true) {
      if (rec(j + 1, cur)) return true;
      bool fits = true;
      for (size_t i = 0; i < cur.size(); ++i) {
        cur[i] -= gens[j][i];
        if (cur[i] < 0) fits = false;
      }
      if (!fits) return false;
    }
  };
  return rec(0, v);
}

// Random graded poset with m in {1,2} factors satisfying the stratification
// rules: layered covers, one top element, index set {1,2} above a cut rank
// and {2} below it, bonds across the cut fixed by the degrees.
inline stratkit::StratData random_strat(std::mt19937_64& rng) {
  auto uni = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
  int m = uni(1, 2);
  int r = uni(1, 4);
  int cut = m == 2 ? uni(1, r) : 0;
  std::vector<std::vector<int>> layer(r + 1);
  std::vector<std::string> labels;
  for (int k = r; k >= 0; --k) {
    int width = k == r ? 1 : uni(1, 2);
    for (int w = 0; w < width; ++w) {
      layer[k].push_back(static_cast<int>(labels.size()));
      labels.push_back("r" + std::to_string(k) + "_" + std::to_string(w));
    }
  }
  stratkit::StratData s;
  s.name = "random";
  s.m = m;
  s.index_sets.resize(labels.size());
  s.degrees.resize(labels.size());
  for (int k = 0; k <= r; ++k)
    for (int p : layer[k]) {
      if (m == 1) {
        s.index_sets[p] = {1};
        s.degrees[p] = {uni(1, 3)};
      } else if (k >= cut) {
        s.index_sets[p] = {1, 2};
        s.degrees[p] = {uni(1, 2), uni(0, 2)};
      } else {
        s.index_sets[p] = {2};
        s.degrees[p] = {0, uni(1, 2)};
      }
    }
  std::vector<stratkit::GradedPoset::Edge> covers;
  std::map<stratkit::GradedPoset::Edge, int> bonds;
  for (int k = 1; k <= r; ++k) {
    std::set<int> hit;
    for (int top : layer[k]) {
      std::vector<int> below;
      for (int b : layer[k - 1])
        if (uni(0, 1)) below.push_back(b);
      if (below.empty()) below.push_back(layer[k - 1][uni(0, static_cast<int>(layer[k - 1].size()) - 1)]);
      for (int b : below) {
        covers.emplace_back(top, b);
        hit.insert(b);
      }
    }
    for (int b : layer[k - 1])
      if (!hit.count(b)) {
        covers.emplace_back(layer[k][0], b);
      }
  }
  for (auto e : covers) {
    int top = e.first, bottom = e.second;
    int b = uni(1, 2);
    if (s.index_sets[top].size() > s.index_sets[bottom].size()) b = s.degrees[top][0];
    bonds[e] = b;
  }
  s.poset = stratkit::GradedPoset::from_covers(labels, covers, bonds);
  return s;
}

}  // namespace oracle

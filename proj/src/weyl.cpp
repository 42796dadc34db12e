#include "stratkit/weyl.hpp"

#include <algorithm>
#include <functional>

#include "stratkit/rational.hpp"

namespace stratkit {

namespace {

void check_cuts(int n, const std::vector<int>& cuts) {
  for (size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i] <= 0 || cuts[i] >= n) throw ShapeError("cut point out of range");
    if (i && cuts[i] <= cuts[i - 1]) throw ShapeError("cut points must increase");
  }
}

std::vector<std::pair<int, int>> ranges(int n, const std::vector<int>& cuts) {
  std::vector<std::pair<int, int>> r;
  int start = 0;
  for (int c : cuts) {
    r.emplace_back(start, c);
    start = c;
  }
  r.emplace_back(start, n);
  return r;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Coset Coset::make(int n, std::vector<int> cuts, std::vector<int> word) {
  check_cuts(n, cuts);
  if (static_cast<int>(word.size()) != n) throw ShapeError("word length differs from n");
  std::vector<int> s = word;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < n; ++i)
    if (s[i] != i + 1) throw ShapeError("word is not a permutation of 1..n");
  for (auto [a, b] : ranges(n, cuts)) std::sort(word.begin() + a, word.begin() + b);
  return Coset{n, std::move(cuts), std::move(word)};
}

Coset Coset::identity(int n, std::vector<int> cuts) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return make(n, std::move(cuts), std::move(w));
}

Coset Coset::permutation(const std::vector<int>& word) {
  int n = static_cast<int>(word.size());
  return make(n, all_cuts(n), word);
}

Coset Coset::column(int n, int k, std::vector<int> theta) {
  if (static_cast<int>(theta.size()) != k) throw ShapeError("column has wrong length");
  std::vector<bool> used(n + 1, false);
  for (int x : theta) {
    if (x < 1 || x > n || used[x]) throw ShapeError("bad column entry");
    used[x] = true;
  }
  for (int x = 1; x <= n; ++x)
    if (!used[x]) theta.push_back(x);
  return make(n, {k}, std::move(theta));
}

std::vector<std::vector<int>> Coset::blocks() const {
  std::vector<std::vector<int>> out;
  for (auto [a, b] : ranges(n, cuts)) out.emplace_back(word.begin() + a, word.begin() + b);
  return out;
}

std::vector<int> Coset::first_block() const { return blocks().front(); }

std::string Coset::str() const {
  std::string s;
  auto bl = blocks();
  for (size_t i = 0; i < bl.size(); ++i) {
    if (i) s += '|';
    s += column_label(bl[i], n);
  }
  return s;
}

std::vector<int> all_cuts(int n) {
  std::vector<int> c;
  for (int i = 1; i < n; ++i) c.push_back(i);
  return c;
}

bool bruhat_leq(const Coset& a, const Coset& b) {
  if (a.n != b.n || a.cuts != b.cuts) throw ShapeError("cosets of different parabolics");
  for (int c : a.cuts) {
    std::vector<int> x(a.word.begin(), a.word.begin() + c);
    std::vector<int> y(b.word.begin(), b.word.begin() + c);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (int i = 0; i < c; ++i)
      if (x[i] > y[i]) return false;
  }
  return true;
}

Coset project(const Coset& s, const std::vector<int>& coarse_cuts) {
  if (!is_subset(coarse_cuts, s.cuts)) throw ShapeError("target parabolic is not coarser");
  return Coset::make(s.n, coarse_cuts, s.word);
}

namespace {

Coset lift(const Coset& s, const std::vector<int>& fine_cuts, bool descending) {
  check_cuts(s.n, fine_cuts);
  if (!is_subset(s.cuts, fine_cuts)) throw ShapeError("target parabolic is not finer");
  std::vector<int> w = s.word;
  for (auto [a, b] : ranges(s.n, s.cuts)) {
    if (descending) std::sort(w.begin() + a, w.begin() + b, std::greater<int>());
    else std::sort(w.begin() + a, w.begin() + b);
  }
  return Coset::make(s.n, fine_cuts, std::move(w));
}

}  // namespace

Coset max_lift(const Coset& s, const std::vector<int>& fine_cuts) { return lift(s, fine_cuts, true); }
Coset min_lift(const Coset& s, const std::vector<int>& fine_cuts) { return lift(s, fine_cuts, false); }

bool is_p_maximal(const Coset& s, int k) {
  if (!std::binary_search(s.cuts.begin(), s.cuts.end(), k)) throw ShapeError("P_k is not coarser");
  return s == max_lift(project(s, {k}), s.cuts);
}

bool is_p_minimal(const Coset& s, int k) {
  if (!std::binary_search(s.cuts.begin(), s.cuts.end(), k)) throw ShapeError("P_k is not coarser");
  return s == min_lift(project(s, {k}), s.cuts);
}

int length(const Coset& s) {
  int inv = 0;
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j)
      if (s.word[i] > s.word[j]) ++inv;
  return inv;
}

std::vector<Coset> all_cosets(int n, const std::vector<int>& cuts) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<Coset> out;
  do {
    Coset c = Coset::make(n, cuts, w);
    if (c.word == w) out.push_back(std::move(c));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

nlohmann::json to_json(const Coset& c) {
  return {{"n", c.n}, {"cuts", c.cuts}, {"blocks", c.blocks()}};
}

Coset coset_from_json(const nlohmann::json& j) {
  try {
    std::vector<int> w;
    for (const auto& b : j.at("blocks"))
      for (const auto& x : b) w.push_back(x.get<int>());
    return Coset::make(j.at("n").get<int>(), j.at("cuts").get<std::vector<int>>(), w);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad coset json: ") + e.what());
  }
}

std::string column_label(const std::vector<int>& theta, int n) {
  std::string s;
  for (size_t i = 0; i < theta.size(); ++i) {
    if (i && n > 9) s += ',';
    s += std::to_string(theta[i]);
  }
  return s;
}

void check_k_list(int n, const std::vector<int>& k) {
  if (n < 2) throw ShapeError("n must be at least 2");
  if (k.empty()) throw ShapeError("k list is empty");
  for (size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1 || k[i] > n - 1) throw ShapeError("k out of range");
    if (i && k[i] <= k[i - 1]) throw ShapeError("k list must be strictly increasing");
  }
}

bool tableau_leq(const std::vector<int>& phi, int j, const std::vector<int>& theta, int i) {
  if (i > j) return false;
  if (theta.size() > phi.size()) return false;
  for (size_t r = 0; r < theta.size(); ++r)
    if (phi[r] > theta[r]) return false;
  return true;
}

int UnderlineW::element(const std::vector<int>& column) const {
  std::vector<int> c = column;
  std::sort(c.begin(), c.end());
  for (size_t p = 0; p < theta.size(); ++p)
    if (theta[p] == c) return static_cast<int>(p);
  throw DomainError("column not in the poset: " + column_label(c, n));
}

std::vector<int> UnderlineW::cuts_from(int i) const { return {k.begin() + (i - 1), k.end()}; }

Coset UnderlineW::coset(int p) const { return Coset::column(n, k[index[p] - 1], theta[p]); }

Coset UnderlineW::max_q_i(int p) const { return max_lift(coset(p), cuts_from(index[p])); }

Coset UnderlineW::lift(int p) const { return min_lift(max_q_i(p), k); }

UnderlineW build_underline_w(int n, const std::vector<int>& k_list) {
  check_k_list(n, k_list);
  UnderlineW uw;
  uw.n = n;
  uw.k = k_list;
  int m = static_cast<int>(k_list.size());
  for (int i = 1; i <= m; ++i) {
    int k = k_list[i - 1];
    std::vector<bool> sel(n, false);
    std::fill(sel.begin(), sel.begin() + k, true);
    std::vector<std::vector<int>> cols;
    do {
      std::vector<int> c;
      for (int x = 0; x < n; ++x)
        if (sel[x]) c.push_back(x + 1);
      cols.push_back(c);
    } while (std::prev_permutation(sel.begin(), sel.end()));
    std::sort(cols.begin(), cols.end());
    for (auto& c : cols) {
      uw.theta.push_back(c);
      uw.index.push_back(i);
    }
  }
  int size = static_cast<int>(uw.theta.size());
  auto leq = [&](int a, int b) {
    return tableau_leq(uw.theta[a], uw.index[a], uw.theta[b], uw.index[b]);
  };
  std::vector<GradedPoset::Edge> covers;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (a == b || !leq(b, a)) continue;
      bool cover = true;
      for (int c = 0; c < size && cover; ++c)
        if (c != a && c != b && leq(b, c) && leq(c, a)) cover = false;
      if (cover) covers.emplace_back(a, b);
    }
  std::vector<std::string> labels;
  for (const auto& t : uw.theta) labels.push_back(column_label(t, n));
  std::vector<int> ranks(size);
  for (int p = 0; p < size; ++p) ranks[p] = length(uw.lift(p)) + (m - uw.index[p]);
  uw.poset = GradedPoset(std::move(labels), std::move(covers), std::move(ranks));
  return uw;
}

}  // namespace stratkit

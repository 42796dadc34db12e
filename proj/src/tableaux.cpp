#include "stratkit/tableaux.hpp"

#include <algorithm>
#include <functional>

namespace stratkit {

namespace {

bool strictly_increasing(const std::vector<int>& c) {
  for (size_t r = 1; r < c.size(); ++r)
    if (c[r] <= c[r - 1]) return false;
  return true;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x <= n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

int level_of(int length, const std::vector<int>& k_list) {
  auto it = std::find(k_list.begin(), k_list.end(), length);
  if (it == k_list.end()) throw DomainError("column length " + std::to_string(length) + " not allowed");
  return static_cast<int>(it - k_list.begin()) + 1;
}

}  // namespace

std::string Tableau::str() const {
  std::string s;
  size_t rows = 0;
  for (const auto& c : columns) rows = std::max(rows, c.size());
  for (size_t r = 0; r < rows; ++r) {
    std::string line;
    for (const auto& c : columns) {
      if (r >= c.size()) break;
      if (!line.empty()) line += ' ';
      line += std::to_string(c[r]);
    }
    s += line + '\n';
  }
  return s;
}

bool is_semistandard(const Tableau& t) {
  for (size_t j = 0; j < t.columns.size(); ++j) {
    const auto& c = t.columns[j];
    if (!strictly_increasing(c)) return false;
    if (j == 0) continue;
    const auto& left = t.columns[j - 1];
    if (c.size() > left.size()) return false;
    for (size_t r = 0; r < c.size(); ++r)
      if (left[r] > c[r]) return false;
  }
  return true;
}

bool is_semistandard_anti(const Tableau& t) {
  for (size_t j = 0; j < t.columns.size(); ++j) {
    const auto& c = t.columns[j];
    if (!strictly_increasing(c)) return false;
    if (j == 0) continue;
    const auto& left = t.columns[j - 1];
    if (c.size() < left.size()) return false;
    // Compare along rows counted from the bottom.
    for (size_t r = 1; r <= left.size(); ++r)
      if (left[left.size() - r] > c[c.size() - r]) return false;
  }
  return true;
}

std::vector<Tableau> enumerate_ssyt(int n, const std::vector<int>& k_list, const std::vector<int>& d) {
  check_k_list(n, k_list);
  if (d.size() != k_list.size()) throw ShapeError("shape length differs from k list");
  std::vector<int> lengths;
  for (int i = static_cast<int>(k_list.size()) - 1; i >= 0; --i) {
    if (d[i] < 0) throw ShapeError("negative shape entry");
    for (int c = 0; c < d[i]; ++c) lengths.push_back(k_list[i]);
  }
  std::vector<std::vector<std::vector<int>>> cols(n + 1);
  for (int k : k_list) cols[k] = subsets(n, k);

  std::vector<Tableau> out;
  Tableau cur;
  std::function<void(size_t)> rec = [&](size_t j) {
    if (j == lengths.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& c : cols[lengths[j]]) {
      if (j > 0) {
        const auto& left = cur.columns.back();
        bool ok = true;
        for (size_t r = 0; r < c.size() && ok; ++r) ok = left[r] <= c[r];
        if (!ok) continue;
      }
      cur.columns.push_back(c);
      rec(j + 1);
      cur.columns.pop_back();
    }
  };
  rec(0);
  return out;
}

long long count_ssyt(int n, const std::vector<int>& k_list, const std::vector<int>& d) {
  return static_cast<long long>(enumerate_ssyt(n, k_list, d).size());
}

QVector tableau_to_gamma(const Tableau& t, const UnderlineW& uw) {
  if (!is_semistandard(t)) throw DomainError("tableau is not semistandard");
  QVector v;
  for (const auto& c : t.columns) {
    level_of(static_cast<int>(c.size()), uw.k);
    v.add(uw.element(c), 1);
  }
  return v;
}

Tableau gamma_to_tableau(const QVector& v, const UnderlineW& uw) {
  std::vector<int> support = v.support();
  if (!uw.poset.is_chain(support)) throw DomainError("support is not a chain");
  std::sort(support.begin(), support.end(), [&](int a, int b) { return uw.poset.rank(a) < uw.poset.rank(b); });
  Tableau t;
  for (int p : support) {
    Q c = v.get(p);
    if (!is_integer(c) || c < 0) throw DomainError("coefficients must be non-negative integers");
    for (long r = 0; r < c.get_num().get_si(); ++r) t.columns.push_back(uw.theta[p]);
  }
  return t;
}

std::vector<int> degree_of_tableau(const Tableau& t, const std::vector<int>& k_list) {
  std::vector<int> d(k_list.size(), 0);
  for (const auto& c : t.columns) ++d[level_of(static_cast<int>(c.size()), k_list) - 1];
  return d;
}

nlohmann::json to_json(const Tableau& t) { return t.columns; }

Tableau tableau_from_json(const nlohmann::json& j) {
  try {
    return Tableau{j.get<std::vector<std::vector<int>>>()};
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad tableau json: ") + e.what());
  }
}

}  // namespace stratkit

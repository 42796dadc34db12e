#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stratkit/qvector.hpp"
#include "stratkit/weyl.hpp"

namespace stratkit {

// Columns left to right, each strictly increasing top to bottom.
struct Tableau {
  std::vector<std::vector<int>> columns;

  bool operator==(const Tableau& o) const { return columns == o.columns; }
  bool operator<(const Tableau& o) const { return columns < o.columns; }
  std::string str() const;  // rows of integers, one line per row
};

// Column-strict, row-weak, column lengths weakly decreasing.
bool is_semistandard(const Tableau& t);
// Anti convention: boxes aligned bottom-right, column lengths weakly increasing,
// rows read from the bottom. Entries listed top to bottom in each column.
bool is_semistandard_anti(const Tableau& t);

// Shape d: d_i columns of length k_i, longest columns first.
std::vector<Tableau> enumerate_ssyt(int n, const std::vector<int>& k_list, const std::vector<int>& d);
long long count_ssyt(int n, const std::vector<int>& k_list, const std::vector<int>& d);

QVector tableau_to_gamma(const Tableau& t, const UnderlineW& uw);
Tableau gamma_to_tableau(const QVector& v, const UnderlineW& uw);
std::vector<int> degree_of_tableau(const Tableau& t, const std::vector<int>& k_list);

nlohmann::json to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

}  // namespace stratkit

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stratkit/poset.hpp"

namespace stratkit {

// A coset sigma W_Q in S_n, Q given by its cut points 0 < c_1 < ... < c_m < n.
// The one-line word is stored with every block ascending.
struct Coset {
  int n = 0;
  std::vector<int> cuts;
  std::vector<int> word;

  static Coset make(int n, std::vector<int> cuts, std::vector<int> word);
  static Coset identity(int n, std::vector<int> cuts);
  static Coset permutation(const std::vector<int>& word);  // Q = B
  // theta in W/W_{P_k}, given as its first block.
  static Coset column(int n, int k, std::vector<int> theta);

  std::vector<std::vector<int>> blocks() const;
  std::vector<int> first_block() const;
  bool operator==(const Coset& o) const { return n == o.n && cuts == o.cuts && word == o.word; }
  bool operator<(const Coset& o) const { return word < o.word; }
  std::string str() const;  // blocks separated by '|'
};

std::vector<int> all_cuts(int n);  // 1..n-1, i.e. Q = B

bool bruhat_leq(const Coset& a, const Coset& b);
Coset project(const Coset& s, const std::vector<int>& coarse_cuts);
Coset max_lift(const Coset& s, const std::vector<int>& fine_cuts);
Coset min_lift(const Coset& s, const std::vector<int>& fine_cuts);
bool is_p_maximal(const Coset& s, int k);
bool is_p_minimal(const Coset& s, int k);
// Number of inversions between different blocks (length of the minimal representative).
int length(const Coset& s);
std::vector<Coset> all_cosets(int n, const std::vector<int>& cuts);

nlohmann::json to_json(const Coset& c);
Coset coset_from_json(const nlohmann::json& j);

std::string column_label(const std::vector<int>& theta, int n);

// The poset of pairs (theta, i), theta a k_i-subset of [n].
struct UnderlineW {
  int n = 0;
  std::vector<int> k;  // strictly increasing
  GradedPoset poset;
  std::vector<std::vector<int>> theta;  // per element, ascending
  std::vector<int> index;               // per element, 1-based i

  int m() const { return static_cast<int>(k.size()); }
  int element(const std::vector<int>& column) const;  // throws DomainError
  std::vector<int> cuts_from(int i) const;             // {k_i, ..., k_m}
  Coset coset(int p) const;                            // theta in W/W_{P_{k_i}}
  Coset max_q_i(int p) const;                          // max_{Q_i}(theta)
  Coset lift(int p) const;                             // min_Q o max_{Q_i}(theta)
};

void check_k_list(int n, const std::vector<int>& k);
// (phi, j) <= (theta, i): i <= j and the two-column tableau [phi | theta] is semistandard.
bool tableau_leq(const std::vector<int>& phi, int j, const std::vector<int>& theta, int i);
UnderlineW build_underline_w(int n, const std::vector<int>& k_list);

}  // namespace stratkit

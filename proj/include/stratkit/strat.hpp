#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stratkit/poset.hpp"
#include "stratkit/qvector.hpp"
#include "stratkit/weyl.hpp"

namespace stratkit {

using Degree = std::vector<int>;   // length m
using IndexSet = std::vector<int>;  // sorted, entries in 1..m

// Combinatorial data of a stratification: poset with bonds, index sets I_p and
// degrees of the extremal functions f_p.
struct StratData {
  std::string name;
  GradedPoset poset;
  int m = 0;
  std::vector<IndexSet> index_sets;
  std::vector<Degree> degrees;
  // Strata names for display ("X^(1)_312"), keyed by element.
  std::map<int, std::string> stratum_names;
  // Explicit monoid generators per maximal chain, for fans that are neither
  // Hodge nor LS. `saturated` promises Gamma_C = cone ∩ lattice.
  std::map<Chain, std::vector<QVector>> monoid_generators;
  bool monoids_saturated = false;
  std::optional<UnderlineW> type_a;

  size_t size() const { return poset.size(); }
  // Bond of a minimal element to the virtual bottom: the total degree.
  int bottom_bond(int p) const;
  int total_degree(int p) const;
  // Element by label or stratum name.
  int element(const std::string& name_or_label) const;
  std::string display_name(int p) const;
};

std::vector<std::string> validate_strat(const StratData& s);

StratData build_type_a(int n, const std::vector<int>& k_list);

// y1, y0y1, antiA2.
StratData builtin_example(const std::string& name);
std::vector<std::string> builtin_names();

struct Classification {
  bool is_hodge = false;
  bool is_ls_candidate = false;
};
Classification classify(const StratData& s);

// Index poset: distinct index sets ordered by inclusion.
std::vector<IndexSet> index_poset(const StratData& s);
IndexSet underline_index(const StratData& s, const IndexSet& I);
IndexSet underline_index(const std::vector<IndexSet>& poset, const IndexSet& I);

std::string index_set_string(const IndexSet& I);

nlohmann::json to_json(const StratData& s);
StratData strat_from_json(const nlohmann::json& j);

}  // namespace stratkit

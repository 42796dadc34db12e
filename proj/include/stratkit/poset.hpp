#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace stratkit {

// Element ids, strictly descending in the poset.
using Chain = std::vector<int>;

// Finite graded poset with per-cover bonds. Immutable after construction.
class GradedPoset {
 public:
  using Edge = std::pair<int, int>;  // (top, bottom): top covers bottom

  GradedPoset() = default;
  GradedPoset(std::vector<std::string> labels, std::vector<Edge> covers, std::vector<int> ranks,
              std::map<Edge, int> bonds = {});

  // Ranks are computed as the length of the longest descending path.
  static GradedPoset from_covers(std::vector<std::string> labels, std::vector<Edge> covers,
                                 std::map<Edge, int> bonds = {});
  static GradedPoset from_labels(const std::vector<std::string>& labels,
                                 const std::vector<std::pair<std::string, std::string>>& covers,
                                 const std::map<std::pair<std::string, std::string>, int>& bonds = {});

  size_t size() const { return labels_.size(); }
  const std::string& label(int p) const { return labels_.at(p); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(const std::string& label) const;
  int id(const std::string& label) const;  // throws DomainError
  int rank(int p) const { return ranks_.at(p); }
  const std::vector<int>& ranks() const { return ranks_; }
  const std::vector<Edge>& covers() const { return covers_; }
  const std::map<Edge, int>& explicit_bonds() const { return bonds_; }

  bool is_cover(int top, int bottom) const;
  int bond(int top, int bottom) const;  // 1 unless set; throws if not a cover
  bool leq(int a, int b) const { return below_[b][a]; }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  bool is_chain(const std::vector<int>& elems) const;
  bool acyclic() const { return acyclic_; }

  const std::vector<int>& lower_covers(int p) const { return down_[p]; }
  const std::vector<int>& upper_covers(int p) const { return up_[p]; }
  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;

 private:
  void index();

  std::vector<std::string> labels_;
  std::vector<Edge> covers_;
  std::vector<int> ranks_;
  std::map<Edge, int> bonds_;
  std::map<std::string, int> by_label_;
  std::vector<std::vector<int>> down_, up_;
  std::vector<std::vector<bool>> below_;  // below_[b][a] iff a <= b
  bool acyclic_ = true;
};

// Linear extension, listed from the top down.
struct TotalOrder {
  std::vector<int> order;
  std::vector<int> pos;  // pos[p] = index in order (0 = largest)

  static TotalOrder from_order(std::vector<int> order);
  bool greater(int a, int b) const { return pos[a] < pos[b]; }
};

std::vector<std::string> validate(const GradedPoset& poset);

// All maximal chains, lexicographic by labels read top-down.
std::vector<Chain> maximal_chains(const GradedPoset& poset);

// Rank descending, ties by label.
TotalOrder linearize(const GradedPoset& poset);
TotalOrder random_linear_extension(const GradedPoset& poset, std::uint64_t seed);
bool refines(const GradedPoset& poset, const TotalOrder& order);

std::string export_hasse(const GradedPoset& poset);

std::string chain_to_string(const GradedPoset& poset, const Chain& chain);
// Parses "X>01>0" (whitespace ignored).
Chain parse_chain(const GradedPoset& poset, const std::string& text);

nlohmann::json to_json(const GradedPoset& poset);
GradedPoset poset_from_json(const nlohmann::json& j);

}  // namespace stratkit

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stratkit/poset.hpp"
#include "stratkit/rational.hpp"

namespace stratkit {

// Sparse rational vector indexed by poset elements. Zero entries are never stored.
class QVector {
 public:
  QVector() = default;
  static QVector unit(int p, const Q& c = 1);

  Q get(int p) const;
  void set(int p, const Q& c);
  void add(int p, const Q& c);
  const std::map<int, Q>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }
  std::vector<int> support() const;

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);
  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(const Q& s, const QVector& v);
  bool operator==(const QVector& o) const { return e_ == o.e_; }
  bool operator!=(const QVector& o) const { return e_ != o.e_; }
  bool operator<(const QVector& o) const { return e_ < o.e_; }

  bool non_negative() const;
  bool leq_componentwise(const QVector& o) const;

  // Dense coefficients along a chain, and back.
  QVec on_chain(const Chain& c) const;
  static QVector from_chain(const Chain& c, const QVec& coeffs);

 private:
  std::map<int, Q> e_;
};

// Lexicographic comparison induced by a total order: the entry at the largest
// element (in the order) where a and b differ decides. Returns -1, 0, 1.
int lex_compare(const QVector& a, const QVector& b, const TotalOrder& order);

// "1/2 e_X + 1/2 e_01", terms listed along the given order.
std::string format(const QVector& v, const GradedPoset& poset, const TotalOrder& order);
std::string format(const QVector& v, const GradedPoset& poset);

nlohmann::json to_json(const QVector& v, const GradedPoset& poset);
QVector qvector_from_json(const nlohmann::json& j, const GradedPoset& poset);

}  // namespace stratkit

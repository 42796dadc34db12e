#pragma once

#include <map>
#include <string>
#include <vector>

#include "stratkit/fan.hpp"
#include "stratkit/strat.hpp"

namespace stratkit {

using Exponent = std::vector<int>;

// Sparse polynomial (Laurent when exponents go negative) over named variables.
class MultiGradedPoly {
 public:
  MultiGradedPoly() = default;
  MultiGradedPoly(std::vector<std::string> vars, std::vector<Degree> degrees);

  static MultiGradedPoly constant(const MultiGradedPoly& like, const Q& c);
  static MultiGradedPoly variable(const MultiGradedPoly& like, const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Degree>& variable_degrees() const { return degs_; }
  const std::map<Exponent, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponent& e, const Q& c);

  Degree degree_of(const Exponent& e) const;
  bool is_homogeneous() const;
  Degree degree() const;  // throws unless homogeneous and non-zero
  // Multihomogeneous components keyed by degree.
  std::map<Degree, MultiGradedPoly> components() const;

  MultiGradedPoly operator+(const MultiGradedPoly& o) const;
  MultiGradedPoly operator-(const MultiGradedPoly& o) const;
  MultiGradedPoly operator*(const MultiGradedPoly& o) const;
  MultiGradedPoly pow(int k) const;
  bool operator==(const MultiGradedPoly& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  void check_same(const MultiGradedPoly& o) const;

  std::vector<std::string> vars_;
  std::vector<Degree> degs_;
  std::map<Exponent, Q> terms_;
};

// Parses "2 * x0^2 y1 - 1/2 x1*y0 + (x0*y1)^2" over the variables of `like`.
MultiGradedPoly parse_poly(const std::string& text, const MultiGradedPoly& like);

// Monomial parametrization adapted to a maximal chain p_r > ... > p_0.
// Exponent vectors are indexed by chain position: entry t belongs to t_{r-t},
// the parameter of the cover below chain[t] (t_0 for the bottom).
struct ChainChart {
  Chain chain;
  std::vector<Exponent> substitution;  // per ambient variable

  std::map<Exponent, Q> pullback(const MultiGradedPoly& g) const;
};

// Everything needed to evaluate the quasi-valuation of a chart-presented example.
struct ChartAtlas {
  MultiGradedPoly ring;  // zero polynomial carrying variables and degrees
  std::vector<MultiGradedPoly> relations;
  std::map<int, MultiGradedPoly> extremal;                // f_p
  std::map<int, std::vector<std::string>> vanishing;      // coordinates vanishing on X_p
  std::vector<ChainChart> charts;                          // one per maximal chain

  const ChainChart& chart(const Chain& c) const;
};
ChartAtlas builtin_atlas(const StratData& s);

struct ChainValuation {
  Chain chain;
  QVector value;
  std::vector<Q> nu;     // per chain position
  std::vector<int> bond;  // per chain position, bottom bond last
};

ChainValuation chain_valuation(const MultiGradedPoly& g, const ChainChart& chart, const StratData& s,
                               const ChartAtlas& atlas);

struct ValuationResult {
  QVector value;
  Chain chain;  // chain achieving the minimum
  std::vector<ChainValuation> per_chain;
};

// Lex-minimum over all chain valuations. Checks non-negativity and degree compatibility.
ValuationResult quasi_valuation(const MultiGradedPoly& g, const ChartAtlas& atlas, const StratData& s,
                                const TotalOrder& order);

QVector min_homogeneous_components(const MultiGradedPoly& h, const ChartAtlas& atlas, const StratData& s,
                                   const TotalOrder& order);

std::vector<std::string> validate_chart(const ChainChart& chart, const StratData& s, const ChartAtlas& atlas);

}  // namespace stratkit

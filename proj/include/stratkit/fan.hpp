#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stratkit/qvector.hpp"
#include "stratkit/strat.hpp"

namespace stratkit {

// deg: e_p -> deg f_p, extended linearly. Length m.
QVec degree_map(const QVector& v, const StratData& s);

enum class MonoidFlavor { FreeHodge, LS, Explicit };
std::string flavor_name(MonoidFlavor f);

// Facet inequalities and equations of Cone(gens) in Q^dim.
struct ConeHrep {
  std::vector<QVec> inequalities;  // a . x >= 0
  std::vector<QVec> equations;     // a . x = 0
  bool contains(const QVec& x) const;
};
ConeHrep cone_hrep(const std::vector<QVec>& gens, size_t dim);

// Lattice in Q^C, given by a basis (rows, chain coordinates top-down).
struct LatticeDesc {
  Chain chain;
  std::vector<QVec> basis;
  // Optional B with v in the lattice iff B v is integral.
  std::optional<QMat> membership;

  bool contains(const QVector& v) const;
  bool contains(const QVec& coords) const;
  size_t rank() const { return basis.size(); }
};

// Gamma_C for one chain.
struct MonoidDesc {
  Chain chain;
  MonoidFlavor flavor = MonoidFlavor::FreeHodge;
  std::vector<QVector> generators;  // Hilbert basis
  bool saturated = true;
  LatticeDesc lattice;               // generated by the monoid
  ConeHrep cone;                     // chain coordinates

  bool contains(const QVector& v) const;
};

enum class GammaSource { Auto, Explicit };

// Throws DomainError("explicit generators required") when Auto cannot decide.
MonoidDesc gamma_for_chain(const StratData& s, const Chain& c, GammaSource source = GammaSource::Auto);

// One monoid per maximal chain, in maximal_chains order.
struct Fan {
  StratData strat;
  std::vector<MonoidDesc> monoids;

  bool contains(const QVector& v) const;
  const MonoidDesc& monoid(const Chain& c) const;
};
Fan fan_of_monoids(const StratData& s, GammaSource source = GammaSource::Auto);

// b_{p_i,p_{i-1}} (a_i + ... + a_s) in Z for i >= 1, and the total sum in Z.
bool ls_lattice_contains(const GradedPoset& poset, const Chain& c, const QVector& v);
LatticeDesc ls_lattice(const GradedPoset& poset, const Chain& c);

// vals[j] are the valuation vectors of F_r, ..., F_0 (top-down). B is the
// inverse of the matrix with these columns and must be integral.
LatticeDesc lattice_from_valuations(const Chain& c, const std::vector<QVector>& vals);

// Hilbert basis of {x in Gamma_C : deg x in N0 d}.
std::vector<QVector> veronese_generators(const MonoidDesc& m, const StratData& s, const std::vector<int>& d);

// All elements of Gamma_C with total degree at most `bound`.
std::vector<QVector> monoid_elements(const MonoidDesc& m, const StratData& s, int bound);

bool is_decomposable(const QVector& a, const Fan& fan);
// Unique decomposition a = a^1 + ... + a^s, min supp a^k >= max supp a^{k+1}.
std::vector<QVector> decompose(const QVector& a, const Fan& fan);
// Indecomposable elements, found among Gamma-elements of total degree <= bound
// (default: the largest total degree of a Hilbert basis element).
std::vector<QVector> indecomposables(const Fan& fan, int bound = 0);

// a + b when supp a ∪ supp b is a chain, otherwise nullopt (the product is zero).
std::optional<QVector> fan_algebra_product(const QVector& a, const QVector& b, const GradedPoset& poset);

nlohmann::json to_json(const MonoidDesc& m, const GradedPoset& poset);

}  // namespace stratkit

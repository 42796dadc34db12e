#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stratkit/fan.hpp"
#include "stratkit/strat.hpp"

namespace stratkit {

// sigma_C = Cone{deg f_p : p in C} in Q^m.
struct ConeDesc {
  Chain chain;
  std::vector<QVec> generators;  // one per chain element
  ConeHrep hrep;
  size_t dim = 0;

  bool contains(const Degree& d) const;
};
ConeDesc sigma_cone(const StratData& s, const Chain& c);

// C_d: elements whose degree lies on every facet of sigma_C containing d.
// Empty when d is not in sigma_C.
Chain restrict_chain(const StratData& s, const Chain& c, const Degree& d);

// Image of C -> C_d over all chains, ordered by inclusion.
struct VeronesePoset {
  std::vector<Chain> elements;  // distinct images, sorted
  struct Component {
    Chain image;                // a maximal image
    std::vector<Chain> chains;  // maximal chains mapping onto it
  };
  std::vector<Component> maximal;
};
VeronesePoset veronese_poset(const StratData& s, const Degree& d);

struct Face {
  Chain subchain;
  int dim = 0;
  std::vector<int> vertices;  // indices into PolytopeDesc::vertices
};

// Delta_C^(d) = R_{>=0}^C ∩ {deg = d}.
struct PolytopeDesc {
  Chain chain;
  Degree d;
  bool empty = true;
  int dim = -1;
  std::vector<QVector> vertices;
  std::vector<Face> faces;  // keyed by subchains D with D_d = D

  const Face* face(const Chain& sub) const;
};
PolytopeDesc polytope(const StratData& s, const Chain& c, const Degree& d);

// Affine identification of the degree-d slice with Q^r via L_0, the degree-0
// sublattice of L^C.
struct RationalStructure {
  Chain chain;
  std::vector<QVector> sections;  // b^(i), deg b^(i) = e_i
  std::vector<QVec> l0_basis;     // chain coordinates
  LatticeDesc lattice;

  size_t rank() const { return l0_basis.size(); }
  // Coordinates of x - base in the L_0 basis.
  QVec project(const QVector& x, const QVector& base) const;
  // sum_i d_i b^(i).
  QVector offset(const Degree& d) const;
};
RationalStructure rational_structure(const StratData& s, const Chain& c, const LatticeDesc& lattice);

struct VolumeResult {
  Q value = 0;
  bool collapsed = false;  // dim < r, value forced to 0
  int dim = -1;
  int r = 0;
};
VolumeResult volume(const PolytopeDesc& p, const RationalStructure& rs);
VolumeResult chain_volume(const StratData& s, const Fan& fan, const Chain& c, const Degree& d);

struct LeadingTerm {
  Q value = 0;
  std::vector<std::pair<Chain, Q>> terms;  // chain used per component, volume
  std::vector<std::string> warnings;
};
LeadingTerm leading_term(const StratData& s, const Degree& d, const Fan& fan);

// Closed form for LS-type data: b_C prod_j phi_j^{|C_j|-1}/(|C_j|-1)!.
Q ls_volume(const StratData& s, const Chain& c, const Degree& d);

// k -> sum of b_C over maximal chains meeting factor i in exactly k_i + 1 elements.
std::map<std::vector<int>, Z> multidegrees(const StratData& s);

// #(n Delta ∩ lattice), counted inside the slice deg = n d.
Z ehrhart_count(const PolytopeDesc& p, const StratData& s, const LatticeDesc& lattice, long n);

nlohmann::json to_json(const PolytopeDesc& p, const StratData& s);

}  // namespace stratkit

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "stratkit/fan.hpp"
#include "stratkit/strat.hpp"
#include "stratkit/tableaux.hpp"

namespace stratkit {

// Product of Pluecker coordinates p_theta, columns sorted by length descending then lexicographically.
struct PlueckerMonomial {
  std::vector<std::vector<int>> columns;

  static PlueckerMonomial make(std::vector<std::vector<int>> columns);
  static PlueckerMonomial from_tableau(const Tableau& t);
  Tableau tableau() const { return Tableau{columns}; }
  bool operator<(const PlueckerMonomial& o) const { return columns < o.columns; }
  bool operator==(const PlueckerMonomial& o) const { return columns == o.columns; }
  std::string str() const;  // "p[1,3]*p[2]"
};

struct PlueckerExpr {
  int n = 0;
  std::vector<int> k;
  std::map<PlueckerMonomial, Q> terms;

  void add(const PlueckerMonomial& mono, const Q& c);
  bool is_zero() const { return terms.empty(); }
  // Columns per length k_i; throws unless all terms agree.
  std::vector<int> degree() const;
  std::string str() const;
};

// "p[1] * p[2,3] - 1/2 p[2] p[1,3]"; p[13] is read as p[1,3] when n <= 9.
PlueckerExpr parse_pluecker(const std::string& text, int n, const std::vector<int>& k);

// p_theta(M) = minor with rows theta and columns 1..|theta|.
Q evaluate(const PlueckerMonomial& mono, const QMat& M);
Q evaluate(const PlueckerExpr& e, const QMat& M);

QMat random_matrix(int n, std::mt19937_64& rng);

struct Straightening {
  PlueckerExpr result;
  int attempts = 0;  // sampling rounds over all primes
};
// Expansion in the semistandard basis. Solved modulo primes at random points and
// lifted by CRT; the lift is re-checked exactly at `verify_points` integer matrices.
Straightening straighten(const PlueckerExpr& e, std::uint64_t seed, int verify_points = 10);

// Lex-min of the Gamma vectors of the standard terms.
QVector quasi_valuation_pluecker(const PlueckerExpr& e, const UnderlineW& uw, const TotalOrder& order,
                                 std::uint64_t seed);

// p_{(phi,j)} vanishes on the stratum of (theta, i).
bool vanishes_on_stratum(const UnderlineW& uw, const std::vector<int>& phi, int j, int p);
// p_{(phi,j)} vanishes on the Schubert variety of tau in G/B.
bool vanishes_on_schubert(const std::vector<int>& phi, const Coset& tau);

// Standard monomials of shape d none of whose columns vanish on the Schubert variety of tau.
long long nonvanishing_schubert_count(int n, const std::vector<int>& k, const std::vector<int>& d, const Coset& tau);

// Gamma elements of degree d whose support lies below p.
long long standard_on_stratum_count(const StratData& s, const Fan& fan, int p, const std::vector<int>& d);

}  // namespace stratkit

#pragma once

#include <map>
#include <string>
#include <vector>

#include "charlab/qseries.hpp"
#include "charlab/rational.hpp"

namespace charlab {

// Dynkin labels m_1..m_l on the B_l-side fundamental weights.
struct BDynkinLabels {
  std::vector<long> m;

  explicit BDynkinLabels(std::vector<long> labels);
  int rank() const { return static_cast<int>(m.size()); }
};

// Local Weyl module dimension; parity split on the last label.
Integer dim_local_weyl_special(const BDynkinLabels& lambda);

// Multiset of (node, degree) generators: degrees 1..m_i for i < l and
// 1..floor(m_l/2) at the last node.
using GradedGeneratorSet = std::vector<std::pair<int, int>>;
GradedGeneratorSet a_lambda_generators(const BDynkinLabels& lambda);

// prod over generators of (1 - q^r)^{-1}, truncated at q^{qmax_half/2}.
QSeries a_lambda_hilbert(const BDynkinLabels& lambda, int qmax_half);

// Polynomials in graded commuting variables v_s ~ h_{i, s mod 2} t^{-s};
// a monomial is an exponent vector over s = 1..smax.
struct GradedPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rational> terms;

  static GradedPoly zero(int nvars) { return {nvars, {}}; }
  static GradedPoly constant(int nvars, const Rational& c);
  static GradedPoly variable(int nvars, int s, const Rational& c = Rational(1));
  GradedPoly& operator+=(const GradedPoly& o);
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  GradedPoly scaled(const Rational& c) const;
  bool operator==(const GradedPoly& o) const { return terms == o.terms; }
  std::string str(const std::string& varname) const;
};

// p_{i,r} for r = 0..rmax as polynomials in the h-variables.
std::vector<GradedPoly> p_expansion(int rank, int node, int rmax);

// h-variables v_s for s = 1..smax as polynomials in the p-variables.
std::vector<GradedPoly> h_from_p(int rank, int node, int smax);

struct FreeRankReport {
  BDynkinLabels lambda;
  Integer rank;
  GradedGeneratorSet generators;
  QSeries hilbert;

  std::string to_json() const;
};

FreeRankReport free_rank_report(const BDynkinLabels& lambda, int qmax_half);

}  // namespace charlab

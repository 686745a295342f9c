#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "charlab/weight.hpp"

namespace charlab {

// A root beta + c*delta together with its root-space dimension.
struct AffineRoot {
  FiniteWeight finite;
  Rational delta_coeff;
  int multiplicity = 1;

  bool operator==(const AffineRoot& o) const {
    return delta_coeff == o.delta_coeff && multiplicity == o.multiplicity && finite == o.finite;
  }
  bool operator<(const AffineRoot& o) const {
    if (delta_coeff != o.delta_coeff) return delta_coeff < o.delta_coeff;
    return finite < o.finite;
  }
};

using ReducedWord = std::vector<int>;

// Affine root datum of type A_{2l}^(2) in the realization
//   alpha_0 = delta/2 - eps_1,  alpha_i = eps_i - eps_{i+1},  alpha_l = 2 eps_l,
// normalized so (alpha_0|alpha_0) = 1.  Then delta = 2a_0+...+2a_{l-1}+a_l.
class RootDatum {
 public:
  explicit RootDatum(int rank);

  int rank() const { return rank_; }
  const AffineWeight& simple_root(int i) const { return simple_[i]; }
  Rational simple_root_norm2(int i) const { return norm2_[i]; }
  const std::vector<long>& delta_marks() const { return marks_; }
  int imaginary_multiplicity() const { return rank_; }
  long cartan(int i, int j) const;  // a_ij = <alpha_j, coroot_i>

  Rational bilinear(const AffineWeight& mu, const AffineWeight& nu) const;
  Rational pair_coroot(const AffineWeight& mu, int i) const;
  AffineWeight reflect(int i, const AffineWeight& mu) const;
  FiniteWeight reflect_finite(int i, const FiniteWeight& mu) const;  // i in 1..l

  bool is_dominant(const FiniteWeight& w) const;
  // Dominant representative plus a word over 1..l whose action (rightmost
  // letter first) carries lambda to it.
  std::pair<FiniteWeight, ReducedWord> dominant_rep(const FiniteWeight& lambda) const;

  std::set<FiniteWeight> orbit(const FiniteWeight& lambda) const;

  // Nonnegative integer span of the finite simple roots.
  bool in_q_plus(const FiniteWeight& nu) const;
  // Nonnegative integer span of {alpha_1..alpha_l} u {eps_1..eps_l}.
  bool cone_member_qprime_plus(const FiniteWeight& nu) const;

  // Macdonald order: mu >= lambda.
  bool macdonald_geq(const FiniteWeight& mu, const FiniteWeight& lambda) const;

  // All negative roots with -qmax <= delta-coefficient <= 0; qmax in half-units.
  std::vector<AffineRoot> neg_roots_upto(int qmax_half) const;
  std::vector<AffineRoot> positive_finite_roots() const;

  // Exact membership of x in the convex hull of the orbit of mu.
  bool hull_member(const FiniteWeight& mu, const FiniteWeight& x) const;

 private:
  int rank_;
  std::vector<AffineWeight> simple_;
  std::vector<Rational> norm2_;
  std::vector<long> marks_;
};

}  // namespace charlab

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "charlab/rational.hpp"

namespace charlab {

// Weight of the rank-l finite torus in orthonormal coordinates,
// (eps_i | eps_j) = delta_ij.
struct FiniteWeight {
  std::vector<Rational> c;

  FiniteWeight() = default;
  explicit FiniteWeight(int rank) : c(rank, Rational(0)) {}
  explicit FiniteWeight(std::vector<Rational> coords) : c(std::move(coords)) {}

  int rank() const { return static_cast<int>(c.size()); }

  bool operator==(const FiniteWeight& o) const { return c == o.c; }
  bool operator<(const FiniteWeight& o) const { return c < o.c; }

  FiniteWeight& operator+=(const FiniteWeight& o);
  FiniteWeight& operator-=(const FiniteWeight& o);
  FiniteWeight& operator*=(const Rational& s);

  friend FiniteWeight operator+(FiniteWeight a, const FiniteWeight& b) { return a += b; }
  friend FiniteWeight operator-(FiniteWeight a, const FiniteWeight& b) { return a -= b; }
  friend FiniteWeight operator*(const Rational& s, FiniteWeight a) { return a *= s; }
  FiniteWeight operator-() const;

  bool is_zero() const;
  // Lattice membership in P = Z^l, i.e. integral fundamental-weight labels.
  bool is_lattice() const;
  std::vector<long> as_ints() const;

  Rational dot(const FiniteWeight& o) const;
  Rational norm2() const { return dot(*this); }
};

FiniteWeight finite_from_ints(const std::vector<long>& v);
// lambda = sum_i labels[i] * w_i with w_i = eps_1 + ... + eps_i.
FiniteWeight finite_from_labels(const std::vector<long>& labels);
std::vector<long> labels_from_finite(const FiniteWeight& w);
std::string format_weight(const FiniteWeight& w);

// finite + level*Lambda_0 - energy*delta.  A weight lambda - m delta
// contributes q^m to graded characters, so energy is the q-exponent.
struct AffineWeight {
  FiniteWeight finite;
  long level = 0;
  Rational energy = Rational(0);

  AffineWeight() = default;
  AffineWeight(FiniteWeight f, long lvl, Rational en)
      : finite(std::move(f)), level(lvl), energy(std::move(en)) {}

  int rank() const { return finite.rank(); }
  Rational delta_coeff() const { return -energy; }

  bool operator==(const AffineWeight& o) const {
    return level == o.level && energy == o.energy && finite == o.finite;
  }

  friend AffineWeight operator+(const AffineWeight& a, const AffineWeight& b) {
    return AffineWeight(a.finite + b.finite, a.level + b.level, a.energy + b.energy);
  }
  friend AffineWeight operator-(const AffineWeight& a, const AffineWeight& b) {
    return AffineWeight(a.finite - b.finite, a.level - b.level, a.energy - b.energy);
  }
  friend AffineWeight operator*(const Rational& s, const AffineWeight& a) {
    if (!is_integer(s * Rational(a.level))) throw std::invalid_argument("non-integral level");
    return AffineWeight(s * a.finite, to_long(s * Rational(a.level)), s * a.energy);
  }
};

AffineWeight lambda0(int rank);
AffineWeight delta_weight(int rank);  // the weight delta itself, i.e. energy -1
AffineWeight affinize(const FiniteWeight& w);

// JSON array of rational strings, e.g. ["3/2","-1"].
std::string weight_to_json(const FiniteWeight& w);
FiniteWeight weight_from_json(const std::string& text);

}  // namespace charlab

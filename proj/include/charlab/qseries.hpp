#pragma once

#include <map>
#include <string>

#include "charlab/rational.hpp"
#include "charlab/window.hpp"

namespace charlab {

// Truncated Laurent series in q^{1/2} over exact rationals.  Exponents are
// stored in half-units.
class QSeries {
 public:
  QSeries() : win_(Window::entire(0, 0)) {}
  explicit QSeries(Window w) : win_(w) {}

  static QSeries zero() { return QSeries(); }
  static QSeries one() { return monomial(Rational(1), 0); }
  static QSeries monomial(const Rational& c, int e2);
  static QSeries zero_truncated(int lo2, int hi2) { return QSeries(Window::truncated(lo2, hi2)); }

  const Window& window() const { return win_; }
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set(int e2, const Rational& c);
  void add_term(int e2, const Rational& c);
  Rational coeff(int e2) const;          // throws PrecisionError outside knowledge
  Rational coeff_or_zero(int e2) const;  // raw lookup, no window check

  // lowest stored term; requires a nonzero term within the window
  std::pair<int, Rational> lowest_term() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator-() const;

  QSeries scaled(const Rational& c) const;
  QSeries shifted(int e2) const;  // multiply by q^{e2/2}
  QSeries star() const;           // q -> q^{-1}

  // Multiplicative inverse; the lowest term within the window must be nonzero.
  QSeries inverted() const;

  // Truncate knowledge to [lo2, hi2] (drops terms outside).
  QSeries restricted(int lo2, int hi2) const;

  bool equals_on(const QSeries& o, int lo2, int hi2) const;

  std::string str() const;  // e.g. "1 - 2*q + 3*q^(3/2) + O(q^8)"
  std::string to_json() const;
  static QSeries from_json(const std::string& text);

 private:
  void prune();
  Window win_;
  std::map<int, Rational> terms_;
};

}  // namespace charlab

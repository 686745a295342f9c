#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "charlab/qseries.hpp"
#include "charlab/rational.hpp"
#include "charlab/window.hpp"

namespace charlab {

// One monomial exponent: q^{q2/2} x^{xe}.
struct XMono {
  int q2 = 0;
  std::vector<int> xe;

  friend bool operator<(const XMono& a, const XMono& b) {
    if (a.q2 != b.q2) return a.q2 < b.q2;
    return a.xe < b.xe;
  }
  friend bool operator==(const XMono& a, const XMono& b) = default;
};

// Laurent polynomial in x_1..x_l whose coefficients are truncated Laurent
// series in q^{1/2}, with a level tag.  x-exponents with |e|_inf <= xbound
// are exact; xbound == kInf2 means the x-support is complete.
class CharSeries {
 public:
  CharSeries(int rank, long level, Window w, int xbound = kInf2)
      : rank_(rank), level_(level), win_(w), xbound_(xbound) {}

  static CharSeries unit(int rank, long level = 0);
  static CharSeries monomial(int rank, long level, const Rational& c, int q2,
                             std::vector<int> xe);
  static CharSeries zero_truncated(int rank, long level, int lo2, int hi2);

  int rank() const { return rank_; }
  long level() const { return level_; }
  const Window& window() const { return win_; }
  int xbound() const { return xbound_; }
  const std::map<XMono, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const XMono& m, const Rational& c);
  Rational coeff_or_zero(const XMono& m) const;
  int x_radius() const;  // max |exponent|_inf over stored terms
  int min_q2() const;
  int max_q2() const;

  CharSeries& operator+=(const CharSeries& o);
  CharSeries& operator-=(const CharSeries& o);
  friend CharSeries operator+(CharSeries a, const CharSeries& b) { return a += b; }
  friend CharSeries operator-(CharSeries a, const CharSeries& b) { return a -= b; }
  friend CharSeries operator*(const CharSeries& a, const CharSeries& b);
  CharSeries scaled(const Rational& c) const;
  CharSeries scaled_q(const QSeries& s) const;  // multiply by a scalar q-series
  CharSeries shifted(int q2, const std::vector<int>& xe) const;
  CharSeries with_level(long level) const;

  CharSeries star() const;
  QSeries constant_term_x() const;

  // Multiplicative inverse up to the window; requires a unique minimal
  // (q, then lex-x) monomial with nonzero coefficient.  The returned series is
  // guaranteed on the box |e|_inf <= xbound_out.
  CharSeries invert_unit(int xbound_out) const;
  CharSeries invert_unit() const { return invert_unit(x_radius()); }

  // Exact division by (1 - q^{m.q2/2} x^{m.xe}); throws on nonzero remainder.
  CharSeries divide_one_minus(const XMono& m) const;

  // Finite Weyl action on x-monomials: i in 1..l.
  CharSeries finite_reflection(int i) const;
  // Reflection s_0; uses the level tag.
  CharSeries affine_reflection0() const;
  CharSeries simple_reflection(int i) const;

  bool finite_weyl_invariant() const;
  QSeries evaluate_x1() const;  // substitute every x_i = 1
  Rational evaluate_x1_q1() const;

  bool equals_on(const CharSeries& o, int lo2, int hi2) const;
  // first (q, lex-x) monomial where the two disagree on the range, if any
  std::optional<std::pair<XMono, std::pair<Rational, Rational>>> first_diff(
      const CharSeries& o, int lo2, int hi2) const;

  std::string to_json() const;
  static CharSeries from_json(const std::string& text);

 private:
  void prune();
  int rank_;
  long level_;
  Window win_;
  int xbound_;
  std::map<XMono, Rational> terms_;
};

}  // namespace charlab

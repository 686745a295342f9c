#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "charlab/charseries.hpp"
#include "charlab/root_datum.hpp"

namespace charlab {

// prod_{a in Delta_-} (1 - X^a)^{dim g_a}, truncated at q^{qmax_half/2}.
CharSeries kernel_t0(const RootDatum& d, int qmax_half);

// prod over finite positive roots of (1 - X^a); entire.
CharSeries finite_positive_factor(const RootDatum& d);

// prod over roots with delta-coefficient <= 0; the symmetric-density kernel.
CharSeries delta_kernel_t0(const RootDatum& d, int qmax_half);

// <f,g> = constant term of f * star(g) * kernel.  Levels must cancel.
QSeries pair_ext(const CharSeries& f, const CharSeries& g, const CharSeries& kernel);

// <f,g> = constant term of f * g * delta_kernel (no star), level-zero inputs.
QSeries pair_sym(const CharSeries& f, const CharSeries& g, const CharSeries& delta_kernel);

// x-constant term of P * K without forming the full product.
QSeries constant_term_against(const CharSeries& P, const CharSeries& K);

enum class OrderRefinement { lex, revlex };

// Jointly biorthogonalized families over the index box |coords|_inf <= bound.
//   a_family[i]: monic at X^{lambda_i}, support above lambda_i, q <= 0 tails;
//   b_family[i]: its star-side partner, monic at X^{-lambda_i};
//   norms[i]:    the pairing of the pair, a q-series unit.
struct BiorthFamilies {
  std::vector<FiniteWeight> index;  // in solve order, 0 first
  std::vector<CharSeries> a_family;
  std::vector<CharSeries> b_family;
  std::vector<QSeries> norms;
  // internal plus-side solves: slice_poly[i] = star(b_family[i])
  std::vector<CharSeries> slice_poly;

  int find(const FiniteWeight& w) const;
};

BiorthFamilies biorthogonal_family(const RootDatum& d, int support_bound, int qmax_half,
                                   OrderRefinement refinement = OrderRefinement::lex);

// Shared state for slice characters over one index box.
class SliceSolver {
 public:
  SliceSolver(const RootDatum& d, int support_bound, int qmax_half,
              OrderRefinement refinement = OrderRefinement::lex);

  const RootDatum& datum() const { return *datum_; }
  const CharSeries& kernel() const { return kernel_; }
  const BiorthFamilies& families() const { return fam_; }

  // gch of the slice attached to lambda: level one, extremal term
  // q^{(lambda|lambda)/2} x^lambda with coefficient one.
  CharSeries slice(const FiniteWeight& lambda) const;
  CharSeries global_weyl(const FiniteWeight& lambda) const;  // sum over the orbit
  QSeries norm(const FiniteWeight& lambda) const;

 private:
  const RootDatum* datum_;
  int qmax_half_;
  CharSeries kernel_;
  BiorthFamilies fam_;
};

CharSeries slice_character(const RootDatum& d, const FiniteWeight& lambda, int qmax_half);
CharSeries global_weyl_character(const RootDatum& d, const FiniteWeight& lambda, int qmax_half);

// CSV with weight-labelled rows/columns and series entries.
void write_pairing_table_csv(std::ostream& os, const std::vector<FiniteWeight>& rows,
                             const std::vector<FiniteWeight>& cols,
                             const std::vector<std::vector<QSeries>>& table);

}  // namespace charlab

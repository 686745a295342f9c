#pragma once

#include <map>

#include "charlab/charseries.hpp"
#include "charlab/root_datum.hpp"
#include "charlab/weyl.hpp"

namespace charlab {

// The two candidate divided-difference conventions.  Lowering is the shipped
// default: pi_i f = (f - X^{-a_i} s_i f) / (1 - X^{-a_i}).  Raising flips the
// sign of the root monomial and is kept for calibration tests.
enum class DemazureForm { lowering, raising };

CharSeries demazure_op(const RootDatum& d, int i, const CharSeries& f,
                       DemazureForm form = DemazureForm::lowering);

// Graded character of the thin module attached to lambda, normalized so the
// vacuum monomial is 1 at level one.  Extremal term q^{(l|l)/2} x^lambda.
CharSeries thin_character(const RootDatum& d, const FiniteWeight& lambda,
                          DemazureForm form = DemazureForm::lowering);

// thin_character shifted to level zero: extremal term becomes q^0 x^lambda.
CharSeries local_weyl_character(const RootDatum& d, const FiniteWeight& lambda);

// Level-one vacuum character from the Heisenberg realization:
//   sum_{(l|l)/2 <= max} q^{(l|l)/2} x^l  *  prod_{n>=1} (1-q^n)^{-rank}.
CharSeries vacuum_character(const RootDatum& d, int qmax_half);

// Monic triangular polynomial with q^{(lambda|lambda)/2} removed from the thin
// character; level tag zero.
CharSeries ebar_polynomial(const RootDatum& d, const FiniteWeight& lambda);

// Thin characters for every shortest-path state at once, checking that every
// minimal BFS edge produces the same character (word independence).
struct ThinAtlas {
  OrbitGraph graph;
  std::vector<CharSeries> chars;  // by node index
};
ThinAtlas thin_atlas(const RootDatum& d, int energy_bound_half,
                     DemazureForm form = DemazureForm::lowering);

}  // namespace charlab

#include "charlab/demazure.hpp"

#include <stdexcept>

#include "charlab/errors.hpp"

namespace charlab {

namespace {

// monomial exponent of the weight s*alpha_i (s = -1 for the lowering form)
XMono root_monomial(const RootDatum& d, int i, int sign) {
  const AffineWeight& a = d.simple_root(i);
  XMono m;
  m.q2 = -to_long(Rational(2 * sign) * a.delta_coeff());
  // X^{beta + c delta} = q^{-c} x^beta
  m.q2 = to_long(Rational(-2 * sign) * a.delta_coeff());
  m.xe.resize(d.rank());
  for (int k = 0; k < d.rank(); ++k) m.xe[k] = sign * to_long(a.finite.c[k]);
  return m;
}

}  // namespace

CharSeries demazure_op(const RootDatum& d, int i, const CharSeries& f, DemazureForm form) {
  if (i < 0 || i > d.rank()) throw std::invalid_argument("simple index out of range");
  if (f.rank() != d.rank()) throw std::invalid_argument("rank mismatch");
  const int sign = (form == DemazureForm::lowering) ? -1 : 1;
  XMono m = root_monomial(d, i, sign);
  CharSeries sf = f.simple_reflection(i);
  CharSeries num = f - sf.shifted(m.q2, m.xe);
  return num.divide_one_minus(m);
}

CharSeries thin_character(const RootDatum& d, const FiniteWeight& lambda, DemazureForm form) {
  ReducedWord w = pi_lambda(d, lambda);
  CharSeries f = CharSeries::unit(d.rank(), 1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) f = demazure_op(d, *it, f, form);
  return f;
}

CharSeries local_weyl_character(const RootDatum& d, const FiniteWeight& lambda) {
  if (!d.is_dominant(lambda)) throw std::invalid_argument("local Weyl characters need a dominant weight");
  CharSeries t = thin_character(d, lambda);
  const int shift2 = -to_long(lambda.norm2());
  return t.shifted(shift2, std::vector<int>(d.rank(), 0)).with_level(0);
}

CharSeries vacuum_character(const RootDatum& d, int qmax_half) {
  if (qmax_half < 0) throw std::invalid_argument("window must be bounded below by zero");
  const int l = d.rank();
  // prod_{n>=1} (1-q^n)^{-l}, truncated
  QSeries parts = QSeries::one() + QSeries::zero_truncated(0, qmax_half);
  for (int rep = 0; rep < l; ++rep) {
    for (int n = 1; 2 * n <= qmax_half; ++n) {
      QSeries geom = QSeries::zero_truncated(0, qmax_half);
      for (int k = 0; 2 * n * k <= qmax_half; ++k) geom.add_term(2 * n * k, Rational(1));
      parts = parts * geom;
    }
  }
  CharSeries out = CharSeries::zero_truncated(l, 1, 0, qmax_half);
  // enumerate lattice points with (l|l) <= qmax_half
  std::vector<int> pt(l, 0);
  std::function<void(int, long)> rec = [&](int pos, long norm2) {
    if (pos == l) {
      for (const auto& [e2, c] : parts.terms()) {
        long q2 = norm2 + e2;
        if (q2 > qmax_half) break;
        out.add_term(XMono{static_cast<int>(q2), std::vector<int>(pt.begin(), pt.end())}, c);
      }
      return;
    }
    for (int v = 0;; ++v) {
      long n2 = norm2 + static_cast<long>(v) * v;
      if (n2 > qmax_half) break;
      pt[pos] = v;
      rec(pos + 1, n2);
      if (v > 0) {
        pt[pos] = -v;
        rec(pos + 1, n2);
      }
    }
    pt[pos] = 0;
  };
  rec(0, 0);
  return out;
}

CharSeries ebar_polynomial(const RootDatum& d, const FiniteWeight& lambda) {
  CharSeries t = thin_character(d, lambda);
  const int shift2 = -to_long(lambda.norm2());
  return t.shifted(shift2, std::vector<int>(d.rank(), 0)).with_level(0);
}

ThinAtlas thin_atlas(const RootDatum& d, int energy_bound_half, DemazureForm form) {
  ThinAtlas atlas{orbit_bfs(d, energy_bound_half), {}};
  auto& g = atlas.graph;
  atlas.chars.reserve(g.nodes.size());
  // nodes are in BFS order, so parents precede children
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    if (v == 0) {
      atlas.chars.push_back(CharSeries::unit(d.rank(), 1));
      continue;
    }
    const auto& node = g.nodes[v];
    CharSeries best(d.rank(), 1, Window::entire(0, 0));
    bool have = false;
    for (const auto& [p, letter] : node.parents) {
      CharSeries cand = demazure_op(d, letter, atlas.chars[p], form);
      if (!have) {
        best = cand;
        have = true;
      } else if (!(best.terms() == cand.terms())) {
        throw std::logic_error("thin character differs across minimal words at state " +
                               format_weight(node.state));
      }
    }
    atlas.chars.push_back(best);
  }
  return atlas;
}

}  // namespace charlab

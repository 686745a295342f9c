#include "charlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "charlab/demazure.hpp"
#include "charlab/errors.hpp"
#include "charlab/macdonald.hpp"
#include "charlab/special_current.hpp"
#include "charlab/weyl.hpp"

namespace charlab {

namespace {

std::vector<FiniteWeight> coord_box(int rank, int bound) {
  std::vector<FiniteWeight> out;
  std::vector<long> pt(rank, -bound);
  while (true) {
    out.push_back(finite_from_ints(pt));
    int i = 0;
    while (i < rank && pt[i] == bound) pt[i++] = -bound;
    if (i == rank) break;
    ++pt[i];
  }
  return out;
}

std::string diff_string(const CharSeries& a, const CharSeries& b, int lo2, int hi2) {
  auto d = a.first_diff(b, lo2, hi2);
  if (!d) return "";
  std::ostringstream os;
  os << "first differing coefficient at q_half=" << d->first.q2 << " x=(";
  for (size_t i = 0; i < d->first.xe.size(); ++i)
    os << (i ? "," : "") << d->first.xe[i];
  os << "): " << to_string(d->second.first) << " vs " << to_string(d->second.second);
  return os.str();
}

std::string qdiff_string(const QSeries& got, const QSeries& want, int lo2, int hi2) {
  for (int e2 = lo2; e2 <= hi2; ++e2) {
    Rational a = got.coeff_or_zero(e2);
    Rational b = want.coeff_or_zero(e2);
    if (a != b) {
      std::ostringstream os;
      os << "first differing coefficient at q_half=" << e2 << ": " << to_string(a) << " vs "
         << to_string(b);
      return os.str();
    }
  }
  return "";
}

bool is_delta_series(const QSeries& s, bool diagonal, int lo2, int hi2, std::string* why) {
  QSeries want = diagonal ? QSeries::one() : QSeries::zero();
  if (lo2 < s.window().known_lo() || hi2 > s.window().known_hi())
    throw PrecisionError("pairing window narrower than the assertion range", hi2 / 2 + 2);
  std::string d = qdiff_string(s, want, lo2, hi2);
  if (!d.empty() && why) *why = d;
  return d.empty();
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

std::vector<CheckResult> verify_realization(int rank, int maxcoord) {
  std::vector<CheckResult> out;
  RootDatum d(rank);
  const int l = rank;

  {
    CheckResult r{"cartan matrix integral with nonpositive off-diagonal", true, ""};
    try {
      for (int i = 0; i <= l; ++i)
        for (int j = 0; j <= l; ++j) {
          long a = d.cartan(i, j);
          if (i == j && a != 2) r.pass = false;
          if (i != j && a > 0) r.pass = false;
        }
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.push_back(r);
  }
  {
    CheckResult r{"delta isotropic and orthogonal to all coroots", true, ""};
    AffineWeight delta = delta_weight(l);
    if (d.bilinear(delta, delta) != 0) r.pass = false;
    for (int i = 0; i <= l; ++i)
      if (d.pair_coroot(delta, i) != 0) r.pass = false;
    out.push_back(r);
  }
  {
    CheckResult r{"root length classes (1, 2..2, 4)", true, ""};
    if (d.simple_root_norm2(0) != 1) r.pass = false;
    for (int i = 1; i < l; ++i)
      if (d.simple_root_norm2(i) != 2) r.pass = false;
    if (d.simple_root_norm2(l) != 4) r.pass = false;
    out.push_back(r);
  }
  {
    CheckResult r{"imaginary roots carry multiplicity rank", true, ""};
    for (const auto& root : d.neg_roots_upto(8)) {
      const bool imaginary = root.finite.is_zero();
      if (imaginary && root.multiplicity != l) r.pass = false;
      if (!imaginary && root.multiplicity != 1) r.pass = false;
    }
    out.push_back(r);
  }
  {
    CheckResult r{"translation identity on the level-one orbit", true, ""};
    for (const auto& lam : coord_box(l, maxcoord)) {
      ReducedWord w = pi_lambda(d, lam);
      AffineWeight got = apply_word(d, w, lambda0(l));
      AffineWeight want(lam, 1, lam.norm2() / 2);
      if (!(got == want)) {
        r.pass = false;
        r.detail = "failed at lambda=" + format_weight(lam);
        break;
      }
    }
    out.push_back(r);
  }
  return out;
}

std::vector<CheckResult> verify_demazure(int rank, int maxcoord, int qtrunc) {
  (void)qtrunc;
  std::vector<CheckResult> out;
  RootDatum d(rank);
  const int l = rank;
  const int energy_bound = l * maxcoord * maxcoord + 4;

  CheckResult indep{"thin characters identical across all minimal words", true, ""};
  CheckResult props{"thin characters finite, nonnegative, extremal coefficient 1", true, ""};
  try {
    ThinAtlas atlas = thin_atlas(d, energy_bound);
    for (const auto& lam : coord_box(l, maxcoord)) {
      int node = atlas.graph.find(lam);
      if (node < 0) {
        indep.pass = false;
        indep.detail = "state not reached: " + format_weight(lam);
        break;
      }
      const CharSeries& t = atlas.chars[node];
      if (!t.window().is_entire()) {
        props.pass = false;
        props.detail = "not finite at " + format_weight(lam);
      }
      for (const auto& [m, c] : t.terms())
        if (c < 0 || !is_integer(c)) {
          props.pass = false;
          props.detail = "bad coefficient at " + format_weight(lam);
        }
      XMono extremal{static_cast<int>(to_long(lam.norm2())), {}};
      extremal.xe.resize(l);
      auto li = lam.as_ints();
      for (int i = 0; i < l; ++i) extremal.xe[i] = static_cast<int>(li[i]);
      if (t.coeff_or_zero(extremal) != 1) {
        props.pass = false;
        props.detail = "extremal coefficient != 1 at " + format_weight(lam);
      }
    }
  } catch (const std::logic_error& e) {
    indep.pass = false;
    indep.detail = e.what();
  }
  // direct cross-check over every minimal word where the enumeration is small
  if (indep.pass) {
    const int literal_bound = (l == 1) ? maxcoord : std::min(maxcoord, 1);
    for (const auto& lam : coord_box(l, literal_bound)) {
      CharSeries expect = thin_character(d, lam);
      for (const auto& w : all_min_words(d, lam)) {
        CharSeries f = CharSeries::unit(l, 1);
        for (auto it = w.rbegin(); it != w.rend(); ++it) f = demazure_op(d, *it, f);
        if (!(f.terms() == expect.terms())) {
          indep.pass = false;
          indep.detail = "word-dependent character at " + format_weight(lam);
        }
      }
    }
  }
  out.push_back(indep);
  out.push_back(props);

  CheckResult sym{"local Weyl characters invariant under the finite Weyl group", true, ""};
  for (const auto& lam : coord_box(l, maxcoord)) {
    if (!d.is_dominant(lam)) continue;
    CharSeries w = local_weyl_character(d, lam);
    if (!w.finite_weyl_invariant()) {
      sym.pass = false;
      sym.detail = "not invariant at " + format_weight(lam);
      break;
    }
    Rational dim = w.evaluate_x1_q1();
    if (dim <= 0 || !is_integer(dim)) {
      sym.pass = false;
      sym.detail = "dimension not a positive integer at " + format_weight(lam);
      break;
    }
  }
  out.push_back(sym);
  return out;
}

std::vector<CheckResult> verify_biorthogonality(int rank, int box, int qtrunc,
                                                std::ostream* csv_out) {
  std::vector<CheckResult> out;
  RootDatum d(rank);
  const int assert_hi2 = 2 * qtrunc - 4;

  auto weights = coord_box(rank, box);
  std::vector<CharSeries> thins;
  int thin_top = 0;
  for (const auto& w : weights) {
    thins.push_back(thin_character(d, w));
    thin_top = std::max(thin_top, thins.back().max_q2());
  }
  const int qmax2 = std::max(2 * qtrunc, assert_hi2 + thin_top);
  SliceSolver solver(d, box, qmax2);

  {
    CheckResult r{"constant term of the t=0 kernel is 1", true, ""};
    QSeries ct = solver.kernel().constant_term_x();
    std::string why = qdiff_string(ct, QSeries::one(), 0, 2 * qtrunc);
    if (!why.empty()) {
      r.pass = false;
      r.detail = why;
    }
    out.push_back(r);
  }
  {
    CheckResult r{"slice at 0 equals the unit character", true, ""};
    CharSeries s0 = solver.slice(FiniteWeight(rank));
    std::string why = diff_string(s0, CharSeries::unit(rank, 1), 0, s0.window().hi2);
    if (!why.empty()) {
      r.pass = false;
      r.detail = why;
    }
    out.push_back(r);
  }
  {
    CheckResult r{"triangular family matches the Demazure-side polynomials", true, ""};
    const auto& fam = solver.families();
    for (size_t i = 0; i < fam.index.size(); ++i) {
      CharSeries eb = ebar_polynomial(d, fam.index[i]);
      std::string why = diff_string(fam.a_family[i], eb, -2 * qtrunc, 0);
      if (!why.empty()) {
        r.pass = false;
        r.detail = "at " + format_weight(fam.index[i]) + ": " + why;
        break;
      }
    }
    out.push_back(r);
  }
  {
    CheckResult r{"slice/thin pairing matrix equals the identity", true, ""};
    std::vector<std::vector<QSeries>> table(weights.size());
    for (size_t a = 0; a < weights.size(); ++a) {
      CharSeries s = solver.slice(weights[a]);
      for (size_t b = 0; b < weights.size(); ++b) {
        QSeries v = pair_ext(s, thins[b], solver.kernel());
        table[a].push_back(v);
        std::string why;
        if (!is_delta_series(v, a == b, 0, assert_hi2, &why)) {
          if (r.pass) {
            r.pass = false;
            r.detail = "pair(" + format_weight(weights[a]) + ", " + format_weight(weights[b]) +
                       "): " + why;
          }
        }
      }
    }
    if (csv_out) write_pairing_table_csv(*csv_out, weights, weights, table);
    out.push_back(r);
  }
  return out;
}

std::vector<CheckResult> verify_weyl_orthogonality(int rank, int box, int qtrunc) {
  std::vector<CheckResult> out;
  RootDatum d(rank);
  const int assert_hi2 = 2 * qtrunc - 4;

  std::vector<FiniteWeight> dominants;
  for (const auto& w : coord_box(rank, box))
    if (d.is_dominant(w)) dominants.push_back(w);

  int thin_top = 0;
  std::vector<CharSeries> shifted_locals;
  for (const auto& mu : dominants) {
    CharSeries lw = local_weyl_character(d, mu);
    const int shift2 = static_cast<int>(to_long(mu.norm2()));
    shifted_locals.push_back(lw.shifted(shift2, std::vector<int>(rank, 0)).with_level(1));
    thin_top = std::max(thin_top, shifted_locals.back().max_q2());
  }
  const int qmax2 = std::max(2 * qtrunc, assert_hi2 + thin_top);
  SliceSolver solver(d, box, qmax2);

  CheckResult r{"global/local Weyl pairing matrix equals the identity", true, ""};
  for (size_t a = 0; a < dominants.size(); ++a) {
    CharSeries g = solver.global_weyl(dominants[a]);
    for (size_t b = 0; b < dominants.size(); ++b) {
      QSeries v = pair_ext(g, shifted_locals[b], solver.kernel());
      std::string why;
      if (!is_delta_series(v, a == b, 0, assert_hi2, &why)) {
        r.pass = false;
        r.detail = "pair(" + format_weight(dominants[a]) + ", " + format_weight(dominants[b]) +
                   "): " + why;
        break;
      }
    }
    if (!r.pass) break;
  }
  out.push_back(r);

  CheckResult inv{"global Weyl characters invariant under the finite Weyl group", true, ""};
  for (const auto& lam : dominants) {
    CharSeries g = solver.global_weyl(lam);
    if (!g.finite_weyl_invariant()) {
      inv.pass = false;
      inv.detail = "not invariant at " + format_weight(lam);
      break;
    }
  }
  out.push_back(inv);
  return out;
}

std::vector<CheckResult> verify_vacuum_sum(int rank, int emax, int qtrunc) {
  std::vector<CheckResult> out;
  RootDatum d(rank);
  if (qtrunc < emax + 1)
    throw PrecisionError("vacuum sum needs qtrunc >= emax + 1", emax + 1);
  const int box = static_cast<int>(std::floor(std::sqrt(2.0 * emax) + 1e-9));
  SliceSolver solver(d, box, 2 * qtrunc);

  CheckResult r{"slices sum to the Heisenberg vacuum character", true, ""};
  CharSeries sum = CharSeries::zero_truncated(rank, 1, 0, 2 * qtrunc);
  for (const auto& lam : coord_box(rank, box)) {
    if (to_long(lam.norm2()) > 2 * emax) continue;
    sum += solver.slice(lam);
  }
  CharSeries vac = vacuum_character(d, 2 * qtrunc);
  std::string why = diff_string(sum, vac, 0, 2 * (emax - 1));
  if (!why.empty()) {
    r.pass = false;
    r.detail = why;
  }
  out.push_back(r);
  return out;
}

std::vector<CheckResult> verify_hull_order(int rank, int box) {
  std::vector<CheckResult> out;
  RootDatum d(rank);
  auto weights = coord_box(rank, box);

  {
    CheckResult r{"macdonald order is reflexive, antisymmetric, transitive", true, ""};
    for (const auto& a : weights) {
      if (!d.macdonald_geq(a, a)) {
        r.pass = false;
        r.detail = "not reflexive at " + format_weight(a);
      }
    }
    for (const auto& a : weights)
      for (const auto& b : weights) {
        if (a == b) continue;
        if (d.macdonald_geq(a, b) && d.macdonald_geq(b, a)) {
          r.pass = false;
          r.detail = "antisymmetry fails at " + format_weight(a) + "," + format_weight(b);
        }
      }
    for (const auto& a : weights)
      for (const auto& b : weights) {
        if (!d.macdonald_geq(a, b)) continue;
        for (const auto& c : weights) {
          if (d.macdonald_geq(b, c) && !d.macdonald_geq(a, c)) {
            r.pass = false;
            r.detail = "transitivity fails at " + format_weight(a) + "," + format_weight(b) +
                       "," + format_weight(c);
          }
        }
      }
    out.push_back(r);
  }
  {
    CheckResult r{"orbit hull inclusion", true, ""};
    auto scan = coord_box(rank, box + 2);
    for (const auto& mu : weights) {
      FiniteWeight mu_plus = d.dominant_rep(mu).first;
      for (const auto& x : scan) {
        if (!d.hull_member(mu, x)) continue;
        for (const auto& y : d.orbit(x)) {
          if (!d.cone_member_qprime_plus(mu_plus - y)) {
            r.pass = false;
            r.detail = "fails at mu=" + format_weight(mu) + " x=" + format_weight(x);
          }
        }
      }
    }
    out.push_back(r);
  }
  return out;
}

std::vector<CheckResult> verify_pseries(int lmax, int smax) {
  std::vector<CheckResult> out;
  CheckResult r{"p/h generator change round-trips exactly", true, ""};
  for (int l = 1; l <= lmax && r.pass; ++l) {
    for (int node = 1; node <= l && r.pass; ++node) {
      auto P = p_expansion(l, node, smax);
      auto H = h_from_p(l, node, smax);
      for (int s = 1; s <= smax; ++s) {
        // substitute p_r -> P[r] into H[s-1]; expect the bare variable v_s
        GradedPoly acc = GradedPoly::zero(smax);
        for (const auto& [e, c] : H[s - 1].terms) {
          GradedPoly term = GradedPoly::constant(smax, c);
          for (int t = 0; t < smax; ++t)
            for (int rep = 0; rep < e[t]; ++rep) term = term * P[t + 1];
          acc += term;
        }
        if (!(acc == GradedPoly::variable(smax, s))) {
          r.pass = false;
          r.detail = "round trip fails at rank " + std::to_string(l) + ", node " +
                     std::to_string(node) + ", degree " + std::to_string(s);
          break;
        }
      }
    }
  }
  out.push_back(r);
  return out;
}

std::vector<CheckResult> verify_dimension_table() {
  std::vector<CheckResult> out;
  CheckResult r{"local Weyl dimension table", true, ""};
  auto expect = [&](int, const std::vector<long>& labels, long want) {
    Integer got = dim_local_weyl_special(BDynkinLabels(labels));
    if (got != want) {
      r.pass = false;
      r.detail = "dim mismatch: got " + got.get_str() + ", want " + std::to_string(want);
    }
  };
  expect(2, {0, 0}, 1);
  expect(2, {1, 0}, 5);
  expect(2, {0, 1}, 4);
  expect(2, {0, 2}, 10);
  expect(2, {1, 1}, 20);
  expect(1, {1}, 2);
  expect(1, {2}, 3);
  out.push_back(r);
  return out;
}

}  // namespace charlab

#include "charlab/macdonald.hpp"

#include <algorithm>
#include <ostream>

#include "charlab/errors.hpp"

namespace charlab {

namespace {

CharSeries one_minus_root(const RootDatum& d, const AffineRoot& r, int qmax_half) {
  // X^{beta + c delta} = q^{-c} x^beta
  const int q2 = -to_long(2 * r.delta_coeff);
  std::vector<int> xe = r.finite.as_ints();
  CharSeries f = CharSeries::unit(d.rank(), 0);
  f += CharSeries::monomial(d.rank(), 0, Rational(-1), q2, xe);
  (void)qmax_half;
  return f;
}

CharSeries product_over_roots(const RootDatum& d, const std::vector<AffineRoot>& roots,
                              int qmax_half) {
  CharSeries acc = CharSeries::unit(d.rank(), 0) +
                   CharSeries::zero_truncated(d.rank(), 0, 0, qmax_half);
  for (const auto& r : roots) {
    CharSeries f = one_minus_root(d, r, qmax_half);
    for (int rep = 0; rep < r.multiplicity; ++rep) acc = acc * f;
  }
  return acc;
}

struct KernelIndex {
  std::map<std::vector<int>, std::vector<std::pair<int, Rational>>> by_x;
  Window win;

  explicit KernelIndex(const CharSeries& k) : win(k.window()) {
    for (const auto& [m, c] : k.terms()) by_x[m.xe].emplace_back(m.q2, c);
  }
};

QSeries ct_against_index(const CharSeries& P, const KernelIndex& ki) {
  QSeries out(mul_windows(P.window(), ki.win));
  const int hi = out.window().known_hi();
  std::vector<int> neg;
  for (const auto& [m, c] : P.terms()) {
    neg.resize(m.xe.size());
    for (size_t i = 0; i < m.xe.size(); ++i) neg[i] = -m.xe[i];
    auto it = ki.by_x.find(neg);
    if (it == ki.by_x.end()) continue;
    for (const auto& [q2, kc] : it->second) {
      const long e = static_cast<long>(m.q2) + q2;
      if (e <= hi) out.add_term(static_cast<int>(e), c * kc);
    }
  }
  return out;
}

}  // namespace

CharSeries kernel_t0(const RootDatum& d, int qmax_half) {
  return product_over_roots(d, d.neg_roots_upto(qmax_half), qmax_half);
}

CharSeries finite_positive_factor(const RootDatum& d) {
  CharSeries acc = CharSeries::unit(d.rank(), 0);
  for (const auto& r : d.positive_finite_roots()) acc = acc * one_minus_root(d, r, 0);
  return acc;
}

CharSeries delta_kernel_t0(const RootDatum& d, int qmax_half) {
  std::vector<AffineRoot> roots = d.neg_roots_upto(qmax_half);
  for (const auto& r : d.positive_finite_roots()) roots.push_back(r);
  return product_over_roots(d, roots, qmax_half);
}

QSeries constant_term_against(const CharSeries& P, const CharSeries& K) {
  KernelIndex ki(K);
  return ct_against_index(P, ki);
}

QSeries pair_ext(const CharSeries& f, const CharSeries& g, const CharSeries& kernel) {
  if (f.level() != g.level())
    throw std::invalid_argument("pairing needs equal levels on both sides");
  CharSeries p = f * g.star();
  return constant_term_against(p, kernel);
}

QSeries pair_sym(const CharSeries& f, const CharSeries& g, const CharSeries& delta_kernel) {
  if (f.level() != 0 || g.level() != 0)
    throw std::invalid_argument("symmetric pairing needs level-zero inputs");
  CharSeries p = f * g;
  return constant_term_against(p, delta_kernel);
}

namespace {

struct TauKey {
  Rational h1;  // height of the dominant representative
  Rational h2;  // height of lambda_+ - lambda
  std::vector<Rational> tie;
};

Rational alpha_height(const RootDatum& d, const FiniteWeight& w) {
  // coefficients along the finite simple roots: c_j = w_1+..+w_j (j<l),
  // c_l = (w_1+..+w_l)/2
  Rational acc(0), h(0);
  for (int j = 0; j < d.rank(); ++j) {
    acc += w.c[j];
    h += (j + 1 < d.rank()) ? acc : acc / 2;
  }
  return h;
}

std::vector<FiniteWeight> tau_sorted_box(const RootDatum& d, int bound,
                                         OrderRefinement refinement) {
  std::vector<FiniteWeight> box;
  std::vector<int> pt(d.rank(), -bound);
  while (true) {
    std::vector<long> v(pt.begin(), pt.end());
    box.push_back(finite_from_ints(v));
    int i = 0;
    while (i < d.rank() && pt[i] == bound) pt[i++] = -bound;
    if (i == d.rank()) break;
    ++pt[i];
  }
  std::vector<std::pair<TauKey, FiniteWeight>> keyed;
  keyed.reserve(box.size());
  for (const auto& w : box) {
    FiniteWeight plus = d.dominant_rep(w).first;
    TauKey k;
    k.h1 = alpha_height(d, plus);
    k.h2 = alpha_height(d, plus - w);
    k.tie = w.c;
    if (refinement == OrderRefinement::revlex) {
      std::reverse(k.tie.begin(), k.tie.end());
      for (auto& t : k.tie) t = -t;
    }
    keyed.emplace_back(std::move(k), w);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.h1 != b.first.h1) return a.first.h1 < b.first.h1;
    if (a.first.h2 != b.first.h2) return a.first.h2 < b.first.h2;
    return a.first.tie < b.first.tie;
  });
  std::vector<FiniteWeight> out;
  out.reserve(keyed.size());
  for (auto& [k, w] : keyed) out.push_back(std::move(w));
  return out;
}

CharSeries x_monomial(const RootDatum& d, const FiniteWeight& w, int sign, int qmax_half) {
  std::vector<int> xe(d.rank());
  auto ints = w.as_ints();
  for (int i = 0; i < d.rank(); ++i) xe[i] = sign * static_cast<int>(ints[i]);
  CharSeries m = CharSeries::monomial(d.rank(), 0, Rational(1), 0, xe);
  return m + CharSeries::zero_truncated(d.rank(), 0, 0, qmax_half);
}

}  // namespace

int BiorthFamilies::find(const FiniteWeight& w) const {
  for (size_t i = 0; i < index.size(); ++i)
    if (index[i] == w) return static_cast<int>(i);
  return -1;
}

BiorthFamilies biorthogonal_family(const RootDatum& d, int support_bound, int qmax_half,
                                   OrderRefinement refinement) {
  CharSeries kernel = kernel_t0(d, qmax_half);
  KernelIndex ki(kernel);
  BiorthFamilies fam;
  fam.index = tau_sorted_box(d, support_bound, refinement);

  std::vector<CharSeries> aprime;  // minus side, monic at X^{-lambda}
  std::vector<CharSeries> ahat;    // plus side, monic at X^{lambda}
  auto beta = [&](const CharSeries& u, const CharSeries& v) {
    return ct_against_index(u * v, ki);
  };

  for (size_t k = 0; k < fam.index.size(); ++k) {
    const FiniteWeight& lam = fam.index[k];
    CharSeries ap = x_monomial(d, lam, -1, qmax_half);
    CharSeries ah = x_monomial(d, lam, +1, qmax_half);
    for (size_t j = 0; j < k; ++j) {
      QSeries inv_d = fam.norms[j].inverted();
      QSeries ca = beta(ap, ahat[j]) * inv_d;
      if (!ca.is_zero()) ap -= aprime[j].scaled_q(ca);
      QSeries cb = beta(aprime[j], ah) * inv_d;
      if (!cb.is_zero()) ah -= ahat[j].scaled_q(cb);
    }
    QSeries norm = beta(ap, ah);
    {
      // the pivot must be a visible unit
      auto [e2, c] = norm.lowest_term();
      (void)e2;
      (void)c;
    }
    fam.norms.push_back(norm);
    aprime.push_back(ap);
    ahat.push_back(ah);
  }
  for (size_t k = 0; k < fam.index.size(); ++k) {
    fam.a_family.push_back(aprime[k].star());
    fam.b_family.push_back(ahat[k].star());
    fam.slice_poly.push_back(ahat[k]);
  }
  return fam;
}

SliceSolver::SliceSolver(const RootDatum& d, int support_bound, int qmax_half,
                         OrderRefinement refinement)
    : datum_(&d),
      qmax_half_(qmax_half),
      kernel_(kernel_t0(d, qmax_half)),
      fam_(biorthogonal_family(d, support_bound, qmax_half, refinement)) {}

CharSeries SliceSolver::slice(const FiniteWeight& lambda) const {
  int i = fam_.find(lambda);
  if (i < 0) throw std::invalid_argument("weight outside the solver's support box");
  const int norm2_half = static_cast<int>(to_long(lambda.norm2()));
  CharSeries s = fam_.slice_poly[i].scaled_q(fam_.norms[i].inverted());
  return s.shifted(norm2_half, std::vector<int>(datum_->rank(), 0)).with_level(1);
}

QSeries SliceSolver::norm(const FiniteWeight& lambda) const {
  int i = fam_.find(lambda);
  if (i < 0) throw std::invalid_argument("weight outside the solver's support box");
  return fam_.norms[i];
}

CharSeries SliceSolver::global_weyl(const FiniteWeight& lambda) const {
  if (!datum_->is_dominant(lambda))
    throw std::invalid_argument("global Weyl characters need a dominant weight");
  CharSeries acc = CharSeries::zero_truncated(datum_->rank(), 1, 0, qmax_half_);
  for (const auto& mu : datum_->orbit(lambda)) acc += slice(mu);
  return acc;
}

CharSeries slice_character(const RootDatum& d, const FiniteWeight& lambda, int qmax_half) {
  if (!lambda.is_lattice()) throw std::invalid_argument("slice weights must be in P");
  int bound = 0;
  for (const auto& c : lambda.c) bound = std::max(bound, static_cast<int>(std::abs(to_long(c))));
  return SliceSolver(d, bound, qmax_half).slice(lambda);
}

CharSeries global_weyl_character(const RootDatum& d, const FiniteWeight& lambda, int qmax_half) {
  if (!lambda.is_lattice()) throw std::invalid_argument("weights must be in P");
  int bound = 0;
  for (const auto& c : lambda.c) bound = std::max(bound, static_cast<int>(std::abs(to_long(c))));
  return SliceSolver(d, bound, qmax_half).global_weyl(lambda);
}

void write_pairing_table_csv(std::ostream& os, const std::vector<FiniteWeight>& rows,
                             const std::vector<FiniteWeight>& cols,
                             const std::vector<std::vector<QSeries>>& table) {
  os << "weight";
  for (const auto& c : cols) os << ",\"" << format_weight(c) << "\"";
  os << "\n";
  for (size_t r = 0; r < rows.size(); ++r) {
    os << "\"" << format_weight(rows[r]) << "\"";
    for (size_t c = 0; c < table[r].size(); ++c) os << ",\"" << table[r][c].str() << "\"";
    os << "\n";
  }
}

}  // namespace charlab

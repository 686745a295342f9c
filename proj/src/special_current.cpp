#include "charlab/special_current.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace charlab {

BDynkinLabels::BDynkinLabels(std::vector<long> labels) : m(std::move(labels)) {
  if (m.empty()) throw std::invalid_argument("rank must be >= 1");
  for (long x : m)
    if (x < 0) throw std::invalid_argument("labels must be nonnegative");
}

namespace {
Integer binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer ipow(const Integer& b, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}
}  // namespace

Integer dim_local_weyl_special(const BDynkinLabels& lambda) {
  const int l = lambda.rank();
  const long n = 2L * l + 1;
  Integer dim = 1;
  for (int i = 1; i < l; ++i) dim *= ipow(binom(n, i), lambda.m[i - 1]);
  const long ml = lambda.m[l - 1];
  if (ml % 2 == 1) {
    const long k = (ml + 1) / 2;
    dim *= ipow(binom(n, l), k - 1);
    dim *= ipow(Integer(2), l);
  } else {
    dim *= ipow(binom(n, l), ml / 2);
  }
  return dim;
}

GradedGeneratorSet a_lambda_generators(const BDynkinLabels& lambda) {
  GradedGeneratorSet out;
  const int l = lambda.rank();
  for (int i = 1; i < l; ++i)
    for (long r = 1; r <= lambda.m[i - 1]; ++r) out.emplace_back(i, static_cast<int>(r));
  for (long r = 1; r <= lambda.m[l - 1] / 2; ++r) out.emplace_back(l, static_cast<int>(r));
  return out;
}

QSeries a_lambda_hilbert(const BDynkinLabels& lambda, int qmax_half) {
  QSeries acc = QSeries::one() + QSeries::zero_truncated(0, qmax_half);
  for (const auto& [node, r] : a_lambda_generators(lambda)) {
    (void)node;
    QSeries geom = QSeries::zero_truncated(0, qmax_half);
    for (int k = 0; 2 * r * k <= qmax_half; ++k) geom.add_term(2 * r * k, Rational(1));
    acc = acc * geom;
  }
  return acc;
}

GradedPoly GradedPoly::constant(int nvars, const Rational& c) {
  GradedPoly p{nvars, {}};
  if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
  return p;
}

GradedPoly GradedPoly::variable(int nvars, int s, const Rational& c) {
  if (s < 1 || s > nvars) throw std::invalid_argument("variable index out of range");
  GradedPoly p{nvars, {}};
  std::vector<int> e(nvars, 0);
  e[s - 1] = 1;
  if (c != 0) p.terms[e] = c;
  return p;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  for (const auto& [e, c] : o.terms) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      if (c != 0) terms[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly r{a.nvars, {}};
  std::vector<int> e(a.nvars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      auto it = r.terms.find(e);
      if (it == r.terms.end())
        r.terms[e] = ca * cb;
      else {
        it->second += ca * cb;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  return r;
}

GradedPoly GradedPoly::scaled(const Rational& c) const {
  GradedPoly r{nvars, {}};
  if (c == 0) return r;
  for (const auto& [e, x] : terms) r.terms[e] = c * x;
  return r;
}

std::string GradedPoly::str(const std::string& varname) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (int s = 0; s < nvars; ++s)
      for (int rep = 0; rep < e[s]; ++rep) os << "*" << varname << s + 1;
  }
  return os.str();
}

namespace {

// coefficient of v_s z^s in the exponent of the generating series
Rational exponent_coeff(int rank, int node, int s) {
  if (node != rank) return rational_of(-1, s);
  // last node: even part carries h/2, odd part enters with a plus sign
  if (s % 2 == 0) return rational_of(-1, 2 * s);
  return rational_of(1, s);
}

}  // namespace

std::vector<GradedPoly> p_expansion(int rank, int node, int rmax) {
  if (rmax < 1) throw std::invalid_argument("rmax must be >= 1");
  if (node < 1 || node > rank) throw std::invalid_argument("node out of range");
  // exp of sum_s c_s v_s z^s via r * P_r = sum_{s<=r} s c_s v_s P_{r-s}
  std::vector<GradedPoly> P(rmax + 1, GradedPoly::zero(rmax));
  P[0] = GradedPoly::constant(rmax, Rational(1));
  for (int r = 1; r <= rmax; ++r) {
    GradedPoly acc = GradedPoly::zero(rmax);
    for (int s = 1; s <= r; ++s) {
      Rational c = Rational(s) * exponent_coeff(rank, node, s);
      acc += (GradedPoly::variable(rmax, s, c) * P[r - s]);
    }
    P[r] = acc.scaled(rational_of(1, r));
  }
  return P;
}

std::vector<GradedPoly> h_from_p(int rank, int node, int smax) {
  if (smax < 1) throw std::invalid_argument("smax must be >= 1");
  // p_s = c_s v_s + (polynomial in v_{<s}); invert triangularly.
  std::vector<GradedPoly> P = p_expansion(rank, node, smax);
  // H[s] expresses v_s in the p-variables (exponent vectors over p_1..p_smax)
  std::vector<GradedPoly> H(smax + 1, GradedPoly::zero(smax));
  for (int s = 1; s <= smax; ++s) {
    // start from p_s and remove lower-variable corrections, substituting
    // already-inverted variables
    GradedPoly correction = P[s];  // in v-variables
    // v_s appears once with coefficient c_s; everything else uses v_{<s}
    Rational cs = exponent_coeff(rank, node, s);
    GradedPoly expr = GradedPoly::variable(smax, s);  // stands for p_s, in p-vars
    for (const auto& [e, c] : correction.terms) {
      if (e[s - 1] == 1) {
        bool pure = true;
        for (int t = 0; t < smax; ++t)
          if (t != s - 1 && e[t] != 0) pure = false;
        if (pure) continue;  // the leading c_s v_s term
      }
      // translate the v-monomial into p-variables via H (all indices < s)
      GradedPoly term = GradedPoly::constant(smax, -c);
      for (int t = 0; t < smax; ++t)
        for (int rep = 0; rep < e[t]; ++rep) term = term * H[t + 1];
      expr += term;
    }
    H[s] = expr.scaled(1 / cs);
  }
  std::vector<GradedPoly> out;
  for (int s = 1; s <= smax; ++s) out.push_back(H[s]);
  return out;
}

std::string FreeRankReport::to_json() const {
  nlohmann::ordered_json j;
  j["lambda"] = lambda.m;
  j["rank"] = rank.get_str();
  auto gens = nlohmann::ordered_json::array();
  for (const auto& [i, r] : generators) gens.push_back(nlohmann::ordered_json::array({i, r}));
  j["generators"] = gens;
  j["hilbert"] = nlohmann::ordered_json::parse(hilbert.to_json());
  return j.dump();
}

FreeRankReport free_rank_report(const BDynkinLabels& lambda, int qmax_half) {
  return FreeRankReport{lambda, dim_local_weyl_special(lambda), a_lambda_generators(lambda),
                        a_lambda_hilbert(lambda, qmax_half)};
}

}  // namespace charlab

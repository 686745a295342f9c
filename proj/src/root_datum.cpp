#include "charlab/root_datum.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "charlab/errors.hpp"

namespace charlab {

RootDatum::RootDatum(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  const int l = rank;
  simple_.resize(l + 1);

  // alpha_0 = delta/2 - eps_1
  {
    FiniteWeight f(l);
    f.c[0] = Rational(-1);
    simple_[0] = AffineWeight(f, 0, rational_of(-1, 2));
  }
  for (int i = 1; i < l; ++i) {
    FiniteWeight f(l);
    f.c[i - 1] = Rational(1);
    f.c[i] = Rational(-1);
    simple_[i] = AffineWeight(f, 0, Rational(0));
  }
  {
    FiniteWeight f(l);
    f.c[l - 1] = Rational(2);
    simple_[l] = AffineWeight(f, 0, Rational(0));
  }

  norm2_.resize(l + 1);
  for (int i = 0; i <= l; ++i) norm2_[i] = bilinear(simple_[i], simple_[i]);
  if (norm2_[0] != 1 || norm2_[l] != Rational(l == 1 ? 4 : 4))
    throw std::logic_error("root length normalization broken");
  for (int i = 1; i < l; ++i)
    if (norm2_[i] != 2) throw std::logic_error("middle root length broken");

  marks_.assign(l + 1, 2);
  marks_[l] = 1;
  // delta = sum marks_i alpha_i
  AffineWeight d(FiniteWeight(l), 0, Rational(0));
  for (int i = 0; i <= l; ++i) d = d + Rational(marks_[i]) * simple_[i];
  if (!(d == delta_weight(l))) throw std::logic_error("delta marks broken");
  for (int i = 0; i <= l; ++i) {
    if (pair_coroot(delta_weight(l), i) != 0) throw std::logic_error("delta not isotropic");
    if (cartan(i, i) != 2) throw std::logic_error("cartan diagonal broken");
  }
}

long RootDatum::cartan(int i, int j) const {
  Rational a = 2 * bilinear(simple_[i], simple_[j]) / norm2_[i];
  return to_long(a);
}

Rational RootDatum::bilinear(const AffineWeight& mu, const AffineWeight& nu) const {
  if (mu.rank() != rank_ || nu.rank() != rank_) throw std::invalid_argument("rank mismatch");
  // (Lambda_0|Lambda_0) = (delta|delta) = 0, (Lambda_0|delta) = 1,
  // both orthogonal to the finite part.
  return mu.finite.dot(nu.finite) + Rational(mu.level) * nu.delta_coeff() +
         mu.delta_coeff() * Rational(nu.level);
}

Rational RootDatum::pair_coroot(const AffineWeight& mu, int i) const {
  if (i < 0 || i > rank_) throw std::invalid_argument("bad simple index");
  return 2 * bilinear(mu, simple_[i]) / norm2_[i];
}

AffineWeight RootDatum::reflect(int i, const AffineWeight& mu) const {
  return mu - pair_coroot(mu, i) * simple_[i];
}

FiniteWeight RootDatum::reflect_finite(int i, const FiniteWeight& mu) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("finite reflection needs i in 1..l");
  FiniteWeight r = mu;
  if (i < rank_) {
    std::swap(r.c[i - 1], r.c[i]);
  } else {
    r.c[rank_ - 1] = -r.c[rank_ - 1];
  }
  return r;
}

bool RootDatum::is_dominant(const FiniteWeight& w) const {
  for (int i = 0; i + 1 < rank_; ++i)
    if (w.c[i] < w.c[i + 1]) return false;
  return w.c[rank_ - 1] >= 0;
}

std::pair<FiniteWeight, ReducedWord> RootDatum::dominant_rep(const FiniteWeight& lambda) const {
  if (!lambda.is_lattice()) throw std::invalid_argument("weight not in the lattice");
  FiniteWeight cur = lambda;
  std::vector<int> applied;
  long guard = 0;
  while (!is_dominant(cur)) {
    if (++guard > 1000000) throw BudgetError("dominant_rep did not terminate");
    int pick = -1;
    for (int i = 1; i < rank_; ++i)
      if (cur.c[i - 1] < cur.c[i]) {
        pick = i;
        break;
      }
    if (pick < 0) pick = rank_;  // sorted but last coordinate negative
    cur = reflect_finite(pick, cur);
    applied.push_back(pick);
  }
  ReducedWord word(applied.rbegin(), applied.rend());
  return {cur, word};
}

std::set<FiniteWeight> RootDatum::orbit(const FiniteWeight& lambda) const {
  std::set<FiniteWeight> seen;
  std::queue<FiniteWeight> q;
  seen.insert(lambda);
  q.push(lambda);
  while (!q.empty()) {
    FiniteWeight w = q.front();
    q.pop();
    for (int i = 1; i <= rank_; ++i) {
      FiniteWeight n = reflect_finite(i, w);
      if (seen.insert(n).second) q.push(n);
    }
  }
  return seen;
}

bool RootDatum::in_q_plus(const FiniteWeight& nu) const {
  if (!nu.is_lattice()) return false;
  // alpha-basis coefficients: c_j = nu_1+..+nu_j (j<l), c_l = (sum nu)/2.
  Rational acc = 0;
  for (int j = 0; j < rank_; ++j) {
    acc += nu.c[j];
    Rational cj = (j + 1 < rank_) ? acc : acc / 2;
    if (!is_integer(cj) || cj < 0) return false;
  }
  return true;
}

bool RootDatum::cone_member_qprime_plus(const FiniteWeight& nu) const {
  if (!nu.is_lattice()) throw std::invalid_argument("cone membership needs a lattice weight");
  const int l = rank_;
  std::vector<std::vector<long>> gens;
  for (int i = 1; i <= l; ++i) {
    std::vector<long> g(l, 0);
    if (i < l) {
      g[i - 1] = 1;
      g[i] = -1;
    } else {
      g[l - 1] = 2;
    }
    gens.push_back(g);
  }
  for (int j = 0; j < l; ++j) {
    std::vector<long> g(l, 0);
    g[j] = 1;
    gens.push_back(g);
  }
  // Height under (l, l-1, .., 1) is positive on every generator, which bounds
  // the exhaustive search.
  std::vector<long> target = nu.as_ints();
  std::map<std::vector<long>, bool> memo;
  auto height = [l](const std::vector<long>& v) {
    long h = 0;
    for (int j = 0; j < l; ++j) h += (l - j) * v[j];
    return h;
  };
  std::function<bool(const std::vector<long>&)> rec = [&](const std::vector<long>& v) -> bool {
    bool zero = true;
    for (long x : v)
      if (x != 0) zero = false;
    if (zero) return true;
    if (height(v) <= 0) return false;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : gens) {
      std::vector<long> w(v);
      for (int j = 0; j < l; ++j) w[j] -= g[j];
      if (rec(w)) {
        ok = true;
        break;
      }
    }
    memo[v] = ok;
    return ok;
  };
  return rec(target);
}

bool RootDatum::macdonald_geq(const FiniteWeight& mu, const FiniteWeight& lambda) const {
  if (!mu.is_lattice() || !lambda.is_lattice()) throw std::invalid_argument("weights must be in P");
  FiniteWeight mu_plus = dominant_rep(mu).first;
  FiniteWeight lambda_plus = dominant_rep(lambda).first;
  if (mu_plus == lambda_plus) return in_q_plus(mu - lambda);
  return cone_member_qprime_plus(lambda_plus - mu_plus);
}

std::vector<AffineRoot> RootDatum::positive_finite_roots() const {
  std::vector<AffineRoot> out;
  const int l = rank_;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      FiniteWeight a(l), b(l);
      a.c[i] = 1;
      a.c[j] = -1;
      b.c[i] = 1;
      b.c[j] = 1;
      out.push_back({a, Rational(0), 1});
      out.push_back({b, Rational(0), 1});
    }
  for (int i = 0; i < l; ++i) {
    FiniteWeight a(l);
    a.c[i] = 2;
    out.push_back({a, Rational(0), 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineRoot> RootDatum::neg_roots_upto(int qmax_half) const {
  if (qmax_half < 0) throw std::invalid_argument("qmax must be >= 0");
  const int l = rank_;
  std::vector<AffineRoot> out;

  auto push = [&](std::vector<long> v, const Rational& c, int mult) {
    out.push_back({finite_from_ints(v), c, mult});
  };

  // finite negative roots at c = 0
  for (const auto& r : positive_finite_roots()) out.push_back({-r.finite, Rational(0), 1});

  // c in half-steps down to -qmax
  for (int c2 = -1; c2 >= -qmax_half; --c2) {
    Rational c = rational_of(c2, 2);
    if (c2 % 2 == 0) {
      int n = -c2 / 2;
      // short roots at every integer level
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              std::vector<long> v(l, 0);
              v[i] = si;
              v[j] = sj;
              push(v, c, 1);
            }
      // long roots at even integer levels
      if (n % 2 == 0)
        for (int i = 0; i < l; ++i)
          for (int s : {1, -1}) {
            std::vector<long> v(l, 0);
            v[i] = 2 * s;
            push(v, c, 1);
          }
      // imaginary n delta with multiplicity l
      push(std::vector<long>(l, 0), c, l);
    } else {
      // halves of long roots at odd half-levels
      for (int i = 0; i < l; ++i)
        for (int s : {1, -1}) {
          std::vector<long> v(l, 0);
          v[i] = s;
          push(v, c, 1);
        }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Unique solution of the affine system sum c_k p_k = x, sum c_k = 1 on an
// affinely independent subset; nullopt when singular or inconsistent.
std::optional<std::vector<Rational>> solve_affine(const std::vector<const FiniteWeight*>& pts,
                                                  const FiniteWeight& x) {
  const int l = x.rank();
  const int s = static_cast<int>(pts.size());
  const int rows = l + 1;
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(s + 1, Rational(0)));
  for (int r = 0; r < l; ++r) {
    for (int k = 0; k < s; ++k) m[r][k] = pts[k]->c[r];
    m[r][s] = x.c[r];
  }
  for (int k = 0; k < s; ++k) m[l][k] = 1;
  m[l][s] = 1;

  int row = 0;
  std::vector<int> pivot_of_col(s, -1);
  for (int col = 0; col < s && row < rows; ++col) {
    int pr = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    Rational inv = 1 / m[row][col];
    for (int cc = col; cc <= s; ++cc) m[row][cc] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int cc = col; cc <= s; ++cc) m[r][cc] -= f * m[row][cc];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (int col = 0; col < s; ++col)
    if (pivot_of_col[col] < 0) return std::nullopt;  // affinely dependent
  for (int r = row; r < rows; ++r)
    if (m[r][s] != 0) return std::nullopt;  // inconsistent
  std::vector<Rational> c(s);
  for (int col = 0; col < s; ++col) c[col] = m[pivot_of_col[col]][s];
  return c;
}

}  // namespace

bool RootDatum::hull_member(const FiniteWeight& mu, const FiniteWeight& x) const {
  auto pts_set = orbit(mu);
  std::vector<FiniteWeight> pts(pts_set.begin(), pts_set.end());
  const int n = static_cast<int>(pts.size());
  for (const auto& p : pts)
    if (p == x) return true;

  const int smax = std::min(n, rank_ + 1);
  // Caratheodory over affinely independent subsets; count the work first.
  double total = 0;
  for (int s = 2; s <= smax; ++s) {
    double binom = 1;
    for (int k = 0; k < s; ++k) binom = binom * (n - k) / (k + 1);
    total += binom;
  }
  if (total > 500000) throw BudgetError("hull_member: orbit too large for exact search");

  std::vector<int> idx;
  std::function<bool(int, int)> scan = [&](int start, int need) -> bool {
    if (need == 0) {
      std::vector<const FiniteWeight*> sub;
      for (int i : idx) sub.push_back(&pts[i]);
      auto sol = solve_affine(sub, x);
      if (!sol) return false;
      for (const auto& c : *sol)
        if (c < 0) return false;
      return true;
    }
    for (int i = start; i + need <= n; ++i) {
      idx.push_back(i);
      if (scan(i + 1, need - 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  for (int s = 2; s <= smax; ++s) {
    idx.clear();
    if (scan(0, s)) return true;
  }
  return false;
}

}  // namespace charlab

#include "charlab/charseries.hpp"

#include <algorithm>
#include <optional>

#include "charlab/errors.hpp"
#include "json.hpp"

namespace charlab {

namespace {
int suggest_qtrunc(int needed2) { return needed2 / 2 + 2; }

int clamp_sub(int a, int b) {  // a - b with infinity semantics
  if (a >= kInf2) return kInf2;
  return a - b;
}
}  // namespace

CharSeries CharSeries::unit(int rank, long level) {
  CharSeries s(rank, level, Window::entire(0, 0));
  s.terms_[XMono{0, std::vector<int>(rank, 0)}] = 1;
  return s;
}

CharSeries CharSeries::monomial(int rank, long level, const Rational& c, int q2,
                                std::vector<int> xe) {
  if (static_cast<int>(xe.size()) != rank) throw std::invalid_argument("exponent rank mismatch");
  CharSeries s(rank, level, Window::entire(std::min(q2, 0), std::max(q2, 0)));
  if (c != 0) s.terms_[XMono{q2, std::move(xe)}] = c;
  return s;
}

CharSeries CharSeries::zero_truncated(int rank, long level, int lo2, int hi2) {
  return CharSeries(rank, level, Window::truncated(lo2, hi2));
}

void CharSeries::add_term(const XMono& m, const Rational& c) {
  if (m.q2 < win_.known_lo() || m.q2 > win_.known_hi()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational CharSeries::coeff_or_zero(const XMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int CharSeries::x_radius() const {
  int r = 0;
  for (const auto& [m, c] : terms_)
    for (int e : m.xe) r = std::max(r, std::abs(e));
  return r;
}

int CharSeries::min_q2() const { return terms_.empty() ? 0 : terms_.begin()->first.q2; }
int CharSeries::max_q2() const { return terms_.empty() ? 0 : terms_.rbegin()->first.q2; }

void CharSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || it->first.q2 < win_.known_lo() || it->first.q2 > win_.known_hi())
      it = terms_.erase(it);
    else
      ++it;
  }
}

CharSeries& CharSeries::operator+=(const CharSeries& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
  if (level_ != o.level_) throw std::invalid_argument("level mismatch in addition");
  win_ = add_windows(win_, o.win_);
  xbound_ = std::min(xbound_, o.xbound_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  prune();
  return *this;
}

CharSeries& CharSeries::operator-=(const CharSeries& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
  if (level_ != o.level_) throw std::invalid_argument("level mismatch in subtraction");
  win_ = add_windows(win_, o.win_);
  xbound_ = std::min(xbound_, o.xbound_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  prune();
  return *this;
}

CharSeries operator*(const CharSeries& a, const CharSeries& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("rank mismatch");
  Window w = mul_windows(a.win_, b.win_);
  if (w.empty() && !w.is_entire())
    throw PrecisionError("empty window overlap in multiplication", suggest_qtrunc(std::abs(w.lo2)));
  int xb = kInf2;
  if (a.xbound_ < kInf2) xb = std::min(xb, clamp_sub(a.xbound_, b.x_radius()));
  if (b.xbound_ < kInf2) xb = std::min(xb, clamp_sub(b.xbound_, a.x_radius()));
  CharSeries r(a.rank_, a.level_ + b.level_, w, xb);
  const int hi = w.known_hi();
  std::vector<int> xe(a.rank_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const long q2 = static_cast<long>(ma.q2) + mb.q2;
      if (q2 > hi) break;  // b iterates in ascending q2
      for (int i = 0; i < a.rank_; ++i) xe[i] = ma.xe[i] + mb.xe[i];
      r.add_term(XMono{static_cast<int>(q2), xe}, ca * cb);
    }
  }
  r.prune();
  return r;
}

CharSeries CharSeries::scaled(const Rational& c) const {
  CharSeries r(rank_, level_, win_, xbound_);
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_[m] = c * x;
  return r;
}

CharSeries CharSeries::scaled_q(const QSeries& s) const {
  Window w = mul_windows(win_, s.window());
  CharSeries r(rank_, level_, w, xbound_);
  const int hi = w.known_hi();
  for (const auto& [m, c] : terms_) {
    for (const auto& [e2, sc] : s.terms()) {
      const long q2 = static_cast<long>(m.q2) + e2;
      if (q2 > hi) break;
      r.add_term(XMono{static_cast<int>(q2), m.xe}, c * sc);
    }
  }
  r.prune();
  return r;
}

CharSeries CharSeries::shifted(int q2, const std::vector<int>& xe) const {
  Window w = win_;
  w.lo2 += q2;
  w.hi2 += q2;
  CharSeries r(rank_, level_, w, xbound_);
  for (const auto& [m, c] : terms_) {
    XMono n = m;
    n.q2 += q2;
    for (int i = 0; i < rank_; ++i) n.xe[i] += xe[i];
    r.terms_[n] = c;
  }
  return r;
}

CharSeries CharSeries::with_level(long level) const {
  CharSeries r(rank_, level, win_, xbound_);
  r.terms_ = terms_;
  return r;
}

CharSeries CharSeries::star() const {
  CharSeries r(rank_, -level_, win_.negated(), xbound_);
  for (const auto& [m, c] : terms_) {
    XMono n;
    n.q2 = -m.q2;
    n.xe.resize(rank_);
    for (int i = 0; i < rank_; ++i) n.xe[i] = -m.xe[i];
    r.terms_[n] = c;
  }
  return r;
}

QSeries CharSeries::constant_term_x() const {
  if (xbound_ < 0)
    throw PrecisionError("x-constant term outside the guaranteed x-box", suggest_qtrunc(win_.hi2));
  QSeries s(win_);
  const std::vector<int> zero(rank_, 0);
  for (const auto& [m, c] : terms_)
    if (m.xe == zero) s.set(m.q2, c);
  return s;
}

CharSeries CharSeries::invert_unit(int xbound_out) const {
  if (terms_.empty()) throw std::invalid_argument("cannot invert the zero series");
  if (!win_.floor_known)
    throw PrecisionError("cannot invert with unknown low-order terms",
                         suggest_qtrunc(std::abs(win_.lo2)));
  // unique minimal (q, lex-x) monomial
  const auto& [m0, c0] = *terms_.begin();
  const int span = win_.ceil_known ? (max_q2() - m0.q2) : (win_.hi2 - m0.q2);

  // f = c0 X^{m0} (1 + h); expand the geometric series for 1/(1+h)
  CharSeries h(rank_, 0, Window::truncated(0, span), kInf2);
  for (const auto& [m, c] : terms_) {
    if (m == m0) continue;
    XMono n = m;
    n.q2 -= m0.q2;
    for (int i = 0; i < rank_; ++i) n.xe[i] -= m0.xe[i];
    h.terms_[n] = c / c0;
  }
  const int slack = xbound_out + 2 * h.x_radius() + 1;
  auto box_trim = [&](CharSeries& s, int box) {
    for (auto it = s.terms_.begin(); it != s.terms_.end();) {
      bool out = false;
      for (int e : it->first.xe)
        if (std::abs(e) > box) out = true;
      it = out ? s.terms_.erase(it) : std::next(it);
    }
  };
  CharSeries acc = unit(rank_, 0);
  acc.win_ = Window::truncated(0, span);
  CharSeries pw = h;
  Rational sign(-1);
  long guard = 0;
  while (!pw.is_zero()) {
    if (++guard > 100000) throw BudgetError("invert_unit did not stabilize");
    acc += pw.scaled(sign);
    sign = -sign;
    pw = pw * h;
    box_trim(pw, slack);
  }
  std::vector<int> minus(rank_);
  for (int i = 0; i < rank_; ++i) minus[i] = -m0.xe[i];
  CharSeries r = acc.scaled(1 / c0).shifted(-m0.q2, minus);
  r.level_ = -level_;
  r.xbound_ = xbound_out;
  box_trim(r, xbound_out);
  r.prune();
  return r;
}

CharSeries CharSeries::divide_one_minus(const XMono& d) const {
  // g with g * (1 - X^d) = f, via prefix sums along the d-direction
  if (d.q2 < 0) throw std::invalid_argument("division direction must not lower q");
  int pivot = -1;  // -1 means use q2
  if (d.q2 == 0) {
    for (int i = 0; i < rank_; ++i)
      if (d.xe[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("division by (1 - 1)");
  }
  auto floordiv = [](long a, long b) {
    long q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
  };
  struct Ladder {
    std::map<long, Rational> c;  // step -> coefficient
  };
  std::map<XMono, Ladder> ladders;
  for (const auto& [m, c] : terms_) {
    long k = (pivot < 0) ? floordiv(m.q2, d.q2) : floordiv(m.xe[pivot], d.xe[pivot]);
    XMono rep = m;
    rep.q2 -= static_cast<int>(k) * d.q2;
    for (int i = 0; i < rank_; ++i) rep.xe[i] -= static_cast<int>(k) * d.xe[i];
    ladders[rep].c[k] += c;
  }
  CharSeries g(rank_, level_, win_, xbound_);
  for (const auto& [rep, lad] : ladders) {
    Rational run(0);
    // walk contiguous steps from the lowest occupied one
    const long kend = lad.c.rbegin()->first;
    for (long k = lad.c.begin()->first; k <= kend; ++k) {
      auto it = lad.c.find(k);
      if (it != lad.c.end()) run += it->second;
      if (run != 0) {
        XMono m = rep;
        m.q2 += static_cast<int>(k) * d.q2;
        for (int i = 0; i < rank_; ++i) m.xe[i] += static_cast<int>(k) * d.xe[i];
        g.add_term(m, run);
      }
    }
    if (run != 0) {
      // nonterminating quotient; only legitimate past a truncated horizon
      if (win_.ceil_known || d.q2 == 0)
        throw std::invalid_argument("nonzero remainder in exact division");
      for (long kk = kend + 1;; ++kk) {
        XMono m = rep;
        m.q2 += static_cast<int>(kk) * d.q2;
        if (m.q2 > win_.hi2) break;
        for (int i = 0; i < rank_; ++i) m.xe[i] += static_cast<int>(kk) * d.xe[i];
        g.add_term(m, run);
      }
    }
  }
  g.prune();
  return g;
}

CharSeries CharSeries::finite_reflection(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("finite reflection index out of range");
  CharSeries r(rank_, level_, win_, xbound_);
  for (const auto& [m, c] : terms_) {
    XMono n = m;
    if (i < rank_)
      std::swap(n.xe[i - 1], n.xe[i]);
    else
      n.xe[rank_ - 1] = -n.xe[rank_ - 1];
    r.terms_[n] = c;
  }
  return r;
}

CharSeries CharSeries::affine_reflection0() const {
  // s_0 on a level-L monomial: x_1-exponent a -> L - a, q2 -> q2 + (L - 2a)
  if (!win_.is_entire())
    throw PrecisionError("affine reflection needs a complete character", suggest_qtrunc(win_.hi2));
  const long L = level_;
  CharSeries r(rank_, level_, win_, xbound_);
  int lo = 0, hi = 0;
  for (const auto& [m, c] : terms_) {
    XMono n = m;
    const long a = m.xe[0];
    n.xe[0] = static_cast<int>(L - a);
    n.q2 = static_cast<int>(m.q2 + (L - 2 * a));
    lo = std::min(lo, n.q2);
    hi = std::max(hi, n.q2);
    r.terms_[n] = c;
  }
  r.win_ = Window::entire(lo, hi);
  return r;
}

CharSeries CharSeries::simple_reflection(int i) const {
  return i == 0 ? affine_reflection0() : finite_reflection(i);
}

bool CharSeries::finite_weyl_invariant() const {
  for (int i = 1; i <= rank_; ++i) {
    CharSeries t = finite_reflection(i);
    if (!(t.terms_ == terms_)) return false;
  }
  return true;
}

QSeries CharSeries::evaluate_x1() const {
  QSeries s(win_);
  for (const auto& [m, c] : terms_) s.add_term(m.q2, c);
  return s;
}

Rational CharSeries::evaluate_x1_q1() const {
  if (!win_.is_entire())
    throw PrecisionError("full evaluation needs a complete character", suggest_qtrunc(win_.hi2));
  Rational s(0);
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

bool CharSeries::equals_on(const CharSeries& o, int lo2, int hi2) const {
  return !first_diff(o, lo2, hi2).has_value();
}

std::optional<std::pair<XMono, std::pair<Rational, Rational>>> CharSeries::first_diff(
    const CharSeries& o, int lo2, int hi2) const {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
  if (lo2 < win_.known_lo() || hi2 > win_.known_hi() || lo2 < o.win_.known_lo() ||
      hi2 > o.win_.known_hi())
    throw PrecisionError("comparison range exceeds a guaranteed window", suggest_qtrunc(hi2));
  auto in_range = [&](const XMono& m) { return m.q2 >= lo2 && m.q2 <= hi2; };
  std::map<XMono, std::pair<Rational, Rational>> joint;
  for (const auto& [m, c] : terms_)
    if (in_range(m)) joint[m].first = c;
  for (const auto& [m, c] : o.terms_)
    if (in_range(m)) joint[m].second = c;
  for (const auto& [m, pr] : joint)
    if (pr.first != pr.second) return std::make_pair(m, pr);
  return std::nullopt;
}

std::string CharSeries::to_json() const {
  nlohmann::ordered_json j;
  j["rank"] = rank_;
  j["level"] = level_;
  j["window"] = {{"min_half", win_.lo2}, {"max_half", win_.hi2}};
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::ordered_json t;
    t["x"] = m.xe;
    t["q_half"] = m.q2;
    t["coeff"] = to_string(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = terms;
  return j.dump();
}

CharSeries CharSeries::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  const int rank = j.at("rank").get<int>();
  CharSeries s(rank, j.at("level").get<long>(),
               Window::entire(j.at("window").at("min_half").get<int>(),
                              j.at("window").at("max_half").get<int>()));
  for (const auto& t : j.at("terms")) {
    XMono m;
    m.q2 = t.at("q_half").get<int>();
    m.xe = t.at("x").get<std::vector<int>>();
    if (static_cast<int>(m.xe.size()) != rank)
      throw std::invalid_argument("term rank mismatch in character JSON");
    s.terms_[m] = parse_rational(t.at("coeff").get<std::string>());
  }
  return s;
}

}  // namespace charlab

#include "charlab/qseries.hpp"

#include <sstream>

#include "charlab/errors.hpp"
#include "json.hpp"

namespace charlab {

namespace {
int suggest_qtrunc(int needed2) { return needed2 / 2 + 2; }
}  // namespace

QSeries QSeries::monomial(const Rational& c, int e2) {
  QSeries s(Window::entire(std::min(e2, 0), std::max(e2, 0)));
  if (c != 0) s.terms_[e2] = c;
  return s;
}

void QSeries::set(int e2, const Rational& c) {
  if (c == 0)
    terms_.erase(e2);
  else
    terms_[e2] = c;
  win_.lo2 = std::min(win_.lo2, e2);
  win_.hi2 = std::max(win_.hi2, e2);
}

void QSeries::add_term(int e2, const Rational& c) {
  auto it = terms_.find(e2);
  if (it == terms_.end()) {
    if (c != 0) terms_[e2] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational QSeries::coeff(int e2) const {
  if (e2 < win_.known_lo() || e2 > win_.known_hi())
    throw PrecisionError("q-coefficient outside the guaranteed window", suggest_qtrunc(e2));
  return coeff_or_zero(e2);
}

Rational QSeries::coeff_or_zero(int e2) const {
  auto it = terms_.find(e2);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<int, Rational> QSeries::lowest_term() const {
  for (const auto& [e2, c] : terms_)
    if (e2 >= win_.known_lo() && e2 <= win_.known_hi()) return {e2, c};
  throw PrecisionError("series has no visible nonzero term within its window",
                       suggest_qtrunc(win_.hi2 + 2));
}

void QSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || it->first < win_.known_lo() || it->first > win_.known_hi())
      it = terms_.erase(it);
    else
      ++it;
  }
}

QSeries& QSeries::operator+=(const QSeries& o) {
  win_ = add_windows(win_, o.win_);
  for (const auto& [e2, c] : o.terms_) add_term(e2, c);
  prune();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  win_ = add_windows(win_, o.win_);
  for (const auto& [e2, c] : o.terms_) add_term(e2, -c);
  prune();
  return *this;
}

QSeries QSeries::operator-() const {
  QSeries r(win_);
  for (const auto& [e2, c] : terms_) r.terms_[e2] = -c;
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries r(mul_windows(a.win_, b.win_));
  int hi = r.win_.known_hi();
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const long e = static_cast<long>(ea) + eb;
      if (e > hi) break;  // b sorted ascending
      r.add_term(static_cast<int>(e), ca * cb);
    }
  }
  r.prune();
  return r;
}

QSeries QSeries::scaled(const Rational& c) const {
  QSeries r(win_);
  if (c == 0) return r;
  for (const auto& [e2, x] : terms_) r.terms_[e2] = c * x;
  return r;
}

QSeries QSeries::shifted(int e2) const {
  Window w = win_;
  w.lo2 += e2;
  w.hi2 += e2;
  QSeries r(w);
  for (const auto& [e, c] : terms_) r.terms_[e + e2] = c;
  return r;
}

QSeries QSeries::star() const {
  QSeries r(win_.negated());
  for (const auto& [e2, c] : terms_) r.terms_[-e2] = c;
  return r;
}

QSeries QSeries::inverted() const {
  if (!win_.floor_known)
    throw PrecisionError("cannot invert a series with unknown low-order terms",
                         suggest_qtrunc(std::abs(win_.lo2)));
  auto [v, lead] = lowest_term();
  if (win_.is_entire() && terms_.size() == 1) {
    return monomial(1 / lead, -v);  // exact monomial inverse
  }
  // f = lead q^{v/2} (1 + h), val h > 0; invert order by order
  int span = win_.hi2 - v;
  QSeries h(Window::truncated(0, span));
  for (const auto& [e2, c] : terms_) {
    if (e2 == v) continue;
    if (e2 - v <= span) h.terms_[e2 - v] = c / lead;
  }
  QSeries acc = monomial(Rational(1), 0);
  acc.win_ = Window::truncated(0, span);
  QSeries pow = h;
  Rational sign(-1);
  while (!pow.is_zero()) {
    acc += pow.scaled(sign);
    sign = -sign;
    pow = pow * h;
  }
  QSeries r = acc.scaled(1 / lead).shifted(-v);
  return r;
}

QSeries QSeries::restricted(int lo2, int hi2) const {
  if (lo2 < win_.known_lo() || hi2 > win_.known_hi())
    throw PrecisionError("restriction exceeds the guaranteed window", suggest_qtrunc(hi2));
  QSeries r(Window{lo2, hi2, win_.floor_known && win_.lo2 >= lo2, false});
  for (const auto& [e2, c] : terms_)
    if (e2 >= lo2 && e2 <= hi2) r.terms_[e2] = c;
  return r;
}

bool QSeries::equals_on(const QSeries& o, int lo2, int hi2) const {
  if (lo2 < win_.known_lo() || hi2 > win_.known_hi() || lo2 < o.win_.known_lo() ||
      hi2 > o.win_.known_hi())
    throw PrecisionError("comparison range exceeds a guaranteed window", suggest_qtrunc(hi2));
  for (int e2 = lo2; e2 <= hi2; ++e2)
    if (coeff_or_zero(e2) != o.coeff_or_zero(e2)) return false;
  return true;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e2, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    const bool unit = (a == 1);
    if (e2 == 0) {
      os << to_string(a);
    } else {
      if (!unit) os << to_string(a) << "*";
      os << "q";
      if (e2 != 2) {
        if (e2 % 2 == 0)
          os << "^" << e2 / 2;
        else
          os << "^(" << e2 << "/2)";
      }
    }
  }
  if (first) os << "0";
  if (!win_.ceil_known) {
    if (win_.hi2 % 2 == 0)
      os << " + O(q^" << win_.hi2 / 2 + 1 << ")";
    else
      os << " + O(q^(" << win_.hi2 + 1 << "/2))";
  }
  return os.str();
}

std::string QSeries::to_json() const {
  nlohmann::ordered_json j;
  j["window"] = {{"min_half", win_.lo2}, {"max_half", win_.hi2}};
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e2, c] : terms_)
    terms.push_back(nlohmann::ordered_json{{"q_half", e2}, {"coeff", to_string(c)}});
  j["terms"] = terms;
  return j.dump();
}

QSeries QSeries::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  QSeries s(Window::truncated(j.at("window").at("min_half").get<int>(),
                              j.at("window").at("max_half").get<int>()));
  for (const auto& t : j.at("terms"))
    s.terms_[t.at("q_half").get<int>()] = parse_rational(t.at("coeff").get<std::string>());
  return s;
}

}  // namespace charlab

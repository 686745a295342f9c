#include "charlab/weight.hpp"

#include <sstream>

#include "json.hpp"

namespace charlab {

FiniteWeight& FiniteWeight::operator+=(const FiniteWeight& o) {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch");
  for (int i = 0; i < rank(); ++i) c[i] += o.c[i];
  return *this;
}

FiniteWeight& FiniteWeight::operator-=(const FiniteWeight& o) {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch");
  for (int i = 0; i < rank(); ++i) c[i] -= o.c[i];
  return *this;
}

FiniteWeight& FiniteWeight::operator*=(const Rational& s) {
  for (auto& x : c) x *= s;
  return *this;
}

FiniteWeight FiniteWeight::operator-() const {
  FiniteWeight r(*this);
  for (auto& x : r.c) x = -x;
  return r;
}

bool FiniteWeight::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

bool FiniteWeight::is_lattice() const {
  for (const auto& x : c)
    if (!is_integer(x)) return false;
  return true;
}

std::vector<long> FiniteWeight::as_ints() const {
  std::vector<long> v;
  v.reserve(c.size());
  for (const auto& x : c) v.push_back(to_long(x));
  return v;
}

Rational FiniteWeight::dot(const FiniteWeight& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch");
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) s += c[i] * o.c[i];
  return s;
}

FiniteWeight finite_from_ints(const std::vector<long>& v) {
  FiniteWeight w(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) w.c[i] = Rational(v[i]);
  return w;
}

FiniteWeight finite_from_labels(const std::vector<long>& labels) {
  const int l = static_cast<int>(labels.size());
  FiniteWeight w(l);
  long acc = 0;
  for (int j = l - 1; j >= 0; --j) {
    acc += labels[j];
    w.c[j] = Rational(acc);
  }
  return w;
}

std::vector<long> labels_from_finite(const FiniteWeight& w) {
  const int l = w.rank();
  std::vector<long> m(l);
  for (int i = 0; i < l; ++i) {
    Rational d = w.c[i] - (i + 1 < l ? w.c[i + 1] : Rational(0));
    m[i] = to_long(d);
  }
  return m;
}

std::string format_weight(const FiniteWeight& w) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < w.rank(); ++i) {
    if (i) os << ',';
    os << to_string(w.c[i]);
  }
  os << ')';
  return os.str();
}

AffineWeight lambda0(int rank) { return AffineWeight(FiniteWeight(rank), 1, Rational(0)); }

AffineWeight delta_weight(int rank) { return AffineWeight(FiniteWeight(rank), 0, Rational(-1)); }

AffineWeight affinize(const FiniteWeight& w) { return AffineWeight(w, 0, Rational(0)); }

std::string weight_to_json(const FiniteWeight& w) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : w.c) a.push_back(to_string(x));
  return a.dump();
}

FiniteWeight weight_from_json(const std::string& text) {
  nlohmann::json a = nlohmann::json::parse(text);
  if (!a.is_array()) throw std::invalid_argument("weight JSON must be an array");
  std::vector<Rational> c;
  for (const auto& x : a) c.push_back(parse_rational(x.get<std::string>()));
  return FiniteWeight(std::move(c));
}

}  // namespace charlab

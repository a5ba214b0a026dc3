#include "hc/special/poly1.hpp"

#include <sstream>
#include <stdexcept>

namespace hc {

Poly1::Poly1(std::vector<ExactScalar> coeffs, char var) : coeffs_(std::move(coeffs)), var_(var) { trim(); }

Poly1 Poly1::monomial(int degree, const ExactScalar& c, char var) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<ExactScalar> v(static_cast<std::size_t>(degree) + 1, ExactScalar(0));
  v.back() = c;
  return Poly1(std::move(v), var);
}

void Poly1::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly1 Poly1::with_var(char v) const {
  Poly1 out = *this;
  out.var_ = v;
  return out;
}

ExactScalar Poly1::coeff(int k) const {
  if (k < 0 || k > degree()) return ExactScalar(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ExactScalar(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) { return *this += o.scaled(ExactScalar(-1)); }

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return Poly1({}, a.var_);
  std::vector<ExactScalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, ExactScalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly1(std::move(v), a.var_);
}

Poly1 Poly1::scaled(const ExactScalar& c) const {
  std::vector<ExactScalar> v = coeffs_;
  for (auto& x : v) x *= c;
  return Poly1(std::move(v), var_);
}

Poly1 Poly1::derivative() const {
  if (coeffs_.size() <= 1) return Poly1({}, var_);
  std::vector<ExactScalar> v;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v.push_back(coeffs_[k] * ExactScalar(static_cast<long>(k)));
  return Poly1(std::move(v), var_);
}

Poly1 Poly1::argument_scaled(const ExactScalar& c) const {
  std::vector<ExactScalar> v = coeffs_;
  ExactScalar p(1);
  for (auto& x : v) {
    x *= p;
    p *= c;
  }
  return Poly1(std::move(v), var_);
}

int Poly1::parity() const {
  bool even = true;
  bool odd = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (k % 2 == 0) odd = false;
    if (k % 2 == 1) even = false;
  }
  if (even) return 1;
  if (odd) return -1;
  return 0;
}

ExactScalar Poly1::operator()(const ExactScalar& z) const {
  ExactScalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Poly1::eval(double z) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->re().get_d();
  return acc;
}

RadialForm Poly1::in_radius(int dim) const {
  Poly p(dim);
  Poly rk = Poly::constant(dim, ExactScalar(1));
  for (const auto& c : coeffs_) {
    p += rk.scaled(c);
    rk = rk.times_radius();
  }
  return RadialForm::polynomial(std::move(p));
}

std::optional<ExactScalar> proportionality(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<ExactScalar>(ExactScalar(1)) : std::nullopt;
  if (a.is_zero()) return ExactScalar(0);
  if (a.degree() != b.degree()) return std::nullopt;
  const ExactScalar c = a.coeffs_.back() / b.coeffs_.back();
  if (a == b.scaled(c)) return c;
  return std::nullopt;
}

std::string Poly1::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[k].str() << ")";
    if (k >= 1) os << "*" << var_;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

void BivariatePoly::add_term(int t_power, int r_power, const ExactScalar& c) {
  if (c.is_zero()) return;
  if (t_power < 0 || r_power < 0) throw std::invalid_argument("negative power");
  auto [it, inserted] = terms_.try_emplace({t_power, r_power}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  }
  return out;
}

BivariatePoly BivariatePoly::scaled(const ExactScalar& c) const {
  BivariatePoly out;
  for (const auto& [k, v] : terms_) out.add_term(k.first, k.second, v * c);
  return out;
}

BivariatePoly BivariatePoly::d_dt() const {
  BivariatePoly out;
  for (const auto& [k, c] : terms_) {
    if (k.first == 0) continue;
    out.add_term(k.first - 1, k.second, c * ExactScalar(k.first));
  }
  return out;
}

Poly1 BivariatePoly::at_t_equals_r() const {
  int deg = 0;
  for (const auto& [k, c] : terms_) deg = std::max(deg, k.first + k.second);
  std::vector<ExactScalar> v(static_cast<std::size_t>(deg) + 1, ExactScalar(0));
  for (const auto& [k, c] : terms_) v[static_cast<std::size_t>(k.first + k.second)] += c;
  return Poly1(std::move(v), 'r');
}

Poly1 BivariatePoly::at_r(const ExactScalar& value) const {
  int deg = 0;
  for (const auto& [k, c] : terms_) deg = std::max(deg, k.first);
  std::vector<ExactScalar> v(static_cast<std::size_t>(deg) + 1, ExactScalar(0));
  for (const auto& [k, c] : terms_) {
    ExactScalar p(1);
    for (int j = 0; j < k.second; ++j) p *= value;
    v[static_cast<std::size_t>(k.first)] += c * p;
  }
  return Poly1(std::move(v), 't');
}

std::optional<ExactScalar> proportionality(const BivariatePoly& a, const BivariatePoly& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<ExactScalar>(ExactScalar(1)) : std::nullopt;
  if (a.is_zero()) return ExactScalar(0);
  const auto& [k0, b0] = *b.terms_.begin();
  auto it = a.terms_.find(k0);
  if (it == a.terms_.end()) return std::nullopt;
  const ExactScalar c = it->second / b0;
  if (a == b.scaled(c)) return c;
  return std::nullopt;
}

std::string BivariatePoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (k.first) os << "*t^" << k.first;
    if (k.second) os << "*r^" << k.second;
  }
  return os.str();
}

}  // namespace hc

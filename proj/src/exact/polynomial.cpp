#include "hc/exact/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hc {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension must be in 1..4");
}

Monomial multiply_monomials(const Monomial& a, const Monomial& b, bool& carries_s) {
  Monomial m;
  for (int i = 0; i < kMaxDim; ++i) {
    const int e = a.exps[i] + b.exps[i];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    m.exps[i] = static_cast<std::uint8_t>(e);
  }
  const int p = a.parity + b.parity;
  carries_s = p == 2;
  m.parity = static_cast<std::uint8_t>(p % 2);
  return m;
}

}  // namespace

Poly Poly::constant(int dim, const ExactScalar& c) {
  check_dim(dim);
  Poly p(dim);
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::coordinate(int dim, int axis) {
  check_dim(dim);
  if (axis < 0 || axis >= dim) throw std::out_of_range("axis out of range");
  Poly p(dim);
  Monomial m;
  m.exps[axis] = 1;
  p.add_term(m, ExactScalar(1));
  return p;
}

Poly Poly::sum_of_squares(int dim) {
  check_dim(dim);
  Poly p(dim);
  for (int i = 0; i < dim; ++i) {
    Monomial m;
    m.exps[i] = 2;
    p.add_term(m, ExactScalar(1));
  }
  return p;
}

Poly Poly::radius(int dim) {
  check_dim(dim);
  Poly p(dim);
  Monomial m;
  m.parity = 1;
  p.add_term(m, ExactScalar(1));
  return p;
}

bool Poly::has_odd_part() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.parity == 1; });
}

int Poly::max_total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void Poly::add_term(const Monomial& m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.dim_ != dim_ && !o.is_zero() && !is_zero()) throw std::invalid_argument("dimension mismatch");
  if (is_zero()) dim_ = o.dim_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.dim_ != dim_ && !o.is_zero() && !is_zero()) throw std::invalid_argument("dimension mismatch");
  if (is_zero()) dim_ = o.dim_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  Poly out(a.dim_);
  Poly carry(a.dim_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      bool s = false;
      const Monomial m = multiply_monomials(ma, mb, s);
      if (s) {
        carry.add_term(m, ca * cb);
      } else {
        out.add_term(m, ca * cb);
      }
    }
  }
  if (!carry.is_zero()) out += carry.times_sum_of_squares();
  return out;
}

Poly Poly::scaled(const ExactScalar& c) const {
  Poly out(dim_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

Poly Poly::times_coordinate(int axis) const {
  Poly out(dim_);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n.exps[axis] = static_cast<std::uint8_t>(n.exps[axis] + 1);
    out.terms_.emplace(n, c);
  }
  return out;
}

Poly Poly::times_sum_of_squares() const {
  Poly out(dim_);
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < dim_; ++i) {
      Monomial n = m;
      n.exps[i] = static_cast<std::uint8_t>(n.exps[i] + 2);
      out.add_term(n, c);
    }
  }
  return out;
}

Poly Poly::times_radius() const {
  Poly even(dim_);
  Poly odd_to_even(dim_);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    if (m.parity == 0) {
      n.parity = 1;
      even.terms_.emplace(n, c);
    } else {
      n.parity = 0;
      odd_to_even.terms_.emplace(n, c);
    }
  }
  return even + odd_to_even.times_sum_of_squares();
}

Poly Poly::times_radius_power(int k) const {
  if (k < 0) throw std::invalid_argument("negative radius power");
  Poly out = *this;
  for (int j = 0; j < k / 2; ++j) out = out.times_sum_of_squares();
  if (k % 2 == 1) out = out.times_radius();
  return out;
}

Poly Poly::times_one_plus_s_power(int k) const {
  Poly out = *this;
  for (int j = 0; j < k; ++j) out += out.times_sum_of_squares();
  return out;
}

Poly Poly::even_part() const {
  Poly out(dim_);
  for (const auto& [m, c] : terms_) {
    if (m.parity == 0) out.terms_.emplace(m, c);
  }
  return out;
}

Poly Poly::odd_part() const {
  Poly out(dim_);
  for (const auto& [m, c] : terms_) {
    if (m.parity == 1) {
      Monomial n = m;
      n.parity = 0;
      out.terms_.emplace(n, c);
    }
  }
  return out;
}

Poly Poly::with_parity(std::uint8_t p) const {
  Poly out(dim_);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n.parity = p;
    out.add_term(n, c);
  }
  return out;
}

std::optional<Poly> Poly::divide_by_quadric(bool plus_one) const {
  // Divisor x_1^2 + g with g free of x_1; reduce the largest x_1 power first.
  Poly rem = *this;
  Poly quot(dim_);
  while (!rem.terms_.empty()) {
    auto it = std::prev(rem.terms_.end());
    if (it->first.exps[0] < 2) break;
    Monomial q = it->first;
    const ExactScalar c = it->second;
    q.exps[0] = static_cast<std::uint8_t>(q.exps[0] - 2);
    quot.add_term(q, c);
    rem.terms_.erase(it);
    for (int i = 1; i < dim_; ++i) {
      Monomial n = q;
      n.exps[i] = static_cast<std::uint8_t>(n.exps[i] + 2);
      rem.add_term(n, -c);
    }
    if (plus_one) rem.add_term(q, -c);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

Poly Poly::formal_derivative(int axis) const {
  Poly out(dim_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exps[axis];
    if (e == 0) continue;
    Monomial n = m;
    n.exps[axis] = static_cast<std::uint8_t>(e - 1);
    out.add_term(n, c * ExactScalar(e));
  }
  return out;
}

Poly Poly::conj() const {
  Poly out(dim_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

}  // namespace hc

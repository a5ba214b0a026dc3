#include "hc/exact/radial_form.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hc {

namespace {

void require_same_dim(const RadialForm& a, const RadialForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch between radial forms");
}

}  // namespace

RadialForm::RadialForm(int dim) : dim_(dim), num_(dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension must be in 1..4");
}

RadialForm::RadialForm(Poly numerator, int r_power, int cauchy_power, Rational exp_rate)
    : dim_(numerator.dim()),
      num_(std::move(numerator)),
      r_power_(r_power),
      cauchy_power_(cauchy_power),
      exp_rate_(std::move(exp_rate)) {
  exp_rate_.canonicalize();
  if (sgn(exp_rate_) < 0) throw std::invalid_argument("exponential rate must be non-negative");
  if (r_power_ < 0) {
    num_ = num_.times_radius_power(-r_power_);
    r_power_ = 0;
  }
  if (cauchy_power_ < 0) {
    num_ = num_.times_one_plus_s_power(-cauchy_power_);
    cauchy_power_ = 0;
  }
  normalize();
}

void RadialForm::normalize() {
  if (num_.is_zero()) {
    r_power_ = 0;
    cauchy_power_ = 0;
    exp_rate_ = 0;
    return;
  }
  // N = A + r B is divisible by r exactly when S | A; then N / r = B + r (A / S).
  while (r_power_ > 0) {
    const Poly even = num_.even_part();
    std::optional<Poly> q = even.is_zero() ? std::optional<Poly>(Poly(dim_)) : even.divide_by_quadric(false);
    if (!q) break;
    num_ = num_.odd_part() + q->with_parity(1);
    --r_power_;
  }
  while (cauchy_power_ > 0) {
    std::optional<Poly> q = num_.divide_by_quadric(true);
    if (!q) break;
    num_ = std::move(*q);
    --cauchy_power_;
  }
}

RadialForm RadialForm::constant(int dim, const ExactScalar& c) {
  return RadialForm(Poly::constant(dim, c), 0, 0, Rational(0));
}

RadialForm RadialForm::coordinate(int dim, int axis) {
  return RadialForm(Poly::coordinate(dim, axis), 0, 0, Rational(0));
}

RadialForm RadialForm::radius(int dim) { return RadialForm(Poly::radius(dim), 0, 0, Rational(0)); }

RadialForm RadialForm::radius_power(int dim, int k) {
  return RadialForm(Poly::constant(dim, ExactScalar(1)), -k, 0, Rational(0));
}

RadialForm RadialForm::cauchy(int dim, int c) {
  return RadialForm(Poly::constant(dim, ExactScalar(1)), 0, c, Rational(0));
}

RadialForm RadialForm::exponential(int dim, const Rational& rate) {
  return RadialForm(Poly::constant(dim, ExactScalar(1)), 0, 0, rate);
}

bool RadialForm::is_polynomial() const {
  return r_power_ == 0 && cauchy_power_ == 0 && sgn(exp_rate_) == 0 && !num_.has_odd_part();
}

RadialForm& RadialForm::operator+=(const RadialForm& o) {
  if (o.is_zero()) return *this;
  require_same_dim(*this, o);
  if (is_zero()) return *this = o;
  if (exp_rate_ != o.exp_rate_) throw std::invalid_argument("exponential rate mismatch in sum");
  const int m = std::max(r_power_, o.r_power_);
  const int c = std::max(cauchy_power_, o.cauchy_power_);
  Poly lhs = num_.times_radius_power(m - r_power_).times_one_plus_s_power(c - cauchy_power_);
  lhs += o.num_.times_radius_power(m - o.r_power_).times_one_plus_s_power(c - o.cauchy_power_);
  num_ = std::move(lhs);
  r_power_ = m;
  cauchy_power_ = c;
  normalize();
  return *this;
}

RadialForm& RadialForm::operator-=(const RadialForm& o) { return *this += -o; }

RadialForm& RadialForm::operator*=(const RadialForm& o) {
  require_same_dim(*this, o);
  if (is_zero() || o.is_zero()) return *this = RadialForm(dim_);
  num_ = num_ * o.num_;
  r_power_ += o.r_power_;
  cauchy_power_ += o.cauchy_power_;
  exp_rate_ += o.exp_rate_;
  normalize();
  return *this;
}

RadialForm RadialForm::scaled(const ExactScalar& c) const {
  if (c.is_zero()) return RadialForm(dim_);
  RadialForm out = *this;
  out.num_ = num_.scaled(c);
  return out;
}

RadialForm RadialForm::conj() const {
  RadialForm out = *this;
  out.num_ = num_.conj();
  return out;
}

bool operator==(const RadialForm& a, const RadialForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.dim_ != b.dim_ || a.exp_rate_ != b.exp_rate_) return false;
  if (a.r_power_ == b.r_power_ && a.cauchy_power_ == b.cauchy_power_) return a.num_ == b.num_;
  const Poly lhs = a.num_.times_radius_power(b.r_power_).times_one_plus_s_power(b.cauchy_power_);
  const Poly rhs = b.num_.times_radius_power(a.r_power_).times_one_plus_s_power(a.cauchy_power_);
  return lhs == rhs;
}

std::optional<ExactScalar> proportionality(const RadialForm& a, const RadialForm& b) {
  if (b.is_zero()) {
    if (a.is_zero()) return ExactScalar(1);
    return std::nullopt;
  }
  if (a.is_zero()) return ExactScalar(0);
  if (a.dim_ != b.dim_ || a.exp_rate_ != b.exp_rate_ || a.r_power_ != b.r_power_ ||
      a.cauchy_power_ != b.cauchy_power_ || a.num_.terms().size() != b.num_.terms().size()) {
    return std::nullopt;
  }
  const auto& [m0, b0] = *b.num_.terms().begin();
  auto it = a.num_.terms().find(m0);
  if (it == a.num_.terms().end()) return std::nullopt;
  const ExactScalar c = it->second / b0;
  if (a.num_ == b.num_.scaled(c)) return c;
  return std::nullopt;
}

RadialForm RadialForm::rescaled(const Rational& lambda) const {
  if (cauchy_power_ != 0) throw std::invalid_argument("rescaling leaves the form class when (1+r^2) appears");
  if (sgn(lambda) <= 0) throw std::invalid_argument("rescale factor must be positive");
  Poly out(dim_);
  for (const auto& [m, c] : num_.terms()) {
    out.add_term(m, c * ExactScalar(rational_pow(lambda, m.total_degree() - r_power_)));
  }
  return RadialForm(std::move(out), r_power_, 0, exp_rate_ * lambda);
}

RadialForm RadialForm::embedded(int new_dim) const {
  if (new_dim < dim_) throw std::invalid_argument("cannot embed into a smaller dimension");
  if (new_dim == dim_) return *this;
  if (!is_polynomial()) throw std::invalid_argument("only radius-free polynomials can be embedded");
  Poly out(new_dim);
  for (const auto& [m, c] : num_.terms()) out.add_term(m, c);
  return RadialForm::polynomial(std::move(out));
}

std::string RadialForm::str() const {
  static constexpr const char* kNames[] = {"x", "y", "z", "w"};
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  os << "(";
  for (const auto& [m, c] : num_.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < dim_; ++i) {
      if (m.exps[i] == 0) continue;
      os << "*" << kNames[i];
      if (m.exps[i] > 1) os << "^" << int(m.exps[i]);
    }
    if (m.parity) os << "*r";
  }
  os << ")";
  if (r_power_ > 0) os << "/r^" << r_power_;
  if (cauchy_power_ > 0) os << "/(1+r^2)^" << cauchy_power_;
  if (exp_rate_ == 1) {
    os << "*exp(-r)";
  } else if (sgn(exp_rate_) != 0) {
    os << "*exp(-" << exp_rate_.get_str() << "*r)";
  }
  return os.str();
}

RadialForm normalize(const RadialForm& f) {
  return RadialForm(f.numerator(), f.r_power(), f.cauchy_power(), f.exp_rate());
}

RadialForm derivative(const RadialForm& f, int axis) {
  const int d = f.dim();
  if (axis < 0 || axis >= d) throw std::out_of_range("derivative axis out of range");
  if (f.is_zero()) return f;
  const Poly& n = f.numerator();
  if (f.is_polynomial()) return RadialForm::polynomial(n.formal_derivative(axis));

  // f = N r^-m (1+S)^-c e^{-a r}, N = A + r B, and r^2 d_i N = S d_i A + r (S d_i B + x_i B).
  const Poly a = n.even_part();
  const Poly b = n.odd_part();
  const Poly r2_dn =
      a.formal_derivative(axis).times_sum_of_squares() +
      (b.formal_derivative(axis).times_sum_of_squares() + b.times_coordinate(axis)).with_parity(1);
  const int m = f.r_power();
  const int c = f.cauchy_power();
  const Rational& alpha = f.exp_rate();
  Poly xn = n.times_coordinate(axis);

  Poly bracket = r2_dn;
  if (m != 0) bracket -= xn.scaled(ExactScalar(m));
  if (sgn(alpha) != 0) bracket -= xn.times_radius().scaled(ExactScalar(alpha));
  if (c == 0) return RadialForm(std::move(bracket), m + 2, 0, alpha);

  Poly total = bracket.times_one_plus_s_power(1);
  total -= xn.times_sum_of_squares().scaled(ExactScalar(2 * c));
  return RadialForm(std::move(total), m + 2, c + 1, alpha);
}

RadialForm laplacian(const RadialForm& f) {
  RadialForm out(f.dim());
  for (int i = 0; i < f.dim(); ++i) out += derivative(derivative(f, i), i);
  return out;
}

RadialForm euler_degree(const RadialForm& f) {
  if (f.is_zero()) return f;
  // Each numerator term is homogeneous; the weights (1+S)^-c and e^{-a r} contribute
  // -2c S/(1+S) and -a r respectively.
  const int m = f.r_power();
  const int c = f.cauchy_power();
  const Rational& alpha = f.exp_rate();
  Poly graded(f.dim());
  for (const auto& [mono, coef] : f.numerator().terms()) {
    graded.add_term(mono, coef * ExactScalar(mono.total_degree() - m));
  }
  if (sgn(alpha) != 0) graded -= f.numerator().times_radius().scaled(ExactScalar(alpha));
  if (c == 0) return RadialForm(std::move(graded), m, 0, alpha);
  Poly total = graded.times_one_plus_s_power(1);
  total -= f.numerator().times_sum_of_squares().scaled(ExactScalar(2 * c));
  return RadialForm(std::move(total), m, c + 1, alpha);
}

namespace {

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

EvalResult evaluate(const RadialForm& f, const ExactPoint& p) {
  if (p.dim() != f.dim()) throw std::invalid_argument("point dimension mismatch");
  Rational s2 = 0;
  for (const auto& x : p.coords) s2 += x * x;
  if (f.r_power() > 0 && sgn(s2) == 0) throw std::domain_error("pole at r = 0");
  const std::optional<Rational> r = exact_sqrt(s2);

  if (!r) {
    Point fp;
    for (const auto& x : p.coords) fp.coords.push_back(x.get_d());
    return {evaluate(f, fp).value, std::nullopt};
  }
  ExactScalar numer(0);
  for (const auto& [m, c] : f.numerator().terms()) {
    Rational v = 1;
    for (int i = 0; i < f.dim(); ++i) v *= rational_pow(p.coords[i], m.exps[i]);
    if (m.parity) v *= *r;
    numer += c * ExactScalar(v);
  }
  const Rational denom = rational_pow(*r, f.r_power()) * rational_pow(1 + s2, f.cauchy_power());
  ExactScalar value = numer / ExactScalar(denom);
  if (sgn(f.exp_rate()) == 0) return {value.to_complex(), value};
  const double w = std::exp(-Rational(f.exp_rate() * *r).get_d());
  return {value.to_complex() * w, std::nullopt};
}

EvalResult evaluate(const RadialForm& f, const Point& p) {
  if (p.dim() != f.dim()) throw std::invalid_argument("point dimension mismatch");
  double s2 = 0;
  for (double x : p.coords) s2 += x * x;
  if (f.r_power() > 0 && s2 == 0.0) throw std::domain_error("pole at r = 0");
  const double r = std::sqrt(s2);
  std::complex<double> numer = 0;
  for (const auto& [m, c] : f.numerator().terms()) {
    double v = 1;
    for (int i = 0; i < f.dim(); ++i) {
      for (int e = 0; e < m.exps[i]; ++e) v *= p.coords[i];
    }
    if (m.parity) v *= r;
    numer += c.to_complex() * v;
  }
  const double denom = std::pow(r, f.r_power()) * std::pow(1 + s2, f.cauchy_power());
  return {numer / denom * std::exp(-f.exp_rate().get_d() * r), std::nullopt};
}

std::optional<int> homogeneity_degree(const RadialForm& f) {
  if (f.is_zero() || f.cauchy_power() != 0 || sgn(f.exp_rate()) != 0) return std::nullopt;
  std::optional<int> deg;
  for (const auto& [m, c] : f.numerator().terms()) {
    const int d = m.total_degree() - f.r_power();
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

}  // namespace hc

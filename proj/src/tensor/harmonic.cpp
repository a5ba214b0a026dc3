#include "hc/tensor/harmonic.hpp"

#include <array>
#include <stdexcept>

#include "hc/exact/integrals.hpp"

namespace hc {

namespace {

void check_dim34(int dim) {
  if (dim != 3 && dim != 4) throw std::invalid_argument("harmonic tensors are defined for dim 3 and 4");
}

Rational as_rational(const ExactScalar& c) {
  if (!c.is_real()) throw std::domain_error("expected a real constant");
  return c.re();
}

RadialForm s_power(int dim, int k) { return RadialForm::radius_power(dim, 2 * k); }

}  // namespace

SymTensor harmonic_tensor(int l, int dim) {
  check_dim34(dim);
  if (l < 0) throw std::invalid_argument("negative rank");
  SymTensor out(dim, l);
  for (int k = 0; 2 * k <= l; ++k) {
    const Integer c = dim == 3 ? double_factorial(2 * l - 2 * k - 1) : double_factorial(2 * l - 2 * k);
    const ExactScalar coeff = ExactScalar(Rational(k % 2 ? -c : c));
    out += symmetrize(k, tensor_power(l - 2 * k, dim)).times(s_power(dim, k)).scaled(coeff);
  }
  return out;
}

SymTensor multipole_tensor(int l, int dim) {
  const int p = dim == 3 ? 2 * l + 1 : 2 * l + 2;
  return harmonic_tensor(l, dim).times(RadialForm::radius_power(dim, -p));
}

Integer decomposition_scale(int l, int dim) {
  check_dim34(dim);
  return dim == 3 ? double_factorial(2 * l - 1) : double_factorial(2 * l);
}

Rational full_trace_constant(int l, int k, int dim) {
  const SymTensor m = harmonic_tensor(l, dim);
  SymTensor t = symmetrize(k, m);
  for (int j = 0; j < k; ++j) t = trace(t);
  const std::optional<ExactScalar> c = proportionality(t, m);
  if (!c) throw std::domain_error("full trace is not proportional to the harmonic tensor");
  return as_rational(*c);
}

std::optional<Rational> trace_step_constant(int l, int k, int dim) {
  if (k < 1) throw std::invalid_argument("trace step needs k >= 1");
  const SymTensor m = harmonic_tensor(l, dim);
  const std::optional<ExactScalar> c = proportionality(trace(symmetrize(k, m)), symmetrize(k - 1, m));
  if (!c || !c->is_real()) return std::nullopt;
  return c->re();
}

std::vector<DecompositionTerm> decompose_power(int l, int dim) {
  check_dim34(dim);
  std::vector<DecompositionTerm> terms;
  for (int k = 0; 2 * k <= l; ++k) {
    const Rational lambda = full_trace_constant(l - 2 * k, k, dim);
    Rational a = Rational(decomposition_scale(l, dim)) / (Rational(decomposition_scale(l - 2 * k, dim)) * lambda);
    a.canonicalize();
    terms.push_back({l - 2 * k, k, s_power(dim, k).scaled(ExactScalar(a)), a});
  }
  return terms;
}

SymTensor recompose(const std::vector<DecompositionTerm>& terms, int rank, int dim) {
  SymTensor out(dim, rank);
  for (const auto& t : terms) {
    out += symmetrize(t.delta_count, harmonic_tensor(t.harmonic_rank, dim)).times(t.coefficient);
  }
  return out;
}

SphereAverage sphere_average_tensor(int l) {
  SymTensor avg(3, l);
  for (const auto& idx : sorted_indices(3, l)) {
    const std::vector<int> counts = index_counts(idx, 3);
    avg.set(idx, RadialForm::constant(3, ExactScalar(sphere_average_monomial(counts, 3))));
  }
  if (l % 2 == 1) return {avg, Rational(0), true};
  const SymTensor deltas = symmetrize(l / 2, SymTensor::scalar(RadialForm::constant(3, ExactScalar(1))));
  const std::optional<ExactScalar> c = proportionality(avg, deltas);
  if (!c) throw std::domain_error("sphere average is not proportional to the delta tensor");
  return {avg, as_rational(*c), false};
}

SquaredArgFunction SquaredArgFunction::power(int twice_exponent, const Rational& c) {
  SquaredArgFunction f;
  f.add_term(twice_exponent, 0, c);
  return f;
}

SquaredArgFunction SquaredArgFunction::cauchy(int c, const Rational& coeff) {
  SquaredArgFunction f;
  f.add_term(0, c, coeff);
  return f;
}

void SquaredArgFunction::add_term(int twice_exponent, int cauchy_power, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({twice_exponent, cauchy_power}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SquaredArgFunction& SquaredArgFunction::operator+=(const SquaredArgFunction& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

SquaredArgFunction SquaredArgFunction::derivative() const {
  SquaredArgFunction out;
  for (const auto& [k, c] : terms_) {
    const auto [e2, cp] = k;
    if (e2 != 0) out.add_term(e2 - 2, cp, c * ratio(e2, 2));
    if (cp != 0) out.add_term(e2, cp + 1, -c * cp);
  }
  return out;
}

RadialForm SquaredArgFunction::to_form(int dim) const {
  RadialForm out(dim);
  for (const auto& [k, c] : terms_) {
    out += (RadialForm::radius_power(dim, k.first) * RadialForm::cauchy(dim, k.second)).scaled(ExactScalar(c));
  }
  return out;
}

std::optional<SquaredArgFunction> SquaredArgFunction::from_form(const RadialForm& f) {
  if (sgn(f.exp_rate()) != 0) return std::nullopt;
  SquaredArgFunction g;
  for (const auto& [m, c] : f.numerator().terms()) {
    bool axis_only = true;
    for (int i = 1; i < kMaxDim; ++i) axis_only = axis_only && m.exps[i] == 0;
    if (!axis_only) continue;
    if (!c.is_real()) return std::nullopt;
    g.add_term(m.exps[0] + m.parity - f.r_power(), f.cauchy_power(), c.re());
  }
  if (!(g.to_form(f.dim()) == f)) return std::nullopt;
  return g;
}

SymTensor harmonic_operator_apply(int l, const RadialForm& f) {
  const int dim = f.dim();
  const SymTensor m = harmonic_tensor(l, dim);
  std::map<std::array<std::uint8_t, kMaxDim>, RadialForm> cache;
  std::function<RadialForm(const std::array<std::uint8_t, kMaxDim>&)> apply =
      [&](const std::array<std::uint8_t, kMaxDim>& a) -> RadialForm {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    int axis = -1;
    for (int i = 0; i < kMaxDim && axis < 0; ++i) {
      if (a[i] > 0) axis = i;
    }
    RadialForm out = f;
    if (axis >= 0) {
      std::array<std::uint8_t, kMaxDim> b = a;
      --b[axis];
      out = derivative(apply(b), axis);
    }
    cache.emplace(a, out);
    return out;
  };
  SymTensor out(dim, l);
  for (const auto& [idx, comp] : m.components()) {
    RadialForm acc(dim);
    for (const auto& [mono, c] : comp.numerator().terms()) {
      if (mono.parity) throw std::logic_error("harmonic tensor component carries an odd radius power");
      acc += apply(mono.exps).scaled(c);
    }
    out.set(idx, acc);
  }
  return out;
}

SymTensor harmonic_operator_closed_form(int l, const RadialForm& f) {
  std::optional<SquaredArgFunction> g = SquaredArgFunction::from_form(f);
  if (!g) throw std::invalid_argument("function does not depend on r^2 alone");
  for (int j = 0; j < l; ++j) *g = g->derivative();
  const RadialForm scale = g->to_form(f.dim()).scaled(ExactScalar(Rational(Integer(1) << l)));
  return harmonic_tensor(l, f.dim()).times(scale);
}

ExactScalar inverse_radius_operator_constant(int l) {
  const SymTensor lhs = harmonic_operator_apply(l, RadialForm::radius_power(3, -1));
  const std::optional<ExactScalar> c = proportionality(lhs, multipole_tensor(l, 3));
  if (!c) throw std::domain_error("operator image of 1/r is not a multipole");
  return *c;
}

RadialForm solid_projection(int l, int m, int sign) {
  if (m < 0 || m > l) throw std::out_of_range("m must satisfy 0 <= m <= l");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const std::vector<ExactScalar> nz{ExactScalar(0), ExactScalar(0), ExactScalar(1)};
  const std::vector<ExactScalar> npm{ExactScalar(1), ExactScalar(sign) * ExactScalar::i(), ExactScalar(0)};
  std::vector<std::vector<ExactScalar>> vs(static_cast<std::size_t>(l - m), nz);
  vs.insert(vs.end(), static_cast<std::size_t>(m), npm);
  return contract_vectors(harmonic_tensor(l, 3), vs);
}

}  // namespace hc

#include "hc/ladder/ladder.hpp"

#include <map>
#include <stdexcept>

#include "hc/tensor/harmonic.hpp"

namespace hc {

namespace {

void require_polynomial(const RadialForm& f) {
  if (!f.is_polynomial()) throw std::invalid_argument("ladder operators act on polynomials");
}

RadialForm X(int dim, int axis) { return RadialForm::coordinate(dim, axis); }
RadialForm C(int dim, const Rational& v) { return RadialForm::constant(dim, ExactScalar(v)); }
RadialForm S(int dim) { return RadialForm::radius_power(dim, 2); }

int degree_of(const RadialForm& f) { return f.is_zero() ? 0 : homogeneity_degree(f).value_or(0); }

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

RadialForm sum_over_axes(int dim, const std::function<RadialForm(int)>& fn) {
  RadialForm acc(dim);
  for (int i = 0; i < dim; ++i) acc += fn(i);
  return acc;
}

// i [x x L]_i f
RadialForm x_cross_l(const RadialForm& f, int i) {
  const int dim = f.dim();
  RadialForm acc(dim);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const int e = levi_civita(i, j, k);
      if (e != 0) acc += (X(dim, j) * angular_momentum(f, k)).scaled(ExactScalar(e));
    }
  }
  return acc.scaled(ExactScalar::i());
}

struct Recorder {
  std::vector<IdentityResult>& out;
  std::map<std::pair<std::string, int>, std::size_t> slot;

  void record(const std::string& name, int degree, bool ok, const RadialForm& f) {
    auto key = std::make_pair(name, degree);
    auto it = slot.find(key);
    if (it == slot.end()) {
      slot.emplace(key, out.size());
      out.push_back({name, degree, ok, ok ? "" : f.str()});
      return;
    }
    IdentityResult& r = out[it->second];
    if (r.holds && !ok) {
      r.holds = false;
      r.counterexample = f.str();
    }
  }
};

std::vector<RadialForm> harmonic_basis(int dim, int degree) {
  std::vector<RadialForm> out;
  const SymTensor m = harmonic_tensor(degree, dim);
  for (const auto& [idx, f] : m.components()) out.push_back(f);
  return out;
}

}  // namespace

RadialForm raise3(const RadialForm& f, int axis) {
  require_polynomial(f);
  const int dim = f.dim();
  const RadialForm xf = X(dim, axis) * f;
  return euler_degree(xf).scaled(ExactScalar(2)) - xf - S(dim) * derivative(f, axis);
}

SymTensor raise3(const SymTensor& t) {
  return raise(t, [](int i, const RadialForm& f) { return raise3(f, i); });
}

RadialForm raise4(const RadialForm& f, int axis) {
  require_polynomial(f);
  if (f.dim() != 4) throw std::invalid_argument("raise4 needs dim 4");
  const RadialForm yf = X(4, axis) * f;
  return euler_degree(yf).scaled(ExactScalar(2)) - S(4) * derivative(f, axis);
}

SymTensor raise4(const SymTensor& t) {
  return raise(t, [](int i, const RadialForm& f) { return raise4(f, i); });
}

SymTensor ladder_power(int l, int dim) {
  if (l < 0) throw std::invalid_argument("negative ladder power");
  SymTensor t = SymTensor::scalar(C(dim, 1));
  for (int j = 0; j < l; ++j) t = dim == 3 ? raise3(t) : raise4(t);
  return t;
}

RadialForm angular_momentum(const RadialForm& f, int k) {
  const int dim = f.dim();
  RadialForm acc(dim);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const int e = levi_civita(k, a, b);
      if (e != 0) acc += (X(dim, a) * derivative(f, b)).scaled(ExactScalar(e));
    }
  }
  return acc.scaled(-ExactScalar::i());
}

RadialForm runge_lenz(const RadialForm& f, int i) {
  if (f.dim() != 4) throw std::invalid_argument("runge_lenz needs dim 4");
  return (X(4, 3) * derivative(f, i) - X(4, i) * derivative(f, 3)).scaled(ExactScalar::i());
}

std::vector<RadialForm> monomial_basis(int dim, int max_degree) {
  std::vector<RadialForm> out;
  for (int h = 0; h <= max_degree; ++h) {
    for (const auto& idx : sorted_indices(dim, h)) {
      RadialForm f = C(dim, 1);
      for (int v : idx) f *= X(dim, v);
      out.push_back(f);
    }
  }
  return out;
}

std::vector<IdentityResult> check_ladder_identities(int dim, int max_degree) {
  if (dim != 3 && dim != 4) throw std::invalid_argument("ladder identities exist for dim 3 and 4");
  std::vector<IdentityResult> out;
  Recorder rec{out, {}};
  const auto up = [dim](const RadialForm& f, int i) { return dim == 3 ? raise3(f, i) : raise4(f, i); };
  const RadialForm s = S(dim);
  const std::string p = dim == 3 ? "" : "4d ";

  for (const RadialForm& f : monomial_basis(dim, max_degree)) {
    const int h = degree_of(f);
    const RadialForm lap = laplacian(f);
    rec.record(p + "D.D = r^4 Laplacian", h,
               sum_over_axes(dim, [&](int i) { return up(up(f, i), i); }) == s * s * lap, f);
    const RadialForm xd = sum_over_axes(dim, [&](int i) { return X(dim, i) * up(f, i); });
    const RadialForm dx = sum_over_axes(dim, [&](int i) { return up(X(dim, i) * f, i); });
    const RadialForm div = sum_over_axes(dim, [&](int i) { return derivative(up(f, i), i); });
    if (dim == 3) {
      rec.record("x.D = (l+1) r^2", h, xd == C(3, h + 1) * s * f, f);
      rec.record("D.x = r^2 l", h, dx == C(3, h) * s * f, f);
      rec.record("x.D - D.x = r^2", h, xd - dx == s * f, f);
      rec.record("div.D = (l+1)(2l+3) - r^2 Laplacian", h, div == C(3, (h + 1) * (2 * h + 3)) * f - s * lap, f);
      for (int i = 0; i < 3; ++i) {
        const RadialForm xf = X(3, i) * f;
        rec.record("D = l x + i[x x L]", h, up(f, i) == euler_degree(xf) + x_cross_l(f, i), f);
      }
    } else {
      rec.record("4d y.D = n rho^2", h, xd == C(4, h + 2) * s * f, f);
      rec.record("4d D.y = (n-2) rho^2", h, dx == C(4, h) * s * f, f);
      rec.record("4d div.D = 2(n+2)^2 - rho^2 Laplacian", h, div == C(4, 2 * (h + 2) * (h + 2)) * f - s * lap, f);
      const RadialForm tau = X(4, 3);
      for (int i = 0; i < 3; ++i) {
        const RadialForm rhs = C(4, h + 2) * X(4, i) * f + x_cross_l(f, i) + (tau * runge_lenz(f, i)).scaled(ExactScalar::i());
        rec.record("4d D_x = (n+1)x + i[x x L] + i tau A", h, up(f, i) == rhs, f);
      }
      RadialForm xa(4);
      for (int i = 0; i < 3; ++i) xa += X(4, i) * runge_lenz(f, i);
      const RadialForm base = C(4, h + 2) * tau * f;
      rec.record("4d D_tau = (n+1)tau - i(x.A)", h, up(f, 3) == base - xa.scaled(ExactScalar::i()), f);
      rec.record("4d D_tau = (n+1)tau + i(x.A) [printed]", h, up(f, 3) == base + xa.scaled(ExactScalar::i()), f);
    }
  }
  for (int h = 0; h <= max_degree; ++h) {
    for (const RadialForm& f : harmonic_basis(dim, h)) {
      const RadialForm div = sum_over_axes(dim, [&](int i) { return derivative(up(f, i), i); });
      if (dim == 3) {
        rec.record("div.D = (l+1)(2l+3) on harmonics", h, div == C(3, (h + 1) * (2 * h + 3)) * f, f);
      } else {
        rec.record("4d div.D = 2(n+2)^2 on harmonics", h, div == C(4, 2 * (h + 2) * (h + 2)) * f, f);
      }
    }
  }
  return out;
}

}  // namespace hc

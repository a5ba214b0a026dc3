#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hc/cli.hpp"
#include "hc/errata.hpp"
#include "hc/hydrogen/states.hpp"
#include "hc/ladder/ladder.hpp"
#include "hc/numerics/fock.hpp"
#include "hc/special/correspondence.hpp"
#include "hc/stark/stark.hpp"
#include "hc/tensor/harmonic.hpp"

namespace hc {

namespace {

std::string nl(int n, int l) { return "n=" + std::to_string(n) + " l=" + std::to_string(l); }

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

void schrodinger(const VerifyOptions& o, std::vector<VerifyLine>& out) {
  for (int n = 1; n <= o.n_max; ++n) {
    for (int l = 0; l < n; ++l) {
      for (Convention c : {Convention::unit, Convention::physical}) {
        const bool ok = verify_schrodinger(psi_coordinate(n, l, c)).is_zero();
        out.push_back({"schrodinger", nl(n, l) + " " + to_string(c), ok, ok ? "residual 0" : "nonzero residual"});
      }
    }
  }
}

void momentum(const VerifyOptions& o, std::vector<VerifyLine>& out) {
  for (int n = 1; n <= o.n_max; ++n) {
    for (int l = 0; l < n; ++l) {
      const MomentumResiduals r = verify_momentum_ode(n, l);
      const bool ok = r.vector_form.is_zero() && r.printed.is_zero();
      out.push_back({"momentum", nl(n, l), ok, ok ? "residual 0" : "nonzero residual"});
    }
  }
}

void tensors(const VerifyOptions& o, std::vector<VerifyLine>& out) {
  const int lmax = std::min(o.n_max + 2, 8);
  for (int dim : {3, 4}) {
    for (int l = 0; l <= lmax; ++l) {
      const SymTensor m = harmonic_tensor(l, dim);
      bool ok = true;
      for (const auto& [idx, f] : m.components()) ok = ok && laplacian(f).is_zero();
      if (l >= 2) ok = ok && trace(m).is_zero();
      out.push_back({"tensors", "harmonic l=" + std::to_string(l) + " d=" + std::to_string(dim), ok, ""});
    }
    for (int l = 0; l <= std::min(lmax, 5); ++l) {
      const bool ok = recompose(decompose_power(l, dim), l, dim) ==
                      tensor_power(l, dim).scaled(ExactScalar(Rational(decomposition_scale(l, dim))));
      out.push_back({"tensors", "decomposition l=" + std::to_string(l) + " d=" + std::to_string(dim), ok, ""});
    }
  }
}

void ladders(const VerifyOptions& o, std::vector<VerifyLine>& out) {
  const int lmax = std::min(o.n_max + 1, 6);
  for (int dim : {3, 4}) {
    for (int l = 0; l <= lmax; ++l) {
      const bool ok = ladder_power(l, dim) == harmonic_tensor(l, dim);
      out.push_back({"ladders", "power l=" + std::to_string(l) + " d=" + std::to_string(dim), ok, ""});
    }
    bool all = true;
    std::string failed;
    for (const auto& r : check_ladder_identities(dim, lmax)) {
      const bool printed = r.identity.find("[printed]") != std::string::npos;
      if (printed) continue;
      if (!r.holds) {
        all = false;
        failed = r.identity;
      }
    }
    out.push_back({"ladders", "identities d=" + std::to_string(dim), all, failed});
  }
}

void correspondence(const VerifyOptions& o, std::vector<VerifyLine>& out) {
  for (int n = 1; n <= o.n_max; ++n) {
    for (int l = 0; l < n; ++l) {
      const HarmonicTransition t = coulomb_from_harmonic(n, l);
      out.push_back({"correspondence", "harmonic route " + nl(n, l), t.constant.has_value(),
                     t.constant ? "constant " + t.constant->str() : "not proportional"});
      const Correspondence c = laguerre_from_gegenbauer(n - l - 1, l);
      const bool ok = c.constant && *c.constant == c.predicted;
      out.push_back({"correspondence", "laguerre k=" + std::to_string(n - l - 1) + " l=" + std::to_string(l), ok,
                     c.constant ? "constant " + c.constant->str() : "not proportional"});
    }
  }
}

void stark(const VerifyOptions& o, std::vector<VerifyLine>& out) {
  for (int n = 1; n <= o.n_max; ++n) {
    const StarkResult s = stark_result(n);
    const bool ok = s.agrees && s.e1_zero && s.residual_zero;
    out.push_back({"stark", "n=" + std::to_string(n), ok, "d_z = " + format_rational(s.dipole_coefficient)});
  }
}

void fock(const VerifyOptions& o, std::vector<VerifyLine>& out) {
  const int lo = o.n > 0 ? o.n : 1;
  const int hi = o.n > 0 ? o.n : std::min(o.n_max, 4);
  const std::array<double, 4> y{0.2, 0.1, -0.3, 0.15};
  for (int n = lo; n <= hi; ++n) {
    for (int l = 0; l < n; ++l) {
      const NumericCheck c = fock_check_4d(n, l, y, o.level);
      out.push_back({"fock", nl(n, l) + " level=" + std::to_string(c.level), c.pass, "rel_error " + sci(c.rel_error)});
    }
  }
  for (int l = 0; l <= std::min(o.n_max, 4); ++l) {
    const NumericCheck c = newton_check_3d(l, {0.21, -0.33, 0.4}, o.level);
    out.push_back({"fock", "newton l=" + std::to_string(l) + " level=" + std::to_string(c.level), c.pass,
                   "rel_error " + sci(c.rel_error)});
  }
  const std::uint64_t seed = seed_from_env(20240611);
  for (int n = lo; n <= hi; ++n) {
    double worst = 0;
    bool ok = true;
    for (const auto& c : momentum_sphere_checks(n, 0, 10, seed)) {
      worst = std::max(worst, c.rel_error);
      ok = ok && c.pass;
    }
    out.push_back({"fock", "momentum on sphere n=" + std::to_string(n), ok, "max rel_error " + sci(worst)});
  }
}

void errata(const VerifyOptions&, std::vector<VerifyLine>& out) {
  for (const auto& e : check_errata()) {
    out.push_back({"errata", e.name, e.decided(), "verified: " + e.verified});
  }
}

}  // namespace

std::vector<std::string> verification_suites() {
  return {"schrodinger", "momentum", "tensors", "ladders", "correspondence", "stark", "fock", "errata"};
}

std::vector<VerifyLine> run_verification(const std::string& suite, const VerifyOptions& opts) {
  if (opts.n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
  std::vector<VerifyLine> out;
  const auto one = [&](const std::string& s) {
    if (s == "schrodinger") return schrodinger(opts, out);
    if (s == "momentum") return momentum(opts, out);
    if (s == "tensors") return tensors(opts, out);
    if (s == "ladders") return ladders(opts, out);
    if (s == "correspondence") return correspondence(opts, out);
    if (s == "stark") return stark(opts, out);
    if (s == "fock") return fock(opts, out);
    if (s == "errata") return errata(opts, out);
    throw std::invalid_argument("unknown suite: " + s);
  };
  if (suite == "all") {
    for (const auto& s : verification_suites()) one(s);
  } else {
    one(suite);
  }
  return out;
}

}  // namespace hc

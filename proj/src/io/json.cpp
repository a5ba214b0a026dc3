#include "hc/io/json.hpp"

#include <stdexcept>

namespace hc {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("malformed JSON: ") + what);
}

}  // namespace

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
  require(j.is_string(), "rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json scalar_to_json(const ExactScalar& c) {
  if (c.is_real()) return rational_to_json(c.re());
  return Json{{"re", rational_to_json(c.re())}, {"im", rational_to_json(c.im())}};
}

ExactScalar scalar_from_json(const Json& j) {
  if (j.is_string()) return ExactScalar(rational_from_json(j));
  require(j.is_object() && j.contains("re") && j.contains("im"), "scalar");
  return ExactScalar(rational_from_json(j.at("re")), rational_from_json(j.at("im")));
}

Json form_to_json(const RadialForm& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.numerator().terms()) {
    Json e = Json::array();
    for (int i = 0; i < f.dim(); ++i) e.push_back(int(m.exps[i]));
    terms.push_back(Json{{"coeff", scalar_to_json(c)}, {"exps", e}, {"r", int(m.parity)}});
  }
  return Json{{"dim", f.dim()},
              {"text", f.str()},
              {"terms", terms},
              {"r_power", f.r_power()},
              {"cauchy_power", f.cauchy_power()},
              {"exp_rate", rational_to_json(f.exp_rate())}};
}

RadialForm form_from_json(const Json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("terms"), "radial form");
  const int dim = j.at("dim").get<int>();
  require(dim >= 1 && dim <= kMaxDim, "dimension");
  Poly p(dim);
  for (const auto& t : j.at("terms")) {
    Monomial m;
    const auto& e = t.at("exps");
    require(e.is_array() && static_cast<int>(e.size()) == dim, "exponent list");
    for (int i = 0; i < dim; ++i) {
      const int v = e[static_cast<std::size_t>(i)].get<int>();
      require(v >= 0 && v < 256, "exponent");
      m.exps[i] = static_cast<std::uint8_t>(v);
    }
    const int r = t.value("r", 0);
    require(r == 0 || r == 1, "radius parity");
    m.parity = static_cast<std::uint8_t>(r);
    p.add_term(m, scalar_from_json(t.at("coeff")));
  }
  return RadialForm(std::move(p), j.value("r_power", 0), j.value("cauchy_power", 0),
                    j.contains("exp_rate") ? rational_from_json(j.at("exp_rate")) : Rational(0));
}

Json tensor_to_json(const SymTensor& t) {
  Json comps = Json::array();
  for (const auto& [idx, f] : t.components()) {
    Json i = Json::array();
    for (int v : idx) i.push_back(v + 1);
    comps.push_back(Json{{"index", i}, {"value", form_to_json(f)}});
  }
  return Json{{"dim", t.dim()}, {"rank", t.rank()}, {"components", comps}};
}

SymTensor tensor_from_json(const Json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("rank") && j.contains("components"), "tensor");
  SymTensor t(j.at("dim").get<int>(), j.at("rank").get<int>());
  for (const auto& c : j.at("components")) {
    MultiIndex idx;
    for (const auto& v : c.at("index")) idx.push_back(v.get<int>() - 1);
    t.set(idx, form_from_json(c.at("value")));
  }
  return t;
}

Json poly1_to_json(const Poly1& p) {
  Json c = Json::array();
  for (int k = 0; k <= p.degree(); ++k) c.push_back(scalar_to_json(p.coeff(k)));
  return Json{{"var", std::string(1, p.var())}, {"coeffs", c}, {"text", p.str()}};
}

Poly1 poly1_from_json(const Json& j) {
  require(j.is_object() && j.contains("coeffs"), "polynomial");
  std::vector<ExactScalar> c;
  for (const auto& v : j.at("coeffs")) c.push_back(scalar_from_json(v));
  const std::string var = j.value("var", std::string("x"));
  require(var.size() == 1, "variable name");
  return Poly1(std::move(c), var[0]);
}

Json state_to_json(const CoulombState& s) {
  return Json{{"kind", "coordinate"},
              {"n", s.n},
              {"l", s.l},
              {"convention", to_string(s.convention)},
              {"energy", rational_to_json(energy(s.n, s.convention))},
              {"tensor", tensor_to_json(s.tensor)}};
}

CoulombState state_from_json(const Json& j) {
  require(j.is_object() && j.value("kind", "") == "coordinate", "coordinate state");
  return {j.at("n").get<int>(), j.at("l").get<int>(), parse_convention(j.at("convention").get<std::string>()),
          tensor_from_json(j.at("tensor"))};
}

Json momentum_to_json(const MomentumState& m) {
  return Json{{"kind", "momentum"},
              {"n", m.n},
              {"l", m.l},
              {"argument_scale", rational_to_json(m.argument_scale)},
              {"b", tensor_to_json(m.b)},
              {"a", tensor_to_json(m.a)}};
}

MomentumState momentum_from_json(const Json& j) {
  require(j.is_object() && j.value("kind", "") == "momentum", "momentum state");
  return {j.at("n").get<int>(), j.at("l").get<int>(), rational_from_json(j.at("argument_scale")),
          tensor_from_json(j.at("b")), tensor_from_json(j.at("a"))};
}

Json stark_to_json(const StarkResult& s) {
  return Json{{"n", s.n},
              {"c1", rational_to_json(s.c1)},
              {"c2", rational_to_json(s.c2)},
              {"e2_coefficient", rational_to_json(s.e2_coefficient)},
              {"dipole_coefficient", rational_to_json(s.dipole_coefficient)},
              {"polarizability", rational_to_json(s.dipole_coefficient)},
              {"formula", rational_to_json(s.formula)},
              {"reference", rational_to_json(s.reference)},
              {"e1_zero", s.e1_zero},
              {"residual_zero", s.residual_zero},
              {"agrees", s.agrees}};
}

StarkResult stark_from_json(const Json& j) {
  require(j.is_object() && j.contains("n"), "stark result");
  return {j.at("n").get<int>(),
          rational_from_json(j.at("c1")),
          rational_from_json(j.at("c2")),
          rational_from_json(j.at("e2_coefficient")),
          rational_from_json(j.at("dipole_coefficient")),
          rational_from_json(j.at("formula")),
          rational_from_json(j.at("reference")),
          j.at("e1_zero").get<bool>(),
          j.at("residual_zero").get<bool>(),
          j.at("agrees").get<bool>()};
}

}  // namespace hc

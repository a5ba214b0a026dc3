#include "hc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "hc/hydrogen/states.hpp"
#include "hc/io/json.hpp"
#include "hc/ladder/ladder.hpp"
#include "hc/numerics/fock.hpp"
#include "hc/numerics/kernels.hpp"
#include "hc/numerics/resolvent.hpp"
#include "hc/stark/stark.hpp"
#include "hc/tensor/harmonic.hpp"

namespace hc {

namespace {

struct Options {
  int n = 1;
  int l = 0;
  std::optional<int> m;
  int dim = 3;
  int rank = 2;
  double lambda = 0.5;
  double cos_angle = 0.3;
  int terms = 400;
  int level = 0;
  int n_max = 3;
  int threads = 1;
  std::string format = "text";
  std::string convention = "unit";
  std::string suite = "all";
};

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string nl_label(int n, int l) { return "n=" + std::to_string(n) + " l=" + std::to_string(l); }

void print_tensor_text(std::ostream& out, const SymTensor& t) { out << t.str() << "\n"; }

void print_tensor_csv(std::ostream& out, const SymTensor& t) {
  out << "index,value\n";
  for (const auto& [idx, f] : t.components()) {
    std::string i;
    for (std::size_t j = 0; j < idx.size(); ++j) i += (j ? " " : "") + std::to_string(idx[j] + 1);
    out << "\"" << i << "\",\"" << f.str() << "\"\n";
  }
}

void emit_tensor(std::ostream& out, const Options& o, const SymTensor& t, Json doc) {
  if (o.format == "json") {
    out << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    print_tensor_csv(out, t);
  } else {
    print_tensor_text(out, t);
  }
}

int cmd_state(const Options& o, std::ostream& out) {
  const Convention c = parse_convention(o.convention);
  const CoulombState s = psi_coordinate(o.n, o.l, c);
  const bool ok = verify_schrodinger(s).is_zero();
  Json doc = state_to_json(s);
  doc["residual_zero"] = ok;
  if (o.m) {
    const RadialForm p = psi_projected(o.n, o.l, *o.m, c);
    doc["m"] = *o.m;
    doc["projected"] = form_to_json(p);
  }
  if (o.format == "text") {
    out << "state " << nl_label(o.n, o.l) << " convention " << to_string(c) << "\n";
    if (o.m) out << "projected m=" << *o.m << ": " << psi_projected(o.n, o.l, *o.m, c).str() << "\n";
    out << (ok ? "schrodinger residual: 0\n" : "schrodinger residual: NONZERO\n");
  }
  emit_tensor(out, o, s.tensor, doc);
  return ok ? 0 : 1;
}

int cmd_momentum(const Options& o, std::ostream& out) {
  const MomentumState m = momentum_state(o.n, o.l);
  const MomentumResiduals r = verify_momentum_ode(o.n, o.l);
  const bool ok = r.vector_form.is_zero() && r.printed.is_zero();
  Json doc = momentum_to_json(m);
  doc["residual_zero"] = ok;
  if (o.format == "text") {
    out << "momentum " << nl_label(o.n, o.l) << " argument scale " << format_rational(m.argument_scale) << "\n";
    out << (ok ? "differential equation residual: 0\n" : "differential equation residual: NONZERO\n");
  }
  emit_tensor(out, o, m.a, doc);
  return ok ? 0 : 1;
}

int cmd_tensor(const Options& o, std::ostream& out) {
  const SymTensor t = harmonic_tensor(o.rank, o.dim);
  bool ok = true;
  for (const auto& [idx, f] : t.components()) ok = ok && laplacian(f).is_zero();
  if (o.rank >= 2) ok = ok && trace(t).is_zero();
  Json doc{{"kind", "harmonic_tensor"}, {"rank", o.rank}, {"dim", o.dim}, {"harmonic", ok}, {"tensor", tensor_to_json(t)}};
  if (o.format == "text") out << (ok ? "harmonic and traceless\n" : "NOT harmonic\n");
  emit_tensor(out, o, t, doc);
  return ok ? 0 : 1;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto terms = decompose_power(o.rank, o.dim);
  const bool ok = recompose(terms, o.rank, o.dim) ==
                  tensor_power(o.rank, o.dim).scaled(ExactScalar(Rational(decomposition_scale(o.rank, o.dim))));
  if (o.format == "json") {
    Json t = Json::array();
    for (const auto& d : terms) {
      t.push_back(Json{{"harmonic_rank", d.harmonic_rank},
                       {"delta_count", d.delta_count},
                       {"coefficient", rational_to_json(d.rational_coefficient)}});
    }
    out << Json{{"rank", o.rank},
                {"dim", o.dim},
                {"scale", Integer(decomposition_scale(o.rank, o.dim)).get_str()},
                {"terms", t},
                {"recomposes", ok}}
               .dump(2)
        << "\n";
  } else if (o.format == "csv") {
    out << "harmonic_rank,delta_count,coefficient\n";
    for (const auto& d : terms) out << d.harmonic_rank << "," << d.delta_count << "," << format_rational(d.rational_coefficient) << "\n";
  } else {
    out << decomposition_scale(o.rank, o.dim).get_str() << " x^" << o.rank << " =";
    for (const auto& d : terms) {
      out << " + " << d.rational_coefficient.get_str() << " r^" << 2 * d.delta_count << " <<d^" << d.delta_count << " M("
          << d.harmonic_rank << ")>>";
    }
    out << "\n" << (ok ? "recomposition exact\n" : "recomposition FAILED\n");
  }
  return ok ? 0 : 1;
}

int cmd_ladder(const Options& o, std::ostream& out) {
  const bool power_ok = ladder_power(o.rank, o.dim) == harmonic_tensor(o.rank, o.dim);
  const auto ids = check_ladder_identities(o.dim, o.rank);
  bool ok = power_ok;
  for (const auto& r : ids) {
    if (r.identity.find("[printed]") == std::string::npos) ok = ok && r.holds;
  }
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto& r : ids) a.push_back(Json{{"identity", r.identity}, {"degree", r.degree}, {"holds", r.holds}});
    out << Json{{"dim", o.dim}, {"rank", o.rank}, {"power_matches_harmonic", power_ok}, {"identities", a}}.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "identity,degree,holds\n";
    for (const auto& r : ids) out << "\"" << r.identity << "\"," << r.degree << "," << (r.holds ? "true" : "false") << "\n";
  } else {
    out << "ladder power to rank " << o.rank << " in " << o.dim << "D: " << (power_ok ? "matches" : "DIFFERS") << "\n";
    for (const auto& r : ids) out << (r.holds ? "holds   " : "fails   ") << r.identity << " (degree " << r.degree << ")\n";
  }
  return ok ? 0 : 1;
}

int cmd_stark(const Options& o, std::ostream& out) {
  const StarkResult s = stark_result(o.n);
  const int m = o.m.value_or(o.n - 1);
  const Rational ref = stark_reference(o.n, m);
  const bool ok = s.agrees && s.e1_zero && s.residual_zero;
  if (o.format == "json") {
    Json doc = stark_to_json(s);
    doc["m"] = m;
    doc["reference_at_m"] = rational_to_json(ref);
    out << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "quantity,value\n";
    out << "c1," << format_rational(s.c1) << "\nc2," << format_rational(s.c2) << "\ne2," << format_rational(s.e2_coefficient)
        << "\ndipole," << format_rational(s.dipole_coefficient) << "\nreference_m" << m << "," << format_rational(ref) << "\n";
  } else {
    out << "n=" << o.n << " c1=" << s.c1.get_str() << " c2=" << s.c2.get_str() << "\n";
    out << "e2 = " << s.e2_coefficient.get_str() << " field^2\n";
    out << "polarizability = " << s.dipole_coefficient.get_str() << "\n";
    out << "reference(n, m=" << m << ") = " << ref.get_str() << "\n";
    out << (ok ? "symbolic, formula and reference agree\n" : "MISMATCH\n");
  }
  return ok ? 0 : 1;
}

int cmd_resolvent(const Options& o, std::ostream& out) {
  const ResolventResult r = resolvent({o.cos_angle, o.lambda, o.terms});
  const double diff = std::abs(r.smooth_sum - r.series_route);
  if (o.format == "json") {
    out << Json{{"lambda", o.lambda},
                {"cos", o.cos_angle},
                {"terms", o.terms},
                {"smooth_sum", r.smooth_sum},
                {"assembled_value", r.assembled_value},
                {"series_route", r.series_route},
                {"route_difference", diff},
                {"tail_bound", r.tail_bound},
                {"singular_part", r.singular_part}}
               .dump(2)
        << "\n";
  } else if (o.format == "csv") {
    out << "identity,n/k,level/terms,lhs,rhs,rel_error\n";
    out << "resolvent,0," << o.terms << "," << num(r.smooth_sum) << "," << num(r.series_route) << ","
        << num(r.smooth_sum != 0 ? diff / std::abs(r.smooth_sum) : diff) << "\n";
  } else {
    out << "smooth_sum      " << num(r.smooth_sum) << "\n";
    out << "series_route    " << num(r.series_route) << "  (difference " << num(diff) << ")\n";
    out << "tail_bound      " << num(r.tail_bound) << "\n";
    out << "assembled_value " << num(r.assembled_value) << " + " << r.singular_part << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions v;
  v.n_max = o.n_max;
  v.level = o.level;
  if (o.suite == "fock" && o.n > 1) v.n = o.n;
  if (o.suite == "fock" && o.format == "csv") {
    const int lo = v.n > 0 ? v.n : 1;
    const int hi = v.n > 0 ? v.n : std::min(v.n_max, 4);
    out << "identity,n/k,level/terms,lhs,rhs,rel_error\n";
    bool ok = true;
    for (int n = lo; n <= hi; ++n) {
      for (int l = 0; l < n; ++l) {
        const NumericCheck c = fock_check_4d(n, l, {0.2, 0.1, -0.3, 0.15}, v.level);
        ok = ok && c.pass;
        out << c.identity << " l=" << l << "," << c.index << "," << c.level << "," << num(c.lhs) << "," << num(c.rhs) << ","
            << num(c.rel_error) << "\n";
      }
    }
    return ok ? 0 : 1;
  }
  const std::vector<VerifyLine> lines = run_verification(o.suite, v);
  const bool ok = std::all_of(lines.begin(), lines.end(), [](const VerifyLine& l) { return l.pass; });
  if (o.format == "json") {
    Json a = Json::array();
    for (const auto& l : lines) a.push_back(Json{{"suite", l.suite}, {"item", l.item}, {"pass", l.pass}, {"detail", l.detail}});
    out << Json{{"suite", o.suite}, {"all_pass", ok}, {"lines", a}}.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "suite,item,pass,detail\n";
    for (const auto& l : lines) out << l.suite << ",\"" << l.item << "\"," << (l.pass ? "pass" : "FAIL") << ",\"" << l.detail << "\"\n";
  } else {
    std::size_t w = 4;
    for (const auto& l : lines) w = std::max(w, l.item.size());
    for (const auto& l : lines) {
      out << std::left << std::setw(16) << l.suite << std::setw(static_cast<int>(w) + 2) << l.item << (l.pass ? "pass  " : "FAIL  ")
          << l.detail << "\n";
    }
    std::map<std::string, std::pair<int, int>> tally;
    for (const auto& l : lines) {
      auto& t = tally[l.suite];
      ++t.second;
      if (l.pass) ++t.first;
    }
    out << "\nsummary\n";
    for (const auto& s : verification_suites()) {
      auto it = tally.find(s);
      if (it == tally.end()) continue;
      out << std::left << std::setw(16) << s << it->second.first << "/" << it->second.second << "\n";
    }
    out << (ok ? "all pass\n" : "FAILURES\n");
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hcoul: harmonic-tensor toolkit for the Coulomb problem"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "worker threads for quadrature sums")->check(CLI::PositiveNumber);
  const std::vector<std::string> formats{"json", "text", "csv"};

  const auto add_format = [&](CLI::App* c) { c->add_option("--format", o.format, "json, text or csv")->check(CLI::IsMember(formats)); };
  const auto add_nl = [&](CLI::App* c) {
    c->add_option("--n", o.n, "principal quantum number")->required();
    c->add_option("--l", o.l, "orbital quantum number");
  };

  CLI::App* state = app.add_subcommand("state", "coordinate-space eigenfunction");
  add_nl(state);
  state->add_option("--m", o.m, "magnetic quantum number (0..l) for the projected form");
  state->add_option("--convention", o.convention, "unit or physical")->check(CLI::IsMember({"unit", "physical"}));
  add_format(state);

  CLI::App* momentum = app.add_subcommand("momentum", "momentum-space eigenfunction");
  add_nl(momentum);
  add_format(momentum);

  CLI::App* tensor = app.add_subcommand("tensor", "harmonic tensor");
  tensor->add_option("--rank", o.rank, "tensor rank")->required();
  tensor->add_option("--dim", o.dim, "3 or 4")->check(CLI::IsMember({3, 4}));
  add_format(tensor);

  CLI::App* decompose = app.add_subcommand("decompose", "decompose a tensor power into harmonic parts");
  decompose->add_option("--rank", o.rank, "power")->required();
  decompose->add_option("--dim", o.dim, "3 or 4")->check(CLI::IsMember({3, 4}));
  add_format(decompose);

  CLI::App* ladder = app.add_subcommand("ladder", "ladder operator powers and identities");
  ladder->add_option("--rank", o.rank, "highest rank and monomial degree");
  ladder->add_option("--dim", o.dim, "3 or 4")->check(CLI::IsMember({3, 4}));
  add_format(ladder);

  CLI::App* stark = app.add_subcommand("stark", "quadratic Stark effect");
  stark->add_option("--n", o.n, "principal quantum number")->required();
  stark->add_option("--m", o.m, "magnetic quantum number for the reference table");
  add_format(stark);

  CLI::App* verify = app.add_subcommand("verify", "verification sweeps");
  verify->add_option("suite", o.suite, "all, schrodinger, momentum, tensors, ladders, correspondence, stark, fock, errata");
  verify->add_option("--n-max", o.n_max, "largest principal quantum number");
  verify->add_option("--n", o.n, "single n for the fock suite");
  verify->add_option("--level", o.level, "quadrature level (0 = automatic)");
  add_format(verify);

  CLI::App* resolv = app.add_subcommand("resolvent", "resolvent series on the 3-sphere");
  resolv->add_option("--lambda", o.lambda, "spectral parameter");
  resolv->add_option("--cos", o.cos_angle, "cosine of the angle between x and y");
  resolv->add_option("--terms", o.terms, "number of series terms");
  add_format(resolv);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return 2;
  }

  try {
    set_default_threads(o.threads);
    if (state->parsed()) return cmd_state(o, out);
    if (momentum->parsed()) return cmd_momentum(o, out);
    if (tensor->parsed()) return cmd_tensor(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (ladder->parsed()) return cmd_ladder(o, out);
    if (stark->parsed()) return cmd_stark(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (resolv->parsed()) return cmd_resolvent(o, out);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace hc

#include <sstream>

#include "doctest.h"
#include "hc/cli.hpp"
#include "hc/io/json.hpp"
#include "hc/tensor/harmonic.hpp"

using namespace hc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  const int c = run(args, o, e);
  return {c, o.str(), e.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("state json") {
    const Run r = run_cli({"state", "--n", "1", "--l", "0", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("exp(-r)") != std::string::npos);
    const Json j = Json::parse(r.out);
    const CoulombState s = state_from_json(j);
    CHECK(s.tensor == psi_coordinate(1, 0).tensor);
    CHECK(j.at("energy") == "-1/2");
  }

  TEST_CASE("round trips") {
    for (int n = 1; n <= 3; ++n) {
      for (int l = 0; l < n; ++l) {
        const Run r = run_cli({"state", "--n", std::to_string(n), "--l", std::to_string(l), "--format", "json",
                               "--convention", "physical"});
        REQUIRE(r.code == 0);
        CHECK(state_from_json(Json::parse(r.out)).tensor == psi_coordinate(n, l, Convention::physical).tensor);
        const Run m = run_cli({"momentum", "--n", std::to_string(n), "--l", std::to_string(l), "--format", "json"});
        REQUIRE(m.code == 0);
        const MomentumState ms = momentum_from_json(Json::parse(m.out));
        CHECK(ms.a == momentum_state(n, l).a);
        CHECK(ms.b == momentum_state(n, l).b);
      }
    }
    const Run t = run_cli({"tensor", "--rank", "3", "--dim", "4", "--format", "json"});
    CHECK(tensor_from_json(Json::parse(t.out).at("tensor")) == harmonic_tensor(3, 4));
    const Run p = run_cli({"state", "--n", "3", "--l", "2", "--m", "1", "--format", "json"});
    CHECK(form_from_json(Json::parse(p.out).at("projected")) == psi_projected(3, 2, 1));
    const Poly1 q({ExactScalar(1), ExactScalar(ratio(-2, 3), 1)}, 'r');
    CHECK(poly1_from_json(poly1_to_json(q)) == q);
    const StarkResult s = stark_result(2);
    const StarkResult back = stark_from_json(stark_to_json(s));
    CHECK(back.dipole_coefficient == s.dipole_coefficient);
    CHECK(back.c1 == s.c1);
  }

  TEST_CASE("stark") {
    const Run r = run_cli({"stark", "--n", "1", "--format", "json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("e2_coefficient") == "-9/4");
    CHECK(j.at("polarizability") == "9/2");
    const Run m = run_cli({"stark", "--n", "3", "--m", "0"});
    CHECK(m.out.find("reference(n, m=0)") != std::string::npos);
  }

  TEST_CASE("verify") {
    const Run r = run_cli({"verify", "all", "--n-max", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all pass") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    const Run f = run_cli({"verify", "fock", "--n", "2", "--level", "12", "--format", "csv"});
    CHECK(f.code == 0);
    CHECK(f.out.rfind("identity,n/k,level/terms,lhs,rhs,rel_error\n", 0) == 0);
  }

  TEST_CASE("determinism and threads") {
    const std::vector<std::string> a{"verify", "fock", "--n-max", "3", "--format", "csv"};
    std::vector<std::string> b = a;
    b.insert(b.end(), {"--threads", "3"});
    CHECK(run_cli(a).out == run_cli(a).out);
    CHECK(run_cli(a).out == run_cli(b).out);
  }

  TEST_CASE("resolvent") {
    const Run r = run_cli({"resolvent", "--lambda", "0.5", "--cos", "0.3", "--terms", "400", "--format", "json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("route_difference").get<double>() < 1e-6);
    CHECK(j.at("singular_part") == "delta(x-y)");
    CHECK(run_cli({"resolvent", "--lambda", "1"}).code == 2);
  }

  TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    const Run u = run_cli({"state", "--n", "2", "--bogus"});
    CHECK(u.code == 2);
    CHECK(u.err.find("--convention") != std::string::npos);
    CHECK(run_cli({"state", "--n", "2", "--l", "2"}).code == 2);
    CHECK(run_cli({"state", "--n", "1", "--format", "xml"}).code == 2);
    CHECK(run_cli({"verify", "nothing"}).code == 2);
    CHECK(run_cli({"tensor", "--rank", "2", "--dim", "5"}).code == 2);
  }

  TEST_CASE("other verbs") {
    CHECK(run_cli({"decompose", "--rank", "4", "--dim", "3", "--format", "csv"}).code == 0);
    const Run d = run_cli({"decompose", "--rank", "6", "--dim", "3", "--format", "json"});
    CHECK(Json::parse(d.out).at("terms").back().at("coefficient") == "99/1");
    CHECK(run_cli({"ladder", "--rank", "3", "--dim", "4"}).code == 0);
    CHECK(run_cli({"tensor", "--rank", "2", "--format", "text"}).out.find("harmonic") != std::string::npos);
  }
}

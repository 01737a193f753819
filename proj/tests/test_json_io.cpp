#include <doctest.h>

#include <random>

#include "benson/instances.hpp"
#include "benson/json_io.hpp"
#include "benson/validation.hpp"

using namespace benson;

TEST_CASE("round12 prints stable 12-digit numerics") {
  CHECK(round12(0.0) == 0.0);
  CHECK(round12(-0.0) == 0.0);
  CHECK(round12(1.0 / 3.0) == doctest::Approx(0.333333333333).epsilon(1e-15));
  Json j = Json::array({round12(1.0 / 3.0)});
  CHECK(j.dump() == "[0.333333333333]");
}

TEST_CASE("property: polyhedra survive a JSON round trip as sets") {
  std::mt19937_64 rng(31);
  auto u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int trial = 0; trial < 6; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    std::vector<Halfspace> hs;
    for (int i = 0; i < d; ++i) {
      hs.emplace_back(unit_vector(d, i), -1.5);
      hs.emplace_back(scaled(unit_vector(d, i), -1.0), -1.5);
    }
    for (int k = 0; k < 3; ++k) {
      Vec a(d);
      for (double& c : a) c = 2.0 * u01() - 1.0;
      if (norm2(a) < 1e-3) a[0] += 1.0;
      hs.emplace_back(std::move(a), -(0.3 + 0.5 * u01()));
    }
    Polyhedron p = Polyhedron::from_hrep(d, hs).with_vrep();
    Polyhedron back = polyhedron_from_json(polyhedron_to_json(p));
    REQUIRE(back.has_vrep());
    CHECK(vertex_set_match(back.vrep().vertices, p.vrep().vertices, 1e-9));
  }
}

TEST_CASE("polyhedron parsing rejects malformed objects") {
  CHECK_THROWS_AS(polyhedron_from_json(Json::object()), ParseError);
  Json no_rep;
  no_rep["dim"] = 2;
  CHECK_THROWS_AS(polyhedron_from_json(no_rep), ParseError);

  Json bad;
  bad["dim"] = 2;
  bad["halfspaces"] = Json::array({Json{{"a", {1.0, 0.0}}, {"b", 0.0}}});
  bad["vertices"] = Json::array({{-1.0, 0.0}});
  bad["rays"] = Json::array();
  CHECK_THROWS_AS(polyhedron_from_json(bad), ParseError);
}

TEST_CASE("instances survive a JSON round trip") {
  for (const GeneratedInstance& gen :
       {gen_primal_tight_cpp(2), gen_dual_tight_cpp(2), gen_primal_tight_mocp(2),
        gen_dual_tight_mocp(2, 1e-3)}) {
    Json j = instance_to_json(gen.instance);
    ProblemInstance back = instance_from_json(j);
    CHECK(instance_to_json(back).dump() == j.dump());
    CHECK(back.solution_hints.size() == gen.instance.solution_hints.size());
  }

  ProblemInstance rnd = gen_random_polytope_cpp(2, 4, 6, 55);
  Json j = instance_to_json(rnd);
  CHECK(instance_to_json(instance_from_json(j)).dump() == j.dump());
}

TEST_CASE("instance parsing errors") {
  CHECK_THROWS_AS(instance_from_json(Json::object()), ParseError);
  Json j = instance_to_json(gen_dual_tight_cpp(2).instance);
  j["mode"] = "banana";
  CHECK_THROWS_AS(instance_from_json(j), ParseError);
  Json k = instance_to_json(gen_dual_tight_cpp(2).instance);
  k["box"]["hi"] = Json::array({0.1});
  CHECK_THROWS_AS(instance_from_json(k), ParseError);
}

TEST_CASE("generated instances embed expectations") {
  GeneratedInstance gen = gen_dual_tight_cpp(2);
  Json j = generated_to_json(gen);
  REQUIRE(j.contains("expectations"));
  const Json& e = j["expectations"];
  CHECK(e.at("name") == "dual-cpp");
  CHECK(e.contains("expected_y_vertices"));
  CHECK(e.contains("reference_p_hrep"));
  CHECK(e.contains("reference_d_hrep"));
  CHECK(e.contains("wbar"));
  // the embedded instance still parses on its own
  ProblemInstance back = instance_from_json(j);
  CHECK(back.n == 2);
}

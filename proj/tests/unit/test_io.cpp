#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "generators.hpp"
#include "whframes/errors.hpp"
#include "whframes/io.hpp"

using namespace whframes;
using io::json;

TEST_SUITE("io") {

TEST_CASE("algebraic numbers") {
  const auto w = algebra::cyclotomic_generator(12);
  const auto j = io::to_json(w * algebra::Rational(-3, 4));
  CHECK(j["tower"] == "cyclotomic:12");
  CHECK(j["coords"] == json::array({"0", "-3/4", "0", "0"}));
  CHECK(io::algebraic_from_json(j) == w * algebra::Rational(-3, 4));
  CHECK_THROWS_AS(io::algebraic_from_json(json{{"tower", "cyclotomic:12"}}), std::invalid_argument);
  CHECK_THROWS_AS(io::algebraic_from_json(json{{"tower", "cyclotomic:12"}, {"coords", {"1"}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::algebraic_from_json(json{{"tower", "cyclotomic:12"}, {"coords", {1, 0, 0, 0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::algebraic_from_json(json{{"tower", "nowhere"}, {"coords", {"1"}}}), std::invalid_argument);
}

TEST_CASE("Heisenberg elements") {
  const auto g = group::make_heisenberg(6, 4, 1, 9);
  const auto j = io::to_json(g);
  CHECK(j == json{{"d", 6}, {"a", 4}, {"b", 1}, {"c", 9}});
  CHECK(io::heisenberg_from_json(j) == g);
  CHECK(io::heisenberg_from_json(json{{"d", 6}, {"a", -1}, {"b", 7}, {"c", 0}}) == group::make_heisenberg(6, 5, 1));
}

TEST_CASE("matrices") {
  const auto j = io::to_json(group::shift_matrix(2));
  CHECK(j["d"] == 2);
  CHECK(j["scalar"] == "cyclotomic:8");
  CHECK(j["entries"].size() == 2);
  const auto n = io::to_json(Eigen::MatrixXcd(group::dft_matrix_numeric(3)));
  CHECK(n["scalar"] == "complex64");
  CHECK(n["entries"][0][0][0].get<double>() == doctest::Approx(1 / std::sqrt(3.0)));
}

TEST_CASE("fiducial round trips") {
  const auto exact = sic::grassl_fiducial();
  const auto back = io::fiducial_from_json(io::to_json(exact));
  REQUIRE(back.is_exact());
  CHECK(back.exact() == exact.exact());
  CHECK(back.normalized);

  testgen::Gen g(1);
  const auto f = sic::make_fiducial(g.unit_vector(4));
  const auto fb = io::fiducial_from_json(io::to_json(f));
  CHECK_FALSE(fb.is_exact());
  CHECK((fb.numeric() - f.numeric()).norm() < 1e-15);
  CHECK(fb.normalized);

  const auto wrapped = io::fiducial_from_json(json{{"vector", io::to_json(f)}});
  CHECK((wrapped.numeric() - f.numeric()).norm() < 1e-15);

  const auto reals = io::fiducial_from_json(json::array({0.6, 0.8}));
  CHECK(reals.normalized);
}

TEST_CASE("malformed fiducials") {
  CHECK_THROWS_AS(io::fiducial_from_json(json::array({1.0})), std::invalid_argument);
  CHECK_THROWS_AS(io::fiducial_from_json(json{{"x", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(io::fiducial_from_json(json::array({json::array({1, 2, 3}), json::array({0, 0})})),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::load_fiducial("/nonexistent/fiducial.json"), std::invalid_argument);

  const auto path = std::filesystem::temp_directory_path() / "whframes_io_test.json";
  {
    std::ofstream out(path);
    out << "[1, 2";
  }
  CHECK_THROWS_AS(io::load_fiducial(path.string()), std::invalid_argument);
  {
    std::ofstream out(path);
    out << "[[0.6, 0], [0, 0.8]]";
  }
  const auto ok = io::load_fiducial(path.string());
  CHECK(ok.d == 2);
  CHECK(ok.normalized);
  std::filesystem::remove(path);
}

TEST_CASE("reports") {
  const auto r = sic::verify_sic(sic::heisenberg_orbit(sic::grassl_fiducial_numeric()));
  const auto j = io::to_json(r);
  CHECK(j["mode"] == "float");
  CHECK(j["target"] == "1/7");
  CHECK(j["pairs"] == 630);
  CHECK(j["pass"] == true);

  const auto m = io::to_json(mub::verify_mub(mub::standard_triple(6, 1)));
  CHECK(m["mode"] == "exact");
  CHECK(m["failure_count"] == 0);

  const auto a = mub::analyze_dim6();
  const auto ja = io::to_json(a);
  CHECK(ja["n_unbiased_vectors"] == 48);
  CHECK(ja["degree_histogram"]["12"] == 12);
  CHECK(ja["bases"].size() == 16);
  CHECK(ja["large_neighborhoods"].size() == 12);
  CHECK(ja["pass"] == true);
  const auto csv = io::neighborhoods_csv(a);
  CHECK(csv.rfind("node,neighbors\n1,\"15 16 19 20 26 29 35 39 40 43 44 47\"\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
}

}  // TEST_SUITE

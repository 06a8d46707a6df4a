#include <doctest.h>

#include "test_util.hpp"
#include "xqm/serialize.hpp"

using namespace xqm;

TEST_SUITE("serialize") {

TEST_CASE("ring elements round-trip bit-exactly") {
  auto g = xqm_test::test_rng(111);
  for (int t = 0; t < 200; ++t) {
    const auto q = xqm_test::random_quaternion(g);
    const auto qj = Json::parse(to_json(q).dump());
    const auto q2 = quaternion_from_json(qj);
    CHECK(q.a0 == q2.a0);
    CHECK(q.a1 == q2.a1);
    CHECK(q.a2 == q2.a2);
    CHECK(q.a3 == q2.a3);

    const auto c = xqm_test::random_clifford(g);
    const auto c2 = clifford_from_json(Json::parse(to_json(c).dump()));
    for (int i = 0; i < CliffordElement::kBlades; ++i) {
      CHECK(c[i].real() == c2[i].real());
      CHECK(c[i].imag() == c2[i].imag());
    }
  }
}

TEST_CASE("vectors and operators round-trip") {
  auto g = xqm_test::test_rng(112);
  const auto v = xqm_test::random_vector<CliffordElement>(3, g);
  const auto v2 = vector_from_json<CliffordElement>(
      Json::parse(vector_to_json(v).dump()));
  CHECK((v - v2).max_abs() == 0.0);

  const auto a = xqm_test::random_operator<Quaternion>(3, g);
  const auto a2 =
      operator_from_json<Quaternion>(Json::parse(operator_to_json(a).dump()));
  CHECK((a - a2).max_abs() == 0.0);
}

TEST_CASE("schema violations carry locations") {
  CHECK_THROWS_AS(quaternion_from_json(Json::array({1, 2, 3})), InputError);
  CHECK_THROWS_AS(clifford_from_json(Json::array({1})), InputError);

  Json v{{"ring", "quaternion"}, {"rank", 2}};
  CHECK_THROWS_AS(vector_from_json<Quaternion>(v), InputError);
  v["coeffs"] = Json::array({Json::array({1, 2, 3, 4})});
  CHECK_THROWS_AS(vector_from_json<Quaternion>(v), InputError);

  Json w{{"ring", "octonion"}, {"rank", 1}, {"coeffs", Json::array()}};
  CHECK_THROWS_AS(vector_from_json<Quaternion>(w), InputError);

  Json op{{"ring", "clifford"}, {"rank", 2}, {"entries", Json::array()}};
  CHECK_THROWS_AS(operator_from_json<CliffordElement>(op), InputError);

  // ring mismatch between file and expectation
  auto g = xqm_test::test_rng(113);
  const auto q = vector_to_json(xqm_test::random_vector<Quaternion>(2, g));
  CHECK_THROWS_AS(vector_from_json<CliffordElement>(q), RingMismatch);
}

TEST_CASE("detector model round-trip and errors") {
  const ColorModel m{{-1, 0, 2}, {0.2, 0.5, 0.3}};
  const auto m2 = color_model_from_json(Json::parse(color_model_to_json(m).dump()));
  CHECK(m.colors == m2.colors);
  CHECK(m.probs == m2.probs);

  CHECK_THROWS_AS(color_model_from_json(Json{{"colors", 3}}), InputError);
  CHECK_THROWS_AS(color_model_from_json(Json::parse(
                      R"({"colors": [{"n": 0.5, "p": 1.0}]})")),
                  InputError);
}

TEST_CASE("signed model round-trip") {
  const auto m = chsh_witness_model();
  const auto m2 = signed_lhv_from_json(Json::parse(signed_lhv_to_json(m).dump()));
  CHECK(m.weights == m2.weights);
  CHECK(m.outcomes == m2.outcomes);
}

TEST_CASE("spectral outcome serialization") {
  const auto t = xqm_test::make_twisted_pair(1.0, 2.0);
  const auto out = left_eigen_real(t.b);
  const auto j = spectral_outcome_to_json(out);
  CHECK(j.at("physical").get<bool>());
  CHECK(j.at("eigenvalues").size() == 2);
  CHECK(j.at("signs") == Json::array({1, 1}));
  CHECK(j.at("basis").size() == 2);

  RingOperator<CliffordElement> c(1);
  c.at(0, 0) = CliffordElement::gamma(0);
  const auto bad = spectral_outcome_to_json(left_eigen_real(c));
  CHECK_FALSE(bad.at("physical").get<bool>());
  CHECK(!bad.at("diagnostics").get<std::string>().empty());
}

TEST_CASE("atomic file writing") {
  const std::string path = "/tmp/xqm_serialize_test.json";
  write_file_atomic(path, "{\"x\": 1}\n");
  const auto j = load_json_file(path);
  CHECK(j.at("x").get<int>() == 1);
  CHECK_THROWS_AS(load_json_file("/tmp/definitely_missing_xqm.json"),
                  InputError);
  std::remove(path.c_str());
}

}  // TEST_SUITE

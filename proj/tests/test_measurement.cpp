#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "xqm/measurement.hpp"
#include "xqm/serialize.hpp"
#include "xqm/twoparty.hpp"

using namespace xqm;
using xqm_test::Cplx;
using xqm_test::make_twisted_pair;
using xqm_test::Mat;

namespace {

// Complex 2x2 Hermitian matrix embedded into quaternion entries (span of
// 1 and i), so that two-party tensor operators commute entrywise.
RingOperator<Quaternion> embed_complex_2x2(const Mat<2>& m) {
  RingOperator<Quaternion> a(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      a.at(i, j) = Quaternion(m[i * 2 + j].real(), m[i * 2 + j].imag(), 0, 0);
  return a;
}

Mat<2> pauli_direction(double theta) {
  // cos t sz + sin t sx
  return {std::cos(theta), std::sin(theta), std::sin(theta),
          -std::cos(theta)};
}

// Born-rule oracle on the plain complex two-qubit system.
struct BornOracle {
  std::array<Cplx, 4> psi;
  Mat<4> proj_a[2];  // outcome 0 -> +1, outcome 1 -> -1
  Mat<4> proj_b[2];

  static Mat<4> kron_left(const Mat<2>& p) {
    Mat<4> r{};
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j) r[(i * 2 + j) * 4 + (k * 2 + j)] = p[i * 2 + k];
    return r;
  }
  static Mat<4> kron_right(const Mat<2>& p) {
    Mat<4> r{};
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i) r[(i * 2 + j) * 4 + (i * 2 + l)] = p[j * 2 + l];
    return r;
  }

  double joint(int i, int j) const {
    const auto v = xqm_test::mat_vec<4>(
        proj_a[i], xqm_test::mat_vec<4>(proj_b[j], psi));
    return xqm_test::vec_dot<4>(psi, v).real();
  }
};

Mat<2> half_sum(const Mat<2>& m, int sign) {
  Mat<2> r;
  const Mat<2> id = {1.0, 0.0, 0.0, 1.0};
  for (int i = 0; i < 4; ++i) r[i] = 0.5 * (id[i] + double(sign) * m[i]);
  return r;
}

std::vector<Projection<Quaternion>> quaternion_party_family(
    const Mat<2>& obs, bool first_party) {
  std::vector<Projection<Quaternion>> fam;
  for (int sign : {+1, -1}) {
    Projection<Quaternion> p;
    p.eigenvalue = sign;
    p.signs_used = {1};
    const auto local = embed_complex_2x2(half_sum(obs, sign));
    p.op = first_party ? left_factor_operator(local, 2)
                       : right_factor_operator(2, local);
    fam.push_back(std::move(p));
  }
  return fam;
}

}  // namespace

TEST_SUITE("measurement") {

TEST_CASE("raw weights reduce to Born weights in the definite case") {
  const auto a = random_hermitian<Quaternion>(4, 71);
  const auto spec = left_eigen_real(a).value();
  auto g = xqm_test::test_rng(72);
  auto phi = xqm_test::random_vector<Quaternion>(4, g);
  phi = phi * (1.0 / std::sqrt(scalar_part(inner(phi, phi))));

  const auto ws = raw_weights(phi, spec);
  double sum = 0.0;
  for (const auto& w : ws) {
    CHECK(w.scalar >= -1e-12);
    CHECK(w.scalar <= 1.0 + 1e-12);
    CHECK(w.magnitude == std::abs(w.scalar));
    sum += w.scalar;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

  // renormalization is the identity here
  const auto dist = ext_probabilities(ws);
  for (std::size_t i = 0; i < ws.size(); ++i)
    CHECK(dist.probabilities[i] ==
          doctest::Approx(ws[i].scalar / sum).epsilon(1e-12));
}

TEST_CASE("isotropic component gives zero raw weight") {
  const auto t = make_twisted_pair(1.0, 2.0);
  const auto spec = left_eigen_real(t.b).value();
  // state in the +1 eigenspace with isotropic right factor
  const auto phi =
      t.ket3 * (CliffordElement::gamma(0) + CliffordElement::gamma(1));
  CHECK(phi.max_abs() > 0.0);
  const auto ws = raw_weights(phi, spec);
  for (const auto& w : ws) CHECK(std::abs(w.scalar) < 1e-12);
  CHECK_THROWS_AS(ext_probabilities(ws), DegenerateState);
}

TEST_CASE("negative-norm direction yields a negative raw weight") {
  // hand-built spectral data: basis {e0 g1} with <psi|psi> = -1
  SpectralResult<CliffordElement> spec;
  ModuleVector<CliffordElement> psi(1);
  psi.coeffs[0] = CliffordElement::gamma(1);
  spec.basis = {psi};
  spec.eigenvalues = {1.0};
  spec.signs = {-1};
  spec.groups = {{0}};
  spec.group_values = {1.0};

  const auto ws = raw_weights(psi, spec);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].scalar == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ws[0].magnitude == doctest::Approx(1.0).epsilon(1e-12));

  const auto dist = ext_probabilities(ws);
  CHECK(dist.probabilities[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("renormalization arithmetic") {
  const auto d1 = ext_probabilities({0.0, 1.0}, {0.25, 0.75});
  CHECK(d1.probabilities[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(d1.probabilities[1] == doctest::Approx(0.75).epsilon(1e-15));

  const auto d2 = ext_probabilities({0.0, 1.0}, {-0.5, 1.5});
  CHECK(d2.probabilities[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(d2.probabilities[1] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(d2.denominator == doctest::Approx(2.0).epsilon(1e-15));

  CHECK_THROWS_AS(ext_probabilities({0.0, 1.0}, {0.0, 0.0}), DegenerateState);

  // probabilities are nonnegative and sum to one
  auto g = xqm_test::test_rng(73);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> evs, scalars;
    const int k = 2 + int(g() % 4);
    for (int i = 0; i < k; ++i) {
      evs.push_back(i);
      scalars.push_back(xqm_test::rnormal(g) * 2.0);
    }
    const auto d = ext_probabilities(evs, scalars);
    double sum = 0.0;
    for (double p : d.probabilities) {
      CHECK(p >= 0.0);
      sum += p;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("collapse") {
  const auto t = make_twisted_pair(1.0, 2.0);
  const auto spec = left_eigen_real(t.b).value();
  const auto p = projection(spec, 1.0);

  // inside the eigenspace: fixed
  CHECK((collapse(t.ket3, p) - t.ket3).max_abs() < 1e-9);
  // orthogonal: annihilated
  CHECK(collapse(t.ket4, p).max_abs() < 1e-9);
  // idempotent on a general state
  auto g = xqm_test::test_rng(74);
  const auto phi = xqm_test::random_vector<CliffordElement>(2, g);
  const auto once = collapse(phi, p);
  CHECK((collapse(once, p) - once).max_abs() < 1e-9 * (1.0 + once.max_abs()));
}

TEST_CASE("ordered joint equals Born statistics in the definite case") {
  auto g = xqm_test::test_rng(75);
  for (int trial = 0; trial < 5; ++trial) {
    const double ta = 2.0 * xqm_test::rnormal(g);
    const double tb = 2.0 * xqm_test::rnormal(g);

    BornOracle oracle;
    // normalized random complex two-qubit state
    double norm = 0.0;
    for (auto& c : oracle.psi) {
      c = {xqm_test::rnormal(g), xqm_test::rnormal(g)};
      norm += std::norm(c);
    }
    for (auto& c : oracle.psi) c /= std::sqrt(norm);
    for (int s : {0, 1}) {
      oracle.proj_a[s] =
          BornOracle::kron_left(half_sum(pauli_direction(ta), s ? -1 : 1));
      oracle.proj_b[s] =
          BornOracle::kron_right(half_sum(pauli_direction(tb), s ? -1 : 1));
    }

    ModuleVector<Quaternion> psi(4);
    for (int i = 0; i < 4; ++i)
      psi.coeffs[i] =
          Quaternion(oracle.psi[i].real(), oracle.psi[i].imag(), 0, 0);
    const auto fam_a = quaternion_party_family(pauli_direction(ta), true);
    const auto fam_b = quaternion_party_family(pauli_direction(tb), false);

    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        const double born = oracle.joint(i, j);
        CHECK(ordered_joint(psi, fam_a, fam_b, i, j) ==
              doctest::Approx(born).epsilon(1e-10));
        CHECK(ordered_joint(psi, fam_b, fam_a, j, i) ==
              doctest::Approx(born).epsilon(1e-10));
        CHECK(symmetrized_joint(psi, fam_a, fam_b, i, j) ==
              doctest::Approx(born).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("product states factorize and are order independent") {
  auto g = xqm_test::test_rng(76);
  for (int trial = 0; trial < 5; ++trial) {
    // complex local states
    ModuleVector<Quaternion> l(2), r(2);
    for (auto* v : {&l, &r})
      for (auto& c : v->coeffs)
        c = Quaternion(xqm_test::rnormal(g), xqm_test::rnormal(g), 0, 0);
    const auto psi = product_state(l, r);

    const double ta = xqm_test::rnormal(g), tb = xqm_test::rnormal(g);
    const auto fam_a = quaternion_party_family(pauli_direction(ta), true);
    const auto fam_b = quaternion_party_family(pauli_direction(tb), false);

    // solo distributions of the local factors against local families
    std::vector<Projection<Quaternion>> loc_a, loc_b;
    for (int s : {+1, -1}) {
      Projection<Quaternion> pa, pb;
      pa.eigenvalue = s;
      pa.op = embed_complex_2x2(half_sum(pauli_direction(ta), s));
      pb.eigenvalue = s;
      pb.op = embed_complex_2x2(half_sum(pauli_direction(tb), s));
      loc_a.push_back(pa);
      loc_b.push_back(pb);
    }
    const auto da = solo_distribution(l, loc_a);
    const auto db = solo_distribution(r, loc_b);

    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        const double ab = ordered_joint(psi, fam_a, fam_b, i, j);
        const double ba = ordered_joint(psi, fam_b, fam_a, j, i);
        CHECK(std::abs(ab - ba) < 1e-10);
        CHECK(ab == doctest::Approx(da.probabilities[i] * db.probabilities[j])
                        .epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("stored indefinite instance shows order dependence") {
  const char* dir = std::getenv("XQM_TEST_DATA");
  REQUIRE_MESSAGE(dir != nullptr, "XQM_TEST_DATA not set");
  const auto j = load_json_file(std::string(dir) + "/asymmetric_joint.json");
  const auto psi = vector_from_json<CliffordElement>(j.at("state"));
  const auto a = operator_from_json<CliffordElement>(j.at("op_a"));
  const auto b = operator_from_json<CliffordElement>(j.at("op_b"));

  const auto fam_a = projection_family(left_eigen_real(a).value());
  const auto fam_b = projection_family(left_eigen_real(b).value());

  double gap = 0.0;
  for (std::size_t i = 0; i < fam_a.size(); ++i)
    for (std::size_t k = 0; k < fam_b.size(); ++k)
      gap = std::max(gap, std::abs(ordered_joint(psi, fam_a, fam_b, i, k) -
                                   ordered_joint(psi, fam_b, fam_a, k, i)));
  CHECK(gap >= 1e-3);
  CHECK(gap == doctest::Approx(j.at("expected_gap").get<double>())
                   .epsilon(1e-9));

  // collapse order does not matter at the state level
  for (std::size_t i = 0; i < fam_a.size(); ++i) {
    for (std::size_t k = 0; k < fam_b.size(); ++k) {
      const auto pq = collapse(collapse(psi, fam_b[k]), fam_a[i]);
      const auto qp = collapse(collapse(psi, fam_a[i]), fam_b[k]);
      CHECK((pq - qp).max_abs() < 1e-9 * (1.0 + pq.max_abs()));
    }
  }
}

TEST_CASE("first-measured marginal matches the solo distribution") {
  const char* dir = std::getenv("XQM_TEST_DATA");
  REQUIRE_MESSAGE(dir != nullptr, "XQM_TEST_DATA not set");
  const auto j = load_json_file(std::string(dir) + "/asymmetric_joint.json");
  const auto psi = vector_from_json<CliffordElement>(j.at("state"));
  const auto a = operator_from_json<CliffordElement>(j.at("op_a"));
  const auto b = operator_from_json<CliffordElement>(j.at("op_b"));
  const auto fam_a = projection_family(left_eigen_real(a).value());
  const auto fam_b = projection_family(left_eigen_real(b).value());

  const auto rep = first_marginal_invariance(psi, fam_a, fam_b);
  CHECK(rep.first_marginal_gap <= 1e-10);
  CHECK(rep.second_marginal_gap > 1e-4);  // the asymmetry, quantified

  // in the definite case both gaps close
  auto g = xqm_test::test_rng(77);
  ModuleVector<Quaternion> l(2), r(2);
  for (auto* v : {&l, &r})
    for (auto& c : v->coeffs)
      c = Quaternion(xqm_test::rnormal(g), xqm_test::rnormal(g), 0, 0);
  const auto psi_q = product_state(l, r);
  const auto fa = quaternion_party_family(pauli_direction(0.3), true);
  const auto fb = quaternion_party_family(pauli_direction(-0.9), false);
  const auto rep_q = first_marginal_invariance(psi_q, fa, fb);
  CHECK(rep_q.first_marginal_gap <= 1e-10);
  CHECK(rep_q.second_marginal_gap <= 1e-10);
}

TEST_CASE("symmetrized joint is symmetric by construction") {
  const char* dir = std::getenv("XQM_TEST_DATA");
  REQUIRE_MESSAGE(dir != nullptr, "XQM_TEST_DATA not set");
  const auto j = load_json_file(std::string(dir) + "/asymmetric_joint.json");
  const auto psi = vector_from_json<CliffordElement>(j.at("state"));
  const auto a = operator_from_json<CliffordElement>(j.at("op_a"));
  const auto b = operator_from_json<CliffordElement>(j.at("op_b"));
  const auto fam_a = projection_family(left_eigen_real(a).value());
  const auto fam_b = projection_family(left_eigen_real(b).value());

  for (std::size_t i = 0; i < fam_a.size(); ++i) {
    for (std::size_t k = 0; k < fam_b.size(); ++k) {
      const double s1 = symmetrized_joint(psi, fam_a, fam_b, i, k);
      const double s2 = symmetrized_joint(psi, fam_b, fam_a, k, i);
      CHECK(s1 == doctest::Approx(s2).epsilon(1e-13));
      const double avg = 0.5 * ordered_joint(psi, fam_a, fam_b, i, k) +
                         0.5 * ordered_joint(psi, fam_b, fam_a, k, i);
      CHECK(s1 == doctest::Approx(avg).epsilon(1e-13));
    }
  }
}

TEST_CASE("distributions are invariant under generalized unitary frames") {
  // quaternion case
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto a = random_hermitian<Quaternion>(3, 500 + seed);
    auto g = xqm_test::test_rng(600 + seed);
    const auto phi = xqm_test::random_vector<Quaternion>(3, g);
    const auto base = raw_weights(phi, left_eigen_real(a).value());

    const auto u = random_generalized_unitary<Quaternion>(3, 700 + seed);
    const auto a2 = u * a * adjoint(u);
    const auto phi2 = apply(u, phi);
    const auto moved = raw_weights(phi2, left_eigen_real(a2).value());

    REQUIRE(base.size() == moved.size());
    for (const auto& w : base) {
      bool found = false;
      for (const auto& w2 : moved) {
        if (std::abs(w.eigenvalue - w2.eigenvalue) < 1e-7) {
          CHECK(w.scalar == doctest::Approx(w2.scalar).epsilon(1e-9));
          found = true;
        }
      }
      CHECK(found);
    }
  }

  // clifford case, frame built through the representation
  const auto t = make_twisted_pair(1.0, 2.0);
  auto g = xqm_test::test_rng(800);
  ModuleVector<CliffordElement> phi(2);
  for (auto& c : phi.coeffs) c = xqm_test::random_clifford(g);
  const auto base = raw_weights(phi, left_eigen_real(t.b).value());

  const auto u = random_generalized_unitary<CliffordElement>(2, 900);
  const auto b2 = u * t.b * adjoint(u);
  const auto moved = raw_weights(apply(u, phi), left_eigen_real(b2).value());
  REQUIRE(base.size() == moved.size());
  for (const auto& w : base) {
    bool found = false;
    for (const auto& w2 : moved) {
      if (std::abs(w.eigenvalue - w2.eigenvalue) < 1e-7) {
        CHECK(w.scalar == doctest::Approx(w2.scalar).epsilon(1e-9));
        found = true;
      }
    }
    CHECK(found);
  }
}

}  // TEST_SUITE

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "gcore/entangled.hpp"

using namespace gcore;

namespace {
const double r2 = 1.0 / std::sqrt(2.0);
const double r3 = 1.0 / std::sqrt(3.0);
const Complex w{std::cos(2 * std::numbers::pi / 3),
                std::sin(2 * std::numbers::pi / 3)};

bool same_ket(const Vec& a, const Vec& b, double tol = 1e-12) {
  return (a - b).cwiseAbs().maxCoeff() < tol;
}
}  // namespace

TEST_CASE("three-qubit GHZ family matches the explicit kets") {
  // |psi_0+> = (|000> + |111>)/sqrt 2
  Vec e = Vec::Zero(8);
  e(0) = r2;
  e(7) = r2;
  CHECK(same_ket(ghz_basis_state(3, 0, +1).amps, e));

  // |psi_0-> = (|000> - |111>)/sqrt 2
  e(7) = -r2;
  CHECK(same_ket(ghz_basis_state(3, 0, -1).amps, e));

  // |psi_1+> = (|010> + |101>)/sqrt 2
  e = Vec::Zero(8);
  e(2) = r2;
  e(5) = r2;
  CHECK(same_ket(ghz_basis_state(3, 1, +1).amps, e));

  // |psi_2-> = (|100> - |011>)/sqrt 2
  e = Vec::Zero(8);
  e(4) = r2;
  e(3) = -r2;
  CHECK(same_ket(ghz_basis_state(3, 2, -1).amps, e));

  // |psi_3+> = (|110> + |001>)/sqrt 2
  e = Vec::Zero(8);
  e(6) = r2;
  e(1) = r2;
  CHECK(same_ket(ghz_basis_state(3, 3, +1).amps, e));
}

TEST_CASE("two-qutrit generalized Bell states match the explicit kets") {
  // |psi_00> = (|00> + |11> + |22>)/sqrt 3
  Vec e = Vec::Zero(9);
  e(0) = e(4) = e(8) = r3;
  CHECK(same_ket(qudit_bell_state(3, 0, 0).amps, e));

  // |psi_01> = (|01> + |12> + |20>)/sqrt 3
  e = Vec::Zero(9);
  e(1) = e(5) = e(6) = r3;
  CHECK(same_ket(qudit_bell_state(3, 0, 1).amps, e));

  // |psi_10> = (|00> + w|11> + w^2|22>)/sqrt 3
  e = Vec::Zero(9);
  e(0) = r3;
  e(4) = r3 * w;
  e(8) = r3 * w * w;
  CHECK(same_ket(qudit_bell_state(3, 1, 0).amps, e));

  // |psi_21> = (|01> + w^2|12> + w|20>)/sqrt 3
  e = Vec::Zero(9);
  e(1) = r3;
  e(5) = r3 * w * w;
  e(6) = r3 * w;
  CHECK(same_ket(qudit_bell_state(3, 2, 1).amps, e));
}

TEST_CASE("three-qutrit states match the explicit kets") {
  // |psi_0,00> = (|000> + |111> + |222>)/sqrt 3
  Vec e = Vec::Zero(27);
  e(0) = e(13) = e(26) = r3;
  CHECK(same_ket(multi_entangled_state(3, 3, 0, {0, 0}).amps, e));

  // |psi_1,12> = (|012> + w|120> + w^2|201>)/sqrt 3
  e = Vec::Zero(27);
  e(0 * 9 + 1 * 3 + 2) = r3;
  e(1 * 9 + 2 * 3 + 0) = r3 * w;
  e(2 * 9 + 0 * 3 + 1) = r3 * w * w;
  CHECK(same_ket(multi_entangled_state(3, 3, 1, {1, 2}).amps, e));
}

TEST_CASE("families up to dimension 81 are orthonormal") {
  for (auto [n, d] : {std::pair{3, 2}, {2, 3}, {3, 3}, {2, 2}, {4, 2}, {2, 5},
                      {4, 3}, {2, 9}}) {
    Family fam(n, d);
    const auto& basis = family_basis(fam);
    REQUIRE(static_cast<int>(basis.size()) == fam.size());
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j < basis.size(); ++j) {
        double expect = (i == j) ? 1.0 : 0.0;
        CHECK(std::abs(std::abs(basis[i].dot(basis[j])) - expect) < 1e-10);
      }
  }
}

TEST_CASE("basis label digits round trip") {
  Family fam(3, 3);
  for (int idx = 0; idx < fam.size(); ++idx) {
    BasisLabel l(fam, idx);
    CHECK(BasisLabel::from_digits(fam, l.digits()).index == idx);
  }
  CHECK_THROWS_AS(BasisLabel(fam, 27), std::invalid_argument);
  CHECK_THROWS_AS(BasisLabel::from_digits(fam, {0, 1}), std::invalid_argument);
}

TEST_CASE("qutrit transforms map the base state onto every basis state") {
  Family fam(2, 3);
  const auto& basis = family_basis(fam);
  Vec psi00 = qudit_bell_state(3, 0, 0).amps;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Mat op = kron(Mat::Identity(3, 3), qutrit_transform_unitary(i, j).matrix);
      Vec mapped = canonical_phase(op * psi00);
      Vec target = canonical_phase(basis[i * 3 + j]);
      CHECK((mapped - target).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("error operators act transitively for d up to 5") {
  for (int d = 2; d <= 5; ++d) {
    Vec psi00 = qudit_bell_state(d, 0, 0).amps;
    for (int n = 0; n < d; ++n)
      for (int m = 0; m < d; ++m) {
        Mat op = kron(Mat::Identity(d, d), error_operator(d, m, n).matrix);
        Vec mapped = op * psi00;
        Vec target = qudit_bell_state(d, n, m).amps;
        CHECK((mapped - target).cwiseAbs().maxCoeff() < 1e-12);
      }
  }
}

TEST_CASE("error operators compose as the discrete Weyl group") {
  int d = 3;
  Mat u = error_operator(d, 1, 2).matrix * error_operator(d, 2, 1).matrix;
  // product differs from error_operator(d, 0, 0)-shifted element by a phase
  Mat v = error_operator(d, 0, 0).matrix;
  CHECK(std::abs(std::abs((u.adjoint() * u).trace()) - d) < 1e-12);
  CHECK(std::abs(std::abs((v.adjoint() * v).trace()) - d) < 1e-12);
}

TEST_CASE("measurement of a basis state is deterministic") {
  Family fam(2, 3);
  for (int idx = 0; idx < fam.size(); ++idx) {
    auto probs = measure_in_family(family_state(BasisLabel(fam, idx)), fam);
    for (int k = 0; k < fam.size(); ++k)
      CHECK(probs[k] == doctest::Approx(k == idx ? 1.0 : 0.0).epsilon(1e-12));
  }
}

TEST_CASE("pauli matrices and gell-mann generators have standard algebra") {
  for (int a = 0; a < 3; ++a) {
    CHECK((pauli(a) - pauli(a).adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(pauli(a).trace()) < 1e-15);
    CHECK((pauli(a) * pauli(a) - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <
          1e-15);
  }
  for (int i = 1; i <= 8; ++i) {
    CHECK((gell_mann(i) - gell_mann(i).adjoint()).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK(std::abs(gell_mann(i).trace()) < 1e-12);
    for (int j = 1; j <= 8; ++j) {
      double expect = (i == j) ? 2.0 : 0.0;
      CHECK(std::abs((gell_mann(i) * gell_mann(j)).trace().real() - expect) <
            1e-12);
    }
  }
}

TEST_CASE("GHZ correlations reproduce the planar-angle closed form") {
  // For (|000> + |111>)/sqrt 2 and directions in the x-y plane at angles
  // t_i, the three-fold correlation is cos(t1 + t2 + t3).
  StateVector ghz = ghz_basis_state(3, 0, +1);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 50; ++trial) {
    double t1 = ang(rng), t2 = ang(rng), t3 = ang(rng);
    auto dir = [](double t) {
      return ObservableDirection({std::cos(t), std::sin(t), 0.0});
    };
    double got = pauli_correlation(ghz, dir(t1), dir(t2), dir(t3));
    CHECK(got == doctest::Approx(std::cos(t1 + t2 + t3)).epsilon(1e-10));
  }
}

TEST_CASE("product states factor the three-fold correlation") {
  // |0>|0>|0>: every single-particle expectation is the z component
  Vec zero(2);
  zero << 1, 0;
  StateVector product{kron(kron(zero, zero), zero)};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> comp(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ObservableDirection> dirs;
    double expect = 1.0;
    for (int p = 0; p < 3; ++p) {
      std::vector<double> c{comp(rng), comp(rng), comp(rng)};
      expect *= c[2];
      dirs.emplace_back(c);
    }
    double got = pauli_correlation(product, dirs[0], dirs[1], dirs[2]);
    CHECK(got == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("six-port matrix is the unbiased cube-root transform") {
  UnitaryOperator t = six_port_matrix();
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      CHECK(std::abs(std::abs(t.matrix(k, l)) - r3) < 1e-12);
      Complex expect = std::pow(w, k * l) * r3;
      CHECK(std::abs(t.matrix(k, l) - expect) < 1e-12);
    }
}

TEST_CASE("family and label validation") {
  CHECK_THROWS_AS(Family(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Family(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Family(7, 3), std::invalid_argument);  // 3^7 > 729
  CHECK_THROWS_AS(multi_entangled_state(3, 2, 3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(multi_entangled_state(3, 2, 0, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ghz_basis_state(3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(ghz_basis_state(3, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(qutrit_transform_unitary(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(error_operator(3, 3, 0), std::invalid_argument);
}

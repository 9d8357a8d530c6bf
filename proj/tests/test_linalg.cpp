#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcore/linalg.hpp"

using namespace gcore;

TEST_CASE("state vector enforces normalization") {
  Vec good(2);
  good << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK_NOTHROW(StateVector{Vec(good)});
  Vec bad(2);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS(StateVector{Vec(bad)}, std::invalid_argument);
  CHECK_THROWS_AS(StateVector{Vec::Zero(3)}, std::invalid_argument);
}

TEST_CASE("density operator enforces hermiticity, trace and positivity") {
  CHECK_NOTHROW(DensityOperator{Mat(Mat::Identity(4, 4) / 4.0)});
  Mat non_hermitian = Mat::Identity(2, 2) / 2.0;
  non_hermitian(0, 1) = Complex(0.3, 0.0);
  CHECK_THROWS_AS(DensityOperator{Mat(non_hermitian)}, std::invalid_argument);
  Mat traceless = Mat::Identity(2, 2);
  CHECK_THROWS_AS(DensityOperator{Mat(traceless)}, std::invalid_argument);
  Mat negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityOperator{Mat(negative)}, std::invalid_argument);
}

TEST_CASE("unitary operator rejects non-unitaries") {
  CHECK_NOTHROW(UnitaryOperator{Mat(Mat::Identity(3, 3))});
  Mat stretch = 2.0 * Mat::Identity(2, 2);
  CHECK_THROWS_AS(UnitaryOperator{Mat(stretch)}, std::invalid_argument);
}

TEST_CASE("kron follows the most-significant-first convention") {
  Mat a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 5, 6, 7;
  Mat k = kron(a, b);
  REQUIRE(k.rows() == 4);
  // block (i,j) of the product is a(i,j) * b
  CHECK(std::abs(k(0, 1) - a(0, 0) * b(0, 1)) < kTolExact);
  CHECK(std::abs(k(2, 3) - a(1, 1) * b(0, 1)) < kTolExact);
  CHECK(std::abs(k(3, 0) - a(1, 0) * b(1, 0)) < kTolExact);

  Vec u(2), v(2);
  u << 1, 0;
  v << 0, 1;
  Vec w = kron(u, v);  // |0>|1> -> index 1
  CHECK(std::abs(w(1) - 1.0) < kTolExact);
  CHECK(w.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("partial trace of a product state recovers the factors") {
  Vec zero(2), plus(2);
  zero << 1, 0;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  StateVector psi{kron(zero, plus)};
  DensityOperator rho = pure_density(psi);

  DensityOperator first = partial_trace(rho, {0}, {2, 2});
  CHECK((first.matrix - zero * zero.adjoint()).cwiseAbs().maxCoeff() <
        kTolTensor);
  DensityOperator second = partial_trace(rho, {1}, {2, 2});
  CHECK((second.matrix - plus * plus.adjoint()).cwiseAbs().maxCoeff() <
        kTolTensor);
}

TEST_CASE("partial trace of an entangled pair is maximally mixed") {
  Vec bell = Vec::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  DensityOperator rho = pure_density(StateVector{std::move(bell)});
  DensityOperator half = partial_trace(rho, {0}, {2, 2});
  CHECK((half.matrix - Mat::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <
        kTolTensor);
}

TEST_CASE("partial trace keeps several subsystems in order") {
  // three qubits in |0>|1>|0>
  Vec zero(2), one(2);
  zero << 1, 0;
  one << 0, 1;
  DensityOperator rho = pure_density(StateVector{kron(kron(zero, one), zero)});
  DensityOperator kept = partial_trace(rho, {0, 1}, {2, 2, 2});
  Mat expect = kron(Mat(zero * zero.adjoint()), Mat(one * one.adjoint()));
  CHECK((kept.matrix - expect).cwiseAbs().maxCoeff() < kTolTensor);
}

TEST_CASE("canonical phase makes the leading amplitude real positive") {
  Vec v(2);
  v << Complex(0, 1.0 / std::sqrt(2.0)), Complex(-1.0 / std::sqrt(2.0), 0);
  Vec c = canonical_phase(v);
  CHECK(c(0).imag() == doctest::Approx(0.0));
  CHECK(c(0).real() > 0.0);
  CHECK(std::abs(std::abs(c(1)) - std::abs(v(1))) < kTolExact);
}

TEST_CASE("fidelity overlap") {
  Vec a(2), b(2);
  a << 1, 0;
  b << 0, 1;
  CHECK(fidelity_overlap(a, a) == doctest::Approx(1.0));
  CHECK(fidelity_overlap(a, b) == doctest::Approx(0.0));
}

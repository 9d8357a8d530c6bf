#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

// Dense complex linear algebra for small Hilbert spaces (dim <= 729).
// Everything here is exact-arithmetic-on-doubles; tolerances follow the
// two-tier convention: 1e-12 for algebraic identities, 1e-10 for
// accumulated tensor arithmetic.

namespace gcore {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kTolExact = 1e-12;
inline constexpr double kTolTensor = 1e-10;
inline constexpr int kDimCap = 729;  // 3^6 hard limit for public operators

// A normalized pure state over a d^N-dimensional space.
struct StateVector {
  Vec amps;

  explicit StateVector(Vec a);
  int dim() const { return static_cast<int>(amps.size()); }
};

// Hermitian, unit-trace, positive-semidefinite matrix.
struct DensityOperator {
  Mat matrix;

  explicit DensityOperator(Mat m);
  int dim() const { return static_cast<int>(matrix.rows()); }
};

struct UnitaryOperator {
  Mat matrix;

  explicit UnitaryOperator(Mat m);
  int dim() const { return static_cast<int>(matrix.rows()); }
};

// Kronecker products, subsystem 1 most significant in basis indexing.
Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

DensityOperator pure_density(const StateVector& psi);

// Trace out every subsystem not listed in `keep` (0-based, ascending
// output order as listed). `dims` are the local dimensions, subsystem 0
// most significant.
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& keep,
                              const std::vector<int>& dims);

// Multiply by the unit phase that makes the first amplitude above
// threshold real positive.
Vec canonical_phase(const Vec& v);

double fidelity_overlap(const Vec& a, const Vec& b);

}  // namespace gcore

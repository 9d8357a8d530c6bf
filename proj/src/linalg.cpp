#include "gcore/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace gcore {

StateVector::StateVector(Vec a) : amps(std::move(a)) {
  if (amps.size() == 0) throw std::invalid_argument("empty state vector");
  double n2 = amps.squaredNorm();
  if (std::abs(n2 - 1.0) > kTolExact)
    throw std::invalid_argument("state vector not normalized");
}

DensityOperator::DensityOperator(Mat m) : matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("density operator not square");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > kTolExact)
    throw std::invalid_argument("density operator not Hermitian");
  if (std::abs(matrix.trace().real() - 1.0) > kTolExact ||
      std::abs(matrix.trace().imag()) > kTolExact)
    throw std::invalid_argument("density operator trace != 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(matrix, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("density operator not positive");
}

UnitaryOperator::UnitaryOperator(Mat m) : matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("unitary not square");
  Mat should_be_id = matrix.adjoint() * matrix;
  should_be_id -= Mat::Identity(matrix.rows(), matrix.cols());
  if (should_be_id.cwiseAbs().maxCoeff() > kTolExact)
    throw std::invalid_argument("matrix not unitary");
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

DensityOperator pure_density(const StateVector& psi) {
  return DensityOperator(psi.amps * psi.amps.adjoint());
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& keep,
                              const std::vector<int>& dims) {
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("bad subsystem dimension");
    total *= d;
  }
  if (total != rho.dim()) throw std::invalid_argument("dims do not factor rho");
  for (size_t i = 1; i < keep.size(); ++i)
    if (keep[i] <= keep[i - 1]) throw std::invalid_argument("keep not ascending");
  for (int k : keep)
    if (k < 0 || k >= static_cast<int>(dims.size()))
      throw std::invalid_argument("keep index out of range");

  int n = static_cast<int>(dims.size());
  // strides[s] = product of dims of subsystems to the right of s
  std::vector<Eigen::Index> strides(n, 1);
  for (int s = n - 2; s >= 0; --s) strides[s] = strides[s + 1] * dims[s + 1];

  std::vector<int> traced;
  for (int s = 0; s < n; ++s)
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);

  Eigen::Index keep_dim = 1, traced_dim = 1;
  for (int k : keep) keep_dim *= dims[k];
  for (int t : traced) traced_dim *= dims[t];

  auto compose = [&](Eigen::Index keep_idx, Eigen::Index traced_idx) {
    Eigen::Index full = 0;
    for (int i = static_cast<int>(keep.size()) - 1; i >= 0; --i) {
      full += (keep_idx % dims[keep[i]]) * strides[keep[i]];
      keep_idx /= dims[keep[i]];
    }
    for (int i = static_cast<int>(traced.size()) - 1; i >= 0; --i) {
      full += (traced_idx % dims[traced[i]]) * strides[traced[i]];
      traced_idx /= dims[traced[i]];
    }
    return full;
  };

  Mat out = Mat::Zero(keep_dim, keep_dim);
  for (Eigen::Index i = 0; i < keep_dim; ++i)
    for (Eigen::Index j = 0; j < keep_dim; ++j)
      for (Eigen::Index t = 0; t < traced_dim; ++t)
        out(i, j) += rho.matrix(compose(i, t), compose(j, t));
  // symmetrize away rounding in the Hermitian check
  out = (out + Mat(out.adjoint())) / 2.0;
  return DensityOperator(std::move(out));
}

Vec canonical_phase(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-9) {
      Complex phase = v(i) / std::abs(v(i));
      return v / phase;
    }
  }
  return v;
}

double fidelity_overlap(const Vec& a, const Vec& b) {
  return std::norm(a.dot(b));
}

}  // namespace gcore

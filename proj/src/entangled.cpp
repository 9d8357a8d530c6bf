#include "gcore/entangled.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

namespace gcore {

namespace {

Complex root_of_unity(int d, long long k) {
  double theta = 2.0 * std::numbers::pi * static_cast<double>(k % d) / d;
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace

std::vector<int> BasisLabel::digits() const {
  std::vector<int> out(family.particles);
  int v = index;
  for (int i = family.particles - 1; i >= 0; --i) {
    out[i] = v % family.dim;
    v /= family.dim;
  }
  return out;
}

BasisLabel BasisLabel::from_digits(Family f, const std::vector<int>& digits) {
  if (static_cast<int>(digits.size()) != f.particles)
    throw std::invalid_argument("wrong digit count for family");
  int idx = 0;
  for (int d : digits) {
    if (d < 0 || d >= f.dim) throw std::invalid_argument("digit out of range");
    idx = idx * f.dim + d;
  }
  return BasisLabel(f, idx);
}

StateVector ghz_basis_state(int particles, int j, int sign) {
  if (particles < 2) throw std::invalid_argument("ghz_basis_state needs N >= 2");
  int half = 1 << (particles - 1);
  if (j < 0 || j >= half) throw std::invalid_argument("ghz index j out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  Vec amps = Vec::Zero(2 * half);
  double r = 1.0 / std::sqrt(2.0);
  amps(2 * j) = r;                          // |j>|0>
  amps(2 * (half - 1 - j) + 1) = sign * r;  // |2^{N-1}-j-1>|1>
  return StateVector(std::move(amps));
}

StateVector qudit_bell_state(int d, int n, int m) {
  return multi_entangled_state(d, 2, n, {m});
}

StateVector multi_entangled_state(int d, int particles, int phase,
                                  const std::vector<int>& shifts) {
  Family fam(particles, d);
  if (phase < 0 || phase >= d) throw std::invalid_argument("phase out of range");
  if (static_cast<int>(shifts.size()) != particles - 1)
    throw std::invalid_argument("need N-1 shift digits");
  for (int s : shifts)
    if (s < 0 || s >= d) throw std::invalid_argument("shift out of range");

  Vec amps = Vec::Zero(fam.size());
  double r = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    int idx = j;
    for (int s : shifts) idx = idx * d + (j + s) % d;
    amps(idx) = r * root_of_unity(d, static_cast<long long>(j) * phase);
  }
  return StateVector(std::move(amps));
}

StateVector family_state(const BasisLabel& label) {
  const Family& f = label.family;
  if (f.dim == 2) {
    // paper naming for the GHZ family: index = j || sign bit
    return ghz_basis_state(f.particles, label.index >> 1,
                           (label.index & 1) ? -1 : 1);
  }
  std::vector<int> dig = label.digits();
  return multi_entangled_state(f.dim, f.particles, dig[0],
                               {dig.begin() + 1, dig.end()});
}

const std::vector<Vec>& family_basis(const Family& family) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Vec>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(family.particles, family.dim);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<Vec> basis;
    basis.reserve(family.size());
    for (int idx = 0; idx < family.size(); ++idx)
      basis.push_back(family_state(BasisLabel(family, idx)).amps);
    it = cache.emplace(key, std::move(basis)).first;
  }
  return it->second;
}

UnitaryOperator error_operator(int d, int m, int n) {
  if (d < 2) throw std::invalid_argument("error_operator needs d >= 2");
  if (m < 0 || m >= d || n < 0 || n >= d)
    throw std::invalid_argument("error_operator index out of range");
  Mat u = Mat::Zero(d, d);
  for (int k = 0; k < d; ++k)
    u((k + m) % d, k) = root_of_unity(d, static_cast<long long>(k) * n);
  return UnitaryOperator(std::move(u));
}

UnitaryOperator qutrit_transform_unitary(int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2)
    throw std::invalid_argument("qutrit transform index out of range");
  const Complex w = root_of_unity(3, 1);
  const Complex w2 = root_of_unity(3, 2);
  // verbatim table; U_ij coincides with error_operator(3, j, i)
  Mat u = Mat::Zero(3, 3);
  switch (i * 10 + j) {
    case 0:  u << 1, 0, 0, 0, 1, 0, 0, 0, 1; break;
    case 10: u << 1, 0, 0, 0, w, 0, 0, 0, w2; break;
    case 20: u << 1, 0, 0, 0, w2, 0, 0, 0, w; break;
    case 1:  u << 0, 0, 1, 1, 0, 0, 0, 1, 0; break;
    case 11: u << 0, 0, w2, 1, 0, 0, 0, w, 0; break;
    case 21: u << 0, 0, w, 1, 0, 0, 0, w2, 0; break;
    case 2:  u << 0, 1, 0, 0, 0, 1, 1, 0, 0; break;
    case 12: u << 0, w, 0, 0, 0, w2, 1, 0, 0; break;
    case 22: u << 0, w2, 0, 0, 0, w, 1, 0, 0; break;
  }
  return UnitaryOperator(std::move(u));
}

std::vector<double> measure_in_family(const StateVector& state,
                                      const Family& family) {
  if (state.dim() != family.size())
    throw std::invalid_argument("state dimension does not match family");
  const auto& basis = family_basis(family);
  std::vector<double> probs(basis.size());
  for (size_t i = 0; i < basis.size(); ++i)
    probs[i] = std::norm(basis[i].dot(state.amps));
  return probs;
}

std::vector<double> measure_in_family(const DensityOperator& rho,
                                      const Family& family) {
  if (rho.dim() != family.size())
    throw std::invalid_argument("density dimension does not match family");
  const auto& basis = family_basis(family);
  std::vector<double> probs(basis.size());
  for (size_t i = 0; i < basis.size(); ++i)
    probs[i] = (basis[i].adjoint() * rho.matrix * basis[i])(0, 0).real();
  return probs;
}

ObservableDirection::ObservableDirection(std::vector<double> c)
    : components(std::move(c)) {
  if (components.size() != 3 && components.size() != 8)
    throw std::invalid_argument("direction needs 3 (qubit) or 8 (qutrit) components");
}

const Mat& pauli(int axis) {
  static const std::array<Mat, 3> sigma = [] {
    std::array<Mat, 3> s{Mat(2, 2), Mat(2, 2), Mat(2, 2)};
    s[0] << 0, 1, 1, 0;
    s[1] << 0, Complex(0, -1), Complex(0, 1), 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  if (axis < 0 || axis > 2) throw std::invalid_argument("pauli axis 0..2");
  return sigma[axis];
}

const Mat& gell_mann(int index) {
  static const std::array<Mat, 8> lambda = [] {
    std::array<Mat, 8> l;
    for (auto& m : l) m = Mat::Zero(3, 3);
    l[0](0, 1) = l[0](1, 0) = 1;
    l[1](0, 1) = Complex(0, -1); l[1](1, 0) = Complex(0, 1);
    l[2](0, 0) = 1; l[2](1, 1) = -1;
    l[3](0, 2) = l[3](2, 0) = 1;
    l[4](0, 2) = Complex(0, -1); l[4](2, 0) = Complex(0, 1);
    l[5](1, 2) = l[5](2, 1) = 1;
    l[6](1, 2) = Complex(0, -1); l[6](2, 1) = Complex(0, 1);
    double r3 = 1.0 / std::sqrt(3.0);
    l[7](0, 0) = r3; l[7](1, 1) = r3; l[7](2, 2) = -2 * r3;
    return l;
  }();
  if (index < 1 || index > 8) throw std::invalid_argument("gell_mann index 1..8");
  return lambda[index - 1];
}

namespace {

Mat pauli_dot(const ObservableDirection& d) {
  if (!d.is_qubit()) throw std::invalid_argument("expected qubit direction");
  Mat m = Mat::Zero(2, 2);
  for (int i = 0; i < 3; ++i) m += d.components[i] * pauli(i);
  return m;
}

Mat gellmann_dot(const ObservableDirection& d) {
  if (d.is_qubit()) throw std::invalid_argument("expected qutrit direction");
  Mat m = Mat::Zero(3, 3);
  for (int i = 0; i < 8; ++i) m += d.components[i] * gell_mann(i + 1);
  return m;
}

double real_expectation(const Mat& op, const Vec& psi) {
  Complex e = (psi.adjoint() * op * psi)(0, 0);
  if (std::abs(e.imag()) > kTolTensor)
    throw std::runtime_error("expectation of Hermitian observable not real");
  return e.real();
}

double real_expectation(const Mat& op, const Mat& rho) {
  Complex e = (op * rho).trace();
  if (std::abs(e.imag()) > kTolTensor)
    throw std::runtime_error("expectation of Hermitian observable not real");
  return e.real();
}

}  // namespace

double pauli_correlation(const StateVector& state, const ObservableDirection& a,
                         const ObservableDirection& b,
                         const ObservableDirection& c) {
  if (state.dim() != 8)
    throw std::invalid_argument("pauli_correlation needs a 3-qubit state");
  return real_expectation(kron(kron(pauli_dot(a), pauli_dot(b)), pauli_dot(c)),
                          state.amps);
}

double pauli_correlation(const DensityOperator& rho,
                         const ObservableDirection& a,
                         const ObservableDirection& b,
                         const ObservableDirection& c) {
  if (rho.dim() != 8)
    throw std::invalid_argument("pauli_correlation needs a 3-qubit density");
  return real_expectation(kron(kron(pauli_dot(a), pauli_dot(b)), pauli_dot(c)),
                          rho.matrix);
}

double gellmann_correlation(const StateVector& state,
                            const ObservableDirection& m,
                            const ObservableDirection& n) {
  if (state.dim() != 9)
    throw std::invalid_argument("gellmann_correlation needs a 2-qutrit state");
  return real_expectation(kron(gellmann_dot(m), gellmann_dot(n)), state.amps);
}

double gellmann_correlation(const DensityOperator& rho,
                            const ObservableDirection& m,
                            const ObservableDirection& n) {
  if (rho.dim() != 9)
    throw std::invalid_argument("gellmann_correlation needs a 2-qutrit density");
  return real_expectation(kron(gellmann_dot(m), gellmann_dot(n)), rho.matrix);
}

UnitaryOperator six_port_matrix() {
  Mat t(3, 3);
  double r = 1.0 / std::sqrt(3.0);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      t(k, l) = r * root_of_unity(3, static_cast<long long>(k) * l);
  return UnitaryOperator(std::move(t));
}

}  // namespace gcore

#pragma once

#include <array>
#include <map>
#include <vector>

#include "gcore/linalg.hpp"

// Maximally entangled basis families for (N, d) systems, the unitary
// families relating them, and correlation-operator expectations.

namespace gcore {

// One (N particles, d levels) family of d^N entangled basis states.
struct Family {
  int particles = 0;
  int dim = 0;

  Family(int n, int d) : particles(n), dim(d) {
    if (n < 2 || d < 2) throw std::invalid_argument("family needs N>=2, d>=2");
    if (size_checked() > kDimCap)
      throw std::invalid_argument("family dimension exceeds cap 729");
  }
  // d^N, checked against the cap in the constructor
  int size() const {
    int s = 1;
    for (int i = 0; i < particles; ++i) s *= dim;
    return s;
  }
  bool operator==(const Family& o) const {
    return particles == o.particles && dim == o.dim;
  }

 private:
  long long size_checked() const {
    long long s = 1;
    for (int i = 0; i < particles; ++i) s *= dim;
    return s;
  }
};

// Identifies one basis state of a family; the unit of key material.
// Encoding is a bijection onto {0..d^N-1}: phase index most significant,
// then the N-1 shift digits.  For qubits the index equals the paper's
// binary naming j||sign, sign bit 0 for +.
struct BasisLabel {
  Family family;
  int index = 0;

  BasisLabel(Family f, int idx) : family(f), index(idx) {
    if (idx < 0 || idx >= f.size())
      throw std::invalid_argument("basis label index out of range");
  }
  // base-d digits, most significant first
  std::vector<int> digits() const;
  static BasisLabel from_digits(Family f, const std::vector<int>& digits);
};

// (|j>|0> +/- |2^{N-1}-j-1>|1>)/sqrt(2) in computational tensor ordering.
StateVector ghz_basis_state(int particles, int j, int sign);

// sum_j e^{2 pi i j n / d} |j>|j+m mod d> / sqrt(d)
StateVector qudit_bell_state(int d, int n, int m);

// sum_j e^{2 pi i j phase / d} |j>|j+i_1>...|j+i_{N-1}> / sqrt(d)
StateVector multi_entangled_state(int d, int particles, int phase,
                                  const std::vector<int>& shifts);

// Basis state for a label in the phase/shift encoding above.
StateVector family_state(const BasisLabel& label);

// All d^N states of the family, indexed by label.
const std::vector<Vec>& family_basis(const Family& family);

// U_{m,n} = sum_k e^{2 pi i k n / d} |k+m mod d><k|.  Acting on the
// second subsystem it maps |psi_00> to |psi_nm>.
UnitaryOperator error_operator(int d, int m, int n);

// The nine 3x3 qutrit transform matrices, stored verbatim.
UnitaryOperator qutrit_transform_unitary(int i, int j);

// p(label) = |<psi_label|phi>|^2, or <psi_label|rho|psi_label>.
std::vector<double> measure_in_family(const StateVector& state,
                                      const Family& family);
std::vector<double> measure_in_family(const DensityOperator& rho,
                                      const Family& family);

// Measurement directions: 3 real components for qubits (Pauli vector),
// 8 for qutrits (Gell-Mann vector).
struct ObservableDirection {
  std::vector<double> components;

  explicit ObservableDirection(std::vector<double> c);
  bool is_qubit() const { return components.size() == 3; }
};

const Mat& pauli(int axis);      // 0,1,2 -> sigma_x, sigma_y, sigma_z
const Mat& gell_mann(int index); // 1..8, standard SU(3) generators

// <psi|(sigma.a)x(sigma.b)x(sigma.c)|psi> for a 3-qubit state; real.
double pauli_correlation(const StateVector& state, const ObservableDirection& a,
                         const ObservableDirection& b,
                         const ObservableDirection& c);
double pauli_correlation(const DensityOperator& rho,
                         const ObservableDirection& a,
                         const ObservableDirection& b,
                         const ObservableDirection& c);

// <psi|(sum M_i lambda_i)x(sum N_j lambda_j)|psi> for a 2-qutrit state.
double gellmann_correlation(const StateVector& state,
                            const ObservableDirection& m,
                            const ObservableDirection& n);
double gellmann_correlation(const DensityOperator& rho,
                            const ObservableDirection& m,
                            const ObservableDirection& n);

// Unbiased six-port beam splitter, T_kl = alpha^{(k-1)(l-1)}/sqrt(3).
UnitaryOperator six_port_matrix();

}  // namespace gcore

// matrix.hpp — dense complex linear algebra at dimensions 2 and 4.
//
// Everything here is fixed-size, value-semantic and exception-checked.
// The Kronecker index convention is row-major with the A factor major:
// a two-qubit basis ket |a b> lives at index 2*a + b.

#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <vector>

namespace trinelab {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;      // entrywise |M - M^dag| gate
inline constexpr double kJacobiOffDiagTol = 1e-13;  // off-diagonal Frobenius target

/// Dense complex square matrix of dimension 2 or 4 (row-major storage).
class CMat {
 public:
  explicit CMat(int dim);
  CMat(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMat identity(int dim);
  static CMat zero(int dim) { return CMat(dim); }

  int dim() const { return dim_; }

  Complex& operator()(int r, int c) { return e_[r * dim_ + c]; }
  const Complex& operator()(int r, int c) const { return e_[r * dim_ + c]; }

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(Complex z);

  CMat adjoint() const;
  CMat transpose() const;
  CMat conj() const;
  Complex trace() const;

  /// Largest entrywise |value| (useful for residual checks).
  double max_abs() const;

 private:
  int dim_;
  std::array<Complex, 16> e_{};
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator-(const CMat& a);
CMat operator*(const CMat& a, const CMat& b);
CMat operator*(Complex z, CMat a);
CMat operator*(CMat a, Complex z);
CMat operator*(double z, CMat a);

/// Complex state vector of dimension 2 or 4.
class Ket {
 public:
  explicit Ket(int dim);
  Ket(std::initializer_list<Complex> amps);

  static Ket basis(int dim, int k);

  int dim() const { return dim_; }
  Complex& operator[](int k) { return a_[k]; }
  const Complex& operator[](int k) const { return a_[k]; }

  double norm() const;
  Ket normalized() const;
  Ket conj() const;

  Ket& operator+=(const Ket& o);
  Ket& operator-=(const Ket& o);
  Ket& operator*=(Complex z);

 private:
  int dim_;
  std::array<Complex, 4> a_{};
};

Ket operator+(Ket a, const Ket& b);
Ket operator-(Ket a, const Ket& b);
Ket operator*(Complex z, Ket a);
Ket operator*(double z, Ket a);
Ket operator*(const CMat& m, const Ket& v);

/// <a|b> with conjugation on the first argument.
Complex inner(const Ket& a, const Ket& b);
/// |a><b|
CMat outer(const Ket& a, const Ket& b);
/// |v><v|
CMat projector(const Ket& v);

/// Ascending eigenvalues with matching orthonormal eigenvectors.
struct EigenPair {
  std::vector<double> values;
  std::vector<Ket> vectors;
};

double hermiticity_residual(const CMat& m);
bool is_hermitian(const CMat& m, double tol = kHermitianTol);

/// Kronecker product of two dim-2 operators (A major, B minor).
CMat tensor(const CMat& a, const CMat& b);
Ket tensor(const Ket& a, const Ket& b);

/**
 * Hermitian eigendecomposition. dim 2 uses the closed form
 * lambda_pm = (tr +- sqrt(tr^2 - 4 det))/2; dim 4 uses cyclic complex Jacobi
 * rotations iterated until the off-diagonal Frobenius norm is <= 1e-13.
 * Eigenvalues ascend; exact ties are ordered by the complex argument of the
 * first differing eigenvector component. Eigenvector phases are fixed so the
 * first non-negligible component is real positive.
 */
EigenPair eig_hermitian(const CMat& m);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const CMat& m);

Complex det(const CMat& m);

/// Adjugate of a dim-4 matrix: m * adjugate(m) = det(m) * I (also for singular m).
CMat adjugate(const CMat& m);

/// The 2x2 block <i|_A E |j>_A of a dim-4 operator, acting on the B factor.
CMat partial_contract_A(const CMat& e, int i, int j);

// Spectral utilities built on eig_hermitian. Eigenvalues below `support_tol`
// are treated as zero (the tiny negative dust of PSD inputs is clipped).
CMat psd_sqrt(const CMat& m, double support_tol = 1e-12);
CMat psd_inv_sqrt_on_support(const CMat& m, double support_tol = 1e-12);
CMat psd_inverse(const CMat& m, double support_tol = 1e-12);
CMat support_projector(const CMat& m, double support_tol = 1e-12);

}  // namespace trinelab

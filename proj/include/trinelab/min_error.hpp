// min_error.hpp — minimum-error discrimination primitives: POVM error,
// the binary Helstrom bound, the closed-form three-qubit-state lemma, the
// pretty good measurement, the Holevo optimality verifier, optimal-basis
// extraction, and the POVM trace-norm metric.

#pragma once

#include <vector>

#include "trinelab/ensembles.hpp"
#include "trinelab/matrix.hpp"

namespace trinelab {

/// Ordered POVM elements summing to `closure` (the identity or a subspace
/// projector). Element k is the detector associated with ensemble state k.
struct Povm {
  std::vector<CMat> elements;
  CMat closure = CMat::identity(4);

  int dim() const;
  int size() const { return static_cast<int>(elements.size()); }
};

/// Residuals against the POVM invariants. `ok()` applies the spec gates:
/// Hermitian within 1e-12, PSD within -1e-10, closure within 1e-10.
struct PovmCheck {
  double hermiticity_residual = 0.0;
  double min_eigenvalue = 0.0;
  double closure_residual = 0.0;
  bool ok() const {
    return hermiticity_residual <= 1e-12 && min_eigenvalue >= -1e-10 && closure_residual <= 1e-10;
  }
};

PovmCheck validate_povm(const Povm& p);

/// 1 - sum_i p_i <psi_i| Pi_i |psi_i>.
double error_probability(const WeightedEnsemble& e, const Povm& p);

/// 1/2 - 1/2 ||rho - sigma||_1 for weighted states with tr rho + tr sigma = 1.
double helstrom_binary(const CMat& rho, const CMat& sigma);

/**
 * Closed-form minimum error for discriminating p0|psi0> from the pair
 * {p1|psi1>, p2|psi2>} on a qubit. With Delta = p0 P0 - p1 P1 - p2 P2:
 * det(Delta) <= 0 gives the square-root branch, det(Delta) > 0 gives
 * 1/2 - 1/2 |p0 - p1 - p2| (the branches agree at det = 0).
 */
double lemma1_min_error(double p0, double p1, double p2, const Ket& psi0, const Ket& psi1, const Ket& psi2);

/// Pretty good measurement: p_i rho^{-1/2} |psi_i><psi_i| rho^{-1/2} with the
/// inverse square root taken on the support of rho; closure = support projector.
Povm pgm(const WeightedEnsemble& e);

struct OptimalityReport {
  bool is_optimal = false;
  double min_eigenvalue_margin = 0.0;
  double hermiticity_residual = 0.0;
};

/// Holevo condition verifier: Lambda = sum p_i Pi_i |psi_i><psi_i| must be
/// Hermitian with Lambda >= p_j |psi_j><psi_j| for every j.
OptimalityReport holevo_optimality_check(const WeightedEnsemble& e, const Povm& p);

/**
 * For a linearly independent ensemble and a POVM passing the optimality
 * check, returns the orthonormal basis phi_i = PiHat_i|psi_i> / norm with
 * PiHat_i = P_S Pi_i P_S. Any optimum-achieving POVM yields the same basis.
 */
std::vector<Ket> extract_optimal_basis(const WeightedEnsemble& e, const Povm& p);

/// d(P, P') = 1/2 sum_i ||Pi_i - Pi'_i||_1.
double povm_distance(const Povm& p, const Povm& q);

}  // namespace trinelab

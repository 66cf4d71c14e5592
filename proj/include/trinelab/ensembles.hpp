// ensembles.hpp — named states of the double-trine problem and the
// two-qubit pure-state concurrence.

#pragma once

#include <vector>

#include "trinelab/matrix.hpp"

namespace trinelab {

/// Ensemble of pure states with prior probabilities (priors >= 0, sum 1).
struct WeightedEnsemble {
  struct Item {
    double prior;
    Ket state;
  };
  std::vector<Item> items;

  int dim() const;
  int size() const { return static_cast<int>(items.size()); }
  void validate() const;  // throws std::invalid_argument on bad priors/dims
};

/// The pi/3 rotation exp(-i pi/3 sigma_y) = [[1/2, -sqrt(3)/2], [sqrt(3)/2, 1/2]].
CMat trine_rotation();

/// |s_i> = U^i |0> = cos(i pi/3)|0> + sin(i pi/3)|1>.
/// Overlap signs: <s0|s1> = <s1|s2> = +1/2, <s0|s2> = -1/2.
Ket trine_state(int i);

/// |s_i_perp> = U^i |1>, orthogonal to |s_i>.
Ket trine_perp(int i);

/// The three equiprobable product states |s_i> (x) |s_i>.
WeightedEnsemble double_trine();

/// (|01> - |10>)/sqrt(2); orthogonal to every double-trine state.
Ket singlet();

/// |F_i> = U^i (x) U^i [(sqrt(2)+1)|00> - (sqrt(2)-1)|11>] / sqrt(6).
/// {singlet, F_0, F_1, F_2} is an orthonormal basis of the two-qubit space.
Ket pgm_basis_F(int i);

/// Two-qubit pure-state concurrence |<v*| sigma_y (x) sigma_y |v>| in [0,1];
/// zero exactly for product states. Requires unit norm within 1e-9.
double concurrence(const Ket& v);

/// Concurrence of the normalized filtered state (M (x) N)|v> computed via
/// C(v) |det M| |det N| / <v| M^dag M (x) N^dag N |v>.
/// Throws if the filter annihilates the state.
double filtered_concurrence(const CMat& m, const CMat& n, const Ket& v);

}  // namespace trinelab

// separability.hpp — PPT test, product-operator detection, and the explicit
// separable POVM that attains the global double-trine optimum.

#pragma once

#include <optional>
#include <utility>

#include "trinelab/min_error.hpp"

namespace trinelab {

struct SeparabilityReport {
  bool is_ppt = false;
  double min_pt_eigenvalue = 0.0;  // of the trace-normalized partial transpose
  bool is_product = false;
  std::optional<std::pair<CMat, CMat>> product_factors;  // tensor(A, B) reconstructs the input
};

/// Transpose on the B tensor factor (row-major, A major).
CMat partial_transpose_B(const CMat& m);

/// PPT and product analysis of a PSD dim-4 operator with nonzero trace.
/// In 2x2, PPT of the normalized operator is equivalent to separability.
/// Product detection: rank-1 realignment (second singular value <= 1e-9 of
/// the first), with factors extracted from the leading singular pair.
SeparabilityReport ppt_separable(const CMat& m);

/// Factor a product two-qubit pure state into its local parts.
/// Throws std::invalid_argument if the state is entangled beyond 1e-9.
std::pair<Ket, Ket> factor_product_ket(const Ket& v);

/// The separable POVM {F~_i} with F~_i = |F_i><F_i| + 1/3 |singlet><singlet|;
/// the three elements sum to the identity, each splits into the two product
/// states F_i +- sqrt(1/3) singlet, and the POVM attains the global optimum.
Povm separable_pgm();

}  // namespace trinelab

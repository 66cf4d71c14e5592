// nogo.hpp — numerical certification that a product halting operator cannot
// grant one double-trine PGM state a success probability above 1/3 while the
// transformed triple stays perfectly distinguishable by separable operations.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trinelab/ensembles.hpp"

namespace trinelab {

/// Parameters of the halting operator expressed in the {singlet, F_i} basis:
/// E = s|S><S| + sum_i (a_i|F_i><F_i| + [b_i|S><F_i| + h.c.]),
/// with s >= 0, a_i >= 0 and sum a_i = 1 (the F-off-diagonal block is zero).
struct HaltingOperator {
  double s = 0.0;
  std::array<double, 3> a{};
  std::array<Complex, 3> b{};

  void validate() const;
};

/// Materializes E in computational coordinates.
CMat build_E(const HaltingOperator& h);

/// <0|(gamma01 gamma10 - gamma10 gamma01)|0> with gamma_ij the A-side partial
/// contractions; vanishes identically on product operators.
Complex commutator_residual(const CMat& e);

/**
 * Closed form of the residual: 2 Im(b1 - b2)^2 + (s + a0 - 2/3)(s - 1/3).
 * Direct expansion of the commutator element fixes the Im^2 coefficient at 2
 * and the b-pair as the coefficients attached to F_1 and F_2; the overall
 * proportionality to commutator_residual is a single real constant (-1/4),
 * see commutator_proportionality_constant().
 */
double commutator_closed_form(const HaltingOperator& h);

/// The constant K with commutator_residual(build_E(h)) = K * closed_form(h),
/// determined numerically from one reference evaluation and cached.
double commutator_proportionality_constant();

/// |F'_i> = E^{1/2}|F_i> / sqrt(<F_i|E|F_i>) for PSD E.
std::array<Ket, 3> transformed_states(const CMat& e);

/// C(Psi') - sum_i C(F'_i) for full-rank PSD E, with
/// |Psi'> = E^{-1/2}|singlet> / sqrt(<singlet|E^{-1}|singlet>).
/// Zero is necessary for perfect separable discrimination of the F'_i.
double duan_gap(const CMat& e);

/// (1/3)(a0 a1 + a0 a2 + a1 a2) / sqrt(a0 a1 a2 / 3) for a positive
/// probability vector; >= 1 with equality iff a = (1/3, 1/3, 1/3).
double sep_rhs_bound(double a0, double a1, double a2);

/// Per-chi certificate. `contradiction` is true when all three closed-form
/// margins are strictly positive: no s > 1/3 admits the commutator identity
/// (margin chi - 1/3), no s < 1/3 leaves enough prior mass for the other two
/// basis states (margin >= chi - 1/3), and at s = 1/3 the Hadamard route
/// forces a0 = 1/3 (slice margin of sep_rhs_bound over a0 = chi).
/// The sweep field is an independent empirical witness over random product
/// operators normalized to condition (i).
struct NogoChiReport {
  double chi = 0.0;
  bool contradiction = false;
  double margin_s_above = 0.0;
  double margin_s_below = 0.0;
  double margin_center = 0.0;
  double sweep_min_deviation = 0.0;
  int sweep_samples = 0;
};

std::vector<NogoChiReport> nogo_certificate(const std::vector<double>& chi_grid, int sweep_samples = 10000,
                                            std::uint64_t seed = 42);

}  // namespace trinelab

// locc.hpp — one-way and adaptive two-way discrimination of the double trine:
// Bob's posterior after a rank-one outcome of Alice, the one-way branch error
// and its optimum, the elimination POVM, the three-round adaptive protocol,
// and a generic finite-round protocol-tree simulator.

#pragma once

#include <array>
#include <vector>

#include "trinelab/min_error.hpp"

namespace trinelab {

/// Direction of Alice's rank-one outcome |eta> = cos(theta)|0> + e^{i phi} sin(theta)|1>.
/// The canonical search domain is theta in [-pi/6, pi/6], phi in [0, 2 pi);
/// the posterior formula itself is total in both angles.
struct AliceDirection {
  double theta = 0.0;
  double phi = 0.0;

  /// Validating factory for the canonical domain.
  static AliceDirection checked(double theta, double phi);
};

/// Bob's updated distribution p_k = 2/3 |cos(2 pi k/3) cos(theta) +
/// e^{i phi} sin(2 pi k/3) sin(theta)|^2; sums to 1 for any direction.
std::array<double, 3> bob_posterior(const AliceDirection& d);

/// The two printed forms of the branch error (posterior route and the
/// trigonometric closed form); they agree to rounding everywhere.
struct BranchErrorForms {
  double via_posterior = 0.0;
  double via_trig = 0.0;
};
BranchErrorForms one_way_branch_error_forms(const AliceDirection& d);

/// Branch error with the internal cross-check of the two forms
/// (throws std::runtime_error if they disagree beyond 1e-10).
double one_way_branch_error(const AliceDirection& d);

struct OneWayOptimum {
  AliceDirection direction;
  double error = 0.0;
};

/// Deterministic dense-grid scan (default step 1e-3 rad) plus golden-section
/// refinement of each coordinate; the minimum sits at theta = -pi/6, phi = 0.
OneWayOptimum one_way_optimum(double grid_step = 1e-3);

/// Alice's elimination POVM {2/3 (I - |s_i><s_i|)} on her qubit.
Povm elimination_povm();

/// Round-I Kraus operator A_i = sqrt((1-p)/3)|s_i><s_i| + sqrt((1+p)/3)|s_i_perp><s_i_perp|.
CMat kraus_A(int i, double p);

/**
 * Error probability of the three-round adaptive protocol at strength p:
 * (I) Alice measures {A_i}; (II) Bob projects onto the U^i-rotated |+->
 * basis; (III) Alice Helstrom-discriminates her two most likely conditional
 * states, ignoring the third. Returns 6x the (A_0, B_+) branch contribution;
 * the branch probability is computed (it equals 1/6 at every p).
 */
double two_way_error(double p);

struct TwoWayOptimum {
  double p_star = 0.0;
  double error = 0.0;
};

/// Grid (default step 1e-4) plus golden-section refinement over p in [0,1].
TwoWayOptimum two_way_optimum(double grid_step = 1e-4);

/**
 * Finite-round LOCC protocol tree. Internal nodes carry a local instrument
 * (dim-2 Kraus operators, sum K^dag K = I within 1e-10) for the acting party
 * and one child per outcome; leaves carry the guessed ensemble index.
 * Classical communication is implicit in the branching.
 */
struct ProtocolNode {
  enum class Party { kAlice, kBob };

  Party acting_party = Party::kAlice;
  std::vector<CMat> instrument;
  std::vector<ProtocolNode> children;
  int guess = -1;

  bool is_leaf() const { return children.empty(); }

  static ProtocolNode leaf(int guess);
  static ProtocolNode node(Party party, std::vector<CMat> kraus, std::vector<ProtocolNode> children);
};

/// Conditional data carried by one root-to-leaf path.
struct BranchState {
  std::vector<double> posterior;                  // over ensemble indices
  std::vector<std::pair<Ket, Ket>> conditional_states;  // normalized (A-side, B-side) pairs
  double path_probability = 0.0;
  int guess = -1;
};

struct SimulationResult {
  double error = 0.0;
  std::vector<BranchState> leaves;
};

/**
 * Propagates every product ensemble state through each root-to-leaf Kraus
 * path, accumulating path probabilities and Bayesian posteriors;
 * error = 1 - sum_leaves path_prob * posterior[guess]. Branches with
 * probability below 1e-14 are pruned (they contribute nothing).
 * Throws on Kraus-incomplete nodes and non-product ensemble states.
 */
SimulationResult simulate_protocol(const ProtocolNode& tree, const WeightedEnsemble& e);

/// The paper-exact trees, for cross-validation against the closed forms.
ProtocolNode one_way_elimination_tree();
ProtocolNode two_way_protocol_tree(double p);

}  // namespace trinelab

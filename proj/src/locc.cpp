#include "trinelab/locc.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "trinelab/separability.hpp"

namespace trinelab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBranchPruneTol = 1e-14;

// Golden-section minimization on [lo, hi] to interval width `tol`.
double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

AliceDirection AliceDirection::checked(double theta, double phi) {
  if (theta < -kPi / 6.0 - 1e-12 || theta > kPi / 6.0 + 1e-12)
    throw std::invalid_argument("theta outside [-pi/6, pi/6]");
  if (phi < 0.0 || phi >= 2.0 * kPi) throw std::invalid_argument("phi outside [0, 2 pi)");
  return {theta, phi};
}

std::array<double, 3> bob_posterior(const AliceDirection& d) {
  std::array<double, 3> p{};
  for (int k = 0; k < 3; ++k) {
    const double ang = 2.0 * kPi * k / 3.0;
    const Complex amp = std::cos(ang) * std::cos(d.theta) +
                        std::exp(Complex(0.0, d.phi)) * std::sin(ang) * std::sin(d.theta);
    p[k] = (2.0 / 3.0) * std::norm(amp);
  }
  return p;
}

BranchErrorForms one_way_branch_error_forms(const AliceDirection& d) {
  const auto p = bob_posterior(d);
  BranchErrorForms f;
  const double arg = 1.0 - 3.0 * p[1] * p[2] - p[0] * p[1] - p[0] * p[2];
  f.via_posterior = 0.5 - 0.5 * std::sqrt(std::max(0.0, arg));
  const double bracket = 75.0 + 32.0 * std::cos(2.0 * d.theta) - 7.0 * std::cos(4.0 * d.theta) +
                         18.0 * std::cos(2.0 * d.phi) * std::pow(std::sin(2.0 * d.theta), 2);
  f.via_trig = 0.5 - std::sqrt(bracket) / 24.0;
  return f;
}

double one_way_branch_error(const AliceDirection& d) {
  const BranchErrorForms f = one_way_branch_error_forms(d);
  if (std::abs(f.via_posterior - f.via_trig) > 1e-10)
    throw std::runtime_error("one-way branch error forms disagree (formula transcription bug)");
  return f.via_posterior;
}

OneWayOptimum one_way_optimum(double grid_step) {
  const double th_lo = -kPi / 6.0, th_hi = kPi / 6.0;
  const int nth = static_cast<int>(std::ceil((th_hi - th_lo) / grid_step));
  const int nph = static_cast<int>(std::ceil(2.0 * kPi / grid_step));
  const double dth = (th_hi - th_lo) / nth;
  const double dph = 2.0 * kPi / nph;

  double best = 1e300, best_th = th_lo, best_ph = 0.0;
  for (int i = 0; i <= nth; ++i) {
    const double th = th_lo + i * dth;
    for (int j = 0; j < nph; ++j) {
      const double ph = j * dph;
      const double v = one_way_branch_error({th, ph});
      if (v < best) {
        best = v;
        best_th = th;
        best_ph = ph;
      }
    }
  }

  // Coordinate-wise golden refinement inside the bracketing grid cells.
  const double th_ref = golden_min([&](double th) { return one_way_branch_error({th, best_ph}); },
                                   std::max(th_lo, best_th - dth), std::min(th_hi, best_th + dth), 1e-12);
  if (one_way_branch_error({th_ref, best_ph}) < best) {
    best_th = th_ref;
    best = one_way_branch_error({best_th, best_ph});
  }
  const double ph_ref = golden_min([&](double ph) { return one_way_branch_error({best_th, ph}); },
                                   best_ph - dph, best_ph + dph, 1e-12);
  if (one_way_branch_error({best_th, ph_ref}) < best) {
    best_ph = ph_ref;
    best = one_way_branch_error({best_th, best_ph});
  }
  return {{best_th, best_ph}, best};
}

Povm elimination_povm() {
  Povm out;
  out.closure = CMat::identity(2);
  for (int i = 0; i < 3; ++i)
    out.elements.push_back((2.0 / 3.0) * (CMat::identity(2) - projector(trine_state(i))));
  return out;
}

CMat kraus_A(int i, double p) {
  if (i < 0 || i > 2) throw std::invalid_argument("trine index out of range");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("measurement strength p outside [0, 1]");
  return std::sqrt((1.0 - p) / 3.0) * projector(trine_state(i)) +
         std::sqrt((1.0 + p) / 3.0) * projector(trine_perp(i));
}

double two_way_error(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("measurement strength p outside [0, 1]");
  const CMat a0 = kraus_A(0, p);
  const Ket plus = Ket{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};

  // Round I/II statistics of the (A_0, B_+) branch.
  std::array<double, 3> cond{};  // P(A_0, B_+ | state i)
  std::array<Ket, 3> post_state{Ket(2), Ket(2), Ket(2)};
  for (int i = 0; i < 3; ++i) {
    const Ket filtered = a0 * trine_state(i);
    const double w = filtered.norm() * filtered.norm();
    cond[i] = w * std::norm(inner(plus, trine_state(i)));
    post_state[i] = (w > kBranchPruneTol) ? filtered.normalized() : Ket::basis(2, 0);
  }
  const double branch_prob = (cond[0] + cond[1] + cond[2]) / 3.0;
  std::array<double, 3> posterior{};
  for (int i = 0; i < 3; ++i) posterior[i] = cond[i] / 3.0 / branch_prob;

  // Round III: Helstrom between s'_0 and s'_1, ignoring s'_2.
  const double q = posterior[0] + posterior[1];
  double cross = 0.0;
  if (posterior[0] > kBranchPruneTol && posterior[1] > kBranchPruneTol)
    cross = 4.0 * posterior[0] * posterior[1] * std::norm(inner(post_state[0], post_state[1])) / (q * q);
  const double branch_error = 1.0 - 0.5 * q * (1.0 + std::sqrt(std::max(0.0, 1.0 - cross)));

  return 6.0 * branch_prob * branch_error;
}

TwoWayOptimum two_way_optimum(double grid_step) {
  const int n = static_cast<int>(std::floor(1.0 / grid_step));
  double best = 1e300;
  int best_k = 0;
  for (int k = 0; k <= n; ++k) {
    const double v = two_way_error(static_cast<double>(k) / n);
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  const double lo = std::max(0.0, static_cast<double>(best_k - 1) / n);
  const double hi = std::min(1.0, static_cast<double>(best_k + 1) / n);
  const double p_ref = golden_min([](double p) { return two_way_error(p); }, lo, hi, 1e-12);
  TwoWayOptimum out{static_cast<double>(best_k) / n, best};
  if (two_way_error(p_ref) < best) out = {p_ref, two_way_error(p_ref)};
  return out;
}

ProtocolNode ProtocolNode::leaf(int guess) {
  ProtocolNode n;
  n.guess = guess;
  return n;
}

ProtocolNode ProtocolNode::node(Party party, std::vector<CMat> kraus, std::vector<ProtocolNode> children) {
  if (kraus.size() != children.size()) throw std::invalid_argument("one child per Kraus outcome required");
  ProtocolNode n;
  n.acting_party = party;
  n.instrument = std::move(kraus);
  n.children = std::move(children);
  return n;
}

namespace {

void check_kraus_complete(const std::vector<CMat>& kraus) {
  if (kraus.empty()) throw std::invalid_argument("empty instrument");
  CMat sum(2);
  for (const CMat& k : kraus) {
    if (k.dim() != 2) throw std::invalid_argument("instruments act on single qubits");
    sum += k.adjoint() * k;
  }
  if ((sum - CMat::identity(2)).max_abs() > 1e-10)
    throw std::invalid_argument("instrument is not Kraus-complete");
}

struct Conditional {
  Ket a;  // unnormalized A-side amplitude
  Ket b;  // unnormalized B-side amplitude
  double prior;
};

void walk(const ProtocolNode& node, std::vector<Conditional> conds, SimulationResult& out) {
  if (node.is_leaf()) {
    BranchState leaf;
    leaf.guess = node.guess;
    double total = 0.0;
    std::vector<double> weights;
    for (const Conditional& c : conds) {
      const double na = c.a.norm(), nb = c.b.norm();
      const double w = c.prior * na * na * nb * nb;
      weights.push_back(w);
      total += w;
    }
    if (total < kBranchPruneTol) return;  // dead branch, zero contribution
    leaf.path_probability = total;
    for (size_t i = 0; i < conds.size(); ++i) {
      leaf.posterior.push_back(weights[i] / total);
      const Ket a = weights[i] > kBranchPruneTol ? conds[i].a.normalized() : Ket::basis(2, 0);
      const Ket b = weights[i] > kBranchPruneTol ? conds[i].b.normalized() : Ket::basis(2, 0);
      leaf.conditional_states.emplace_back(a, b);
    }
    if (leaf.guess < 0 || leaf.guess >= static_cast<int>(conds.size()))
      throw std::invalid_argument("leaf guess out of range");
    out.leaves.push_back(std::move(leaf));
    return;
  }

  check_kraus_complete(node.instrument);
  for (size_t outcome = 0; outcome < node.instrument.size(); ++outcome) {
    std::vector<Conditional> next = conds;
    for (Conditional& c : next) {
      if (node.acting_party == ProtocolNode::Party::kAlice)
        c.a = node.instrument[outcome] * c.a;
      else
        c.b = node.instrument[outcome] * c.b;
    }
    walk(node.children[outcome], std::move(next), out);
  }
}

}  // namespace

SimulationResult simulate_protocol(const ProtocolNode& tree, const WeightedEnsemble& e) {
  e.validate();
  if (e.dim() != 4) throw std::invalid_argument("simulate_protocol expects two-qubit ensembles");
  std::vector<Conditional> conds;
  for (const auto& it : e.items) {
    const auto [a, b] = factor_product_ket(it.state);  // throws on entangled input
    conds.push_back({a, b, it.prior});
  }
  SimulationResult out;
  walk(tree, std::move(conds), out);
  double correct = 0.0;
  for (const BranchState& leaf : out.leaves) correct += leaf.path_probability * leaf.posterior[leaf.guess];
  out.error = 1.0 - correct;
  return out;
}

namespace {

// Binary Helstrom instrument for weighted qubit states: the projector onto
// the positive eigenspace of w0 rho0 - w1 rho1 detects state 0.
std::pair<CMat, CMat> helstrom_projectors(double w0, const Ket& psi0, double w1, const Ket& psi1) {
  const CMat delta = w0 * projector(psi0) - w1 * projector(psi1);
  const EigenPair ep = eig_hermitian(delta);
  CMat pos(2);
  for (size_t k = 0; k < ep.values.size(); ++k)
    if (ep.values[k] > 0.0) pos += projector(ep.vectors[k]);
  return {pos, CMat::identity(2) - pos};
}

}  // namespace

ProtocolNode one_way_elimination_tree() {
  std::vector<CMat> alice;
  std::vector<ProtocolNode> bobs;
  for (int i = 0; i < 3; ++i) {
    alice.push_back(std::sqrt(2.0 / 3.0) * projector(trine_perp(i)));
    const int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
    auto [plus, minus] = helstrom_projectors(0.5, trine_state(j1), 0.5, trine_state(j2));
    bobs.push_back(ProtocolNode::node(ProtocolNode::Party::kBob, {plus, minus},
                                      {ProtocolNode::leaf(j1), ProtocolNode::leaf(j2)}));
  }
  return ProtocolNode::node(ProtocolNode::Party::kAlice, std::move(alice), std::move(bobs));
}

ProtocolNode two_way_protocol_tree(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("measurement strength p outside [0, 1]");
  const double r = 1.0 / std::sqrt(2.0);
  const Ket plus{r, r}, minus{r, -r};

  std::vector<CMat> alice_round1;
  std::vector<ProtocolNode> bob_nodes;
  for (int i = 0; i < 3; ++i) {
    const CMat ai = kraus_A(i, p);
    alice_round1.push_back(ai);

    // Conditional data of branch (A_i, B_mu), computed as in round III.
    std::array<double, 3> cond{};
    std::array<Ket, 3> post{Ket(2), Ket(2), Ket(2)};
    for (int j = 0; j < 3; ++j) {
      const Ket filtered = ai * trine_state(j);
      const double w = filtered.norm() * filtered.norm();
      cond[j] = w;
      post[j] = (w > kBranchPruneTol) ? filtered.normalized() : Ket::basis(2, 0);
    }

    // Bob's round-II basis: the U^i-rotated |+-> pair.
    CMat u = CMat::identity(2);
    for (int k = 0; k < i; ++k) u = trine_rotation() * u;
    const Ket bp = u * plus, bm = u * minus;

    std::vector<ProtocolNode> alice_round3;
    for (int mu = 0; mu < 2; ++mu) {
      const Ket& bob_vec = (mu == 0) ? bp : bm;
      const int j_other = (mu == 0) ? (i + 1) % 3 : (i + 2) % 3;
      double w_i = cond[i] * std::norm(inner(bob_vec, trine_state(i)));
      double w_o = cond[j_other] * std::norm(inner(bob_vec, trine_state(j_other)));
      auto [first, second] = helstrom_projectors(w_i, post[i], w_o, post[j_other]);
      alice_round3.push_back(ProtocolNode::node(ProtocolNode::Party::kAlice, {first, second},
                                                {ProtocolNode::leaf(i), ProtocolNode::leaf(j_other)}));
    }
    bob_nodes.push_back(ProtocolNode::node(ProtocolNode::Party::kBob,
                                           {projector(bp), projector(bm)}, std::move(alice_round3)));
  }
  return ProtocolNode::node(ProtocolNode::Party::kAlice, std::move(alice_round1), std::move(bob_nodes));
}

}  // namespace trinelab

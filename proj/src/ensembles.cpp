#include "trinelab/ensembles.hpp"

#include <cmath>
#include <stdexcept>

namespace trinelab {

int WeightedEnsemble::dim() const {
  if (items.empty()) throw std::invalid_argument("empty ensemble");
  return items.front().state.dim();
}

void WeightedEnsemble::validate() const {
  if (items.empty()) throw std::invalid_argument("empty ensemble");
  double sum = 0.0;
  const int d = items.front().state.dim();
  for (const auto& it : items) {
    if (it.prior < 0.0) throw std::invalid_argument("negative prior");
    if (it.state.dim() != d) throw std::invalid_argument("mixed state dimensions in ensemble");
    sum += it.prior;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("priors do not sum to 1");
}

CMat trine_rotation() {
  const double c = std::cos(M_PI / 3.0), s = std::sin(M_PI / 3.0);
  return CMat{{c, -s}, {s, c}};
}

namespace {

void check_trine_index(int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("trine index out of range");
}

CMat trine_rotation_pow(int i) {
  CMat u = CMat::identity(2);
  const CMat step = trine_rotation();
  for (int k = 0; k < i; ++k) u = step * u;
  return u;
}

}  // namespace

Ket trine_state(int i) {
  check_trine_index(i);
  return trine_rotation_pow(i) * Ket::basis(2, 0);
}

Ket trine_perp(int i) {
  check_trine_index(i);
  return trine_rotation_pow(i) * Ket::basis(2, 1);
}

WeightedEnsemble double_trine() {
  WeightedEnsemble e;
  for (int i = 0; i < 3; ++i) e.items.push_back({1.0 / 3.0, tensor(trine_state(i), trine_state(i))});
  return e;
}

Ket singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  return Ket{0.0, r, -r, 0.0};
}

Ket pgm_basis_F(int i) {
  check_trine_index(i);
  const double sq2 = std::sqrt(2.0);
  const double n = 1.0 / std::sqrt(6.0);
  const Ket seed{(sq2 + 1.0) * n, 0.0, 0.0, -(sq2 - 1.0) * n};
  const CMat u = trine_rotation_pow(i);
  CMat uu = tensor(u, u);
  return uu * seed;
}

namespace {

CMat sigma_y() { return CMat{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }

}  // namespace

double concurrence(const Ket& v) {
  if (v.dim() != 4) throw std::invalid_argument("concurrence expects a two-qubit state");
  if (std::abs(v.norm() - 1.0) > 1e-9) throw std::invalid_argument("concurrence expects a unit-norm state");
  const CMat flip = tensor(sigma_y(), sigma_y());
  return std::abs(inner(v.conj(), flip * v));
}

double filtered_concurrence(const CMat& m, const CMat& n, const Ket& v) {
  if (m.dim() != 2 || n.dim() != 2 || v.dim() != 4)
    throw std::invalid_argument("filtered_concurrence expects dim-2 filters and a dim-4 state");
  const CMat weight = tensor(m.adjoint() * m, n.adjoint() * n);
  const double denom = inner(v, weight * v).real();
  if (denom <= 1e-14) throw std::invalid_argument("filter annihilates the state");
  return concurrence(v) * std::abs(det(m)) * std::abs(det(n)) / denom;
}

}  // namespace trinelab

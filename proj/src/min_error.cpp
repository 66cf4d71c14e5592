#include "trinelab/min_error.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trinelab {

int Povm::dim() const {
  if (elements.empty()) throw std::invalid_argument("empty POVM");
  return elements.front().dim();
}

PovmCheck validate_povm(const Povm& p) {
  PovmCheck chk;
  chk.min_eigenvalue = 1e300;
  CMat sum(p.dim());
  for (const CMat& el : p.elements) {
    if (el.dim() != p.dim()) throw std::invalid_argument("mixed POVM element dimensions");
    chk.hermiticity_residual = std::max(chk.hermiticity_residual, hermiticity_residual(el));
    const EigenPair ep = eig_hermitian(0.5 * (el + el.adjoint()));
    chk.min_eigenvalue = std::min(chk.min_eigenvalue, ep.values.front());
    sum += el;
  }
  if (p.closure.dim() != p.dim()) throw std::invalid_argument("closure dimension mismatch");
  chk.closure_residual = (sum - p.closure).max_abs();
  return chk;
}

double error_probability(const WeightedEnsemble& e, const Povm& p) {
  e.validate();
  if (e.size() != p.size()) throw std::invalid_argument("ensemble and POVM sizes differ");
  if (e.dim() != p.dim()) throw std::invalid_argument("ensemble and POVM dimensions differ");
  double correct = 0.0;
  for (int i = 0; i < e.size(); ++i) {
    const Ket& psi = e.items[i].state;
    correct += e.items[i].prior * inner(psi, p.elements[i] * psi).real();
  }
  return 1.0 - correct;
}

double helstrom_binary(const CMat& rho, const CMat& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("dimension mismatch");
  const double tsum = rho.trace().real() + sigma.trace().real();
  if (std::abs(tsum - 1.0) > 1e-9) throw std::invalid_argument("weighted traces must sum to 1");
  return 0.5 - 0.5 * trace_norm(rho - sigma);
}

double lemma1_min_error(double p0, double p1, double p2, const Ket& psi0, const Ket& psi1, const Ket& psi2) {
  if (p0 < 0.0 || p1 < 0.0 || p2 < 0.0 || std::abs(p0 + p1 + p2 - 1.0) > 1e-12)
    throw std::invalid_argument("invalid probability vector");
  if (psi0.dim() != 2 || psi1.dim() != 2 || psi2.dim() != 2)
    throw std::invalid_argument("lemma1_min_error expects qubit states");
  const CMat delta = p0 * projector(psi0) - p1 * projector(psi1) - p2 * projector(psi2);
  const double d = det(delta).real();
  if (d > 1e-14) return 0.5 - 0.5 * std::abs(p0 - p1 - p2);
  const double ov12 = std::norm(inner(psi1, psi2));
  const double ov01 = std::norm(inner(psi0, psi1));
  const double ov02 = std::norm(inner(psi0, psi2));
  const double arg = 1.0 - 4.0 * p1 * p2 * (1.0 - ov12) - 4.0 * p0 * (p1 * ov01 + p2 * ov02);
  return 0.5 - 0.5 * std::sqrt(std::max(0.0, arg));
}

Povm pgm(const WeightedEnsemble& e) {
  e.validate();
  CMat rho(e.dim());
  for (const auto& it : e.items) rho += it.prior * projector(it.state);
  const CMat isq = psd_inv_sqrt_on_support(rho);
  Povm out;
  out.closure = support_projector(rho);
  for (const auto& it : e.items) out.elements.push_back(it.prior * (isq * projector(it.state) * isq));
  return out;
}

OptimalityReport holevo_optimality_check(const WeightedEnsemble& e, const Povm& p) {
  e.validate();
  if (e.size() != p.size() || e.dim() != p.dim()) throw std::invalid_argument("ensemble/POVM size mismatch");
  CMat lambda(e.dim());
  for (int i = 0; i < e.size(); ++i) lambda += e.items[i].prior * (p.elements[i] * projector(e.items[i].state));

  OptimalityReport rep;
  rep.hermiticity_residual = hermiticity_residual(lambda);
  const CMat h = 0.5 * (lambda + lambda.adjoint());
  double margin = 1e300;
  for (const auto& it : e.items) {
    const EigenPair ep = eig_hermitian(h - it.prior * projector(it.state));
    margin = std::min(margin, ep.values.front());
  }
  rep.min_eigenvalue_margin = margin;
  rep.is_optimal = rep.hermiticity_residual <= 1e-9 && margin >= -1e-9;
  return rep;
}

namespace {

// Determinant of a small (k <= 4) complex matrix by partial-pivot elimination.
Complex det_small(std::vector<std::vector<Complex>> m) {
  const size_t n = m.size();
  Complex d = 1.0;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (std::abs(m[piv][col]) < 1e-300) return 0.0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      const Complex f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return d;
}

}  // namespace

std::vector<Ket> extract_optimal_basis(const WeightedEnsemble& e, const Povm& p) {
  e.validate();
  const int k = e.size();
  std::vector<std::vector<Complex>> gram(k, std::vector<Complex>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gram[i][j] = inner(e.items[i].state, e.items[j].state);
  if (std::abs(det_small(gram)) <= 1e-10)
    throw std::invalid_argument("ensemble states are not linearly independent");

  if (!holevo_optimality_check(e, p).is_optimal)
    throw std::invalid_argument("POVM does not pass the optimality check");

  CMat span(e.dim());
  for (const auto& it : e.items) span += projector(it.state);
  const CMat ps = support_projector(span, 1e-10);

  std::vector<Ket> basis;
  for (int i = 0; i < k; ++i) {
    const CMat compressed = ps * p.elements[i] * ps;
    Ket phi = compressed * e.items[i].state;
    if (phi.norm() < 1e-10)
      throw std::runtime_error("compressed POVM element annihilates its state (contradicts optimality)");
    basis.push_back(phi.normalized());
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(std::abs(inner(basis[i], basis[j])) - target) > 1e-9)
        throw std::runtime_error("extracted basis is not orthonormal");
    }
  return basis;
}

double povm_distance(const Povm& p, const Povm& q) {
  if (p.size() != q.size() || p.dim() != q.dim())
    throw std::invalid_argument("POVMs must have equal element counts and dimensions");
  double d = 0.0;
  for (int i = 0; i < p.size(); ++i) d += trace_norm(p.elements[i] - q.elements[i]);
  return 0.5 * d;
}

}  // namespace trinelab

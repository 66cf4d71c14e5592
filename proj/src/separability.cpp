#include "trinelab/separability.hpp"

#include <cmath>
#include <stdexcept>

namespace trinelab {

CMat partial_transpose_B(const CMat& m) {
  if (m.dim() != 4) throw std::invalid_argument("partial_transpose_B expects dim 4");
  CMat out(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp) out(2 * a + b, 2 * ap + bp) = m(2 * a + bp, 2 * ap + b);
  return out;
}

namespace {

// Realignment: R[(a,a'), (b,b')] = m[(a,b), (a',b')]. A product A (x) B maps
// to the rank-1 matrix vec(A) vec(B)^T with row-major vec.
CMat realign(const CMat& m) {
  CMat r(4);
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp) r(2 * a + ap, 2 * b + bp) = m(2 * a + b, 2 * ap + bp);
  return r;
}

CMat unvec(const Ket& v) {
  CMat m(2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = v[2 * r + c];
  return m;
}

}  // namespace

SeparabilityReport ppt_separable(const CMat& m) {
  if (m.dim() != 4) throw std::invalid_argument("ppt_separable expects dim 4");
  if (!is_hermitian(m)) throw std::invalid_argument("ppt_separable expects a Hermitian operator");
  const double tr = m.trace().real();
  if (std::abs(tr) < 1e-14) throw std::invalid_argument("ppt_separable expects nonzero trace");
  const EigenPair spec = eig_hermitian(m);
  if (spec.values.front() < -1e-10) throw std::invalid_argument("ppt_separable expects a PSD operator");

  SeparabilityReport rep;
  const CMat normalized = (1.0 / tr) * m;
  rep.min_pt_eigenvalue = eig_hermitian(partial_transpose_B(normalized)).values.front();
  rep.is_ppt = rep.min_pt_eigenvalue >= -1e-10;

  // Product test: SVD of the realignment via its Gram matrices.
  const CMat r = realign(m);
  const EigenPair gram = eig_hermitian(r.adjoint() * r);
  const double s1 = std::sqrt(std::max(0.0, gram.values[3]));
  const double s2 = std::sqrt(std::max(0.0, gram.values[2]));
  rep.is_product = s1 > 0.0 && s2 <= 1e-9 * s1;
  if (rep.is_product) {
    CMat a = unvec(eig_hermitian(r * r.adjoint()).vectors[3]);  // vec(A) direction, unit Frobenius norm
    // Rotate the free phase so the A factor of a PSD product is itself near-PSD.
    const Complex tra = a.trace();
    if (std::abs(tra) > 1e-12) a = (std::conj(tra) / std::abs(tra)) * a;
    // Contracting m against the unit-norm A factor recovers B exactly:
    // tensor(a, b) then reconstructs m.
    CMat b(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Complex s = 0.0;
        for (int ai = 0; ai < 2; ++ai)
          for (int aj = 0; aj < 2; ++aj) s += std::conj(a(ai, aj)) * m(2 * ai + i, 2 * aj + j);
        b(i, j) = s;
      }
    rep.product_factors = {a, b};
  }
  return rep;
}

std::pair<Ket, Ket> factor_product_ket(const Ket& v) {
  if (v.dim() != 4) throw std::invalid_argument("factor_product_ket expects dim 4");
  const CMat c = unvec(v);  // c(a, b) = v[2a + b], a product state has rank-1 c
  const CMat gram = c.adjoint() * c;
  const EigenPair ep = eig_hermitian(gram);
  const double s1 = std::sqrt(std::max(0.0, ep.values[1]));
  const double s2 = std::sqrt(std::max(0.0, ep.values[0]));
  if (!(s1 > 0.0) || s2 > 1e-9 * s1) throw std::invalid_argument("state is not a product across A|B");

  const CMat cogram = c * c.adjoint();
  const Ket a = eig_hermitian(cogram).vectors[1];  // top eigenvector = A-side factor
  Ket b(2);
  for (int j = 0; j < 2; ++j) b[j] = std::conj(a[0]) * c(0, j) + std::conj(a[1]) * c(1, j);
  return {a, b};
}

Povm separable_pgm() {
  const CMat psing = projector(singlet());
  Povm out;
  out.closure = CMat::identity(4);
  for (int i = 0; i < 3; ++i) out.elements.push_back(projector(pgm_basis_F(i)) + (1.0 / 3.0) * psing);
  return out;
}

}  // namespace trinelab

#include "trinelab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace trinelab {

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 4) throw std::invalid_argument("dimension must be 2 or 4");
}

}  // namespace

CMat::CMat(int dim) : dim_(dim) { check_dim(dim); }

CMat::CMat(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(static_cast<int>(rows.size())) {
  check_dim(dim_);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_) throw std::invalid_argument("ragged matrix initializer");
    int c = 0;
    for (Complex z : row) (*this)(r, c++) = z;
    ++r;
  }
}

CMat CMat::identity(int dim) {
  CMat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMat& CMat::operator+=(const CMat& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  for (int k = 0; k < dim_ * dim_; ++k) e_[k] += o.e_[k];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  for (int k = 0; k < dim_ * dim_; ++k) e_[k] -= o.e_[k];
  return *this;
}

CMat& CMat::operator*=(Complex z) {
  for (int k = 0; k < dim_ * dim_; ++k) e_[k] *= z;
  return *this;
}

CMat CMat::adjoint() const {
  CMat out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(c, r));
  return out;
}

CMat CMat::transpose() const {
  CMat out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(r, c) = (*this)(c, r);
  return out;
}

CMat CMat::conj() const {
  CMat out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(r, c));
  return out;
}

Complex CMat::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMat::max_abs() const {
  double m = 0.0;
  for (int k = 0; k < dim_ * dim_; ++k) m = std::max(m, std::abs(e_[k]));
  return m;
}

CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }

CMat operator-(const CMat& a) {
  CMat out(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out(r, c) = -a(r, c);
  return out;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  CMat out(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) {
      Complex s = 0.0;
      for (int k = 0; k < a.dim(); ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  return out;
}

CMat operator*(Complex z, CMat a) { return a *= z; }
CMat operator*(CMat a, Complex z) { return a *= z; }
CMat operator*(double z, CMat a) { return a *= Complex(z, 0.0); }

Ket::Ket(int dim) : dim_(dim) { check_dim(dim); }

Ket::Ket(std::initializer_list<Complex> amps) : dim_(static_cast<int>(amps.size())) {
  check_dim(dim_);
  int k = 0;
  for (Complex z : amps) a_[k++] = z;
}

Ket Ket::basis(int dim, int k) {
  Ket v(dim);
  if (k < 0 || k >= dim) throw std::invalid_argument("basis index out of range");
  v[k] = 1.0;
  return v;
}

double Ket::norm() const {
  double s = 0.0;
  for (int k = 0; k < dim_; ++k) s += std::norm(a_[k]);
  return std::sqrt(s);
}

Ket Ket::normalized() const {
  double n = norm();
  if (n < 1e-150) throw std::runtime_error("cannot normalize a zero vector");
  Ket out = *this;
  return out *= Complex(1.0 / n, 0.0);
}

Ket Ket::conj() const {
  Ket out = *this;
  for (int k = 0; k < dim_; ++k) out[k] = std::conj(out[k]);
  return out;
}

Ket& Ket::operator+=(const Ket& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  for (int k = 0; k < dim_; ++k) a_[k] += o.a_[k];
  return *this;
}

Ket& Ket::operator-=(const Ket& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  for (int k = 0; k < dim_; ++k) a_[k] -= o.a_[k];
  return *this;
}

Ket& Ket::operator*=(Complex z) {
  for (int k = 0; k < dim_; ++k) a_[k] *= z;
  return *this;
}

Ket operator+(Ket a, const Ket& b) { return a += b; }
Ket operator-(Ket a, const Ket& b) { return a -= b; }
Ket operator*(Complex z, Ket a) { return a *= z; }
Ket operator*(double z, Ket a) { return a *= Complex(z, 0.0); }

Ket operator*(const CMat& m, const Ket& v) {
  if (m.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  Ket out(v.dim());
  for (int r = 0; r < m.dim(); ++r) {
    Complex s = 0.0;
    for (int c = 0; c < m.dim(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

Complex inner(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  Complex s = 0.0;
  for (int k = 0; k < a.dim(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

CMat outer(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  CMat out(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out(r, c) = a[r] * std::conj(b[c]);
  return out;
}

CMat projector(const Ket& v) { return outer(v, v); }

double hermiticity_residual(const CMat& m) {
  double res = 0.0;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) res = std::max(res, std::abs(m(r, c) - std::conj(m(c, r))));
  return res;
}

bool is_hermitian(const CMat& m, double tol) { return hermiticity_residual(m) <= tol; }

CMat tensor(const CMat& a, const CMat& b) {
  if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("tensor expects two dim-2 operators");
  CMat out(4);
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 2; ++ib)
      for (int ja = 0; ja < 2; ++ja)
        for (int jb = 0; jb < 2; ++jb) out(2 * ia + ib, 2 * ja + jb) = a(ia, ja) * b(ib, jb);
  return out;
}

Ket tensor(const Ket& a, const Ket& b) {
  if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("tensor expects two dim-2 kets");
  Ket out(4);
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 2; ++ib) out[2 * ia + ib] = a[ia] * b[ib];
  return out;
}

namespace {

// Fix the overall phase: first component with |x| > 1e-12 becomes real positive.
Ket phase_fixed(Ket v) {
  for (int k = 0; k < v.dim(); ++k) {
    double m = std::abs(v[k]);
    if (m > 1e-12) {
      Complex ph = std::conj(v[k]) / m;
      return ph * v;
    }
  }
  return v;
}

// Tie-break for exactly equal eigenvalues: complex argument of the first
// component where the eigenvectors differ.
bool vector_arg_less(const Ket& a, const Ket& b) {
  for (int k = 0; k < a.dim(); ++k) {
    if (std::abs(a[k] - b[k]) > 1e-12) return std::arg(a[k]) < std::arg(b[k]);
  }
  return false;
}

EigenPair sorted_pair(std::vector<double> values, std::vector<Ket> vectors) {
  const int n = static_cast<int>(values.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    if (values[i] != values[j]) return values[i] < values[j];
    return vector_arg_less(vectors[i], vectors[j]);
  });
  EigenPair out;
  for (int k : idx) {
    out.values.push_back(values[k]);
    out.vectors.push_back(vectors[k]);
  }
  return out;
}

EigenPair eig2(const CMat& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const Complex b = m(0, 1);
  const double tr = a + d;
  const double detm = a * d - std::norm(b);
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * detm));
  const double lp = 0.5 * (tr + disc);
  const double lm = 0.5 * (tr - disc);

  Ket vp(2);
  // Pick the better-conditioned null-space formula for (m - lp I).
  Ket cand1{b, Complex(lp - a, 0.0)};
  Ket cand2{Complex(lp - d, 0.0), std::conj(b)};
  vp = (cand1.norm() >= cand2.norm()) ? cand1 : cand2;
  if (vp.norm() < 1e-14) vp = Ket::basis(2, 0);  // scalar matrix
  vp = phase_fixed(vp.normalized());
  // Exact orthonormal complement in C^2.
  Ket vm{-std::conj(vp[1]), std::conj(vp[0])};
  vm = phase_fixed(vm);
  return sorted_pair({lp, lm}, {vp, vm});
}

double offdiag_norm(const CMat& a) {
  double s = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

EigenPair eig4_jacobi(const CMat& m) {
  CMat a = 0.5 * (m + m.adjoint());  // exact Hermitian working copy
  CMat v = CMat::identity(4);

  const int max_sweeps = 100;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (offdiag_norm(a) <= kJacobiOffDiagTol) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const Complex phase = apq / mag;  // e^{i beta}
        const double t = 0.5 * std::atan2(2.0 * mag, app - aqq);
        const double c = std::cos(t);
        const double s = std::sin(t);
        // Unitary 2x2 block: diag(1, e^{-i beta}) * [[c,-s],[s,c]].
        const Complex jpp = c, jpq = -s;
        const Complex jqp = std::conj(phase) * s, jqq = std::conj(phase) * c;
        // a <- J^dag a J applied on columns then rows.
        for (int r = 0; r < 4; ++r) {
          const Complex arp = a(r, p), arq = a(r, q);
          a(r, p) = arp * jpp + arq * jqp;
          a(r, q) = arp * jpq + arq * jqq;
        }
        for (int cidx = 0; cidx < 4; ++cidx) {
          const Complex apc = a(p, cidx), aqc = a(q, cidx);
          a(p, cidx) = std::conj(jpp) * apc + std::conj(jqp) * aqc;
          a(q, cidx) = std::conj(jpq) * apc + std::conj(jqq) * aqc;
        }
        for (int r = 0; r < 4; ++r) {
          const Complex vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp * jpp + vrq * jqp;
          v(r, q) = vrp * jpq + vrq * jqq;
        }
      }
    }
  }
  if (sweep == max_sweeps && offdiag_norm(a) > kJacobiOffDiagTol)
    throw std::runtime_error("Jacobi eigensolver failed to converge");

  std::vector<double> values(4);
  std::vector<Ket> vectors;
  for (int k = 0; k < 4; ++k) {
    values[k] = a(k, k).real();
    Ket col(4);
    for (int r = 0; r < 4; ++r) col[r] = v(r, k);
    vectors.push_back(phase_fixed(col));
  }
  return sorted_pair(std::move(values), std::move(vectors));
}

}  // namespace

EigenPair eig_hermitian(const CMat& m) {
  if (!is_hermitian(m)) throw std::invalid_argument("eig_hermitian: input is not Hermitian within tolerance");
  return m.dim() == 2 ? eig2(m) : eig4_jacobi(m);
}

double trace_norm(const CMat& m) {
  const EigenPair ep = eig_hermitian(m);
  double s = 0.0;
  for (double l : ep.values) s += std::abs(l);
  return s;
}

namespace {

Complex det2(Complex a, Complex b, Complex c, Complex d) { return a * d - b * c; }

Complex minor3(const CMat& m, int skip_r, int skip_c) {
  int rows[3], cols[3], ri = 0, ci = 0;
  for (int k = 0; k < 4; ++k) {
    if (k != skip_r) rows[ri++] = k;
    if (k != skip_c) cols[ci++] = k;
  }
  const auto e = [&](int r, int c) { return m(rows[r], cols[c]); };
  return e(0, 0) * det2(e(1, 1), e(1, 2), e(2, 1), e(2, 2)) -
         e(0, 1) * det2(e(1, 0), e(1, 2), e(2, 0), e(2, 2)) +
         e(0, 2) * det2(e(1, 0), e(1, 1), e(2, 0), e(2, 1));
}

}  // namespace

Complex det(const CMat& m) {
  if (m.dim() == 2) return det2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
  Complex d = 0.0;
  for (int c = 0; c < 4; ++c) {
    const Complex cof = ((c % 2 == 0) ? 1.0 : -1.0) * minor3(m, 0, c);
    d += m(0, c) * cof;
  }
  return d;
}

CMat adjugate(const CMat& m) {
  if (m.dim() != 4) throw std::invalid_argument("adjugate is defined for dim 4");
  CMat out(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const double sign = ((r + c) % 2 == 0) ? 1.0 : -1.0;
      out(c, r) = sign * minor3(m, r, c);  // transposed cofactor
    }
  return out;
}

CMat partial_contract_A(const CMat& e, int i, int j) {
  if (e.dim() != 4) throw std::invalid_argument("partial_contract_A expects dim 4");
  if (i < 0 || i > 1 || j < 0 || j > 1) throw std::invalid_argument("contraction index out of range");
  CMat out(2);
  for (int b = 0; b < 2; ++b)
    for (int bp = 0; bp < 2; ++bp) out(b, bp) = e(2 * i + b, 2 * j + bp);
  return out;
}

namespace {

CMat spectral_map(const CMat& m, double support_tol, double (*f)(double)) {
  const EigenPair ep = eig_hermitian(m);
  CMat out(m.dim());
  for (size_t k = 0; k < ep.values.size(); ++k) {
    const double l = ep.values[k];
    if (l <= support_tol) continue;
    out += f(l) * projector(ep.vectors[k]);
  }
  return out;
}

}  // namespace

CMat psd_sqrt(const CMat& m, double support_tol) {
  return spectral_map(m, support_tol, +[](double l) { return std::sqrt(l); });
}

CMat psd_inv_sqrt_on_support(const CMat& m, double support_tol) {
  return spectral_map(m, support_tol, +[](double l) { return 1.0 / std::sqrt(l); });
}

CMat psd_inverse(const CMat& m, double support_tol) {
  return spectral_map(m, support_tol, +[](double l) { return 1.0 / l; });
}

CMat support_projector(const CMat& m, double support_tol) {
  return spectral_map(m, support_tol, +[](double) { return 1.0; });
}

}  // namespace trinelab

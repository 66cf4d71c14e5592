#include "trinelab/rng.hpp"

#include <cmath>

namespace trinelab {

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * 3.14159265358979323846 * u2;
  cached_ = r * std::sin(a);
  has_cached_ = true;
  return r * std::cos(a);
}

Ket Rng::random_ket(int dim) {
  Ket v(dim);
  for (int k = 0; k < dim; ++k) v[k] = cnormal();
  return v.normalized();
}

CMat Rng::random_hermitian(int dim) {
  CMat g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = cnormal();
  return 0.5 * (g + g.adjoint());
}

CMat Rng::random_psd(int dim) {
  CMat g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = cnormal();
  return g.adjoint() * g;
}

CMat Rng::random_unitary(int dim) {
  // Gram-Schmidt on random complex columns.
  std::vector<Ket> cols;
  for (int c = 0; c < dim; ++c) {
    Ket v(dim);
    for (int r = 0; r < dim; ++r) v[r] = cnormal();
    for (const Ket& u : cols) v -= inner(u, v) * u;
    cols.push_back(v.normalized());
  }
  CMat u(dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) u(r, c) = cols[c][r];
  return u;
}

}  // namespace trinelab

#include "trinelab/nogo.hpp"

#include <cmath>
#include <stdexcept>

#include "trinelab/rng.hpp"

namespace trinelab {

void HaltingOperator::validate() const {
  if (s < 0.0) throw std::invalid_argument("s must be nonnegative");
  double sum = 0.0;
  for (double ai : a) {
    if (ai < 0.0) throw std::invalid_argument("a_i must be nonnegative");
    sum += ai;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("a_i must sum to 1");
}

CMat build_E(const HaltingOperator& h) {
  h.validate();
  const Ket psi = singlet();
  CMat e = h.s * projector(psi);
  for (int i = 0; i < 3; ++i) {
    const Ket f = pgm_basis_F(i);
    e += h.a[i] * projector(f);
    e += h.b[i] * outer(psi, f) + std::conj(h.b[i]) * outer(f, psi);
  }
  return e;
}

Complex commutator_residual(const CMat& e) {
  if (e.dim() != 4) throw std::invalid_argument("commutator_residual expects dim 4");
  const CMat g01 = partial_contract_A(e, 0, 1);
  const CMat g10 = partial_contract_A(e, 1, 0);
  const CMat comm = g01 * g10 - g10 * g01;
  return comm(0, 0);
}

double commutator_closed_form(const HaltingOperator& h) {
  h.validate();
  const double im = std::imag(h.b[1] - h.b[2]);
  return 2.0 * im * im + (h.s + h.a[0] - 2.0 / 3.0) * (h.s - 1.0 / 3.0);
}

double commutator_proportionality_constant() {
  static const double k = [] {
    // One reference evaluation far from the zero set of either expression.
    HaltingOperator h;
    h.s = 0.7;
    h.a = {0.5, 0.3, 0.2};
    h.b = {Complex(0.1, 0.05), Complex(-0.2, 0.3), Complex(0.04, -0.15)};
    return commutator_residual(build_E(h)).real() / commutator_closed_form(h);
  }();
  return k;
}

std::array<Ket, 3> transformed_states(const CMat& e) {
  if (e.dim() != 4) throw std::invalid_argument("transformed_states expects dim 4");
  const EigenPair spec = eig_hermitian(e);
  if (spec.values.front() < -1e-10) throw std::invalid_argument("transformed_states expects a PSD operator");
  const CMat sq = psd_sqrt(e);
  std::array<Ket, 3> out{Ket(4), Ket(4), Ket(4)};
  for (int i = 0; i < 3; ++i) {
    const Ket f = pgm_basis_F(i);
    const double w = inner(f, e * f).real();
    if (w <= 1e-12) throw std::invalid_argument("operator annihilates a basis state");
    out[i] = (1.0 / std::sqrt(w)) * (sq * f);
  }
  return out;
}

double duan_gap(const CMat& e) {
  if (e.dim() != 4) throw std::invalid_argument("duan_gap expects dim 4");
  const EigenPair spec = eig_hermitian(e);
  if (spec.values.front() <= 1e-10) throw std::invalid_argument("duan_gap expects a full-rank PSD operator");

  const auto fprime = transformed_states(e);
  double csum = 0.0;
  for (const Ket& f : fprime) csum += concurrence(f.normalized());

  const CMat isq = psd_inv_sqrt_on_support(e);
  const Ket psi = singlet();
  const Ket transformed = isq * psi;
  return concurrence(transformed.normalized()) - csum;
}

double sep_rhs_bound(double a0, double a1, double a2) {
  if (a0 <= 0.0 || a1 <= 0.0 || a2 <= 0.0) throw std::invalid_argument("a_i must be positive");
  if (std::abs(a0 + a1 + a2 - 1.0) > 1e-12) throw std::invalid_argument("a_i must sum to 1");
  return (a0 * a1 + a0 * a2 + a1 * a2) / (3.0 * std::sqrt(a0 * a1 * a2 / 3.0));
}

namespace {

// Smallest value of sep_rhs_bound(chi, t, 1-chi-t) over the slice, by grid
// scan plus golden refinement. The analytic minimizer is the symmetric point
// t = (1-chi)/2; the numeric search certifies it without assuming it.
double slice_min_margin(double chi) {
  const double span = 1.0 - chi;
  if (span < 1e-9) {
    // Degenerate slice (chi ~ 1): condition (iii) leaves no prior mass for
    // the other two states; the slice value tends to the center limit.
    return (3.0 * chi + 1.0) / (2.0 * std::sqrt(3.0 * chi)) - 1.0;
  }
  const int n = 2000;
  double best = 1e300;
  int best_k = 1;
  for (int k = 1; k < n; ++k) {
    const double t = span * k / n;
    const double v = sep_rhs_bound(chi, t, span - t);
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  const double lo = span * std::max(1, best_k - 1) / n;
  const double hi = span * std::min(n - 1, best_k + 1) / n;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = sep_rhs_bound(chi, c, span - c), fd = sep_rhs_bound(chi, d, span - d);
  while (b - a > 1e-13) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - inv_phi * (b - a);
      fc = sep_rhs_bound(chi, c, span - c);
    } else {
      a = c; c = d; fc = fd;
      d = a + inv_phi * (b - a);
      fd = sep_rhs_bound(chi, d, span - d);
    }
  }
  best = std::min(best, std::min(fc, fd));
  return best - 1.0;
}

}  // namespace

std::vector<NogoChiReport> nogo_certificate(const std::vector<double>& chi_grid, int sweep_samples,
                                            std::uint64_t seed) {
  std::array<Ket, 3> f{pgm_basis_F(0), pgm_basis_F(1), pgm_basis_F(2)};
  const Ket psi = singlet();

  std::vector<NogoChiReport> reports;
  for (double chi : chi_grid) {
    if (chi <= 1.0 / 3.0 + 1e-6) throw std::invalid_argument("nogo certificate requires chi > 1/3 + 1e-6");
    NogoChiReport rep;
    rep.chi = chi;

    // Closed-form route. For s > 1/3 the j = 0 commutator identity needs
    // chi <= 2/3 - s < 1/3; for s < 1/3 each of the three cyclic identities
    // needs a_j >= 2/3 - s, exceeding the available prior mass. Both margins
    // are scanned on a dense s-grid; the infimum of each is chi - 1/3.
    double m_above = 1e300, m_below = 1e300;
    const int ns = 10000;
    for (int k = 0; k <= ns; ++k) {
      const double s = static_cast<double>(k) / ns;  // s in [0, 1]
      if (s > 1.0 / 3.0) m_above = std::min(m_above, chi - (2.0 / 3.0 - s));
      if (s < 1.0 / 3.0) m_below = std::min(m_below, 2.0 * (2.0 / 3.0 - s) - (1.0 - chi));
    }
    rep.margin_s_above = m_above;
    rep.margin_s_below = m_below;
    // At s = 1/3 the commutator identities are vacuous and Hadamard's
    // inequality turns condition (iii) into sep_rhs_bound = 1.
    rep.margin_center = slice_min_margin(chi);

    rep.contradiction = rep.margin_s_above > 1e-13 && rep.margin_s_below > 1e-13 && rep.margin_center > 1e-13;

    // Independent empirical witness: random product operators normalized to
    // condition (i) never satisfy conditions (ii) and (iii) simultaneously.
    Rng rng(seed);
    double min_dev = 1e300;
    int used = 0;
    for (int it = 0; it < sweep_samples; ++it) {
      const CMat a = rng.random_psd(2);
      const CMat b = rng.random_psd(2);
      CMat e = tensor(a, b);
      double tsum = 0.0;
      for (int i = 0; i < 3; ++i) tsum += inner(f[i], e * f[i]).real();
      if (tsum < 1e-12) continue;
      e *= Complex(1.0 / tsum, 0.0);
      const double dete = det(e).real();
      if (dete <= 1e-14) continue;  // sweep restricted to full-rank samples
      double t[3];
      for (int i = 0; i < 3; ++i) t[i] = inner(f[i], e * f[i]).real();
      // Condition (iii) residual via the Cramer/adjugate route:
      // sum_i C(F'_i) / C(Psi') - 1 for the product operator e.
      const double adj_psi = inner(psi, adjugate(e) * psi).real();
      const double standin = (adj_psi / std::sqrt(dete)) * (1.0 / t[0] + 1.0 / t[1] + 1.0 / t[2]) / 3.0 - 1.0;
      const double dev = std::max(std::abs(t[0] - chi), std::abs(standin));
      min_dev = std::min(min_dev, dev);
      ++used;
    }
    rep.sweep_min_deviation = min_dev;
    rep.sweep_samples = used;
    rep.contradiction = rep.contradiction && min_dev > 1e-6;

    reports.push_back(rep);
  }
  return reports;
}

}  // namespace trinelab

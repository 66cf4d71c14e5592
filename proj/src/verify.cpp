#include "trinelab/verify.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>

#include "trinelab/locc.hpp"
#include "trinelab/nogo.hpp"
#include "trinelab/rng.hpp"
#include "trinelab/separability.hpp"

namespace trinelab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

Povm maybe_corrupted_pgm(const VerifyOptions& opt) {
  Povm p = pgm(double_trine());
  if (opt.corrupt_pgm) p.elements[0](0, 0) += 1e-3;
  return p;
}

using Criterion = std::function<CriterionResult(const VerifyOptions&)>;

CriterionResult c1_global_optimum(const VerifyOptions& opt) {
  const double closed = 0.5 - std::sqrt(2.0) / 3.0;
  const double err = error_probability(double_trine(), maybe_corrupted_pgm(opt));
  const double diff = std::abs(err - closed);
  return {1, "global optimum equals 1/2 - sqrt(2)/3", diff <= 1e-12,
          fmt("error=%.17g closed_form=%.17g |diff|=%.3g (tol 1e-12)", err, closed, diff)};
}

CriterionResult c2_sep_attains_global(const VerifyOptions&) {
  const double closed = 0.5 - std::sqrt(2.0) / 3.0;
  const Povm sep = separable_pgm();
  const double err = error_probability(double_trine(), sep);
  bool ok = std::abs(err - closed) <= 1e-12;

  double worst_conc = 0.0, worst_decomp = 0.0;
  bool all_ppt = true;
  for (int i = 0; i < 3; ++i) {
    const SeparabilityReport rep = ppt_separable(sep.elements[i]);
    all_ppt = all_ppt && rep.is_ppt;
    const Ket f = pgm_basis_F(i);
    const Ket phip = f + std::sqrt(1.0 / 3.0) * singlet();
    const Ket phim = f - std::sqrt(1.0 / 3.0) * singlet();
    worst_conc = std::max({worst_conc, concurrence(phip.normalized()), concurrence(phim.normalized())});
    const CMat decomp = 0.5 * (projector(phip) + projector(phim));
    worst_decomp = std::max(worst_decomp, (decomp - sep.elements[i]).max_abs());
  }
  ok = ok && all_ppt && worst_conc <= 1e-12 && worst_decomp <= 1e-12;
  return {2, "separable POVM attains the global optimum", ok,
          fmt("error=%.17g |diff|=%.3g ppt=%d max_conc(phi+-)=%.3g decomp_resid=%.3g", err,
              std::abs(err - closed), all_ppt ? 1 : 0, worst_conc, worst_decomp)};
}

CriterionResult c3_one_way_optimum(const VerifyOptions&) {
  const double closed = 0.5 - std::sqrt(3.0) / 4.0;
  const OneWayOptimum opt1 = one_way_optimum();
  const bool ok = std::abs(opt1.error - closed) <= 1e-10 &&
                  std::abs(opt1.direction.theta + kPi / 6.0) <= 1e-6 && std::abs(opt1.direction.phi) <= 1e-6;
  return {3, "one-way optimum equals 1/2 - sqrt(3)/4 at theta=-pi/6, phi=0", ok,
          fmt("error=%.17g theta=%.9g phi=%.9g closed_form=%.17g", opt1.error, opt1.direction.theta,
              opt1.direction.phi, closed)};
}

CriterionResult c4_two_way_beats_one_way(const VerifyOptions&) {
  const double one_way = one_way_optimum().error;
  const TwoWayOptimum two = two_way_optimum();
  const double at_one = two_way_error(1.0);
  const bool ok = two.error >= 6.42e-2 && two.error <= 6.52e-2 && (one_way - two.error) >= 2e-3 &&
                  std::abs(at_one - one_way) <= 1e-12;
  return {4, "two-way optimum in [6.42e-2, 6.52e-2], beats one-way by >= 2e-3", ok,
          fmt("two_way=%.17g at p*=%.9g; one_way=%.17g; gap=%.6g; |two_way(1)-one_way|=%.3g", two.error,
              two.p_star, one_way, one_way - two.error, std::abs(at_one - one_way))};
}

CriterionResult c5_strict_chain(const VerifyOptions& opt) {
  const double v1 = error_probability(double_trine(), maybe_corrupted_pgm(opt));
  const double v4 = two_way_optimum().error;
  const double v3 = one_way_optimum().error;
  const bool ok = (v4 - v1) > 1e-3 && (v3 - v4) > 1e-3;
  return {5, "strict chain: global < two-way < one-way with margins > 1e-3", ok,
          fmt("global=%.9g two_way=%.9g one_way=%.9g margins=(%.4g, %.4g)", v1, v4, v3, v4 - v1, v3 - v4)};
}

CriterionResult c6_lemma1_oracle(const VerifyOptions& opt) {
  Rng rng(opt.seed);
  int n_flat = 0, n_sqrt = 0;
  double worst = 0.0;
  for (int it = 0; it < 1000; ++it) {
    double p[3];
    double sum = 0.0;
    for (double& x : p) sum += (x = rng.uniform() + 1e-12);
    for (double& x : p) x /= sum;
    p[0] = 1.0 - p[1] - p[2];  // exact unit sum
    const Ket k0 = rng.random_ket(2), k1 = rng.random_ket(2), k2 = rng.random_ket(2);

    const double lem = lemma1_min_error(p[0], p[1], p[2], k0, k1, k2);
    const double hel =
        helstrom_binary(p[0] * projector(k0), p[1] * projector(k1) + p[2] * projector(k2));
    worst = std::max(worst, std::abs(lem - hel));

    const CMat delta = p[0] * projector(k0) - p[1] * projector(k1) - p[2] * projector(k2);
    (det(delta).real() > 1e-14 ? n_flat : n_sqrt)++;
  }
  const bool ok = worst <= 1e-10 && n_flat >= 50 && n_sqrt >= 50;
  return {6, "lemma vs trace-norm Helstrom over 1000 random triples, both det branches", ok,
          fmt("worst=%.3g (tol 1e-10), det>0 branch: %d, det<=0 branch: %d", worst, n_flat, n_sqrt)};
}

CriterionResult c7_basis_extraction(const VerifyOptions& opt) {
  try {
    const WeightedEnsemble dt = double_trine();
    const auto basis_pgm = extract_optimal_basis(dt, maybe_corrupted_pgm(opt));
    const auto basis_sep = extract_optimal_basis(dt, separable_pgm());
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      const Ket f = pgm_basis_F(i);
      worst = std::max(worst, 1.0 - std::abs(inner(basis_pgm[i], f)));
      worst = std::max(worst, 1.0 - std::abs(inner(basis_sep[i], f)));
      worst = std::max(worst, 1.0 - std::abs(inner(basis_pgm[i], basis_sep[i])));
    }
    return {7, "optimal-basis extraction recovers {F_i} from both optimal POVMs", worst <= 1e-10,
            fmt("worst 1-|overlap| = %.3g (tol 1e-10)", worst)};
  } catch (const std::exception& ex) {
    return {7, "optimal-basis extraction recovers {F_i} from both optimal POVMs", false,
            fmt("exception: %s", ex.what())};
  }
}

CriterionResult c8_protocol_engine(const VerifyOptions&) {
  double worst_err = 0.0, worst_prob = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double p = static_cast<double>(k) / 100.0;
    const SimulationResult sim = simulate_protocol(two_way_protocol_tree(p), double_trine());
    worst_err = std::max(worst_err, std::abs(sim.error - two_way_error(p)));
    double total = 0.0;
    for (const BranchState& leaf : sim.leaves) total += leaf.path_probability;
    worst_prob = std::max(worst_prob, std::abs(total - 1.0));
  }
  const bool ok = worst_err <= 1e-10 && worst_prob <= 1e-10;
  return {8, "protocol engine matches the closed form at 101 strengths", ok,
          fmt("worst |engine-closed|=%.3g, worst |sum path_prob - 1|=%.3g (tol 1e-10)", worst_err, worst_prob)};
}

CriterionResult c9_nogo_identities(const VerifyOptions& opt) {
  Rng rng(opt.seed);
  std::string detail;
  bool ok = true;

  // (a) residual is proportional to the closed form.
  const double kconst = commutator_proportionality_constant();
  double worst_rel = 0.0;
  for (int it = 0; it < 1000; ++it) {
    HaltingOperator h;
    h.s = 2.0 * rng.uniform();
    double sum = 0.0;
    for (double& x : h.a) sum += (x = rng.uniform() + 1e-12);
    for (double& x : h.a) x /= sum;
    h.a[0] = 1.0 - h.a[1] - h.a[2];
    for (Complex& z : h.b) z = 0.5 * rng.cnormal();
    const double res = commutator_residual(build_E(h)).real();
    const double cf = kconst * commutator_closed_form(h);
    const double denom = std::max(std::abs(res), std::abs(cf));
    if (denom > 1e-12) worst_rel = std::max(worst_rel, std::abs(res - cf) / denom);
  }
  ok = ok && worst_rel <= 1e-9;
  detail += fmt("prop_const=%.12g worst_rel=%.3g; ", kconst, worst_rel);

  // (b) the residual vanishes on products.
  double worst_prod = 0.0;
  for (int it = 0; it < 500; ++it) {
    CMat e = tensor(rng.random_psd(2), rng.random_psd(2));
    e *= Complex(1.0 / e.trace().real(), 0.0);
    worst_prod = std::max(worst_prod, std::abs(commutator_residual(e)));
  }
  ok = ok && worst_prod <= 1e-12;
  detail += fmt("product_resid=%.3g; ", worst_prod);

  // (c) simplex bound: >= 1 everywhere, minimized only at the center.
  double grid_min = 1e300, far_min = 1e300;
  double min_a0 = 0.0, min_a1 = 0.0;
  const double step = 0.005;
  for (int i = 1; i <= 198; ++i)
    for (int j = 1; j <= 199 - i; ++j) {
      const double a0 = i * step, a1 = j * step, a2 = 1.0 - a0 - a1;
      const double v = sep_rhs_bound(a0, a1, a2);
      if (v < grid_min) {
        grid_min = v;
        min_a0 = a0;
        min_a1 = a1;
      }
      const double dist = std::max({std::abs(a0 - 1.0 / 3.0), std::abs(a1 - 1.0 / 3.0), std::abs(a2 - 1.0 / 3.0)});
      if (dist > 0.006) far_min = std::min(far_min, v);
    }
  const double center = sep_rhs_bound(1.0 / 3.0, 1.0 / 3.0, 1.0 - 2.0 / 3.0);
  const bool minimizer_at_center = std::abs(min_a0 - 1.0 / 3.0) <= 0.006 && std::abs(min_a1 - 1.0 / 3.0) <= 0.006;
  ok = ok && grid_min >= 1.0 - 1e-12 && minimizer_at_center && far_min > grid_min &&
       std::abs(center - 1.0) <= 1e-12;
  detail += fmt("grid_min=%.12g at (%.3f,%.3f), center=%.15g; ", grid_min, min_a0, min_a1, center);

  // (d) adjugate identity on full-rank operators of the halting form.
  double worst_adj = 0.0;
  int n_adj = 0;
  while (n_adj < 500) {
    HaltingOperator h;
    h.s = 0.2 + 2.0 * rng.uniform();
    double sum = 0.0;
    for (double& x : h.a) sum += (x = rng.uniform() + 0.05);
    for (double& x : h.a) x /= sum;
    h.a[0] = 1.0 - h.a[1] - h.a[2];
    for (Complex& z : h.b) z = 0.3 * rng.cnormal();
    const CMat e = build_E(h);
    if (std::abs(det(e)) < 1e-6) continue;
    const Complex lhs = inner(singlet(), adjugate(e) * singlet());
    Complex rhs = 1.0;
    for (int i = 0; i < 3; ++i) rhs *= inner(pgm_basis_F(i), e * pgm_basis_F(i));
    worst_adj = std::max(worst_adj, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-12));
    ++n_adj;
  }
  ok = ok && worst_adj <= 1e-9;
  detail += fmt("adjugate_rel=%.3g; ", worst_adj);

  // (e) certificate over the chi grid.
  bool all_contra = true;
  for (const NogoChiReport& rep : nogo_certificate({0.34, 0.4, 0.5, 0.75, 1.0}, 10000, opt.seed))
    all_contra = all_contra && rep.contradiction;
  ok = ok && all_contra;
  detail += fmt("certificate=%s", all_contra ? "contradiction for all chi" : "FAILED");

  return {9, "no-go identities: commutator, products, simplex bound, adjugate, certificate", ok, detail};
}

CriterionResult c10_formula_consistency(const VerifyOptions&) {
  double worst_diff = 0.0, worst_det = -1e300;
  for (int i = 0; i < 100; ++i) {
    const double th = -kPi / 6.0 + (kPi / 3.0) * i / 99.0;
    for (int j = 0; j < 100; ++j) {
      const double ph = 2.0 * kPi * j / 100.0;
      const BranchErrorForms f = one_way_branch_error_forms({th, ph});
      worst_diff = std::max(worst_diff, std::abs(f.via_posterior - f.via_trig));
      const auto p = bob_posterior({th, ph});
      const CMat delta = p[0] * projector(trine_state(0)) - p[1] * projector(trine_state(1)) -
                         p[2] * projector(trine_state(2));
      worst_det = std::max(worst_det, det(delta).real());
    }
  }
  const bool ok = worst_diff <= 1e-12 && worst_det <= 1e-12;
  return {10, "branch-error forms agree and det(Delta) stays nonpositive on the grid", ok,
          fmt("worst |form diff|=%.3g (tol 1e-12), max det=%.3g (tol 1e-12)", worst_diff, worst_det)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance_criteria(const VerifyOptions& opt) {
  const Criterion criteria[] = {c1_global_optimum,  c2_sep_attains_global, c3_one_way_optimum,
                                c4_two_way_beats_one_way, c5_strict_chain,  c6_lemma1_oracle,
                                c7_basis_extraction, c8_protocol_engine,   c9_nogo_identities,
                                c10_formula_consistency};
  std::vector<CriterionResult> results;
  for (const Criterion& c : criteria) {
    try {
      results.push_back(c(opt));
    } catch (const std::exception& ex) {
      CriterionResult r;
      r.id = static_cast<int>(results.size()) + 1;
      r.name = "criterion raised an exception";
      r.passed = false;
      r.detail = ex.what();
      results.push_back(r);
    }
  }
  return results;
}

HeadlineNumbers headline_numbers() {
  HeadlineNumbers h;
  h.global_error = error_probability(double_trine(), pgm(double_trine()));
  h.sep_error = error_probability(double_trine(), separable_pgm());
  h.two_way_error = two_way_optimum().error;
  h.one_way_error = one_way_optimum().error;
  return h;
}

}  // namespace trinelab

#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "trinelab/min_error.hpp"
#include "trinelab/separability.hpp"

using namespace trinelab;
using trinelab::test::mat_diff;

namespace {

WeightedEnsemble two_state(double w0, const Ket& a, const Ket& b) {
  WeightedEnsemble e;
  e.items.push_back({w0, a});
  e.items.push_back({1.0 - w0, b});
  return e;
}

Povm uniform_povm(int dim, int count) {
  Povm p;
  p.closure = CMat::identity(dim);
  for (int i = 0; i < count; ++i) p.elements.push_back((1.0 / count) * CMat::identity(dim));
  return p;
}

// Random POVM: conjugate a random PSD list by the inverse square root of its sum.
Povm random_povm(Rng& rng, int dim, int count) {
  std::vector<CMat> raw;
  CMat sum(dim);
  for (int i = 0; i < count; ++i) {
    raw.push_back(rng.random_psd(dim));
    sum += raw.back();
  }
  const CMat t = psd_inv_sqrt_on_support(sum, 1e-9);
  Povm p;
  p.closure = support_projector(sum, 1e-9);
  for (const CMat& a : raw) p.elements.push_back(t * a * t);
  return p;
}

}  // namespace

TEST_SUITE("min_error") {
  TEST_CASE("error probability closed cases") {
    const Ket e0 = Ket::basis(2, 0), e1 = Ket::basis(2, 1);
    Povm proj;
    proj.closure = CMat::identity(2);
    proj.elements = {projector(e0), projector(e1)};
    CHECK(error_probability(two_state(0.5, e0, e1), proj) <= 1e-15);

    const WeightedEnsemble dt = double_trine();
    CHECK(error_probability(dt, pgm(dt)) ==
          doctest::Approx(0.5 - std::sqrt(2.0) / 3.0).epsilon(1e-14));
    CHECK(error_probability(dt, uniform_povm(4, 3)) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

    CHECK_THROWS_AS(error_probability(dt, uniform_povm(4, 2)), std::invalid_argument);
  }

  TEST_CASE("error probability is affine in the POVM") {
    Rng rng(31);
    const WeightedEnsemble dt = double_trine();
    for (int it = 0; it < 20; ++it) {
      const Povm a = random_povm(rng, 4, 3), b = random_povm(rng, 4, 3);
      const double lam = rng.uniform();
      Povm mix;
      mix.closure = lam * a.closure + (1.0 - lam) * b.closure;
      for (int i = 0; i < 3; ++i) mix.elements.push_back(lam * a.elements[i] + (1.0 - lam) * b.elements[i]);
      const double direct = error_probability(dt, mix);
      const double mixed = lam * error_probability(dt, a) + (1.0 - lam) * error_probability(dt, b);
      CHECK(std::abs(direct - mixed) <= 1e-12);
    }
  }

  TEST_CASE("Helstrom bound closed cases") {
    const CMat quarter = 0.25 * CMat::identity(2);
    CHECK(helstrom_binary(quarter, quarter) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(helstrom_binary(0.5 * projector(Ket::basis(2, 0)), 0.5 * projector(Ket::basis(2, 1))) <= 1e-15);

    const double expect = 0.5 * (1.0 - std::sqrt(1.0 - 0.25));
    CHECK(helstrom_binary(0.5 * projector(trine_state(0)), 0.5 * projector(trine_state(1))) ==
          doctest::Approx(expect).epsilon(1e-13));
    CHECK(expect == doctest::Approx(0.5 - std::sqrt(3.0) / 4.0).epsilon(1e-15));

    CHECK_THROWS_AS(helstrom_binary(CMat::identity(2), CMat::identity(2)), std::invalid_argument);
  }

  TEST_CASE("Helstrom lower-bounds every two-element POVM") {
    Rng rng(37);
    const Ket a = rng.random_ket(2), b = rng.random_ket(2);
    const double w = 0.3;
    const WeightedEnsemble e = two_state(w, a, b);
    const double bound = helstrom_binary(w * projector(a), (1.0 - w) * projector(b));
    for (int it = 0; it < 500; ++it) {
      const Povm p = random_povm(rng, 2, 2);
      CHECK(error_probability(e, p) >= bound - 1e-10);
    }
  }

  TEST_CASE("lemma closed cases") {
    CHECK(lemma1_min_error(0.5, 0.5, 0.0, trine_state(0), trine_state(1), trine_state(2)) ==
          doctest::Approx(0.5 - std::sqrt(3.0) / 4.0).epsilon(1e-14));
    CHECK(lemma1_min_error(1.0, 0.0, 0.0, trine_state(0), trine_state(1), trine_state(2)) <= 1e-15);
    CHECK_THROWS_AS(lemma1_min_error(0.5, 0.2, 0.2, trine_state(0), trine_state(1), trine_state(2)),
                    std::invalid_argument);
  }

  TEST_CASE("lemma matches the trace-norm oracle on both det branches") {
    Rng rng(1234);
    int flat = 0, root = 0;
    for (int it = 0; it < 1000; ++it) {
      double p[3];
      double sum = 0.0;
      for (double& x : p) sum += (x = rng.uniform() + 1e-12);
      for (double& x : p) x /= sum;
      p[0] = 1.0 - p[1] - p[2];
      const Ket k0 = rng.random_ket(2), k1 = rng.random_ket(2), k2 = rng.random_ket(2);
      const double viaLemma = lemma1_min_error(p[0], p[1], p[2], k0, k1, k2);
      const double viaNorm =
          helstrom_binary(p[0] * projector(k0), p[1] * projector(k1) + p[2] * projector(k2));
      CHECK(std::abs(viaLemma - viaNorm) <= 1e-10);
      const CMat delta = p[0] * projector(k0) - p[1] * projector(k1) - p[2] * projector(k2);
      (det(delta).real() > 1e-14 ? flat : root)++;
    }
    CHECK(flat >= 50);
    CHECK(root >= 50);
  }

  TEST_CASE("pgm on orthonormal and singleton ensembles") {
    const Ket e0 = Ket::basis(2, 0), e1 = Ket::basis(2, 1);
    const Povm p = pgm(two_state(0.5, e0, e1));
    CHECK(mat_diff(p.elements[0], projector(e0)) <= 1e-12);
    CHECK(mat_diff(p.elements[1], projector(e1)) <= 1e-12);

    WeightedEnsemble single;
    single.items.push_back({1.0, trine_state(1)});
    const Povm ps = pgm(single);
    CHECK(mat_diff(ps.elements[0], projector(trine_state(1))) <= 1e-12);
    CHECK(mat_diff(ps.closure, projector(trine_state(1))) <= 1e-12);
  }

  TEST_CASE("pgm on the double trine projects onto the F basis") {
    const WeightedEnsemble dt = double_trine();
    const Povm p = pgm(dt);
    const PovmCheck chk = validate_povm(p);
    CHECK(chk.ok());
    // closure is the projector onto the span (singlet excluded)
    CHECK(mat_diff(p.closure, CMat::identity(4) - projector(singlet())) <= 1e-10);
    for (int i = 0; i < 3; ++i) {
      const Ket f = pgm_basis_F(i);
      CHECK(inner(f, p.elements[i] * f).real() == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(mat_diff(p.elements[i], projector(f)) <= 1e-10);
    }
  }

  TEST_CASE("optimality verifier") {
    const WeightedEnsemble dt = double_trine();
    CHECK(holevo_optimality_check(dt, pgm(dt)).is_optimal);
    CHECK(holevo_optimality_check(dt, separable_pgm()).is_optimal);
    CHECK_FALSE(holevo_optimality_check(dt, uniform_povm(4, 3)).is_optimal);

    const Ket e0 = Ket::basis(2, 0), e1 = Ket::basis(2, 1);
    Povm proj;
    proj.closure = CMat::identity(2);
    proj.elements = {projector(e0), projector(e1)};
    const OptimalityReport rep = holevo_optimality_check(two_state(0.5, e0, e1), proj);
    CHECK(rep.is_optimal);
    CHECK(std::abs(rep.min_eigenvalue_margin) <= 1e-12);
  }

  TEST_CASE("optimal-basis extraction") {
    const WeightedEnsemble dt = double_trine();
    const auto from_pgm = extract_optimal_basis(dt, pgm(dt));
    const auto from_sep = extract_optimal_basis(dt, separable_pgm());
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(inner(from_pgm[i], pgm_basis_F(i))) == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(std::abs(inner(from_sep[i], pgm_basis_F(i))) == doctest::Approx(1.0).epsilon(1e-10));
    }

    const Ket e0 = Ket::basis(2, 0), e1 = Ket::basis(2, 1);
    Povm proj;
    proj.closure = CMat::identity(2);
    proj.elements = {projector(e0), projector(e1)};
    const auto basis = extract_optimal_basis(two_state(0.5, e0, e1), proj);
    CHECK(trinelab::test::ket_diff(basis[0], e0) <= 1e-12);
    CHECK(trinelab::test::ket_diff(basis[1], e1) <= 1e-12);

    // a POVM failing the optimality check is rejected
    CHECK_THROWS_AS(extract_optimal_basis(dt, uniform_povm(4, 3)), std::invalid_argument);
    // linearly dependent states are rejected
    WeightedEnsemble dep;
    dep.items.push_back({0.5, e0});
    dep.items.push_back({0.5, e0});
    CHECK_THROWS_AS(extract_optimal_basis(dep, proj), std::invalid_argument);
  }

  TEST_CASE("every optimum-achieving mixture still distinguishes the F basis") {
    const Povm a = pgm(double_trine());
    const Povm b = separable_pgm();
    for (double lam : {0.0, 0.25, 0.6, 1.0}) {
      for (int i = 0; i < 3; ++i) {
        const CMat el = lam * a.elements[i] + (1.0 - lam) * b.elements[i];
        for (int j = 0; j < 3; ++j) {
          const double target = (i == j) ? 1.0 : 0.0;
          const Ket f = pgm_basis_F(j);
          CHECK(std::abs(inner(f, el * f).real() - target) <= 1e-6);
        }
      }
    }
  }

  TEST_CASE("povm metric: closed cases and axioms") {
    const Ket e0 = Ket::basis(2, 0), e1 = Ket::basis(2, 1);
    Povm p, q;
    p.closure = q.closure = CMat::identity(2);
    p.elements = {projector(e0), projector(e1)};
    q.elements = {projector(e1), projector(e0)};
    CHECK(povm_distance(p, p) == 0.0);
    CHECK(povm_distance(p, q) == doctest::Approx(2.0).epsilon(1e-13));

    Rng rng(41);
    for (int it = 0; it < 50; ++it) {
      const Povm x = random_povm(rng, 2, 2), y = random_povm(rng, 2, 2), z = random_povm(rng, 2, 2);
      const double dxy = povm_distance(x, y), dyz = povm_distance(y, z), dxz = povm_distance(x, z);
      CHECK(dxz <= dxy + dyz + 1e-10);
      CHECK(std::abs(povm_distance(x, y) - povm_distance(y, x)) <= 1e-12);

      // pure-element inequality: 1/2 ||Pi - |phi><phi| ||_1 >= 1 - <phi|Pi|phi>
      const Ket phi = rng.random_ket(2);
      const double lhs = 0.5 * trace_norm(x.elements[0] - projector(phi));
      const double rhs = 1.0 - inner(phi, x.elements[0] * phi).real();
      CHECK(lhs >= rhs - 1e-10);
    }
    Povm bad = p;
    bad.elements.pop_back();
    CHECK_THROWS_AS(povm_distance(p, bad), std::invalid_argument);
  }
}

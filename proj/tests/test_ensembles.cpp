#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "trinelab/ensembles.hpp"

using namespace trinelab;
using trinelab::test::ket_diff;
using trinelab::test::mat_diff;

TEST_SUITE("ensembles") {
  TEST_CASE("trine states: amplitudes, overlaps, covariance") {
    CHECK(ket_diff(trine_state(0), Ket::basis(2, 0)) == 0.0);
    for (int i = 0; i < 3; ++i) {
      const Ket s = trine_state(i);
      CHECK(std::abs(s.norm() - 1.0) <= 1e-15);
      CHECK(std::abs(s[0].real() - std::cos(i * M_PI / 3.0)) <= 1e-15);
      CHECK(std::abs(s[1].real() - std::sin(i * M_PI / 3.0)) <= 1e-15);
      for (int j = i + 1; j < 3; ++j)
        CHECK(std::norm(inner(trine_state(i), trine_state(j))) == doctest::Approx(0.25).epsilon(1e-13));
    }
    // Overlap sign pattern produced by the pi/3 rotation convention.
    CHECK(inner(trine_state(0), trine_state(1)).real() == doctest::Approx(0.5));
    CHECK(inner(trine_state(1), trine_state(2)).real() == doctest::Approx(0.5));
    CHECK(inner(trine_state(0), trine_state(2)).real() == doctest::Approx(-0.5));

    CMat cov(2);
    for (int i = 0; i < 3; ++i) cov += projector(trine_state(i));
    CHECK(mat_diff(cov, 1.5 * CMat::identity(2)) <= 1e-12);
    CHECK_THROWS_AS(trine_state(3), std::invalid_argument);
  }

  TEST_CASE("trine perpendiculars complete each qubit basis") {
    CHECK(ket_diff(trine_perp(0), Ket::basis(2, 1)) == 0.0);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(inner(trine_state(i), trine_perp(i))) <= 1e-15);
      CHECK(mat_diff(projector(trine_state(i)) + projector(trine_perp(i)), CMat::identity(2)) <= 1e-15);
    }
    CHECK_THROWS_AS(trine_perp(-1), std::invalid_argument);
  }

  TEST_CASE("double trine: priors, singlet orthogonality, pair overlap") {
    const WeightedEnsemble dt = double_trine();
    dt.validate();
    REQUIRE(dt.size() == 3);
    const Ket psi = singlet();
    for (const auto& item : dt.items) {
      CHECK(item.prior == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
      CHECK(std::abs(inner(psi, item.state)) <= 1e-15);
    }
    const Complex ov = inner(dt.items[0].state, dt.items[1].state);
    CHECK(std::norm(ov) == doctest::Approx(1.0 / 16.0).epsilon(1e-13));
    // oracle: the two-qubit overlap is the square of the single-qubit one
    const Complex single = inner(trine_state(0), trine_state(1));
    CHECK(std::abs(ov - single * single) <= 1e-15);
  }

  TEST_CASE("singlet amplitudes and entanglement") {
    const Ket psi = singlet();
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(psi[0] == Complex(0.0, 0.0));
    CHECK(psi[1] == Complex(r, 0.0));
    CHECK(psi[2] == Complex(-r, 0.0));
    CHECK(psi[3] == Complex(0.0, 0.0));
    CHECK(std::abs(psi.norm() - 1.0) <= 1e-15);
    CHECK(concurrence(psi) == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("PGM basis: orthonormal completion of the singlet") {
    const Ket psi = singlet();
    CMat resolution = projector(psi);
    for (int i = 0; i < 3; ++i) {
      const Ket f = pgm_basis_F(i);
      CHECK(std::abs(inner(psi, f)) <= 1e-13);
      CHECK(concurrence(f) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
      for (int j = 0; j < 3; ++j) {
        const double target = (i == j) ? 1.0 : 0.0;
        CHECK(std::abs(std::abs(inner(pgm_basis_F(i), pgm_basis_F(j))) - target) <= 1e-12);
      }
      resolution += projector(f);
    }
    CHECK(mat_diff(resolution, CMat::identity(4)) <= 1e-12);
    CHECK_THROWS_AS(pgm_basis_F(5), std::invalid_argument);
  }

  TEST_CASE("PGM basis covariance: F_i = (U^i x U^i) F_0 exactly") {
    const CMat u = trine_rotation();
    const CMat uu = tensor(u, u);
    Ket f = pgm_basis_F(0);
    for (int i = 1; i < 3; ++i) {
      f = uu * f;
      CHECK(ket_diff(f, pgm_basis_F(i)) <= 1e-12);
    }
  }

  TEST_CASE("concurrence: products, singlet, local-unitary invariance") {
    CHECK(concurrence(Ket::basis(4, 0)) == 0.0);
    Rng rng(5);
    for (int it = 0; it < 50; ++it) {
      const Ket v = rng.random_ket(4);
      const CMat w1 = rng.random_unitary(2), w2 = rng.random_unitary(2);
      const Ket rotated = tensor(w1, w2) * v;
      CHECK(std::abs(concurrence(rotated) - concurrence(v)) <= 1e-12);
      // product states always at zero
      const Ket prod = tensor(rng.random_ket(2), rng.random_ket(2));
      CHECK(concurrence(prod) <= 1e-12);
    }
    CHECK_THROWS_AS(concurrence(Ket{2.0, 0.0, 0.0, 0.0}), std::invalid_argument);
  }

  TEST_CASE("filtered concurrence: identity filter and products") {
    Rng rng(17);
    const Ket v = rng.random_ket(4);
    CHECK(std::abs(filtered_concurrence(CMat::identity(2), CMat::identity(2), v) - concurrence(v)) <= 1e-12);
    const Ket prod = tensor(rng.random_ket(2), rng.random_ket(2));
    const CMat m = rng.random_psd(2), n = rng.random_psd(2);
    CHECK(filtered_concurrence(m, n, prod) <= 1e-12);
  }

  TEST_CASE("filtered concurrence agrees with explicit normalization") {
    Rng rng(29);
    for (int it = 0; it < 200; ++it) {
      CMat m(2), n(2);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          m(r, c) = rng.cnormal();
          n(r, c) = rng.cnormal();
        }
      const Ket v = rng.random_ket(4);
      const Ket filtered = tensor(m, n) * v;
      if (filtered.norm() < 1e-6) continue;
      const double direct = concurrence(filtered.normalized()) ;
      CHECK(std::abs(filtered_concurrence(m, n, v) - direct) <= 1e-10);
    }
  }

  TEST_CASE("degenerate filters are allowed until they annihilate") {
    const CMat rank1 = projector(Ket::basis(2, 0));  // det = 0
    const Ket psi = singlet();
    CHECK(filtered_concurrence(rank1, CMat::identity(2), psi) <= 1e-14);
    // (|0><0| x |0><0|) annihilates the singlet
    CHECK_THROWS_AS(filtered_concurrence(rank1, rank1, psi), std::invalid_argument);
  }

  TEST_CASE("ensemble validation") {
    WeightedEnsemble bad;
    bad.items.push_back({0.7, Ket::basis(2, 0)});
    bad.items.push_back({0.7, Ket::basis(2, 1)});
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.items[1].prior = -0.3;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.items[1].prior = 0.3;
    CHECK_NOTHROW(bad.validate());
  }
}

#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "trinelab/matrix.hpp"

using namespace trinelab;
using trinelab::test::ket_diff;
using trinelab::test::mat_diff;

namespace {

// Independent four-loop Kronecker oracle.
CMat kron_oracle(const CMat& a, const CMat& b) {
  CMat out(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = a(i / 2, j / 2) * b(i % 2, j % 2);
  return out;
}

const CMat kSigmaZ{{1.0, 0.0}, {0.0, -1.0}};

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("tensor identity and diagonal cases") {
    CHECK(mat_diff(tensor(CMat::identity(2), CMat::identity(2)), CMat::identity(4)) == 0.0);
    CMat expect(4);
    expect(0, 0) = 1.0;
    expect(1, 1) = 1.0;
    expect(2, 2) = -1.0;
    expect(3, 3) = -1.0;
    CHECK(mat_diff(tensor(kSigmaZ, CMat::identity(2)), expect) == 0.0);
  }

  TEST_CASE("tensor of basis projectors matches the Kronecker oracle") {
    const CMat p0 = projector(Ket::basis(2, 0));
    const CMat p1 = projector(Ket::basis(2, 1));
    const CMat t = tensor(p0, p1);
    CHECK(mat_diff(t, kron_oracle(p0, p1)) == 0.0);
    CHECK(mat_diff(t, projector(Ket::basis(4, 1))) == 0.0);  // |01> lives at index 1
  }

  TEST_CASE("tensor is bilinear and matches the oracle on random inputs") {
    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
      const CMat m = rng.random_hermitian(2), n = rng.random_hermitian(2), p = rng.random_hermitian(2);
      const Complex a = rng.cnormal();
      CHECK(mat_diff(tensor(a * m + n, p), a * tensor(m, p) + tensor(n, p)) <= 1e-12);
      CHECK(mat_diff(tensor(m, p), kron_oracle(m, p)) <= 1e-14);
    }
  }

  TEST_CASE("tensor rejects dimension mismatches") {
    CHECK_THROWS_AS(tensor(CMat::identity(4), CMat::identity(2)), std::invalid_argument);
    CHECK_THROWS_AS((void)CMat(3), std::invalid_argument);
  }

  TEST_CASE("eig of sigma_z") {
    const EigenPair ep = eig_hermitian(kSigmaZ);
    CHECK(ep.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ep.values[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ket_diff(ep.vectors[0], Ket::basis(2, 1)) <= 1e-14);
    CHECK(ket_diff(ep.vectors[1], Ket::basis(2, 0)) <= 1e-14);
  }

  TEST_CASE("eig of a rank-1 projector at dim 4") {
    const double r = 1.0 / std::sqrt(2.0);
    const Ket psi{0.0, r, -r, 0.0};
    const EigenPair ep = eig_hermitian(projector(psi));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(ep.values[k]) <= 1e-13);
    CHECK(ep.values[3] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(trinelab::test::phase_free_diff(ep.vectors[3], psi) <= 1e-12);
  }

  TEST_CASE("spectral reconstruction on 1000 random Hermitian 4x4") {
    Rng rng(42);
    double worst_recon = 0.0, worst_ortho = 0.0, worst_resid = 0.0;
    for (int it = 0; it < 1000; ++it) {
      const CMat h = rng.random_hermitian(4);
      const EigenPair ep = eig_hermitian(h);
      CMat recon(4);
      for (int k = 0; k < 4; ++k) {
        recon += ep.values[k] * projector(ep.vectors[k]);
        Ket resid = h * ep.vectors[k] - ep.values[k] * ep.vectors[k];
        worst_resid = std::max(worst_resid, resid.norm());
        for (int l = k + 1; l < 4; ++l)
          worst_ortho = std::max(worst_ortho, std::abs(inner(ep.vectors[k], ep.vectors[l])));
      }
      worst_recon = std::max(worst_recon, mat_diff(recon, h));
    }
    CHECK(worst_recon <= 1e-10);
    CHECK(worst_ortho <= 1e-10);
    CHECK(worst_resid <= 1e-10);
  }

  TEST_CASE("eig rejects non-Hermitian input") {
    CMat m(2);
    m(0, 1) = 1.0;  // nilpotent
    CHECK_THROWS_AS(eig_hermitian(m), std::invalid_argument);
  }

  TEST_CASE("trace norm basics") {
    CHECK(trace_norm(kSigmaZ) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(trace_norm(CMat::zero(2)) == 0.0);
    const CMat diff = 0.5 * projector(Ket::basis(2, 0)) - 0.5 * projector(Ket::basis(2, 1));
    CHECK(trace_norm(diff) == doctest::Approx(1.0).epsilon(1e-14));
    CMat m(2);
    m(1, 0) = 2.0;
    CHECK_THROWS_AS(trace_norm(m), std::invalid_argument);
  }

  TEST_CASE("trace norm satisfies the norm axioms") {
    Rng rng(7);
    for (int it = 0; it < 100; ++it) {
      const CMat a = rng.random_hermitian(4), b = rng.random_hermitian(4);
      const double s = rng.normal();
      CHECK(trace_norm(a) >= 0.0);
      CHECK(std::abs(trace_norm(s * a) - std::abs(s) * trace_norm(a)) <= 1e-10);
      CHECK(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-10);
    }
  }

  TEST_CASE("adjugate closed cases") {
    CHECK(mat_diff(adjugate(CMat::identity(4)), CMat::identity(4)) == 0.0);
    CMat d(4);
    const Complex a = 2.0, b = Complex(0.0, 3.0), c = -1.5, e = 0.25;
    d(0, 0) = a;
    d(1, 1) = b;
    d(2, 2) = c;
    d(3, 3) = e;
    const CMat adj = adjugate(d);
    CHECK(std::abs(adj(0, 0) - b * c * e) <= 1e-14);
    CHECK(std::abs(adj(1, 1) - a * c * e) <= 1e-14);
    CHECK(std::abs(adj(2, 2) - a * b * e) <= 1e-14);
    CHECK(std::abs(adj(3, 3) - a * b * c) <= 1e-14);
  }

  TEST_CASE("Cramer identity, including singular matrices") {
    Rng rng(13);
    for (int it = 0; it < 100; ++it) {
      CMat m(4);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = rng.cnormal();
      if (it % 3 == 0) {  // force a singular input: duplicate a row
        for (int c = 0; c < 4; ++c) m(3, c) = m(0, c);
      }
      const CMat lhs = m * adjugate(m);
      const CMat rhs = det(m) * CMat::identity(4);
      const double scale = std::max(1.0, lhs.max_abs());
      CHECK(mat_diff(lhs, rhs) / scale <= 1e-10);
      CHECK(mat_diff(adjugate(m) * m, rhs) / scale <= 1e-10);
    }
    CHECK_THROWS_AS(adjugate(CMat::identity(2)), std::invalid_argument);
  }

  TEST_CASE("partial contraction blocks") {
    CHECK(mat_diff(partial_contract_A(CMat::identity(4), 0, 0), CMat::identity(2)) == 0.0);
    CHECK(partial_contract_A(CMat::identity(4), 0, 1).max_abs() == 0.0);

    const double r = 1.0 / std::sqrt(2.0);
    const Ket psi{0.0, r, -r, 0.0};
    const CMat block = partial_contract_A(projector(psi), 0, 1);
    CMat expect(2);
    expect(1, 0) = -0.5;
    CHECK(mat_diff(block, expect) <= 1e-15);

    CHECK_THROWS_AS(partial_contract_A(CMat::identity(4), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(partial_contract_A(CMat::identity(2), 0, 0), std::invalid_argument);
  }

  TEST_CASE("partial contraction matches explicit slicing on random operators") {
    Rng rng(3);
    for (int it = 0; it < 20; ++it) {
      const CMat e = rng.random_hermitian(4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const CMat block = partial_contract_A(e, i, j);
          for (int b = 0; b < 2; ++b)
            for (int bp = 0; bp < 2; ++bp) CHECK(block(b, bp) == e(2 * i + b, 2 * j + bp));
        }
    }
  }

  TEST_CASE("spectral helpers: square root and support inverse") {
    Rng rng(23);
    for (int it = 0; it < 25; ++it) {
      const CMat p = rng.random_psd(4);
      const CMat s = psd_sqrt(p);
      CHECK(mat_diff(s * s, p) <= 1e-10);
      const CMat isq = psd_inv_sqrt_on_support(p);
      CHECK(mat_diff(isq * p * isq, support_projector(p)) <= 1e-8);
    }
  }
}

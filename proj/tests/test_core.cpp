#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lts/core.hpp"

using namespace lts;

namespace {

std::mt19937_64 rng(20240811);

Vec random_vec(int d) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(d);
  for (int i = 0; i < d; ++i) v[i] = cxd(g(rng), g(rng));
  return v / v.norm();
}

Mat random_hermitian(int d) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cxd(g(rng), g(rng));
  return 0.5 * (m + Mat(m.adjoint()));
}

DensityMatrix random_density(int d, std::vector<int> dims) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cxd(g(rng), g(rng));
  Mat rho = m * m.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix{std::move(rho), std::move(dims)};
}

StateVector bell_state() {
  Vec v = Vec::Zero(4);
  v[0] = v[3] = 1.0 / std::sqrt(2.0);
  return make_state(v, {2, 2});
}

}  // namespace

TEST_CASE("tensor products") {
  SECTION("|0> x |0> is e0 of dim 4") {
    const Vec v = tensor_product(basis_vector(2, 0), basis_vector(2, 0));
    REQUIRE(v.size() == 4);
    REQUIRE(std::abs(v[0] - cxd(1.0)) < 1e-15);
    REQUIRE(v.tail(3).cwiseAbs().maxCoeff() < 1e-15);
  }
  SECTION("identity_2 x identity_3 = identity_6") {
    REQUIRE((tensor_product(identity(2), identity(3)) - identity(6))
                .cwiseAbs()
                .maxCoeff() < 1e-15);
  }
  SECTION("(sigma_x x I)|00> = |10>") {
    const Mat op = tensor_product(pauli_x(), identity(2));
    const Vec out = op * tensor_product(basis_vector(2, 0), basis_vector(2, 0));
    REQUIRE((out - tensor_product(basis_vector(2, 1), basis_vector(2, 0)))
                .cwiseAbs()
                .maxCoeff() < 1e-15);
  }
  SECTION("norm multiplicative, dims concatenated") {
    const StateVector a{random_vec(2), {2}};
    const StateVector b{random_vec(3), {3}};
    const StateVector ab = tensor_product(a, b);
    REQUIRE(ab.dims == std::vector<int>{2, 3});
    REQUIRE(std::abs(ab.amplitudes.norm() - 1.0) < 1e-12);
  }
  SECTION("dimension overflow rejected") {
    REQUIRE_THROWS_AS(detail::checked_product({64, 65}), std::invalid_argument);
  }
}

TEST_CASE("partial trace") {
  SECTION("Bell state traces to identity/2") {
    const DensityMatrix rho = partial_trace(pure_density(bell_state()), {0});
    REQUIRE((rho.matrix - 0.5 * identity(2)).cwiseAbs().maxCoeff() < 1e-14);
  }
  SECTION("four-body diagonal weights p_i") {
    const Vec c = random_vec(16);
    const DensityMatrix rho =
        partial_trace(pure_density(make_state(c, {2, 2, 2, 2})), {0});
    double p0 = 0.0;
    for (int r = 0; r < 8; ++r) p0 += std::norm(c[r]);
    REQUIRE(std::abs(rho.matrix(0, 0).real() - p0) < 1e-12);
    REQUIRE(std::abs(rho.matrix.trace().real() - 1.0) < 1e-12);
  }
  SECTION("product state recovers its factor") {
    const DensityMatrix a = random_density(2, {2});
    const DensityMatrix b = random_density(3, {3});
    const DensityMatrix back = partial_trace(tensor_product(a, b), {0});
    REQUIRE((back.matrix - a.matrix).cwiseAbs().maxCoeff() < 1e-12);
  }
  SECTION("trace preserving and positive on random densities") {
    for (int k = 0; k < 100; ++k) {
      const DensityMatrix rho = random_density(6, {2, 3});
      const DensityMatrix red = partial_trace(rho, {1});
      REQUIRE(std::abs(red.matrix.trace().real() - 1.0) < 1e-12);
      Eigen::SelfAdjointEigenSolver<Mat> es(red.matrix, Eigen::EigenvaluesOnly);
      REQUIRE(es.eigenvalues().minCoeff() > -1e-12);
    }
  }
  SECTION("tracing wipes out a local unitary on the discarded side") {
    for (int k = 0; k < 20; ++k) {
      const DensityMatrix rho = random_density(4, {2, 2});
      const SpectralDecomposition hb = spectral_decompose(random_hermitian(2));
      const Mat v = embed_operator(propagator(hb, 0.7 + k), {1}, {2, 2});
      const DensityMatrix rotated{v * rho.matrix * v.adjoint(), {2, 2}};
      REQUIRE((partial_trace(rotated, {0}).matrix - partial_trace(rho, {0}).matrix)
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }
  }
  SECTION("empty or full keep set rejected") {
    const DensityMatrix rho = random_density(4, {2, 2});
    REQUIRE_THROWS_AS(partial_trace(rho, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(partial_trace(rho, {0, 1}), std::invalid_argument);
  }
}

TEST_CASE("spectral decomposition") {
  SECTION("sigma_z") {
    const SpectralDecomposition sd = spectral_decompose(pauli_z());
    REQUIRE(sd.levels() == 2);
    REQUIRE(sd.eigenvalues[0] == Catch::Approx(-1.0));
    REQUIRE(sd.eigenvalues[1] == Catch::Approx(1.0));
    REQUIRE(sd.degeneracies == std::vector<int>{1, 1});
  }
  SECTION("identity_4 clusters to a single degenerate level") {
    const SpectralDecomposition sd = spectral_decompose(identity(4));
    REQUIRE(sd.levels() == 1);
    REQUIRE(sd.degeneracies[0] == 4);
    REQUIRE(sd.eigenvalues[0] == Catch::Approx(1.0));
  }
  SECTION("random Hermitian reconstructs and projectors resolve identity") {
    const Mat h = random_hermitian(3);
    const SpectralDecomposition sd = spectral_decompose(h);
    Mat sum = Mat::Zero(3, 3);
    Mat rec = Mat::Zero(3, 3);
    for (std::size_t p = 0; p < sd.levels(); ++p) {
      sum += sd.projectors[p];
      rec += sd.eigenvalues[p] * sd.projectors[p];
      // idempotent and orthogonal
      REQUIRE((sd.projectors[p] * sd.projectors[p] - sd.projectors[p])
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
      for (std::size_t q = 0; q < p; ++q)
        REQUIRE((sd.projectors[p] * sd.projectors[q]).cwiseAbs().maxCoeff() < 1e-10);
    }
    REQUIRE((sum - identity(3)).cwiseAbs().maxCoeff() < 1e-10);
    REQUIRE((rec - h).cwiseAbs().maxCoeff() < 1e-10);
  }
  SECTION("non-Hermitian input rejected") {
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = 1.0;
    REQUIRE_THROWS_AS(spectral_decompose(m), std::invalid_argument);
  }
}

TEST_CASE("evolution") {
  const SpectralDecomposition h = spectral_decompose(0.5 * pauli_z());
  const Vec plus = (basis_vector(2, 0) + basis_vector(2, 1)) / std::sqrt(2.0);

  SECTION("t = 0 is the identity") {
    REQUIRE((evolve(plus, h, 0.0) - plus).cwiseAbs().maxCoeff() < 1e-15);
  }
  SECTION("eigenstate acquires a pure phase") {
    const Vec out = evolve(basis_vector(2, 0), h, 1.3);
    REQUIRE(std::abs(out[0] - std::exp(cxd(0.0, -0.5 * 1.3))) < 1e-14);
  }
  SECTION("qubit pi rotation orthogonalizes the superposition") {
    const Vec out = evolve(plus, h, 3.14159265358979323846);
    REQUIRE(std::abs((plus.adjoint() * out).value()) < 1e-12);
  }
  SECTION("norm preservation and U(t)U(-t) on random states") {
    const SpectralDecomposition hr = spectral_decompose(random_hermitian(5));
    for (int k = 0; k < 100; ++k) {
      const Vec psi = random_vec(5);
      const double t = 0.1 * (k + 1);
      const Vec fwd = evolve(psi, hr, t);
      REQUIRE(std::abs(fwd.norm() - 1.0) < 1e-12);
      REQUIRE((evolve(fwd, hr, -t) - psi).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("Schmidt decomposition") {
  SECTION("product state has a single coefficient 1") {
    const StateVector psi =
        tensor_product(StateVector{random_vec(2), {2}}, StateVector{random_vec(3), {3}});
    const auto terms = schmidt_decompose(psi, {0});
    REQUIRE(terms.size() == 1);
    REQUIRE(terms[0].coefficient == Catch::Approx(1.0));
  }
  SECTION("Bell state has coefficients 1/sqrt(2)") {
    const auto terms = schmidt_decompose(bell_state(), {0});
    REQUIRE(terms.size() == 2);
    REQUIRE(terms[0].coefficient == Catch::Approx(1.0 / std::sqrt(2.0)));
    REQUIRE(terms[1].coefficient == Catch::Approx(1.0 / std::sqrt(2.0)));
  }
  SECTION("reconstruction matches input on random bipartite states") {
    for (int k = 0; k < 100; ++k) {
      const StateVector psi{random_vec(6), {2, 3}};
      const auto terms = schmidt_decompose(psi, {0});
      double sq = 0.0;
      for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        REQUIRE(terms[i].coefficient >= terms[i + 1].coefficient);
      }
      for (const auto& t : terms) sq += t.coefficient * t.coefficient;
      REQUIRE(std::abs(sq - 1.0) < 1e-10);
      const StateVector rec = schmidt_reconstruct(terms, psi, {0});
      REQUIRE((rec.amplitudes - psi.amplitudes).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("construction validation") {
  SECTION("unnormalized state rejected") {
    Vec v = Vec::Zero(2);
    v[0] = 2.0;
    REQUIRE_THROWS_AS(make_state(v, {2}), std::invalid_argument);
    REQUIRE_NOTHROW(normalized_state(v, {2}));
  }
  SECTION("density matrix constraints enforced") {
    Mat m = 0.5 * identity(2);
    REQUIRE_NOTHROW(make_density(m, {2}));
    REQUIRE_THROWS_AS(make_density(identity(2), {2}), std::invalid_argument);
    Mat neg = Mat::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    REQUIRE_THROWS_AS(make_density(neg, {2}), std::invalid_argument);
  }
}

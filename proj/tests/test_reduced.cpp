#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lts/reduced.hpp"

using namespace lts;

namespace {

std::mt19937_64 rng(660088);

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

Mat random_merged(int rp, int rq) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat d(rp, rq);
  for (int p = 0; p < rp; ++p)
    for (int q = 0; q < rq; ++q) d(p, q) = cxd(g(rng), g(rng));
  return d / d.norm();
}

const std::vector<int> kDims{2, 2, 2, 2};

struct Instance {
  FourBodyAmplitudes amp;
  PairSchmidtData s12;
  PairSchmidtData s34;
  Mat d;
};

Instance random_instance(double t12, double t34) {
  const SpectralDecomposition h12 = spectral_decompose(random_hermitian(4));
  const SpectralDecomposition h34 = spectral_decompose(random_hermitian(4));
  PairSchmidtData s12 =
      pair_schmidt_from_evolution(h12, t12, 2, 2, correlated_seeds(2, 2));
  PairSchmidtData s34 =
      pair_schmidt_from_evolution(h34, t34, 2, 2, correlated_seeds(2, 2));
  Mat d = random_merged(2, 2);
  FourBodyAmplitudes amp = four_body_from_merged(d, s12, s34, kDims);
  return Instance{std::move(amp), std::move(s12), std::move(s34), std::move(d)};
}

}  // namespace

TEST_CASE("initial reduced states") {
  SECTION("product state reduces to a pure state") {
    Vec c = Vec::Zero(16);
    c[0] = 1.0;  // |0000>
    const FourBodyAmplitudes amp = make_four_body(c, kDims);
    const DensityMatrix rho = initial_reduced(amp, 0);
    REQUIRE(rho.matrix(0, 0).real() == Catch::Approx(1.0));
    REQUIRE((rho.matrix * rho.matrix - rho.matrix).cwiseAbs().maxCoeff() < 1e-14);
  }
  SECTION("uniform amplitudes give the maximally mixed qubit") {
    Vec c = Vec::Constant(16, cxd(0.25, 0.0));
    const FourBodyAmplitudes amp = make_four_body(c, kDims);
    for (int which = 0; which < 4; ++which) {
      const DensityMatrix rho = initial_reduced(amp, which);
      REQUIRE(std::abs(rho.matrix(0, 0).real() - 0.5) < 1e-14);
      REQUIRE(std::abs(rho.matrix(1, 1).real() - 0.5) < 1e-14);
    }
  }
  SECTION("diagonal weights match the partial-trace oracle") {
    const FourBodyAmplitudes amp = make_four_body(random_vec(16), kDims);
    const StateVector psi{amp.c, kDims};
    for (int which = 0; which < 4; ++which) {
      const DensityMatrix oracle = partial_trace(pure_density(psi), {which});
      const DensityMatrix closed = initial_reduced(amp, which);
      // diagonal entries coincide; off-diagonals belong to the oracle only
      for (int i = 0; i < 2; ++i)
        REQUIRE(std::abs(closed.matrix(i, i) - oracle.matrix(i, i)) < 1e-12);
      REQUIRE(std::abs(closed.matrix.trace().real() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("stage-I merged reduced states") {
  SECTION("single nonzero merged amplitude gives a pure reduced state") {
    const SpectralDecomposition h12 = spectral_decompose(random_hermitian(4));
    const SpectralDecomposition h34 = spectral_decompose(random_hermitian(4));
    const PairSchmidtData s12 =
        pair_schmidt_from_evolution(h12, 0.3, 2, 2, correlated_seeds(2, 2));
    const PairSchmidtData s34 =
        pair_schmidt_from_evolution(h34, 0.8, 2, 2, correlated_seeds(2, 2));
    Mat d = Mat::Zero(2, 2);
    d(1, 0) = 1.0;
    const FourBodyAmplitudes amp = four_body_from_merged(d, s12, s34, kDims);
    const DensityMatrix rho = merged_reduced(amp, s12, s34, 0);
    REQUIRE(rho.matrix(1, 1).real() == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("50 random instances match the explicit-state partial trace") {
    for (int k = 0; k < 50; ++k) {
      const Instance inst = random_instance(0.5 + 0.1 * k, 1.7 - 0.02 * k);
      const Mat d = merged_amplitudes(inst.amp, inst.s12, inst.s34);
      REQUIRE((d - inst.d).cwiseAbs().maxCoeff() < 1e-12);
      const StateVector full = build_merged_state(d, kDims);
      for (int which = 0; which < 2; ++which) {
        const DensityMatrix oracle = partial_trace(pure_density(full), {which});
        const DensityMatrix closed = merged_reduced(inst.amp, inst.s12, inst.s34, which);
        REQUIRE((oracle.matrix - closed.matrix).cwiseAbs().maxCoeff() < 1e-10);
      }
      double rsum = 0.0;
      for (double r : merged_weights(d)) {
        REQUIRE(r >= 0.0);
        rsum += r;
      }
      REQUIRE(rsum == Catch::Approx(1.0).margin(1e-10));
    }
  }
  SECTION("independence from the other pair's time parameter") {
    const SpectralDecomposition h12 = spectral_decompose(random_hermitian(4));
    const SpectralDecomposition h34 = spectral_decompose(random_hermitian(4));
    const PairSchmidtData s12 =
        pair_schmidt_from_evolution(h12, 0.9, 2, 2, correlated_seeds(2, 2));
    const Mat d = random_merged(2, 2);
    DensityMatrix first{Mat{}, {}};
    bool have_first = false;
    for (double t34 : {0.1, 1.3, 7.7}) {
      const PairSchmidtData s34 =
          pair_schmidt_from_evolution(h34, t34, 2, 2, correlated_seeds(2, 2));
      const FourBodyAmplitudes amp = four_body_from_merged(d, s12, s34, kDims);
      const DensityMatrix rho = merged_reduced(amp, s12, s34, 0);
      if (have_first)
        REQUIRE((rho.matrix - first.matrix).cwiseAbs().maxCoeff() < 1e-12);
      first = rho;
      have_first = true;
    }
  }
  SECTION("non-orthonormal Schmidt input rejected") {
    Mat bad = Mat::Ones(4, 2);
    REQUIRE_THROWS_AS(make_pair_schmidt(bad, 2, 2), std::invalid_argument);
  }
}

TEST_CASE("stage-II restructured reduced states") {
  const SpectralDecomposition h1 = spectral_decompose(random_hermitian(2));
  const SpectralDecomposition h4 = spectral_decompose(random_hermitian(2));
  const SpectralDecomposition h23 = spectral_decompose(random_hermitian(4));
  const Mat d = random_merged(2, 2);
  const Merge23Data s23 = merge23_from_evolution(h23, 0.6, 2, 2, 2, 2);

  SECTION("t1 = 0 leaves subsystem 1 at its stage-I state") {
    const DensityMatrix at0 = restructured_reduced(d, s23, h1, 0.0, 0);
    const std::vector<double> r = merged_weights(d);
    for (int p = 0; p < 2; ++p)
      REQUIRE(std::abs(at0.matrix(p, p).real() - r[p]) < 1e-12);
  }
  SECTION("subsystem-1 spectrum is invariant under t1") {
    const DensityMatrix a = restructured_reduced(d, s23, h1, 0.0, 0);
    const DensityMatrix b = restructured_reduced(d, s23, h1, 2.9, 0);
    Eigen::SelfAdjointEigenSolver<Mat> ea(a.matrix, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Mat> eb(b.matrix, Eigen::EigenvaluesOnly);
    REQUIRE((ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
  }
  SECTION("lambda weights are a normalized distribution") {
    const std::vector<double> lambda = restructured_weights(d, s23);
    double sum = 0.0;
    for (double l : lambda) {
      REQUIRE(l >= 0.0);
      sum += l;
    }
    REQUIRE(sum == Catch::Approx(1.0).margin(1e-10));
  }
  SECTION("50 random instances match the explicit-state partial trace") {
    for (int k = 0; k < 50; ++k) {
      const Mat dk = random_merged(2, 2);
      const SpectralDecomposition hk = spectral_decompose(random_hermitian(4));
      const Merge23Data sk = merge23_from_evolution(hk, 0.2 + 0.15 * k, 2, 2, 2, 2);
      const double t1 = 0.3 * k, t4 = 1.1 - 0.05 * k;
      const StateVector full = build_restructured_state(dk, sk, h1, t1, h4, t4, kDims);
      const DensityMatrix o1 = partial_trace(pure_density(full), {0});
      const DensityMatrix c1 = restructured_reduced(dk, sk, h1, t1, 0);
      REQUIRE((o1.matrix - c1.matrix).cwiseAbs().maxCoeff() < 1e-10);
      const DensityMatrix o2 = partial_trace(pure_density(full), {1});
      const DensityMatrix c2 = restructured_reduced(dk, sk, h1, t1, 1);
      REQUIRE((o2.matrix - c2.matrix).cwiseAbs().maxCoeff() < 1e-10);
      // every closed-form output is a valid density matrix
      REQUIRE_NOTHROW(make_density(c1.matrix, c1.dims));
      REQUIRE_NOTHROW(make_density(c2.matrix, c2.dims));
    }
  }
  SECTION("per-q orthonormality enforced on merge-23 data") {
    Mat bad = Mat::Ones(4, 2);
    REQUIRE_THROWS_AS(make_merge23(bad, 2, 2, 2), std::invalid_argument);
  }
}

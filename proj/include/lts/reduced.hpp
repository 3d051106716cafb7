#ifndef LTS_REDUCED_HPP
#define LTS_REDUCED_HPP

// Four-subsystem reduced-state cascade: initial reduced states, post-merge
// Schmidt-form reduced states, and post-restructure reduced states, each
// with a full-state partial-trace oracle builder alongside.

#include <vector>

#include "lts/core.hpp"

namespace lts {

struct FourBodyAmplitudes {
  Vec c;                  // c_ijkl over the product basis
  std::vector<int> dims;  // four subsystem dimensions
};

inline FourBodyAmplitudes make_four_body(Vec c, std::vector<int> dims) {
  if (dims.size() != 4)
    throw std::invalid_argument("four-body amplitudes require exactly 4 subsystems");
  const int d = detail::checked_product(dims);
  if (c.size() != d) throw std::invalid_argument("amplitude length mismatch");
  if (std::abs(c.norm() - 1.0) > kNormTol)
    throw std::invalid_argument("four-body amplitudes are not normalized");
  return FourBodyAmplitudes{std::move(c), std::move(dims)};
}

// Coefficients c^{ij}_p of a merged pair's Schmidt-form basis: a
// (da*db) x r matrix whose columns must be orthonormal.
struct PairSchmidtData {
  Mat coeffs;
  int dim_left = 0;
  int dim_right = 0;

  int rank() const { return static_cast<int>(coeffs.cols()); }
};

inline PairSchmidtData make_pair_schmidt(Mat coeffs, int dim_left, int dim_right,
                                         double tol = 1e-10) {
  if (coeffs.rows() != static_cast<long>(dim_left) * dim_right)
    throw std::invalid_argument("pair Schmidt data: row count mismatch");
  const Mat gram = coeffs.adjoint() * coeffs;
  if ((gram - Mat::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("pair Schmidt data: columns are not orthonormal");
  return PairSchmidtData{std::move(coeffs), dim_left, dim_right};
}

// Schmidt data from a merge Hamiltonian: column p holds the coefficients of
// U(t) applied to the p-th seed vector.  Unitarity keeps the columns
// orthonormal for any t.
inline PairSchmidtData pair_schmidt_from_evolution(const SpectralDecomposition& h_pair,
                                                   double t, int dim_left,
                                                   int dim_right,
                                                   const std::vector<Vec>& seeds) {
  Mat coeffs(h_pair.dim, static_cast<int>(seeds.size()));
  for (std::size_t p = 0; p < seeds.size(); ++p)
    coeffs.col(static_cast<int>(p)) = evolve(seeds[p], h_pair, t);
  return make_pair_schmidt(std::move(coeffs), dim_left, dim_right);
}

// Default seeds: the correlated basis states |00>, |11>, ...
inline std::vector<Vec> correlated_seeds(int dim_left, int dim_right) {
  const int r = std::min(dim_left, dim_right);
  std::vector<Vec> seeds;
  for (int p = 0; p < r; ++p) {
    Vec v = Vec::Zero(dim_left * dim_right);
    v[p * dim_right + p] = 1.0;
    seeds.push_back(std::move(v));
  }
  return seeds;
}

// ---------------------------------------------------------------------------
// Stage 0: reduced states of the bare amplitudes, diagonal weights
// p_i = sum_jkl |c_ijkl|^2 (and the analogues for the other subsystems).

inline DensityMatrix initial_reduced(const FourBodyAmplitudes& amp, int which) {
  if (which < 0 || which > 3)
    throw std::invalid_argument("initial_reduced: subsystem index must be 0..3");
  const int d = amp.dims[which];
  const std::vector<int> off = detail::group_offsets({which}, amp.dims);
  const std::vector<int> rest =
      detail::complement_of({which}, static_cast<int>(amp.dims.size()));
  const std::vector<int> roff = detail::group_offsets(rest, amp.dims);
  Mat rho = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    double w = 0.0;
    for (int e : roff) w += std::norm(amp.c[off[i] + e]);
    rho(i, i) = w;
  }
  return DensityMatrix{std::move(rho), {d}};
}

// ---------------------------------------------------------------------------
// Stage I: merged pairs (1+2) and (3+4) in Schmidt form.

// d_pq = sum_ijkl c_ijkl c^{ij}_p c^{kl}_q
inline Mat merged_amplitudes(const FourBodyAmplitudes& amp, const PairSchmidtData& s12,
                             const PairSchmidtData& s34) {
  const int d12 = amp.dims[0] * amp.dims[1];
  const int d34 = amp.dims[2] * amp.dims[3];
  if (s12.coeffs.rows() != d12 || s34.coeffs.rows() != d34)
    throw std::invalid_argument("merged_amplitudes: Schmidt data dimension mismatch");
  Eigen::Map<const Mat> c_matrix(amp.c.data(), d34, d12);  // column-major: (kl) fast
  // c as matrix with rows (ij), cols (kl): c.transpose() of the map above
  return s12.coeffs.transpose() * c_matrix.transpose() * s34.coeffs;
}

// Weights r_p = sum_q |d_pq|^2.
inline std::vector<double> merged_weights(const Mat& d_pq) {
  std::vector<double> r(d_pq.rows());
  for (int p = 0; p < d_pq.rows(); ++p) r[p] = d_pq.row(p).squaredNorm();
  return r;
}

// Reduced state of subsystem 1 or 2 after the (1+2)/(3+4) merge, diagonal in
// its Schmidt basis; identical weights for both members of the pair.
inline DensityMatrix merged_reduced(const FourBodyAmplitudes& amp,
                                    const PairSchmidtData& s12,
                                    const PairSchmidtData& s34, int which) {
  if (which < 0 || which > 1)
    throw std::invalid_argument("merged_reduced: subsystem index must be 0 or 1");
  const Mat d = merged_amplitudes(amp, s12, s34);
  const std::vector<double> r = merged_weights(d);
  const int dim = amp.dims[which];
  if (static_cast<int>(r.size()) > dim)
    throw std::invalid_argument("merged_reduced: Schmidt rank exceeds subsystem dimension");
  Mat rho = Mat::Zero(dim, dim);
  for (std::size_t p = 0; p < r.size(); ++p) rho(static_cast<int>(p), static_cast<int>(p)) = r[p];
  return DensityMatrix{std::move(rho), {dim}};
}

// Explicit stage-I state sum_pq d_pq |p p q q> on the four-subsystem space
// (the partial-trace oracle for the closed forms above).
inline StateVector build_merged_state(const Mat& d_pq, const std::vector<int>& dims) {
  Vec full = Vec::Zero(detail::checked_product(dims));
  const std::vector<int> strides = detail::strides_of(dims);
  for (int p = 0; p < d_pq.rows(); ++p)
    for (int q = 0; q < d_pq.cols(); ++q)
      full[p * strides[0] + p * strides[1] + q * strides[2] + q * strides[3]] =
          d_pq(p, q);
  return normalized_state(std::move(full), dims);
}

// Amplitudes consistent with given merged data: c_ijkl = sum_pq d_pq
// conj(c^{ij}_p) conj(c^{kl}_q).  The forward map then returns d exactly,
// so every normalization identity holds by construction.
inline FourBodyAmplitudes four_body_from_merged(const Mat& d_pq,
                                                const PairSchmidtData& s12,
                                                const PairSchmidtData& s34,
                                                const std::vector<int>& dims) {
  const int d12 = dims[0] * dims[1];
  const int d34 = dims[2] * dims[3];
  const Mat c_ij_kl = s12.coeffs.conjugate() * d_pq * s34.coeffs.transpose().conjugate();
  Vec c(static_cast<long>(d12) * d34);
  for (int ij = 0; ij < d12; ++ij)
    for (int kl = 0; kl < d34; ++kl) c[ij * d34 + kl] = c_ij_kl(ij, kl);
  return make_four_body(std::move(c), dims);
}

// ---------------------------------------------------------------------------
// Stage II: restructure to 1 | (2+3) | 4.

// Coefficients c^{pq}_k of the (2+3) merge, indexed rows (p, q) and columns k.
// For the Schmidt-form identities the rows with a common q must be
// orthonormal across p.
struct Merge23Data {
  Mat coeffs;  // (r_p * r_q) x k, row index p * r_q + q
  int rank_p = 0;
  int rank_q = 0;
  int dim_k = 0;
};

inline Merge23Data make_merge23(Mat coeffs, int rank_p, int rank_q, int dim_k,
                                double tol = 1e-10) {
  if (coeffs.rows() != static_cast<long>(rank_p) * rank_q || coeffs.cols() != dim_k)
    throw std::invalid_argument("merge-23 data: size mismatch");
  for (int q = 0; q < rank_q; ++q) {
    Mat slice(rank_p, dim_k);
    for (int p = 0; p < rank_p; ++p) slice.row(p) = coeffs.row(p * rank_q + q);
    const Mat gram = slice * slice.adjoint();
    if ((gram - Mat::Identity(rank_p, rank_p)).cwiseAbs().maxCoeff() > tol)
      throw std::invalid_argument("merge-23 data: rows are not orthonormal per q");
  }
  return Merge23Data{std::move(coeffs), rank_p, rank_q, dim_k};
}

// Merge-23 data from one unitary per q: c^{pq}_k = W_q(k, p).  Columns of a
// unitary are orthonormal, so the per-q row condition holds exactly.
inline Merge23Data merge23_from_unitaries(const std::vector<Mat>& w_per_q) {
  if (w_per_q.empty()) throw std::invalid_argument("merge23_from_unitaries: empty input");
  const int dim_k = static_cast<int>(w_per_q.front().rows());
  const int rank_p = static_cast<int>(w_per_q.front().cols());
  const int rank_q = static_cast<int>(w_per_q.size());
  Mat coeffs(static_cast<long>(rank_p) * rank_q, dim_k);
  for (int q = 0; q < rank_q; ++q)
    for (int p = 0; p < rank_p; ++p)
      for (int k = 0; k < dim_k; ++k) coeffs(p * rank_q + q, k) = w_per_q[q](k, p);
  return make_merge23(std::move(coeffs), rank_p, rank_q, dim_k);
}

// Merge-23 data from the pair evolution U_23(t): project U_23(t)|p, q> onto
// the correlated subspace |k k> and orthonormalize per q by the polar
// factor (nearest Schmidt-form unitary to the instantaneous evolution).
inline Merge23Data merge23_from_evolution(const SpectralDecomposition& h23, double t,
                                          int dim2, int dim3, int rank_p, int rank_q) {
  if (h23.dim != dim2 * dim3)
    throw std::invalid_argument("merge23_from_evolution: dimension mismatch");
  const int dim_k = std::min(dim2, dim3);
  std::vector<Mat> w_per_q;
  for (int q = 0; q < rank_q; ++q) {
    Mat m(dim_k, rank_p);
    for (int p = 0; p < rank_p; ++p) {
      Vec seed = Vec::Zero(h23.dim);
      seed[p * dim3 + q] = 1.0;
      const Vec u = evolve(seed, h23, t);
      for (int k = 0; k < dim_k; ++k) m(k, p) = u[k * dim3 + k];
    }
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    w_per_q.push_back(svd.matrixU() * svd.matrixV().adjoint());
  }
  return merge23_from_unitaries(w_per_q);
}

// lambda_k = sum_pq |d_pq|^2 |c^{pq}_k|^2
inline std::vector<double> restructured_weights(const Mat& d_pq, const Merge23Data& s23) {
  if (d_pq.rows() != s23.rank_p || d_pq.cols() != s23.rank_q)
    throw std::invalid_argument("restructured_weights: dimension mismatch");
  std::vector<double> lambda(s23.dim_k, 0.0);
  for (int p = 0; p < s23.rank_p; ++p)
    for (int q = 0; q < s23.rank_q; ++q) {
      const double w = std::norm(d_pq(p, q));
      for (int k = 0; k < s23.dim_k; ++k)
        lambda[k] += w * std::norm(s23.coeffs(p * s23.rank_q + q, k));
    }
  return lambda;
}

// Subsystem 1: unitary conjugation of its stage-I state by U_1(t_1).
// Subsystem 2: diagonal with the lambda_k weights.
inline DensityMatrix restructured_reduced(const Mat& d_pq, const Merge23Data& s23,
                                          const SpectralDecomposition& h1, double t1,
                                          int which) {
  if (which == 0) {
    const std::vector<double> r = merged_weights(d_pq);
    Mat rho = Mat::Zero(h1.dim, h1.dim);
    for (std::size_t p = 0; p < r.size(); ++p)
      rho(static_cast<int>(p), static_cast<int>(p)) = r[p];
    const Mat u = propagator(h1, t1);
    return DensityMatrix{u * rho * u.adjoint(), {h1.dim}};
  }
  if (which == 1) {
    const std::vector<double> lambda = restructured_weights(d_pq, s23);
    Mat rho = Mat::Zero(s23.dim_k, s23.dim_k);
    for (int k = 0; k < s23.dim_k; ++k) rho(k, k) = lambda[k];
    return DensityMatrix{std::move(rho), {s23.dim_k}};
  }
  throw std::invalid_argument("restructured_reduced: subsystem index must be 0 or 1");
}

// Explicit stage-II state sum_pqk d_pq c^{pq}_k U1(t1)|p> |k> |k> U4(t4)|q>
// (the partial-trace oracle for stage II).
inline StateVector build_restructured_state(const Mat& d_pq, const Merge23Data& s23,
                                            const SpectralDecomposition& h1, double t1,
                                            const SpectralDecomposition& h4, double t4,
                                            const std::vector<int>& dims) {
  const Mat u1 = propagator(h1, t1);
  const Mat u4 = propagator(h4, t4);
  Vec full = Vec::Zero(detail::checked_product(dims));
  const std::vector<int> strides = detail::strides_of(dims);
  for (int p = 0; p < d_pq.rows(); ++p)
    for (int q = 0; q < d_pq.cols(); ++q) {
      const cxd d = d_pq(p, q);
      if (d == cxd(0.0, 0.0)) continue;
      for (int k = 0; k < s23.dim_k; ++k) {
        const cxd w = d * s23.coeffs(p * s23.rank_q + q, k);
        if (w == cxd(0.0, 0.0)) continue;
        for (int i = 0; i < dims[0]; ++i)
          for (int l = 0; l < dims[3]; ++l)
            full[i * strides[0] + k * strides[1] + k * strides[2] +
                 l * strides[3]] += w * u1(i, p) * u4(l, q);
      }
    }
  return normalized_state(std::move(full), dims);
}

}  // namespace lts

#endif  // LTS_REDUCED_HPP

#ifndef LTS_CORE_HPP
#define LTS_CORE_HPP

// Finite-dimensional complex linear algebra substrate: tensor products,
// partial trace, spectral decomposition, unitary evolution and Schmidt
// decomposition on dense Eigen matrices.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lts {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr std::int64_t kMaxTotalDimension = 4096;

inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kDegeneracyTol = 1e-9;

namespace detail {

inline int checked_product(const std::vector<int>& dims) {
  std::int64_t d = 1;
  for (int x : dims) {
    if (x < 1) throw std::invalid_argument("subsystem dimension must be >= 1");
    d *= x;
    if (d > kMaxTotalDimension)
      throw std::invalid_argument("total dimension exceeds maximum " +
                                  std::to_string(kMaxTotalDimension));
  }
  return static_cast<int>(d);
}

// Row-major multi-index convention: the first subsystem is the most
// significant digit, matching the Kronecker product ordering A (x) B.
inline std::vector<int> strides_of(const std::vector<int>& dims) {
  std::vector<int> s(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
    s[i] = s[i + 1] * dims[i + 1];
  return s;
}

inline std::vector<int> unravel(int idx, const std::vector<int>& dims) {
  std::vector<int> mi(dims.size());
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    mi[i] = idx % dims[i];
    idx /= dims[i];
  }
  return mi;
}

inline int ravel(const std::vector<int>& mi, const std::vector<int>& dims) {
  int idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + mi[i];
  return idx;
}

// Offsets of every multi-index of `positions` within the full index, so a
// full index decomposes as off_a[ia] + off_b[ib] for complementary groups.
inline std::vector<int> group_offsets(const std::vector<int>& positions,
                                      const std::vector<int>& dims) {
  const std::vector<int> strides = strides_of(dims);
  std::vector<int> gdims;
  gdims.reserve(positions.size());
  for (int p : positions) gdims.push_back(dims[p]);
  int n = 1;
  for (int d : gdims) n *= d;
  std::vector<int> off(n, 0);
  for (int g = 0; g < n; ++g) {
    std::vector<int> mi = unravel(g, gdims);
    int o = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
      o += mi[i] * strides[positions[i]];
    off[g] = o;
  }
  return off;
}

inline std::vector<int> complement_of(const std::vector<int>& subset, int n) {
  std::vector<bool> in(n, false);
  for (int p : subset) {
    if (p < 0 || p >= n) throw std::invalid_argument("subsystem index out of range");
    if (in[p]) throw std::invalid_argument("duplicate subsystem index");
    in[p] = true;
  }
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (!in[i]) rest.push_back(i);
  return rest;
}

}  // namespace detail

inline double hermiticity_defect(const Mat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Domain types

struct StateVector {
  Vec amplitudes;
  std::vector<int> dims;

  int dim() const { return static_cast<int>(amplitudes.size()); }
};

inline StateVector make_state(Vec amplitudes, std::vector<int> dims) {
  const int d = detail::checked_product(dims);
  if (d != amplitudes.size())
    throw std::invalid_argument("amplitude length does not match product of dims");
  if (std::abs(amplitudes.norm() - 1.0) > kNormTol)
    throw std::invalid_argument("state vector is not normalized");
  return StateVector{std::move(amplitudes), std::move(dims)};
}

inline StateVector normalized_state(Vec amplitudes, std::vector<int> dims) {
  const double n = amplitudes.norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  amplitudes /= n;
  return make_state(std::move(amplitudes), std::move(dims));
}

struct DensityMatrix {
  Mat matrix;
  std::vector<int> dims;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

inline DensityMatrix make_density(Mat matrix, std::vector<int> dims,
                                  double psd_tol = 1e-10) {
  const int d = detail::checked_product(dims);
  if (matrix.rows() != d || matrix.cols() != d)
    throw std::invalid_argument("density matrix size does not match dims");
  if (hermiticity_defect(matrix) > kNormTol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(matrix.trace().real() - 1.0) > kNormTol ||
      std::abs(matrix.trace().imag()) > kNormTol)
    throw std::invalid_argument("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(matrix, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -psd_tol)
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  return DensityMatrix{std::move(matrix), std::move(dims)};
}

inline DensityMatrix pure_density(const StateVector& psi) {
  return DensityMatrix{psi.amplitudes * psi.amplitudes.adjoint(), psi.dims};
}

// Energies in units of hbar * angular frequency with hbar = 1.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending, one per cluster
  std::vector<Mat> projectors;      // orthogonal, sum to identity
  std::vector<int> degeneracies;    // rank of each projector
  int dim = 0;

  std::size_t levels() const { return eigenvalues.size(); }
  double ground_energy() const { return eigenvalues.front(); }
};

inline SpectralDecomposition spectral_decompose(const Mat& op,
                                                double degeneracy_tol = kDegeneracyTol) {
  if (op.rows() != op.cols()) throw std::invalid_argument("operator is not square");
  if (hermiticity_defect(op) > kHermitianTol)
    throw std::invalid_argument("operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(op);
  const RVec& ev = es.eigenvalues();
  const Mat& v = es.eigenvectors();
  SpectralDecomposition sd;
  sd.dim = static_cast<int>(op.rows());
  int i = 0;
  while (i < ev.size()) {
    int j = i + 1;
    while (j < ev.size() && ev[j] - ev[j - 1] <= degeneracy_tol) ++j;
    const Mat block = v.middleCols(i, j - i);
    sd.projectors.push_back(block * block.adjoint());
    sd.eigenvalues.push_back(ev.segment(i, j - i).mean());
    sd.degeneracies.push_back(j - i);
    i = j;
  }
  return sd;
}

// Sum_p e^{-i E_p t} P_p.  Exactly unitary up to machine rounding.
inline Mat propagator(const SpectralDecomposition& h, double t) {
  Mat u = Mat::Zero(h.dim, h.dim);
  for (std::size_t p = 0; p < h.levels(); ++p)
    u += std::exp(cxd(0.0, -h.eigenvalues[p] * t)) * h.projectors[p];
  return u;
}

inline Vec evolve(const Vec& psi, const SpectralDecomposition& h, double t) {
  if (psi.size() != h.dim) throw std::invalid_argument("dimension mismatch in evolve");
  Vec out = Vec::Zero(psi.size());
  for (std::size_t p = 0; p < h.levels(); ++p)
    out += std::exp(cxd(0.0, -h.eigenvalues[p] * t)) * (h.projectors[p] * psi);
  return out;
}

inline StateVector evolve(const StateVector& psi, const SpectralDecomposition& h,
                          double t) {
  return StateVector{evolve(psi.amplitudes, h, t), psi.dims};
}

inline double expectation(const Mat& op, const Vec& psi) {
  return (psi.adjoint() * op * psi).value().real();
}

// ---------------------------------------------------------------------------
// Tensor structure

inline Vec tensor_product(const Vec& a, const Vec& b) {
  if (a.size() * b.size() > kMaxTotalDimension)
    throw std::invalid_argument("tensor product exceeds maximum dimension");
  Vec out(a.size() * b.size());
  for (int i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

inline Mat tensor_product(const Mat& a, const Mat& b) {
  if (a.rows() * b.rows() > kMaxTotalDimension ||
      a.cols() * b.cols() > kMaxTotalDimension)
    throw std::invalid_argument("tensor product exceeds maximum dimension");
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline StateVector tensor_product(const StateVector& a, const StateVector& b) {
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  return StateVector{tensor_product(a.amplitudes, b.amplitudes), std::move(dims)};
}

inline DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  return DensityMatrix{tensor_product(a.matrix, b.matrix), std::move(dims)};
}

// Embed an operator acting on the listed subsystems (strictly ascending)
// into the full space, identity elsewhere.
inline Mat embed_operator(const Mat& op, const std::vector<int>& targets,
                          const std::vector<int>& dims) {
  if (!std::is_sorted(targets.begin(), targets.end()) ||
      std::adjacent_find(targets.begin(), targets.end()) != targets.end())
    throw std::invalid_argument("embed_operator: targets must be strictly ascending");
  const std::vector<int> rest =
      detail::complement_of(targets, static_cast<int>(dims.size()));
  int dt = 1;
  for (int p : targets) dt *= dims[p];
  if (op.rows() != dt || op.cols() != dt)
    throw std::invalid_argument("embed_operator: operator size mismatch");
  const std::vector<int> toff = detail::group_offsets(targets, dims);
  const std::vector<int> roff = detail::group_offsets(rest, dims);
  const int full = detail::checked_product(dims);
  Mat out = Mat::Zero(full, full);
  for (int rt = 0; rt < dt; ++rt)
    for (int ct = 0; ct < dt; ++ct) {
      const cxd v = op(rt, ct);
      if (v == cxd(0.0, 0.0)) continue;
      for (int e : roff) out(toff[rt] + e, toff[ct] + e) = v;
    }
  return out;
}

inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<int>& keep) {
  const int n = static_cast<int>(rho.dims.size());
  if (keep.empty() || static_cast<int>(keep.size()) >= n)
    throw std::invalid_argument("partial_trace: keep must be a nonempty proper subset");
  std::vector<int> keep_sorted = keep;
  std::sort(keep_sorted.begin(), keep_sorted.end());
  const std::vector<int> rest = detail::complement_of(keep_sorted, n);
  const std::vector<int> koff = detail::group_offsets(keep_sorted, rho.dims);
  const std::vector<int> roff = detail::group_offsets(rest, rho.dims);
  std::vector<int> kdims;
  for (int p : keep_sorted) kdims.push_back(rho.dims[p]);
  const int dk = static_cast<int>(koff.size());
  Mat out = Mat::Zero(dk, dk);
  for (int r = 0; r < dk; ++r)
    for (int c = 0; c < dk; ++c) {
      cxd s = 0.0;
      for (int e : roff) s += rho.matrix(koff[r] + e, koff[c] + e);
      out(r, c) = s;
    }
  return DensityMatrix{std::move(out), std::move(kdims)};
}

// ---------------------------------------------------------------------------
// Schmidt decomposition

struct SchmidtTerm {
  double coefficient;  // nonnegative, descending
  Vec left;
  Vec right;
};

// Bipartite cut given by the subsystems of the left block (complement is the
// right block).  Coefficients descending, squares summing to one.
inline std::vector<SchmidtTerm> schmidt_decompose(const StateVector& psi,
                                                  const std::vector<int>& left_block) {
  const int n = static_cast<int>(psi.dims.size());
  if (left_block.empty() || static_cast<int>(left_block.size()) >= n)
    throw std::invalid_argument("schmidt_decompose: cut must have two nonempty blocks");
  std::vector<int> left = left_block;
  std::sort(left.begin(), left.end());
  const std::vector<int> right = detail::complement_of(left, n);
  const std::vector<int> loff = detail::group_offsets(left, psi.dims);
  const std::vector<int> roff = detail::group_offsets(right, psi.dims);
  const int dl = static_cast<int>(loff.size());
  const int dr = static_cast<int>(roff.size());
  Mat m(dl, dr);
  for (int l = 0; l < dl; ++l)
    for (int r = 0; r < dr; ++r) m(l, r) = psi.amplitudes[loff[l] + roff[r]];
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  std::vector<SchmidtTerm> terms;
  for (int k = 0; k < svd.singularValues().size(); ++k) {
    const double s = svd.singularValues()[k];
    if (s < 1e-14) continue;
    terms.push_back(SchmidtTerm{s, svd.matrixU().col(k), svd.matrixV().col(k).conjugate()});
  }
  return terms;
}

inline StateVector schmidt_reconstruct(const std::vector<SchmidtTerm>& terms,
                                       const StateVector& like,
                                       const std::vector<int>& left_block) {
  std::vector<int> left = left_block;
  std::sort(left.begin(), left.end());
  const std::vector<int> right =
      detail::complement_of(left, static_cast<int>(like.dims.size()));
  const std::vector<int> loff = detail::group_offsets(left, like.dims);
  const std::vector<int> roff = detail::group_offsets(right, like.dims);
  Vec out = Vec::Zero(like.dim());
  for (const auto& t : terms)
    for (int l = 0; l < t.left.size(); ++l)
      for (int r = 0; r < t.right.size(); ++r)
        out[loff[l] + roff[r]] += t.coefficient * t.left[l] * t.right[r];
  return StateVector{std::move(out), like.dims};
}

// ---------------------------------------------------------------------------
// Small operator zoo used throughout the tests and scenarios.

inline Mat pauli_x() { return (Mat(2, 2) << 0, 1, 1, 0).finished(); }
inline Mat pauli_y() {
  return (Mat(2, 2) << 0, cxd(0, -1), cxd(0, 1), 0).finished();
}
inline Mat pauli_z() { return (Mat(2, 2) << 1, 0, 0, -1).finished(); }
inline Mat identity(int d) { return Mat::Identity(d, d); }

inline Vec basis_vector(int d, int i) {
  Vec v = Vec::Zero(d);
  v[i] = 1.0;
  return v;
}

inline DensityMatrix thermal_state(const SpectralDecomposition& h, double beta,
                                   const std::vector<int>& dims) {
  Mat rho = Mat::Zero(h.dim, h.dim);
  double z = 0.0;
  for (std::size_t p = 0; p < h.levels(); ++p) {
    const double w = std::exp(-beta * (h.eigenvalues[p] - h.ground_energy()));
    rho += w * h.projectors[p];
    z += w * h.degeneracies[p];
  }
  return DensityMatrix{rho / z, dims};
}

}  // namespace lts

#endif  // LTS_CORE_HPP

#include "qauth/dense.hpp"

#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace qauth::dense {

DenseState::DenseState(int n_, Vec a) : n(n_), amps(std::move(a)) {
  if (n < 0 || n > pauli::kDenseCap) throw std::invalid_argument("DenseState: n out of range");
  if (amps.size() != (1ll << n)) throw std::invalid_argument("DenseState: dimension mismatch");
  if (std::abs(amps.norm() - 1.0) > kNormTol)
    throw std::invalid_argument("DenseState: not normalized");
}

DenseState DenseState::basis(int n, std::uint64_t index) {
  Vec v = Vec::Zero(1ll << n);
  if (index >= static_cast<std::uint64_t>(v.size()))
    throw std::invalid_argument("DenseState::basis: index out of range");
  v[index] = 1.0;
  return DenseState(n, std::move(v));
}

DensityMatrix::DensityMatrix(Mat entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw std::invalid_argument("DensityMatrix: not square");
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kNormTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(entries_.trace().real() - 1.0) > kNormTol ||
      std::abs(entries_.trace().imag()) > kNormTol)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(entries_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kPsdFloor)
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const Vec& psi) {
  if (std::abs(psi.norm() - 1.0) > kNormTol)
    throw std::invalid_argument("DensityMatrix::pure: state not normalized");
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(Mat::Identity(dim, dim) / static_cast<double>(dim));
}

Mat tensor(const Mat& low, const Mat& high) {
  return Eigen::kroneckerProduct(high, low).eval();
}

Vec tensor(const Vec& low, const Vec& high) {
  Vec out(low.size() * high.size());
  for (Eigen::Index h = 0; h < high.size(); ++h) {
    out.segment(h * low.size(), low.size()) = high[h] * low;
  }
  return out;
}

Mat partial_trace_high(const Mat& joint, Eigen::Index dim_keep, Eigen::Index dim_drop) {
  if (joint.rows() != dim_keep * dim_drop || joint.cols() != joint.rows())
    throw std::invalid_argument("partial_trace_high: dimension mismatch");
  Mat out = Mat::Zero(dim_keep, dim_keep);
  for (Eigen::Index e = 0; e < dim_drop; ++e) {
    out += joint.block(e * dim_keep, e * dim_keep, dim_keep, dim_keep);
  }
  return out;
}

namespace {

Mat sqrt_psd(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  const Mat ra = sqrt_psd(a.entries());
  const Mat inner = ra * b.entries() * ra;
  Eigen::SelfAdjointEigenSolver<Mat> es(inner, Eigen::EigenvaluesOnly);
  double f = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    f += std::sqrt(std::max(0.0, es.eigenvalues()[i]));
  }
  return std::min(f, 1.0);
}

double fidelity_pure(const Vec& psi, const Mat& rho) {
  if (psi.size() != rho.rows()) throw std::invalid_argument("fidelity_pure: dimension mismatch");
  const double overlap = (psi.adjoint() * rho * psi).value().real();
  return std::sqrt(std::max(0.0, overlap));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Mat> es(a.entries() - b.entries(), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

Mat haar_unitary(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const std::complex<double> d = r(i, i);
    q.col(i) *= (std::abs(d) > 0.0) ? d / std::abs(d) : 1.0;
  }
  return q;
}

DensityMatrix random_density(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    }
  }
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  // symmetrize away roundoff before validation
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(std::move(rho));
}

Vec random_state(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = std::complex<double>(gauss(rng), gauss(rng));
  v /= v.norm();
  return v;
}

// ---------------------------------------------------------------------------
// AdversaryChannel

AdversaryChannel AdversaryChannel::from_pauli(const pauli::PauliVector& p) {
  AdversaryChannel ch;
  ch.pauli_ = p;
  ch.system_qubits_ = p.n;
  ch.ancilla_qubits_ = 0;
  return ch;
}

AdversaryChannel AdversaryChannel::from_unitary(Mat u, int system_qubits, int ancilla_qubits) {
  if (ancilla_qubits < 0 || ancilla_qubits > kAncillaCap)
    throw std::invalid_argument("AdversaryChannel: ancilla count out of range");
  const Eigen::Index dim = 1ll << (system_qubits + ancilla_qubits);
  if (u.rows() != dim || u.cols() != dim)
    throw std::invalid_argument("AdversaryChannel: unitary dimension mismatch");
  if ((u.adjoint() * u - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff() > kNormTol)
    throw std::invalid_argument("AdversaryChannel: matrix is not unitary");
  AdversaryChannel ch;
  ch.unitary_ = std::move(u);
  ch.system_qubits_ = system_qubits;
  ch.ancilla_qubits_ = ancilla_qubits;
  return ch;
}

Mat AdversaryChannel::branch_matrix(const Vec& system_in) const {
  const Eigen::Index dim_sys = 1ll << system_qubits_;
  if (system_in.size() != dim_sys)
    throw std::invalid_argument("AdversaryChannel: input dimension mismatch");
  if (pauli_) {
    Vec out = system_in;
    pauli::apply_pauli(*pauli_, out);
    return out;
  }
  const Eigen::Index dim_anc = 1ll << ancilla_qubits_;
  Vec total = Vec::Zero(dim_sys * dim_anc);
  total.head(dim_sys) = system_in;  // ancilla |0...0> occupies the low block
  total = unitary_ * total;
  return Eigen::Map<Mat>(total.data(), dim_sys, dim_anc).eval();
}

Mat AdversaryChannel::apply(const Mat& rho_system) const {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho_system);
  const Eigen::Index dim = rho_system.rows();
  Mat out = Mat::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double p = es.eigenvalues()[i];
    if (p <= 0.0) continue;
    const Mat branches = branch_matrix(es.eigenvectors().col(i));
    out += p * branches * branches.adjoint();
  }
  return out;
}

// ---------------------------------------------------------------------------
// lower-bound demonstrations

PhaseAttackResult phase_attack_demo(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  if (rho0.dim() != rho1.dim())
    throw std::invalid_argument("phase_attack_demo: dimension mismatch");
  const Eigen::Index d = rho0.dim();

  Eigen::SelfAdjointEigenSolver<Mat> split(rho0.entries() - rho1.entries());
  Mat proj0 = Mat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (split.eigenvalues()[i] >= kPsdFloor) {
      proj0 += split.eigenvectors().col(i) * split.eigenvectors().col(i).adjoint();
    }
  }
  const Mat proj1 = Mat::Identity(d, d) - proj0;
  const Mat phase_unitary = proj0 - proj1;

  const double p0 = (proj0 * rho0.entries()).trace().real();
  const double p1 = (proj1 * rho1.entries()).trace().real();

  // Eigen-purifications |i~> = sum_j sqrt(lambda_j) |e_j>|j>, reference high.
  auto purify = [d](const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Mat> es(rho.entries());
    Vec out = Vec::Zero(d * d);
    for (Eigen::Index j = 0; j < d; ++j) {
      const double lam = std::max(0.0, es.eigenvalues()[j]);
      if (lam > 0.0) out += std::sqrt(lam) * tensor(Vec(es.eigenvectors().col(j)),
                                                    Vec(Vec::Unit(d, j)));
    }
    return out;
  };
  const Vec pur0 = purify(rho0);
  const Vec pur1 = purify(rho1);
  const Vec plus = (pur0 + pur1) / std::sqrt(2.0);
  const Vec minus = (pur0 - pur1) / std::sqrt(2.0);

  const Mat attack = tensor(phase_unitary, Mat::Identity(d, d));
  const std::complex<double> overlap = minus.adjoint() * (attack * plus);

  PhaseAttackResult out;
  out.achieved = std::abs(overlap);
  out.floor = p0 + p1 - 1.0;
  out.p0 = p0;
  out.p1 = p1;
  return out;
}

TensorPowerResult tensor_power_distance_demo(const DensityMatrix& rho0,
                                             const DensityMatrix& rho1, int t) {
  if (rho0.dim() != rho1.dim())
    throw std::invalid_argument("tensor_power_distance_demo: dimension mismatch");
  if (t < 1) throw std::invalid_argument("tensor_power_distance_demo: t must be >= 1");
  double total = 1.0;
  for (int i = 0; i < t; ++i) {
    total *= static_cast<double>(rho0.dim());
    if (total > 4096.0)
      throw std::invalid_argument("tensor_power_distance_demo: dim^t exceeds 4096");
  }
  const double delta = trace_distance(rho0, rho1);
  Mat a = rho0.entries();
  Mat b = rho1.entries();
  for (int i = 1; i < t; ++i) {
    a = tensor(a, rho0.entries());
    b = tensor(b, rho1.entries());
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(a - b, Eigen::EigenvaluesOnly);
  TensorPowerResult out;
  out.distance = 0.5 * es.eigenvalues().cwiseAbs().sum();
  out.bound = 1.0 - 2.0 * std::exp(-static_cast<double>(t) * delta * delta / 2.0);
  return out;
}

}  // namespace qauth::dense

#include "ccic/gaussian_stats.hpp"

#include <cmath>
#include <stdexcept>

namespace ccic {

int CovSpec::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("CovSpec: unknown label " + label);
}

namespace {

Eigen::MatrixXcd submatrix(const Eigen::MatrixXcd& M, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  Eigen::MatrixXcd out(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out(i, j) = M(rows[i], cols[j]);
  return out;
}

// Sigma_AA - Sigma_AB Sigma_BB^{-1} Sigma_BA with diagonal regularization of a
// singular conditioning block.
Eigen::MatrixXcd conditional_cov(const Eigen::MatrixXcd& cov,
                                 const std::vector<int>& A, const std::vector<int>& B) {
  Eigen::MatrixXcd saa = submatrix(cov, A, A);
  if (B.empty()) return saa;
  Eigen::MatrixXcd sab = submatrix(cov, A, B);
  Eigen::MatrixXcd sbb = submatrix(cov, B, B);
  const double scale = std::max(1.0, sbb.trace().real() / sbb.rows());
  sbb += 1e-12 * scale * Eigen::MatrixXcd::Identity(sbb.rows(), sbb.cols());
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(sbb);
  return saa - sab * ldlt.solve(sab.adjoint());
}

double logdet2(const Eigen::MatrixXcd& M) {
  if (M.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
  double ld = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    ld += std::log2(std::max(es.eigenvalues()(i), 1e-300));
  return ld;
}

std::vector<int> to_indices(const CovSpec& spec, const std::vector<std::string>& labels) {
  std::vector<int> idx;
  idx.reserve(labels.size());
  for (const auto& label : labels) idx.push_back(spec.index_of(label));
  return idx;
}

}  // namespace

double conditional_mi(const CovSpec& spec, const std::vector<std::string>& targets,
                      const std::vector<std::string>& observed,
                      const std::vector<std::string>& given) {
  if (targets.empty() || observed.empty()) return 0.0;
  const Eigen::MatrixXcd herm = 0.5 * (spec.cov + spec.cov.adjoint());
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, es.eigenvalues().maxCoeff());
    if (es.eigenvalues().minCoeff() < -1e-10 * scale)
      throw std::invalid_argument("conditional_mi: covariance is not PSD");
  }
  const auto obs = to_indices(spec, observed);
  auto cond = to_indices(spec, given);
  const Eigen::MatrixXcd s_og = conditional_cov(herm, obs, cond);
  for (const auto& t : targets) cond.push_back(spec.index_of(t));
  const Eigen::MatrixXcd s_ogt = conditional_cov(herm, obs, cond);
  return std::max(logdet2(s_og) - logdet2(s_ogt), 0.0);
}

double log_term(double x) {
  if (x < 0.0) throw std::invalid_argument("log_term: negative input");
  return std::log2(1.0 + x);
}

void LinearGaussianModel::basis(const std::string& name) {
  if (vars_.count(name)) throw std::invalid_argument("duplicate variable " + name);
  // widen all existing vectors by one basis slot
  ++n_basis_;
  for (auto& [k, v] : vars_) {
    v.conservativeResize(n_basis_);
    v(n_basis_ - 1) = 0.0;
  }
  Eigen::RowVectorXcd e = Eigen::RowVectorXcd::Zero(n_basis_);
  e(n_basis_ - 1) = 1.0;
  vars_[name] = e;
}

void LinearGaussianModel::define(
    const std::string& name,
    const std::vector<std::pair<std::string, std::complex<double>>>& terms) {
  if (vars_.count(name)) throw std::invalid_argument("duplicate variable " + name);
  Eigen::RowVectorXcd v = Eigen::RowVectorXcd::Zero(n_basis_);
  for (const auto& [ref, coeff] : terms) {
    auto it = vars_.find(ref);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable " + ref);
    v += coeff * it->second;
  }
  vars_[name] = v;
}

CovSpec LinearGaussianModel::cov_spec(const std::vector<std::string>& labels) const {
  CovSpec spec;
  spec.labels = labels;
  const int n = static_cast<int>(labels.size());
  spec.cov.resize(n, n);
  std::vector<const Eigen::RowVectorXcd*> vecs;
  for (const auto& label : labels) {
    auto it = vars_.find(label);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable " + label);
    vecs.push_back(&it->second);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      spec.cov(i, j) = (*vecs[j]).dot(*vecs[i]);  // E[X_i X_j^*] = v_i v_j^H
  return spec;
}

}  // namespace ccic

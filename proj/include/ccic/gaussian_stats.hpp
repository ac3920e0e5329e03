#pragma once
// Conditional mutual information among jointly circularly-symmetric complex
// Gaussian variables, computed from a covariance specification. This is the
// independent oracle for every closed-form log term used elsewhere: complex
// convention, MI = log2 of a determinant ratio, no 1/2 factor.

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace ccic {

struct CovSpec {
  std::vector<std::string> labels;
  Eigen::MatrixXcd cov;  // Hermitian PSD, unit-noise normalization

  int index_of(const std::string& label) const;
};

// I(targets; observed | given) in bits, >= 0. Labels must be disjoint sets.
// Throws on a non-PSD covariance. Singular conditioning blocks are regularized
// by 1e-12 on the diagonal (oracle only; closed forms never take this path).
double conditional_mi(const CovSpec& spec, const std::vector<std::string>& targets,
                      const std::vector<std::string>& observed,
                      const std::vector<std::string>& given);

// log2(1+x); rejects negative input.
double log_term(double x);

// Helper for building covariance specs of linear Gaussian signal models: every
// variable is a complex coefficient vector over a basis of i.i.d. unit-variance
// circularly symmetric Gaussians.
class LinearGaussianModel {
 public:
  // declares an independent unit-variance basis variable
  void basis(const std::string& name);
  // declares name := sum coeff * existing variable (basis or derived)
  void define(const std::string& name,
              const std::vector<std::pair<std::string, std::complex<double>>>& terms);
  CovSpec cov_spec(const std::vector<std::string>& labels) const;
  bool has(const std::string& name) const { return vars_.count(name) > 0; }

 private:
  int n_basis_ = 0;
  std::map<std::string, Eigen::RowVectorXcd> vars_;
};

}  // namespace ccic

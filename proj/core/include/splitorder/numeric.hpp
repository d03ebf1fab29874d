#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "splitorder/conditions.hpp"

namespace splitorder {

using DenseMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr int kMaxMatrixDimension = 64;

// Scaling and squaring with the [13/13] Pade approximant.
// Throws InvalidArgument for non-square or n > 64, NonFinite on overflow.
DenseMatrix matrix_exp(const DenseMatrix& m);

// prod_j exp(a_j t A) exp(b_j t B), j = 1 leftmost. Throws DimensionMismatch.
DenseMatrix scheme_step(const ConcreteScheme& scheme, const DenseMatrix& a, const DenseMatrix& b, double t);

// Power-iteration estimate of the largest singular value.
double spectral_norm_estimate(const DenseMatrix& m);

struct ConvergenceReport {
  std::string scheme_name;
  int dimension = 0;
  std::uint64_t seed = 0;
  std::vector<double> step_sizes;
  std::vector<double> errors;  // Frobenius norm of the one-step error
  double slope = 0.0;
  double residual = 0.0;  // RMS residual of the log-log fit
  double scale_a = 1.0;   // factor applied to the raw random A (1 / norm estimate)
  double scale_b = 1.0;
};

// 2^-4, 2^-5, ..., 2^-10.
std::vector<double> default_grid();

// Errors below this are roundoff-dominated and skipped by the fit.
double error_floor();

// Local error of `scheme` on a random pair of n x n matrices (entries
// uniform in [-1, 1], rescaled to unit spectral norm), with the slope of
// log(error) against log(t) fitted by least squares.
// Grid must be strictly decreasing within [2^-14, 2^-3] (InvalidArgument);
// DegenerateFit if fewer than 3 errors lie above error_floor().
ConvergenceReport empirical_order(const ConcreteScheme& scheme, int dimension, std::uint64_t seed,
                                  const std::vector<double>& grid = default_grid());

}  // namespace splitorder

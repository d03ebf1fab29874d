#include "splitorder/numeric.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <random>

namespace splitorder {

namespace {

void check_finite(const DenseMatrix& m, const char* what) {
  if (!m.allFinite()) throw NonFinite(std::string(what) + " has non-finite entries");
}

}  // namespace

DenseMatrix matrix_exp(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix_exp needs a square matrix");
  if (m.rows() > kMaxMatrixDimension) throw InvalidArgument("matrix_exp supports n <= 64");
  check_finite(m, "matrix_exp input");
  const Eigen::Index n = m.rows();
  if (n == 0) return m;

  // Higham (2005) coefficients and threshold for the degree-13 approximant.
  static constexpr std::array<double, 14> raw = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0, 129060195264000.0,
      10559470521600.0,    670442572800.0,      33522128640.0,      1323241920.0,       40840800.0,
      960960.0,            16380.0,             182.0,              1.0};
  constexpr double theta13 = 5.371920351148152;
  // Normalized so the constant term is exactly 1.
  static const std::array<double, 14> b = [] {
    std::array<double, 14> out{};
    for (std::size_t k = 0; k < raw.size(); ++k) out[k] = raw[k] / raw[0];
    return out;
  }();

  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > theta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  const DenseMatrix a = m / std::ldexp(1.0, squarings);

  const DenseMatrix id = DenseMatrix::Identity(n, n);
  const DenseMatrix a2 = a * a;
  const DenseMatrix a4 = a2 * a2;
  const DenseMatrix a6 = a4 * a2;
  const DenseMatrix u =
      a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  const DenseMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  DenseMatrix result = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) result = result * result;
  check_finite(result, "matrix exponential");
  return result;
}

DenseMatrix scheme_step(const ConcreteScheme& scheme, const DenseMatrix& a, const DenseMatrix& b, double t) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionMismatch("scheme_step needs square A and B of equal size");
  }
  DenseMatrix product = DenseMatrix::Identity(a.rows(), a.cols());
  for (std::size_t j = 0; j < scheme.a.size(); ++j) {
    product = product * matrix_exp((scheme.a[j].to_double() * t) * a);
    product = product * matrix_exp((scheme.b[j].to_double() * t) * b);
  }
  return product;
}

double spectral_norm_estimate(const DenseMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::VectorXd x = Eigen::VectorXd::Ones(m.cols()) / std::sqrt(static_cast<double>(m.cols()));
  double sigma = 0.0;
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXd y = m.transpose() * (m * x);
    const double norm = y.norm();
    if (norm == 0.0) return 0.0;
    x = y / norm;
    const double next = std::sqrt(norm);
    if (std::abs(next - sigma) <= 1e-14 * next) {
      sigma = next;
      break;
    }
    sigma = next;
  }
  return sigma;
}

std::vector<double> default_grid() {
  std::vector<double> grid;
  for (int k = 4; k <= 10; ++k) grid.push_back(std::ldexp(1.0, -k));
  return grid;
}

double error_floor() { return 100.0 * std::numeric_limits<double>::epsilon(); }

namespace {

DenseMatrix random_matrix(int n, std::mt19937_64& rng) {
  // Explicit uniform mapping keeps the stream identical across standard
  // library implementations.
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      m(i, j) = 2.0 * unit - 1.0;
    }
  }
  return m;
}

}  // namespace

ConvergenceReport empirical_order(const ConcreteScheme& scheme, int dimension, std::uint64_t seed,
                                  const std::vector<double>& grid) {
  if (dimension < 1 || dimension > kMaxMatrixDimension) {
    throw InvalidArgument("dimension must be in 1..64, got " + std::to_string(dimension));
  }
  const double t_min = std::ldexp(1.0, -14);
  const double t_max = std::ldexp(1.0, -3);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= t_min && grid[i] <= t_max)) throw InvalidArgument("grid values must lie in [2^-14, 2^-3]");
    if (i > 0 && !(grid[i] < grid[i - 1])) throw InvalidArgument("grid must be strictly decreasing");
  }

  std::mt19937_64 rng(seed);
  DenseMatrix a = random_matrix(dimension, rng);
  DenseMatrix b = random_matrix(dimension, rng);
  ConvergenceReport report;
  report.scheme_name = scheme.name;
  report.dimension = dimension;
  report.seed = seed;
  report.scale_a = 1.0 / spectral_norm_estimate(a);
  report.scale_b = 1.0 / spectral_norm_estimate(b);
  a *= report.scale_a;
  b *= report.scale_b;
  const DenseMatrix sum = a + b;

  std::vector<double> xs;
  std::vector<double> ys;
  for (double t : grid) {
    const double err = (scheme_step(scheme, a, b, t) - matrix_exp(t * sum)).norm();
    report.step_sizes.push_back(t);
    report.errors.push_back(err);
    if (err >= error_floor()) {
      xs.push_back(std::log(t));
      ys.push_back(std::log(err));
    }
  }
  if (xs.size() < 3) {
    throw DegenerateFit("only " + std::to_string(xs.size()) + " errors above the roundoff floor");
  }

  const auto count = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  report.slope = sxy / sxx;
  const double intercept = my - report.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + report.slope * xs[i]);
    ss += r * r;
  }
  report.residual = std::sqrt(ss / count);
  return report;
}

}  // namespace splitorder

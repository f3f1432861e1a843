#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "pdlab/margin_report.hpp"
#include "pdlab/pdf_catalog.hpp"

namespace pdlab {

/// Finite list of real arguments x_1..x_N; N >= 1, all finite. Duplicates
/// are allowed.
class PointConfig {
 public:
  explicit PointConfig(Eigen::VectorXd points);
  PointConfig(std::initializer_list<double> points);
  explicit PointConfig(const std::vector<double>& points);

  Eigen::Index size() const { return points_.size(); }
  double operator[](Eigen::Index k) const { return points_[k]; }
  const Eigen::VectorXd& points() const { return points_; }
  double sum() const { return points_.sum(); }
  std::vector<double> to_vector() const {
    return {points_.data(), points_.data() + points_.size()};
  }

 private:
  Eigen::VectorXd points_;
};

/// Plain text, one real per line. Blank lines and lines starting with '#'
/// are skipped.
PointConfig load_points_file(const std::string& path);
PointConfig parse_points_text(std::string_view text);

enum class Verdict { certified, refuted, inconclusive };
std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// Evidence that one Gram matrix is (or is not) positive semidefinite.
/// "certified" speaks only about this configuration, never about f on all
/// of R.
struct PsdCertificate {
  Eigen::Index n = 0;
  double hermitian_deviation = 0.0;
  double min_eigenvalue = 0.0;
  double tolerance = kDefaultTolerance;
  Verdict verdict = Verdict::inconclusive;

  friend bool operator==(const PsdCertificate&, const PsdCertificate&) = default;
};

/// max_{k,j} |A(k,j) - conj(A(j,k))|.
template <typename Derived>
double hermitian_deviation(const Eigen::MatrixBase<Derived>& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// Smallest eigenvalue of the Hermitian part (A + A^*)/2.
template <typename Derived>
double min_hermitian_eigenvalue(const Eigen::MatrixBase<Derived>& a) {
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Matrix sym = (a + a.adjoint()) / typename Derived::RealScalar(2);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  return static_cast<double>(solver.eigenvalues().minCoeff());
}

/// Sum_{k,j} A(k,j) z_k conj(z_j), the form of the p.d. definition. Note the
/// index order: this is z^T A conj(z), which differs from z^* A z unless A
/// is real symmetric.
template <typename MatrixDerived, typename VectorDerived>
auto gram_form(const Eigen::MatrixBase<MatrixDerived>& a,
               const Eigen::MatrixBase<VectorDerived>& z) {
  return (z.transpose() * a * z.conjugate()).value();
}

/// A(k,j) = f(x_k - x_j).
Eigen::MatrixXcd build_gram(const PdFunction& f, const PointConfig& pts);

struct FormValue {
  double value = 0.0;
  /// Imaginary part of the double sum; zero up to roundoff when
  /// f(-x) = conj f(x).
  double imaginary = 0.0;
};

/// Evaluates the double sum directly from f without forming the matrix.
FormValue quadratic_form(const PdFunction& f, const PointConfig& pts,
                         const Eigen::VectorXcd& z);

PsdCertificate certify(const PdFunction& f, const PointConfig& pts,
                       double tolerance = kDefaultTolerance);

/// Two reports per sample point: `bound-modulus` (|f(x)| <= f(0)) and
/// `bound-conjugate` (|f(-x) - conj f(x)| <= 0).
std::vector<MarginReport> check_basic_bounds(const PdFunction& f, const PointConfig& sample,
                                             double tolerance = kDefaultTolerance);

}  // namespace pdlab

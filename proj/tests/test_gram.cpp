#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "pdlab/errors.hpp"
#include "pdlab/gram.hpp"

using namespace pdlab;
using std::numbers::pi;

TEST_CASE("point configurations") {
  CHECK(PointConfig{1.0, 2.0, 2.0}.size() == 3);
  CHECK(PointConfig{1.0, 2.0, 2.0}.sum() == 5.0);
  CHECK_THROWS_AS(PointConfig(std::vector<double>{}), InvalidParameter);
  CHECK_THROWS_AS((PointConfig{1.0, std::numeric_limits<double>::quiet_NaN()}),
                  InvalidParameter);

  const auto parsed = parse_points_text("# header\n0\n\n 1.5707963 \n-3.25\n");
  CHECK(parsed.size() == 3);
  CHECK(parsed[1] == 1.5707963);
  CHECK(parsed[2] == -3.25);
  CHECK_THROWS_AS(parse_points_text("1\nabc\n"), InvalidParameter);
  CHECK_THROWS_AS(parse_points_text("\n# only comments\n"), InvalidParameter);
  CHECK_THROWS_AS(load_points_file("no/such/file.txt"), InvalidParameter);
}

TEST_CASE("build_gram examples") {
  const auto a = build_gram(make_cosine(), PointConfig{0.0, pi / 2.0, pi});
  const double want[3][3] = {{1, 0, -1}, {0, 1, 0}, {-1, 0, 1}};
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(a(k, j) - Complex(want[k][j], 0.0)) < 1e-15);
    }
  }

  const auto ones = build_gram(make_const(1.0), PointConfig{0.0, 5.0});
  CHECK(ones.isApprox(Eigen::MatrixXcd::Ones(2, 2)));

  const auto e = build_gram(make_exponential(1.0), PointConfig{0.0, pi});
  Eigen::Matrix2cd expected;
  expected << 1.0, -1.0, -1.0, 1.0;
  CHECK((e - expected).cwiseAbs().maxCoeff() < 1e-15);

  const PointConfig pts{-1.3, 0.2, 4.0, 4.0};
  const auto g = build_gram(make_tent(2.0), pts);
  for (Eigen::Index k = 0; k < pts.size(); ++k) CHECK(g(k, k) == Complex(2.0, 0.0));
}

TEST_CASE("quadratic form examples") {
  const auto cos = make_cosine();
  Eigen::VectorXcd z(2);
  z << 1.0, 1.0;
  CHECK(std::abs(quadratic_form(cos, PointConfig{0.0, pi}, z).value) < 1e-15);

  const PointConfig three{0.0, pi / 2.0, pi};
  const auto zero = quadratic_form(make_exponential(1.0), three, Eigen::VectorXcd::Zero(3));
  CHECK(zero.value == 0.0);
  CHECK(zero.imaginary == 0.0);

  // z = (beta, alpha, -1) with alpha = 1, beta = 0: A22 + A33 - 2 Re A23.
  Eigen::VectorXcd proof(3);
  proof << 0.0, 1.0, -1.0;
  CHECK(quadratic_form(cos, three, proof).value == doctest::Approx(2.0).epsilon(1e-15));

  CHECK_THROWS_AS(quadratic_form(cos, three, Eigen::VectorXcd::Zero(2)), LengthMismatch);
}

TEST_CASE("quadratic form agrees with the Gram matrix route") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> size(1, 12);
  for (const auto& f : testing::catalog()) {
    CAPTURE(f.label());
    for (int trial = 0; trial < 40; ++trial) {
      const PointConfig pts(testing::uniform_points(rng, size(rng), -10.0, 10.0));
      Eigen::VectorXcd z(pts.size());
      for (auto& c : z) c = Complex(normal(rng), normal(rng));
      const auto direct = quadratic_form(f, pts, z);
      const Complex via_matrix = gram_form(build_gram(f, pts), z);
      const double scale = std::max(1.0, std::abs(via_matrix));
      CHECK(std::abs(direct.value - via_matrix.real()) <= 1e-10 * scale);
      CHECK(std::abs(direct.imaginary) <= 1e-10 * scale);
      CHECK(direct.value >= -1e-9 * z.squaredNorm() * pts.size() * f.at_zero());
    }
  }
}

TEST_CASE("certify: cos 3x3 spectrum against the characteristic polynomial") {
  const double a[3][3] = {{1, 0, -1}, {0, 1, 0}, {-1, 0, 1}};
  auto roots = testing::symmetric3_eigenvalues(a);
  REQUIRE(roots.size() == 3);
  std::sort(roots.begin(), roots.end());
  CHECK(std::abs(roots[0]) < 1e-12);
  CHECK(std::abs(roots[1] - 1.0) < 1e-12);
  CHECK(std::abs(roots[2] - 2.0) < 1e-12);

  const auto cert = certify(make_cosine(), PointConfig{0.0, pi / 2.0, pi}, 1e-9);
  CHECK(cert.n == 3);
  CHECK(std::abs(cert.min_eigenvalue - roots[0]) < 1e-12);
  CHECK(cert.verdict == Verdict::certified);
  CHECK(cert.hermitian_deviation <= 1e-12);
}

TEST_CASE("certify: gaussian against leading principal minors") {
  const PointConfig pts{0.0, 1.0, 2.5};
  double a[3][3];
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 3; ++j) a[k][j] = std::exp(-std::pow(pts[k] - pts[j], 2));
  }
  // Sylvester: all leading minors positive means positive definite.
  const double m1 = a[0][0];
  const double m2 = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  const double m3 = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                    a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                    a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  REQUIRE(m1 > 0.0);
  REQUIRE(m2 > 0.0);
  REQUIRE(m3 > 0.0);
  auto roots = testing::symmetric3_eigenvalues(a);
  std::sort(roots.begin(), roots.end());

  const auto cert = certify(make_gaussian(), pts, 1e-9);
  CHECK(cert.verdict == Verdict::certified);
  CHECK(cert.min_eigenvalue > 0.0);
  CHECK(cert.min_eigenvalue == doctest::Approx(roots[0]).epsilon(1e-9));
}

TEST_CASE("certify: tent on random points") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const PointConfig pts(testing::uniform_points(rng, 16, -4.0, 4.0));
    CHECK(certify(make_tent(2.0), pts, 1e-9).verdict == Verdict::certified);
  }
}

TEST_CASE("certify: verdict bands") {
  // Indicator of (-1, 1) is not positive definite.
  const auto box = make_user_function(
      [](double x) { return Complex(std::abs(x) < 1.0 ? 1.0 : 0.0, 0.0); }, "box", true);
  const auto refuted = certify(box, PointConfig{0.0, 0.9, 1.8}, 1e-9);
  CHECK(refuted.verdict == Verdict::refuted);
  CHECK(refuted.min_eigenvalue == doctest::Approx(1.0 - std::sqrt(2.0)));

  // f(0) = 1, f(+-1) = 1 + 5e-9: min eigenvalue -5e-9, band 2e-9.
  const auto nearly = make_user_function(
      [](double x) { return Complex(x == 0.0 ? 1.0 : 1.0 + 5e-9, 0.0); }, "nearly", true);
  const auto borderline = certify(nearly, PointConfig{0.0, 1.0}, 1e-9);
  CHECK(borderline.verdict == Verdict::inconclusive);

  // Antisymmetric Gram matrix: not Hermitian, so not positive definite.
  const auto identity =
      make_user_function([](double x) { return Complex(x, 0.0); }, "identity", true);
  const auto skew = certify(identity, PointConfig{0.0, 1.0}, 1e-9);
  CHECK(skew.hermitian_deviation == 2.0);
  CHECK(skew.verdict == Verdict::refuted);

  // Duplicate points give an exactly singular matrix.
  const auto dup = certify(make_cosine(), PointConfig{1.0, 1.0}, 1e-9);
  CHECK(dup.verdict == Verdict::certified);
  CHECK(std::abs(dup.min_eigenvalue) < 1e-15);

  CHECK_THROWS_AS(certify(make_cosine(), PointConfig{0.0}, 0.0), InvalidParameter);
  const auto broken = make_user_function(
      [](double x) { return Complex(x == 0.0 ? 1.0 : std::nan(""), 0.0); }, "nan", true);
  CHECK_THROWS_AS(certify(broken, PointConfig{0.0, 1.0}), EvaluationError);
}

TEST_CASE("catalog Gram matrices are Hermitian and certified") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(1, 12);
  for (const auto& f : testing::catalog()) {
    CAPTURE(f.label());
    for (int trial = 0; trial < 30; ++trial) {
      const PointConfig pts(testing::uniform_points(rng, size(rng), -10.0, 10.0));
      const auto cert = certify(f, pts, 1e-9);
      CHECK(cert.hermitian_deviation <= 1e-12);
      CHECK(cert.verdict == Verdict::certified);
    }
  }
}

TEST_CASE("check_basic_bounds") {
  const auto cos_reports = check_basic_bounds(make_cosine(), PointConfig{pi});
  REQUIRE(cos_reports.size() == 2);
  CHECK(cos_reports[0].inequality_id == "bound-modulus");
  CHECK(std::abs(cos_reports[0].margin) < 1e-15);
  CHECK(cos_reports[0].holds);
  CHECK(cos_reports[1].inequality_id == "bound-conjugate");
  CHECK(cos_reports[1].holds);

  const auto gauss = check_basic_bounds(make_gaussian(), PointConfig{2.0});
  CHECK(gauss[0].margin == doctest::Approx(1.0 - std::exp(-4.0)).epsilon(1e-15));
  CHECK(gauss[0].margin == doctest::Approx(0.9817).epsilon(1e-4));

  const auto linear = make_user_function([](double x) { return Complex(x, 0.0); }, "x", true);
  const auto bad = check_basic_bounds(linear, PointConfig{1.0});
  CHECK(bad[0].lhs == 1.0);
  CHECK(bad[0].rhs == 0.0);
  CHECK_FALSE(bad[0].holds);
  CHECK_FALSE(bad[0].expected_valid);
  CHECK_FALSE(bad[1].holds);
}

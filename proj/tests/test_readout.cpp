// Copyright 2026 The coset-qrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coset_qrc/readout.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

using coset_qrc::closed_loop_predict;
using coset_qrc::fit;
using coset_qrc::one_step_targets;
using coset_qrc::PredictionResult;
using coset_qrc::ReadoutWeights;
using coset_qrc::score_r2;
using coset_qrc::timeplex;

namespace {

double gradient_norm(const Eigen::MatrixXd& f, const Eigen::VectorXd& y,
                     const ReadoutWeights& w) {
  Eigen::VectorXd g =
      2.0 * f.transpose() * (f * w.v - y) + 2.0 * w.ridge_lambda * w.v;
  return g.norm();
}

Eigen::MatrixXd random_features(int rows, int cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd f(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      f(r, c) = normal(rng);
    }
  }
  return f;
}

}  // namespace

TEST_CASE("fit recovers exact solutions") {
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(3, 3);
  Eigen::VectorXd y(3);
  y << 1, 2, 3;
  ReadoutWeights w = fit(eye, y, 0.0);
  CHECK(w.v(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w.v(1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(w.v(2) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(w.ridge_lambda == 0.0);

  // A realizable target is fit to numerical precision.
  Eigen::MatrixXd f = random_features(40, 6, 11);
  Eigen::VectorXd truth(6);
  truth << 0.5, -1.0, 2.0, 0.0, 3.0, -0.25;
  Eigen::VectorXd target = f * truth;
  ReadoutWeights exact = fit(f, target, 0.0);
  CHECK((f * exact.v - target).norm() < 1e-8);
  CHECK(gradient_norm(f, target, exact) < 1e-6 * (1.0 + target.norm()));
}

TEST_CASE("ridge strength shrinks the weights monotonically") {
  Eigen::MatrixXd f = random_features(30, 5, 22);
  Eigen::VectorXd y = random_features(30, 1, 23).col(0);
  double previous = 1e100;
  for (double lambda : {0.0, 1.0, 10.0, 100.0}) {
    ReadoutWeights w = fit(f, y, lambda);
    CHECK(w.v.norm() < previous);
    CHECK(gradient_norm(f, y, w) < 1e-6 * (1.0 + y.norm()));
    previous = w.v.norm();
  }
}

TEST_CASE("rank deficiency resolves to the minimum-norm solution") {
  Eigen::MatrixXd f(2, 2);
  f << 1, 1, 1, 1;
  Eigen::VectorXd y(2);
  y << 2, 2;
  ReadoutWeights w = fit(f, y, 0.0);
  CHECK(w.v(0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(w.v(1) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(gradient_norm(f, y, w) < 1e-6 * (1.0 + y.norm()));

  // Wide underdetermined system: more columns than rows, still no throw.
  Eigen::MatrixXd wide = random_features(4, 12, 31);
  Eigen::VectorXd wy = random_features(4, 1, 32).col(0);
  ReadoutWeights ww = fit(wide, wy, 0.0);
  CHECK((wide * ww.v - wy).norm() < 1e-8);
}

TEST_CASE("duplicated columns leave ridge predictions unchanged") {
  Eigen::MatrixXd f = random_features(25, 4, 44);
  Eigen::VectorXd y = random_features(25, 1, 45).col(0);
  ReadoutWeights base = fit(f, y, 1e-8);

  Eigen::MatrixXd doubled(25, 5);
  doubled << f, f.col(2);
  ReadoutWeights dup = fit(doubled, y, 1e-8);
  CHECK((f * base.v - doubled * dup.v).norm() < 1e-8);
}

TEST_CASE("fit validates shapes and values") {
  Eigen::MatrixXd f = Eigen::MatrixXd::Identity(3, 3);
  Eigen::VectorXd y(2);
  y << 1, 2;
  CHECK_THROWS_AS(fit(f, y, 0.0), std::invalid_argument);

  Eigen::VectorXd y3(3);
  y3 << 1, 2, 3;
  CHECK_THROWS_AS(fit(f, y3, -1.0), std::invalid_argument);

  Eigen::MatrixXd bad = f;
  bad(1, 1) = std::nan("");
  CHECK_THROWS_AS(fit(bad, y3, 0.0), std::invalid_argument);
}

TEST_CASE("score_r2 closed forms") {
  Eigen::VectorXd targets(3);
  targets << 1, 2, 3;
  CHECK(score_r2(targets, targets) == doctest::Approx(1.0));

  Eigen::VectorXd mean_pred = Eigen::VectorXd::Constant(3, 2.0);
  CHECK(score_r2(mean_pred, targets) == doctest::Approx(0.0));

  Eigen::VectorXd offset(3);
  offset << 2, 3, 4;
  CHECK(score_r2(offset, targets) == doctest::Approx(-0.5));

  Eigen::VectorXd constant = Eigen::VectorXd::Constant(3, 5.0);
  CHECK_THROWS_AS(score_r2(targets, constant), std::invalid_argument);

  Eigen::VectorXd two(2);
  two << 1, 2;
  CHECK_THROWS_AS(score_r2(two, targets), std::invalid_argument);
}

TEST_CASE("one_step_targets shifts the series by one") {
  auto [inputs, targets] = one_step_targets({1.0, 2.0, 3.0});
  CHECK(inputs == std::vector<double>{1.0, 2.0});
  CHECK(targets == std::vector<double>{2.0, 3.0});

  auto [i2, t2] = one_step_targets({7.0, 9.0});
  CHECK(i2 == std::vector<double>{7.0});
  CHECK(t2 == std::vector<double>{9.0});

  // Logistic map at x0 = 0.5: the first prediction pair.
  const double x1 = 3.9 * 0.5 * (1.0 - 0.5);
  auto [li, lt] = one_step_targets({0.5, x1, 3.9 * x1 * (1.0 - x1)});
  CHECK(li[0] == doctest::Approx(0.5));
  CHECK(lt[0] == doctest::Approx(0.975));

  CHECK_THROWS_AS(one_step_targets({1.0}), std::invalid_argument);
}

TEST_CASE("timeplex stacks lagged step vectors") {
  std::vector<Eigen::VectorXd> steps;
  for (int t = 0; t < 4; ++t) {
    Eigen::VectorXd v(2);
    v << 10 + t, 20 + t;
    steps.push_back(v);
  }

  Eigen::MatrixXd m = timeplex(steps, 2, true);
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 5);
  // Row 0 covers steps 0 and 1, oldest first, bias last.
  CHECK(m(0, 0) == doctest::Approx(10.0));
  CHECK(m(0, 1) == doctest::Approx(20.0));
  CHECK(m(0, 2) == doctest::Approx(11.0));
  CHECK(m(0, 3) == doctest::Approx(21.0));
  CHECK(m(0, 4) == doctest::Approx(1.0));
  CHECK(m(2, 0) == doctest::Approx(12.0));
  CHECK(m.col(4).isOnes());

  Eigen::MatrixXd no_bias = timeplex(steps, 1, false);
  CHECK(no_bias.rows() == 4);
  CHECK(no_bias.cols() == 2);

  CHECK_THROWS_AS(timeplex(steps, 5, true), std::invalid_argument);
  CHECK_THROWS_AS(timeplex(steps, 0, true), std::invalid_argument);
}

TEST_CASE("closed loop with horizon one never advances the reservoir") {
  Eigen::VectorXd features(2);
  features << 0.5, 1.0;
  ReadoutWeights w;
  w.v = Eigen::VectorXd(2);
  w.v << 2.0, 0.25;

  bool stepped = false;
  auto step = [&](double) {
    stepped = true;
    return features;
  };
  PredictionResult r = closed_loop_predict(features, step, w, 1);
  CHECK_FALSE(stepped);
  CHECK_FALSE(r.diverged);
  REQUIRE(r.series.size() == 1);
  CHECK(r.series[0] == doctest::Approx(1.25));
}

TEST_CASE("closed loop with a bias-only readout is constant") {
  Eigen::VectorXd features(3);
  features << 0.1, 0.2, 1.0;
  ReadoutWeights w;
  w.v = Eigen::VectorXd::Zero(3);
  w.v(2) = 0.7;

  auto step = [&](double x) {
    Eigen::VectorXd next(3);
    next << x, x * x, 1.0;
    return next;
  };
  PredictionResult r = closed_loop_predict(features, step, w, 8);
  CHECK_FALSE(r.diverged);
  REQUIRE(r.series.size() == 8);
  for (double v : r.series) {
    CHECK(v == doctest::Approx(0.7));
  }
}

TEST_CASE("closed loop flags divergence and returns the partial series") {
  Eigen::VectorXd features(2);
  features << 1.0, 1.0;
  ReadoutWeights w;
  w.v = Eigen::VectorXd(2);
  w.v << 2.0, 0.0;

  auto step = [](double x) {
    Eigen::VectorXd next(2);
    next << x, 1.0;
    return next;
  };
  PredictionResult r = closed_loop_predict(features, step, w, 50);
  CHECK(r.diverged);
  // 2, 4, ..., 1024: the first value beyond 1e3 ends the loop.
  REQUIRE(r.series.size() == 10);
  CHECK(r.series.back() == doctest::Approx(1024.0));
  CHECK(std::abs(r.series.back()) > coset_qrc::kDivergenceLimit);

  ReadoutWeights nan_w;
  nan_w.v = Eigen::VectorXd::Constant(2, std::nan(""));
  PredictionResult bad = closed_loop_predict(features, step, nan_w, 5);
  CHECK(bad.diverged);
  CHECK(bad.series.size() == 1);
}

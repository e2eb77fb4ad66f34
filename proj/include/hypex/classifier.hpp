#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hypex/features.hpp"
#include "json.hpp"

namespace hypex {

// Non-owning row-major matrix.
struct MatrixView {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::span<const double> values;

  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

inline MatrixView view(const FeatureMatrix& fm) { return {fm.rows, fm.cols, fm.values}; }

struct Standardization {
  std::vector<double> mean;
  std::vector<double> stddev;  // constant columns get stddev 1

  bool empty() const noexcept { return mean.empty(); }
};

// Column means and population standard deviations of the training matrix.
Standardization standardize_fit(const MatrixView& x);
std::vector<double> standardize_apply(const Standardization& params, const MatrixView& x);

struct TrainOptions {
  double l2_strength = 1.0;
  double tol = 1e-8;
  std::size_t max_iter = 10'000;
  bool standardize = true;
  // Random starting point instead of zeros; the optimum does not depend on it.
  std::optional<std::uint64_t> init_seed;
};

struct LogRegModel {
  std::vector<double> weights;
  double bias = 0.0;
  double l2_strength = 1.0;
  Standardization standardization;
  bool converged = false;
  std::size_t iterations = 0;
  double final_loss = 0.0;
  double initial_loss = 0.0;
};

// Minimizes mean logistic loss + (l2/2)*||w||^2 (bias unpenalized) by damped
// Newton steps on the full batch. Stops once the largest gradient entry is
// below tol; otherwise returns with converged = false after max_iter steps.
LogRegModel train_logreg(const MatrixView& x, std::span<const int> labels,
                         const TrainOptions& options = {});

// Objective value at (weights, bias) on already-standardized inputs.
double logreg_objective(const MatrixView& x, std::span<const int> labels,
                        std::span<const double> weights, double bias, double l2_strength);

std::vector<double> predict_scores(const LogRegModel& model, const MatrixView& x);

struct PRResult {
  double auc_pr = 0.0;
  std::vector<std::pair<double, double>> curve;  // (recall, precision) per threshold
  std::size_t positives = 0;
  std::size_t total = 0;
};

// Average precision: sum over distinct score thresholds (descending, ties
// grouped) of (R_k - R_{k-1}) * P_k.
PRResult auc_pr(std::span<const double> scores, std::span<const int> labels);

double pearson(std::span<const double> xs, std::span<const double> ys);

// 100 * (hi - lo) / lo
double percent_gain(double auc_lo, double auc_hi);

nlohmann::json to_json(const LogRegModel& model);
LogRegModel model_from_json(const nlohmann::json& j);

}  // namespace hypex

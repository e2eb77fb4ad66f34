#include "hypex/classifier.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hypex/error.hpp"
#include "hypex/seeding.hpp"

namespace hypex {

namespace {

double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

void check_labels(std::span<const int> labels, std::size_t rows) {
  if (labels.size() != rows) throw Error(ErrorCode::kInvalidArgument, "label count does not match row count");
  for (int y : labels) {
    if (y != 0 && y != 1) throw Error(ErrorCode::kInvalidArgument, "labels must be 0 or 1");
  }
}

Eigen::MatrixXd to_eigen(const MatrixView& x, std::span<const double> values) {
  Eigen::MatrixXd m(x.rows, x.cols);
  for (std::size_t r = 0; r < x.rows; ++r) {
    for (std::size_t c = 0; c < x.cols; ++c) m(r, c) = values[r * x.cols + c];
  }
  return m;
}

// Objective on the augmented parameter vector theta = [w; b].
double objective(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const Eigen::VectorXd& theta,
                 double l2) {
  const auto d = x.cols();
  const Eigen::VectorXd z = x * theta.head(d) + Eigen::VectorXd::Constant(x.rows(), theta(d));
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) loss += softplus(z(i)) - y(i) * z(i);
  return loss / static_cast<double>(x.rows()) + 0.5 * l2 * theta.head(d).squaredNorm();
}

}  // namespace

Standardization standardize_fit(const MatrixView& x) {
  if (x.rows == 0) throw Error(ErrorCode::kInvalidArgument, "cannot standardize an empty matrix");
  Standardization params;
  params.mean.assign(x.cols, 0.0);
  params.stddev.assign(x.cols, 1.0);
  const auto n = static_cast<double>(x.rows);
  for (std::size_t c = 0; c < x.cols; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < x.rows; ++r) mean += x.at(r, c);
    mean /= n;
    double var = 0.0;
    for (std::size_t r = 0; r < x.rows; ++r) var += (x.at(r, c) - mean) * (x.at(r, c) - mean);
    const double sd = std::sqrt(var / n);
    if (sd > 1e-12 * std::max(1.0, std::abs(mean))) {
      params.mean[c] = mean;
      params.stddev[c] = sd;
    }
  }
  return params;
}

std::vector<double> standardize_apply(const Standardization& params, const MatrixView& x) {
  if (params.mean.size() != x.cols) {
    throw Error(ErrorCode::kInvalidArgument, "standardization column count mismatch");
  }
  std::vector<double> out(x.values.begin(), x.values.end());
  for (std::size_t r = 0; r < x.rows; ++r) {
    for (std::size_t c = 0; c < x.cols; ++c) {
      out[r * x.cols + c] = (out[r * x.cols + c] - params.mean[c]) / params.stddev[c];
    }
  }
  return out;
}

double logreg_objective(const MatrixView& x, std::span<const int> labels,
                        std::span<const double> weights, double bias, double l2_strength) {
  check_labels(labels, x.rows);
  Eigen::VectorXd theta(x.cols + 1);
  for (std::size_t c = 0; c < x.cols; ++c) theta(static_cast<Eigen::Index>(c)) = weights[c];
  theta(static_cast<Eigen::Index>(x.cols)) = bias;
  Eigen::VectorXd y(x.rows);
  for (std::size_t i = 0; i < x.rows; ++i) y(static_cast<Eigen::Index>(i)) = labels[i];
  return objective(to_eigen(x, x.values), y, theta, l2_strength);
}

LogRegModel train_logreg(const MatrixView& x, std::span<const int> labels, const TrainOptions& options) {
  if (x.rows == 0) throw Error(ErrorCode::kInvalidArgument, "cannot train on an empty matrix");
  if (!(options.l2_strength > 0.0)) throw Error(ErrorCode::kInvalidArgument, "l2 strength must be positive");
  check_labels(labels, x.rows);
  for (double v : x.values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "feature matrix contains non-finite values");
  }

  LogRegModel model;
  model.l2_strength = options.l2_strength;
  std::vector<double> scaled(x.values.begin(), x.values.end());
  if (options.standardize) {
    model.standardization = standardize_fit(x);
    scaled = standardize_apply(model.standardization, x);
  }
  const Eigen::MatrixXd xm = to_eigen(x, scaled);
  const auto m = static_cast<double>(x.rows);
  const auto d = static_cast<Eigen::Index>(x.cols);
  Eigen::VectorXd y(xm.rows());
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = labels[static_cast<std::size_t>(i)];

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d + 1);
  if (options.init_seed) {
    Rng rng(*options.init_seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (Eigen::Index i = 0; i <= d; ++i) theta(i) = normal(rng);
  }
  const double l2 = options.l2_strength;
  model.initial_loss = objective(xm, y, Eigen::VectorXd::Zero(d + 1), l2);
  double current = objective(xm, y, theta, l2);

  Eigen::MatrixXd xa(xm.rows(), d + 1);
  xa << xm, Eigen::VectorXd::Ones(xm.rows());
  Eigen::VectorXd penalty = Eigen::VectorXd::Constant(d + 1, l2);
  penalty(d) = 0.0;

  for (model.iterations = 0; model.iterations < options.max_iter; ++model.iterations) {
    const Eigen::VectorXd z = xa * theta;
    Eigen::VectorXd p(z.size()), curvature(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      p(i) = sigmoid(z(i));
      curvature(i) = p(i) * (1.0 - p(i));
    }
    const Eigen::VectorXd grad = xa.transpose() * (p - y) / m + penalty.cwiseProduct(theta);
    if (grad.cwiseAbs().maxCoeff() < options.tol) {
      model.converged = true;
      break;
    }
    Eigen::MatrixXd hessian = xa.transpose() * curvature.asDiagonal() * xa / m;
    hessian.diagonal() += penalty;
    // A saturated bias column can leave the Hessian singular; a tiny ridge
    // keeps the step defined without moving the optimum.
    hessian.diagonal().array() += 1e-12;
    const Eigen::VectorXd step = hessian.ldlt().solve(grad);

    double t = 1.0;
    Eigen::VectorXd candidate = theta - step;
    double next = objective(xm, y, candidate, l2);
    const double slope = grad.dot(step);
    while (next > current - 1e-4 * t * slope && t > 1e-12) {
      t *= 0.5;
      candidate = theta - t * step;
      next = objective(xm, y, candidate, l2);
    }
    if (t <= 1e-12) {
      // No descent possible at double precision; the gradient test decides.
      theta = candidate;
      current = next;
      model.converged = grad.cwiseAbs().maxCoeff() < options.tol;
      break;
    }
    theta = candidate;
    current = next;
  }
  model.weights.assign(theta.data(), theta.data() + d);
  model.bias = theta(d);
  model.final_loss = current;
  return model;
}

std::vector<double> predict_scores(const LogRegModel& model, const MatrixView& x) {
  if (x.cols != model.weights.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "model expects " + std::to_string(model.weights.size()) + " columns, got " +
                    std::to_string(x.cols));
  }
  std::vector<double> values(x.values.begin(), x.values.end());
  if (!model.standardization.empty()) values = standardize_apply(model.standardization, x);
  std::vector<double> scores(x.rows);
  for (std::size_t r = 0; r < x.rows; ++r) {
    double z = model.bias;
    for (std::size_t c = 0; c < x.cols; ++c) z += model.weights[c] * values[r * x.cols + c];
    scores[r] = sigmoid(z);
  }
  return scores;
}

PRResult auc_pr(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw Error(ErrorCode::kInvalidArgument, "score and label counts differ");
  PRResult result;
  result.total = labels.size();
  result.positives = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1));
  if (result.positives == 0 || result.positives == result.total) {
    throw Error(ErrorCode::kUndefinedMetric, "AUC-PR needs both positive and negative labels");
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  const auto total_pos = static_cast<double>(result.positives);
  std::size_t tp = 0, fp = 0;
  double prev_recall = 0.0;
  for (std::size_t i = 0; i < order.size();) {
    const double threshold = scores[order[i]];
    for (; i < order.size() && scores[order[i]] == threshold; ++i) {
      labels[order[i]] == 1 ? ++tp : ++fp;
    }
    const double recall = static_cast<double>(tp) / total_pos;
    const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    result.auc_pr += (recall - prev_recall) * precision;
    result.curve.emplace_back(recall, precision);
    prev_recall = recall;
  }
  return result;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "pearson needs two sequences of equal length >= 2");
  }
  const auto n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw Error(ErrorCode::kUndefinedMetric, "correlation undefined for a constant sequence");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double percent_gain(double auc_lo, double auc_hi) {
  if (auc_lo == 0.0) throw Error(ErrorCode::kUndefinedMetric, "gain undefined for a zero baseline");
  return 100.0 * (auc_hi - auc_lo) / auc_lo;
}

nlohmann::json to_json(const LogRegModel& model) {
  return nlohmann::json{{"weights", model.weights},
                        {"bias", model.bias},
                        {"l2_strength", model.l2_strength},
                        {"standardization",
                         {{"mean", model.standardization.mean}, {"stddev", model.standardization.stddev}}},
                        {"converged", model.converged},
                        {"iterations", model.iterations}};
}

LogRegModel model_from_json(const nlohmann::json& j) {
  try {
    LogRegModel model;
    model.weights = j.at("weights").get<std::vector<double>>();
    model.bias = j.at("bias").get<double>();
    model.l2_strength = j.at("l2_strength").get<double>();
    model.standardization.mean = j.at("standardization").at("mean").get<std::vector<double>>();
    model.standardization.stddev = j.at("standardization").at("stddev").get<std::vector<double>>();
    model.converged = j.at("converged").get<bool>();
    model.iterations = j.value("iterations", std::size_t{0});
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("model JSON: ") + e.what());
  }
}

}  // namespace hypex

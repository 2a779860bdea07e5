#include "vlnaug/aux_loss.hpp"

#include <algorithm>
#include <cmath>

#include "vlnaug/error.hpp"
#include "vlnaug/simd/kernels.hpp"
#include "vlnaug/splitmix64.hpp"

namespace vlnaug::aux {

Vocab::Vocab(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!index_.emplace(tokens_[i], i).second) {
      throw Error("duplicate vocabulary token '" + tokens_[i] + "'");
    }
  }
}

std::size_t Vocab::index(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) throw Error("token '" + std::string(token) + "' not in vocabulary");
  return it->second;
}

bool Vocab::contains(std::string_view token) const {
  return index_.find(std::string(token)) != index_.end();
}

namespace {

void check_logits(std::span<const double> logits) {
  if (logits.empty()) throw Error("logits must be non-empty");
  for (double x : logits) {
    if (!std::isfinite(x)) throw Error("logits must be finite");
  }
}

void check_targets(const WordTargets& t, std::size_t vocab, double lambda, double beta) {
  if (lambda < 0.0) throw Error("lambda must be non-negative");
  if (beta < 0.0) throw Error("beta must be non-negative");
  if (lambda > 0.0 && t.objects.empty()) throw Error("lambda > 0 needs object targets");
  if (beta > 0.0 && !t.crafted) throw Error("beta > 0 needs a crafted target");
  auto in_range = [&](std::size_t i) {
    if (i >= vocab) throw Error("target index " + std::to_string(i) + " out of range");
  };
  for (std::size_t i : t.originals) in_range(i);
  for (std::size_t i : t.objects) in_range(i);
  if (t.crafted) in_range(*t.crafted);
}

LossBreakdown breakdown(std::span<const double> logp, const WordTargets& t, double lambda,
                        double beta) {
  LossBreakdown out;
  out.lambda = lambda;
  out.beta = beta;
  for (std::size_t i : t.originals) out.base += nll(logp, i);
  for (std::size_t i : t.objects) out.objects_term += nll(logp, i);
  if (t.crafted) out.crafted_term = nll(logp, *t.crafted);
  out.total = out.base;
  if (lambda != 0.0) out.total += lambda * out.objects_term;
  if (beta != 0.0) out.total += beta * out.crafted_term;
  return out;
}

}  // namespace

std::vector<double> log_softmax(std::span<const double> logits) {
  check_logits(logits);
  const double m = simd::reduce_max(logits);
  const double lse = m + std::log(simd::sum_exp_shifted(logits, m));
  std::vector<double> out(logits.size());
  simd::add_scalar(logits, -lse, out);
  return out;
}

double nll(std::span<const double> logp, std::size_t target) {
  if (target >= logp.size()) {
    throw Error("nll: target " + std::to_string(target) + " out of range");
  }
  return -logp[target];
}

LossBreakdown word_loss_objects(std::span<const double> logits, const WordTargets& targets,
                                double lambda) {
  check_targets(targets, logits.size(), lambda, 0.0);
  const auto logp = log_softmax(logits);
  LossBreakdown out = breakdown(logp, targets, lambda, 0.0);
  out.crafted_term = 0.0;
  return out;
}

LossBreakdown word_loss_crafted(std::span<const double> logits, const WordTargets& targets,
                                double beta) {
  check_targets(targets, logits.size(), 0.0, beta);
  const auto logp = log_softmax(logits);
  LossBreakdown out = breakdown(logp, targets, 0.0, beta);
  out.objects_term = 0.0;
  return out;
}

LossBreakdown word_loss(std::span<const double> logits, const WordTargets& targets,
                        double lambda, double beta) {
  check_targets(targets, logits.size(), lambda, beta);
  return breakdown(log_softmax(logits), targets, lambda, beta);
}

double sequence_loss(const std::vector<std::vector<double>>& logits,
                     const std::vector<WordTargets>& targets, double lambda, double beta) {
  if (logits.size() != targets.size()) throw Error("sequence_loss: length mismatch");
  if (logits.empty()) throw Error("sequence_loss: empty sequence");
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    sum += word_loss(logits[i], targets[i], lambda, beta).total;
  }
  return sum / static_cast<double>(logits.size());
}

std::vector<double> grad_logits(std::span<const double> logits, const WordTargets& targets,
                                double lambda, double beta) {
  check_logits(logits);
  check_targets(targets, logits.size(), lambda, beta);
  double weight = 3.0 + lambda * static_cast<double>(targets.objects.size());
  if (targets.crafted) weight += beta;

  // weight · softmax, computed as weight · exp(x − logsumexp).
  const double m = simd::reduce_max(logits);
  const double lse = m + std::log(simd::sum_exp_shifted(logits, m));
  std::vector<double> grad(logits.size());
  simd::scaled_exp_shifted(logits, lse, weight, grad);

  for (std::size_t i : targets.originals) grad[i] -= 1.0;
  for (std::size_t i : targets.objects) grad[i] -= lambda;
  if (targets.crafted) grad[*targets.crafted] -= beta;
  return grad;
}

}  // namespace vlnaug::aux

namespace vlnaug::aux {

GradientCheckStats gradient_check(std::size_t instances, std::uint64_t seed,
                                  std::size_t max_vocab, double lambda, double beta,
                                  std::size_t top_n) {
  if (max_vocab < 2) throw Error("gradient_check: max_vocab must be at least 2");
  SplitMix64 rng(seed);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
  };
  constexpr double kStep = 1e-5;

  GradientCheckStats stats;
  for (std::size_t k = 0; k < instances; ++k) {
    const std::size_t vocab = 2 + rng.below(max_vocab - 1);
    std::vector<double> logits(vocab);
    for (double& x : logits) x = uniform(-4.0, 4.0);
    WordTargets t;
    for (auto& o : t.originals) o = rng.below(vocab);
    for (std::size_t i = 0; i < top_n; ++i) t.objects.push_back(rng.below(vocab));
    t.crafted = rng.below(vocab);

    const auto analytic = grad_logits(logits, t, lambda, beta);
    double diff = 0.0, scale = 0.0;
    for (std::size_t j = 0; j < vocab; ++j) {
      auto plus = logits, minus = logits;
      plus[j] += kStep;
      minus[j] -= kStep;
      const double numeric = (word_loss(plus, t, lambda, beta).total -
                              word_loss(minus, t, lambda, beta).total) /
                             (2.0 * kStep);
      diff = std::max(diff, std::abs(analytic[j] - numeric));
      scale = std::max({scale, std::abs(analytic[j]), std::abs(numeric)});
    }
    stats.max_relative_error = std::max(stats.max_relative_error, scale > 0 ? diff / scale : diff);
    ++stats.instances;
  }

  for (std::size_t v = 1; v <= max_vocab; ++v) {
    const std::vector<double> uniform_logits(v, 0.0);
    const double err = std::abs(nll(log_softmax(uniform_logits), 0) - std::log(double(v)));
    stats.uniform_nll_max_abs_error = std::max(stats.uniform_nll_max_abs_error, err);
  }
  return stats;
}

}  // namespace vlnaug::aux

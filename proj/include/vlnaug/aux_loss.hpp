#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

// Reference word losses for the speaker's auxiliary tasks. Per generated word:
//
//   objects: Σ_{3 originals} NLL + λ · Σ_{N objects} NLL
//   crafted: Σ_{3 originals} NLL + β · NLL(crafted word)
//
// with NLL(logp, t) = −logp[t] over a max-shifted log-softmax. Everything is
// double precision; grad_logits is the analytic gradient of the combined loss.
namespace vlnaug::aux {

class Vocab {
 public:
  Vocab() = default;
  // Throws vlnaug::Error on duplicate tokens.
  explicit Vocab(std::vector<std::string> tokens);

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(std::size_t index) const { return tokens_.at(index); }
  // Throws for unknown tokens.
  std::size_t index(std::string_view token) const;
  bool contains(std::string_view token) const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct WordTargets {
  std::array<std::size_t, 3> originals{};
  std::vector<std::size_t> objects;
  std::optional<std::size_t> crafted;
};

struct LossBreakdown {
  double base = 0.0;
  double objects_term = 0.0;
  double crafted_term = 0.0;
  double total = 0.0;
  double lambda = 0.0;
  double beta = 0.0;
};

std::vector<double> log_softmax(std::span<const double> logits);
double nll(std::span<const double> logp, std::size_t target);

LossBreakdown word_loss_objects(std::span<const double> logits, const WordTargets& targets,
                                double lambda);
LossBreakdown word_loss_crafted(std::span<const double> logits, const WordTargets& targets,
                                double beta);
// Both auxiliary terms at once; the loss grad_logits differentiates.
LossBreakdown word_loss(std::span<const double> logits, const WordTargets& targets,
                        double lambda, double beta);

// Mean of per-word combined totals.
double sequence_loss(const std::vector<std::vector<double>>& logits,
                     const std::vector<WordTargets>& targets, double lambda, double beta);

std::vector<double> grad_logits(std::span<const double> logits, const WordTargets& targets,
                                double lambda, double beta);

struct GradientCheckStats {
  std::size_t instances = 0;
  // max over instances of ‖analytic − numeric‖∞ / max(‖analytic‖∞, ‖numeric‖∞)
  double max_relative_error = 0.0;
  // max over V of |nll(uniform logits) − ln V|
  double uniform_nll_max_abs_error = 0.0;
};

// Central finite differences (step 1e-5) against grad_logits on random
// instances with 2 ≤ V ≤ max_vocab, `top_n` object targets and a crafted
// target, drawn from SplitMix64(seed).
GradientCheckStats gradient_check(std::size_t instances, std::uint64_t seed,
                                  std::size_t max_vocab, double lambda, double beta,
                                  std::size_t top_n);

}  // namespace vlnaug::aux

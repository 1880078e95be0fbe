#pragma once

#include "levelbound/kernel.hpp"
#include "levelbound/method.hpp"

#include <cstddef>
#include <vector>

namespace levelbound {

/// Source of the probability bounds used by the ratio coefficient forms and
/// by bound assembly. Indices follow the provider's own level labeling;
/// queries use 1 <= l < i <= K.
template <class T>
class ProbabilityProvider {
 public:
  virtual ~ProbabilityProvider() = default;

  virtual int n() const = 0;
  virtual std::size_t K() const = 0;
  virtual bool supports(Direction d) const = 0;

  /// p_max(i, [0, l-1]) and p_min(i, [0, l-1])
  virtual T skip_max(std::size_t i, std::size_t l) const = 0;
  virtual T skip_min(std::size_t i, std::size_t l) const = 0;
  /// p_min(i, [l, i-1]) and p_max(i, [l, i-1])
  virtual T reach_min(std::size_t i, std::size_t l) const = 0;
  virtual T reach_max(std::size_t i, std::size_t l) const = 0;
  /// p_max(l, [0, l-1]) and p_min(l, [0, l-1])
  virtual T escape_max(std::size_t l) const = 0;
  virtual T escape_min(std::size_t l) const = 0;
};

/// Reads everything off a kernel. The kernel must outlive the provider.
template <class T>
class KernelProvider final : public ProbabilityProvider<T> {
 public:
  explicit KernelProvider(const LevelKernel<T>& kernel) : kernel_(kernel) {}

  int n() const override { return kernel_.partition().n; }
  std::size_t K() const override { return kernel_.K(); }
  bool supports(Direction) const override { return true; }

  T skip_max(std::size_t i, std::size_t l) const override { return kernel_.skip_max(i, l); }
  T skip_min(std::size_t i, std::size_t l) const override { return kernel_.skip_min(i, l); }
  T reach_min(std::size_t i, std::size_t l) const override { return kernel_.reach_min(i, l); }
  T reach_max(std::size_t i, std::size_t l) const override { return kernel_.reach_max(i, l); }
  T escape_max(std::size_t l) const override { return kernel_.escape_max(l); }
  T escape_min(std::size_t l) const override { return kernel_.escape_min(l); }

 private:
  const LevelKernel<T>& kernel_;
};

/// Exact probabilities for an arbitrary labeling of single weight classes
/// (label 0 = everything unlisted). Unlike a kernel it tolerates labelings
/// whose order disagrees with fitness; mass that lands on a label above the
/// source counts neither as skip nor as reach.
template <class T>
class LabeledExactProvider final : public ProbabilityProvider<T> {
 public:
  /// labels[0] is ignored (complement); labels[i] for i >= 1 are single
  /// weights.
  LabeledExactProvider(const ProblemSpec& spec, std::vector<std::vector<int>> labels);

  int n() const override { return n_; }
  std::size_t K() const override { return mass_.size() - 1; }
  bool supports(Direction) const override { return true; }

  T skip_max(std::size_t i, std::size_t l) const override { return skip(i, l); }
  T skip_min(std::size_t i, std::size_t l) const override { return skip(i, l); }
  T reach_min(std::size_t i, std::size_t l) const override { return reach(i, l); }
  T reach_max(std::size_t i, std::size_t l) const override { return reach(i, l); }
  T escape_max(std::size_t l) const override { return skip(l, l); }
  T escape_min(std::size_t l) const override { return skip(l, l); }

  /// Accepted mass from label i onto label t (any t).
  const T& mass(std::size_t i, std::size_t t) const { return mass_[i][t]; }

 private:
  T skip(std::size_t i, std::size_t l) const;
  T reach(std::size_t i, std::size_t l) const;

  int n_;
  std::vector<std::vector<T>> mass_;
};

/// The closed-form binomial-sum bounds printed for the four worked
/// examples, reproduced as written. OneMax and FullyDeceptive use the
/// fitness partition; TwoMax1 and Deceptive use their preset sub-digraph
/// labeling (K = n/2 + 1). Only OneMax has upper-direction forms.
template <class T>
class PaperAnalyticProvider final : public ProbabilityProvider<T> {
 public:
  PaperAnalyticProvider(FunctionKind function, int n);

  int n() const override { return n_; }
  std::size_t K() const override { return K_; }
  bool supports(Direction d) const override;
  FunctionKind function() const { return function_; }

  T skip_max(std::size_t i, std::size_t l) const override;
  T skip_min(std::size_t i, std::size_t l) const override;
  T reach_min(std::size_t i, std::size_t l) const override;
  T reach_max(std::size_t i, std::size_t l) const override;
  T escape_max(std::size_t l) const override;
  T escape_min(std::size_t l) const override;

  /// Weight classes per label in the provider's own order (label 0 is the
  /// optimum or complement).
  std::vector<std::vector<int>> labels() const;

 private:
  // sum_{j=lo}^{hi} C(m,j) q^j r^(n-j)  (full) or r^(m-j) (own)
  T tail_full(int m, int lo, int hi) const;
  T tail_own(int m, int lo, int hi) const;
  T range_sum(const std::vector<std::vector<T>>& pre, const std::vector<std::vector<T>>& suf,
              int m, int lo, int hi) const;
  T binom(int m, int j) const;
  T qp(int e) const;
  T rp(int e) const;
  void require_upper() const;

  FunctionKind function_;
  int n_;
  std::size_t K_;
  std::vector<T> q_pow_, r_pow_;
  // terms C(m,j) q^j r^(n-j) ("full") and C(m,j) q^j r^(m-j) ("own");
  // pre[m][j] sums j' = 1..j, suf[m][j] sums j' = j..m
  std::vector<std::vector<T>> full_pre_, full_suf_, own_pre_, own_suf_;
};

}  // namespace levelbound

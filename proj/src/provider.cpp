#include "levelbound/provider.hpp"

#include "levelbound/errors.hpp"

#include <string>

namespace levelbound {

template <class T>
LabeledExactProvider<T>::LabeledExactProvider(const ProblemSpec& spec,
                                              std::vector<std::vector<int>> labels)
    : n_(spec.n) {
  spec.validate();
  if (labels.size() < 2) throw ArgumentError("labeling needs at least one non-complement label");
  std::vector<std::size_t> label_of(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i].size() != 1) throw ArgumentError("labels must be single weight classes");
    const int w = labels[i].front();
    if (w < 0 || w > n_) throw ArgumentError("label weight out of range: " + std::to_string(w));
    if (label_of[static_cast<std::size_t>(w)] != 0) {
      throw ArgumentError("weight labeled twice: " + std::to_string(w));
    }
    label_of[static_cast<std::size_t>(w)] = i;
  }
  const std::size_t K = labels.size() - 1;
  mass_.assign(K + 1, std::vector<T>(K + 1, T(0)));
  for (std::size_t i = 1; i <= K; ++i) {
    const int w = labels[i].front();
    const Rational f = spec.fitness(w);
    const std::vector<T> row = weight_transition_row<T>(n_, w);
    for (int w2 = 0; w2 <= n_; ++w2) {
      if (w2 == w || spec.fitness(w2) < f) continue;
      mass_[i][label_of[static_cast<std::size_t>(w2)]] += row[static_cast<std::size_t>(w2)];
    }
  }
}

template <class T>
T LabeledExactProvider<T>::skip(std::size_t i, std::size_t l) const {
  T sum = 0;
  for (std::size_t t = 0; t < l; ++t) sum += mass_[i][t];
  return sum;
}

template <class T>
T LabeledExactProvider<T>::reach(std::size_t i, std::size_t l) const {
  T sum = 0;
  for (std::size_t t = l; t < i; ++t) sum += mass_[i][t];
  return sum;
}

template <class T>
PaperAnalyticProvider<T>::PaperAnalyticProvider(FunctionKind function, int n)
    : function_(function), n_(n) {
  if (function == FunctionKind::custom) {
    throw ArgumentError("closed-form bounds exist only for the four benchmark functions");
  }
  ProblemSpec::make(function, n);  // validates n
  const bool half = function == FunctionKind::twomax1 || function == FunctionKind::deceptive;
  K_ = half ? static_cast<std::size_t>(n / 2 + 1) : static_cast<std::size_t>(n);

  const T q = make_ratio<T>(1, n);
  const T r = make_ratio<T>(n - 1, n);
  const std::size_t N = static_cast<std::size_t>(n);
  q_pow_.assign(N + 1, T(1));
  r_pow_.assign(N + 1, T(1));
  for (std::size_t j = 1; j <= N; ++j) {
    q_pow_[j] = q_pow_[j - 1] * q;
    r_pow_[j] = r_pow_[j - 1] * r;
  }
  // Prefix (from j = 1) and suffix (to j = m) sums of nonnegative terms.
  full_pre_.resize(N + 1);
  full_suf_.resize(N + 1);
  own_pre_.resize(N + 1);
  own_suf_.resize(N + 1);
  for (std::size_t m = 0; m <= N; ++m) {
    std::vector<T> full(m + 1), own(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
      const T c = to_scalar<T>(binomial(static_cast<unsigned>(m), static_cast<unsigned>(j)));
      full[j] = c * q_pow_[j] * r_pow_[N - j];
      own[j] = c * q_pow_[j] * r_pow_[m - j];
    }
    auto& fp = full_pre_[m];
    auto& op = own_pre_[m];
    fp.assign(m + 1, T(0));
    op.assign(m + 1, T(0));
    for (std::size_t j = 1; j <= m; ++j) {
      fp[j] = fp[j - 1] + full[j];
      op[j] = op[j - 1] + own[j];
    }
    auto& fs = full_suf_[m];
    auto& os = own_suf_[m];
    fs.assign(m + 2, T(0));
    os.assign(m + 2, T(0));
    for (std::size_t j = m + 1; j-- > 0;) {
      fs[j] = fs[j + 1] + full[j];
      os[j] = os[j + 1] + own[j];
    }
  }
}

template <class T>
bool PaperAnalyticProvider<T>::supports(Direction d) const {
  return d == Direction::lower || function_ == FunctionKind::onemax;
}

template <class T>
void PaperAnalyticProvider<T>::require_upper() const {
  if (function_ != FunctionKind::onemax) {
    throw ArgumentError("upper-direction closed forms are only available for onemax");
  }
}

template <class T>
T PaperAnalyticProvider<T>::range_sum(const std::vector<std::vector<T>>& pre,
                                      const std::vector<std::vector<T>>& suf, int m, int lo,
                                      int hi) const {
  if (lo < 1) lo = 1;
  if (hi > m) hi = m;
  if (m < 0 || lo > hi) return T(0);
  const auto mm = static_cast<std::size_t>(m);
  if (lo == 1) return pre[mm][static_cast<std::size_t>(hi)];
  if (hi == m) return suf[mm][static_cast<std::size_t>(lo)];
  // not used by any printed form; the subtraction here is harmless for
  // the interior ranges it would serve
  return T(pre[mm][static_cast<std::size_t>(hi)] - pre[mm][static_cast<std::size_t>(lo - 1)]);
}

template <class T>
T PaperAnalyticProvider<T>::tail_full(int m, int lo, int hi) const {
  return range_sum(full_pre_, full_suf_, m, lo, hi);
}

template <class T>
T PaperAnalyticProvider<T>::tail_own(int m, int lo, int hi) const {
  return range_sum(own_pre_, own_suf_, m, lo, hi);
}

template <class T>
T PaperAnalyticProvider<T>::binom(int m, int j) const {
  if (m < 0 || j < 0 || j > m) return T(0);
  return to_scalar<T>(binomial(static_cast<unsigned>(m), static_cast<unsigned>(j)));
}

template <class T>
T PaperAnalyticProvider<T>::qp(int e) const {
  return q_pow_[static_cast<std::size_t>(e)];
}

template <class T>
T PaperAnalyticProvider<T>::rp(int e) const {
  return r_pow_[static_cast<std::size_t>(e)];
}

namespace {

void check_pair(std::size_t i, std::size_t l, std::size_t K) {
  if (l < 1 || l >= i || i > K) throw ArgumentError("closed forms need 1 <= l < i <= K");
}

}  // namespace

template <class T>
T PaperAnalyticProvider<T>::skip_max(std::size_t iu, std::size_t lu) const {
  check_pair(iu, lu, K_);
  const int n = n_, i = static_cast<int>(iu), l = static_cast<int>(lu), h = n / 2;
  switch (function_) {
    case FunctionKind::onemax:
      return tail_own(i, i - l + 1, i);
    case FunctionKind::fullydeceptive:
      return T(binom(i - 1, i - l + 1) * qp(i - l + 1) + qp(n - i + 1) * rp(i - 1));
    case FunctionKind::twomax1:
      if (i == h + 1) return T(1);
      return T(binom(i, i - l + 1) * qp(i - l + 1) + qp(n - i) * rp(i));
    case FunctionKind::deceptive:
      return T(binom(i - 1, i - l + 1) * qp(i - l + 1) +
               binom(n - i + 1, n - 2 * i + 2) * qp(n - 2 * i + 2));
    case FunctionKind::custom:
      break;
  }
  throw ArgumentError("unsupported function");
}

template <class T>
T PaperAnalyticProvider<T>::reach_min(std::size_t iu, std::size_t lu) const {
  check_pair(iu, lu, K_);
  const int n = n_, i = static_cast<int>(iu), l = static_cast<int>(lu), h = n / 2;
  switch (function_) {
    case FunctionKind::onemax:
      return tail_full(i, 1, i - l);
    case FunctionKind::fullydeceptive:
    case FunctionKind::deceptive:
      return tail_full(i - 1, 1, i - l);
    case FunctionKind::twomax1:
      if (i == h + 1) return T(binom(n, 1) * qp(1) * rp(n - 1));
      return tail_full(i, 1, i - l);
    case FunctionKind::custom:
      break;
  }
  throw ArgumentError("unsupported function");
}

template <class T>
T PaperAnalyticProvider<T>::skip_min(std::size_t i, std::size_t l) const {
  require_upper();
  check_pair(i, l, K_);
  const int ii = static_cast<int>(i);
  return tail_full(ii, ii - static_cast<int>(l) + 1, ii);
}

template <class T>
T PaperAnalyticProvider<T>::reach_max(std::size_t i, std::size_t l) const {
  require_upper();
  check_pair(i, l, K_);
  const int ii = static_cast<int>(i);
  return tail_own(ii, 1, ii - static_cast<int>(l));
}

template <class T>
T PaperAnalyticProvider<T>::escape_max(std::size_t lu) const {
  if (lu < 1 || lu > K_) throw ArgumentError("escape needs 1 <= l <= K");
  const int n = n_, l = static_cast<int>(lu), h = n / 2;
  switch (function_) {
    case FunctionKind::onemax:
      return tail_own(l, 1, l);
    case FunctionKind::fullydeceptive:
      if (l == 1) return qp(n);
      return T(make_ratio<T>(l - 1, n) + qp(n - l + 1));
    case FunctionKind::twomax1:
      if (l == h + 1) return T(1);
      return T(make_ratio<T>(l, n) + qp(n - l) * rp(l));
    case FunctionKind::deceptive:
      if (l == 1) return qp(n);
      if (l == h + 1) return T(1);
      return T(make_ratio<T>(l - 1, n) + binom(n - l + 1, n - 2 * l + 2) * qp(n - 2 * l + 2));
    case FunctionKind::custom:
      break;
  }
  throw ArgumentError("unsupported function");
}

template <class T>
T PaperAnalyticProvider<T>::escape_min(std::size_t l) const {
  require_upper();
  if (l < 1 || l > K_) throw ArgumentError("escape needs 1 <= l <= K");
  return tail_full(static_cast<int>(l), 1, static_cast<int>(l));
}

template <class T>
std::vector<std::vector<int>> PaperAnalyticProvider<T>::labels() const {
  const int n = n_, h = n / 2;
  std::vector<std::vector<int>> out(K_ + 1);
  switch (function_) {
    case FunctionKind::onemax:
      for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = {n - i};
      break;
    case FunctionKind::fullydeceptive:
      out[0] = {0};
      for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i)] = {n - i + 1};
      break;
    case FunctionKind::twomax1:
      for (int w = 0; w <= n; ++w) {
        if (w < h - 1 || w == n) out[0].push_back(w);
      }
      for (int i = 1; i <= h; ++i) out[static_cast<std::size_t>(i)] = {n - i};
      out[static_cast<std::size_t>(h + 1)] = {h - 1};
      break;
    case FunctionKind::deceptive:
      for (int w = 0; w < h; ++w) out[0].push_back(w);
      for (int i = 1; i <= h + 1; ++i) out[static_cast<std::size_t>(i)] = {n - i + 1};
      break;
    case FunctionKind::custom:
      break;
  }
  return out;
}

template class LabeledExactProvider<Real>;
template class LabeledExactProvider<Rational>;
template class PaperAnalyticProvider<Real>;
template class PaperAnalyticProvider<Rational>;

}  // namespace levelbound

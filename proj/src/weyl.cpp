#include "bcinterp/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace bcinterp {

namespace {

std::vector<int> invert(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (size_t j = 0; j < perm.size(); ++j) inv[perm[j]] = static_cast<int>(j);
  return inv;
}

}  // namespace

SignedPermutation::SignedPermutation(int n)
    : signs_(n, int8_t{1}), perm_(n), inv_(n) {
  if (n <= 0) throw std::invalid_argument("SignedPermutation: n must be positive");
  std::iota(perm_.begin(), perm_.end(), 0);
  inv_ = perm_;
}

SignedPermutation::SignedPermutation(std::vector<int8_t> signs, std::vector<int> perm)
    : signs_(std::move(signs)), perm_(std::move(perm)) {
  if (signs_.empty() || signs_.size() != perm_.size())
    throw std::invalid_argument("SignedPermutation: size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[p])
      throw std::invalid_argument("SignedPermutation: not a permutation");
    seen[p] = true;
  }
  for (int8_t s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("SignedPermutation: sign not ±1");
  inv_ = invert(perm_);
}

SignedPermutation SignedPermutation::identity(int n) { return SignedPermutation(n); }

SignedPermutation SignedPermutation::simple(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("SignedPermutation::simple: index out of range");
  SignedPermutation w(n);
  if (i < n) {
    std::swap(w.perm_[i - 1], w.perm_[i]);
    w.inv_ = invert(w.perm_);
  } else {
    w.signs_[n - 1] = -1;
  }
  return w;
}

SignedPermutation SignedPermutation::longest(int n) {
  SignedPermutation w(n);
  std::fill(w.signs_.begin(), w.signs_.end(), int8_t{-1});
  return w;
}

bool SignedPermutation::is_identity() const {
  for (int j = 0; j < n(); ++j)
    if (signs_[j] != 1 || perm_[j] != j) return false;
  return true;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int8_t> signs(n());
  for (int j = 0; j < n(); ++j) signs[j] = signs_[perm_[j]];
  return SignedPermutation(std::move(signs), inv_);
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("SignedPermutation: arity mismatch");
  const int n = a.n();
  std::vector<int> perm(n);
  std::vector<int8_t> signs(n);
  for (int j = 0; j < n; ++j) perm[j] = a.perm_[b.perm_[j]];
  for (int j = 0; j < n; ++j)
    signs[j] = static_cast<int8_t>(a.signs_[j] * b.signs_[a.inv_[j]]);
  return SignedPermutation(std::move(signs), std::move(perm));
}

bool SignedPermutation::operator==(const SignedPermutation& other) const {
  return signs_ == other.signs_ && perm_ == other.perm_;
}

bool SignedPermutation::operator<(const SignedPermutation& other) const {
  if (signs_ != other.signs_) return signs_ < other.signs_;
  return perm_ < other.perm_;
}

std::vector<int> SignedPermutation::one_based_perm() const {
  std::vector<int> out(perm_.size());
  for (size_t j = 0; j < perm_.size(); ++j) out[j] = perm_[j] + 1;
  return out;
}

ExponentVector act(const SignedPermutation& w, const ExponentVector& a) {
  if (static_cast<int>(a.size()) != w.n())
    throw std::invalid_argument("act: arity mismatch");
  ExponentVector out(a.size());
  for (int j = 0; j < w.n(); ++j) out[j] = w.sign(j) * a[w.perm_inverse(j)];
  return out;
}

Partition dominant(const ExponentVector& a) {
  std::vector<int> parts(a.size());
  for (size_t i = 0; i < a.size(); ++i) parts[i] = std::abs(a[i]);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

SignedPermutation min_coset_rep(const ExponentVector& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("min_coset_rep: empty vector");
  std::vector<int8_t> signs(n);
  for (int i = 0; i < n; ++i) signs[i] = a[i] < 0 ? int8_t{-1} : int8_t{1};
  // Slot i gets rank by decreasing |a_i|; among equal |a_i| the nonnegative
  // slots come first in slot order, then the negative slots in reverse order.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    const bool neg = a[i] < 0;
    return std::make_tuple(-std::abs(a[i]), neg ? 1 : 0, neg ? -i : i);
  };
  std::sort(order.begin(), order.end(), [&](int i, int j) { return key(i) < key(j); });
  return SignedPermutation(std::move(signs), std::move(order));
}

std::vector<ExponentVector> positive_roots(int n) {
  std::vector<ExponentVector> roots;
  roots.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ExponentVector r(n, 0);
      r[i] = 1;
      r[j] = -1;
      roots.push_back(r);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ExponentVector r(n, 0);
      r[i] = 1;
      r[j] = 1;
      roots.push_back(r);
    }
  for (int i = 0; i < n; ++i) {
    ExponentVector r(n, 0);
    r[i] = 1;
    roots.push_back(r);
  }
  return roots;
}

bool is_negative_root(const ExponentVector& root) {
  for (int e : root) {
    if (e > 0) return false;
    if (e < 0) return true;
  }
  throw std::invalid_argument("is_negative_root: zero vector");
}

int length(const SignedPermutation& w) {
  int len = 0;
  for (const auto& beta : positive_roots(w.n()))
    if (is_negative_root(act(w, beta))) ++len;
  return len;
}

std::vector<int> reduced_word(const SignedPermutation& w) {
  std::vector<int> word;
  SignedPermutation rest = w;
  const int n = w.n();
  while (!rest.is_identity()) {
    SignedPermutation inv = rest.inverse();
    int descent = 0;
    for (int i = 1; i <= n; ++i) {
      ExponentVector beta(n, 0);
      beta[i - 1] = 1;
      if (i < n) beta[i] = -1;
      if (is_negative_root(act(inv, beta))) {
        descent = i;
        break;
      }
    }
    if (descent == 0) throw std::logic_error("reduced_word: no descent found");
    word.push_back(descent);
    rest = SignedPermutation::simple(n, descent) * rest;
  }
  return word;
}

std::vector<ExponentVector> inversion_set(const SignedPermutation& w) {
  std::vector<ExponentVector> out;
  for (const auto& beta : positive_roots(w.n()))
    if (is_negative_root(act(w, beta))) out.push_back(beta);
  return out;
}

std::vector<ExponentVector> orbit(const Partition& lambda) {
  std::vector<int> asc = lambda.parts();
  std::sort(asc.begin(), asc.end());
  std::vector<ExponentVector> out;
  do {
    std::vector<int> nonzero;
    for (size_t i = 0; i < asc.size(); ++i)
      if (asc[i] != 0) nonzero.push_back(static_cast<int>(i));
    const int k = static_cast<int>(nonzero.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      ExponentVector v = asc;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) v[nonzero[b]] = -v[nonzero[b]];
      out.push_back(std::move(v));
    }
  } while (std::next_permutation(asc.begin(), asc.end()));
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

std::vector<SignedPermutation> enumerate_group(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("enumerate_group: only supported for 1 <= n <= 6");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int8_t> signs(n);
      for (int b = 0; b < n; ++b) signs[b] = (mask & (1 << b)) ? int8_t{-1} : int8_t{1};
      out.emplace_back(signs, perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CosetDecomposition min_reps_and_stabilizer(const Partition& lambda) {
  const int n = lambda.n();
  std::map<ExponentVector, std::vector<SignedPermutation>> fibers;
  for (const auto& w : enumerate_group(n)) fibers[act(w, lambda.as_exponent())].push_back(w);

  CosetDecomposition out;
  out.stabilizer = fibers.at(lambda.as_exponent());
  for (const auto& [image, elems] : fibers) {
    int best = length(elems.front());
    size_t best_at = 0, best_count = 1;
    for (size_t i = 1; i < elems.size(); ++i) {
      const int len = length(elems[i]);
      if (len < best) {
        best = len;
        best_at = i;
        best_count = 1;
      } else if (len == best) {
        ++best_count;
      }
    }
    if (best_count != 1)
      throw std::logic_error("min_reps_and_stabilizer: coset minimum not unique at " +
                             format_exponent(image));
    out.min_reps.push_back(elems[best_at]);
  }
  std::sort(out.min_reps.begin(), out.min_reps.end(),
            [](const SignedPermutation& a, const SignedPermutation& b) {
              const int la = length(a), lb = length(b);
              if (la != lb) return la < lb;
              return a < b;
            });
  std::sort(out.stabilizer.begin(), out.stabilizer.end());
  return out;
}

std::vector<int> min_perm_nonneg(const ExponentVector& b) {
  const int n = static_cast<int>(b.size());
  if (n == 0) throw std::invalid_argument("min_perm_nonneg: empty vector");
  for (int e : b)
    if (e < 0) throw std::invalid_argument("min_perm_nonneg: negative entry");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (b[i] != b[j]) return b[i] > b[j];
    return i < j;
  });
  std::vector<int> out(n);
  for (int r = 0; r < n; ++r) out[r] = order[r] + 1;
  return out;
}

}  // namespace bcinterp

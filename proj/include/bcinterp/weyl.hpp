#pragma once

#include <cstdint>
#include <vector>

#include "bcinterp/exponent.hpp"

namespace bcinterp {

// Element of the hyperoctahedral group {±1}^n ⋊ S_n, stored as "permute, then
// flip signs": with sign vector σ and permutation π the action on an integer
// vector is (w a)_j = σ_j · a_{π⁻¹(j)}.  Generators: s_i (1 ≤ i < n) swaps
// slots i and i+1, s_n flips the sign of slot n.
class SignedPermutation {
 public:
  explicit SignedPermutation(int n);  // identity
  SignedPermutation(std::vector<int8_t> signs, std::vector<int> perm);

  static SignedPermutation identity(int n);
  static SignedPermutation simple(int n, int i);  // s_i, 1 ≤ i ≤ n
  static SignedPermutation longest(int n);        // -identity

  int n() const { return static_cast<int>(perm_.size()); }
  int8_t sign(int j) const { return signs_[j]; }       // 0-based slot
  int perm(int j) const { return perm_[j]; }           // 0-based, j ↦ π(j)
  int perm_inverse(int j) const { return inv_[j]; }    // 0-based, j ↦ π⁻¹(j)
  bool is_identity() const;

  SignedPermutation inverse() const;

  // Composition a*b acts as "apply b, then a".
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);

  bool operator==(const SignedPermutation& other) const;
  bool operator<(const SignedPermutation& other) const;  // deterministic container order

  std::vector<int> one_based_perm() const;  // images π(1..n), for reports

 private:
  std::vector<int8_t> signs_;
  std::vector<int> perm_;
  std::vector<int> inv_;
};

// (w a)_j = σ_j · a_{π⁻¹(j)}.  Also the correct action on root vectors.
ExponentVector act(const SignedPermutation& w, const ExponentVector& a);

// Entries replaced by absolute values and sorted decreasingly.
Partition dominant(const ExponentVector& a);

// The minimal-length w with w(dominant(a)) = a.  Sign part: sgn(a_i) with
// sgn(0) = +1.  Permutation part: slots sorted by decreasing |a_i|, ties among
// equal |a_i| broken with nonnegative entries first (in slot order) followed by
// negative entries (in reverse slot order).
SignedPermutation min_coset_rep(const ExponentVector& a);

int length(const SignedPermutation& w);

// Indices i_1,...,i_r (1-based) with w = s_{i_1} · ... · s_{i_r}, r = length(w).
std::vector<int> reduced_word(const SignedPermutation& w);

// Positive roots sent to negative ones: {β ∈ R⁺ : w(β) ∈ R⁻}.
std::vector<ExponentVector> inversion_set(const SignedPermutation& w);

// Type B_n positive roots: e_i − e_j and e_i + e_j (i < j), then e_i.
std::vector<ExponentVector> positive_roots(int n);
bool is_negative_root(const ExponentVector& root);

// All signed rearrangements of λ, without duplicates, in canonical order.
std::vector<ExponentVector> orbit(const Partition& lambda);

struct CosetDecomposition {
  std::vector<SignedPermutation> min_reps;    // minimal-length coset representatives
  std::vector<SignedPermutation> stabilizer;  // {w : w(λ) = λ}
};
// Every w factors uniquely as (min rep) · (stabilizer element) with lengths adding.
CosetDecomposition min_reps_and_stabilizer(const Partition& lambda);

std::vector<SignedPermutation> enumerate_group(int n);  // all 2^n · n! elements

// Minimal-length plain permutation u ∈ S_n with u(dominant(b)) = b for
// entrywise-nonnegative b; ties among equal entries keep slot order.
// Returned as 1-based images u(1..n).  Differs in general from the
// permutation part of min_coset_rep(b).
std::vector<int> min_perm_nonneg(const ExponentVector& b);

}  // namespace bcinterp

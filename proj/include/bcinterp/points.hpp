#pragma once

#include <string>
#include <vector>

#include "bcinterp/exponent.hpp"
#include "bcinterp/rational.hpp"
#include "bcinterp/weyl.hpp"

namespace bcinterp {

using Node = std::vector<Rational>;

inline constexpr int kDefaultGenericityWindow = 32;

struct GenericityReport {
  bool ok = true;
  int window = 0;
  std::string violation;  // first violated condition, empty when ok
};

// Base point q plus node parameters τ_1..τ_n, all rationals in (0,1).
// Principal mode derives τ_i = s·t^{n-i} from (s,t) and remembers both.
class InterpParams {
 public:
  static InterpParams general(const Rational& q, std::vector<Rational> tau);
  static InterpParams principal(int n, const Rational& q, const Rational& s, const Rational& t);

  int n() const { return static_cast<int>(tau_.size()); }
  const Rational& q() const { return q_; }
  const std::vector<Rational>& tau() const { return tau_; }
  bool is_principal() const { return principal_; }
  const Rational& s() const;  // principal mode only
  const Rational& t() const;  // principal mode only

  // Whether 0 < τ_1 < ... < τ_n < 1 (recorded, not enforced; τ with repeats
  // is allowed and gated on solver nonsingularity instead).
  bool strictly_ordered() const;

  // Certifies τ_i^2, τ_i·τ_j and τ_i/τ_j (i ≠ j) avoid q^k for |k| ≤ window.
  GenericityReport genericity(int window = kDefaultGenericityWindow) const;

  InterpParams drop_last() const;  // arity n-1, same q; principal stays principal
  InterpParams q_shifted() const;  // τ ↦ qτ, same arity

  std::string cache_key() const;
  bool operator==(const InterpParams& other) const;

 private:
  InterpParams() = default;
  Rational q_;
  std::vector<Rational> tau_;
  bool principal_ = false;
  Rational s_, t_;
};

// Partition node: coordinates q^{μ_i}·τ_i.
Node node_partition(const Partition& mu, const InterpParams& p);

// General node: coordinates q^{α_i}·τ_{π⁻¹(i)}^{sgn(α_i)} with π the
// permutation part of min_coset_rep(α) and sgn(0) = +1.  Restricts to
// node_partition on partitions.
Node node_general(const ExponentVector& alpha, const InterpParams& p);

// Multiplicative action: (w z)_j = z_{π⁻¹(j)}^{σ_j}.
Node act_node(const SignedPermutation& w, const Node& z);

// z^β = Π z_i^{β_i}.
Rational node_monomial(const Node& z, const ExponentVector& beta);

// Checks the clause of the node/action compatibility that applies to (α, j):
//   'a'  s_jα ≠ α:            s_j·ᾱ = (s_jα)⁻   (multiplicative action)
//   'b'  j < n, α_j = α_{j+1}: ᾱ_j/ᾱ_{j+1} = (τ_k/τ_{k+sgn(α_j)})^{sgn(α_j)}, k = π⁻¹(j)
//   'c'  j = n, α_n = 0:       ᾱ_n = τ_n
struct NodeActionCheck {
  char clause = '?';
  bool pass = false;
  std::string detail;
};
NodeActionCheck node_action_check(const ExponentVector& alpha, int j, const InterpParams& p);

// All α ∈ Z^n with |α| ≤ d, canonical (weight, lex) order.
std::vector<ExponentVector> enumerate_ball(int n, int d);
// All partitions with weight ≤ d, canonical order.
std::vector<Partition> enumerate_ball_dominant(int n, int d);

}  // namespace bcinterp

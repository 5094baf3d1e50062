#pragma once

#include <string>
#include <vector>

namespace bcinterp {

// Exponent vector of a Laurent monomial x^a = x_1^{a_1} ... x_n^{a_n}.
using ExponentVector = std::vector<int>;

// |a| = sum of |a_i|; the degree of the monomial x^a.
int weight(const ExponentVector& a);

// Canonical term order: by weight first, then lexicographically on entries.
struct GradedLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

std::string format_exponent(const ExponentVector& a);  // "(a1,a2,...)" for messages

// Weakly decreasing nonnegative integer vector with a fixed number of parts
// (trailing zeros kept, so arity is part of the value).
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  static Partition zero(int n);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i]; }  // 0-based
  int weight() const;
  const ExponentVector& as_exponent() const { return parts_; }

  // λ with every part lowered by one; requires the last part > 0.
  Partition lowered() const;
  // λ with the last part dropped; requires the last part = 0.
  Partition drop_last() const;

  bool operator==(const Partition& other) const = default;
  bool operator<(const Partition& other) const;  // weight then lex; container order

 private:
  std::vector<int> parts_;
};

// Partial-sum order: a ≤ b iff a_1+...+a_i ≤ b_1+...+b_i for every i.
bool dominance_leq(const Partition& a, const Partition& b);

// Containment: a_i ≤ b_i for every i.
bool contained_in(const Partition& a, const Partition& b);

}  // namespace bcinterp

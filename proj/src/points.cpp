#include "bcinterp/points.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bcinterp {

namespace {

void require_unit_interval(const Rational& v, const char* what) {
  if (v <= 0 || v >= 1)
    throw std::invalid_argument(std::string("InterpParams: ") + what + " must lie in (0,1)");
}

}  // namespace

InterpParams InterpParams::general(const Rational& q, std::vector<Rational> tau) {
  if (tau.empty()) throw std::invalid_argument("InterpParams: empty tau");
  require_unit_interval(q, "q");
  for (const auto& t : tau) require_unit_interval(t, "tau entries");
  InterpParams p;
  p.q_ = q;
  p.tau_ = std::move(tau);
  return p;
}

InterpParams InterpParams::principal(int n, const Rational& q, const Rational& s,
                                     const Rational& t) {
  if (n < 1) throw std::invalid_argument("InterpParams: n must be positive");
  require_unit_interval(q, "q");
  require_unit_interval(s, "s");
  require_unit_interval(t, "t");
  InterpParams p;
  p.q_ = q;
  p.principal_ = true;
  p.s_ = s;
  p.t_ = t;
  p.tau_.resize(n);
  for (int i = 0; i < n; ++i) p.tau_[i] = s * rat_pow(t, n - 1 - i);
  return p;
}

const Rational& InterpParams::s() const {
  if (!principal_) throw std::logic_error("InterpParams::s: not in principal mode");
  return s_;
}

const Rational& InterpParams::t() const {
  if (!principal_) throw std::logic_error("InterpParams::t: not in principal mode");
  return t_;
}

bool InterpParams::strictly_ordered() const {
  for (size_t i = 1; i < tau_.size(); ++i)
    if (tau_[i - 1] >= tau_[i]) return false;
  return tau_.front() > 0 && tau_.back() < 1;
}

GenericityReport InterpParams::genericity(int window) const {
  GenericityReport report;
  report.window = window;
  std::vector<Rational> qpow(2 * window + 1);
  for (int k = -window; k <= window; ++k) qpow[k + window] = rat_pow(q_, k);
  auto in_qpow = [&](const Rational& v) {
    return std::find(qpow.begin(), qpow.end(), v) != qpow.end();
  };
  const int n = this->n();
  for (int i = 0; i < n; ++i) {
    if (in_qpow(Rational(tau_[i] * tau_[i]))) {
      report.ok = false;
      report.violation = "tau_" + std::to_string(i + 1) + "^2 is a power of q";
      return report;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (in_qpow(Rational(tau_[i] * tau_[j]))) {
        report.ok = false;
        report.violation = "tau_" + std::to_string(i + 1) + "*tau_" + std::to_string(j + 1) +
                           " is a power of q";
        return report;
      }
      if (in_qpow(Rational(tau_[i] / tau_[j]))) {
        report.ok = false;
        report.violation = "tau_" + std::to_string(i + 1) + "/tau_" + std::to_string(j + 1) +
                           " is a power of q";
        return report;
      }
    }
  }
  return report;
}

InterpParams InterpParams::drop_last() const {
  if (n() < 2) throw std::invalid_argument("InterpParams::drop_last: arity too small");
  if (principal_) return principal(n() - 1, q_, Rational(s_ * t_), t_);
  return general(q_, std::vector<Rational>(tau_.begin(), tau_.end() - 1));
}

InterpParams InterpParams::q_shifted() const {
  if (principal_) return principal(n(), q_, Rational(q_ * s_), t_);
  std::vector<Rational> tau(tau_);
  for (auto& t : tau) t *= q_;
  return general(q_, std::move(tau));
}

std::string InterpParams::cache_key() const {
  std::string key = "n=" + std::to_string(n()) + ";q=" + to_string(q_) + ";tau=";
  for (size_t i = 0; i < tau_.size(); ++i) {
    if (i) key += ",";
    key += to_string(tau_[i]);
  }
  return key;
}

bool InterpParams::operator==(const InterpParams& other) const {
  return q_ == other.q_ && tau_ == other.tau_;
}

Node node_partition(const Partition& mu, const InterpParams& p) {
  if (mu.n() != p.n()) throw std::invalid_argument("node_partition: arity mismatch");
  Node z(mu.n());
  for (int i = 0; i < mu.n(); ++i) z[i] = rat_pow(p.q(), mu.part(i)) * p.tau()[i];
  return z;
}

Node node_general(const ExponentVector& alpha, const InterpParams& p) {
  const int n = p.n();
  if (static_cast<int>(alpha.size()) != n)
    throw std::invalid_argument("node_general: arity mismatch");
  const SignedPermutation w = min_coset_rep(alpha);
  Node z(n);
  for (int i = 0; i < n; ++i) {
    const Rational& tau = p.tau()[w.perm_inverse(i)];
    z[i] = rat_pow(p.q(), alpha[i]) * (alpha[i] < 0 ? Rational(1 / tau) : tau);
  }
  return z;
}

Node act_node(const SignedPermutation& w, const Node& z) {
  if (w.n() != static_cast<int>(z.size())) throw std::invalid_argument("act_node: arity mismatch");
  Node out(z.size());
  for (int j = 0; j < w.n(); ++j) {
    const Rational& v = z[w.perm_inverse(j)];
    if (v == 0) throw std::domain_error("act_node: zero coordinate");
    out[j] = w.sign(j) < 0 ? Rational(1 / v) : v;
  }
  return out;
}

Rational node_monomial(const Node& z, const ExponentVector& beta) {
  if (z.size() != beta.size()) throw std::invalid_argument("node_monomial: arity mismatch");
  Rational out(1);
  for (size_t i = 0; i < z.size(); ++i)
    if (beta[i] != 0) out *= rat_pow(z[i], beta[i]);
  return out;
}

NodeActionCheck node_action_check(const ExponentVector& alpha, int j, const InterpParams& p) {
  const int n = p.n();
  if (static_cast<int>(alpha.size()) != n)
    throw std::invalid_argument("node_action_check: arity mismatch");
  if (j < 1 || j > n) throw std::invalid_argument("node_action_check: index out of range");

  NodeActionCheck out;
  const SignedPermutation sj = SignedPermutation::simple(n, j);
  const ExponentVector salpha = act(sj, alpha);
  const Node z = node_general(alpha, p);

  if (salpha != alpha) {
    out.clause = 'a';
    out.pass = act_node(sj, z) == node_general(salpha, p);
    if (!out.pass) out.detail = "action node differs from node of reflected vector";
    return out;
  }
  if (j < n) {
    // s_jα = α with j < n means α_j = α_{j+1}
    out.clause = 'b';
    const SignedPermutation w = min_coset_rep(alpha);
    const int k = w.perm_inverse(j - 1);
    const int sgn = alpha[j - 1] < 0 ? -1 : 1;
    const int k2 = k + sgn;
    if (k2 < 0 || k2 >= n) {
      out.detail = "tau index out of range";
      return out;
    }
    const Rational lhs = z[j - 1] / z[j];
    const Rational ratio = p.tau()[k] / p.tau()[k2];
    const Rational rhs = sgn == 1 ? ratio : Rational(1 / ratio);
    out.pass = lhs == rhs;
    if (!out.pass) out.detail = "consecutive-coordinate ratio mismatch";
    return out;
  }
  out.clause = 'c';
  out.pass = z[n - 1] == p.tau()[n - 1];
  if (!out.pass) out.detail = "last coordinate differs from tau_n";
  return out;
}

std::vector<ExponentVector> enumerate_ball(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("enumerate_ball: bad arguments");
  std::vector<ExponentVector> out;
  ExponentVector cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int v = -left; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - std::abs(v));
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

std::vector<Partition> enumerate_ball_dominant(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("enumerate_ball_dominant: bad arguments");
  std::vector<Partition> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int, int)> rec = [&](int i, int left, int cap) {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(left, cap); ++v) {
      cur[i] = v;
      rec(i + 1, left - v, v);
    }
  };
  rec(0, d, d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bcinterp

#include "bcinterp/exponent.hpp"

#include <cstdlib>
#include <stdexcept>

namespace bcinterp {

int weight(const ExponentVector& a) {
  int w = 0;
  for (int e : a) w += std::abs(e);
  return w;
}

bool GradedLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return a < b;
}

std::string format_exponent(const ExponentVector& a) {
  std::string out = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  return out + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Partition: no parts");
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts not weakly decreasing");
  }
}

Partition Partition::zero(int n) { return Partition(std::vector<int>(n, 0)); }

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

Partition Partition::lowered() const {
  if (parts_.back() <= 0) throw std::invalid_argument("Partition::lowered: last part is zero");
  std::vector<int> out(parts_);
  for (int& p : out) --p;
  return Partition(std::move(out));
}

Partition Partition::drop_last() const {
  if (parts_.back() != 0) throw std::invalid_argument("Partition::drop_last: last part nonzero");
  if (n() == 1) throw std::invalid_argument("Partition::drop_last: would leave no parts");
  return Partition(std::vector<int>(parts_.begin(), parts_.end() - 1));
}

bool Partition::operator<(const Partition& other) const {
  return GradedLexLess{}(parts_, other.parts_);
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dominance_leq: arity mismatch");
  int sa = 0, sb = 0;
  for (int i = 0; i < a.n(); ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

bool contained_in(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("contained_in: arity mismatch");
  for (int i = 0; i < a.n(); ++i)
    if (a.part(i) > b.part(i)) return false;
  return true;
}

}  // namespace bcinterp

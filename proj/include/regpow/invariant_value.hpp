#pragma once

#include <stdexcept>
#include <string>

namespace regpow {

// An integer extended by -infinity, the value of an empty maximum.
class InvariantValue {
 public:
  InvariantValue() : finite_(false), v_(0) {}

  static InvariantValue neg_inf() { return InvariantValue(); }
  static InvariantValue of(long long v) {
    InvariantValue x;
    x.finite_ = true;
    x.v_ = v;
    return x;
  }

  bool is_neg_inf() const { return !finite_; }
  bool is_finite() const { return finite_; }
  long long value() const {
    if (!finite_) throw std::logic_error("InvariantValue: value() called on -inf");
    return v_;
  }

  // Shifts absorb into -inf.
  InvariantValue operator+(long long d) const { return finite_ ? of(v_ + d) : neg_inf(); }

  friend bool operator==(const InvariantValue& a, const InvariantValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend bool operator!=(const InvariantValue& a, const InvariantValue& b) { return !(a == b); }
  friend bool operator<(const InvariantValue& a, const InvariantValue& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const InvariantValue& a, const InvariantValue& b) {
    return a < b || a == b;
  }

  static InvariantValue max(const InvariantValue& a, const InvariantValue& b) {
    return a < b ? b : a;
  }
  void raise_to(const InvariantValue& o) {
    if (*this < o) *this = o;
  }

  std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

 private:
  bool finite_;
  long long v_;
};

}  // namespace regpow

#include "polyspec/exactnum.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polyspec {

namespace {

int rational_sign(const Rational& r) { return r.sign(); }

}  // namespace

int QRoot5::sign() const {
  const int sa = rational_sign(a_);
  const int sb = rational_sign(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 5 b^2.
  const Rational diff = a_ * a_ - 5 * b_ * b_;
  return diff.sign() * sa;
}

QRoot5 QRoot5::inverse() const {
  const Rational n = field_norm();
  if (n == 0) throw std::domain_error("QRoot5: inverse of zero");
  return {a_ / n, -b_ / n};
}

double QRoot5::to_double() const {
  static const double kSqrt5 = 2.2360679774997896964;
  return a_.convert_to<double>() + b_.convert_to<double>() * kSqrt5;
}

std::string QRoot5::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

QRoot5& QRoot5::operator+=(const QRoot5& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QRoot5& QRoot5::operator-=(const QRoot5& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QRoot5& QRoot5::operator*=(const QRoot5& o) {
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::strong_ordering operator<=>(const QRoot5& x, const QRoot5& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const QRoot5& x, const QRoot5& y) { return x <=> y; }

std::ostream& operator<<(std::ostream& os, const QRoot5& x) {
  if (x.sqrt5_part() == 0) return os << x.rational_part();
  if (x.rational_part() != 0) os << x.rational_part() << (x.sqrt5_part() > 0 ? "+" : "");
  return os << x.sqrt5_part() << "*r5";
}

QRoot5 tau() { return {Rational(1, 2), Rational(1, 2)}; }
QRoot5 taubar() { return {Rational(1, 2), Rational(-1, 2)}; }

QuaternionQ5 operator*(const QuaternionQ5& p, const QuaternionQ5& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

std::strong_ordering operator<=>(const QuaternionQ5& p, const QuaternionQ5& q) {
  if (auto c = p.w <=> q.w; c != 0) return c;
  if (auto c = p.x <=> q.x; c != 0) return c;
  if (auto c = p.y <=> q.y; c != 0) return c;
  return p.z <=> q.z;
}

std::string QuaternionQ5::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuaternionQ5& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

QuaternionQ5 qconj(const QuaternionQ5& p) { return {p.w, -p.x, -p.y, -p.z}; }

QRoot5 qnorm(const QuaternionQ5& p) { return qdot(p, p); }

QRoot5 qdot(const QuaternionQ5& p, const QuaternionQ5& q) {
  return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

QuaternionQ5 qinv(const QuaternionQ5& p) {
  const QRoot5 n = qnorm(p);
  if (n.is_zero()) throw std::domain_error("qinv: zero quaternion");
  return n.inverse() * qconj(p);
}

}  // namespace polyspec

std::size_t std::hash<polyspec::QRoot5>::operator()(const polyspec::QRoot5& x) const noexcept {
  const std::hash<std::string> h;
  return h(x.rational_part().str()) * 31 + h(x.sqrt5_part().str());
}

std::size_t std::hash<polyspec::QuaternionQ5>::operator()(
    const polyspec::QuaternionQ5& q) const noexcept {
  const std::hash<polyspec::QRoot5> h;
  std::size_t seed = h(q.w);
  for (const auto* c : {&q.x, &q.y, &q.z}) seed = seed * 1000003u ^ h(*c);
  return seed;
}

#pragma once

// Exact arithmetic in Q(sqrt 5) and quaternions over it.
//
// Every coordinate of the 600-cell and every icosian lives in Q(sqrt 5), so
// equality and ordering are decided exactly; doubles appear only in to_double.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

namespace polyspec {

using Rational = boost::multiprecision::cpp_rational;

/// a + b*sqrt(5) with a, b rational (kept in lowest terms by cpp_rational).
class QRoot5 {
 public:
  QRoot5() = default;
  QRoot5(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QRoot5(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  static QRoot5 sqrt5() { return {0, 1}; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// Exact sign of the real number a + b*sqrt(5): -1, 0 or +1.
  int sign() const;
  /// Galois conjugate a - b*sqrt(5).
  QRoot5 conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 5 b^2 (rational).
  Rational field_norm() const { return a_ * a_ - 5 * b_ * b_; }
  QRoot5 inverse() const;

  double to_double() const;
  std::string str() const;

  QRoot5& operator+=(const QRoot5& o);
  QRoot5& operator-=(const QRoot5& o);
  QRoot5& operator*=(const QRoot5& o);
  QRoot5& operator/=(const QRoot5& o) { return *this *= o.inverse(); }

  friend QRoot5 operator+(QRoot5 x, const QRoot5& y) { return x += y; }
  friend QRoot5 operator-(QRoot5 x, const QRoot5& y) { return x -= y; }
  friend QRoot5 operator*(QRoot5 x, const QRoot5& y) { return x *= y; }
  friend QRoot5 operator/(QRoot5 x, const QRoot5& y) { return x /= y; }
  friend QRoot5 operator-(const QRoot5& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const QRoot5& x, const QRoot5& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Total order of the real embedding sqrt(5) > 0.
  friend std::strong_ordering operator<=>(const QRoot5& x, const QRoot5& y);

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const QRoot5& x);

/// Golden ratio (1 + sqrt 5) / 2.
QRoot5 tau();
/// Its conjugate (1 - sqrt 5) / 2.
QRoot5 taubar();

/// Three-way numeric comparison; same as operator<=> but named.
std::strong_ordering compare(const QRoot5& x, const QRoot5& y);

/// w + x i + y j + z k over Q(sqrt 5).
struct QuaternionQ5 {
  QRoot5 w, x, y, z;

  static QuaternionQ5 one() { return {1, 0, 0, 0}; }
  static QuaternionQ5 i() { return {0, 1, 0, 0}; }
  static QuaternionQ5 j() { return {0, 0, 1, 0}; }
  static QuaternionQ5 k() { return {0, 0, 0, 1}; }

  std::string str() const;

  friend QuaternionQ5 operator+(const QuaternionQ5& p, const QuaternionQ5& q) {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
  }
  friend QuaternionQ5 operator-(const QuaternionQ5& p, const QuaternionQ5& q) {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
  }
  friend QuaternionQ5 operator-(const QuaternionQ5& p) { return {-p.w, -p.x, -p.y, -p.z}; }
  friend QuaternionQ5 operator*(const QuaternionQ5& p, const QuaternionQ5& q);
  friend QuaternionQ5 operator*(const QRoot5& s, const QuaternionQ5& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }

  friend bool operator==(const QuaternionQ5&, const QuaternionQ5&) = default;
  /// Lexicographic over (w, x, y, z) using the numeric order of QRoot5.
  friend std::strong_ordering operator<=>(const QuaternionQ5& p, const QuaternionQ5& q);
};

std::ostream& operator<<(std::ostream& os, const QuaternionQ5& q);

/// Hamilton product, i^2 = j^2 = k^2 = ijk = -1.
inline QuaternionQ5 qmul(const QuaternionQ5& p, const QuaternionQ5& q) { return p * q; }
QuaternionQ5 qconj(const QuaternionQ5& p);
/// w^2 + x^2 + y^2 + z^2.
QRoot5 qnorm(const QuaternionQ5& p);
/// Throws std::domain_error on the zero quaternion.
QuaternionQ5 qinv(const QuaternionQ5& p);
/// Euclidean inner product in R^4, equal to Re(p * conj(q)).
QRoot5 qdot(const QuaternionQ5& p, const QuaternionQ5& q);

}  // namespace polyspec

template <>
struct std::hash<polyspec::QRoot5> {
  std::size_t operator()(const polyspec::QRoot5& x) const noexcept;
};

template <>
struct std::hash<polyspec::QuaternionQ5> {
  std::size_t operator()(const polyspec::QuaternionQ5& q) const noexcept;
};

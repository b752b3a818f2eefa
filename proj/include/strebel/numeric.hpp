#ifndef STREBEL_NUMERIC_HPP
#define STREBEL_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace strebel {

using Rational = mpq_class;

struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element a + b*sqrt(d) of Q or of a fixed real quadratic field Q(sqrt(d)).
// d is squarefree and positive; b == 0 is canonicalized to d == 0, so pure
// rationals mix freely with any field context. Two scalars with different
// nonzero d must never meet in one computation.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(int v) : a_(v), b_(0), d_(0) {}
  Scalar(long v) : a_(v), b_(0), d_(0) {}
  explicit Scalar(const Rational& v) : a_(v), b_(0), d_(0) { a_.canonicalize(); }
  Scalar(const Rational& a, const Rational& b, long d);

  static Scalar rational(long num, long den);
  static Scalar sqrt_d(long d) { return Scalar(Rational(0), Rational(1), d); }

  const Rational& rat_part() const { return a_; }
  const Rational& root_part() const { return b_; }
  long field_d() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  int sign() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  Scalar operator-() const { return Scalar(-a_, -b_, d_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) { return (x - y).is_zero(); }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

  Scalar inverse() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;

  // Exact square root when one exists in the same field (or in Q(sqrt(d))
  // for a rational input whose root lies there). Used to canonicalize
  // LogRatio scales; quadratic-field cases stay inside the field.
  std::optional<Scalar> try_sqrt() const;

  std::string str() const;                     // "p/q" or "p/q+r/s*sqrt(d)"
  static Scalar parse(const std::string& s);   // inverse of str()

 private:
  void canonicalize();
  static void check_same_field(const Scalar& x, const Scalar& y);

  Rational a_, b_;
  long d_;
};

int cmp(const Scalar& x, const Scalar& y);
Scalar min(const Scalar& x, const Scalar& y);
Scalar max(const Scalar& x, const Scalar& y);

bool is_squarefree(long d);

// Value (1/2^k) * log(ratio) with ratio an exact positive Scalar.
// k == 1 is the spec's basic "half log" form; k == 2 appears only in the
// detour shift sigma and reduces back to k <= 1 whenever the ratio is a
// perfect square. Comparisons and sums are exact (cross-powering ratios).
class LogRatio {
 public:
  LogRatio() : ratio_(1), k_(1) {}

  static LogRatio zero() { return LogRatio(); }
  static LogRatio half_log(const Scalar& ratio) { return LogRatio(ratio, 1); }
  static LogRatio log(const Scalar& ratio) { return LogRatio(ratio, 0); }
  static LogRatio quarter_log(const Scalar& ratio) { return LogRatio(ratio, 2); }

  const Scalar& ratio() const { return ratio_; }
  int scale_pow() const { return k_; }
  bool is_zero() const { return ratio_ == Scalar(1); }
  int sign() const;

  LogRatio operator+(const LogRatio& o) const;
  LogRatio operator-() const;
  LogRatio scaled_half() const;  // value / 2

  friend bool operator==(const LogRatio& x, const LogRatio& y) { return cmp(x, y) == 0; }
  friend bool operator!=(const LogRatio& x, const LogRatio& y) { return cmp(x, y) != 0; }
  friend bool operator<(const LogRatio& x, const LogRatio& y) { return cmp(x, y) < 0; }
  friend bool operator>(const LogRatio& x, const LogRatio& y) { return cmp(x, y) > 0; }
  friend bool operator<=(const LogRatio& x, const LogRatio& y) { return cmp(x, y) <= 0; }
  friend bool operator>=(const LogRatio& x, const LogRatio& y) { return cmp(x, y) >= 0; }

  friend int cmp(const LogRatio& x, const LogRatio& y);

  double to_double() const;
  std::string str() const;  // "0", "log r", "1/2 log r", "1/4 log r"

 private:
  LogRatio(const Scalar& ratio, int k);
  void reduce();

  Scalar ratio_;  // > 0
  int k_;         // value = log(ratio_) / 2^k_
};

LogRatio logratio_max(const std::vector<LogRatio>& values);

// log of a rational, stable for huge numerators/denominators.
double log_to_double(const Rational& q);

}  // namespace strebel

#endif

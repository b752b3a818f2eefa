#include "strebel/numeric.hpp"

#include <cmath>
#include <sstream>

namespace strebel {

Scalar::Scalar(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw numeric_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

void Scalar::canonicalize() {
  if (b_ == 0) {
    d_ = 0;
    return;
  }
  if (d_ <= 0) throw numeric_error("field discriminant must be positive when root part is nonzero");
  if (d_ == 1) {  // sqrt(1) folds into the rational part
    a_ += b_;
    b_ = 0;
    d_ = 0;
    return;
  }
  if (!is_squarefree(d_)) throw numeric_error("field discriminant must be squarefree");
}

void Scalar::check_same_field(const Scalar& x, const Scalar& y) {
  if (x.d_ != 0 && y.d_ != 0 && x.d_ != y.d_)
    throw numeric_error("mixed quadratic field contexts: sqrt(" + std::to_string(x.d_) +
                        ") vs sqrt(" + std::to_string(y.d_) + ")");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  if (d_ == 0) d_ = o.d_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (d_ == 0) d_ = o.d_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(*this, o);
  long d = d_ != 0 ? d_ : o.d_;
  Rational na = a_ * o.a_ + b_ * o.b_ * d;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  d_ = d;
  canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw numeric_error("division by zero");
  if (d_ == 0) return Scalar(Rational(1) / a_);
  // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - b^2 d); the norm is nonzero for
  // nonzero elements because d is squarefree (sqrt(d) irrational).
  Rational norm = a_ * a_ - b_ * b_ * d_;
  if (norm == 0) throw numeric_error("zero field norm for nonzero element (d not squarefree?)");
  return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

int Scalar::sign() const {
  if (b_ == 0) return sgn(a_);
  int sa = sgn(a_), sb = sgn(b_);
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  if (sa == sb) return sa;
  // a and b*sqrt(d) have opposite signs: compare a^2 with b^2 d.
  int c = cmp(a_ * a_, b_ * b_ * d_);
  if (c == 0) throw numeric_error("sqrt(d) collapsed to a rational (d not squarefree?)");
  return c > 0 ? sa : sb;
}

double Scalar::to_double() const {
  double v = a_.get_d();
  if (b_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Scalar> Scalar::try_sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (d_ == 0) {
    if (auto r = rational_sqrt(a_)) return Scalar(*r);
    // sqrt of a rational may live in a quadratic field: a = r^2 * d with d
    // squarefree would give r*sqrt(d). Callers that care about staying in a
    // declared field should check field_d of the result; we only attempt the
    // squarefree split for small factors to keep this cheap.
    return std::nullopt;
  }
  // (x + y sqrt(d))^2 = x^2 + y^2 d + 2xy sqrt(d): solve for x, y.
  // From b = 2xy and a = x^2 + y^2 d: x^2 satisfies t^2 - a t + b^2 d/4 = 0.
  Rational disc = a_ * a_ - b_ * b_ * d_;  // (x^2 - y^2 d)^2
  auto root = rational_sqrt(disc);
  if (!root) return std::nullopt;
  for (int s = -1; s <= 1; s += 2) {
    Rational x2 = (a_ + s * *root) / 2;
    auto x = rational_sqrt(x2);
    if (!x || *x == 0) continue;
    Rational y = b_ / (2 * *x);
    Scalar cand(*x, y, d_);
    if (cand * cand == *this && cand.sign() >= 0) return cand;
    cand = -cand;
    if (cand * cand == *this && cand.sign() >= 0) return cand;
  }
  return std::nullopt;
}

namespace {

std::string rat_str(const Rational& q) {
  std::ostringstream os;
  os << q.get_num();
  if (q.get_den() != 1) os << "/" << q.get_den();
  return os.str();
}

Rational parse_rat(std::string s) {
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw numeric_error("bad rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

std::string Scalar::str() const {
  if (b_ == 0) return rat_str(a_);
  std::ostringstream os;
  if (a_ != 0) {
    os << rat_str(a_);
    if (b_ > 0) os << "+";
  }
  if (b_ == -1)
    os << "-";
  else if (b_ != 1)
    os << rat_str(b_) << "*";
  os << "sqrt(" << d_ << ")";
  return os.str();
}

Scalar Scalar::parse(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw numeric_error("empty scalar literal");

  auto sq = t.find("sqrt(");
  if (sq == std::string::npos) return Scalar(parse_rat(t));

  auto close = t.find(')', sq);
  if (close == std::string::npos) throw numeric_error("unterminated sqrt in '" + s + "'");
  long d = std::stol(t.substr(sq + 5, close - sq - 5));

  // [a ±] [coef *] sqrt(d)
  std::string head = t.substr(0, sq);
  Rational a(0), b(1);
  if (!head.empty() && head.back() == '*') head.pop_back();
  // split head into rational part and coefficient at the last +/- that is not
  // a leading sign and not inside a previous token's exponent (plain p/q
  // literals only, so any later +/- is the separator).
  size_t sep = std::string::npos;
  for (size_t i = 1; i < head.size(); ++i)
    if (head[i] == '+' || head[i] == '-') sep = i;
  if (head.empty()) {
    b = 1;
  } else if (sep == std::string::npos) {
    b = head == "-" ? Rational(-1) : head == "+" ? Rational(1) : parse_rat(head);
  } else {
    a = parse_rat(head.substr(0, sep));
    std::string coef = head.substr(sep);
    if (coef == "+")
      b = 1;
    else if (coef == "-")
      b = -1;
    else
      b = parse_rat(coef);
  }
  return Scalar(a, b, d);
}

int cmp(const Scalar& x, const Scalar& y) { return (x - y).sign(); }
Scalar min(const Scalar& x, const Scalar& y) { return x <= y ? x : y; }
Scalar max(const Scalar& x, const Scalar& y) { return x >= y ? x : y; }

bool is_squarefree(long d) {
  if (d <= 0) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

LogRatio::LogRatio(const Scalar& ratio, int k) : ratio_(ratio), k_(k) {
  if (ratio_.sign() <= 0) throw numeric_error("LogRatio requires a positive ratio");
  reduce();
}

void LogRatio::reduce() {
  if (ratio_ == Scalar(1)) {
    k_ = 1;
    return;
  }
  while (k_ > 0) {
    auto r = ratio_.try_sqrt();
    if (!r) break;
    ratio_ = *r;
    --k_;
  }
}

int LogRatio::sign() const { return cmp(ratio_, Scalar(1)); }

namespace {

Scalar scalar_pow(Scalar base, int e) {
  Scalar r(1);
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

LogRatio LogRatio::operator+(const LogRatio& o) const {
  int k = std::max(k_, o.k_);
  Scalar r = scalar_pow(ratio_, 1 << (k - k_)) * scalar_pow(o.ratio_, 1 << (k - o.k_));
  return LogRatio(r, k);
}

LogRatio LogRatio::operator-() const { return LogRatio(ratio_.inverse(), k_); }

LogRatio LogRatio::scaled_half() const {
  if (k_ >= 2) {
    auto r = ratio_.try_sqrt();
    if (r) return LogRatio(*r, k_);  // keep depth bounded when possible
  }
  return LogRatio(ratio_, k_ + 1);
}

int cmp(const LogRatio& x, const LogRatio& y) {
  int k = std::max(x.k_, y.k_);
  Scalar lhs = scalar_pow(x.ratio_, 1 << (k - x.k_));
  Scalar rhs = scalar_pow(y.ratio_, 1 << (k - y.k_));
  return cmp(lhs, rhs);
}

double log_to_double(const Rational& q) {
  signed long ne, de;
  double nm = mpz_get_d_2exp(&ne, q.get_num().get_mpz_t());
  double dm = mpz_get_d_2exp(&de, q.get_den().get_mpz_t());
  return std::log(nm) - std::log(dm) + (static_cast<double>(ne) - de) * std::log(2.0);
}

double LogRatio::to_double() const {
  double lg;
  if (ratio_.is_rational()) {
    lg = log_to_double(ratio_.rat_part());
  } else {
    lg = std::log(ratio_.to_double());
  }
  return lg / static_cast<double>(1 << k_);
}

std::string LogRatio::str() const {
  if (is_zero()) return "0";
  switch (k_) {
    case 0:
      return "log " + ratio_.str();
    case 1:
      return "1/2 log " + ratio_.str();
    default:
      return "1/" + std::to_string(1 << k_) + " log " + ratio_.str();
  }
}

LogRatio logratio_max(const std::vector<LogRatio>& values) {
  if (values.empty()) throw numeric_error("logratio_max of empty list");
  LogRatio best = values.front();
  for (const auto& v : values)
    if (v > best) best = v;
  return best;
}

}  // namespace strebel

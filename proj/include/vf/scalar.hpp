#ifndef VF_SCALAR_HPP
#define VF_SCALAR_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vf {

// Malformed scalar text; `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A stated precondition does not hold (parity, range, domain).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZeroError : public std::domain_error {
public:
  DivisionByZeroError() : std::domain_error("division by zero") {}
};

/// Exact element of Q(i).  Both parts are reduced fractions with positive
/// denominator (mpq_class canonical form), so equality is structural.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussianRational imaginaryUnit() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool isZero() const { return re_ == 0 && im_ == 0; }
  bool isReal() const { return im_ == 0; }
  // re integer, im zero
  bool isInteger() const;
  // element of {0, 1, 2, ...}
  bool isNatural() const { return isInteger() && re_ >= 0; }
  // element of {0, -2, -4, ...}
  bool isInMinusTwoN() const;

  GaussianRational conj() const { return {re_, -im_}; }
  // re^2 + im^2, as a real scalar
  GaussianRational normSquared() const { return {re_ * re_ + im_ * im_, 0}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {re_ + o.re_, im_ + o.im_};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re_ - o.re_, im_ - o.im_};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  GaussianRational operator/(const GaussianRational& o) const;

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  bool operator==(const GaussianRational& o) const {
    return re_ == o.re_ && im_ == o.im_;
  }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  // Lexicographic (re, im) order; used for deterministic map keys and report
  // ordering, not a field order.
  bool lexLess(const GaussianRational& o) const {
    int c = cmp(re_, o.re_);
    if (c != 0) return c < 0;
    return cmp(im_, o.im_) < 0;
  }

private:
  mpq_class re_;
  mpq_class im_;
};

struct LexLess {
  bool operator()(const GaussianRational& a, const GaussianRational& b) const {
    return a.lexLess(b);
  }
};

// x(x-1)...(x-n+1); 1 for n = 0.
GaussianRational descendingFactorial(const GaussianRational& x, unsigned n);

// Grammar: [±]p[/q][±r[/s]i] with decimal integers; also pure-imaginary
// forms like "i", "-i", "3i", "1/2i".  Throws ParseError.
GaussianRational parseScalar(const std::string& text);

// Canonical text form; parseScalar(formatScalar(x)) == x.
std::string formatScalar(const GaussianRational& x);

}  // namespace vf

#endif

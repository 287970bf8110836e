#include "vf/scalar.hpp"

#include <cctype>

namespace vf {

bool GaussianRational::isInteger() const {
  return im_ == 0 && re_.get_den() == 1;
}

bool GaussianRational::isInMinusTwoN() const {
  if (!isInteger() || re_ > 0) return false;
  return mpz_even_p(re_.get_num().get_mpz_t()) != 0;
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
  if (o.isZero()) throw DivisionByZeroError();
  mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
  return {(re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n};
}

GaussianRational descendingFactorial(const GaussianRational& x, unsigned n) {
  GaussianRational acc(1);
  GaussianRational term = x;
  for (unsigned j = 0; j < n; ++j) {
    acc *= term;
    term -= GaussianRational(1);
  }
  return acc;
}

namespace {

// One signed term of the scalar grammar: either a rational or a rational
// multiple of i (the bare "i" included).
struct Term {
  mpq_class value;
  bool imaginary = false;
};

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  GaussianRational run() {
    if (text_.empty()) throw ParseError("empty scalar", 0);
    Term first = term();
    if (pos_ == text_.size()) {
      return first.imaginary ? GaussianRational(0, first.value)
                             : GaussianRational(first.value, 0);
    }
    if (first.imaginary)
      throw ParseError("imaginary part must come last", pos_);
    char s = text_[pos_];
    if (s != '+' && s != '-') throw ParseError("expected '+' or '-'", pos_);
    Term second = term();
    if (!second.imaginary)
      throw ParseError("second term must be imaginary", pos_);
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
    return {first.value, second.value};
  }

private:
  Term term() {
    mpq_class sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      if (text_[pos_] == '-') sign = -1;
      ++pos_;
    }
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return {sign, true};
    }
    mpq_class num(integer(), 1);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t denPos = pos_;
      mpz_class den = integer();
      if (den == 0) throw ParseError("zero denominator", denPos);
      num /= den;
    }
    num.canonicalize();
    Term t{sign * num, false};
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      t.imaginary = true;
    }
    return t;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError("expected digits", start);
    return mpz_class(text_.substr(start, pos_ - start));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string formatRational(const mpq_class& q) { return q.get_str(); }

}  // namespace

GaussianRational parseScalar(const std::string& text) { return Parser(text).run(); }

std::string formatScalar(const GaussianRational& x) {
  if (x.im() == 0) return formatRational(x.re());
  mpq_class mag = abs(x.im());
  std::string istr = (mag == 1) ? "i" : formatRational(mag) + "i";
  if (x.re() == 0) return (x.im() < 0 ? "-" : "") + istr;
  return formatRational(x.re()) + (x.im() < 0 ? "-" : "+") + istr;
}

}  // namespace vf

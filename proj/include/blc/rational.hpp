#ifndef BLC_RATIONAL_HPP
#define BLC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "blc/errors.hpp"

namespace blc {

/// Exact rational number, always in lowest terms with positive
/// denominator. All comparisons and arithmetic are exact; the library
/// contains no floating point.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long num, long den = 1) : q_(num, den) {
    if (den == 0) throw argument_error("rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p/q" or "p". Throws parse_error on malformed input.
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw parse_error("empty rational", 0, "number");
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
      if (!ok) throw parse_error("bad rational '" + s + "'", i, "digit or /");
    }
    auto slash = s.find('/');
    if (slash != std::string::npos &&
        (slash == 0 || slash + 1 == s.size() ||
         s.find('/', slash + 1) != std::string::npos))
      throw parse_error("bad rational '" + s + "'", slash, "p/q");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw parse_error("bad rational '" + s + "'", 0, "p/q");
    if (q.get_den() == 0)
      throw parse_error("zero denominator in '" + s + "'", slash, "q != 0");
    q.canonicalize();
    Rational r;
    r.q_ = q;
    return r;
  }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string str() const { return q_.get_str(); }

  std::string num_str() const { return q_.get_num().get_str(); }
  std::string den_str() const { return q_.get_den().get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw argument_error("rational division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.q_ != b.q_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.q_ < b.q_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.q_ <= b.q_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.q_ > b.q_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.q_ >= b.q_;
  }

  static const Rational& zero() {
    static const Rational r(0);
    return r;
  }
  static const Rational& one() {
    static const Rational r(1);
    return r;
  }

 private:
  mpq_class q_;
};

inline Rational min(const Rational& a, const Rational& b) {
  return a <= b ? a : b;
}
inline Rational max(const Rational& a, const Rational& b) {
  return a >= b ? a : b;
}

}  // namespace blc

#endif

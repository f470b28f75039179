#ifndef GRAPHFP_SCALAR_HPP
#define GRAPHFP_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace graphfp {

/// Exact complex rational number `re + im*i`.
///
/// Both parts are kept canonical (reduced, positive denominator), so
/// equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  /// Parses decimal rationals such as "3", "-3/2" for each part.
  /// @throw std::invalid_argument on malformed input or a zero denominator
  static Scalar parse(std::string_view re, std::string_view im = "0");

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator-(const Scalar& s) { return Scalar(-s.re_, -s.im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "3/2", "-i", "1+2/3i"
  std::string to_string() const;

 private:
  mpq_class re_ = 0;
  mpq_class im_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace graphfp

#endif  // GRAPHFP_SCALAR_HPP

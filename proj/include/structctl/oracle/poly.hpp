#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <concepts>
#include <iosfwd>
#include <string>
#include <vector>

namespace structctl::oracle {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in s with arbitrary-precision integer coefficients.
///
/// Coefficients are stored lowest degree first and are always trimmed, so the
/// zero polynomial has no coefficients and every other polynomial has a
/// nonzero leading coefficient.
class ExactPoly {
 public:
  ExactPoly() = default;
  ExactPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  ExactPoly(T constant) : ExactPoly(BigInt(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit ExactPoly(std::vector<BigInt> ascending);

  /// c * s^degree
  static ExactPoly monomial(BigInt c, int degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(int k) const;
  const BigInt& leading() const { return coeffs_.back(); }

  /// gcd of the coefficients, non-negative (0 for the zero polynomial).
  BigInt content() const;
  /// this / content(), sign fixed so the leading coefficient is positive.
  ExactPoly primitive_part() const;

  ExactPoly operator-() const;
  ExactPoly& operator+=(const ExactPoly& rhs);
  ExactPoly& operator-=(const ExactPoly& rhs);
  ExactPoly& operator*=(const ExactPoly& rhs);

  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(ExactPoly a, const ExactPoly& b) { return a *= b; }
  friend bool operator==(const ExactPoly&, const ExactPoly&) = default;

  /// Human-readable, highest degree first: "3s^2 - 7s + 2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const ExactPoly& p);

/// lc(b)^(deg a - deg b + 1) * a mod b, computed over the integers.
/// Throws InputError if b is zero.
ExactPoly pseudo_remainder(const ExactPoly& a, const ExactPoly& b);

/// a / b where b divides a in Z[s]; throws std::domain_error otherwise.
ExactPoly exact_quotient(const ExactPoly& a, const ExactPoly& b);
BigInt exact_quotient(const BigInt& a, const BigInt& b);

/// Primitive gcd with positive leading coefficient (the gcd over Q scaled to
/// a primitive integer polynomial). Throws InputError if both are zero.
ExactPoly poly_gcd(const ExactPoly& a, const ExactPoly& b);

inline bool is_zero(const ExactPoly& p) { return p.is_zero(); }
inline bool is_zero(const BigInt& x) { return x == 0; }

}  // namespace structctl::oracle

#include "structctl/oracle/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "structctl/errors.hpp"

namespace structctl::oracle {

ExactPoly::ExactPoly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

ExactPoly::ExactPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

ExactPoly ExactPoly::monomial(BigInt c, int degree) {
  if (degree < 0) throw InputError("monomial degree must be non-negative");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = std::move(c);
  return ExactPoly(std::move(coeffs));
}

void ExactPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt ExactPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt ExactPoly::content() const {
  BigInt g = 0;
  for (const BigInt& c : coeffs_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

ExactPoly ExactPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const BigInt& c : coeffs_) out.push_back(c / g);
  return ExactPoly(std::move(out));
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly out = *this;
  for (BigInt& c : out.coeffs_) c = -c;
  return out;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string ExactPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt magnitude = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1 || k == 0) out << magnitude;
    if (k >= 1) out << 's';
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const ExactPoly& p) { return os << p.to_string(); }

ExactPoly pseudo_remainder(const ExactPoly& a, const ExactPoly& b) {
  if (b.is_zero()) throw InputError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coefficients();
  const auto& d = b.coefficients();
  const BigInt& lead = b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const BigInt factor = r[static_cast<std::size_t>(k)];
    for (BigInt& c : r) c *= lead;
    if (factor != 0) {
      const int shift = k - db;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= factor * d[static_cast<std::size_t>(j)];
    }
  }
  return ExactPoly(std::move(r));
}

BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::domain_error("inexact integer division");
  return q;
}

ExactPoly exact_quotient(const ExactPoly& a, const ExactPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> r = a.coefficients();
  const auto& d = b.coefficients();
  const int db = b.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    const BigInt& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    const BigInt c = exact_quotient(top, b.leading());
    const int shift = k - db;
    q[static_cast<std::size_t>(shift)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= c * d[static_cast<std::size_t>(j)];
  }
  if (std::any_of(r.begin(), r.end(), [](const BigInt& c) { return c != 0; })) {
    throw std::domain_error("inexact polynomial division");
  }
  return ExactPoly(std::move(q));
}

ExactPoly poly_gcd(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InputError("gcd of two zero polynomials");
  // Primitive remainder sequence.
  ExactPoly x = a.primitive_part();
  ExactPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    ExactPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

}  // namespace structctl::oracle

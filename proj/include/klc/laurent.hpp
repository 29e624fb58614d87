// Exact Laurent polynomials over Z in the variable v.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace klc {

using Int = boost::multiprecision::cpp_int;

// An element of Z[v^{+-1}], stored as exponent -> nonzero coefficient.
// All arithmetic is exact; zero coefficients are never stored.
class Laurent {
public:
  Laurent() = default;
  Laurent(long c);
  Laurent(const Int& c);
  static Laurent v(int k = 1);
  static Laurent monomial(Int c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(int k) const;
  int min_exp() const;  // requires !is_zero()
  int max_exp() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;

  // The bar involution v -> v^{-1}.
  Laurent bar() const;
  // Substitution v -> -v.
  Laurent at_minus_v() const;
  // True if all exponents are >= 1 (the strictly positive part of Z[v]).
  bool in_v_zv() const;
  // True if every coefficient is >= 0.
  bool nonneg_coeffs() const;

  bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Laurent& o) const { return coeffs_ != o.coeffs_; }
  bool operator<(const Laurent& o) const { return coeffs_ < o.coeffs_; }

  const std::map<int, Int>& terms() const { return coeffs_; }

  // Canonical text: increasing exponents, "v^-1 + 2*v + v^3"; exponent 0
  // prints as the bare coefficient; the zero polynomial prints "0".
  std::string str() const;

private:
  std::map<int, Int> coeffs_;

  void add_term(int k, const Int& c);
};

inline Laurent operator*(long c, const Laurent& p) { return Laurent(c) * p; }

}  // namespace klc

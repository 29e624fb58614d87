#include "klc/laurent.hpp"

#include <sstream>

namespace klc {

Laurent::Laurent(long c) {
  if (c != 0) coeffs_[0] = c;
}

Laurent::Laurent(const Int& c) {
  if (c != 0) coeffs_[0] = c;
}

Laurent Laurent::v(int k) {
  Laurent p;
  p.coeffs_[k] = 1;
  return p;
}

Laurent Laurent::monomial(Int c, int k) {
  Laurent p;
  if (c != 0) p.coeffs_[k] = std::move(c);
  return p;
}

Int Laurent::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Int(0) : it->second;
}

int Laurent::min_exp() const { return coeffs_.begin()->first; }
int Laurent::max_exp() const { return coeffs_.rbegin()->first; }

void Laurent::add_term(int k, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.coeffs_) add_term(k, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) r.add_term(ka + kb, ca * cb);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [k, c] : coeffs_) r.coeffs_[-k] = c;
  return r;
}

Laurent Laurent::at_minus_v() const {
  Laurent r;
  for (const auto& [k, c] : coeffs_) r.coeffs_[k] = (k % 2 == 0) ? c : -c;
  return r;
}

bool Laurent::in_v_zv() const { return is_zero() || min_exp() >= 1; }

bool Laurent::nonneg_coeffs() const {
  for (const auto& [k, c] : coeffs_)
    if (c < 0) return false;
  return true;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      if (k == 1)
        out << "v";
      else
        out << "v^" << k;
    }
  }
  return out.str();
}

}  // namespace klc

#include "klc/double_parabolic.hpp"

#include <algorithm>
#include <set>

namespace klc {

DoubleParabolic::DoubleParabolic(HeckeContext& hecke, SubsetSpec J,
                                 SubsetSpec I)
    : hecke_(&hecke),
      J_(std::move(J)),
      I_(std::move(I)),
      n_J_(hecke, Flavor::antispherical, J_),
      m_I_(hecke, Flavor::spherical, I_),
      w_I_(longest_element(hecke.system(), I_)),
      one_I_(one_parabolic(hecke.system(), I_)) {}

void DoubleParabolic::require_regular(const Element& x) const {
  if (!in_quotient(x, J_, Side::left) || !in_quotient(x, I_, Side::right) ||
      !is_regular(x, J_, I_))
    throw NotRegularRep("element " + x.str() +
                        " is not a regular double coset representative for "
                        "J = " + J_.str() + ", I = " + I_.str());
}

ModuleElt DoubleParabolic::embed(const Element& x) {
  if (!in_quotient(x, J_, Side::left) || !in_quotient(x, I_, Side::right))
    throw NotMinimalRep("element " + x.str() +
                        " is not a minimal double coset representative");
  return act(ModuleElt::basis(Flavor::antispherical, J_, x), one_I_);
}

const ModuleElt& DoubleParabolic::kl_elt(const Element& x) {
  require_regular(x);
  return n_J_.kl_elt(x.mul(w_I_));
}

// Expand underline-N_{x w_I} over the embedded basis elements N_y 1_I.
// Distinct y contribute over disjoint cosets, so the coefficient at the
// top coset element N_{y w_I} determines p_{y,x}; a nonzero remainder
// after subtracting all blocks would contradict the span property.
const std::map<Element, Laurent>& DoubleParabolic::p_column(
    const Element& x) {
  auto hit = p_memo_.find(x);
  if (hit != p_memo_.end()) return hit->second;

  ModuleElt rest = kl_elt(x);
  std::set<Element> candidates;
  for (const auto& [u, c] : rest.terms())
    candidates.insert(min_rep(u, I_, Side::right));
  std::map<Element, Laurent> column;
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const Element& y = *it;
    const Laurent c = rest.coeff(y.mul(w_I_));
    if (c.is_zero()) continue;
    require_regular(y);
    ModuleElt block = embed(y);
    block *= c;
    rest -= block;
    column.emplace(y, c);
  }
  if (!rest.is_zero())
    throw Error("underline-N_{x w_I} is not in the span of the embedded "
                "basis at x = " + x.str());
  return p_memo_.emplace(x, std::move(column)).first->second;
}

Laurent DoubleParabolic::p_poly(const Element& y, const Element& x) {
  require_regular(y);
  const auto& column = p_column(x);
  auto it = column.find(y);
  return it == column.end() ? Laurent() : it->second;
}

Laurent DoubleParabolic::p_poly_closed(const Element& y, const Element& x) {
  require_regular(y);
  require_regular(x);
  return n_J_.kl_poly(y.mul(w_I_), x.mul(w_I_));
}

// Expand N_y 1_I in the KL basis {underline-N_{z w_I}} by peeling the
// maximal support element.
const std::map<Element, Laurent>& DoubleParabolic::p_inverse_row(
    const Element& y) {
  auto hit = p_inv_memo_.find(y);
  if (hit != p_inv_memo_.end()) return hit->second;

  ModuleElt rest = embed(y);
  std::map<Element, Laurent> row;
  while (!rest.is_zero()) {
    const auto& [top, c] = *rest.terms().rbegin();
    const Element z = min_rep(top, I_, Side::right);
    if (!(top == z.mul(w_I_)))
      throw Error("N_y 1_I expansion left the KL-basis span at " + top.str());
    const Laurent coeff = c;
    ModuleElt block = kl_elt(z);
    block *= coeff;
    rest -= block;
    // Stored as (-1)^{l(y)+l(z)} p^{y,z}.
    row.emplace(z, (y.length() + z.length()) % 2 == 0 ? coeff : -coeff);
  }
  return p_inv_memo_.emplace(y, std::move(row)).first->second;
}

Laurent DoubleParabolic::p_inverse(const Element& y, const Element& x) {
  require_regular(x);
  const auto& row = p_inverse_row(y);
  auto it = row.find(x);
  return it == row.end() ? Laurent() : it->second;
}

Laurent DoubleParabolic::p_inverse_closed(const Element& y, const Element& x) {
  require_regular(y);
  require_regular(x);
  const Element yi = y.inverse(), xi = x.inverse();
  const int radius = std::max(yi.length(), xi.length());
  std::vector<Element> ambient =
      quotient(hecke_->system(), I_, Side::left, radius);
  return ModuleInverseTable(m_I_, std::move(ambient)).inverse_poly(yi, xi);
}

CheckReport DoubleParabolic::check_inversion(
    const std::vector<Element>& ambient) {
  std::set<Element> set(ambient.begin(), ambient.end());
  int radius = 0;
  for (const auto& x : ambient) {
    require_regular(x);
    radius = std::max(radius, x.length());
    for (const auto& z : x.bruhat_ideal())
      if (in_quotient(z, J_, Side::left) &&
          in_quotient(z, I_, Side::right) && is_regular(z, J_, I_) &&
          !set.count(z))
        throw AmbientNotClosed("ambient set is missing " + z.str() +
                               " below " + x.str());
  }

  ModuleInverseTable m_inv(
      m_I_, quotient(hecke_->system(), I_, Side::left, radius));
  for (const auto& x : set)
    for (const auto& y : set) {
      Laurent sum;
      for (const auto& z : set) {
        const Laurent n = n_J_.kl_poly(z.mul(w_I_), x.mul(w_I_));
        if (n.is_zero()) continue;
        const Laurent m = m_inv.inverse_poly(z.inverse(), y.inverse());
        if (m.is_zero()) continue;
        Laurent term = n * m;
        if ((y.length() + z.length()) % 2 != 0) term = -term;
        sum += term;
      }
      const Laurent expected = x == y ? Laurent(1) : Laurent();
      if (sum != expected)
        return {false, "double inversion fails at x = " + x.str() +
                           ", y = " + y.str() + ": got " + sum.str()};
    }
  return {true, ""};
}

}  // namespace klc

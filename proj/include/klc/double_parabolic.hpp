// The submodule N_J 1_I of the anti-spherical module, with basis
// {N_x 1_I : x in ^J W^I regular}, its KL basis {underline-N_{x w_I}}, and
// the double parabolic polynomials p_{y,x}, p^{y,x} together with the
// double parabolic inversion identity.
//
// p and p^ are computed twice: directly, by expanding in the embedded
// bases and solving the unitriangular systems, and via the closed forms
//   p_{y,x} = n^J_{y w_I, x w_I}     and     p^{y,x} = m_I^{y^{-1}, x^{-1}}.
// The direct route doubles as a span check: an expansion with a nonzero
// remainder raises an error instead of projecting.
#pragma once

#include <vector>

#include "klc/parabolic_module.hpp"

namespace klc {

class DoubleParabolic {
public:
  // Requires W_I finite; throws InfiniteParabolic otherwise.
  DoubleParabolic(HeckeContext& hecke, SubsetSpec J, SubsetSpec I);
  DoubleParabolic(const DoubleParabolic&) = delete;

  const SubsetSpec& J() const { return J_; }
  const SubsetSpec& I() const { return I_; }
  const Element& w_I() const { return w_I_; }

  // N_x 1_I expanded in the N-basis of N_J; x must lie in ^J W^I.
  // Vanishes exactly when the double coset of x is not regular.
  ModuleElt embed(const Element& x);

  // underline-N_{x w_I}; x must be a regular representative.
  const ModuleElt& kl_elt(const Element& x);

  // Direct-route polynomials (unitriangular solves over the embedded
  // bases) and their closed forms.
  Laurent p_poly(const Element& y, const Element& x);
  Laurent p_poly_closed(const Element& y, const Element& x);
  Laurent p_inverse(const Element& y, const Element& x);
  Laurent p_inverse_closed(const Element& y, const Element& x);

  // The double parabolic inversion identity
  //   sum_z (-1)^{l(y)+l(z)} n^J_{z w_I, x w_I} m_I^{z^{-1}, y^{-1}} = delta
  // over all pairs of an ambient subset of the regular representatives,
  // downward closed within the regular set.
  CheckReport check_inversion(const std::vector<Element>& ambient);

  void require_regular(const Element& x) const;

private:
  HeckeContext* hecke_;
  SubsetSpec J_, I_;
  ModuleContext n_J_;    // anti-spherical module for J
  ModuleContext m_I_;    // spherical module for I (closed form of p^)
  Element w_I_;
  HeckeElt one_I_;

  std::map<Element, std::map<Element, Laurent>> p_memo_;       // by x
  std::map<Element, std::map<Element, Laurent>> p_inv_memo_;   // by y

  const std::map<Element, Laurent>& p_column(const Element& x);
  const std::map<Element, Laurent>& p_inverse_row(const Element& y);
};

}  // namespace klc

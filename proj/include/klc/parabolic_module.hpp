// The spherical module M_I = triv (x) H and the anti-spherical module
// N_I = sign (x) H: bases indexed by ^I W, right H-action, bar involution,
// KL bases and the polynomials m, n with their inverses.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klc/hecke.hpp"
#include "klc/parabolic.hpp"

namespace klc {

enum class Flavor { spherical, antispherical };

std::string flavor_name(Flavor f);

// A finite combination of basis vectors M_x / N_x with x in ^I W.
// Construction refuses support outside ^I W.
class ModuleElt {
public:
  ModuleElt(Flavor f, SubsetSpec I) : flavor_(f), subset_(std::move(I)) {}
  static ModuleElt basis(Flavor f, const SubsetSpec& I, const Element& x);

  Flavor flavor() const { return flavor_; }
  const SubsetSpec& subset() const { return subset_; }
  const CoxeterSystem& system() const { return subset_.system(); }
  const std::map<Element, Laurent>& terms() const { return terms_; }
  Laurent coeff(const Element& x) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const Element& x, const Laurent& c);
  ModuleElt& operator+=(const ModuleElt& o);
  ModuleElt& operator-=(const ModuleElt& o);
  ModuleElt& operator*=(const Laurent& c);

  bool operator==(const ModuleElt& o) const;
  bool operator!=(const ModuleElt& o) const { return !(*this == o); }

private:
  Flavor flavor_;
  SubsetSpec subset_;
  std::map<Element, Laurent> terms_;
};

// Right action of H_s on a basis vector indexed by x in ^I W:
//   xs in ^I W, xs > x:  basis(xs)
//   xs in ^I W, xs < x:  basis(xs) + (v^{-1} - v) basis(x)
//   xs not in ^I W:      v^{-1} basis(x)  (spherical)
//                        -v basis(x)      (anti-spherical)
ModuleElt act_gen(const ModuleElt& a, Gen s);

// Action of H_w along a reduced word, and of a general Hecke element.
ModuleElt act(const ModuleElt& a, const Element& w);
ModuleElt act(const ModuleElt& a, const HeckeElt& h);

// The projection H -> M_I or N_I sending H to 1 (x) H; decomposes each H_w
// as H_u H_x with u in W_I, x in ^I W and applies the rank-one action to H_u.
ModuleElt project(Flavor f, const SubsetSpec& I, const HeckeElt& h);

// The induced bar involution, bar(1 (x) H) = 1 (x) bar(H).
ModuleElt bar(const ModuleElt& a);

// The homomorphism M_I -> H with M_x -> 1_I H_x (requires W_I finite).
HeckeElt phi(const ModuleElt& a);

// Memoized KL data for one (flavor, I) module over a shared HeckeContext.
//
// Two computation routes are kept: the projection route (via psi for the
// anti-spherical module, via the 1_I correspondence for the spherical
// module when W_I is finite) and a direct in-module recursion.  kl_elt
// uses the projection route when available; the recursion is exposed for
// cross-validation and covers the spherical case with W_I infinite.
class ModuleContext {
public:
  ModuleContext(HeckeContext& hecke, Flavor f, SubsetSpec I);
  ModuleContext(const ModuleContext&) = delete;

  HeckeContext& hecke() { return *hecke_; }
  Flavor flavor() const { return flavor_; }
  const SubsetSpec& subset() const { return subset_; }
  const CoxeterSystem& system() const { return subset_.system(); }

  // The self-dual element with leading term basis(x), x in ^I W.
  const ModuleElt& kl_elt(const Element& x);
  const ModuleElt& kl_elt_recursive(const Element& x);

  // m_{y,x} or n_{y,x}; zero unless y <= x, diagonal 1.
  Laurent kl_poly(const Element& y, const Element& x);

private:
  HeckeContext* hecke_;
  Flavor flavor_;
  SubsetSpec subset_;
  std::optional<Element> w_I_;  // present iff W_I is finite
  std::map<Element, ModuleElt> memo_;
  std::map<Element, ModuleElt> memo_rec_;

  void require_min_rep(const Element& x) const;
  ModuleElt compute_projection(const Element& x);
  ModuleElt compute_recursive(const Element& x);
};

// Inverse parabolic KL polynomials m^{y,x} / n^{y,x} over an ambient set
// that is downward closed within ^I W.
class ModuleInverseTable {
public:
  ModuleInverseTable(ModuleContext& ctx, std::vector<Element> ambient);

  const std::vector<Element>& ambient() const { return ambient_; }
  Laurent inverse_poly(const Element& y, const Element& x) const;

private:
  std::vector<Element> ambient_;
  std::map<Element, int> pos_;
  std::vector<std::vector<Laurent>> inv_;
};

Laurent kl_inverse(ModuleContext& ctx, const Element& y, const Element& x,
                   const std::vector<Element>& ambient);

// Throws AmbientNotClosed unless ambient is downward closed within ^I W.
void validate_quotient_downward_closed(const SubsetSpec& I,
                                       const std::vector<Element>& ambient);

struct CheckReport {
  bool pass = true;
  std::string detail;  // first counterexample when failing
};

// Verifies the two inversion identities
//   sum_z (-1)^{l(z)+l(x)} m^{z,x} m_{z,y} = delta_{x,y}   (and for n)
// for all pairs in the ambient set.
CheckReport check_parabolic_inversion(HeckeContext& hecke, const SubsetSpec& I,
                                      const std::vector<Element>& ambient);

}  // namespace klc

// The Hecke algebra in the standard basis {H_w}: multiplication, bar
// involution, Kazhdan-Lusztig basis and (inverse) KL polynomials.
//
// Conventions follow the normalization with quadratic relation
// (H_s + v)(H_s - v^{-1}) = 0, so that H_s H_s = H_e + (v^{-1} - v) H_s and
// the KL basis element of a simple reflection is H_s + v H_e.
#pragma once

#include <map>
#include <shared_mutex>
#include <vector>

#include "klc/coxeter.hpp"
#include "klc/laurent.hpp"

namespace klc {

// A finite Z[v^{+-1}]-combination of standard basis elements H_w.
class HeckeElt {
public:
  explicit HeckeElt(const CoxeterSystem& sys) : sys_(&sys) {}
  static HeckeElt basis(const Element& x);

  const CoxeterSystem& system() const { return *sys_; }
  const std::map<Element, Laurent>& terms() const { return terms_; }
  Laurent coeff(const Element& x) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const Element& x, const Laurent& c);
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt& operator*=(const Laurent& c);  // scalar

  bool operator==(const HeckeElt& o) const { return terms_ == o.terms_; }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

private:
  const CoxeterSystem* sys_;
  std::map<Element, Laurent> terms_;
};

// Right and left multiplication by the generator H_s, extended linearly:
// H_w H_s = H_{ws} if ws > w, and H_{ws} + (v^{-1} - v) H_w otherwise.
HeckeElt mul_gen_right(const HeckeElt& a, Gen s);
HeckeElt mul_gen_left(Gen s, const HeckeElt& a);

// Product, computed by expanding b along reduced words.
HeckeElt mul(const HeckeElt& a, const HeckeElt& b);

// The bar involution: v -> v^{-1}, H_x -> H_{x^{-1}}^{-1}.
HeckeElt bar(const HeckeElt& a);

// The element 1_I = sum over W_I of v^{l(w_I) - l(w)} H_w; requires W_I
// finite.
class SubsetSpec;
HeckeElt one_parabolic(const CoxeterSystem& sys, const SubsetSpec& I);

// Memoized Kazhdan-Lusztig data for one Coxeter system.  The memo table
// supports concurrent readers; writers are serialized.
class HeckeContext {
public:
  explicit HeckeContext(const CoxeterSystem& sys,
                        std::size_t max_stored_polys = 10000000)
      : sys_(&sys), cap_(max_stored_polys) {}
  HeckeContext(const HeckeContext&) = delete;

  const CoxeterSystem& system() const { return *sys_; }

  // The self-dual basis element with leading term H_x.
  const HeckeElt& kl_basis(const Element& x);

  // h_{y,x}: the coefficient of H_y in kl_basis(x).
  Laurent h_poly(const Element& y, const Element& x);

  // mu(y,x) = coeff of v in h_{y,x}.
  Int mu(const Element& y, const Element& x);

  // Snapshot / seed of the memo table, for the on-disk cache.
  std::map<Element, HeckeElt> snapshot() const;
  void seed(std::map<Element, HeckeElt> entries);

private:
  const CoxeterSystem* sys_;
  std::size_t cap_;
  std::size_t stored_ = 0;
  mutable std::shared_mutex mutex_;
  std::map<Element, HeckeElt> memo_;

  const HeckeElt* lookup(const Element& x) const;
  const HeckeElt& store(const Element& x, HeckeElt value);
};

// Inverse KL polynomials h^{y,x} over an ambient Bruhat-downward-closed
// index set, obtained by unitriangular inversion of the h-table.
class InverseKLTable {
public:
  InverseKLTable(HeckeContext& ctx, std::vector<Element> ambient);

  const std::vector<Element>& ambient() const { return ambient_; }
  Laurent h_inverse(const Element& y, const Element& x) const;

private:
  std::vector<Element> ambient_;
  std::map<Element, int> pos_;
  std::vector<std::vector<Laurent>> inv_;  // inv[i][j]: (A^{-1})[i][j]
};

// One-shot form of the above.
Laurent h_inverse(HeckeContext& ctx, const Element& y, const Element& x,
                  const std::vector<Element>& ambient);

// Throws AmbientNotClosed unless the set is Bruhat-downward closed.
void validate_downward_closed(const std::vector<Element>& ambient);

}  // namespace klc

// Parabolic subgroups W_I, minimal coset representatives, longest elements,
// and (regular) parabolic double cosets.
#pragma once

#include <vector>

#include "klc/coxeter.hpp"

namespace klc {

// A validated subset I of the generators of a fixed system, kept sorted.
class SubsetSpec {
public:
  SubsetSpec(const CoxeterSystem& sys, std::vector<Gen> gens);
  static SubsetSpec from_labels(const CoxeterSystem& sys,
                                const std::vector<std::string>& labels);

  const std::vector<Gen>& gens() const { return gens_; }
  bool contains(Gen s) const;
  bool empty() const { return gens_.empty(); }
  const CoxeterSystem& system() const { return *sys_; }
  std::string str() const;  // "{s1,s2}" or "{}"

private:
  const CoxeterSystem* sys_;
  std::vector<Gen> gens_;
};

// Membership tests: x in W^I (no right descents in I), x in ^I W (no left
// descents in I).
bool in_quotient(const Element& x, const SubsetSpec& I, Side side);

// Minimal-length representative of x W_I (side = right) or W_I x (left).
Element min_rep(const Element& x, const SubsetSpec& I, Side side);

// All elements of W^I (side = right) or ^I W (side = left) of length <= L.
std::vector<Element> quotient(const CoxeterSystem& sys, const SubsetSpec& I,
                              Side side, int L);

// All elements of the parabolic subgroup W_I; throws InfiniteParabolic.
// The cap bounds the closure size as a guard for arbitrary matrices.
std::vector<Element> parabolic_elements(const CoxeterSystem& sys,
                                        const SubsetSpec& I,
                                        std::size_t cap = 1000000);

// The longest element w_I of a finite parabolic; throws InfiniteParabolic.
Element longest_element(const CoxeterSystem& sys, const SubsetSpec& I);

// Minimal representatives ^J W^I of the (W_J, W_I) double cosets, length <= L.
std::vector<Element> double_min_reps(const CoxeterSystem& sys,
                                     const SubsetSpec& J, const SubsetSpec& I,
                                     int L);

// Whether the double coset W_J z W_I is regular: J and z I z^{-1} disjoint.
// z must lie in ^J W^I; throws NotMinimalRep otherwise.
bool is_regular(const Element& z, const SubsetSpec& J, const SubsetSpec& I);

// Minimal representatives of the regular double cosets, length <= L.
std::vector<Element> regular_double_reps(const CoxeterSystem& sys,
                                         const SubsetSpec& J,
                                         const SubsetSpec& I, int L);

}  // namespace klc

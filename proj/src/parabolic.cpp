#include "klc/parabolic.hpp"

#include <algorithm>
#include <set>

namespace klc {

SubsetSpec::SubsetSpec(const CoxeterSystem& sys, std::vector<Gen> gens)
    : sys_(&sys), gens_(std::move(gens)) {
  for (Gen s : gens_)
    if (s < 0 || s >= sys.rank())
      throw Error("subset generator index out of range");
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

SubsetSpec SubsetSpec::from_labels(const CoxeterSystem& sys,
                                   const std::vector<std::string>& labels) {
  std::vector<Gen> gens;
  gens.reserve(labels.size());
  for (const auto& l : labels) gens.push_back(sys.gen(l));
  return SubsetSpec(sys, std::move(gens));
}

bool SubsetSpec::contains(Gen s) const {
  return std::binary_search(gens_.begin(), gens_.end(), s);
}

std::string SubsetSpec::str() const {
  std::string out = "{";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ",";
    out += sys_->label(gens_[i]);
  }
  return out + "}";
}

bool in_quotient(const Element& x, const SubsetSpec& I, Side side) {
  for (Gen s : I.gens())
    if (x.has_descent(s, side)) return false;
  return true;
}

Element min_rep(const Element& x, const SubsetSpec& I, Side side) {
  Element cur = x;
  for (;;) {
    Gen found = -1;
    for (Gen s : I.gens())
      if (cur.has_descent(s, side)) {
        found = s;
        break;
      }
    if (found < 0) return cur;
    cur = cur.mul_gen(found, side);
  }
}

std::vector<Element> quotient(const CoxeterSystem& sys, const SubsetSpec& I,
                              Side side, int L) {
  std::vector<Element> out;
  for (const auto& x : sys.elements_up_to_length(L))
    if (in_quotient(x, I, side)) out.push_back(x);
  return out;
}

std::vector<Element> parabolic_elements(const CoxeterSystem& sys,
                                        const SubsetSpec& I, std::size_t cap) {
  if (!sys.finite_parabolic(I.gens()))
    throw InfiniteParabolic("parabolic subgroup W_" + I.str() +
                            " is infinite");
  std::set<Element> seen{sys.identity()};
  std::vector<Element> level{sys.identity()};
  for (int len = 0; !level.empty(); ++len) {
    std::vector<Element> next;
    for (const auto& x : level)
      for (Gen s : I.gens()) {
        Element xs = x.mul_gen(s, Side::right);
        if (xs.length() == len + 1 && seen.insert(xs).second) {
          if (seen.size() > cap)
            throw InfiniteParabolic("parabolic closure of W_" + I.str() +
                                    " exceeded the configured cap");
          next.push_back(xs);
        }
      }
    level = std::move(next);
  }
  return std::vector<Element>(seen.begin(), seen.end());
}

Element longest_element(const CoxeterSystem& sys, const SubsetSpec& I) {
  if (!sys.finite_parabolic(I.gens()))
    throw InfiniteParabolic("parabolic subgroup W_" + I.str() +
                            " is infinite; no longest element");
  // Greedy ascent inside W_I; the unique element with no ascents is w_I.
  Element cur = sys.identity();
  for (;;) {
    Gen found = -1;
    for (Gen s : I.gens())
      if (!cur.has_descent(s, Side::right)) {
        found = s;
        break;
      }
    if (found < 0) return cur;
    cur = cur.mul_gen(found, Side::right);
  }
}

std::vector<Element> double_min_reps(const CoxeterSystem& sys,
                                     const SubsetSpec& J, const SubsetSpec& I,
                                     int L) {
  std::vector<Element> out;
  for (const auto& x : sys.elements_up_to_length(L))
    if (in_quotient(x, J, Side::left) && in_quotient(x, I, Side::right))
      out.push_back(x);
  return out;
}

bool is_regular(const Element& z, const SubsetSpec& J, const SubsetSpec& I) {
  if (!in_quotient(z, J, Side::left) || !in_quotient(z, I, Side::right))
    throw NotMinimalRep("element " + z.str() +
                        " is not a minimal double coset representative");
  const Element zinv = z.inverse();
  for (Gen t : I.gens()) {
    Element conj = z.mul(z.system().generator(t)).mul(zinv);
    if (conj.length() == 1 && J.contains(conj.word()[0])) return false;
  }
  return true;
}

std::vector<Element> regular_double_reps(const CoxeterSystem& sys,
                                         const SubsetSpec& J,
                                         const SubsetSpec& I, int L) {
  std::vector<Element> out;
  for (const auto& z : double_min_reps(sys, J, I, L))
    if (is_regular(z, J, I)) out.push_back(z);
  return out;
}

}  // namespace klc

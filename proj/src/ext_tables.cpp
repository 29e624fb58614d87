#include "klc/ext_tables.hpp"

#include <algorithm>

namespace klc {

std::string block_case_name(BlockCase c) {
  switch (c) {
    case BlockCase::finite:
      return "finite";
    case BlockCase::affine_negative:
      return "affine-neg";
    case BlockCase::affine_positive:
      return "affine-pos";
  }
  return "?";
}

namespace {

std::vector<Element> build_index(const CoxeterSystem& sys,
                                 const BlockSpec& spec) {
  std::vector<Element> out;
  if (spec.kase == BlockCase::finite) {
    if (!sys.finite())
      throw Error("finite case requires a finite Coxeter system");
    std::vector<Gen> all(sys.rank());
    for (int i = 0; i < sys.rank(); ++i) all[i] = i;
    const int top = longest_element(sys, SubsetSpec(sys, all)).length();
    const Element w_J = longest_element(sys, spec.J);
    for (const auto& z : regular_double_reps(sys, spec.J, spec.I, top))
      out.push_back(w_J.mul(z));
  } else {
    if (sys.finite())
      throw Error("affine cases require an infinite Coxeter system");
    if (static_cast<int>(spec.I.gens().size()) == sys.rank() ||
        static_cast<int>(spec.J.gens().size()) == sys.rank())
      throw Error("affine cases require I and J to be proper subsets");
    if (spec.max_length < 0) throw Error("max_length must be nonnegative");
    const auto regs =
        regular_double_reps(sys, spec.J, spec.I, spec.max_length);
    if (spec.kase == BlockCase::affine_negative) {
      const Element w_J = longest_element(sys, spec.J);
      for (const auto& z : regs) {
        Element x = w_J.mul(z);
        if (x.length() <= spec.max_length) out.push_back(x);
      }
    } else {
      const Element w_I = longest_element(sys, spec.I);
      for (const auto& z : regs) {
        Element x = z.mul(w_I);
        if (x.length() <= spec.max_length) out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ExtEvaluator::ExtEvaluator(HeckeContext& hecke, BlockSpec spec)
    : hecke_(&hecke),
      spec_(std::move(spec)),
      index_(build_index(hecke.system(), spec_)),
      module_(hecke,
              spec_.kase == BlockCase::affine_positive ? Flavor::spherical
                                                       : Flavor::antispherical,
              spec_.I) {
  if (spec_.kase == BlockCase::affine_positive) {
    w_I_ = longest_element(hecke.system(), spec_.I);
    int radius = 0;
    for (const auto& x : index_)
      radius = std::max(radius, x.length() - w_I_->length());
    inverse_.emplace(module_,
                     quotient(hecke.system(), spec_.I, Side::left, radius));
  }
}

void ExtEvaluator::require_index(const Element& x) const {
  if (!std::binary_search(index_.begin(), index_.end(), x))
    throw IndexNotInQuotient("element " + x.str() +
                             " is not in the block index set");
}

Element ExtEvaluator::require_in_quotient(const Element& x) const {
  if (!in_quotient(x, spec_.I, Side::left))
    throw IndexNotInQuotient("derived index " + x.str() +
                             " lies outside the quotient for I = " +
                             spec_.I.str());
  return x;
}

Laurent ExtEvaluator::ext_poly(const Element& x_simple,
                               const Element& z_costandard) {
  require_index(x_simple);
  require_index(z_costandard);
  if (spec_.kase == BlockCase::affine_positive) {
    const Element a = require_in_quotient(w_I_->mul(z_costandard.inverse()));
    const Element b = require_in_quotient(w_I_->mul(x_simple.inverse()));
    return inverse_->inverse_poly(a, b);
  }
  const Element a = require_in_quotient(z_costandard.inverse());
  const Element b = require_in_quotient(x_simple.inverse());
  return module_.kl_poly(a, b);
}

ExtTable ExtEvaluator::table() {
  ExtTable t{spec_, index_, {}};
  t.entries.reserve(index_.size());
  for (const auto& x : index_) {
    std::vector<Laurent> row;
    row.reserve(index_.size());
    for (const auto& z : index_) row.push_back(ext_poly(x, z));
    t.entries.push_back(std::move(row));
  }
  return t;
}

CheckReport check_koszul_inversion_finite(HeckeContext& hecke,
                                          const SubsetSpec& I,
                                          const SubsetSpec& J) {
  const CoxeterSystem& sys = hecke.system();
  if (!sys.finite())
    throw Error("the Koszul inversion check requires a finite system");
  std::vector<Gen> all(sys.rank());
  for (int i = 0; i < sys.rank(); ++i) all[i] = i;
  const Element w_0 = longest_element(sys, SubsetSpec(sys, all));
  const Element w_J = longest_element(sys, J);

  std::vector<Element> index;
  for (const auto& z : regular_double_reps(sys, J, I, w_0.length()))
    index.push_back(w_J.mul(z));
  std::sort(index.begin(), index.end());

  ModuleContext n_I(hecke, Flavor::antispherical, I);
  ModuleContext n_J(hecke, Flavor::antispherical, J);
  auto in_left = [](const Element& x, const SubsetSpec& S) {
    if (!in_quotient(x, S, Side::left))
      throw IndexNotInQuotient("derived index " + x.str() +
                               " lies outside the quotient for " + S.str());
    return x;
  };

  for (const auto& x : index)
    for (const auto& y : index) {
      Laurent sum;
      for (const auto& z : index) {
        const Laurent p =
            n_I.kl_poly(in_left(z.inverse(), I), in_left(x.inverse(), I));
        if (p.is_zero()) continue;
        const Laurent q =
            n_J.kl_poly(in_left(z.mul(w_0), J), in_left(y.mul(w_0), J));
        if (q.is_zero()) continue;
        sum += p.at_minus_v() * q;
      }
      const Laurent expected = x == y ? Laurent(1) : Laurent();
      if (sum != expected)
        return {false, "Koszul inversion fails at x = " + x.str() +
                           ", y = " + y.str() + ": got " + sum.str()};
    }
  return {true, ""};
}

}  // namespace klc

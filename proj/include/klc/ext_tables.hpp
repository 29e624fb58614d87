// Ext-dimension tables for singular blocks of parabolic category O,
// expressed through (inverse) parabolic KL polynomials:
//
//   finite type          Ext(L_x, nabla_z) = n^I_{z^{-1}, x^{-1}}
//   affine, negative     same shape, over the truncated affine index set
//   affine, positive     Ext(L_x, nabla_z) = m_I^{w_I z^{-1}, w_I x^{-1}}
//
// Blocks are parameterized by (system, I, J, case, truncation) only.
// Rows are indexed by the simple parameter and columns by the costandard
// parameter.  Membership of every derived index in the required quotient
// is validated; violations raise IndexNotInQuotient instead of being
// silently re-projected.
#pragma once

#include <optional>
#include <vector>

#include "klc/parabolic_module.hpp"

namespace klc {

enum class BlockCase { finite, affine_negative, affine_positive };

std::string block_case_name(BlockCase c);

struct BlockSpec {
  BlockCase kase;
  SubsetSpec I;  // dot-action stabilizer of the weight
  SubsetSpec J;  // parabolic subalgebra
  int max_length = 12;  // bound on the final index length (affine cases)
};

struct ExtTable {
  BlockSpec spec;
  std::vector<Element> index;
  std::vector<std::vector<Laurent>> entries;  // [simple][costandard]
};

class ExtEvaluator {
public:
  ExtEvaluator(HeckeContext& hecke, BlockSpec spec);
  ExtEvaluator(const ExtEvaluator&) = delete;

  const BlockSpec& spec() const { return spec_; }
  const std::vector<Element>& index_set() const { return index_; }

  Laurent ext_poly(const Element& x_simple, const Element& z_costandard);
  ExtTable table();

private:
  HeckeContext* hecke_;
  BlockSpec spec_;
  std::vector<Element> index_;
  ModuleContext module_;
  std::optional<Element> w_I_;
  std::optional<ModuleInverseTable> inverse_;  // positive level only

  void require_index(const Element& x) const;
  Element require_in_quotient(const Element& x) const;
};

// The finite-type Koszul inversion identity
//   sum_z n^I_{z^{-1},x^{-1}}(-v) * n^J_{z w_0, y w_0} = delta_{x,y}
// over the index set of the finite block for (I, J).
CheckReport check_koszul_inversion_finite(HeckeContext& hecke,
                                          const SubsetSpec& I,
                                          const SubsetSpec& J);

}  // namespace klc

#include "klc/parabolic_module.hpp"

#include <algorithm>
#include <set>

namespace klc {

std::string flavor_name(Flavor f) {
  return f == Flavor::spherical ? "spherical" : "antispherical";
}

ModuleElt ModuleElt::basis(Flavor f, const SubsetSpec& I, const Element& x) {
  ModuleElt out(f, I);
  out.add(x, Laurent(1));
  return out;
}

Laurent ModuleElt::coeff(const Element& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Laurent() : it->second;
}

void ModuleElt::add(const Element& x, const Laurent& c) {
  if (c.is_zero()) return;
  if (!in_quotient(x, subset_, Side::left))
    throw NotMinimalRep("module support element " + x.str() +
                        " lies outside the quotient for I = " + subset_.str());
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModuleElt& ModuleElt::operator+=(const ModuleElt& o) {
  for (const auto& [x, c] : o.terms_) add(x, c);
  return *this;
}

ModuleElt& ModuleElt::operator-=(const ModuleElt& o) {
  for (const auto& [x, c] : o.terms_) add(x, -c);
  return *this;
}

ModuleElt& ModuleElt::operator*=(const Laurent& c) {
  std::map<Element, Laurent> out;
  if (!c.is_zero())
    for (const auto& [x, p] : terms_) out.emplace(x, p * c);
  terms_ = std::move(out);
  return *this;
}

bool ModuleElt::operator==(const ModuleElt& o) const {
  return flavor_ == o.flavor_ && subset_.gens() == o.subset_.gens() &&
         terms_ == o.terms_;
}

ModuleElt act_gen(const ModuleElt& a, Gen s) {
  ModuleElt out(a.flavor(), a.subset());
  const Laurent q = Laurent::v(-1) - Laurent::v(1);
  const Laurent wall = a.flavor() == Flavor::spherical
                           ? Laurent::v(-1)
                           : -Laurent::v(1);
  for (const auto& [x, p] : a.terms()) {
    Element xs = x.mul_gen(s, Side::right);
    if (!in_quotient(xs, a.subset(), Side::left)) {
      out.add(x, p * wall);
    } else if (xs.length() > x.length()) {
      out.add(xs, p);
    } else {
      out.add(xs, p);
      out.add(x, p * q);
    }
  }
  return out;
}

ModuleElt act(const ModuleElt& a, const Element& w) {
  ModuleElt out = a;
  for (Gen s : w.word()) out = act_gen(out, s);
  return out;
}

ModuleElt act(const ModuleElt& a, const HeckeElt& h) {
  ModuleElt out(a.flavor(), a.subset());
  for (const auto& [w, p] : h.terms()) {
    ModuleElt t = act(a, w);
    t *= p;
    out += t;
  }
  return out;
}

ModuleElt project(Flavor f, const SubsetSpec& I, const HeckeElt& h) {
  ModuleElt out(f, I);
  for (const auto& [w, p] : h.terms()) {
    const Element x = min_rep(w, I, Side::left);
    const int k = w.length() - x.length();  // l(u) for w = u x, u in W_I
    Laurent factor = f == Flavor::spherical
                         ? Laurent::v(-k)
                         : Laurent::monomial(k % 2 == 0 ? 1 : -1, k);
    out.add(x, p * factor);
  }
  return out;
}

ModuleElt bar(const ModuleElt& a) {
  ModuleElt out(a.flavor(), a.subset());
  for (const auto& [x, p] : a.terms()) {
    ModuleElt t = project(a.flavor(), a.subset(), bar(HeckeElt::basis(x)));
    t *= p.bar();
    out += t;
  }
  return out;
}

HeckeElt phi(const ModuleElt& a) {
  if (a.flavor() != Flavor::spherical)
    throw Error("phi is defined on the spherical module");
  const HeckeElt one = one_parabolic(a.system(), a.subset());
  HeckeElt out(a.system());
  for (const auto& [x, p] : a.terms()) {
    HeckeElt t = one;
    for (Gen s : x.word()) t = mul_gen_right(t, s);
    t *= p;
    out += t;
  }
  return out;
}

// ----------------------------------------------------------------------
// ModuleContext

ModuleContext::ModuleContext(HeckeContext& hecke, Flavor f, SubsetSpec I)
    : hecke_(&hecke), flavor_(f), subset_(std::move(I)) {
  if (hecke.system().finite_parabolic(subset_.gens()))
    w_I_ = longest_element(hecke.system(), subset_);
}

void ModuleContext::require_min_rep(const Element& x) const {
  if (!in_quotient(x, subset_, Side::left))
    throw NotMinimalRep("element " + x.str() +
                        " is not minimal in its coset for I = " +
                        subset_.str());
}

const ModuleElt& ModuleContext::kl_elt(const Element& x) {
  require_min_rep(x);
  auto it = memo_.find(x);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(x, compute_projection(x)).first->second;
}

ModuleElt ModuleContext::compute_projection(const Element& x) {
  if (flavor_ == Flavor::antispherical)
    return project(flavor_, subset_, hecke_->kl_basis(x));
  if (!w_I_) return compute_recursive(x);
  // m_{y,x} is the coefficient of the longest coset element H_{w_I y}
  // in kl_basis(w_I x).
  const HeckeElt& big = hecke_->kl_basis(w_I_->mul(x));
  ModuleElt out(flavor_, subset_);
  for (const auto& [w, p] : big.terms()) {
    const Element y = min_rep(w, subset_, Side::left);
    if (w == w_I_->mul(y)) out.add(y, p);
  }
  return out;
}

const ModuleElt& ModuleContext::kl_elt_recursive(const Element& x) {
  require_min_rep(x);
  auto it = memo_rec_.find(x);
  if (it != memo_rec_.end()) return it->second;
  return memo_rec_.emplace(x, compute_recursive(x)).first->second;
}

// Direct recursion in the module: take s with xs < x, form
// kl(xs) (H_s + v) and strip the self-dual corrections working down the
// support.  The correction coefficient at y is the bar-symmetric closure
// of the nonpositive part of the current coefficient.
ModuleElt ModuleContext::compute_recursive(const Element& x) {
  if (x.is_identity()) return ModuleElt::basis(flavor_, subset_, x);

  const Gen s = x.descents(Side::right).front();
  const Element w = x.mul_gen(s, Side::right);
  ModuleElt c = act_gen(kl_elt_recursive(w), s);
  {
    ModuleElt shifted = kl_elt_recursive(w);
    shifted *= Laurent::v(1);
    c += shifted;
  }
  for (;;) {
    // Largest support element (other than x) with a nonpositive part.
    const Element* target = nullptr;
    Laurent correction;
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
      if (it->first == x) continue;
      const Laurent& a = it->second;
      if (a.is_zero() || a.min_exp() >= 1) continue;
      Laurent sym;
      for (const auto& [k, coef] : a.terms()) {
        if (k > 0) break;
        sym += Laurent::monomial(coef, k);
        if (k < 0) sym += Laurent::monomial(coef, -k);
      }
      target = &it->first;
      correction = sym;
      break;
    }
    if (!target) break;
    const Element y = *target;
    ModuleElt t = kl_elt_recursive(y);
    t *= correction;
    c -= t;
  }
  if (c.coeff(x) != Laurent(1))
    throw Error("module KL recursion lost unitriangularity at " + x.str());
  return c;
}

Laurent ModuleContext::kl_poly(const Element& y, const Element& x) {
  require_min_rep(y);
  return kl_elt(x).coeff(y);
}

// ----------------------------------------------------------------------
// Inverse polynomials

void validate_quotient_downward_closed(const SubsetSpec& I,
                                       const std::vector<Element>& ambient) {
  std::set<Element> set(ambient.begin(), ambient.end());
  for (const auto& x : ambient) {
    if (!in_quotient(x, I, Side::left))
      throw NotMinimalRep("ambient element " + x.str() +
                          " is not minimal in its coset");
    for (const auto& z : x.bruhat_ideal())
      if (in_quotient(z, I, Side::left) && !set.count(z))
        throw AmbientNotClosed("ambient set is missing " + z.str() +
                               " below " + x.str());
  }
}

ModuleInverseTable::ModuleInverseTable(ModuleContext& ctx,
                                       std::vector<Element> ambient)
    : ambient_(std::move(ambient)) {
  std::sort(ambient_.begin(), ambient_.end());
  validate_quotient_downward_closed(ctx.subset(), ambient_);
  const int n = static_cast<int>(ambient_.size());
  for (int i = 0; i < n; ++i) pos_[ambient_[i]] = i;

  std::vector<std::vector<Laurent>> a(n, std::vector<Laurent>(n));
  for (int j = 0; j < n; ++j) {
    const ModuleElt& kl = ctx.kl_elt(ambient_[j]);
    for (const auto& [y, h] : kl.terms()) {
      auto it = pos_.find(y);
      if (it == pos_.end())
        throw AmbientNotClosed("ambient set is missing " + y.str());
      a[it->second][j] = h;
    }
  }
  inv_.assign(n, std::vector<Laurent>(n));
  for (int j = 0; j < n; ++j) {
    inv_[j][j] = Laurent(1);
    for (int i = j - 1; i >= 0; --i) {
      Laurent sum;
      for (int k = i + 1; k <= j; ++k)
        if (!a[i][k].is_zero() && !inv_[k][j].is_zero())
          sum += a[i][k] * inv_[k][j];
      inv_[i][j] = -sum;
    }
  }
}

Laurent ModuleInverseTable::inverse_poly(const Element& y,
                                         const Element& x) const {
  auto iy = pos_.find(y), ix = pos_.find(x);
  if (iy == pos_.end() || ix == pos_.end())
    throw Error("element outside the ambient index set");
  const Laurent& c = inv_[ix->second][iy->second];
  return (y.length() + x.length()) % 2 == 0 ? c : -c;
}

Laurent kl_inverse(ModuleContext& ctx, const Element& y, const Element& x,
                   const std::vector<Element>& ambient) {
  return ModuleInverseTable(ctx, ambient).inverse_poly(y, x);
}

CheckReport check_parabolic_inversion(HeckeContext& hecke, const SubsetSpec& I,
                                      const std::vector<Element>& ambient) {
  for (Flavor f : {Flavor::spherical, Flavor::antispherical}) {
    ModuleContext ctx(hecke, f, I);
    ModuleInverseTable table(ctx, ambient);
    const auto& amb = table.ambient();
    for (const auto& x : amb)
      for (const auto& y : amb) {
        Laurent sum;
        for (const auto& z : amb) {
          const Laurent inv = table.inverse_poly(z, x);
          if (inv.is_zero()) continue;
          const Laurent direct = ctx.kl_poly(z, y);
          if (direct.is_zero()) continue;
          Laurent term = inv * direct;
          if ((z.length() + x.length()) % 2 != 0) term = -term;
          sum += term;
        }
        const Laurent expected = x == y ? Laurent(1) : Laurent();
        if (sum != expected)
          return {false, flavor_name(f) + " inversion fails at x = " +
                             x.str() + ", y = " + y.str() + ": got " +
                             sum.str()};
      }
  }
  return {true, ""};
}

}  // namespace klc

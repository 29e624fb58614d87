#include "klc/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "klc/parabolic.hpp"

namespace klc {

HeckeElt HeckeElt::basis(const Element& x) {
  HeckeElt h(x.system());
  h.terms_[x] = Laurent(1);
  return h;
}

Laurent HeckeElt::coeff(const Element& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Laurent() : it->second;
}

void HeckeElt::add(const Element& x, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [x, c] : o.terms_) add(x, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [x, c] : o.terms_) add(x, -c);
  return *this;
}

HeckeElt& HeckeElt::operator*=(const Laurent& c) {
  std::map<Element, Laurent> out;
  if (!c.is_zero())
    for (const auto& [x, p] : terms_) out.emplace(x, p * c);
  terms_ = std::move(out);
  return *this;
}

HeckeElt mul_gen_right(const HeckeElt& a, Gen s) {
  HeckeElt out(a.system());
  const Laurent q = Laurent::v(-1) - Laurent::v(1);
  for (const auto& [x, p] : a.terms()) {
    Element xs = x.mul_gen(s, Side::right);
    out.add(xs, p);
    if (xs.length() < x.length()) out.add(x, p * q);
  }
  return out;
}

HeckeElt mul_gen_left(Gen s, const HeckeElt& a) {
  HeckeElt out(a.system());
  const Laurent q = Laurent::v(-1) - Laurent::v(1);
  for (const auto& [x, p] : a.terms()) {
    Element sx = x.mul_gen(s, Side::left);
    out.add(sx, p);
    if (sx.length() < x.length()) out.add(x, p * q);
  }
  return out;
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
  if (!(a.system() == b.system()))
    throw Error("Hecke elements belong to different systems");
  HeckeElt out(a.system());
  for (const auto& [u, q] : b.terms()) {
    HeckeElt t = a;
    for (Gen s : u.word()) t = mul_gen_right(t, s);
    t *= q;
    out += t;
  }
  return out;
}

HeckeElt bar(const HeckeElt& a) {
  // bar(H_x) = H_{x^{-1}}^{-1} = product of H_s^{-1} = H_s + (v - v^{-1})
  // along the canonical word of x.
  HeckeElt out(a.system());
  const Laurent r = Laurent::v(1) - Laurent::v(-1);
  for (const auto& [x, p] : a.terms()) {
    HeckeElt acc = HeckeElt::basis(x.system().identity());
    for (Gen s : x.word()) {
      HeckeElt shifted = acc;
      shifted *= r;
      acc = mul_gen_right(acc, s);
      acc += shifted;
    }
    acc *= p.bar();
    out += acc;
  }
  return out;
}

HeckeElt one_parabolic(const CoxeterSystem& sys, const SubsetSpec& I) {
  const Element w_I = longest_element(sys, I);
  HeckeElt out(sys);
  for (const auto& w : parabolic_elements(sys, I))
    out.add(w, Laurent::v(w_I.length() - w.length()));
  return out;
}

// ----------------------------------------------------------------------
// HeckeContext

const HeckeElt* HeckeContext::lookup(const Element& x) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(x);
  return it == memo_.end() ? nullptr : &it->second;
}

const HeckeElt& HeckeContext::store(const Element& x, HeckeElt value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = memo_.try_emplace(x, std::move(value));
  if (inserted) {
    stored_ += it->second.terms().size();
    if (stored_ > cap_)
      throw Error("KL memo table exceeded the configured polynomial cap");
  }
  return it->second;
}

const HeckeElt& HeckeContext::kl_basis(const Element& x) {
  if (const HeckeElt* hit = lookup(x)) return *hit;
  if (x.is_identity()) return store(x, HeckeElt::basis(x));

  const Gen s = x.descents(Side::left).front();
  const Element w = x.mul_gen(s, Side::left);  // sx < x
  const HeckeElt& kw = kl_basis(w);

  // (H_s + v) kl(w) = kl(x) + sum of mu(y,w) kl(y) over y with sy < y.
  HeckeElt c = mul_gen_left(s, kw);
  {
    HeckeElt shifted = kw;
    shifted *= Laurent::v(1);
    c += shifted;
  }
  std::vector<std::pair<Element, Int>> corrections;
  for (const auto& [y, h] : kw.terms()) {
    const Int m = h.coeff(1);
    if (m != 0 && y.has_descent(s, Side::left)) corrections.emplace_back(y, m);
  }
  for (const auto& [y, m] : corrections) {
    HeckeElt t = kl_basis(y);
    t *= Laurent(m);
    c -= t;
  }
  return store(x, std::move(c));
}

Laurent HeckeContext::h_poly(const Element& y, const Element& x) {
  return kl_basis(x).coeff(y);
}

Int HeckeContext::mu(const Element& y, const Element& x) {
  return h_poly(y, x).coeff(1);
}

std::map<Element, HeckeElt> HeckeContext::snapshot() const {
  std::shared_lock lock(mutex_);
  return memo_;
}

void HeckeContext::seed(std::map<Element, HeckeElt> entries) {
  std::unique_lock lock(mutex_);
  for (auto& [x, h] : entries) {
    auto [it, inserted] = memo_.try_emplace(x, std::move(h));
    if (inserted) stored_ += it->second.terms().size();
  }
}

// ----------------------------------------------------------------------
// Inverse polynomials

void validate_downward_closed(const std::vector<Element>& ambient) {
  std::set<Element> set(ambient.begin(), ambient.end());
  for (const auto& x : ambient) {
    const auto& w = x.word();
    for (size_t i = 0; i < w.size(); ++i) {
      std::vector<Gen> sub;
      for (size_t j = 0; j < w.size(); ++j)
        if (j != i) sub.push_back(w[j]);
      Element c = x.system().from_word(sub);
      if (c.length() == x.length() - 1 && !set.count(c))
        throw AmbientNotClosed("ambient set is missing " + c.str() +
                               " below " + x.str());
    }
  }
}

InverseKLTable::InverseKLTable(HeckeContext& ctx, std::vector<Element> ambient)
    : ambient_(std::move(ambient)) {
  std::sort(ambient_.begin(), ambient_.end());
  validate_downward_closed(ambient_);
  const int n = static_cast<int>(ambient_.size());
  for (int i = 0; i < n; ++i) pos_[ambient_[i]] = i;

  // A[i][j] = h_{ambient[i], ambient[j]} is unitriangular (i <= j).
  std::vector<std::vector<Laurent>> a(n, std::vector<Laurent>(n));
  for (int j = 0; j < n; ++j) {
    const HeckeElt& kl = ctx.kl_basis(ambient_[j]);
    for (const auto& [y, h] : kl.terms()) {
      auto it = pos_.find(y);
      if (it == pos_.end())
        throw AmbientNotClosed("ambient set is missing " + y.str());
      a[it->second][j] = h;
    }
  }
  // Back-substitution for the inverse of a unitriangular matrix.
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

Laurent InverseKLTable::h_inverse(const Element& y, const Element& x) const {
  auto iy = pos_.find(y), ix = pos_.find(x);
  if (iy == pos_.end() || ix == pos_.end())
    throw Error("element outside the ambient index set");
  // h^{y,x} = (-1)^{l(y)+l(x)} (A^{-1})[x][y].
  const Laurent& c = inv_[ix->second][iy->second];
  return (y.length() + x.length()) % 2 == 0 ? c : -c;
}

Laurent h_inverse(HeckeContext& ctx, const Element& y, const Element& x,
                  const std::vector<Element>& ambient) {
  return InverseKLTable(ctx, ambient).h_inverse(y, x);
}

}  // namespace klc

#include "klc/coxeter.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace klc {

namespace {

// Off-diagonal generalized Cartan entries realizing m(s,t); the first entry
// is used for s < t, the second for s > t.
std::array<int, 2> cartan_pair(int m) {
  switch (m) {
    case 2:
      return {0, 0};
    case 3:
      return {-1, -1};
    case 4:
      return {-1, -2};
    case 6:
      return {-1, -3};
    case CoxeterSystem::kInfinity:
      return {-2, -2};
    default:
      throw Error("unsupported Coxeter matrix entry " + std::to_string(m));
  }
}

std::int64_t checked(__int128 x) {
  constexpr __int128 bound = __int128(1) << 62;
  if (x >= bound || x <= -bound)
    throw Error("root coordinate overflow; reduce the length bound");
  return static_cast<std::int64_t>(x);
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::string> labels,
                             std::vector<std::vector<int>> matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
  const int n = rank();
  if (n == 0) throw Error("empty generator list");
  if (static_cast<int>(matrix_.size()) != n)
    throw Error("Coxeter matrix size does not match generator count");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix_[i].size()) != n)
      throw Error("Coxeter matrix is not square");
    if (matrix_[i][i] != 1) throw Error("Coxeter matrix diagonal must be 1");
    for (int j = 0; j < n; ++j) {
      if (matrix_[i][j] != matrix_[j][i])
        throw Error("Coxeter matrix must be symmetric");
      if (i != j) {
        const int m = matrix_[i][j];
        if (m != 2 && m != 3 && m != 4 && m != 6 && m != kInfinity)
          throw Error("Coxeter matrix entry m(" + labels_[i] + "," +
                      labels_[j] + ") = " + std::to_string(m) +
                      " is not crystallographic (allowed: 2,3,4,6,infinity)");
      }
    }
  }
  for (size_t i = 0; i < labels_.size(); ++i)
    for (size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw Error("duplicate generator label " + labels_[i]);
  build_reflections();
}

void CoxeterSystem::build_reflections() {
  const int n = rank();
  // Cartan matrix a(s,t); a(s,s) = 2.
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int s = 0; s < n; ++s) {
    a[s][s] = 2;
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      auto pair = cartan_pair(matrix_[s][t]);
      a[s][t] = s < t ? pair[0] : pair[1];
    }
  }
  // Reflection s sends alpha_j to alpha_j - a(s,j) * alpha_s.
  refl_.assign(n, std::vector<std::int64_t>(n * n, 0));
  for (int s = 0; s < n; ++s) {
    for (int j = 0; j < n; ++j) refl_[s][j * n + j] = 1;
    for (int j = 0; j < n; ++j) refl_[s][s * n + j] -= a[s][j];
  }
}

std::vector<std::int64_t> CoxeterSystem::mat_mul(
    const std::vector<std::int64_t>& a,
    const std::vector<std::int64_t>& b) const {
  const int n = rank();
  std::vector<std::int64_t> r(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const std::int64_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        r[i * n + j] =
            checked(__int128(r[i * n + j]) + __int128(aik) * b[k * n + j]);
    }
  return r;
}

bool CoxeterSystem::column_negative(const std::vector<std::int64_t>& m,
                                    int j) const {
  // Columns are images of simple roots, hence uniformly signed.
  const int n = rank();
  for (int i = 0; i < n; ++i)
    if (m[i * n + j] < 0) return true;
  return false;
}

// ShortLex normal form: repeatedly extract the smallest left descent,
// reading descents off the matrix of the inverse element.
std::vector<std::uint8_t> CoxeterSystem::normalize(
    const std::vector<Gen>& word) const {
  const int n = rank();
  std::vector<std::int64_t> inv(n * n, 0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
  // Accumulate refl[w_k]*...*refl[w_1], the matrix of the inverse element.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= n) throw Error("generator index out of range");
    inv = mat_mul(inv, refl_[*it]);
  }
  std::vector<std::uint8_t> out;
  for (;;) {
    int s = -1;
    for (int j = 0; j < n; ++j)
      if (column_negative(inv, j)) {
        s = j;
        break;
      }
    if (s < 0) break;
    out.push_back(static_cast<std::uint8_t>(s));
    inv = mat_mul(inv, refl_[s]);
  }
  return out;
}

Gen CoxeterSystem::gen(const std::string& label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels_[i] == label) return i;
  throw Error("unknown generator label '" + label + "'");
}

Element CoxeterSystem::identity() const { return Element(this, {}); }

Element CoxeterSystem::generator(Gen s) const {
  if (s < 0 || s >= rank()) throw Error("generator index out of range");
  return Element(this, {static_cast<std::uint8_t>(s)});
}

Element CoxeterSystem::from_word(const std::vector<Gen>& letters) const {
  return Element(this, normalize(letters));
}

Element CoxeterSystem::from_labels(
    const std::vector<std::string>& letters) const {
  std::vector<Gen> w;
  w.reserve(letters.size());
  for (const auto& l : letters) w.push_back(gen(l));
  return from_word(w);
}

std::vector<Element> CoxeterSystem::elements_up_to_length(int L) const {
  if (L < 0) throw Error("length bound must be nonnegative");
  std::set<Element> seen;
  std::vector<Element> level{identity()};
  seen.insert(identity());
  for (int len = 0; len < L && !level.empty(); ++len) {
    std::vector<Element> next;
    for (const auto& x : level)
      for (Gen s = 0; s < rank(); ++s) {
        Element xs = x.mul_gen(s, Side::right);
        if (xs.length() == len + 1 && seen.insert(xs).second)
          next.push_back(xs);
      }
    level = std::move(next);
  }
  return std::vector<Element>(seen.begin(), seen.end());
}

bool CoxeterSystem::finite() const {
  std::vector<Gen> all(rank());
  for (int i = 0; i < rank(); ++i) all[i] = i;
  return finite_parabolic(all);
}

// Classify each connected component of the diagram of I against the list
// of finite crystallographic types: A_n, B_n/C_n, D_n, E6, E7, E8, F4, G2.
bool CoxeterSystem::finite_parabolic(const std::vector<Gen>& I) const {
  std::vector<Gen> verts = I;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::set<Gen> todo(verts.begin(), verts.end());

  while (!todo.empty()) {
    // Extract one component.
    std::vector<Gen> comp{*todo.begin()};
    todo.erase(todo.begin());
    for (size_t i = 0; i < comp.size(); ++i)
      for (auto it = todo.begin(); it != todo.end();)
        if (m(comp[i], *it) != 2) {
          comp.push_back(*it);
          it = todo.erase(it);
        } else {
          ++it;
        }

    const int k = static_cast<int>(comp.size());
    if (k == 1) continue;

    int edges = 0, fours = 0, sixes = 0;
    bool infinite_bond = false;
    std::map<Gen, int> degree;
    std::vector<std::pair<Gen, Gen>> heavy;  // edges with m = 4
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const int mij = m(comp[i], comp[j]);
        if (mij == 2) continue;
        ++edges;
        ++degree[comp[i]];
        ++degree[comp[j]];
        if (mij == kInfinity) infinite_bond = true;
        if (mij == 4) {
          ++fours;
          heavy.emplace_back(comp[i], comp[j]);
        }
        if (mij == 6) ++sixes;
      }

    if (infinite_bond) return false;
    if (edges != k - 1) return false;  // a cycle: affine A~ or worse

    if (sixes > 0) {
      if (k != 2) return false;  // only G2 itself
      continue;
    }
    if (fours >= 2) return false;
    if (fours == 1) {
      int maxdeg = 0;
      for (const auto& [g, d] : degree) maxdeg = std::max(maxdeg, d);
      if (maxdeg > 2) return false;  // branched with a 4-bond
      // Path; finite iff the 4-bond touches an endpoint (B_n) or the
      // component is exactly F4.
      const bool touches_leaf =
          degree[heavy[0].first] == 1 || degree[heavy[0].second] == 1;
      if (!touches_leaf && k != 4) return false;
      continue;
    }
    // Simply laced tree: A, D or E.
    std::vector<Gen> branch;
    for (const auto& [g, d] : degree) {
      if (d >= 4) return false;
      if (d == 3) branch.push_back(g);
    }
    if (branch.size() >= 2) return false;
    if (branch.empty()) continue;  // A_n
    // Arms from the single branch vertex; lengths a <= b <= c in edges.
    std::vector<int> arms;
    for (int i = 0; i < k; ++i) {
      if (comp[i] == branch[0] || m(comp[i], branch[0]) == 2) continue;
      int len = 1;
      Gen prev = branch[0], cur = comp[i];
      for (;;) {
        Gen next = -1;
        for (int j = 0; j < k; ++j)
          if (comp[j] != prev && comp[j] != cur && m(cur, comp[j]) != 2)
            next = comp[j];
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) return false;                      // (2,2,2) and up
    if (arms[1] > 2) return false;                       // (1,3,3) and up
    if (arms[1] == 2 && arms[2] > 4) return false;       // beyond E8
  }
  return true;
}

std::string CoxeterSystem::serialized() const {
  std::ostringstream out;
  for (size_t i = 0; i < labels_.size(); ++i)
    out << (i ? "," : "") << labels_[i];
  out << ";";
  for (const auto& row : matrix_) {
    out << "[";
    for (size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << "]";
  }
  return out.str();
}

std::string CoxeterSystem::content_hash() const {
  // FNV-1a, 64 bit.
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : serialized()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

CoxeterSystem CoxeterSystem::preset(const std::string& name) {
  auto chain = [](int n, std::vector<std::tuple<int, int, int>> special = {}) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("s" + std::to_string(i));
    std::vector<std::vector<int>> mat(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) mat[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) mat[i][i + 1] = mat[i + 1][i] = 3;
    for (auto [i, j, v] : special) mat[i][j] = mat[j][i] = v;
    return std::make_pair(labels, mat);
  };

  std::vector<std::string> labels;
  std::vector<std::vector<int>> mat;
  if (name == "A1" || name == "A2" || name == "A3" || name == "A4") {
    std::tie(labels, mat) = chain(name[1] - '0');
  } else if (name == "B2" || name == "C2") {
    std::tie(labels, mat) = chain(2, {{0, 1, 4}});
  } else if (name == "B3" || name == "C3") {
    std::tie(labels, mat) = chain(3, {{1, 2, 4}});
  } else if (name == "G2") {
    std::tie(labels, mat) = chain(2, {{0, 1, 6}});
  } else if (name == "A1~") {
    std::tie(labels, mat) = chain(2, {{0, 1, kInfinity}});
    labels = {"s1", "s0"};
  } else if (name == "A2~") {
    std::tie(labels, mat) = chain(3, {{0, 2, 3}, {1, 2, 3}});
    labels = {"s1", "s2", "s0"};
  } else if (name == "C2~") {
    std::tie(labels, mat) = chain(3, {{0, 1, 4}, {0, 2, 4}, {1, 2, 2}});
    labels = {"s1", "s2", "s0"};
  } else if (name == "G2~") {
    std::tie(labels, mat) = chain(3, {{0, 1, 6}, {0, 2, 3}, {1, 2, 2}});
    labels = {"s1", "s2", "s0"};
  } else {
    throw Error("unknown preset '" + name + "'");
  }
  return CoxeterSystem(std::move(labels), std::move(mat));
}

// ----------------------------------------------------------------------
// Element

Element Element::mul(const Element& o) const {
  if (sys_ != o.sys_) throw Error("elements belong to different systems");
  std::vector<Gen> w;
  w.reserve(word_.size() + o.word_.size());
  for (auto c : word_) w.push_back(c);
  for (auto c : o.word_) w.push_back(c);
  return sys_->from_word(w);
}

Element Element::mul_gen(Gen s, Side side) const {
  if (s < 0 || s >= sys_->rank()) throw Error("generator index out of range");
  std::vector<Gen> w;
  w.reserve(word_.size() + 1);
  if (side == Side::left) w.push_back(s);
  for (auto c : word_) w.push_back(c);
  if (side == Side::right) w.push_back(s);
  return sys_->from_word(w);
}

Element Element::inverse() const {
  std::vector<Gen> w(word_.rbegin(), word_.rend());
  return sys_->from_word(w);
}

bool Element::has_descent(Gen s, Side side) const {
  return mul_gen(s, side).length() < length();
}

std::vector<Gen> Element::descents(Side side) const {
  const int n = sys_->rank();
  // The matrix of x (for right descents) or x^{-1} (for left descents):
  // s is a right descent iff x(alpha_s) < 0.
  std::vector<std::int64_t> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  if (side == Side::right) {
    for (auto c : word_) m = sys_->mat_mul(m, sys_->refl_[c]);
  } else {
    for (auto it = word_.rbegin(); it != word_.rend(); ++it)
      m = sys_->mat_mul(m, sys_->refl_[*it]);
  }
  std::vector<Gen> out;
  for (int j = 0; j < n; ++j)
    if (sys_->column_negative(m, j)) out.push_back(j);
  return out;
}

bool Element::bruhat_leq(const Element& y) const {
  if (sys_ != y.sys_) throw Error("elements belong to different systems");
  Element x = *this, z = y;
  // Standard lifting-property recursion on a left descent of z.
  while (!z.is_identity()) {
    if (x.length() > z.length()) return false;
    if (x == z) return true;
    Gen s = z.descents(Side::left).front();
    if (x.has_descent(s, Side::left)) x = x.mul_gen(s, Side::left);
    z = z.mul_gen(s, Side::left);
  }
  return x.is_identity();
}

std::vector<Element> Element::bruhat_ideal() const {
  std::set<Element> seen{*this};
  std::vector<Element> frontier{*this};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& z : frontier) {
      const auto& w = z.word();
      for (size_t i = 0; i < w.size(); ++i) {
        std::vector<Gen> sub;
        sub.reserve(w.size() - 1);
        for (size_t j = 0; j < w.size(); ++j)
          if (j != i) sub.push_back(w[j]);
        Element c = sys_->from_word(sub);
        if (c.length() == z.length() - 1 && seen.insert(c).second)
          next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Element>(seen.begin(), seen.end());
}

std::string Element::str() const {
  if (word_.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) out += "*";
    out += sys_->label(word_[i]);
  }
  return out;
}

bool Element::operator==(const Element& o) const {
  return word_ == o.word_ && (sys_ == o.sys_ || (sys_ && o.sys_ && *sys_ == *o.sys_));
}

bool Element::operator<(const Element& o) const {
  if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
  return word_ < o.word_;
}

}  // namespace klc

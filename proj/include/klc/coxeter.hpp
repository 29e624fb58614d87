// Coxeter systems with crystallographic Coxeter matrices, and group
// elements in canonical ShortLex reduced-word normal form.
//
// Lengths and descents are computed exactly by tracking simple-root images
// in the integral root lattice of a generalized Cartan matrix realizing the
// Coxeter matrix.  An element is represented by its ShortLex-minimal reduced
// word, which makes equality and ordering canonical.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "klc/errors.hpp"

namespace klc {

using Gen = int;

enum class Side { left, right };

class Element;

class CoxeterSystem {
public:
  // Matrix entries: m(s,t) in {2,3,4,6} or kInfinity for s != t.
  static constexpr int kInfinity = 0;

  CoxeterSystem(std::vector<std::string> labels,
                std::vector<std::vector<int>> matrix);

  // Named presets: A1..A4, B2, B3, C3, G2 and affine A1~, A2~, C2~, G2~.
  // The affine generator s0 is ordered last.
  static CoxeterSystem preset(const std::string& name);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Gen s) const { return labels_[s]; }
  Gen gen(const std::string& label) const;  // throws Error on unknown label
  int m(Gen s, Gen t) const { return matrix_[s][t]; }

  Element identity() const;
  Element generator(Gen s) const;
  Element from_word(const std::vector<Gen>& letters) const;
  Element from_labels(const std::vector<std::string>& letters) const;

  // All elements of length <= L, ordered by (length, ShortLex).
  std::vector<Element> elements_up_to_length(int L) const;

  // Exact finiteness test for the standard parabolic W_I, by classifying
  // the connected components of the Coxeter diagram of I.
  bool finite_parabolic(const std::vector<Gen>& I) const;
  bool finite() const;

  // Stable fingerprint of (labels, matrix), used to key the disk cache.
  std::string content_hash() const;
  std::string serialized() const;

  bool operator==(const CoxeterSystem& o) const {
    return labels_ == o.labels_ && matrix_ == o.matrix_;
  }

private:
  friend class Element;

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> matrix_;
  // Reflection matrices on the root lattice, one per generator,
  // stored row-major; entry (i,j) is row i of the image of alpha_j.
  std::vector<std::vector<std::int64_t>> refl_;

  void build_reflections();
  std::vector<std::int64_t> mat_mul(const std::vector<std::int64_t>& a,
                                    const std::vector<std::int64_t>& b) const;
  bool column_negative(const std::vector<std::int64_t>& m, int j) const;
  std::vector<std::uint8_t> normalize(const std::vector<Gen>& word) const;
};

// An immutable group element; equality of elements is equality of their
// canonical words.  Ordering is (length, ShortLex), matching enumeration
// order everywhere.
class Element {
public:
  Element() : sys_(nullptr) {}

  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  const std::vector<std::uint8_t>& word() const { return word_; }
  const CoxeterSystem& system() const { return *sys_; }

  Element mul(const Element& o) const;
  Element mul_gen(Gen s, Side side) const;
  Element inverse() const;

  bool has_descent(Gen s, Side side) const;
  std::vector<Gen> descents(Side side) const;

  // Bruhat order: *this <= y.
  bool bruhat_leq(const Element& y) const;

  // The full lower Bruhat interval [e, *this], ordered by (length, ShortLex).
  std::vector<Element> bruhat_ideal() const;

  // "e" for the identity, otherwise labels joined by '*': "s1*s2*s1".
  std::string str() const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }
  bool operator<(const Element& o) const;

private:
  friend class CoxeterSystem;
  Element(const CoxeterSystem* sys, std::vector<std::uint8_t> word)
      : sys_(sys), word_(std::move(word)) {}

  const CoxeterSystem* sys_;
  std::vector<std::uint8_t> word_;
};

inline Element operator*(const Element& a, const Element& b) {
  return a.mul(b);
}

}  // namespace klc

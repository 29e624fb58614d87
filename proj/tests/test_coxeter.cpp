#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "klc/coxeter.hpp"
#include "oracles.hpp"

using namespace klc;

namespace {

std::vector<Gen> random_word(const CoxeterSystem& sys, std::mt19937& rng,
                             int len) {
  std::uniform_int_distribution<int> gen(0, sys.rank() - 1);
  std::vector<Gen> w(len);
  for (auto& c : w) c = gen(rng);
  return w;
}

// One random legal rewrite: insert ss, delete an adjacent equal pair, or
// swap an alternating braid run of full length m(s,t).
std::vector<Gen> random_rewrite(const CoxeterSystem& sys, std::vector<Gen> w,
                                std::mt19937& rng) {
  struct Move {
    int kind;  // 0 insert, 1 delete, 2 braid
    int pos;
    Gen s, t;
    int m;
  };
  std::vector<Move> moves;
  for (int p = 0; p <= static_cast<int>(w.size()); ++p)
    for (Gen s = 0; s < sys.rank(); ++s) moves.push_back({0, p, s, 0, 0});
  for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p)
    if (w[p] == w[p + 1]) moves.push_back({1, p, 0, 0, 0});
  for (Gen s = 0; s < sys.rank(); ++s)
    for (Gen t = 0; t < sys.rank(); ++t) {
      if (s == t) continue;
      const int m = sys.m(s, t);
      if (m == CoxeterSystem::kInfinity) continue;
      for (int p = 0; p + m <= static_cast<int>(w.size()); ++p) {
        bool ok = true;
        for (int i = 0; i < m; ++i)
          if (w[p + i] != (i % 2 == 0 ? s : t)) ok = false;
        if (ok) moves.push_back({2, p, s, t, m});
      }
    }
  const Move mv = moves[std::uniform_int_distribution<size_t>(
      0, moves.size() - 1)(rng)];
  if (mv.kind == 0) {
    w.insert(w.begin() + mv.pos, {mv.s, mv.s});
  } else if (mv.kind == 1) {
    w.erase(w.begin() + mv.pos, w.begin() + mv.pos + 2);
  } else {
    for (int i = 0; i < mv.m; ++i) w[mv.pos + i] = i % 2 == 0 ? mv.t : mv.s;
  }
  return w;
}

}  // namespace

TEST_CASE("coxeter construction and presets") {
  CHECK(CoxeterSystem::preset("A2").rank() == 2);
  CHECK(CoxeterSystem::preset("B3").m(1, 2) == 4);
  CHECK(CoxeterSystem::preset("A1~").m(0, 1) == CoxeterSystem::kInfinity);
  CHECK(CoxeterSystem::preset("A2~").label(2) == "s0");
  CHECK_THROWS_AS(CoxeterSystem::preset("H3"), Error);
  CHECK_THROWS_AS(CoxeterSystem({"s1", "s2"}, {{1, 5}, {5, 1}}), Error);
  CHECK_THROWS_AS(CoxeterSystem({"s1", "s2"}, {{1, 3}, {4, 1}}), Error);
  CHECK(CoxeterSystem::preset("A3").finite());
  CHECK_FALSE(CoxeterSystem::preset("A1~").finite());
  CHECK_FALSE(CoxeterSystem::preset("A2~").finite());
  CHECK_FALSE(CoxeterSystem::preset("C2~").finite());
  CHECK_FALSE(CoxeterSystem::preset("G2~").finite());
}

TEST_CASE("from_word normal forms in A2") {
  const auto sys = CoxeterSystem::preset("A2");
  CHECK(sys.from_labels({"s1", "s1"}) == sys.identity());
  CHECK(sys.from_labels({"s2", "s1", "s2"}) ==
        sys.from_labels({"s1", "s2", "s1"}));
  CHECK(sys.from_labels({"s1", "s2"}).length() == 2);
  CHECK_THROWS_AS(sys.from_labels({"s9"}), Error);
}

TEST_CASE("length agrees with the permutation model on S4") {
  const auto sys = CoxeterSystem::preset("A3");
  CHECK(sys.identity().length() == 0);
  CHECK(CoxeterSystem::preset("A2").from_labels({"s1", "s2", "s1"}).length() ==
        3);
  CHECK(sys.from_labels({"s2", "s1", "s3", "s2"}).length() == 4);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = random_word(sys, rng, trial % 12);
    const Element x = sys.from_word(w);
    CHECK(x.length() == oracle::inversions(oracle::permutation_of(x)));
    // The normal form represents the same permutation as the input word.
    std::vector<int> p{0, 1, 2, 3};
    for (Gen s : w) std::swap(p[s], p[s + 1]);
    CHECK(p == oracle::permutation_of(x));
  }
}

TEST_CASE("multiplication and inverse") {
  const auto sys = CoxeterSystem::preset("A2");
  const Element s1 = sys.generator(0), s2 = sys.generator(1);
  CHECK(s1.mul(s1) == sys.identity());
  CHECK(s1.mul(s2).mul(s1) == sys.from_labels({"s1", "s2", "s1"}));
  CHECK(s1.mul(s2).mul(s2.mul(s1)) == sys.identity());
  CHECK(sys.identity().inverse() == sys.identity());
  CHECK(s1.mul(s2).inverse() == s2.mul(s1));

  std::mt19937 rng(11);
  const auto aff = CoxeterSystem::preset("A1~");
  for (int trial = 0; trial < 50; ++trial) {
    const Element x = aff.from_word(random_word(aff, rng, trial % 9));
    CHECK(x.mul(x.inverse()) == aff.identity());
  }
}

TEST_CASE("descents match the length definition") {
  const auto sys = CoxeterSystem::preset("A2");
  CHECK(sys.identity().descents(Side::left).empty());
  const Element w0 = sys.from_labels({"s1", "s2", "s1"});
  CHECK(w0.descents(Side::left) == std::vector<Gen>{0, 1});
  CHECK(w0.descents(Side::right) == std::vector<Gen>{0, 1});
  CHECK(sys.from_labels({"s1", "s2"}).descents(Side::right) ==
        std::vector<Gen>{1});

  for (const auto& name : {"A3", "A1~"}) {
    const auto s = CoxeterSystem::preset(name);
    for (const auto& x : s.elements_up_to_length(s.finite() ? 6 : 7))
      for (Gen g = 0; g < s.rank(); ++g) {
        for (Side side : {Side::left, Side::right}) {
          const bool brute = x.mul_gen(g, side).length() < x.length();
          const auto d = x.descents(side);
          CHECK(brute == (std::find(d.begin(), d.end(), g) != d.end()));
          CHECK(brute == x.has_descent(g, side));
        }
      }
  }
}

TEST_CASE("bruhat order agrees with the subword oracle on S3 and S4") {
  for (const auto& name : {"A2", "A3"}) {
    const auto sys = CoxeterSystem::preset(name);
    const auto all = sys.elements_up_to_length(6);
    for (const auto& x : all) {
      CHECK(sys.identity().bruhat_leq(x));
      for (const auto& y : all)
        CHECK(x.bruhat_leq(y) == oracle::bruhat_leq_subword(x, y));
    }
  }
}

TEST_CASE("element enumeration") {
  const auto a2 = CoxeterSystem::preset("A2");
  CHECK(a2.elements_up_to_length(3).size() == 6);
  CHECK(a2.elements_up_to_length(0).size() == 1);

  const auto aff = CoxeterSystem::preset("A1~");
  const auto ball = aff.elements_up_to_length(3);
  REQUIRE(ball.size() == 7);
  std::set<std::string> names;
  for (const auto& x : ball) names.insert(x.str());
  CHECK(names == std::set<std::string>{"e", "s1", "s0", "s1*s0", "s0*s1",
                                       "s1*s0*s1", "s0*s1*s0"});
  // Deterministic (length, ShortLex) order.
  for (size_t i = 1; i < ball.size(); ++i) CHECK(ball[i - 1] < ball[i]);
}

TEST_CASE("normal form is invariant under braid and nil rewrites") {
  std::mt19937 rng(23);
  for (const auto& name : {"A3", "B2", "G2", "A2~"}) {
    const auto sys = CoxeterSystem::preset(name);
    for (int trial = 0; trial < 40; ++trial) {
      const auto w = random_word(sys, rng, 1 + trial % 8);
      const Element x = sys.from_word(w);
      auto rewritten = w;
      for (int k = 0; k < 6; ++k) rewritten = random_rewrite(sys, rewritten, rng);
      CHECK(sys.from_word(rewritten) == x);
    }
  }
}

TEST_CASE("length is subadditive and generators shift it by one") {
  std::mt19937 rng(5);
  const auto sys = CoxeterSystem::preset("B3");
  for (int trial = 0; trial < 100; ++trial) {
    const Element x = sys.from_word(random_word(sys, rng, trial % 10));
    const Element y = sys.from_word(random_word(sys, rng, trial % 7));
    CHECK(x.mul(y).length() <= x.length() + y.length());
    for (Gen s = 0; s < sys.rank(); ++s) {
      const int d = x.mul_gen(s, Side::right).length() - x.length();
      CHECK((d == 1 || d == -1));
    }
  }
}

TEST_CASE("finite types have a unique longest element") {
  for (const auto& name : {"A3", "B2", "G2"}) {
    const auto sys = CoxeterSystem::preset(name);
    const auto all = sys.elements_up_to_length(24);
    const int top = all.back().length();
    CHECK(std::count_if(all.begin(), all.end(), [&](const Element& x) {
            return x.length() == top;
          }) == 1);
  }
}

#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "klc/parabolic.hpp"
#include "oracles.hpp"

using namespace klc;

namespace {

std::vector<std::vector<Gen>> all_subsets(int rank) {
  std::vector<std::vector<Gen>> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    std::vector<Gen> I;
    for (int s = 0; s < rank; ++s)
      if (mask & (1 << s)) I.push_back(s);
    out.push_back(I);
  }
  return out;
}

}  // namespace

TEST_CASE("minimal coset representatives in A2") {
  const auto sys = CoxeterSystem::preset("A2");
  const SubsetSpec I(sys, {0});  // {s1}
  const Element s2s1 = sys.from_labels({"s2", "s1"});
  CHECK(min_rep(s2s1, I, Side::left) == s2s1);
  CHECK(min_rep(sys.generator(0), I, Side::right) == sys.identity());
  const Element s2 = sys.generator(1);
  CHECK(min_rep(s2, I, Side::left) == s2);
  CHECK(min_rep(s2, I, Side::right) == s2);
}

TEST_CASE("min_rep agrees with the orbit brute force on S4") {
  const auto sys = CoxeterSystem::preset("A3");
  const auto all = sys.elements_up_to_length(6);
  for (const auto& gens : all_subsets(3)) {
    const SubsetSpec I(sys, gens);
    for (const auto& x : all)
      for (Side side : {Side::left, Side::right}) {
        const Element m = min_rep(x, I, side);
        CHECK(m == oracle::min_rep_brute(x, I, side));
        CHECK(min_rep(m, I, side) == m);  // idempotent
        CHECK(in_quotient(m, I, side == Side::right ? Side::right : Side::left));
      }
  }
}

TEST_CASE("quotients of A2") {
  const auto sys = CoxeterSystem::preset("A2");
  const SubsetSpec I(sys, {0});
  auto names = [](const std::vector<Element>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
  };
  CHECK(names(quotient(sys, I, Side::right, 3)) ==
        std::vector<std::string>{"e", "s2", "s1*s2"});
  CHECK(names(quotient(sys, I, Side::left, 3)) ==
        std::vector<std::string>{"e", "s2", "s2*s1"});
  CHECK(quotient(sys, SubsetSpec(sys, {}), Side::right, 3).size() == 6);
}

TEST_CASE("longest elements of parabolic subgroups") {
  const auto sys = CoxeterSystem::preset("A2");
  CHECK(longest_element(sys, SubsetSpec(sys, {0, 1})) ==
        sys.from_labels({"s1", "s2", "s1"}));
  CHECK(longest_element(sys, SubsetSpec(sys, {0})) == sys.generator(0));

  const auto aff = CoxeterSystem::preset("A1~");
  CHECK_THROWS_AS(longest_element(aff, SubsetSpec(aff, {0, 1})),
                  InfiniteParabolic);
  CHECK_THROWS_AS(parabolic_elements(aff, SubsetSpec(aff, {0, 1})),
                  InfiniteParabolic);
  // l(w_I w) = l(w_I) - l(w) inside W_I.
  const auto b3 = CoxeterSystem::preset("B3");
  const SubsetSpec I(b3, {1, 2});
  const Element wI = longest_element(b3, I);
  CHECK(wI.length() == 4);  // longest element of B2
  for (const auto& w : parabolic_elements(b3, I))
    CHECK(wI.mul(w).length() == wI.length() - w.length());
}

TEST_CASE("double coset representatives in A2") {
  const auto sys = CoxeterSystem::preset("A2");
  const SubsetSpec J(sys, {1}), I(sys, {0});
  auto reps = double_min_reps(sys, J, I, 3);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == sys.identity());
  CHECK(reps[1] == sys.from_labels({"s1", "s2"}));
  CHECK(double_min_reps(sys, SubsetSpec(sys, {}), SubsetSpec(sys, {}), 3)
            .size() == 6);
  const SubsetSpec I1(sys, {0});
  auto same = double_min_reps(sys, I1, I1, 3);
  REQUIRE(same.size() == 2);
  CHECK(same[1] == sys.generator(1));
}

TEST_CASE("regularity of double cosets") {
  const auto sys = CoxeterSystem::preset("A2");
  const SubsetSpec J(sys, {1}), I(sys, {0});
  CHECK(is_regular(sys.identity(), J, I));
  CHECK_FALSE(is_regular(sys.from_labels({"s1", "s2"}), J, I));
  CHECK(is_regular(sys.generator(0), SubsetSpec(sys, {1}), SubsetSpec(sys, {})));
  CHECK_THROWS_AS(is_regular(sys.generator(0), J, I), NotMinimalRep);

  auto regs = regular_double_reps(sys, J, I, 3);
  REQUIRE(regs.size() == 1);
  CHECK(regs[0] == sys.identity());
  CHECK(regular_double_reps(sys, SubsetSpec(sys, {}), SubsetSpec(sys, {}), 3)
            .size() == 6);
}

TEST_CASE("regular double cosets of affine A1 at length 4") {
  const auto sys = CoxeterSystem::preset("A1~");
  const SubsetSpec J(sys, {1}), I(sys, {0});  // J = {s0}, I = {s1}
  const auto regs = regular_double_reps(sys, J, I, 4);
  // Brute force: minimal reps with no left descent in J, no right descent
  // in I, and z s1 z^{-1} not equal to s0.
  std::vector<Element> expected;
  for (const auto& z : sys.elements_up_to_length(4)) {
    if (z.has_descent(1, Side::left) || z.has_descent(0, Side::right))
      continue;
    const Element conj = z.mul(sys.generator(0)).mul(z.inverse());
    if (conj == sys.generator(1)) continue;
    expected.push_back(z);
  }
  CHECK(regs == expected);
}

TEST_CASE("length additivity across quotient decompositions") {
  for (const auto& name : {"A2", "A3"}) {
    const auto sys = CoxeterSystem::preset(name);
    const auto all = sys.elements_up_to_length(6);
    for (const auto& gens : all_subsets(sys.rank())) {
      const SubsetSpec I(sys, gens);
      const auto sub = parabolic_elements(sys, I);
      for (const auto& x : all) {
        if (!in_quotient(x, I, Side::right)) continue;
        for (const auto& w : sub)
          CHECK(x.mul(w).length() == x.length() + w.length());
      }
    }
  }
}

TEST_CASE("double coset decomposition is a length-additive bijection") {
  for (const auto& name : {"A2", "A3"}) {
    const auto sys = CoxeterSystem::preset(name);
    const auto all = sys.elements_up_to_length(6);
    for (const auto& gj : all_subsets(sys.rank()))
      for (const auto& gi : all_subsets(sys.rank())) {
        const SubsetSpec J(sys, gj), I(sys, gi);
        const auto wI = parabolic_elements(sys, I);
        const auto wJ = parabolic_elements(sys, J);
        for (const auto& z : double_min_reps(sys, J, I, 6)) {
          // H = J cap z I z^{-1}.
          std::vector<Gen> H;
          const Element zi = z.inverse();
          for (Gen t : I.gens()) {
            const Element c = z.mul(sys.generator(t)).mul(zi);
            if (c.length() == 1 && J.contains(c.word()[0]))
              H.push_back(c.word()[0]);
          }
          const SubsetSpec Hspec(sys, H);
          // The coset W_J z W_I.
          std::set<Element> coset;
          for (const auto& u : wJ)
            for (const auto& w : wI) coset.insert(u.mul(z).mul(w));
          // Bijection from W_J^H x W_I.
          std::set<Element> image;
          size_t pairs = 0;
          for (const auto& u : wJ) {
            if (!in_quotient(u, Hspec, Side::right)) continue;
            for (const auto& w : wI) {
              const Element g = u.mul(z).mul(w);
              CHECK(g.length() == u.length() + z.length() + w.length());
              image.insert(g);
              ++pairs;
            }
          }
          CHECK(image == coset);
          CHECK(pairs == coset.size());
          if (is_regular(z, J, I)) CHECK(coset.size() == wJ.size() * wI.size());
        }
      }
  }
}

TEST_CASE("subset validation") {
  const auto sys = CoxeterSystem::preset("A2");
  CHECK_THROWS_AS(SubsetSpec(sys, {5}), Error);
  CHECK_THROWS_AS(SubsetSpec::from_labels(sys, {"s7"}), Error);
  CHECK(SubsetSpec::from_labels(sys, {"s2", "s1"}).gens() ==
        std::vector<Gen>{0, 1});
  CHECK(SubsetSpec(sys, {1}).str() == "{s2}");
  CHECK(SubsetSpec(sys, {}).str() == "{}");
}

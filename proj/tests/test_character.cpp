#include <doctest.h>

#include "chevalab/character.hpp"

using namespace chevalab;

namespace {
Int wdim(const char* t, const Weight& lam) { return Context(LieType::parse(t)).weyl_dim(lam); }
Character wchar(const char* t, const Weight& lam) {
  return Context(LieType::parse(t)).weyl_char(lam);
}
}  // namespace

TEST_SUITE("characters") {

TEST_CASE("classical dimensions by the product formula") {
  CHECK(wdim("A2", {1, 0}) == 3);
  CHECK(wdim("A2", {1, 1}) == 8);
  CHECK(wdim("A2", {3, 0}) == 10);
  CHECK(wdim("A4", {0, 1, 0, 0}) == 10);
  CHECK(wdim("B3", {1, 0, 0}) == 7);
  CHECK(wdim("B3", {0, 1, 0}) == 21);
  CHECK(wdim("B3", {0, 0, 1}) == 8);
  CHECK(wdim("B3", {2, 0, 0}) == 27);
  CHECK(wdim("B4", {0, 0, 1, 0}) == 84);
  CHECK(wdim("C3", {1, 0, 0}) == 6);
  CHECK(wdim("C3", {0, 1, 0}) == 14);
  CHECK(wdim("C3", {0, 0, 1}) == 14);
  CHECK(wdim("C4", {0, 0, 0, 1}) == 42);
  CHECK(wdim("D4", {1, 0, 0, 0}) == 8);
  CHECK(wdim("D4", {0, 1, 0, 0}) == 28);
  CHECK(wdim("D4", {0, 0, 1, 0}) == 8);
  CHECK(wdim("D4", {0, 0, 0, 1}) == 8);
  CHECK(wdim("E6", {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(wdim("E6", {0, 1, 0, 0, 0, 0}) == 78);
  CHECK(wdim("E7", {1, 0, 0, 0, 0, 0, 0}) == 133);
  CHECK(wdim("E7", {0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(wdim("E8", {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK(wdim("E8", {1, 0, 0, 0, 0, 0, 0, 0}) == 3875);
  CHECK(wdim("F4", {1, 0, 0, 0}) == 52);
  CHECK(wdim("F4", {0, 0, 0, 1}) == 26);
  CHECK(wdim("G2", {1, 0}) == 7);
  CHECK(wdim("G2", {0, 1}) == 14);
}

TEST_CASE("weight multiplicities sum to the formula dimension") {
  // two independent computations of dim must agree exactly
  auto cross = [](const char* t, const Weight& lam) {
    Context ctx(LieType::parse(t));
    CHECK(ctx.weyl_char(lam).dim() == ctx.weyl_dim(lam));
  };
  cross("A3", {1, 1, 0});
  cross("B3", {1, 0, 1});
  cross("B4", {0, 1, 0, 0});
  cross("C3", {0, 1, 1});
  cross("C4", {1, 0, 0, 1});
  cross("D4", {1, 1, 0, 0});
  cross("D5", {0, 0, 0, 0, 2});
  cross("F4", {1, 0, 0, 1});
  cross("G2", {2, 1});
  cross("E6", {0, 0, 0, 1, 0, 0});
  cross("E7", {1, 0, 0, 0, 0, 0, 1});
  cross("E8", {1, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("adjoint characters") {
  Character e8 = wchar("E8", {0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(e8.dim() == 248);
  CHECK(e8.mult(Weight(8, 0)) == 8);
  int ones = 0;
  for (auto& [w, c] : e8.m)
    if (c == 1) ++ones;
  CHECK(ones == 240);

  Character f4 = wchar("F4", {1, 0, 0, 0});
  CHECK(f4.dim() == 52);
  CHECK(f4.mult(Weight(4, 0)) == 4);
  CHECK(wchar("F4", {0, 0, 0, 1}).mult(Weight(4, 0)) == 2);
  CHECK(wchar("G2", {1, 0}).mult(Weight(2, 0)) == 1);
  CHECK(wchar("A2", {1, 1}).mult(Weight(2, 0)) == 2);
}

TEST_CASE("tensor products decompose classically") {
  Context b3(LieType('B', 3));
  auto d = b3.decompose_weyl(b3.weyl_char({1, 0, 0}) * b3.weyl_char({1, 0, 0}));
  std::map<Weight, Int> want{{{2, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 0}, 1}};
  CHECK(d == want);

  Context a1(LieType('A', 1));
  auto d2 = a1.decompose_weyl(a1.weyl_char({1}) * a1.weyl_char({1}));
  CHECK(d2 == std::map<Weight, Int>{{{2}, 1}, {{0}, 1}});

  Context g2(LieType('G', 2));
  auto d3 = g2.decompose_weyl(g2.weyl_char({1, 0}) * g2.weyl_char({1, 0}));
  std::map<Weight, Int> want3{{{2, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, 1}};
  CHECK(d3 == want3);
}

TEST_CASE("exterior and symmetric powers") {
  CHECK(exterior_power(wchar("A2", {1, 0}), 2) == wchar("A2", {0, 1}));
  CHECK(exterior_power(wchar("A2", {1, 0}), 3) == Character::trivial(2));
  CHECK(exterior_power(wchar("B3", {1, 0, 0}), 2) == wchar("B3", {0, 1, 0}));
  CHECK(exterior_power(wchar("D4", {1, 0, 0, 0}), 2) == wchar("D4", {0, 1, 0, 0}));
  CHECK(sym_power(wchar("A1", {1}), 2) == wchar("A1", {2}));
  CHECK(sym_power(wchar("A1", {1}), 3) == wchar("A1", {3}));
  Character s2 = sym_power(wchar("B3", {1, 0, 0}), 2);  // 28 = 27 + 1
  CHECK(s2.dim() == 28);
  CHECK(s2 == wchar("B3", {2, 0, 0}) + Character::trivial(3));
}

TEST_CASE("duals and twists") {
  CHECK(wchar("E6", {1, 0, 0, 0, 0, 0}).dual() == wchar("E6", {0, 0, 0, 0, 0, 1}));
  CHECK(wchar("A3", {1, 0, 0}).dual() == wchar("A3", {0, 0, 1}));
  CHECK(wchar("B3", {0, 0, 1}).dual() == wchar("B3", {0, 0, 1}));
  Character c = wchar("B3", {0, 0, 1});
  Character t = c.twist(2);
  CHECK(t.dim() == 8);
  CHECK(t.mult(Weight{0, 0, 2}) == 1);
  CHECK(t.mult(Weight{0, 0, 1}) == 0);
  CHECK(c.twist(1) == c);
}

TEST_CASE("product contexts") {
  Context two(TypeVec::parse("A1+A1"));
  CHECK(two.weyl_char({1, 1}).dim() == 4);
  CHECK(two.weyl_dim({1, 1}) == 4);
  Context bb(TypeVec::parse("B3+B3"));
  Weight lam{1, 0, 0, 0, 1, 0};
  CHECK(bb.weyl_dim(lam) == 7 * 21);
  Character ch = bb.weyl_char(lam);
  CHECK(ch.dim() == 147);
  CHECK(bb.decompose_weyl(ch) == std::map<Weight, Int>{{lam, 1}});
  Context none(TypeVec{});
  CHECK(none.weyl_char({}).dim() == 1);
}

TEST_CASE("virtual characters decompose with signs") {
  Context b3(LieType('B', 3));
  Character v = b3.weyl_char({1, 0, 0}) * b3.weyl_char({1, 0, 0});
  v -= b3.weyl_char({2, 0, 0});
  v -= b3.weyl_char({0, 1, 0});
  CHECK(b3.decompose_weyl(v) == std::map<Weight, Int>{{{0, 0, 0}, 1}});
  Character neg = Character::trivial(3) - b3.weyl_char({1, 0, 0});
  auto d = b3.decompose_weyl(neg);
  CHECK(d == std::map<Weight, Int>{{{1, 0, 0}, -1}, {{0, 0, 0}, 1}});
}

}  // TEST_SUITE

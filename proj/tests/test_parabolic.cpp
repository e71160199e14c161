#include <doctest.h>

#include <numeric>
#include <set>

#include "chevalab/parabolic.hpp"

using namespace chevalab;

namespace {
// 1-based helper to keep the frozen tables readable
std::vector<int> ix(std::initializer_list<int> v) {
  std::vector<int> out;
  for (int x : v) out.push_back(x - 1);
  return out;
}
}  // namespace

TEST_SUITE("parabolics") {

TEST_CASE("component orderings are the frozen conventions") {
  RootSystem e7(LieType('E', 7)), e8(LieType('E', 8)), f4(LieType('F', 4));
  auto ord = [](const RootSystem& rs, std::vector<int> nodes) {
    auto c = order_component(rs, nodes);
    std::vector<int> o;
    for (int v : c.order) o.push_back(v + 1);
    return std::pair{c.type.str(), o};
  };
  CHECK(ord(e8, ix({2, 3, 4, 5})) == std::pair{std::string("D4"), std::vector<int>{2, 4, 3, 5}});
  CHECK(ord(e7, ix({1, 2, 3, 4, 5})) ==
        std::pair{std::string("D5"), std::vector<int>{1, 3, 4, 5, 2}});
  CHECK(ord(e8, ix({2, 3, 4, 5, 6})) ==
        std::pair{std::string("D5"), std::vector<int>{6, 5, 4, 3, 2}});
  CHECK(ord(e8, ix({2, 3, 4, 5, 6, 7})) ==
        std::pair{std::string("D6"), std::vector<int>{7, 6, 5, 4, 3, 2}});
  CHECK(ord(e8, ix({2, 3, 4, 5, 6, 7, 8})) ==
        std::pair{std::string("D7"), std::vector<int>{8, 7, 6, 5, 4, 2, 3}});
  CHECK(ord(e8, ix({1, 2, 3, 4, 5, 6, 7})) ==
        std::pair{std::string("E7"), std::vector<int>{1, 2, 3, 4, 5, 6, 7}});
  CHECK(ord(e8, ix({1, 2, 3, 4, 5, 6})) ==
        std::pair{std::string("E6"), std::vector<int>{1, 2, 3, 4, 5, 6}});
  CHECK(ord(e8, ix({5, 6, 7, 8})) == std::pair{std::string("A4"), std::vector<int>{5, 6, 7, 8}});
  CHECK(ord(e8, ix({1, 3})) == std::pair{std::string("A2"), std::vector<int>{1, 3}});
  CHECK(ord(f4, ix({2, 3})) == std::pair{std::string("B2"), std::vector<int>{2, 3}});
  CHECK(ord(f4, ix({1, 2, 3})) == std::pair{std::string("B3"), std::vector<int>{1, 2, 3}});
  CHECK(ord(f4, ix({2, 3, 4})) == std::pair{std::string("C3"), std::vector<int>{4, 3, 2}});
  CHECK(ord(f4, ix({1, 2, 3, 4})) ==
        std::pair{std::string("F4"), std::vector<int>{1, 2, 3, 4}});

  RootSystem b4(LieType('B', 4)), c4(LieType('C', 4)), d8(LieType('D', 8)), g2(LieType('G', 2));
  CHECK(ord(b4, ix({2, 3, 4})) == std::pair{std::string("B3"), std::vector<int>{2, 3, 4}});
  CHECK(ord(c4, ix({2, 3, 4})) == std::pair{std::string("C3"), std::vector<int>{2, 3, 4}});
  CHECK(ord(c4, ix({3, 4})) == std::pair{std::string("C2"), std::vector<int>{3, 4}});
  CHECK(ord(d8, ix({3, 4, 5, 6, 7, 8})) ==
        std::pair{std::string("D6"), std::vector<int>{3, 4, 5, 6, 7, 8}});
  CHECK(ord(g2, ix({1, 2})) == std::pair{std::string("G2"), std::vector<int>{1, 2}});
}

TEST_CASE("levels of the A5 parabolic of E6") {
  RootSystem e6(LieType('E', 6));
  Parabolic p = Parabolic::from_removed(e6, ix({2}));
  CHECK(p.levi_type().str() == "A5");
  CHECK(p.max_level() == 2);
  CHECK(p.level_roots(0).size() == 15);
  CHECK(p.level_roots(1).size() == 20);
  CHECK(p.level_roots(2).size() == 1);
  auto& s1 = p.shapes(1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].members.size() == 20);
  CHECK(s1[0].generator == e6.from_label("010000"));
  CHECK(s1[0].maximal == e6.from_label("112321"));
  CHECK(p.label_string(s1[0]) == "00100");
  CHECK(p.label_string(p.shapes(2)[0]) == "00000");
  CHECK(!s1[0].mixed_length_flag);
}

TEST_CASE("levels of the E7 parabolic of E8") {
  RootSystem e8(LieType('E', 8));
  Parabolic p = Parabolic::from_removed(e8, ix({8}));
  CHECK(p.levi_type().str() == "E7");
  CHECK(p.max_level() == 2);
  CHECK(p.level_roots(0).size() == 63);
  CHECK(p.level_roots(1).size() == 56);
  CHECK(p.level_roots(2).size() == 1);
  CHECK(p.label_string(p.shapes(1)[0]) == "0000001");  // the 56-dimensional module
  CHECK(p.shapes(1)[0].generator == e8.from_label("00000001"));
}

TEST_CASE("short-Levi parabolic of G2 flags mixed lengths") {
  RootSystem g2(LieType('G', 2));
  Parabolic p = Parabolic::from_removed(g2, ix({2}));
  CHECK(p.levi_type().str() == "A1");
  CHECK(p.max_level() == 2);
  auto& s1 = p.shapes(1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].members.size() == 4);
  CHECK(p.label_string(s1[0]) == "3");
  CHECK(s1[0].mixed_length_flag);
  CHECK(p.label_string(p.shapes(2)[0]) == "0");
  CHECK(!p.shapes(2)[0].mixed_length_flag);
}

TEST_CASE("C3 parabolic of F4") {
  RootSystem f4(LieType('F', 4));
  Parabolic p = Parabolic::from_removed(f4, ix({1}));
  CHECK(p.levi_type().str() == "C3");
  CHECK(p.max_level() == 2);
  CHECK(p.level_roots(1).size() == 14);
  auto& s1 = p.shapes(1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].generator == f4.from_label("1000"));
  CHECK(p.label_string(s1[0]) == "001");
  CHECK(s1[0].mixed_length_flag);  // both lengths occur among the 14
  CHECK(p.label_string(p.shapes(2)[0]) == "000");
}

TEST_CASE("A4A2A1 parabolic of E8") {
  RootSystem e8(LieType('E', 8));
  Parabolic p = Parabolic::from_removed(e8, ix({4}));
  CHECK(p.levi_type().str() == "A4+A2+A1");
  auto& comps = p.components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].order == ix({5, 6, 7, 8}));
  CHECK(comps[1].order == ix({1, 3}));
  CHECK(comps[2].order == ix({2}));
  CHECK(p.max_level() == 6);
  int total = 0;
  for (int l = 0; l <= 6; ++l) {
    total += int(p.level_roots(l).size());
    if (l >= 1) CHECK(p.shapes(l).size() == 1);  // one removed node: one shape per level
  }
  CHECK(total == e8.npos());
}

TEST_CASE("degenerate parabolics") {
  RootSystem b3(LieType('B', 3));
  Parabolic full(b3, ix({1, 2, 3}));
  CHECK(full.max_level() == 0);
  CHECK(full.level_roots(0).size() == 9);
  CHECK_THROWS(full.shapes(1));

  Parabolic borel(b3, {});
  CHECK(borel.levi_type().str() == "1");
  CHECK(borel.max_level() == 5);  // height of the highest root
  for (int l = 1; l <= 5; ++l)
    for (auto& s : borel.shapes(l)) {
      CHECK(s.members.size() == 1);
      CHECK(borel.label_string(s) == "1");
    }
}

TEST_CASE("levels partition the positive roots") {
  RootSystem e7(LieType('E', 7));
  for (auto rm : {ix({1}), ix({2}), ix({7}), ix({1, 7}), ix({2, 5})}) {
    Parabolic p = Parabolic::from_removed(e7, rm);
    std::set<int> seen;
    int count = 0;
    for (int l = 1; l <= p.max_level(); ++l)
      for (auto& s : p.shapes(l)) {
        CHECK(s.level == l);
        for (int m : s.members) {
          CHECK(seen.insert(m).second);
          CHECK(p.level(m) == l);
          ++count;
        }
        CHECK(std::find(s.members.begin(), s.members.end(), s.generator) != s.members.end());
        CHECK(std::find(s.members.begin(), s.members.end(), s.maximal) != s.members.end());
      }
    CHECK(count + int(p.level_roots(0).size()) == e7.npos());
  }
}

}  // TEST_SUITE

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "chevalab/root_system.hpp"

using namespace chevalab;
using VV = std::vector<std::vector<int>>;

namespace {

// Oracle: generate the full root set by closing the simples under all simple
// reflections.  Works straight off a Cartan matrix, no string arithmetic.
std::set<std::vector<int>> reflection_closure(const VV& A) {
  int n = int(A.size());
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> work;
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    work.push_back(c);
    all.insert(c);
  }
  while (!work.empty()) {
    auto b = work.back();
    work.pop_back();
    for (int i = 0; i < n; ++i) {
      int k = 0;
      for (int j = 0; j < n; ++j) k += b[j] * A[j][i];
      auto c = b;
      c[i] -= k;
      if (!all.count(c)) {
        all.insert(c);
        work.push_back(c);
      }
    }
  }
  return all;
}

void check_against_oracle(const RootSystem& rs, const VV& A) {
  auto oracle = reflection_closure(A);
  REQUIRE(int(oracle.size()) == rs.size());
  std::set<std::vector<int>> lib;
  for (int i = 0; i < rs.size(); ++i) lib.insert(rs.root(i));
  CHECK(lib == oracle);
  // canonical order: positives by height, then lexicographically
  for (int i = 0; i + 1 < rs.npos(); ++i) {
    int hi = rs.height(i), hj = rs.height(i + 1);
    CHECK(hi <= hj);
    if (hi == hj) CHECK(rs.root(i) < rs.root(i + 1));
  }
}

VV chain(int n) {  // simply laced path, the A_n matrix
  VV A(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) A[i][i + 1] = A[i + 1][i] = -1;
  return A;
}

}  // namespace

TEST_SUITE("rootdata") {

TEST_CASE("type parsing accepts the classification and nothing else") {
  CHECK(LieType::parse("E8").str() == "E8");
  CHECK(LieType::parse("b3").str() == "B3");
  CHECK(LieType::parse("A1").rank == 1);
  CHECK_THROWS(LieType::parse("E9"));
  CHECK_THROWS(LieType::parse("E5"));
  CHECK_THROWS(LieType::parse("D2"));
  CHECK_THROWS(LieType::parse("F3"));
  CHECK_THROWS(LieType::parse("G3"));
  CHECK_THROWS(LieType::parse("H4"));
  CHECK_THROWS(LieType::parse("A0"));
  CHECK_THROWS(LieType::parse("A"));
  CHECK(TypeVec::parse("A2+A2+A2").rank() == 6);
  CHECK(TypeVec::parse("B3").parts.size() == 1);
  CHECK(TypeVec::parse("1").parts.empty());
}

TEST_CASE("positive root counts") {
  auto np = [](const char* t) { return RootSystem(LieType::parse(t)).npos(); };
  CHECK(np("A1") == 1);
  CHECK(np("A2") == 3);
  CHECK(np("A3") == 6);
  CHECK(np("A4") == 10);
  CHECK(np("A5") == 15);
  CHECK(np("A7") == 28);
  CHECK(np("B2") == 4);
  CHECK(np("B3") == 9);
  CHECK(np("B4") == 16);
  CHECK(np("C3") == 9);
  CHECK(np("C4") == 16);
  CHECK(np("D4") == 12);
  CHECK(np("D5") == 20);
  CHECK(np("D8") == 56);
  CHECK(np("E6") == 36);
  CHECK(np("E7") == 63);
  CHECK(np("E8") == 120);
  CHECK(np("F4") == 24);
  CHECK(np("G2") == 6);
}

TEST_CASE("enumeration agrees with the reflection-closure oracle") {
  check_against_oracle(RootSystem(LieType('A', 4)), chain(4));
  check_against_oracle(RootSystem(LieType('B', 3)),
                       VV{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  check_against_oracle(RootSystem(LieType('C', 4)),
                       VV{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -2, 2}});
  check_against_oracle(RootSystem(LieType('D', 5)),
                       VV{{2, -1, 0, 0, 0},
                          {-1, 2, -1, 0, 0},
                          {0, -1, 2, -1, -1},
                          {0, 0, -1, 2, 0},
                          {0, 0, -1, 0, 2}});
  check_against_oracle(RootSystem(LieType('F', 4)),
                       VV{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  check_against_oracle(RootSystem(LieType('G', 2)), VV{{2, -1}, {-3, 2}});
  check_against_oracle(RootSystem(LieType('E', 8)),
                       VV{{2, 0, -1, 0, 0, 0, 0, 0},
                          {0, 2, 0, -1, 0, 0, 0, 0},
                          {-1, 0, 2, -1, 0, 0, 0, 0},
                          {0, -1, -1, 2, -1, 0, 0, 0},
                          {0, 0, 0, -1, 2, -1, 0, 0},
                          {0, 0, 0, 0, -1, 2, -1, 0},
                          {0, 0, 0, 0, 0, -1, 2, -1},
                          {0, 0, 0, 0, 0, 0, -1, 2}});
  // E6/E7: same algorithm check against the library's own Cartan data
  for (int n : {6, 7}) {
    RootSystem rs(LieType('E', n));
    VV A(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A[i][j] = rs.cartan(i, j);
    check_against_oracle(rs, A);
  }
}

TEST_CASE("highest roots") {
  auto hi = [](const char* t) {
    RootSystem rs(LieType::parse(t));
    return rs.label(rs.highest_root());
  };
  CHECK(hi("E8") == "23465432");
  CHECK(hi("E7") == "2234321");
  CHECK(hi("E6") == "122321");
  CHECK(hi("F4") == "2342");
  CHECK(hi("G2") == "32");
  CHECK(hi("B3") == "122");
  CHECK(hi("C3") == "221");
  CHECK(hi("D5") == "12211");
  CHECK(hi("A5") == "11111");
  RootSystem e8(LieType('E', 8));
  CHECK(e8.height(e8.highest_root()) == 29);
  CHECK(e8.label(0) == "00000001");  // least simple root in lex order
  CHECK(e8.label(e8.size() - 1) == "-23465432");
}

TEST_CASE("root lengths") {
  auto lengths = [](const char* t) {
    RootSystem rs(LieType::parse(t));
    int lo = 0, hi = 0;
    int m = rs.halfnorm(rs.simple(0));
    for (int i = 0; i < rs.size(); ++i) m = std::min(m, rs.halfnorm(i));
    for (int i = 0; i < rs.size(); ++i) (rs.halfnorm(i) == m ? lo : hi)++;
    return std::pair{lo, hi};
  };
  CHECK(lengths("F4") == std::pair{24, 24});
  CHECK(lengths("G2") == std::pair{6, 6});
  CHECK(lengths("B3") == std::pair{6, 12});   // 6 short, 12 long
  CHECK(lengths("C3") == std::pair{12, 6});   // 12 short, 6 long
  CHECK(lengths("E6") == std::pair{72, 0});   // all one length
}

TEST_CASE("pairings, coroots, weight coordinates") {
  RootSystem f4(LieType('F', 4));
  CHECK(f4.coroot(f4.highest_root()) == Coeffs{2, 3, 2, 1});
  CHECK(f4.halfnorm(f4.from_label("0001")) == 1);
  CHECK(f4.coroot(f4.from_label("0001")) == Coeffs{0, 0, 0, 1});

  RootSystem e8(LieType('E', 8));
  Weight l8(8, 0);
  l8[7] = 1;
  CHECK(e8.pair_weight(l8, e8.highest_root()) == 2);
  CHECK(e8.pair_weight(e8.rho(), e8.highest_root()) == 29);

  RootSystem b3(LieType('B', 3));
  Coeffs a2{0, 1, 0}, a3{0, 0, 1};
  CHECK(b3.pair_root(a2, b3.simple(2)) == -2);
  CHECK(b3.pair_root(a3, b3.simple(1)) == -1);
  CHECK(b3.to_weight(a2) == Weight{-1, 2, -2});
  CHECK(b3.to_weight(a3) == Weight{0, -1, 2});

  // <beta,gamma^vee> computed two ways: via the form and via coroot coords
  RootSystem g2(LieType('G', 2));
  for (int g = 0; g < g2.size(); ++g)
    for (int b = 0; b < g2.size(); ++b) {
      auto cv = g2.coroot(g);
      const auto& bc = g2.root(b);
      int direct = 0;  // <beta, sum c_i a_i^vee> = sum c_i <beta, a_i^vee>
      for (int i = 0; i < 2; ++i) {
        int bi = 0;
        for (int j = 0; j < 2; ++j) bi += bc[j] * g2.cartan(j, i);
        direct += cv[i] * bi;
      }
      CHECK(direct == g2.pair_root(bc, g));
    }
}

TEST_CASE("simple reflections permute the other positive roots") {
  for (const char* t : {"A3", "B3", "C4", "D4", "F4", "G2", "E6"}) {
    RootSystem rs(LieType::parse(t));
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK(rs.reflect_simple(i, rs.simple(i)) == rs.neg(rs.simple(i)));
      std::set<int> img;
      for (int r = 0; r < rs.npos(); ++r) {
        if (r == rs.simple(i)) continue;
        int s = rs.reflect_simple(i, r);
        CHECK(rs.is_positive(s));
        img.insert(s);
      }
      CHECK(int(img.size()) == rs.npos() - 1);
    }
    for (int g = 0; g < rs.size(); ++g)
      for (int r = 0; r < rs.size(); r += 7) CHECK(rs.reflect(g, rs.reflect(g, r)) == r);
  }
}

TEST_CASE("labels round trip") {
  for (const char* t : {"E8", "F4", "B3"}) {
    RootSystem rs(LieType::parse(t));
    for (int i = 0; i < rs.size(); ++i) CHECK(rs.from_label(rs.label(i)) == i);
  }
  RootSystem e8(LieType('E', 8));
  CHECK_THROWS(e8.from_label("11200000"));  // not a root: disconnected support
  CHECK_THROWS(e8.from_label("2346543"));   // wrong rank
}

}  // TEST_SUITE

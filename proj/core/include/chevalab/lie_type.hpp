#pragma once
#include <stdexcept>
#include <string>
#include <vector>

namespace chevalab {

// A simple Lie type: family letter A..G plus rank, Bourbaki numbering throughout.
struct LieType {
  char family = 'A';
  int rank = 1;

  LieType() = default;
  LieType(char f, int n) : family(f), rank(n) { validate(); }

  void validate() const {
    bool ok = false;
    switch (family) {
      case 'A': ok = rank >= 1; break;
      case 'B': ok = rank >= 2; break;
      case 'C': ok = rank >= 2; break;
      case 'D': ok = rank >= 3; break;
      case 'E': ok = rank >= 6 && rank <= 8; break;
      case 'F': ok = rank == 4; break;
      case 'G': ok = rank == 2; break;
      default: ok = false;
    }
    if (!ok) throw std::invalid_argument("bad Lie type " + std::string(1, family) + std::to_string(rank));
  }

  bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }

  std::string str() const { return std::string(1, family) + std::to_string(rank); }

  static LieType parse(const std::string& s);

  bool operator==(const LieType& o) const { return family == o.family && rank == o.rank; }
  bool operator!=(const LieType& o) const { return !(*this == o); }
  bool operator<(const LieType& o) const {
    return family != o.family ? family < o.family : rank < o.rank;
  }
};

// A product of simple types, e.g. the type of a Levi subgroup's derived group.
struct TypeVec {
  std::vector<LieType> parts;

  TypeVec() = default;
  TypeVec(std::initializer_list<LieType> p) : parts(p) {}
  explicit TypeVec(LieType t) : parts{t} {}

  int rank() const {
    int r = 0;
    for (auto& p : parts) r += p.rank;
    return r;
  }
  std::string str() const {
    if (parts.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += "+";
      s += parts[i].str();
    }
    return s;
  }
  static TypeVec parse(const std::string& s);
  bool operator==(const TypeVec& o) const { return parts == o.parts; }
  bool operator<(const TypeVec& o) const { return parts < o.parts; }
};

}  // namespace chevalab

#pragma once
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "chevalab/character.hpp"

namespace chevalab {

// A subgroup recorded through its weight lattices: one row per fundamental
// weight of the target, giving that weight's restriction in source
// fundamental coordinates. Rows are frozen in data once derived from the
// defining-module description.
struct Embedding {
  std::string name;
  TypeVec source, target;
  std::vector<Weight> rows;  // target-rank rows of source-rank integers
  std::string provenance;
};

// Pushforward of a character of the target along the lattice map.
// Dimension is preserved by construction.
Character restrict_char(const Embedding& e, const Character& c);

// mult copies of the irreducible L(lam), twisted r times.
struct Factor {
  Weight lam;
  int mult = 1;
  int twist = 0;
};

// Curated irreducible characters in small characteristic, together with the
// socle-layer tables for the Weyl and tilting modules the expressions use.
class IrrDb {
 public:
  struct IrrEntry {
    LieType type{'A', 1};
    int p = 2;
    Weight lam;
    Int dim_stated = 0;
    Character ch;
  };
  struct LayerEntry {
    char kind = 'W';  // 'W' = Weyl module, 'T' = indecomposable tilting
    LieType type{'A', 1};
    int p = 2;
    Weight lam;
    std::string layers;  // module expression; '|' separates socle layers
    std::string note;
  };

  // grammar: TYPE p WEIGHT : dim ; w1 .. wk:mult , ...   ('#' comments)
  void load_irr(std::istream& in);
  // grammar: W|T TYPE p WEIGHT : layers ; note
  void load_layers(std::istream& in);
  // reads irr.dat and appendix.dat from a data directory
  static IrrDb from_dir(const std::string& dir);

  bool has_irr(LieType t, int p, const Weight& lam) const;
  const Character& irr(LieType t, int p, const Weight& lam) const;  // throws if absent
  const LayerEntry* find_layers(char kind, LieType t, int p, const Weight& lam) const;

  const std::vector<IrrEntry>& irr_entries() const { return irrs_; }
  const std::vector<LayerEntry>& layer_entries() const { return layers_; }

 private:
  std::vector<IrrEntry> irrs_;
  std::vector<LayerEntry> layers_;
};

// Evaluate a module expression to its character over ctx at characteristic p.
// Grammar: '+', '|' and '/' all join summands; '.' is a tensor product;
// atoms are bare dominant weights (irreducible characters from the database;
// "0" is the trivial module), W(w), T(w), or parenthesized expressions;
// a parenthesized comma list pairs one expression per product factor;
// postfixes: ^n multiplicity, [r] or ^[r] Frobenius twist, * dual.
Character eval_modexpr(const Context& ctx, int p, const IrrDb& db, const std::string& expr);

// True iff c is exactly the sum of the claimed irreducible characters.
bool verify_factors(const Context& ctx, int p, const IrrDb& db, const Character& c,
                    const std::vector<Factor>& claimed);

// dim H^1 of a tensor product from per-factor (dim H^0, dim H^1).
long long kunneth_h1(const std::vector<std::pair<long long, long long>>& factors);

// grammar: NAME : SRC -> TGT ; row , row , ... ; provenance
std::vector<Embedding> load_embeddings(std::istream& in);
const Embedding* find_embedding(const std::vector<Embedding>& v, const std::string& name);

// $CHEVALAB_DATA if set, else "data"
std::string data_dir();
std::vector<Embedding> load_embeddings_file();

}  // namespace chevalab

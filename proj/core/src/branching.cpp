#include "chevalab/branching.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace chevalab {

namespace {

// strip '#' comments and surrounding blanks; empty result means "skip line"
std::string clean(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(clean(part));
  return out;
}

Weight parse_ints(const std::string& s) {
  Weight w;
  std::stringstream ss(s);
  long long x;
  while (ss >> x) w.push_back(int(x));
  if (!ss.eof()) throw std::invalid_argument("bad integer list: " + s);
  return w;
}

// dominant weights in data files are digit strings ("0100"), one digit per node
Weight parse_digits(const std::string& s, int rank) {
  if (s == "0") return Weight(rank, 0);
  if (int(s.size()) != rank) throw std::invalid_argument("weight '" + s + "' needs " +
                                                         std::to_string(rank) + " digits");
  Weight w(rank);
  for (int i = 0; i < rank; ++i) {
    if (!std::isdigit((unsigned char)s[i])) throw std::invalid_argument("bad weight: " + s);
    w[i] = s[i] - '0';
  }
  return w;
}

}  // namespace

Character restrict_char(const Embedding& e, const Character& c) {
  int tr = e.target.rank(), sr = e.source.rank();
  if (c.rank != tr) throw std::invalid_argument("character does not live on the target group");
  Character r;
  r.rank = sr;
  for (auto& [w, m] : c.m) {
    Weight u(sr, 0);
    for (int j = 0; j < tr; ++j) {
      if (!w[j]) continue;
      for (int i = 0; i < sr; ++i) u[i] += w[j] * e.rows[j][i];
    }
    r.m[u] += m;
  }
  r.trim();
  return r;
}

void IrrDb::load_irr(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    std::string s = clean(line);
    if (s.empty()) continue;
    auto fields = split(s, ';');
    if (fields.size() != 2) throw std::invalid_argument("bad entry: " + s);
    auto head = split(fields[0], ':');
    if (head.size() != 2) throw std::invalid_argument("bad entry head: " + s);
    std::stringstream hs(head[0]);
    std::string type_s, lam_s;
    int p;
    if (!(hs >> type_s >> p >> lam_s)) throw std::invalid_argument("bad entry head: " + s);
    IrrEntry e;
    e.type = LieType{type_s[0], std::stoi(type_s.substr(1))};
    e.p = p;
    e.lam = parse_digits(lam_s, e.type.rank);
    e.dim_stated = Int(head[1]);
    e.ch.rank = e.type.rank;
    for (auto& pair : split(fields[1], ',')) {
      size_t colon = pair.rfind(':');
      if (colon == std::string::npos) throw std::invalid_argument("bad weight:mult in: " + s);
      Weight w = parse_ints(pair.substr(0, colon));
      if (int(w.size()) != e.type.rank) throw std::invalid_argument("bad weight rank in: " + s);
      e.ch.m[w] += Int(clean(pair.substr(colon + 1)));
    }
    e.ch.trim();
    if (e.ch.dim() != e.dim_stated)
      throw std::invalid_argument("stated dimension mismatch in: " + s);
    irrs_.push_back(std::move(e));
  }
}

void IrrDb::load_layers(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    std::string s = clean(line);
    if (s.empty()) continue;
    auto fields = split(s, ';');
    if (fields.empty() || fields.size() > 2) throw std::invalid_argument("bad entry: " + s);
    auto head = split(fields[0], ':');
    if (head.size() != 2) throw std::invalid_argument("bad entry head: " + s);
    std::stringstream hs(head[0]);
    std::string kind_s, type_s, lam_s;
    int p;
    if (!(hs >> kind_s >> type_s >> p >> lam_s) || (kind_s != "W" && kind_s != "T"))
      throw std::invalid_argument("bad entry head: " + s);
    LayerEntry e;
    e.kind = kind_s[0];
    e.type = LieType{type_s[0], std::stoi(type_s.substr(1))};
    e.p = p;
    e.lam = parse_digits(lam_s, e.type.rank);
    e.layers = head[1];
    if (fields.size() == 2) e.note = fields[1];
    layers_.push_back(std::move(e));
  }
}

IrrDb IrrDb::from_dir(const std::string& dir) {
  IrrDb db;
  std::ifstream irr(dir + "/irr.dat");
  if (!irr) throw std::runtime_error("cannot open " + dir + "/irr.dat");
  db.load_irr(irr);
  std::ifstream lay(dir + "/appendix.dat");
  if (!lay) throw std::runtime_error("cannot open " + dir + "/appendix.dat");
  db.load_layers(lay);
  return db;
}

bool IrrDb::has_irr(LieType t, int p, const Weight& lam) const {
  for (auto& e : irrs_)
    if (e.type == t && e.p == p && e.lam == lam) return true;
  return false;
}

const Character& IrrDb::irr(LieType t, int p, const Weight& lam) const {
  for (auto& e : irrs_)
    if (e.type == t && e.p == p && e.lam == lam) return e.ch;
  std::string ws;
  for (int x : lam) ws += std::to_string(x);
  throw std::out_of_range("no irreducible character on file for " + t.str() + " p=" +
                          std::to_string(p) + " weight " + ws);
}

const IrrDb::LayerEntry* IrrDb::find_layers(char kind, LieType t, int p,
                                            const Weight& lam) const {
  for (auto& e : layers_)
    if (e.kind == kind && e.type == t && e.p == p && e.lam == lam) return &e;
  return nullptr;
}

namespace {

// external product: concatenate weight coordinates, multiply multiplicities
Character ext_product(const Character& a, const Character& b) {
  Character r;
  r.rank = a.rank + b.rank;
  for (auto& [w1, c1] : a.m)
    for (auto& [w2, c2] : b.m) {
      Weight w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.m[w] = c1 * c2;
    }
  return r;
}

// the irreducible with the given (dominant) high weight, factor by factor
Character irr_char(const Context& ctx, int p, const IrrDb& db, const Weight& lam) {
  Character r = Character::trivial(0);
  for (size_t f = 0; f < ctx.nfactors(); ++f)
    r = ext_product(r, db.irr(ctx.type().parts[f], p, ctx.slice(lam, f)));
  return r;
}

struct ExprParser {
  const Context& ctx;
  int p;
  const IrrDb& db;
  const std::string& s;
  size_t i = 0;
  int depth = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("module expression '" + s + "', position " +
                                std::to_string(i) + ": " + msg);
  }

  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }

  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  int integer() {
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
    if (j == i) fail("expected a number");
    int v = std::stoi(s.substr(i, j - i));
    i = j;
    return v;
  }

  int twist_scale(int r) const {
    int t = 1;
    for (int k = 0; k < r; ++k) t *= p;
    return t;
  }

  Character expr(const Context& c) {
    Character acc = item(c);
    for (;;) {
      skip();
      if (i < s.size() && (s[i] == '+' || s[i] == '|' || s[i] == '/')) {
        ++i;
        acc += item(c);
      } else
        return acc;
    }
  }

  Character item(const Context& c) {
    Character acc = factor(c);
    while (eat('.')) acc = acc * factor(c);
    return acc;
  }

  Character factor(const Context& c) {
    Character v = atom(c);
    for (;;) {
      skip();
      if (i >= s.size()) return v;
      if (s[i] == '*') {
        ++i;
        v = v.dual();
      } else if (s[i] == '[') {
        ++i;
        int r = integer();
        if (!eat(']')) fail("expected ']'");
        v = v.twist(twist_scale(r));
      } else if (s[i] == '^') {
        ++i;
        if (eat('[')) {
          int r = integer();
          if (!eat(']')) fail("expected ']'");
          v = v.twist(twist_scale(r));
        } else {
          int n = integer();
          for (auto& [w, m] : v.m) m *= n;
        }
      } else
        return v;
    }
  }

  Weight weight_token(const Context& c) {
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
    if (j == i) fail("expected a weight");
    Weight w = parse_digits(s.substr(i, j - i), c.rank());
    i = j;
    return w;
  }

  // does the group starting at s[i]=='(' contain a top-level comma?
  bool tuple_ahead() const {
    int d = 0;
    for (size_t j = i; j < s.size(); ++j) {
      if (s[j] == '(') ++d;
      if (s[j] == ')' && --d == 0) return false;
      if (s[j] == ',' && d == 1) return true;
    }
    fail("unbalanced parentheses");
  }

  Character atom(const Context& c) {
    skip();
    if (i >= s.size()) fail("unexpected end");
    if (++depth > 64) fail("expression nests too deeply");
    Character v;
    if (s[i] == '(' && tuple_ahead()) {
      // one sub-expression per product factor
      if (c.nfactors() < 2) fail("component tuple over a simple group");
      ++i;
      v = Character::trivial(0);
      for (size_t f = 0; f < c.nfactors(); ++f) {
        if (f && !eat(',')) fail("tuple does not cover every factor");
        Context sub(c.type().parts[f]);
        v = ext_product(v, expr(sub));
      }
      if (!eat(')')) fail("expected ')'");
    } else if (s[i] == '(') {
      ++i;
      v = expr(c);
      if (!eat(')')) fail("expected ')'");
    } else if ((s[i] == 'W' || s[i] == 'T') && i + 1 < s.size() && s[i + 1] == '(') {
      char kind = s[i];
      i += 2;
      Weight lam = weight_token(c);
      if (!eat(')')) fail("expected ')'");
      if (kind == 'W') {
        v = c.weyl_char(lam);
      } else {
        if (c.nfactors() != 1) fail("T() needs a simple group");
        auto* e = db.find_layers('T', c.type().parts[0], p, lam);
        if (!e) {
          std::string ws;
          for (int x : lam) ws += std::to_string(x);
          fail("no tilting layers on file for weight " + ws);
        }
        ExprParser inner{c, p, db, e->layers};
        inner.depth = depth;
        v = inner.parse(c);
      }
    } else {
      v = irr_char(c, p, db, weight_token(c));
    }
    --depth;
    return v;
  }

  Character parse(const Context& c) {
    Character v = expr(c);
    skip();
    if (i != s.size()) fail("unexpected trailing input");
    v.trim();
    return v;
  }
};

}  // namespace

Character eval_modexpr(const Context& ctx, int p, const IrrDb& db, const std::string& expr) {
  // tuples may appear at top level without parentheses in per-factor columns,
  // but the stored grammar always parenthesizes them, so parse as-is
  ExprParser ep{ctx, p, db, expr};
  return ep.parse(ctx);
}

bool verify_factors(const Context& ctx, int p, const IrrDb& db, const Character& c,
                    const std::vector<Factor>& claimed) {
  Character sum;
  sum.rank = ctx.rank();
  for (auto& f : claimed) {
    Character one = irr_char(ctx, p, db, f.lam);
    if (f.twist) {
      int t = 1;
      for (int k = 0; k < f.twist; ++k) t *= p;
      one = one.twist(t);
    }
    for (auto& [w, m] : one.m) sum.m[w] += m * f.mult;
  }
  sum.trim();
  Character lhs = c;
  lhs.trim();
  return lhs == sum;
}

long long kunneth_h1(const std::vector<std::pair<long long, long long>>& factors) {
  long long total = 0;
  for (size_t j = 0; j < factors.size(); ++j) {
    long long term = factors[j].second;
    for (size_t k = 0; k < factors.size(); ++k)
      if (k != j) term *= factors[k].first;
    total += term;
  }
  return total;
}

std::vector<Embedding> load_embeddings(std::istream& in) {
  std::vector<Embedding> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = clean(line);
    if (s.empty()) continue;
    auto fields = split(s, ';');
    if (fields.size() != 3) throw std::invalid_argument("bad embedding line: " + s);
    Embedding e;
    size_t colon = fields[0].find(':');
    size_t arrow = fields[0].find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      throw std::invalid_argument("bad embedding head: " + s);
    e.name = clean(fields[0].substr(0, colon));
    e.source = TypeVec::parse(clean(fields[0].substr(colon + 1, arrow - colon - 1)));
    e.target = TypeVec::parse(clean(fields[0].substr(arrow + 2)));
    for (auto& row : split(fields[1], ',')) {
      Weight r = parse_ints(row);
      if (int(r.size()) != e.source.rank())
        throw std::invalid_argument("embedding row of wrong rank: " + s);
      e.rows.push_back(std::move(r));
    }
    if (int(e.rows.size()) != e.target.rank())
      throw std::invalid_argument("embedding needs one row per target node: " + s);
    e.provenance = fields[2];
    out.push_back(std::move(e));
  }
  return out;
}

const Embedding* find_embedding(const std::vector<Embedding>& v, const std::string& name) {
  for (auto& e : v)
    if (e.name == name) return &e;
  return nullptr;
}

std::string data_dir() {
  const char* env = std::getenv("CHEVALAB_DATA");
  return env && *env ? env : "data";
}

std::vector<Embedding> load_embeddings_file() {
  std::string path = data_dir() + "/embeddings.dat";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_embeddings(in);
}

}  // namespace chevalab

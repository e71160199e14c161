#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "chevalab/character.hpp"
#include "chevalab/collector.hpp"
#include "chevalab/genverify.hpp"
#include "chevalab/parabolic.hpp"
#include "chevalab/root_system.hpp"
#include "chevalab/subsystems.hpp"
#include "chevalab/weyl.hpp"

using namespace chevalab;

namespace {

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) return;
    out.push_back(std::stoi(tok));
    tok.clear();
  };
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t')
      flush();
    else if ((ch >= '0' && ch <= '9') || ch == '-')
      tok += ch;
    else
      throw std::invalid_argument("bad integer list '" + s + "'");
  }
  flush();
  return out;
}

// "13456" or "1,3,4,5,6" (1-based nodes) -> 0-based simple indices
std::vector<int> parse_nodes(const std::string& s, int rank) {
  std::vector<int> nodes;
  if (s.find(',') == std::string::npos && s.find(' ') == std::string::npos) {
    for (char ch : s) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("bad node list '" + s + "'");
      nodes.push_back(ch - '1');
    }
  } else {
    for (int v : parse_ints(s)) nodes.push_back(v - 1);
  }
  for (int n : nodes)
    if (n < 0 || n >= rank) throw std::invalid_argument("node out of range in '" + s + "'");
  return nodes;
}

GF field_from_q(long long q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power");
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    int k = 0;
    long long m = q;
    while (m % p == 0) m /= p, ++k;
    if (m != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return GF(int(p), k);
  }
  return GF(int(q), 1);
}

// terms separated by +/-; a term is '*'-separated integers and var^k factors
Poly parse_poly(const std::string& s, const std::map<char, int>& vidx, int nvars, long long mod) {
  Poly out(nvars, mod);
  size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  if (i == s.size()) throw std::invalid_argument("empty polynomial");
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
    long long coef = 1;
    Poly::Exp e(nvars, 0);
    bool any = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      char ch = s[i];
      if (ch == ' ' || ch == '*') {
        ++i;
      } else if (ch >= '0' && ch <= '9') {
        long long v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') v = v * 10 + (s[i++] - '0');
        coef *= v;
        any = true;
      } else if (ch >= 'a' && ch <= 'z') {
        ++i;
        int k = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          k = 0;
          if (i >= s.size() || s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad exponent in '" + s + "'");
          while (i < s.size() && s[i] >= '0' && s[i] <= '9') k = k * 10 + (s[i++] - '0');
        }
        e[vidx.at(ch)] = uint8_t(e[vidx.at(ch)] + k);
        any = true;
      } else {
        throw std::invalid_argument("bad polynomial '" + s + "'");
      }
    }
    if (!any) throw std::invalid_argument("bad polynomial '" + s + "'");
    out.add_term(e, neg ? -coef : coef);
  }
  return out;
}

GenFamily make_family(const RootSystem& rs, const GF& f, const std::string& name,
                      const std::string& csv) {
  std::vector<int> ps = parse_ints(csv);
  for (int v : ps)
    if (v < 0 || v >= f.q())
      throw std::invalid_argument("parameters are field elements in 0.." + std::to_string(f.q() - 1));
  if (name == "b3e8") {
    if (ps.size() != 7) throw std::invalid_argument("b3e8 takes 7 parameters");
    std::array<int, 7> a;
    std::copy(ps.begin(), ps.end(), a.begin());
    return b3_e8_generators(rs, f, a);
  }
  if (name == "d4e8") {
    if (ps.size() != 6) throw std::invalid_argument("d4e8 takes 6 parameters");
    std::array<int, 6> a;
    std::copy(ps.begin(), ps.end(), a.begin());
    return d4_e8_generators(rs, f, a);
  }
  throw std::invalid_argument("unknown family '" + name + "' (b3e8|d4e8)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in exceptional groups and their subgroups"};
  app.require_subcommand(1);
  int rc = 0;

  std::string type_arg;
  auto* roots = app.add_subcommand("roots", "list the roots of a simple type in canonical order");
  roots->add_option("type", type_arg, "simple type, e.g. E8 or B3")->required();
  roots->callback([&]() {
    RootSystem rs(LieType::parse(type_arg));
    for (int i = 0; i < rs.size(); ++i) {
      std::cout << i << " " << rs.label(i) << " ht=" << rs.height(i)
                << " hn=" << rs.halfnorm(i) << "\n";
    }
  });

  std::string w_type, w_word, w_root, w_levi, w_target;
  auto* weyl = app.add_subcommand("weyl", "apply a word in root reflections");
  weyl->add_option("type", w_type, "ambient simple type")->required();
  weyl->add_option("--word", w_word,
                   "comma-separated letters: root labels or 1-based simple indices")
      ->required();
  weyl->add_option("--root", w_root, "root label to act on; prints the image label");
  auto* wl = weyl->add_option("--levi", w_levi, "source Levi nodes, e.g. 13456");
  auto* wt = weyl->add_option("--target", w_target, "target Levi nodes; prints yes/no");
  wl->needs(wt);
  wt->needs(wl);
  weyl->callback([&]() {
    RootSystem rs(LieType::parse(w_type));
    Weyl W(rs);
    RefWord word = RefWord::parse(rs, w_word);
    if (w_root.empty() && w_levi.empty())
      throw CLI::RequiredError("weyl needs --root or --levi/--target");
    if (!w_root.empty()) std::cout << rs.label(W.act(word, rs.from_label(w_root))) << "\n";
    if (!w_levi.empty()) {
      bool ok = W.maps_levi(word, parse_nodes(w_levi, rs.rank()), parse_nodes(w_target, rs.rank()));
      std::cout << (ok ? "yes" : "no") << "\n";
      if (!ok) rc = 1;
    }
  });

  std::string l_type, l_levi;
  auto* levels = app.add_subcommand("levels",
                                    "graded pieces of the unipotent radical of a parabolic");
  levels->add_option("type", l_type, "ambient simple type")->required();
  levels->add_option("--levi", l_levi, "Levi simple nodes (1-based), e.g. 13456")->required();
  levels->callback([&]() {
    RootSystem rs(LieType::parse(l_type));
    Parabolic par(rs, parse_nodes(l_levi, rs.rank()));
    std::string lt = par.levi_type().str();
    std::cout << "levi " << lt << "\n";
    for (int lvl = 1; lvl <= par.max_level(); ++lvl) {
      std::cout << "level " << lvl << ":";
      for (const Shape& s : par.shapes(lvl)) {
        std::cout << " " << par.label_string(s) << "@" << lt << " x" << s.members.size()
                  << " [" << rs.label(s.generator) << "]";
        if (s.mixed_length_flag) std::cout << " (mixed)";
      }
      std::cout << "\n";
    }
  });

  std::string c_type, c_weight;
  std::vector<std::string> c_ops;
  auto* chr = app.add_subcommand("char", "weight multiplicities of Weyl characters");
  chr->add_option("type", c_type, "simple or product type, e.g. E8 or A3+A2")->required();
  chr->add_option("--weight", c_weight, "dominant highest weight, comma-separated")->required();
  chr->add_option("--op", c_ops, "tensor[:w2] | ext2 | ext3 | dual | twist:s, applied in order");
  chr->callback([&]() {
    Context ctx(TypeVec::parse(c_type));
    auto load = [&](const std::string& txt) {
      Weight lam = parse_ints(txt);
      if (int(lam.size()) != ctx.rank()) throw std::invalid_argument("weight rank mismatch");
      if (!ctx.is_dominant(lam)) throw std::invalid_argument("weight must be dominant");
      return ctx.weyl_char(lam);
    };
    Character c = load(c_weight);
    for (const std::string& op : c_ops) {
      std::string name = op, arg;
      if (auto pos = op.find(':'); pos != std::string::npos) {
        name = op.substr(0, pos);
        arg = op.substr(pos + 1);
      }
      if (name == "tensor")
        c = c * (arg.empty() ? c : load(arg));
      else if (name == "ext2")
        c = exterior_power(c, 2);
      else if (name == "ext3")
        c = exterior_power(c, 3);
      else if (name == "dual")
        c = c.dual();
      else if (name == "twist")
        c = c.twist(arg.empty() ? throw std::invalid_argument("twist needs a scale, e.g. twist:2")
                                : std::stoi(arg));
      else
        throw std::invalid_argument("unknown op '" + op + "'");
    }
    for (auto& [w, m] : c.m) {
      for (size_t i = 0; i < w.size(); ++i) std::cout << (i ? " " : "") << w[i];
      std::cout << " " << m << "\n";
    }
    std::cout << "dim = " << c.dim() << "\n";
  });

  std::string k_type;
  std::vector<std::string> k_word;
  long long k_p = 0;
  auto* col = app.add_subcommand("collect",
                                 "normal-order a word of positive root elements x_gamma(f)");
  col->add_option("type", k_type, "ambient simple type")->required();
  col->add_option("--word", k_word, "letters x:LABEL:poly, comma- or space-separated")
      ->required()
      ->expected(-1);
  col->add_option("--p", k_p, "reduce coefficients modulo this prime (0 = integers)");
  col->callback([&]() {
    if (k_p < 0 || k_p == 1) throw std::invalid_argument("--p takes 0 or a prime");
    for (long long d = 2; d * d <= k_p; ++d)
      if (k_p % d == 0) throw std::invalid_argument("--p takes 0 or a prime");
    RootSystem rs(LieType::parse(k_type));
    std::vector<std::string> toks;
    for (const std::string& blob : k_word) {
      std::string tok;
      for (char ch : blob) {
        if (ch == ',') {
          if (!tok.empty()) toks.push_back(tok);
          tok.clear();
        } else {
          tok += ch;
        }
      }
      if (!tok.empty()) toks.push_back(tok);
    }
    std::vector<std::array<std::string, 2>> fields;  // label, poly text
    std::map<char, int> vidx;
    std::vector<std::string> names;
    for (const std::string& tok : toks) {
      auto p1 = tok.find(':');
      auto p2 = p1 == std::string::npos ? p1 : tok.find(':', p1 + 1);
      if (p2 == std::string::npos || tok.substr(0, p1) != "x")
        throw std::invalid_argument("letters look like x:LABEL:poly, got '" + tok + "'");
      fields.push_back({tok.substr(p1 + 1, p2 - p1 - 1), tok.substr(p2 + 1)});
      for (char ch : fields.back()[1])
        if (ch >= 'a' && ch <= 'z' && !vidx.count(ch)) {
          vidx[ch] = int(names.size());
          names.emplace_back(1, ch);
        }
    }
    std::vector<Collector::Letter> word;
    for (auto& [label, ptxt] : fields) {
      int r = rs.from_label(label);
      if (!rs.is_positive(r))
        throw std::invalid_argument("collect takes positive-root letters only");
      word.push_back({r, parse_poly(ptxt, vidx, int(names.size()), k_p)});
    }
    auto out = Collector(rs, int(k_p)).collect(word);
    if (out.empty()) {
      std::cout << "1\n";
      return;
    }
    for (auto& [r, f] : out) std::cout << "x:" << rs.label(r) << ":" << f.str(names) << "\n";
  });

  std::string vp_name, vp_params;
  long long vp_q = 0;
  auto* vp = app.add_subcommand("verify-prop",
                                "check the defining relations of a deformed generator family");
  vp->add_option("--name", vp_name, "family: b3e8 | d4e8")->required();
  vp->add_option("--params", vp_params, "comma-separated field elements (canonical encoding)")
      ->required();
  vp->add_option("--q", vp_q, "coefficient field size, a prime power")->required();
  vp->callback([&]() {
    GF f = field_from_q(vp_q);
    RootSystem rs(LieType('E', 8));
    GenFamily fam = make_family(rs, f, vp_name, vp_params);
    GenReport rep = verify_generators(rs, f, fam);
    auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
    std::cout << "family " << fam.name << " over GF(" << f.q() << ")\n"
              << "additivity: " << pf(rep.additivity) << "\n"
              << "torus: " << pf(rep.torus) << "\n"
              << "torus action: " << pf(rep.torus_action) << "\n"
              << "commutators: " << pf(rep.commutators) << "\n";
    std::cout << "realized cartan matrix:\n";
    for (auto& row : rep.realized_cartan) {
      for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "  ") << row[j];
      std::cout << "\n";
    }
    std::cout << "target " << fam.target.str() << " cartan: "
              << (rep.cartan_matches ? "match" : "differs") << "\n"
              << "max parameter degree: " << rep.max_degree << "\n";
    for (auto& s : rep.failures) std::cout << "fail: " << s << "\n";
    bool ok = rep.all_relations();
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) rc = 1;
  });

  std::string fx_name, fx_params;
  long long fx_q = 4;
  auto* fx = app.add_subcommand("fixdim",
                                "dimension of the common fixed space of a realized family");
  fx->add_option("--name", fx_name, "family: b3e8 | d4e8")->required();
  fx->add_option("--params", fx_params, "comma-separated field elements (canonical encoding)")
      ->required();
  fx->add_option("--q", fx_q, "coefficient field size, a prime power")->capture_default_str();
  fx->callback([&]() {
    GF f = field_from_q(fx_q);
    RootSystem rs(LieType('E', 8));
    GenFamily fam = make_family(rs, f, fx_name, fx_params);
    std::cout << fixed_space_dim(rs, f, fam) << "\n";
  });

  std::string sub_type;
  auto* sub = app.add_subcommand(
      "subsystems", "maximal-rank subsystems from extended-diagram and Levi node deletion");
  sub->add_option("type", sub_type, "ambient simple type")->required();
  sub->callback([&]() {
    RootSystem rs(LieType::parse(sub_type));
    std::vector<TypeVec> cand = subsystems_maximal(rs);
    std::vector<std::set<TypeVec>> closures;
    for (const TypeVec& t : cand) closures.push_back(subsystem_closure(t));
    for (size_t i = 0; i < cand.size(); ++i) {
      std::cout << cand[i].str();
      bool dominated = false;
      for (size_t j = 0; j < cand.size() && !dominated; ++j)
        if (j != i && closures[j].count(cand[i])) {
          std::cout << "  contained in " << cand[j].str();
          dominated = true;
        }
      if (!dominated) std::cout << "  maximal";
      std::cout << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

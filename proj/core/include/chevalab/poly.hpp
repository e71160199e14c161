#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chevalab/gf.hpp"

namespace chevalab {

// Sparse multivariate polynomial with integer coefficients, optionally
// reduced modulo a prime (mod == 0 means over the integers).
class Poly {
 public:
  using Exp = std::vector<uint8_t>;

  Poly() = default;
  Poly(int nvars, long long mod) : nvars_(nvars), mod_(mod) {}

  static Poly constant(int nvars, long long c, long long mod);
  static Poly var(int nvars, int i, long long mod);

  int nvars() const { return nvars_; }
  long long mod() const { return mod_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp(nvars_, 0)); }
  long long constant_term() const;
  const std::map<Exp, long long>& terms() const { return terms_; }
  int degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(long long c) const;
  Poly pow(unsigned k) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  void add_term(const Exp& e, long long c);

  // evaluate with variables sent to elements of GF(p^k); coefficients reduce
  // through the prime field (requires mod == 0 or mod == field characteristic)
  int eval(const GF& f, const std::vector<int>& point) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  long long mod_ = 0;
  std::map<Exp, long long> terms_;
};

}  // namespace chevalab

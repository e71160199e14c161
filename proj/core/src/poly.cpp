#include "chevalab/poly.hpp"

#include <stdexcept>

namespace chevalab {

namespace {
long long reduce(long long c, long long mod) {
  if (!mod) return c;
  c %= mod;
  return c < 0 ? c + mod : c;
}
}  // namespace

Poly Poly::constant(int nvars, long long c, long long mod) {
  Poly p(nvars, mod);
  p.add_term(Exp(nvars, 0), c);
  return p;
}

Poly Poly::var(int nvars, int i, long long mod) {
  Poly p(nvars, mod);
  Exp e(nvars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

long long Poly::constant_term() const {
  auto it = terms_.find(Exp(nvars_, 0));
  return it == terms_.end() ? 0 : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int t = 0;
    for (auto x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

void Poly::add_term(const Exp& e, long long c) {
  c = reduce(c, mod_);
  if (!c) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
    return;
  }
  it->second = reduce(it->second + c, mod_);
  if (!it->second) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_, mod_);
  for (auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_, mod_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      Exp e = e1;
      for (int i = 0; i < nvars_; ++i) {
        int s = e[i] + e2[i];
        if (s > 255) throw std::overflow_error("exponent overflow");
        e[i] = uint8_t(s);
      }
      r.add_term(e, c1 * c2);
    }
  return r;
}

Poly Poly::operator*(long long c) const {
  Poly r(nvars_, mod_);
  for (auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(nvars_, 1, mod_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

int Poly::eval(const GF& f, const std::vector<int>& point) const {
  if (mod_ && mod_ != f.p()) throw std::invalid_argument("modulus/characteristic mismatch");
  if (int(point.size()) != nvars_) throw std::invalid_argument("wrong point arity");
  int acc = 0;
  for (auto& [e, c] : terms_) {
    int t = f.of_int(c);
    for (int i = 0; i < nvars_ && t; ++i)
      if (e[i]) t = f.mul(t, f.pow(point[i], e[i]));
    acc = f.add(acc, t);
  }
  return acc;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [e, c] : terms_) {
    long long v = c;
    if (!first) {
      s += v < 0 ? " - " : " + ";
      if (v < 0) v = -v;
    } else if (v < 0) {
      s += "-";
      v = -v;
    }
    first = false;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < int(names.size()) ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(int(e[i]));
    }
    if (mono.empty())
      s += std::to_string(v);
    else
      s += (v == 1 ? "" : std::to_string(v) + "*") + mono;
  }
  return s;
}

}  // namespace chevalab

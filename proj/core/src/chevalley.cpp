#include "chevalab/chevalley.hpp"

#include <numeric>
#include <stdexcept>

namespace chevalab {

namespace {

struct Frac {
  long long n = 0, d = 1;
  Frac() = default;
  Frac(long long nn, long long dd) : n(nn), d(dd) { norm(); }
  void norm() {
    if (d < 0) n = -n, d = -d;
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
    if (n == 0) d = 1;
  }
  Frac operator+(const Frac& o) const { return Frac(n * o.d + o.n * d, d * o.d); }
  Frac operator*(const Frac& o) const { return Frac(n * o.n, d * o.d); }
  long long as_int() const {
    if (d != 1) throw std::logic_error("non-integral structure constant");
    return n;
  }
};

}  // namespace

int ChevalleyBasis::string_down(int a, int b) const {
  Coeffs c = rs_.root(b);
  const Coeffs& da = rs_.root(a);
  int q = 0;
  for (;;) {
    for (size_t i = 0; i < c.size(); ++i) c[i] -= da[i];
    bool zero = true;
    for (int x : c)
      if (x) {
        zero = false;
        break;
      }
    if (zero || !rs_.is_root(c)) break;
    ++q;
  }
  return q;
}

std::pair<int, int> ChevalleyBasis::extraspecial(int gamma) const {
  if (!rs_.is_positive(gamma) || rs_.height(gamma) < 2)
    throw std::invalid_argument("extraspecial pair needs a positive root of height >= 2");
  const Coeffs& g = rs_.root(gamma);
  for (int a = 0; a < rs_.npos(); ++a) {
    Coeffs rest = g;
    const Coeffs& da = rs_.root(a);
    for (size_t i = 0; i < rest.size(); ++i) rest[i] -= da[i];
    int b = rs_.id(rest);
    if (b >= 0 && rs_.is_positive(b)) return {a, b};
  }
  throw std::logic_error("no extraspecial pair found");
}

int ChevalleyBasis::N(int a, int b) const {
  Coeffs sum = rs_.root(a);
  const Coeffs& db = rs_.root(b);
  bool zero = true;
  for (size_t i = 0; i < sum.size(); ++i) {
    sum[i] += db[i];
    if (sum[i]) zero = false;
  }
  if (zero || !rs_.is_root(sum)) return 0;
  auto key = std::make_pair(a, b);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  int v = compute(a, b);
  memo_[key] = v;
  return v;
}

int ChevalleyBasis::compute(int a, int b) const {
  Coeffs sum = rs_.root(a);
  const Coeffs& db = rs_.root(b);
  for (size_t i = 0; i < sum.size(); ++i) sum[i] += db[i];
  int z = rs_.id(sum);

  bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
  if (!pa && !pb) return -N(rs_.neg(a), rs_.neg(b));
  if (pa != pb) {
    // reduce a mixed-sign pair through the zero-sum triple a + b + (-z) = 0:
    // N(a,b)/(z,z) = N(b,-z)/(a,a)
    if (!rs_.is_positive(z)) return N(rs_.neg(b), rs_.neg(a));
    Frac f(rs_.halfnorm(z), rs_.halfnorm(a));
    long long nb = N(b, rs_.neg(z));
    return int((f * Frac(nb, 1)).as_int());
  }

  auto [al, be] = extraspecial(z);
  if (a == al && b == be) return string_down(al, be) + 1;
  if (a == be && b == al) return -(string_down(al, be) + 1);

  // four roots a + b - al - be = 0, no two opposite; Jacobi-type relation:
  // N(a,b)N(-al,-be)/(z,z) + N(b,-al)N(a,-be)/(b-al,b-al) + N(-al,a)N(b,-be)/(a-al,a-al) = 0
  auto halfnorm_of_sum = [&](int x, int y) -> long long {
    Coeffs s = rs_.root(x);
    const Coeffs& dy = rs_.root(y);
    for (size_t i = 0; i < s.size(); ++i) s[i] += dy[i];
    int id = rs_.id(s);
    return id < 0 ? 0 : rs_.halfnorm(id);
  };
  int nal = rs_.neg(al), nbe = rs_.neg(be);
  Frac acc(0, 1);
  long long h2 = halfnorm_of_sum(b, nal);
  if (h2) acc = acc + Frac((long long)N(b, nal) * N(a, nbe), h2);
  long long h3 = halfnorm_of_sum(nal, a);
  if (h3) acc = acc + Frac((long long)N(nal, a) * N(b, nbe), h3);
  long long next = -N(al, be);  // N(-al,-be)
  Frac res = acc * Frac(-(long long)rs_.halfnorm(z), next);
  return int(res.as_int());
}

}  // namespace chevalab

#include "chevalab/gf.hpp"

#include <stdexcept>

namespace chevalab {

namespace {

// multiply digit vectors modulo x^k = -(poly), all over F_p
std::vector<int> polymul(const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& poly, int p) {
  int k = int(poly.size());
  std::vector<int> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * k - 2; d >= k; --d) {
    int c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - poly[i]) * c) % p;
  }
  prod.resize(k);
  return prod;
}

int encode(const std::vector<int>& digits, int p) {
  int v = 0;
  for (int i = int(digits.size()) - 1; i >= 0; --i) v = v * p + digits[i];
  return v;
}

std::vector<int> decode(int v, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

}  // namespace

GF::GF(int p, int k) : p_(p), k_(k) {
  if ((p != 2 && p != 3) || k < 1 || k > 8) throw std::invalid_argument("unsupported field");
  q_ = 1;
  for (int i = 0; i < k; ++i) q_ *= p;

  if (k == 1) {
    poly_ = {0};  // unused; arithmetic is mod p
  } else {
    // first primitive polynomial in counting order of the low coefficients
    for (int n = 1; n < q_; ++n) {
      std::vector<int> cand = decode(n, p, k);
      if (cand[0] == 0) continue;  // x would not be invertible
      // order of x modulo the candidate
      std::vector<int> x(k, 0), acc(k, 0);
      x[1 % k] = 1;
      acc = x;
      int ord = 1;
      std::vector<int> one(k, 0);
      one[0] = 1;
      while (acc != one && ord <= q_ - 1) {
        acc = polymul(acc, x, cand, p);
        ++ord;
      }
      if (ord == q_ - 1) {
        poly_ = cand;
        break;
      }
    }
    if (poly_.empty()) throw std::logic_error("no primitive polynomial found");
  }

  log_.assign(q_, -1);
  antilog_.assign(q_ - 1, 0);
  if (k == 1) {
    // smallest primitive root mod p: p=2 -> 1, p=3 -> 2
    int g = (p == 2) ? 1 : 2;
    int v = 1;
    for (int i = 0; i < q_ - 1; ++i) {
      antilog_[i] = v;
      log_[v] = i;
      v = (v * g) % p;
    }
  } else {
    std::vector<int> x(k, 0), acc(k, 0);
    x[1] = 1;
    acc[0] = 1;
    for (int i = 0; i < q_ - 1; ++i) {
      int v = encode(acc, p_);
      antilog_[i] = v;
      log_[v] = i;
      acc = polymul(acc, x, poly_, p_);
    }
  }
}

int GF::add(int a, int b) const {
  if (p_ == 2) return a ^ b;
  int r = 0, mul = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((a + b) % 3) * mul;
    a /= 3, b /= 3;
    mul *= 3;
  }
  return r;
}

int GF::neg(int a) const {
  if (p_ == 2) return a;
  int r = 0, mul = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((3 - a % 3) % 3) * mul;
    a /= 3;
    mul *= 3;
  }
  return r;
}

int GF::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return antilog_[(log_[a] + log_[b]) % (q_ - 1)];
}

int GF::inv(int a) const {
  if (a == 0) throw std::domain_error("division by zero");
  return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int GF::pow(int a, long long e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("division by zero");
    return e == 0 ? 1 : 0;
  }
  long long m = q_ - 1;
  long long le = ((e % m) + m) % m;
  return antilog_[(log_[a] * le) % m];
}

int GF::of_int(long long n) const {
  int r = int(((n % p_) + p_) % p_);
  return r;  // digit 0 carries the prime field
}

}  // namespace chevalab

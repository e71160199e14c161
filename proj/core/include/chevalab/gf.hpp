#pragma once
#include <cstdint>
#include <vector>

namespace chevalab {

// GF(p^k) for small p, k.  Elements are 0..q-1, the base-p digit vector being
// the coefficient vector over the prime field with respect to the fixed
// primitive polynomial (the first one in base-p counting order whose root
// generates the multiplicative group).
class GF {
 public:
  GF(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  int add(int a, int b) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, long long e) const;
  int of_int(long long n) const;     // image of an integer in the prime field
  int smul(long long s, int a) const {  // integer scalar action
    return mul(of_int(s), a);
  }
  int gen() const { return antilog_[1]; }  // the root of the primitive polynomial
  int frob(int a) const { return pow(a, p_); }

  // coefficients c_0..c_{k-1} with x^k = -(c_{k-1}x^{k-1}+...+c_0)
  const std::vector<int>& primitive_poly() const { return poly_; }

 private:
  int p_, k_, q_;
  std::vector<int> poly_;
  std::vector<int> log_, antilog_;
};

}  // namespace chevalab

#include "chevalab/adjoint.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevalab {

void IntSparse::add(int r, int c, long long v) {
  if (!v) return;
  for (auto& [cc, vv] : rows[r])
    if (cc == c) {
      vv += v;
      if (!vv) {
        rows[r].erase(std::find_if(rows[r].begin(), rows[r].end(),
                                   [&](auto& e) { return e.first == c; }));
      }
      return;
    }
  rows[r].push_back({c, v});
}

IntSparse IntSparse::operator*(const IntSparse& o) const {
  IntSparse out(n);
  std::vector<long long> acc(n, 0);
  std::vector<int> touched;
  for (int r = 0; r < n; ++r) {
    touched.clear();
    for (auto& [m, a] : rows[r])
      for (auto& [c, b] : o.rows[m]) {
        if (!acc[c]) touched.push_back(c);
        acc[c] += a * b;
      }
    std::sort(touched.begin(), touched.end());
    for (int c : touched) {
      if (acc[c]) out.rows[r].push_back({c, acc[c]});
      acc[c] = 0;
    }
  }
  return out;
}

bool IntSparse::is_zero() const {
  for (auto& r : rows)
    if (!r.empty()) return false;
  return true;
}

IntSparse IntSparse::div_exact(long long k) const {
  IntSparse out(n);
  for (int r = 0; r < n; ++r)
    for (auto& [c, v] : rows[r]) {
      if (v % k) throw std::logic_error("inexact division in divided power");
      out.rows[r].push_back({c, v / k});
    }
  return out;
}

std::vector<std::pair<int, long long>> AdjointRep::ad_column(int gamma, int bi) const {
  std::vector<std::pair<int, long long>> col;
  if (bi < rs_.size()) {  // [e_gamma, e_delta]
    int delta = bi;
    if (delta == rs_.neg(gamma)) {  // h_gamma
      Coeffs cv = rs_.coroot(gamma);
      for (int i = 0; i < rs_.rank(); ++i)
        if (cv[i]) col.push_back({h_index(i), cv[i]});
    } else {
      Coeffs s = rs_.root(gamma);
      const Coeffs& d = rs_.root(delta);
      for (size_t i = 0; i < s.size(); ++i) s[i] += d[i];
      int z = rs_.id(s);
      if (z >= 0) col.push_back({e_index(z), cb_.N(gamma, delta)});
    }
  } else {  // [e_gamma, h_i] = -<gamma, a_i^vee> e_gamma
    int i = bi - rs_.size();
    long long v = -rs_.to_weight(rs_.root(gamma))[i];
    if (v) col.push_back({e_index(gamma), v});
  }
  return col;
}

IntSparse AdjointRep::ad(int gamma) const {
  IntSparse m(dim());
  for (int c = 0; c < dim(); ++c)
    for (auto& [r, v] : ad_column(gamma, c)) m.add(r, c, v);
  return m;
}

const std::vector<IntSparse>& AdjointRep::divided_powers(int gamma) const {
  auto it = cache_.find(gamma);
  if (it != cache_.end()) return it->second;
  std::vector<IntSparse> out;
  IntSparse d1 = ad(gamma);
  out.push_back(d1);
  for (int k = 2;; ++k) {
    IntSparse next = (out.back() * d1).div_exact(k);
    if (next.is_zero()) break;
    if (k > 4) throw std::logic_error("divided powers did not terminate");
    out.push_back(next);
  }
  return cache_.emplace(gamma, std::move(out)).first->second;
}

long long AdjointRep::h_action(int i, int bi) const {
  if (bi >= rs_.size()) return 0;
  return rs_.to_weight(rs_.root(bi))[i];
}

}  // namespace chevalab

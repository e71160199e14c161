#include "chevalab/collector.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace chevalab {
namespace {

// Dense polynomial matrix over a small slice of the adjoint basis.
using Mat = std::vector<std::vector<Poly>>;

Mat poly_identity(int n) {
  Mat m(n, std::vector<Poly>(n, Poly(2, 0)));
  for (int i = 0; i < n; ++i) m[i][i] = Poly::constant(2, 1, 0);
  return m;
}

Mat matmul(const Mat& a, const Mat& b) {
  int n = (int)a.size();
  Mat out(n, std::vector<Poly>(n, Poly(2, 0)));
  for (int r = 0; r < n; ++r)
    for (int m = 0; m < n; ++m) {
      if (a[r][m].is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        if (b[m][c].is_zero()) continue;
        out[r][c] = out[r][c] + a[r][m] * b[m][c];
      }
    }
  return out;
}

bool is_identity(const Mat& m) {
  int n = (int)m.size();
  Poly one = Poly::constant(2, 1, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r == c ? m[r][c] != one : !m[r][c].is_zero()) return false;
    }
  return true;
}

Poly div_poly_exact(const Poly& f, long long k) {
  Poly out(f.nvars(), f.mod());
  for (auto& [e, c] : f.terms()) {
    if (c % k) throw std::logic_error("inexact coefficient in peeled factor");
    out.add_term(e, c / k);
  }
  return out;
}

}  // namespace

const std::vector<CommTerm>& Collector::comm_template(int a, int b) const {
  auto it = cache_.find({a, b});
  if (it != cache_.end()) return it->second;
  if (!(rs_.is_positive(a) && rs_.is_positive(b) && a < b))
    throw std::invalid_argument("comm_template wants two positive roots in order");

  // slice of the adjoint basis spanned by (Za + Zb) cap Phi plus the Cartan
  const Coeffs &ca = rs_.root(a), &cb = rs_.root(b);
  std::vector<int> local;
  for (int i = -5; i <= 5; ++i)
    for (int j = -5; j <= 5; ++j) {
      if (!i && !j) continue;
      Coeffs c(rs_.rank());
      for (int m = 0; m < rs_.rank(); ++m) c[m] = i * ca[m] + j * cb[m];
      int id = rs_.id(c);
      if (id >= 0) local.push_back(id);
    }
  std::sort(local.begin(), local.end());
  local.erase(std::unique(local.begin(), local.end()), local.end());
  for (int i = 0; i < rs_.rank(); ++i) local.push_back(adj_.h_index(i));

  int n = (int)local.size();
  std::vector<int> pos(adj_.dim(), -1);
  for (int i = 0; i < n; ++i) pos[local[i]] = i;

  // restricted divided powers: the slice is closed under each ad e_gamma
  auto restrict_dp = [&](int gamma) {
    std::vector<std::vector<std::vector<long long>>> out;
    for (const IntSparse& dk : adj_.divided_powers(gamma)) {
      std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
      for (int r = 0; r < adj_.dim(); ++r)
        for (auto& [c, v] : dk.rows[r])
          if (pos[c] >= 0) {
            assert(pos[r] >= 0);
            m[pos[r]][pos[c]] = v;
          }
      out.push_back(std::move(m));
    }
    return out;
  };

  auto exp_local = [&](int gamma, const Poly& f) {
    Mat e = poly_identity(n);
    Poly fk = Poly::constant(2, 1, 0);
    auto dps = restrict_dp(gamma);
    for (size_t k = 0; k < dps.size(); ++k) {
      fk = fk * f;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (dps[k][r][c]) e[r][c] = e[r][c] + fk * dps[k][r][c];
    }
    return e;
  };

  Poly t = Poly::var(2, 0, 0), u = Poly::var(2, 1, 0);
  Mat p = matmul(matmul(exp_local(b, -u), exp_local(a, -t)),
                 matmul(exp_local(b, u), exp_local(a, t)));

  // roots ia + jb with i, j >= 1, peeled in canonical order
  std::vector<int> combos;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      Coeffs c(rs_.rank());
      for (int m = 0; m < rs_.rank(); ++m) c[m] = i * ca[m] + j * cb[m];
      int id = rs_.id(c);
      if (id >= 0) combos.push_back(id);
    }
  std::sort(combos.begin(), combos.end());

  std::vector<CommTerm> terms;
  for (int gamma : combos) {
    int col = pos[rs_.neg(gamma)];
    Coeffs cv = rs_.coroot(gamma);
    int pivot = 0;
    while (!cv[pivot]) ++pivot;
    Poly f = div_poly_exact(p[pos[adj_.h_index(pivot)]][col], cv[pivot]);
    for (int i = 0; i < rs_.rank(); ++i)
      if (p[pos[adj_.h_index(i)]][col] != f * cv[i])
        throw std::logic_error("inconsistent Cartan part while peeling");
    if (f.terms().size() > 1)
      throw std::logic_error("peeled factor is not a monomial");
    if (!f.is_zero()) {
      auto& [e, c] = *f.terms().begin();
      terms.push_back({gamma, c, e[0], e[1]});
      p = matmul(exp_local(gamma, -f), p);
    }
  }
  if (!is_identity(p)) throw std::logic_error("commutator did not collect to identity");
  return cache_.emplace(std::make_pair(a, b), std::move(terms)).first->second;
}

std::vector<Collector::Letter> Collector::collect(std::vector<Letter> word,
                                                  size_t max_steps) const {
  for (auto& [r, f] : word)
    if (!rs_.is_positive(r)) throw std::invalid_argument("collect wants positive roots");
  for (size_t step = 0;; ++step) {
    if (step > max_steps) throw std::runtime_error("collection did not terminate");
    std::vector<Letter> merged;
    for (auto& l : word) {
      if (l.second.is_zero()) continue;
      if (!merged.empty() && merged.back().first == l.first) {
        merged.back().second = merged.back().second + l.second;
        if (merged.back().second.is_zero()) merged.pop_back();
      } else {
        merged.push_back(l);
      }
    }
    word = std::move(merged);
    size_t k = 0;
    while (k + 1 < word.size() && word[k].first <= word[k + 1].first) ++k;
    if (k + 1 >= word.size()) return word;

    Poly tv = word[k + 1].second, uv = word[k].second;
    int a = word[k + 1].first, b = word[k].first;
    std::vector<Letter> repl{{a, tv}, {b, uv}};
    for (const CommTerm& ct : comm_template(a, b))
      repl.push_back({ct.root, tv.pow(ct.i) * uv.pow(ct.j) * ct.c});
    word.erase(word.begin() + k, word.begin() + k + 2);
    word.insert(word.begin() + k, repl.begin(), repl.end());
  }
}

}  // namespace chevalab

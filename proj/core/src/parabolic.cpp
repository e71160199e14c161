#include "chevalab/parabolic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace chevalab {

namespace {

// Walk a path component starting from `start`, following single-step adjacency.
std::vector<int> walk_path(const std::vector<std::vector<int>>& adj, int start,
                           const std::vector<int>& nodes) {
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (int(order.size()) < int(nodes.size())) {
    int nxt = -1;
    for (int v : adj[cur])
      if (v != prev) nxt = v;
    if (nxt < 0) throw std::logic_error("component is not a path");
    order.push_back(nxt);
    prev = cur, cur = nxt;
  }
  return order;
}

}  // namespace

LeviComponent order_component(const RootSystem& rs, const std::vector<int>& nodes) {
  LeviComponent c;
  int m = int(nodes.size());
  if (m == 1) {
    c.type = LieType('A', 1);
    c.order = nodes;
    return c;
  }

  int n = rs.rank();
  std::vector<std::vector<int>> adj(n);
  bool triple = false, dbl = false;
  for (int a : nodes)
    for (int b : nodes)
      if (a != b && rs.cartan(a, b) != 0) {
        adj[a].push_back(b);
        if (rs.cartan(a, b) == -2) dbl = true;
        if (rs.cartan(a, b) == -3) triple = true;
      }

  std::vector<int> ends, branch;
  for (int v : nodes) {
    if (adj[v].size() == 1) ends.push_back(v);
    if (adj[v].size() == 3) branch.push_back(v);
    if (adj[v].size() > 3) throw std::logic_error("diagram degree > 3");
  }

  if (triple) {  // G2: short root first
    int a = nodes[0], b = nodes[1];
    if (rs.cartan(a, b) != -3) std::swap(a, b);  // now <a, b^vee> = -3, a long
    c.type = LieType('G', 2);
    c.order = {b, a};
    return c;
  }

  if (dbl) {  // a path of type B, C or F
    if (branch.size()) throw std::logic_error("double bond with a branch node");
    int shorts = 0;
    for (int v : nodes)
      if (rs.d(v) == 1) ++shorts;
    // orient long end -> short end
    auto path = walk_path(adj, rs.d(ends[0]) == 2 ? ends[0] : ends[1], nodes);
    if (m == 2 && rs.type().family == 'C') {  // inherited numbering, short first
      c.type = LieType('C', 2);
      c.order = {path[1], path[0]};
      return c;
    }
    if (m == 4 && shorts == 2 && rs.d(path[1]) == 2) {
      c.type = LieType('F', 4);
      c.order = path;
    } else if (shorts == 1) {
      c.type = LieType('B', m);
      c.order = path;
    } else if (shorts == m - 1) {
      c.type = LieType('C', m);
      std::reverse(path.begin(), path.end());
      c.order = path;
    } else {
      throw std::logic_error("unrecognized multiply-laced path");
    }
    return c;
  }

  if (branch.empty()) {  // type A, least end first
    c.type = LieType('A', m);
    c.order = walk_path(adj, std::min(ends[0], ends[1]), nodes);
    return c;
  }

  if (branch.size() != 1) throw std::logic_error("more than one branch node");
  int t = branch[0];
  // peel the three branches off the trivalent node
  std::vector<std::vector<int>> arms;
  for (int s : adj[t]) {
    std::vector<int> arm{s};
    int prev = t, cur = s;
    for (;;) {
      int nxt = -1;
      for (int v : adj[cur])
        if (v != prev) nxt = v;
      if (nxt < 0) break;
      arm.push_back(nxt);
      prev = cur, cur = nxt;
    }
    arms.push_back(arm);
  }
  std::sort(arms.begin(), arms.end(),
            [](auto& a, auto& b) { return a.size() < b.size(); });

  size_t l1 = arms[0].size(), l2 = arms[1].size(), l3 = arms[2].size();
  if (l1 == 1 && l2 == 1) {  // type D
    c.type = LieType('D', m);
    if (m == 4) {
      std::vector<int> leaves{arms[0][0], arms[1][0], arms[2][0]};
      std::sort(leaves.begin(), leaves.end());
      c.order = {leaves[0], t, leaves[1], leaves[2]};
      return c;
    }
    std::vector<int> order(arms[2].rbegin(), arms[2].rend());
    order.push_back(t);
    int u = arms[0][0], v = arms[1][0];
    // fork order: ascending inside a D ambient (inherited numbering) and for
    // the D7 Levi of E8; descending in the remaining E cases
    bool asc = rs.type().family == 'D' || (rs.type() == LieType('E', 8) && m == 7);
    if ((u < v) != asc) std::swap(u, v);
    order.push_back(u);
    order.push_back(v);
    c.order = order;
    return c;
  }
  if (l1 == 1 && l2 == 2 && l3 >= 2 && l3 <= 4) {  // type E, inherited numbering
    c.type = LieType('E', m);
    c.order = nodes;
    std::sort(c.order.begin(), c.order.end());
    return c;
  }
  throw std::logic_error("unrecognized branched diagram");
}

Parabolic::Parabolic(const RootSystem& rs, std::vector<int> levi) : rs_(rs), levi_(std::move(levi)) {
  std::sort(levi_.begin(), levi_.end());
  levi_.erase(std::unique(levi_.begin(), levi_.end()), levi_.end());
  for (int j : levi_)
    if (j < 0 || j >= rs_.rank()) throw std::invalid_argument("Levi index out of range");
  std::vector<bool> in(rs_.rank(), false);
  for (int j : levi_) in[j] = true;
  for (int i = 0; i < rs_.rank(); ++i)
    if (!in[i]) removed_.push_back(i);
  split_components();
  build_shapes();
}

Parabolic Parabolic::from_removed(const RootSystem& rs, const std::vector<int>& removed) {
  std::vector<bool> out(rs.rank(), false);
  for (int i : removed) {
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument("removed index out of range");
    out[i] = true;
  }
  std::vector<int> levi;
  for (int i = 0; i < rs.rank(); ++i)
    if (!out[i]) levi.push_back(i);
  return Parabolic(rs, levi);
}

void Parabolic::split_components() {
  std::vector<bool> in(rs_.rank(), false), seen(rs_.rank(), false);
  for (int j : levi_) in[j] = true;
  for (int j : levi_) {
    if (seen[j]) continue;
    std::vector<int> comp, work{j};
    seen[j] = true;
    while (!work.empty()) {
      int v = work.back();
      work.pop_back();
      comp.push_back(v);
      for (int u : levi_)
        if (!seen[u] && rs_.cartan(v, u) != 0) {
          seen[u] = true;
          work.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps_.push_back(order_component(rs_, comp));
  }
  std::sort(comps_.begin(), comps_.end(), [](const LeviComponent& a, const LeviComponent& b) {
    if (a.type.rank != b.type.rank) return a.type.rank > b.type.rank;
    int ma = *std::min_element(a.order.begin(), a.order.end());
    int mb = *std::min_element(b.order.begin(), b.order.end());
    return ma < mb;
  });
}

TypeVec Parabolic::levi_type() const {
  TypeVec tv;
  for (auto& c : comps_) tv.parts.push_back(c.type);
  return tv;
}

int Parabolic::level(int root_id) const {
  const Coeffs& c = rs_.root(root_id);
  int l = 0;
  for (int i : removed_) l += c[i];
  return l;
}

std::vector<int> Parabolic::level_roots(int lvl) const {
  std::vector<int> out;
  for (int i = 0; i < rs_.npos(); ++i)
    if (level(i) == lvl) out.push_back(i);
  return out;
}

void Parabolic::build_shapes() {
  max_level_ = 0;
  for (int i = 0; i < rs_.npos(); ++i) max_level_ = std::max(max_level_, level(i));
  shapes_.assign(max_level_ + 1, {});

  std::map<std::vector<int>, std::vector<int>> by_pattern;
  for (int i = 0; i < rs_.npos(); ++i) {
    if (level(i) == 0) continue;
    std::vector<int> pat;
    for (int r : removed_) pat.push_back(rs_.root(i)[r]);
    by_pattern[pat].push_back(i);
  }

  for (auto& [pat, members] : by_pattern) {
    Shape s;
    s.pattern = pat;
    s.members = members;  // ids ascend, so height-lex order
    s.level = level(members[0]);
    s.generator = members[0];

    // extreme members: restriction to the Levi dominant (resp. antidominant),
    // then componentwise-largest (resp. smallest) among those
    std::vector<int> dom, anti;
    for (int m : members) {
      Weight w = rs_.to_weight(rs_.root(m));
      bool d = true, a = true;
      for (int j : levi_) {
        if (w[j] < 0) d = false;
        if (w[j] > 0) a = false;
      }
      if (d) dom.push_back(m);
      if (a) anti.push_back(m);
    }
    auto pick = [&](const std::vector<int>& cand, int sgn) {
      for (int m : cand) {
        bool best = true;
        for (int o : cand) {
          for (int k = 0; k < rs_.rank(); ++k)
            if (sgn * (rs_.root(m)[k] - rs_.root(o)[k]) < 0) {
              best = false;
              break;
            }
          if (!best) break;
        }
        if (best) return m;
      }
      throw std::logic_error("no extreme member in shape");
    };
    s.maximal = pick(dom, +1);
    int minimal = pick(anti, -1);

    Weight wmax = rs_.to_weight(rs_.root(s.maximal));
    Weight wmin = rs_.to_weight(rs_.root(minimal));
    for (auto& comp : comps_) {
      std::vector<int> lab;
      for (int node : comp.order)
        lab.push_back(comp.type.family == 'A' ? -wmin[node] : wmax[node]);
      for (int x : lab)
        if (x < 0) throw std::logic_error("non-dominant shape label");
      s.label.push_back(lab);
    }

    if (rs_.type().family == 'F' || rs_.type().family == 'G') {
      int hn = rs_.halfnorm(members[0]);
      for (int m : members)
        if (rs_.halfnorm(m) != hn) s.mixed_length_flag = true;
    }
    shapes_[s.level].push_back(s);
  }
  // inside one level, order shapes by their pattern
  for (auto& v : shapes_)
    std::sort(v.begin(), v.end(),
              [](const Shape& a, const Shape& b) { return a.pattern < b.pattern; });
}

const std::vector<Shape>& Parabolic::shapes(int lvl) const {
  if (lvl < 1 || lvl > max_level_) throw std::out_of_range("no such level");
  return shapes_[lvl];
}

std::string Parabolic::label_string(const Shape& s) const {
  if (comps_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < s.label.size(); ++i) {
    if (i) out += ",";
    for (int x : s.label[i]) {
      if (x > 9) throw std::logic_error("label digit overflow");
      out += char('0' + x);
    }
  }
  return out;
}

}  // namespace chevalab

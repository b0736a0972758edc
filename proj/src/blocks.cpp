#include "bihecke/blocks.hpp"

#include <algorithm>

namespace bihecke {

IndexSet support(const CoxeterGroup& g, ElementId w) {
  IndexSet s = 0;
  for (int i : g.reduced_word(w)) s |= IndexSet{1} << i;
  return s;
}

std::optional<BlockData> is_right_block(const CoxeterGroup& g, ElementId w, IndexSet K) {
  BlockData b;
  b.w = w;
  b.K = K;
  ElementId v = g.min_coset_right(w, K).rep;
  b.cutting_point = v;
  ElementId vinv = g.inverse(v);
  for (int k : index_members(K)) {
    auto j = g.simple_index(g.product(g.product(v, g.generator(k)), vinv));
    if (!j) return std::nullopt;
    b.J |= IndexSet{1} << *j;
    b.phi.emplace_back(k, *j);
  }
  b.reduced = reduce_block(g, w, K) == K;
  b.trivial = v == w;
  return b;
}

std::optional<BlockData> is_left_block(const CoxeterGroup& g, ElementId w, IndexSet J) {
  auto m = is_right_block(g, g.inverse(w), J);
  if (!m) return std::nullopt;
  BlockData b;
  b.w = w;
  b.J = J;
  b.K = m->J;
  for (auto [j, k] : m->phi) b.phi.emplace_back(k, j);
  std::sort(b.phi.begin(), b.phi.end());
  b.cutting_point = g.inverse(m->cutting_point);
  b.reduced = m->reduced;
  b.trivial = b.cutting_point == w;
  return b;
}

IndexSet reduce_block(const CoxeterGroup& g, ElementId w, IndexSet K) {
  return support(g, g.min_coset_right(w, K).factor);
}

std::vector<BlockData> all_blocks(const CoxeterGroup& g, ElementId w) {
  std::vector<BlockData> out;
  for (IndexSet K = 0; K <= g.full_index_set(); ++K) {
    if (auto b = is_right_block(g, w, K)) out.push_back(std::move(*b));
    if (K == g.full_index_set()) break;
  }
  return out;
}

std::vector<BlockData> reduced_blocks(const CoxeterGroup& g, ElementId w) {
  auto all = all_blocks(g, w);
  std::erase_if(all, [](const BlockData& b) { return !b.reduced; });
  return all;
}

IndexSet short_right_nondescents(const CoxeterGroup& g, ElementId u) {
  IndexSet out = 0;
  ElementId uinv = g.inverse(u);
  for (int k = 0; k < g.rank(); ++k) {
    if (g.has_right_descent(u, k)) continue;
    if (g.simple_index(g.product(g.product(u, g.generator(k)), uinv))) out |= IndexSet{1} << k;
  }
  return out;
}

IndexSet short_left_nondescents(const CoxeterGroup& g, ElementId u) {
  return short_right_nondescents(g, g.inverse(u));
}

bool cutting_le(const CoxeterGroup& g, ElementId u, ElementId w) {
  if (g.length(u) > g.length(w)) return false;
  return g.in_parabolic(g.product(g.inverse(u), w), short_right_nondescents(g, u));
}

std::vector<ElementId> cutting_points(const CoxeterGroup& g, ElementId w) {
  std::vector<ElementId> out;
  for (const auto& b : reduced_blocks(g, w)) out.push_back(b.cutting_point);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ElementId> cutting_lower_covers(const CoxeterGroup& g, ElementId w) {
  auto pts = cutting_points(g, w);
  std::vector<ElementId> out;
  for (ElementId v : pts) {
    if (v == w) continue;
    bool maximal = true;
    for (ElementId x : pts)
      if (x != w && x != v && cutting_le(g, v, x)) maximal = false;
    if (maximal) out.push_back(v);
  }
  return out;
}

CuttingPoset cutting_poset(const CoxeterGroup& g) {
  const std::size_t n = g.size();
  CuttingPoset cp;
  cp.K.resize(n);
  cp.J.resize(n);
  for (ElementId u = 0; u < n; ++u) {
    cp.K[u] = short_right_nondescents(g, u);
    cp.J[u] = short_left_nondescents(g, u);
  }
  std::vector<std::string> labels;
  for (ElementId u = 0; u < n; ++u) labels.push_back(g.label(u));
  cp.poset = Poset::from_relation(std::move(labels), [&](std::size_t u, std::size_t w) {
    if (g.length(ElementId(u)) > g.length(ElementId(w))) return false;
    return g.in_parabolic(g.product(g.inverse(ElementId(u)), ElementId(w)), cp.K[u]);
  });
  for (auto [u, w] : cp.poset.covers())
    if (!g.le_L(ElementId(u), ElementId(w)) || !g.le_R(ElementId(u), ElementId(w)))
      throw Error("cutting poset is not a subposet of the weak orders");
  return cp;
}

IndexSet jblock(const CoxeterGroup& g, ElementId w, ElementId u) {
  if (!g.le_R(u, w)) throw DomainError("jblock: element outside [1,w]_R");
  IndexSet out = 0;
  IndexSet dl = g.left_descents(u);
  for (const auto& b : reduced_blocks(g, w))
    if ((b.J & dl) == 0) out |= b.J;
  return out;
}

IndexSet kblock(const CoxeterGroup& g, ElementId w, ElementId u) {
  return jblock(g, g.inverse(w), g.inverse(u));
}

long long mobius_cutting(const CoxeterGroup& g, ElementId u, ElementId w) {
  if (!cutting_le(g, u, w)) throw DomainError("mobius_cutting: elements are not comparable");
  std::vector<ElementId> above;
  for (ElementId v : cutting_lower_covers(g, w))
    if (cutting_le(g, u, v)) above.push_back(v);
  // u must be the meet of the covers above it (w for the empty family)
  std::vector<ElementId> common = cutting_points(g, w);
  for (ElementId v : above) {
    auto pv = cutting_points(g, v);
    std::vector<ElementId> next;
    std::set_intersection(common.begin(), common.end(), pv.begin(), pv.end(), std::back_inserter(next));
    common = std::move(next);
  }
  for (ElementId x : common)
    if (!cutting_le(g, x, u)) return 0;
  return above.size() % 2 ? -1 : 1;
}

bool is_matrix_block(const std::vector<int>& perm, int lo, int hi) {
  int mn = perm[lo - 1], mx = perm[lo - 1];
  for (int p = lo; p <= hi; ++p) {
    mn = std::min(mn, perm[p - 1]);
    mx = std::max(mx, perm[p - 1]);
  }
  return mx - mn == hi - lo;
}

MatrixBlock matrix_block_at(const std::vector<int>& perm, int lo, int hi) {
  MatrixBlock b;
  b.col_lo = lo;
  b.col_hi = hi;
  b.row_lo = *std::min_element(perm.begin() + lo - 1, perm.begin() + hi);
  b.row_hi = b.row_lo + hi - lo;
  for (int p = lo; p <= hi; ++p) b.pattern.push_back(perm[p - 1] - b.row_lo + 1);
  // connected: no proper prefix of the pattern is a permutation of its own positions
  b.connected = true;
  int mx = 0;
  for (std::size_t k = 0; k + 1 < b.pattern.size(); ++k) {
    mx = std::max(mx, b.pattern[k]);
    if (mx == int(k) + 1) b.connected = false;
  }
  return b;
}

std::vector<MatrixBlock> matrix_blocks_typeA(const std::vector<int>& perm) {
  const int n = int(perm.size());
  std::vector<MatrixBlock> out;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo + 1; hi <= n; ++hi) {
      if (hi - lo + 1 == n) continue;
      if (is_matrix_block(perm, lo, hi)) out.push_back(matrix_block_at(perm, lo, hi));
    }
  return out;
}

}  // namespace bihecke

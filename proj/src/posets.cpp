#include "bihecke/posets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bihecke/errors.hpp"

namespace bihecke {

namespace {

bool subset_rows(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

Poset Poset::from_relation(std::vector<std::string> labels,
                           const std::function<bool(std::size_t, std::size_t)>& leq) {
  Poset p;
  p.labels_ = std::move(labels);
  const std::size_t n = p.labels_.size();
  p.below_ = BitMatrix(n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (leq(x, y)) p.below_.set(y, x);
  p.finish();
  return p;
}

Poset Poset::from_covers(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& lt) {
  Poset p;
  p.labels_ = std::move(labels);
  const std::size_t n = p.labels_.size();
  std::vector<std::vector<std::size_t>> preds(n), succs(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [x, y] : lt) {
    if (x >= n || y >= n || x == y) throw DomainError("from_covers: invalid pair");
    preds[y].push_back(x);
    succs[x].push_back(y);
    ++indeg[y];
  }
  std::vector<std::size_t> order, stack;
  for (std::size_t x = 0; x < n; ++x)
    if (!indeg[x]) stack.push_back(x);
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (std::size_t y : succs[x])
      if (--indeg[y] == 0) stack.push_back(y);
  }
  if (order.size() != n) throw DomainError("from_covers: relation has a cycle");
  p.below_ = BitMatrix(n);
  for (std::size_t y : order) {
    p.below_.set(y, y);
    for (std::size_t x : preds[y]) p.below_.or_row(y, x);
  }
  p.finish();
  return p;
}

void Poset::finish() {
  const std::size_t n = size();
  const std::size_t W = below_.words();
  for (std::size_t x = 0; x < n; ++x)
    if (!below_.test(x, x)) throw DomainError("poset relation is not reflexive");
  above_ = below_.transposed();
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x : below_.row_members(y)) {
      if (x != y && below_.test(x, y)) throw DomainError("poset relation is not antisymmetric");
      if (!subset_rows(below_.row(x), below_.row(y), W)) throw DomainError("poset relation is not transitive");
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below_.row_count(a) < below_.row_count(b); });
  covers_.clear();
  height_.assign(n, 0);
  for (std::size_t y : order) {
    for (std::size_t x : below_.row_members(y)) {
      if (x == y) continue;
      // x is covered by y iff [x, y] = {x, y}
      std::size_t c = 0;
      const auto* a = above_.row(x);
      const auto* b = below_.row(y);
      for (std::size_t i = 0; i < W; ++i) c += std::popcount(a[i] & b[i]);
      if (c == 2) {
        covers_.emplace_back(x, y);
        height_[y] = std::max(height_[y], height_[x] + 1);
      }
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

std::vector<std::size_t> Poset::lower_covers(std::size_t y) const {
  std::vector<std::size_t> out;
  for (auto [a, b] : covers_)
    if (b == y) out.push_back(a);
  return out;
}

std::vector<std::size_t> Poset::upper_covers(std::size_t x) const {
  std::vector<std::size_t> out;
  for (auto [a, b] : covers_)
    if (a == x) out.push_back(b);
  return out;
}

std::vector<std::size_t> Poset::interval(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> out;
  for (std::size_t z : below_.row_members(y))
    if (leq(x, z)) out.push_back(z);
  return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (below_.row_count(x) == 1) out.push_back(x);
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (above_.row_count(x) == 1) out.push_back(x);
  return out;
}

std::vector<long long> Poset::mobius_from(std::size_t x) const {
  std::vector<long long> mu(size(), 0);
  std::vector<std::size_t> up = above_.row_members(x);
  std::sort(up.begin(), up.end(), [&](std::size_t a, std::size_t b) { return below_.row_count(a) < below_.row_count(b); });
  for (std::size_t z : up) {
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    long long s = 0;
    for (std::size_t t : below_.row_members(z))
      if (t != z && leq(x, t)) s += mu[t];
    mu[z] = -s;
  }
  return mu;
}

long long Poset::mobius(std::size_t x, std::size_t y) const {
  if (!leq(x, y)) throw DomainError("mobius: elements are not comparable");
  return mobius_from(x)[y];
}

std::optional<std::size_t> Poset::meet_of(const std::vector<std::size_t>& xs) const {
  if (xs.empty()) {
    auto mx = maximal_elements();
    if (mx.size() == 1) return mx.front();
    return std::nullopt;
  }
  const std::size_t W = below_.words();
  std::vector<std::uint64_t> common(below_.row(xs[0]), below_.row(xs[0]) + W);
  for (std::size_t k = 1; k < xs.size(); ++k)
    for (std::size_t i = 0; i < W; ++i) common[i] &= below_.row(xs[k])[i];
  for (std::size_t i = 0; i < W; ++i) {
    std::uint64_t w = common[i];
    while (w) {
      std::size_t m = i * 64 + std::countr_zero(w);
      w &= w - 1;
      if (subset_rows(common.data(), below_.row(m), W)) return m;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::meet(std::size_t x, std::size_t y) const { return meet_of({x, y}); }

std::optional<std::size_t> Poset::join(std::size_t x, std::size_t y) const {
  const std::size_t W = above_.words();
  std::vector<std::uint64_t> common(W);
  for (std::size_t i = 0; i < W; ++i) common[i] = above_.row(x)[i] & above_.row(y)[i];
  for (std::size_t i = 0; i < W; ++i) {
    std::uint64_t w = common[i];
    while (w) {
      std::size_t m = i * 64 + std::countr_zero(w);
      w &= w - 1;
      if (subset_rows(common.data(), above_.row(m), W)) return m;
    }
  }
  return std::nullopt;
}

bool Poset::is_meet_semilattice() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (!meet(x, y)) return false;
  return true;
}

bool Poset::is_join_semilattice() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (!join(x, y)) return false;
  return true;
}

bool Poset::is_distributive() const {
  if (!is_lattice()) return false;
  const std::size_t n = size();
  std::vector<std::size_t> mt(n * n), jn(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      mt[x * n + y] = *meet(x, y);
      jn[x * n + y] = *join(x, y);
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (mt[x * n + jn[y * n + z]] != jn[mt[x * n + y] * n + mt[x * n + z]]) return false;
  return true;
}

bool Poset::is_boolean_interval(std::size_t x, std::size_t y) const {
  if (!leq(x, y)) return false;
  std::vector<std::size_t> I = interval(x, y);
  std::vector<std::size_t> atoms;
  for (std::size_t z : I)
    if (z != x) {
      bool atom = true;
      for (std::size_t t : I)
        if (t != x && t != z && lt(t, z)) atom = false;
      if (atom) atoms.push_back(z);
    }
  if (atoms.size() > 20 || I.size() != (std::size_t{1} << atoms.size())) return false;
  std::vector<std::uint32_t> mask(I.size(), 0);
  std::vector<bool> seen(I.size(), false);
  for (std::size_t k = 0; k < I.size(); ++k) {
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (leq(atoms[a], I[k])) mask[k] |= 1u << a;
    if (seen[mask[k]]) return false;
    seen[mask[k]] = true;
  }
  for (std::size_t a = 0; a < I.size(); ++a)
    for (std::size_t b = 0; b < I.size(); ++b)
      if (leq(I[a], I[b]) != ((mask[a] & ~mask[b]) == 0)) return false;
  return true;
}

bool Poset::is_meet_distributive() const {
  if (!is_meet_semilattice()) return false;
  for (std::size_t y = 0; y < size(); ++y) {
    auto lc = lower_covers(y);
    if (lc.empty()) continue;
    auto x = meet_of(lc);
    if (!x || !is_boolean_interval(*x, y)) return false;
  }
  return true;
}

std::vector<std::size_t> Poset::join_irreducibles() const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < size(); ++y)
    if (lower_covers(y).size() == 1) out.push_back(y);
  return out;
}

Poset Poset::induced(const std::vector<std::size_t>& nodes) const {
  std::vector<std::string> labs;
  for (std::size_t v : nodes) labs.push_back(labels_[v]);
  return from_relation(std::move(labs), [&](std::size_t a, std::size_t b) { return leq(nodes[a], nodes[b]); });
}

Poset Poset::lower_sets() const {
  const std::size_t n = size();
  if (n > 25) throw SizeError("lower_sets: ground set above 25 nodes");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return height_[a] < height_[b]; });
  std::vector<std::uint32_t> lc_mask(n, 0);
  for (auto [a, b] : covers_) lc_mask[b] |= 1u << a;
  std::vector<std::uint32_t> sets{0};
  for (std::size_t v : order) {
    std::size_t cur = sets.size();
    for (std::size_t k = 0; k < cur; ++k)
      if ((sets[k] & lc_mask[v]) == lc_mask[v]) sets.push_back(sets[k] | (1u << v));
  }
  std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::string> labs;
  for (std::uint32_t s : sets) {
    std::string l = "{";
    bool first = true;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1u) {
        l += (first ? "" : ",") + labels_[v];
        first = false;
      }
    labs.push_back(l + "}");
  }
  return from_relation(std::move(labs), [&](std::size_t a, std::size_t b) { return (sets[a] & ~sets[b]) == 0; });
}

std::string Poset::to_dot(const std::string& name,
                          const std::function<std::string(std::size_t, std::size_t)>& edge_color) const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (height_[a] != height_[b]) return height_[a] < height_[b];
    return labels_[a] < labels_[b];
  });
  std::vector<std::size_t> pos(size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  auto edges = covers_;
  std::sort(edges.begin(), edges.end(), [&](auto a, auto b) {
    return std::pair(pos[a.first], pos[a.second]) < std::pair(pos[b.first], pos[b.second]);
  });
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (std::size_t v : order) os << "  \"" << labels_[v] << "\";\n";
  for (auto [a, b] : edges) {
    os << "  \"" << labels_[a] << "\" -> \"" << labels_[b] << "\"";
    if (edge_color) {
      std::string c = edge_color(a, b);
      if (!c.empty()) os << " [color=" << c << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace bihecke

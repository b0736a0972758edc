#include "bihecke/properties.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "bihecke/blocks.hpp"
#include "bihecke/fmonoid.hpp"
#include "bihecke/posets.hpp"
#include "bihecke/reptheory.hpp"

namespace bihecke {

namespace {

class Tally {
 public:
  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++cases_;
    if (!ok && !failed_) {
      failed_ = true;
      detail_ = describe();
    }
    return ok;
  }
  void skip(std::string why) {
    skipped_ = true;
    detail_ = std::move(why);
  }
  std::size_t cases() const { return cases_; }
  bool failed() const { return failed_; }
  bool skipped() const { return skipped_ && cases_ == 0; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t cases_ = 0;
  bool failed_ = false, skipped_ = false;
  std::string detail_;
};

// Shared, lazily built data for one group.
class Context {
 public:
  Context(const CoxeterGroup& g, const PropertyOptions& opts) : g(g), opts(opts) {}

  const CoxeterGroup& g;
  const PropertyOptions& opts;
  std::mt19937_64 rng;

  void reseed(const std::string& name) {
    rng.seed(opts.seed ^ std::hash<std::string>{}(name));
  }

  bool exhaustive() const { return g.size() <= opts.exhaustive_limit; }

  // All elements, or a sample drawn from the current generator.
  std::vector<ElementId> elements() {
    std::vector<ElementId> out;
    if (exhaustive()) {
      out.resize(g.size());
      std::iota(out.begin(), out.end(), ElementId{0});
      return out;
    }
    for (std::size_t k = 0; k < opts.samples; ++k) out.push_back(random_element());
    return out;
  }

  std::vector<std::pair<ElementId, ElementId>> pairs() {
    std::vector<std::pair<ElementId, ElementId>> out;
    if (g.size() <= opts.pair_limit) {
      for (ElementId u = 0; u < g.size(); ++u)
        for (ElementId v = 0; v < g.size(); ++v) out.emplace_back(u, v);
      return out;
    }
    for (std::size_t k = 0; k < opts.samples; ++k) out.emplace_back(random_element(), random_element());
    return out;
  }

  std::vector<std::size_t> functions(const TransformationMonoid& m) {
    std::vector<std::size_t> out;
    if (m.size() <= opts.function_limit) {
      out.resize(m.size());
      std::iota(out.begin(), out.end(), std::size_t{0});
      return out;
    }
    for (std::size_t k = 0; k < opts.samples; ++k) out.push_back(rng() % m.size());
    return out;
  }

  ElementId random_element() { return ElementId(rng() % g.size()); }

  // nullptr when the monoid exceeds the cap.
  const TransformationMonoid* monoid() {
    if (!m_ && !m_failed_) {
      ClosureOptions co;
      co.max_elements = opts.monoid_cap;
      co.threads = opts.threads;
      try {
        m_ = bihecke_monoid(g, co);
      } catch (const SizeError&) {
        m_failed_ = true;
      }
    }
    return m_ ? &*m_ : nullptr;
  }
  const TransformationMonoid* borel_monoid(BorelFix fix) {
    auto& slot = fix == BorelFix::Identity ? m1_ : m0_;
    if (!slot) {
      const TransformationMonoid* m = monoid();
      if (!m) return nullptr;
      ClosureOptions co;
      co.threads = opts.threads;
      slot = borel(g, fix, *m, co);
    }
    return &*slot;
  }
  const GreenStructure* green_structure() {
    if (!gs_) {
      const TransformationMonoid* m = monoid();
      if (!m) return nullptr;
      gs_ = green(*m);
    }
    return &*gs_;
  }
  const CuttingPoset& cutting() {
    if (!cp_) cp_ = cutting_poset(g);
    return *cp_;
  }
  std::string monoid_skip() const {
    return "biHecke monoid above " + std::to_string(opts.monoid_cap) + " elements";
  }

  // x <=_LR y: y = a x b with lengths adding.
  bool le_LR(ElementId x, ElementId y) {
    auto it = subfactors_.find(y);
    if (it == subfactors_.end()) {
      std::vector<bool> seen(g.size(), false);
      std::vector<ElementId> queue{y};
      seen[y] = true;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        ElementId z = queue[h];
        for (int i = 0; i < g.rank(); ++i) {
          for (ElementId n : {g.left_mul(i, z), g.right_mul(z, i)})
            if (g.length(n) < g.length(z) && !seen[n]) {
              seen[n] = true;
              queue.push_back(n);
            }
        }
      }
      it = subfactors_.emplace(y, std::move(seen)).first;
    }
    return it->second[x];
  }

 private:
  std::optional<TransformationMonoid> m_, m1_, m0_;
  bool m_failed_ = false;
  std::optional<GreenStructure> gs_;
  std::optional<CuttingPoset> cp_;
  std::map<ElementId, std::vector<bool>> subfactors_;
};

std::string lbl(const CoxeterGroup& g, ElementId w) { return g.label(w); }

std::string pair_text(const CoxeterGroup& g, ElementId u, ElementId v) { return lbl(g, u) + ", " + lbl(g, v); }

bool is_left_interval(const CoxeterGroup& g, const std::vector<ElementId>& s) {
  ElementId lo = s.front(), hi = s.front();
  for (ElementId x : s) {
    if (g.length(x) < g.length(lo)) lo = x;
    if (g.length(x) > g.length(hi)) hi = x;
  }
  return g.le_L(lo, hi) && g.interval(lo, hi, Order::Left) == s;
}

// coxeter --------------------------------------------------------------------

void length_bounds(Context& c, Tally& t) {
  const auto& g = c.g;
  for (auto [u, v] : c.pairs()) {
    ElementId uv = g.product(u, v);
    t.expect(g.length(uv) <= g.length(u) + g.length(v), [&] { return "l(uv) > l(u)+l(v) at " + pair_text(g, u, v); });
  }
  for (ElementId u : c.elements())
    for (int i = 0; i < g.rank(); ++i)
      t.expect(std::abs(g.length(g.right_mul(u, i)) - g.length(u)) == 1,
               [&] { return "l(u s_i) - l(u) != +-1 at " + lbl(g, u); });
}

void bruhat_subword(Context& c, Tally& t) {
  const auto& g = c.g;
  for (ElementId w : c.elements()) {
    std::vector<bool> sub(g.size(), false);
    std::vector<ElementId> reach{g.identity()};
    sub[g.identity()] = true;
    for (int i : g.reduced_word(w)) {
      std::size_t n = reach.size();
      for (std::size_t k = 0; k < n; ++k) {
        ElementId x = g.right_mul(reach[k], i);
        if (!sub[x]) {
          sub[x] = true;
          reach.push_back(x);
        }
      }
    }
    for (ElementId u = 0; u < g.size(); ++u)
      t.expect(g.le_B(u, w) == sub[u], [&] { return "Bruhat table and subword test differ at " + pair_text(g, u, w); });
  }
}

void weak_lattices(Context& c, Tally& t) {
  const auto& g = c.g;
  const bool all = g.size() <= c.opts.pair_limit;
  for (auto [u, v] : c.pairs())
    for (Side side : {Side::Left, Side::Right}) {
      Order o = side == Side::Left ? Order::Left : Order::Right;
      ElementId m = g.meet(u, v, side), j = g.join(u, v, side);
      t.expect(g.le(o, m, u) && g.le(o, m, v) && g.le(o, u, j) && g.le(o, v, j),
               [&] { return "meet/join bounds fail at " + pair_text(g, u, v); });
      t.expect(g.meet(u, j, side) == u && g.join(u, m, side) == u,
               [&] { return "absorption fails at " + pair_text(g, u, v); });
      if (all)
        for (ElementId z = 0; z < g.size(); ++z) {
          if (g.le(o, z, u) && g.le(o, z, v)) t.expect(g.le(o, z, m), [&] { return "meet not greatest at " + pair_text(g, u, v); });
          if (g.le(o, u, z) && g.le(o, v, z)) t.expect(g.le(o, j, z), [&] { return "join not least at " + pair_text(g, u, v); });
        }
    }
}

void interval_types(Context& c, Tally& t) {
  const auto& g = c.g;
  for (ElementId w : c.elements())
    for (Side side : {Side::Left, Side::Right}) {
      Order o = side == Side::Left ? Order::Left : Order::Right;
      for (ElementId u : g.interval(g.identity(), w, o)) {
        ElementId type = g.interval_type(u, w, side);
        auto src = g.interval(u, w, o);
        auto dst = g.interval(g.identity(), type, o);
        // x -> x u^-1 on the left, x -> u^-1 x on the right
        auto shift = [&](ElementId x) {
          return side == Side::Left ? g.product(x, g.inverse(u)) : g.product(g.inverse(u), x);
        };
        std::vector<ElementId> image;
        for (ElementId x : src) image.push_back(shift(x));
        std::sort(image.begin(), image.end());
        t.expect(image == dst, [&] { return "interval [" + pair_text(g, u, w) + "] does not shift onto its type"; });
        std::vector<bool> in_src(g.size(), false), in_dst(g.size(), false);
        for (ElementId x : src) in_src[x] = true;
        for (ElementId x : dst) in_dst[x] = true;
        for (ElementId x : src)
          for (int i = 0; i < g.rank(); ++i) {
            ElementId y = side == Side::Left ? g.left_mul(i, x) : g.right_mul(x, i);
            ElementId sx = shift(x);
            ElementId sy = side == Side::Left ? g.left_mul(i, sx) : g.right_mul(sx, i);
            t.expect(in_src[y] == in_dst[sy] && (!in_src[y] || shift(y) == sy),
                     [&] { return "colored cover not preserved in [" + pair_text(g, u, w) + "]"; });
          }
      }
    }
}

void coset_factorizations(Context& c, Tally& t) {
  const auto& g = c.g;
  for (ElementId w : c.elements())
    for (IndexSet K = 0;; ++K) {
      auto r = g.min_coset_right(w, K);
      t.expect((g.right_descents(r.rep) & K) == 0 && g.in_parabolic(r.factor, K) &&
                   g.product(r.rep, r.factor) == w && g.length(w) == g.length(r.rep) + g.length(r.factor),
               [&] { return "right coset factorization of " + lbl(g, w) + " for K=" + format_index_set(K); });
      auto l = g.min_coset_left(w, K);
      t.expect((g.left_descents(l.rep) & K) == 0 && g.in_parabolic(l.factor, K) &&
                   g.product(l.factor, l.rep) == w && g.length(w) == g.length(l.rep) + g.length(l.factor),
               [&] { return "left coset factorization of " + lbl(g, w) + " for J=" + format_index_set(K); });
      if (K == g.full_index_set()) break;
    }
}

// posets ---------------------------------------------------------------------

void mobius_inversion(Context& c, Tally& t) {
  const auto& g = c.g;
  std::vector<Poset> posets;
  auto induced_order = [&](const std::vector<ElementId>& nodes, Order o) {
    std::vector<std::string> labels;
    for (ElementId x : nodes) labels.push_back(g.label(x));
    return Poset::from_relation(labels, [&](std::size_t a, std::size_t b) { return g.le(o, nodes[a], nodes[b]); });
  };
  if (g.size() <= 100) {
    std::vector<ElementId> all(g.size());
    std::iota(all.begin(), all.end(), ElementId{0});
    for (Order o : {Order::Bruhat, Order::Right}) posets.push_back(induced_order(all, o));
    posets.push_back(c.cutting().poset);
  } else {
    for (ElementId w : c.elements()) {
      auto lower = g.interval(g.identity(), w, Order::Bruhat);
      if (lower.size() <= 100 && lower.size() > 10) posets.push_back(induced_order(lower, Order::Bruhat));
      if (posets.size() == 5) break;
    }
  }
  std::uniform_int_distribution<int> value(-9, 9);
  for (const Poset& p : posets) {
    std::vector<long long> f(p.size()), s(p.size(), 0);
    for (auto& x : f) x = value(c.rng);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.leq(y, x)) s[x] += f[y];
    std::vector<std::vector<long long>> mu;
    for (std::size_t x = 0; x < p.size(); ++x) mu.push_back(p.mobius_from(x));
    for (std::size_t y = 0; y < p.size(); ++y) {
      long long back = 0;
      for (std::size_t x = 0; x < p.size(); ++x)
        if (p.leq(x, y)) back += mu[x][y] * s[x];
      t.expect(back == f[y], [&] { return "Moebius inversion fails at node " + p.label(y); });
    }
  }
  if (posets.empty()) t.skip("no poset with at most 100 nodes");
}

void birkhoff_roundtrip(Context& c, Tally& t) {
  const auto& g = c.g;
  const Poset& cp = c.cutting().poset;
  for (ElementId w : c.elements()) {
    std::vector<std::size_t> nodes;
    for (ElementId u : cutting_points(g, w)) nodes.push_back(u);
    Poset L = cp.induced(nodes);
    auto irr = L.join_irreducibles();
    if (irr.size() > 25) continue;
    Poset P = L.induced(irr);
    Poset O = P.lower_sets();
    t.expect(O.size() == L.size(), [&] { return "lattice of lower sets has the wrong size below " + lbl(g, w); });
    if (O.size() != L.size()) continue;
    std::map<std::string, std::size_t> by_label;
    for (std::size_t k = 0; k < O.size(); ++k) by_label[O.label(k)] = k;
    std::vector<std::size_t> image(L.size());
    std::set<std::size_t> hit;
    for (std::size_t x = 0; x < L.size(); ++x) {
      std::string key = "{";
      bool first = true;
      for (std::size_t j = 0; j < irr.size(); ++j)
        if (L.leq(irr[j], x)) {
          key += (first ? "" : ",") + P.label(j);
          first = false;
        }
      key += "}";
      auto it = by_label.find(key);
      t.expect(it != by_label.end(), [&] { return "join-irreducibles below " + L.label(x) + " are not a lower set"; });
      if (it == by_label.end()) break;
      image[x] = it->second;
      hit.insert(it->second);
    }
    if (t.failed()) return;
    t.expect(hit.size() == L.size(), [&] { return "Birkhoff map not injective below " + lbl(g, w); });
    for (std::size_t x = 0; x < L.size(); ++x)
      for (std::size_t y = 0; y < L.size(); ++y)
        t.expect(L.leq(x, y) == O.leq(image[x], image[y]),
                 [&] { return "Birkhoff map not an order isomorphism below " + lbl(g, w); });
  }
}

// blocks ---------------------------------------------------------------------

void block_closure(Context& c, Tally& t) {
  const auto& g = c.g;
  for (ElementId w : c.elements()) {
    auto bl = all_blocks(g, w);
    std::map<IndexSet, const BlockData*> byK;
    for (const auto& b : bl) byK[b.K] = &b;
    for (const auto& a : bl)
      for (const auto& b : bl) {
        auto u = byK.find(a.K | b.K), i = byK.find(a.K & b.K);
        t.expect(u != byK.end() && i != byK.end() && u->second->J == (a.J | b.J) && i->second->J == (a.J & b.J),
                 [&] { return "blocks of " + lbl(g, w) + " not closed under union and intersection"; });
      }
  }
}

void block_antimorphism(Context& c, Tally& t) {
  const auto& g = c.g;
  for (ElementId w : c.elements()) {
    for (IndexSet a = 0; a <= g.full_index_set(); ++a)
      for (IndexSet b = 0; b <= g.full_index_set(); ++b) {
        ElementId ra = g.min_coset_right(w, a).rep, rb = g.min_coset_right(w, b).rep;
        t.expect(g.min_coset_right(w, a & b).rep == g.join(ra, rb, Side::Right),
                 [&] { return "w^(K cap K') is not the right join at " + lbl(g, w); });
      }
    auto bl = all_blocks(g, w);
    for (const auto& a : bl)
      for (const auto& b : bl)
        t.expect(g.min_coset_right(w, a.K | b.K).rep == g.meet(a.cutting_point, b.cutting_point, Side::Right),
                 [&] { return "w^(K cup K') is not the right meet at " + lbl(g, w); });
  }
}

void cutting_order(Context& c, Tally& t) {
  const auto& g = c.g;
  for (ElementId w : c.elements()) {
    t.expect(cutting_le(g, w, w), [&] { return "not reflexive at " + lbl(g, w); });
    auto pts = cutting_points(g, w);
    for (ElementId v : pts) {
      t.expect(g.le_L(v, w) && g.le_R(v, w), [&] { return "cutting point outside both weak orders: " + pair_text(g, v, w); });
      if (v != w) t.expect(!cutting_le(g, w, v), [&] { return "not antisymmetric at " + pair_text(g, v, w); });
      for (ElementId u : cutting_points(g, v))
        t.expect(cutting_le(g, u, w), [&] { return "not transitive through " + lbl(g, v); });
    }
  }
}

void cutting_intervals(Context& c, Tally& t) {
  const auto& g = c.g;
  const Poset& P = c.cutting().poset;
  for (ElementId w : c.elements())
    for (ElementId u : cutting_points(g, w)) {
      auto I = P.interval(u, w);
      Poset sub = P.induced(I);
      t.expect(sub.is_distributive(), [&] { return "interval [" + pair_text(g, u, w) + "] is not distributive"; });
      for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = 0; b < I.size(); ++b)
          t.expect(sub.leq(a, b) == g.le_R(ElementId(I[a]), ElementId(I[b])),
                   [&] { return "interval [" + pair_text(g, u, w) + "] is not induced from right order"; });
    }
}

void cutting_semilattice(Context& c, Tally& t) {
  const auto& g = c.g;
  const Poset& P = c.cutting().poset;
  t.expect(P.is_meet_semilattice(), [] { return std::string("cutting poset is not a meet-semilattice"); });
  t.expect(P.is_meet_distributive(), [] { return std::string("cutting poset is not meet-distributive"); });
  for (ElementId u : c.elements()) {
    auto mu = P.mobius_from(u);
    for (ElementId w = 0; w < g.size(); ++w)
      if (P.leq(u, w))
        t.expect(mobius_cutting(g, u, w) == mu[w], [&] { return "closed Moebius formula differs at " + pair_text(g, u, w); });
  }
}

void matrix_block_bijection(Context& c, Tally& t) {
  const auto& g = c.g;
  if (!g.descriptor().is_symmetric_group()) return t.skip("type A only");
  for (ElementId w : c.elements()) {
    std::vector<int> p;
    for (auto x : g.action(w)) p.push_back(x + 1);
    for (IndexSet K = 0;; ++K) {
      bool block = true, reduced = true, trivial = true;
      for (int i = 0; i < g.rank();) {
        if (!(K >> i & 1u)) {
          ++i;
          continue;
        }
        int j = i;
        while (j < g.rank() && (K >> j & 1u)) ++j;
        if (!is_matrix_block(p, i + 1, j + 1)) {
          block = false;
        } else {
          auto mb = matrix_block_at(p, i + 1, j + 1);
          reduced = reduced && mb.connected;
          for (std::size_t k = 0; k < mb.pattern.size(); ++k)
            if (mb.pattern[k] != int(k) + 1) trivial = false;
        }
        i = j;
      }
      auto b = is_right_block(g, w, K);
      t.expect(bool(b) == block && (!b || (b->reduced == reduced && b->trivial == trivial)),
               [&] { return "blocks and matrix-blocks differ at " + lbl(g, w) + ", K=" + format_index_set(K); });
      if (K == g.full_index_set()) break;
    }
  }
}

void tiling(Context& c, Tally& t) {
  const auto& g = c.g;
  for (ElementId w : c.elements()) {
    auto whole = g.interval(g.identity(), w, Order::Right);
    for (const auto& b : all_blocks(g, w)) {
      auto f = g.min_coset_left(w, b.J);
      std::vector<ElementId> prod;
      for (ElementId u : g.interval(g.identity(), f.factor, Order::Right))
        for (ElementId v : g.interval(g.identity(), f.rep, Order::Right)) prod.push_back(g.product(u, v));
      std::sort(prod.begin(), prod.end());
      t.expect(std::adjacent_find(prod.begin(), prod.end()) == prod.end() && prod == whole,
               [&] { return "tiling fails for " + lbl(g, w) + ", J=" + format_index_set(b.J); });
    }
  }
}

void birkhoff_indexing(Context& c, Tally& t) {
  const auto& g = c.g;
  for (ElementId w : c.elements()) {
    auto pts = cutting_points(g, w);
    std::vector<IndexSet> keys;
    for (ElementId u : pts) keys.push_back(g.full_index_set() & ~g.right_descents(u));
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = 0; b < pts.size(); ++b) {
        t.expect(std::count(keys.begin(), keys.end(), keys[a] | keys[b]) == 1 &&
                     std::count(keys.begin(), keys.end(), keys[a] & keys[b]) == 1,
                 [&] { return "descent complements below " + lbl(g, w) + " are not a lattice of sets"; });
        t.expect(cutting_le(g, pts[a], pts[b]) == ((keys[b] & ~keys[a]) == 0),
                 [&] { return "descent complements not antiisomorphic at " + pair_text(g, pts[a], pts[b]); });
      }
  }
}

// fmonoid --------------------------------------------------------------------

template <class Body>
void for_functions(Context& c, Tally& t, Body body) {
  const TransformationMonoid* m = c.monoid();
  if (!m) return t.skip(c.monoid_skip());
  for (std::size_t id : c.functions(*m)) body(m->function(id), id);
}

void left_order_preservation(Context& c, Tally& t) {
  const auto& g = c.g;
  for_functions(c, t, [&](const WFunction& f, std::size_t id) {
    for (ElementId w = 0; w < g.size(); ++w)
      for (int j = 0; j < g.rank(); ++j) {
        ElementId sw = g.left_mul(j, w);
        t.expect(f[sw] == f[w] || f[sw] == g.left_mul(j, f[w]),
                 [&] { return "cover image rule fails for element " + std::to_string(id) + " at " + lbl(g, w); });
      }
    for (ElementId u = 0; u < g.size(); ++u)
      for (ElementId v = 0; v < g.size(); ++v)
        if (g.le_L(u, v)) t.expect(g.le_L(f[u], f[v]), [&] { return "left order not preserved by element " + std::to_string(id); });
  });
}

void bruhat_preservation(Context& c, Tally& t) {
  const auto& g = c.g;
  for_functions(c, t, [&](const WFunction& f, std::size_t id) {
    for (ElementId u = 0; u < g.size(); ++u)
      for (ElementId v = 0; v < g.size(); ++v)
        if (g.le_B(u, v)) t.expect(g.le_B(f[u], f[v]), [&] { return "Bruhat order not preserved by element " + std::to_string(id); });
  });
}

void regressive_extensive(Context& c, Tally& t) {
  const auto& g = c.g;
  for_functions(c, t, [&](const WFunction& f, std::size_t id) {
    for (ElementId w = 0; w < g.size(); ++w) {
      if (f[g.identity()] == g.identity())
        t.expect(g.le_B(f[w], w), [&] { return "element " + std::to_string(id) + " fixes 1 but is not regressive"; });
      if (f[g.w0()] == g.w0())
        t.expect(g.le_B(w, f[w]), [&] { return "element " + std::to_string(id) + " fixes w0 but is not extensive"; });
    }
  });
}

void length_contraction(Context& c, Tally& t) {
  const auto& g = c.g;
  for_functions(c, t, [&](const WFunction& f, std::size_t id) {
    for (ElementId u = 0; u < g.size(); ++u)
      for (ElementId v = 0; v < g.size(); ++v)
        if (g.le_L(u, v))
          t.expect(g.length(f[v]) - g.length(f[u]) <= g.length(v) - g.length(u),
                   [&] { return "element " + std::to_string(id) + " is not length contracting"; });
  });
}

void image_shapes(Context& c, Tally& t) {
  const auto& g = c.g;
  for_functions(c, t, [&](const WFunction& f, std::size_t id) {
    auto img = image_set(f);
    if (is_idempotent(f))
      t.expect(is_left_interval(g, img), [&] { return "idempotent " + std::to_string(id) + " has a non-interval image"; });
    std::size_t mins = 0, maxs = 0;
    for (ElementId x : img) {
      bool mn = true, mx = true;
      for (ElementId y : img) {
        if (y != x && g.le_L(y, x)) mn = false;
        if (y != x && g.le_L(x, y)) mx = false;
      }
      mins += mn;
      maxs += mx;
    }
    t.expect(mins == 1 && maxs == 1, [&] { return "image of element " + std::to_string(id) + " lacks a unique min or max"; });
    // connected through left covers inside the image
    std::vector<bool> in(g.size(), false), seen(g.size(), false);
    for (ElementId x : img) in[x] = true;
    std::vector<ElementId> queue{img.front()};
    seen[img.front()] = true;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int i = 0; i < g.rank(); ++i) {
        ElementId y = g.left_mul(i, queue[h]);
        if (in[y] && !seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    t.expect(queue.size() == img.size(), [&] { return "image of element " + std::to_string(id) + " is not connected"; });
  });
}

void fixed_point_sets(Context& c, Tally& t) {
  const auto& g = c.g;
  for_functions(c, t, [&](const WFunction& f, std::size_t id) {
    std::vector<ElementId> fixed;
    for (ElementId w = 0; w < g.size(); ++w)
      if (f[w] == w) fixed.push_back(w);
    if (!fixed.empty())
      t.expect(is_left_interval(g, fixed), [&] { return "fixed points of element " + std::to_string(id) + " are not an interval"; });
  });
}

void fiber_contraction(Context& c, Tally& t) {
  const auto& g = c.g;
  for_functions(c, t, [&](const WFunction& f, std::size_t id) {
    t.expect(check_fiber_contraction(g, f), [&] { return "fiber contraction fails for element " + std::to_string(id); });
    t.expect(reconstruct(g, fibers(f), f[g.identity()]) == f,
             [&] { return "element " + std::to_string(id) + " is not determined by its fibers and 1.f"; });
  });
}

void r_classes_are_fibers(Context& c, Tally& t) {
  const TransformationMonoid* m = c.monoid();
  const GreenStructure* gs = c.green_structure();
  if (!m || !gs) return t.skip(c.monoid_skip());
  std::map<std::vector<std::vector<ElementId>>, std::uint32_t> by_fibers;
  for (std::size_t id = 0; id < m->size(); ++id) {
    auto key = fibers(m->function(id));
    std::sort(key.begin(), key.end());
    auto [it, fresh] = by_fibers.emplace(std::move(key), gs->R[id]);
    t.expect(fresh || it->second == gs->R[id], [&] { return "equal fibers in different R-classes at " + std::to_string(id); });
  }
  t.expect(by_fibers.size() == gs->nR, [] { return std::string("different fibers in one R-class"); });
}

void j_order_on_idempotents(Context& c, Tally& t) {
  const auto& g = c.g;
  const TransformationMonoid* m = c.monoid();
  const GreenStructure* gs = c.green_structure();
  if (!m || !gs) return t.skip(c.monoid_skip());
  std::vector<std::size_t> idem;
  for (std::size_t f = 0; f < m->size(); ++f)
    if (m->is_idempotent(f)) idem.push_back(f);
  std::vector<ElementId> type(m->size());
  for (std::size_t e : idem) {
    auto img = image_set(m->function(e));
    ElementId lo = img.front(), hi = img.front();
    for (ElementId x : img) {
      if (g.length(x) < g.length(lo)) lo = x;
      if (g.length(x) > g.length(hi)) hi = x;
    }
    type[e] = g.product(hi, g.inverse(lo));
  }
  std::vector<std::size_t> tops = idem;
  if (tops.size() * m->size() > 20'000'000) {
    std::shuffle(tops.begin(), tops.end(), c.rng);
    tops.resize(std::max<std::size_t>(1, 20'000'000 / m->size()));
  }
  const std::size_t k = m->generator_count();
  for (std::size_t e : tops) {
    // two-sided ideal M e M
    std::vector<bool> in(m->size(), false);
    std::vector<std::size_t> queue{e};
    in[e] = true;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t n : {m->right(queue[h], s), m->left(s, queue[h])})
          if (!in[n]) {
            in[n] = true;
            queue.push_back(n);
          }
    for (std::size_t f : idem)
      t.expect(in[f] == c.le_LR(type[f], type[e]),
               [&] { return "J-order and interval types disagree for idempotents " + std::to_string(f) + ", " + std::to_string(e); });
  }
  // e_w is a transversal of the regular J-classes
  std::vector<int> hits(gs->nJ, 0);
  for (ElementId w = 0; w < g.size(); ++w) {
    auto id = m->find(e_w(g, w));
    t.expect(bool(id), [&] { return "e_" + lbl(g, w) + " is not in the monoid"; });
    if (id) ++hits[gs->J[*id]];
  }
  for (std::size_t j = 0; j < gs->nJ; ++j)
    t.expect(hits[j] == (gs->regular[j] ? 1 : 0), [&] { return "e_w family is not a transversal of regular J-classes"; });
}

void e_family(Context& c, Tally& t) {
  const auto& g = c.g;
  for (ElementId w : c.elements()) {
    auto e = e_w(g, w);
    t.expect(is_idempotent(e), [&] { return "e_" + lbl(g, w) + " is not idempotent"; });
    t.expect(image_set(e) == g.interval(g.identity(), w, Order::Left), [&] { return "image of e_" + lbl(g, w) + " is not [1,w]_L"; });
    for (ElementId x = 0; x < g.size(); ++x) {
      ElementId best = g.identity();
      for (ElementId z = 0; z < g.size(); ++z)
        if (g.le_B(z, x) && g.le_L(z, w) && g.length(z) > g.length(best)) best = z;
      t.expect(e[x] == best, [&] { return "x.e_w is not the Bruhat maximum at " + pair_text(g, x, w); });
    }
  }
}

void aperiodicity(Context& c, Tally& t) {
  const TransformationMonoid* m = c.monoid();
  if (!m) return t.skip(c.monoid_skip());
  t.expect(is_aperiodic(*m), [] { return std::string("monoid is not aperiodic"); });
}

void m1_idempotent_order(Context& c, Tally& t) {
  const auto& g = c.g;
  for (auto [u, v] : c.pairs()) {
    auto eu = e_w(g, u), ev = e_w(g, v);
    auto p = compose(eu, ev);
    t.expect((p == eu) == g.le_L(u, v), [&] { return "e_u e_v = e_u does not match left order at " + pair_text(g, u, v); });
    t.expect(omega(p) == e_w(g, g.meet(u, v, Side::Left)), [&] { return "(e_u e_v)^omega != e_(u meet v) at " + pair_text(g, u, v); });
  }
}

void m1_generating_set(Context& c, Tally& t) {
  const auto& g = c.g;
  const TransformationMonoid* m1 = c.borel_monoid(BorelFix::Identity);
  if (!m1) return t.skip(c.monoid_skip());
  std::set<WFunction> expect, got;
  for (ElementId w = 0; w < g.size(); ++w) {
    ElementId x = g.product(g.inverse(w), g.w0());
    if (std::popcount(g.right_descents(x)) <= 1 && w != g.w0()) expect.insert(e_w(g, w));
  }
  auto irr = irreducibles(*m1);
  for (auto f : irr) got.insert(m1->function(f));
  t.expect(got == expect, [] { return std::string("irreducible elements of M1 are not the Grassmannian e_w"); });
  if (g.descriptor().is_symmetric_group()) {
    // counting the identity e_w0, the generating set of S_n has 2^n - n members
    const std::size_t n = std::size_t(g.rank()) + 1;
    t.expect(irr.size() + 1 == (std::size_t{1} << n) - n, [&] { return "generating set size " + std::to_string(irr.size() + 1); });
  }
}

void m1_radical(Context& c, Tally& t) {
  const TransformationMonoid* m1 = c.borel_monoid(BorelFix::Identity);
  if (!m1) return t.skip(c.monoid_skip());
  if (m1->size() > c.opts.linear_cap) return t.skip("M1 above the linear algebra cap");
  auto rad = radical_basis(*m1, c.opts.linear_cap);
  std::size_t idem = 0;
  for (std::size_t x = 0; x < m1->size(); ++x) idem += m1->is_idempotent(x);
  t.expect(rad.size() == m1->size() - idem, [&] { return "radical of K M1 has dimension " + std::to_string(rad.size()); });
  EchelonBasis<RationalField> span(RationalField{}, m1->size());
  for (const auto& v : rad) span.insert(v);
  EchelonBasis<RationalField> omegas(RationalField{}, m1->size());
  for (std::size_t x = 0; x < m1->size(); ++x) {
    if (m1->is_idempotent(x)) continue;
    std::vector<mpq_class> v(m1->size());
    v[omega(*m1, x)] += 1;
    v[x] -= 1;
    t.expect(span.contains(v), [&] { return "f^omega - f outside the radical for element " + std::to_string(x); });
    omegas.insert(std::move(v));
  }
  t.expect(omegas.dimension() == rad.size(), [] { return std::string("the f^omega - f do not span the radical"); });
  for (std::size_t a = 0; a < m1->generator_count(); ++a)
    for (std::size_t b = 0; b < m1->generator_count(); ++b) {
      std::vector<mpq_class> v(m1->size());
      v[m1->multiply(m1->generator(a), m1->generator(b))] += 1;
      v[m1->multiply(m1->generator(b), m1->generator(a))] -= 1;
      t.expect(span.contains(v), [] { return std::string("generators of M1 do not commute modulo the radical"); });
    }
}

void lfix_rfix(Context& c, Tally& t) {
  const auto& g = c.g;
  const TransformationMonoid* m1 = c.borel_monoid(BorelFix::Identity);
  if (!m1) return t.skip(c.monoid_skip());
  for (std::size_t x : c.functions(*m1)) {
    auto f = m1->function(x);
    ElementId l = lfix(g, f), r = rfix(g, f);
    t.expect(g.le_B(r, l) && ((l == r) == m1->is_idempotent(x)),
             [&] { return "lfix/rfix rule fails for element " + std::to_string(x); });
  }
}

// reptheory ------------------------------------------------------------------

PartialMap then(const PartialMap& a, const PartialMap& b) {
  PartialMap out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[x] == kNone ? kNone : b[a[x]];
  return out;
}

void generator_relations(Context& c, Tally& t) {
  const auto& g = c.g;
  const int r = g.rank();
  std::vector<std::vector<int>> order(r, std::vector<int>(r, 1));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      ElementId x = g.identity();
      int m = 0;
      do {
        x = g.right_mul(g.right_mul(x, i), j);
        ++m;
      } while (x != g.identity());
      order[i][j] = m;
    }
  for (ElementId w : c.elements()) {
    auto T = translation_action(g, w);
    const std::size_t d = T.dimension();
    for (const auto* maps : {&T.pi, &T.opi})
      for (int i = 0; i < r; ++i) {
        const auto& p = (*maps)[i];
        t.expect(then(p, p) == p, [&] { return "generator " + std::to_string(i + 1) + " is not idempotent on T_" + lbl(g, w); });
        for (int j = i + 1; j < r; ++j) {
          PartialMap a = T.act({}), b = a;
          for (int k = 0; k < order[i][j]; ++k) {
            a = then(a, (*maps)[k % 2 ? j : i]);
            b = then(b, (*maps)[k % 2 ? i : j]);
          }
          t.expect(a == b, [&] { return "braid relation fails on T_" + lbl(g, w); });
        }
      }
    // s_i = pi_i + opi_i - 1 squares to the identity
    for (int i = 0; i < r; ++i)
      for (std::size_t x = 0; x < d; ++x) {
        std::map<std::uint32_t, long long> v{{std::uint32_t(x), 1}}, s1, s2;
        auto apply = [&](const std::map<std::uint32_t, long long>& in, std::map<std::uint32_t, long long>& out) {
          for (auto [k, a] : in) {
            if (T.pi[i][k] != kNone) out[T.pi[i][k]] += a;
            if (T.opi[i][k] != kNone) out[T.opi[i][k]] += a;
            out[k] -= a;
          }
          std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        };
        apply(v, s1);
        apply(s1, s2);
        t.expect(s2 == v, [&] { return "s_" + std::to_string(i + 1) + " does not square to 1 on T_" + lbl(g, w); });
      }
  }
}

void simple_count(Context& c, Tally& t) {
  const GreenStructure* gs = c.green_structure();
  if (!gs) return t.skip(c.monoid_skip());
  std::size_t regular = 0;
  for (bool r : gs->regular) regular += r;
  t.expect(regular == c.g.size(), [&] { return std::to_string(regular) + " regular J-classes"; });
}

void translation_modules_distinct(Context& c, Tally& t) {
  const auto& g = c.g;
  auto ws = c.elements();
  std::map<ElementId, TranslationModule> mods;
  auto module = [&](ElementId x) -> const TranslationModule& {
    auto it = mods.find(x);
    if (it == mods.end()) it = mods.emplace(x, translation_action(g, x)).first;
    return it->second;
  };
  for (ElementId w : ws) {
    std::vector<std::size_t> word;
    for (int i : g.reduced_word(w)) word.push_back(std::size_t(i));
    t.expect(module(w).act(word)[0] == module(w).position[w], [&] { return "pi_w does not send 1 to w on T_" + lbl(g, w); });
    for (ElementId v : ws) {
      if (v == w || g.length(v) > g.length(w)) continue;
      t.expect(module(v).act(word)[0] == kNone, [&] { return "pi_w does not kill 1 in T_" + pair_text(g, v, w); });
    }
  }
}

void induced_characters(Context& c, Tally& t) {
  const auto& g = c.g;
  const TransformationMonoid* m = c.monoid();
  if (!m) return t.skip(c.monoid_skip());
  for (ElementId w : c.elements()) {
    auto T = translation_action(g, w);
    auto ind = character_T_restricted(g, w);
    for (ElementId u = 0; u < g.size(); ++u)
      t.expect(ind[u] == (g.le_R(u, w) ? 1 : 0), [&] { return "restriction of T_" + lbl(g, w) + " is not [1,w]_R"; });
    for (ElementId v = 0; v < g.size(); ++v) {
      auto e = e_ab(g, v, g.w0());
      auto id = m->find(e);
      t.expect(bool(id), [&] { return "e_(v,w0) missing for v=" + lbl(g, v); });
      if (!id) continue;
      auto map = T.act(m->word(*id));
      long long trace = 0, expect = 0;
      for (std::size_t k = 0; k < map.size(); ++k) trace += map[k] == k;
      for (ElementId u = 0; u < g.size(); ++u) expect += ind[u] * (e[u] == u);
      t.expect(trace == expect, [&] { return "character of T_" + lbl(g, w) + " differs at e_(" + lbl(g, v) + ",w0)"; });
    }
  }
}

void decomposition_shape(Context& c, Tally& t) {
  const auto& g = c.g;
  if (!c.exhaustive()) return t.skip("group above the exhaustive limit");
  auto D = decomposition_matrix(g);
  for (ElementId w = 0; w < g.size(); ++w) {
    std::size_t sum = 0;
    for (ElementId u = 0; u < g.size(); ++u) {
      t.expect((D[w][u] == 0 || D[w][u] == 1) && (!D[w][u] || g.le_R(u, w)) && (u != w || D[w][u] == 1),
               [&] { return "decomposition entry (" + pair_text(g, w, u) + ") breaks unitriangularity"; });
      sum += D[w][u];
    }
    t.expect(sum == dim_simple(g, w), [&] { return "row sum of " + lbl(g, w) + " differs from dim S_w"; });
  }
}

void cartan_determinant(Context& c, Tally& t) {
  const auto& g = c.g;
  const TransformationMonoid* m = c.monoid();
  if (!m) return t.skip(c.monoid_skip());
  if (m->size() > c.opts.cartan_cap) return t.skip("biHecke monoid above the q-Cartan cap (use --slow)");
  LinearOptions lo;
  lo.mode = c.opts.modular ? Arithmetic::Modular : Arithmetic::Exact;
  lo.exact_cap = lo.modular_cap = std::max(c.opts.cartan_cap, c.opts.linear_cap);
  lo.seed = c.opts.seed;
  lo.progress = c.opts.progress;
  auto one = qcartan_full(g, *m, lo).at_one();
  RationalMatrix a(g.size(), g.size());
  // unitriangular for some ordering: unit diagonal, acyclic off-diagonal support
  std::vector<int> indegree(g.size(), 0);
  for (ElementId u = 0; u < g.size(); ++u)
    for (ElementId v = 0; v < g.size(); ++v) {
      a(u, v) = mpq_class(std::to_string(one[u][v]));
      if (u == v) t.expect(one[u][v] == 1, [&] { return "diagonal Cartan entry at " + lbl(g, u) + " is not 1"; });
      else if (one[u][v]) ++indegree[v];
    }
  std::vector<ElementId> ready;
  for (ElementId v = 0; v < g.size(); ++v)
    if (!indegree[v]) ready.push_back(v);
  std::size_t placed = 0;
  while (!ready.empty()) {
    ElementId u = ready.back();
    ready.pop_back();
    ++placed;
    for (ElementId v = 0; v < g.size(); ++v)
      if (v != u && one[u][v] && --indegree[v] == 0) ready.push_back(v);
  }
  t.expect(placed == g.size(), [] { return std::string("no ordering makes the Cartan matrix unitriangular"); });
  t.expect(determinant(a) == 1, [] { return std::string("Cartan determinant is not 1"); });
}

void antisymmetric_submodules(Context& c, Tally& t) {
  const auto& g = c.g;
  for (ElementId w : c.elements()) {
    auto Tw = translation_action(g, w);
    for (IndexSet J = 0;; ++J) {
      ElementId v = g.min_coset_left(w, J).rep;
      auto p = antisym_submodule(g, w, J);
      t.expect(p.has_value() == cutting_le(g, v, w),
               [&] { return "P_J submodule test disagrees with cutting points at " + lbl(g, w) + ", J=" + format_index_set(J); });
      if (p) {
        auto Tv = translation_action(g, v);
        t.expect(p->size() == Tv.dimension(), [&] { return "dim P_J != dim T_(^J w) at " + lbl(g, w); });
        if (p->size() == Tv.dimension())
          for (int which = 0; which < 2; ++which)
            for (int i = 0; i < g.rank(); ++i)
              for (std::size_t u = 0; u < Tv.dimension(); ++u) {
                const auto& b = (*p)[u];
                const auto& wm = which ? Tw.opi[i] : Tw.pi[i];
                std::uint32_t target = which ? Tv.opi[i][u] : Tv.pi[i][u];
                std::vector<mpq_class> image(b.size()), expect(b.size());
                for (std::size_t k = 0; k < b.size(); ++k)
                  if (wm[k] != kNone) image[wm[k]] += b[k];
                if (target != kNone) expect = (*p)[target];
                t.expect(image == expect, [&] { return "P_J is not intertwined with T_(^J w) at " + lbl(g, w); });
              }
      }
      if (J == g.full_index_set()) break;
    }
  }
}

void simple_dimensions(Context& c, Tally& t) {
  const auto& g = c.g;
  for (ElementId w : c.elements())
    t.expect(dim_simple(g, w) == dim_simple_linear(g, w), [&] { return "dim S_w methods differ at " + lbl(g, w); });
}

void whbihecke_dimensions(Context& c, Tally& t) {
  const auto& g = c.g;
  std::vector<ElementId> ws;
  if (g.size() <= 6) {
    for (ElementId w = 0; w < g.size(); ++w) ws.push_back(w);
  } else {
    ws.push_back(g.w0());
    while (ws.size() < 10) ws.push_back(c.random_element());
  }
  for (ElementId w : ws) {
    std::size_t linear;
    try {
      linear = whbihecke_dim_linear(g, w, c.opts.operator_cap);
    } catch (const SizeError&) {
      continue;
    }
    t.expect(whbihecke_dim(g, w) == linear, [&] { return "w-biHecke dimension differs at " + lbl(g, w); });
  }
  if (t.cases() == 0) t.skip("operator sets above the cap");
}

void quiver_support(Context& c, Tally& t) {
  const auto& g = c.g;
  const TransformationMonoid* m0 = c.borel_monoid(BorelFix::LongestElement);
  if (!m0) return t.skip(c.monoid_skip());
  if (m0->size() > c.opts.linear_cap) return t.skip("Borel submonoid above the linear algebra cap");
  auto edges = quiver_m1(g);
  t.expect(edges == quiver_m1_monoid(g), [] { return std::string("interval and monoid quivers differ"); });
  LinearOptions lo;
  lo.exact_cap = c.opts.linear_cap;
  auto q = qcartan_borel(g, *m0, lo);
  std::vector<QuiverEdge> support;
  for (ElementId u = 0; u < g.size(); ++u)
    for (ElementId v = 0; v < g.size(); ++v)
      if (q.at(u, v).size() > 1 && q.at(u, v)[1]) support.push_back({g.product(g.w0(), u), g.product(g.w0(), v)});
  std::sort(support.begin(), support.end());
  t.expect(edges == support, [] { return std::string("quiver differs from the degree one part of the q-Cartan matrix"); });
}

// cli ------------------------------------------------------------------------

void cache_roundtrip(Context& c, Tally& t) {
  const auto& g = c.g;
  const TransformationMonoid* m = c.monoid();
  if (!m) return t.skip(c.monoid_skip());
  namespace fs = std::filesystem;
  fs::path dir = c.opts.scratch_dir.empty() ? fs::temp_directory_path() : fs::path(c.opts.scratch_dir);
  fs::path path = dir / ("bihecke_check_" + std::to_string(c.rng()) + ".bin");
  save_monoid(path.string(), g, *m);
  auto back = load_monoid(path.string(), g, c.opts.threads);
  std::error_code ec;
  fs::remove(path, ec);
  t.expect(bool(back), [] { return std::string("saved cache could not be read"); });
  if (!back) return;
  t.expect(back->raw_images() == m->raw_images() && back->generator_labels() == m->generator_labels(),
           [] { return std::string("element table changed in the cache round trip"); });
  for (std::size_t f = 0; f < m->size(); ++f)
    t.expect(back->word(f) == m->word(f), [&] { return "ids changed in the cache round trip at " + std::to_string(f); });
}

using Check = void (*)(Context&, Tally&);

const std::vector<std::pair<std::string, Check>>& registry() {
  static const std::vector<std::pair<std::string, Check>> checks{
      {"coxeter.length", length_bounds},
      {"coxeter.bruhat-subword", bruhat_subword},
      {"coxeter.weak-lattices", weak_lattices},
      {"coxeter.interval-types", interval_types},
      {"coxeter.coset-factorization", coset_factorizations},
      {"posets.mobius-inversion", mobius_inversion},
      {"posets.birkhoff", birkhoff_roundtrip},
      {"blocks.closure", block_closure},
      {"blocks.antimorphism", block_antimorphism},
      {"blocks.cutting-order", cutting_order},
      {"blocks.cutting-intervals", cutting_intervals},
      {"blocks.cutting-semilattice", cutting_semilattice},
      {"blocks.matrix-blocks", matrix_block_bijection},
      {"blocks.tiling", tiling},
      {"blocks.birkhoff-indexing", birkhoff_indexing},
      {"fmonoid.left-order", left_order_preservation},
      {"fmonoid.bruhat", bruhat_preservation},
      {"fmonoid.regressive", regressive_extensive},
      {"fmonoid.length-contraction", length_contraction},
      {"fmonoid.images", image_shapes},
      {"fmonoid.fixed-points", fixed_point_sets},
      {"fmonoid.fiber-contraction", fiber_contraction},
      {"fmonoid.r-classes", r_classes_are_fibers},
      {"fmonoid.j-order", j_order_on_idempotents},
      {"fmonoid.e-family", e_family},
      {"fmonoid.aperiodic", aperiodicity},
      {"fmonoid.m1-order", m1_idempotent_order},
      {"fmonoid.m1-generators", m1_generating_set},
      {"fmonoid.m1-radical", m1_radical},
      {"fmonoid.lfix-rfix", lfix_rfix},
      {"reptheory.relations", generator_relations},
      {"reptheory.simple-count", simple_count},
      {"reptheory.translation-distinct", translation_modules_distinct},
      {"reptheory.induced-characters", induced_characters},
      {"reptheory.decomposition", decomposition_shape},
      {"reptheory.cartan-determinant", cartan_determinant},
      {"reptheory.antisymmetric", antisymmetric_submodules},
      {"reptheory.simple-dimensions", simple_dimensions},
      {"reptheory.whbihecke", whbihecke_dimensions},
      {"reptheory.quiver", quiver_support},
      {"cli.cache-roundtrip", cache_roundtrip},
  };
  return checks;
}

bool selected(const std::string& name, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& p : only)
    if (name.compare(0, p.size(), p) == 0) return true;
  return false;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

std::vector<PropertyResult> run_property_suite(const CoxeterGroup& g, const PropertyOptions& opts) {
  Context ctx(g, opts);
  std::vector<PropertyResult> out;
  for (const auto& [name, check] : registry()) {
    if (!selected(name, opts.only)) continue;
    if (opts.progress) opts.progress(name);
    ctx.reseed(name);
    Tally tally;
    auto start = std::chrono::steady_clock::now();
    PropertyResult r;
    r.name = name;
    try {
      check(ctx, tally);
      r.status = tally.failed() ? PropertyStatus::Fail : tally.skipped() ? PropertyStatus::Skip : PropertyStatus::Pass;
      r.detail = tally.failed() || tally.skipped() ? tally.detail() : "";
    } catch (const std::exception& e) {
      r.status = PropertyStatus::Fail;
      r.detail = std::string("error: ") + e.what();
    }
    r.cases = tally.cases();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_property_result(const PropertyResult& r) {
  std::ostringstream os;
  os << (r.status == PropertyStatus::Pass ? "ok  " : r.status == PropertyStatus::Fail ? "FAIL" : "skip") << ' ' << r.name
     << " (" << r.cases << " cases";
  char buf[32];
  std::snprintf(buf, sizeof buf, ", %.2fs)", r.seconds);
  os << buf;
  if (!r.detail.empty()) os << ": " << r.detail;
  return os.str();
}

}  // namespace bihecke

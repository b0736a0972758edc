#include "bihecke/fmonoid.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <fstream>
#include <map>
#include <numeric>
#include <thread>

namespace bihecke {

namespace {

constexpr std::uint32_t kNone = 0xFFFFFFFFu;

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t, std::size_t, unsigned)>& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 256) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t b = t * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back(fn, b, e, t);
  }
  for (auto& th : pool) th.join();
}

// Strongly connected components; out-edges of v are next(v, k) for k < degree.
// Components are numbered by their smallest member.
std::vector<std::uint32_t> scc(std::size_t n, std::size_t degree,
                               const std::function<std::size_t(std::size_t, std::size_t)>& next, std::size_t& count) {
  std::vector<std::uint32_t> index(n, kNone), low(n, 0), comp(n, kNone);
  std::vector<std::uint32_t> stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> call;  // (vertex, next edge)
  std::uint32_t counter = 0, ncomp = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    call.emplace_back(std::uint32_t(root), 0);
    index[root] = low[root] = counter++;
    stack.push_back(std::uint32_t(root));
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, k] = call.back();
      if (k < degree) {
        std::size_t w = next(v, k++);
        if (index[w] == kNone) {
          index[w] = low[w] = counter++;
          stack.push_back(std::uint32_t(w));
          on_stack[w] = true;
          call.emplace_back(std::uint32_t(w), 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::uint32_t vv = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[vv]);
      if (low[vv] == index[vv]) {
        std::uint32_t x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = false;
          comp[x] = ncomp;
        } while (x != vv);
        ++ncomp;
      }
    }
  }
  std::vector<std::uint32_t> relabel(ncomp, kNone);
  std::uint32_t next_id = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (relabel[comp[v]] == kNone) relabel[comp[v]] = next_id++;
  for (auto& c : comp) c = relabel[c];
  count = ncomp;
  return comp;
}

std::vector<std::uint16_t> to_u16(const WFunction& f) {
  std::vector<std::uint16_t> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = static_cast<std::uint16_t>(f[i]);
  return out;
}

}  // namespace

WFunction compose(const WFunction& f, const WFunction& h) {
  WFunction out(f.size());
  for (std::size_t w = 0; w < f.size(); ++w) out[w] = h[f[w]];
  return out;
}

WFunction identity_function(std::size_t n) {
  WFunction out(n);
  std::iota(out.begin(), out.end(), ElementId{0});
  return out;
}

bool is_idempotent(const WFunction& f) { return compose(f, f) == f; }

// ---------------------------------------------------------------------------

std::uint64_t TransformationMonoid::hash_of(std::span<const std::uint16_t> a) const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint16_t x : a) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return h ^ (h >> 29);
}

void TransformationMonoid::rehash(std::size_t capacity) {
  slots_.assign(capacity, 0);
  const std::size_t mask = capacity - 1;
  for (std::size_t f = 0; f < size(); ++f) {
    std::size_t s = hash_of(images(f)) & mask;
    while (slots_[s]) s = (s + 1) & mask;
    slots_[s] = std::uint32_t(f + 1);
  }
}

std::optional<std::size_t> TransformationMonoid::find(std::span<const std::uint16_t> a) const {
  if (slots_.empty() || a.size() != degree_) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash_of(a) & mask;
  while (std::uint32_t v = slots_[s]) {
    if (std::equal(a.begin(), a.end(), images_.begin() + std::size_t(v - 1) * degree_)) return v - 1;
    s = (s + 1) & mask;
  }
  return std::nullopt;
}

std::optional<std::size_t> TransformationMonoid::find(const WFunction& f) const {
  if (f.size() != degree_) return std::nullopt;
  for (ElementId x : f)
    if (x >= degree_) return std::nullopt;
  auto a = to_u16(f);
  return find(std::span<const std::uint16_t>(a));
}

std::size_t TransformationMonoid::insert_unchecked(std::span<const std::uint16_t> a) {
  std::size_t id = size();
  images_.insert(images_.end(), a.begin(), a.end());
  if (2 * (id + 1) > slots_.size()) {
    rehash(std::max<std::size_t>(64, slots_.size() * 2));
  } else {
    const std::size_t mask = slots_.size() - 1;
    std::size_t s = hash_of(a) & mask;
    while (slots_[s]) s = (s + 1) & mask;
    slots_[s] = std::uint32_t(id + 1);
  }
  return id;
}

WFunction TransformationMonoid::function(std::size_t f) const {
  auto a = images(f);
  return WFunction(a.begin(), a.end());
}

std::size_t TransformationMonoid::multiply(std::size_t a, std::size_t b) const {
  std::vector<std::uint16_t> out(degree_);
  auto x = images(a), y = images(b);
  for (std::size_t w = 0; w < degree_; ++w) out[w] = y[x[w]];
  auto id = find(std::span<const std::uint16_t>(out));
  if (!id) throw Error("monoid is not closed under multiplication");
  return *id;
}

std::vector<std::size_t> TransformationMonoid::word(std::size_t f) const {
  std::vector<std::size_t> out;
  while (f != 0) {
    out.push_back(parent_gen_[f]);
    f = parent_[f];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string TransformationMonoid::word_label(std::size_t f) const {
  if (f == 0) return "1";
  std::string out;
  for (std::size_t k : word(f)) {
    if (!out.empty()) out += '*';
    out += gen_labels_[k];
  }
  return out;
}

void TransformationMonoid::build_cayley(unsigned threads) {
  const std::size_t G = gen_ids_.size();
  const std::size_t n = size();
  right_.assign(n * G, 0);
  left_.assign(n * G, 0);
  std::atomic<bool> closed{true};
  parallel_for(n, threads, [&](std::size_t b, std::size_t e, unsigned) {
    std::vector<std::uint16_t> buf(degree_);
    for (std::size_t f = b; f < e; ++f) {
      auto x = images(f);
      for (std::size_t k = 0; k < G; ++k) {
        auto g = images(gen_ids_[k]);
        for (std::size_t w = 0; w < degree_; ++w) buf[w] = g[x[w]];
        auto r = find(std::span<const std::uint16_t>(buf));
        for (std::size_t w = 0; w < degree_; ++w) buf[w] = x[g[w]];
        auto l = find(std::span<const std::uint16_t>(buf));
        if (!r || !l) {
          closed = false;
          continue;
        }
        right_[f * G + k] = std::uint32_t(*r);
        left_[f * G + k] = std::uint32_t(*l);
      }
    }
  });
  if (!closed) throw DomainError("element set is not closed under the generators");
}

TransformationMonoid TransformationMonoid::from_elements(std::size_t degree, std::vector<std::string> gen_labels,
                                                         std::vector<std::uint32_t> gen_ids,
                                                         std::vector<std::uint16_t> images, unsigned threads) {
  TransformationMonoid m;
  m.degree_ = degree;
  m.gen_labels_ = std::move(gen_labels);
  m.gen_ids_ = std::move(gen_ids);
  if (degree == 0 || images.size() % degree) throw DomainError("from_elements: image data has the wrong length");
  const std::size_t n = images.size() / degree;
  m.images_.reserve(images.size());
  for (std::size_t f = 0; f < n; ++f) {
    std::span<const std::uint16_t> a(images.data() + f * degree, degree);
    for (auto x : a)
      if (x >= degree) throw DomainError("from_elements: image out of range");
    if (m.find(a)) throw DomainError("from_elements: duplicate element");
    m.insert_unchecked(a);
  }
  for (auto k : m.gen_ids_)
    if (k >= n) throw DomainError("from_elements: generator id out of range");
  for (std::size_t w = 0; w < degree; ++w)
    if (m.images_[w] != w) throw DomainError("from_elements: element 0 is not the identity");
  m.build_cayley(threads);
  const std::size_t G = m.gen_ids_.size();
  m.parent_.assign(n, kNone);
  m.parent_gen_.assign(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::vector<std::size_t> frontier{0};
  std::size_t reached = 1;
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t f : frontier)
      for (std::size_t k = 0; k < G; ++k) {
        std::size_t h = m.right(f, k);
        if (!seen[h]) {
          seen[h] = true;
          m.parent_[h] = std::uint32_t(f);
          m.parent_gen_[h] = std::uint32_t(k);
          next.push_back(h);
          ++reached;
        }
      }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  if (reached != n) throw DomainError("from_elements: generators do not generate the element set");
  return m;
}

TransformationMonoid closure(std::size_t degree, std::vector<std::string> labels, const std::vector<WFunction>& gens,
                             const ClosureOptions& opts) {
  if (degree == 0) throw DomainError("closure: empty ground set");
  if (degree > 65536) throw SizeError("closure: ground sets above 65536 points are not supported");
  if (labels.size() != gens.size()) throw DomainError("closure: one label per generator required");
  std::vector<std::vector<std::uint16_t>> g16;
  for (const auto& g : gens) {
    if (g.size() != degree) throw DomainError("closure: generator has the wrong degree");
    for (ElementId x : g)
      if (x >= degree) throw DomainError("closure: generator image out of range");
    g16.push_back(to_u16(g));
  }
  TransformationMonoid m;
  m.degree_ = degree;
  m.gen_labels_ = std::move(labels);
  const std::size_t G = gens.size();
  m.insert_unchecked(to_u16(identity_function(degree)));
  m.parent_.push_back(kNone);
  m.parent_gen_.push_back(0);

  struct Candidate {
    std::uint32_t from, gen;
    std::vector<std::uint16_t> image;
  };
  std::vector<std::size_t> frontier{0};
  std::size_t level = 0;
  while (!frontier.empty()) {
    const unsigned T = std::max(1u, opts.threads);
    std::vector<std::vector<Candidate>> fresh(T);
    parallel_for(frontier.size(), T, [&](std::size_t b, std::size_t e, unsigned t) {
      std::vector<std::uint16_t> buf(degree);
      for (std::size_t idx = b; idx < e; ++idx) {
        std::size_t f = frontier[idx];
        auto x = m.images(f);
        for (std::size_t k = 0; k < G; ++k) {
          const auto& g = g16[k];
          for (std::size_t w = 0; w < degree; ++w) buf[w] = g[x[w]];
          if (!m.find(std::span<const std::uint16_t>(buf))) fresh[t].push_back({std::uint32_t(f), std::uint32_t(k), buf});
        }
      }
    });
    std::vector<Candidate> all;
    for (auto& v : fresh)
      for (auto& c : v) all.push_back(std::move(c));
    std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
      if (a.image != b.image) return a.image < b.image;
      return std::pair(a.from, a.gen) < std::pair(b.from, b.gen);
    });
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i && all[i].image == all[i - 1].image) continue;
      if (m.size() >= opts.max_elements)
        throw SizeError("monoid closure exceeded " + std::to_string(opts.max_elements) +
                        " elements; raise --max-elements to continue");
      next.push_back(m.insert_unchecked(all[i].image));
      m.parent_.push_back(all[i].from);
      m.parent_gen_.push_back(all[i].gen);
    }
    frontier = std::move(next);
    ++level;
    if (opts.progress) opts.progress(level, m.size());
  }
  for (std::size_t k = 0; k < G; ++k) m.gen_ids_.push_back(std::uint32_t(*m.find(std::span<const std::uint16_t>(g16[k]))));
  m.build_cayley(opts.threads);
  return m;
}

// ---------------------------------------------------------------------------

GreenStructure green(const TransformationMonoid& m) {
  GreenStructure gs;
  const std::size_t n = m.size(), G = m.generator_count();
  gs.R = scc(n, G, [&](std::size_t v, std::size_t k) { return m.right(v, k); }, gs.nR);
  gs.L = scc(n, G, [&](std::size_t v, std::size_t k) { return m.left(k, v); }, gs.nL);
  gs.J = scc(n, 2 * G, [&](std::size_t v, std::size_t k) { return k < G ? m.right(v, k) : m.left(k - G, v); }, gs.nJ);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> hid;
  gs.H.resize(n);
  for (std::size_t f = 0; f < n; ++f) {
    auto [it, _] = hid.emplace(std::pair(gs.R[f], gs.L[f]), std::uint32_t(hid.size()));
    gs.H[f] = it->second;
  }
  // renumber H by smallest member
  {
    std::vector<std::uint32_t> relabel(hid.size(), kNone);
    std::uint32_t next = 0;
    for (std::size_t f = 0; f < n; ++f)
      if (relabel[gs.H[f]] == kNone) relabel[gs.H[f]] = next++;
    for (auto& h : gs.H) h = relabel[h];
    gs.nH = hid.size();
  }
  gs.idempotent.resize(n);
  for (std::size_t f = 0; f < n; ++f) gs.idempotent[f] = m.is_idempotent(f);
  gs.regular.assign(gs.nJ, false);
  gs.J_size.assign(gs.nJ, 0);
  gs.transversal.clear();
  std::vector<std::uint32_t> first_idem(gs.nJ, kNone);
  std::vector<std::vector<std::uint32_t>> rs(gs.nJ), ls(gs.nJ);
  for (std::size_t f = 0; f < n; ++f) {
    auto j = gs.J[f];
    ++gs.J_size[j];
    rs[j].push_back(gs.R[f]);
    ls[j].push_back(gs.L[f]);
    if (gs.idempotent[f]) {
      gs.regular[j] = true;
      if (first_idem[j] == kNone) first_idem[j] = std::uint32_t(f);
    }
  }
  for (std::size_t j = 0; j < gs.nJ; ++j) {
    std::sort(rs[j].begin(), rs[j].end());
    std::sort(ls[j].begin(), ls[j].end());
    gs.J_rows.push_back(std::uint32_t(std::unique(rs[j].begin(), rs[j].end()) - rs[j].begin()));
    gs.J_cols.push_back(std::uint32_t(std::unique(ls[j].begin(), ls[j].end()) - ls[j].begin()));
    if (first_idem[j] != kNone) gs.transversal.push_back(first_idem[j]);
  }
  return gs;
}

std::size_t omega(const TransformationMonoid& m, std::size_t f) {
  std::size_t x = f;
  for (int i = 0; i < 64; ++i) {
    std::size_t y = m.multiply(x, x);
    if (y == x) return x;
    x = y;
  }
  // exact search: f^n with n a multiple of the period and at least the index
  std::map<std::size_t, std::size_t> seen;
  std::size_t p = f, k = 1;
  while (!seen.count(p)) {
    seen[p] = k++;
    p = m.multiply(p, f);
  }
  std::size_t index = seen[p], period = k - index;
  std::size_t n = ((index + period - 1) / period) * period;
  std::size_t r = f;
  for (std::size_t i = 1; i < n; ++i) r = m.multiply(r, f);
  return r;
}

WFunction omega(const WFunction& f) {
  WFunction x = f;
  for (int i = 0; i < 64; ++i) {
    WFunction y = compose(x, x);
    if (y == x) return x;
    x = std::move(y);
  }
  std::map<WFunction, std::size_t> seen;
  WFunction p = f;
  std::size_t k = 1;
  while (!seen.count(p)) {
    seen[p] = k++;
    p = compose(p, f);
  }
  std::size_t index = seen[p], period = k - index;
  std::size_t n = ((index + period - 1) / period) * period;
  WFunction r = f;
  for (std::size_t i = 1; i < n; ++i) r = compose(r, f);
  return r;
}

bool is_aperiodic(const TransformationMonoid& m) {
  for (std::size_t f = 0; f < m.size(); ++f) {
    std::size_t e = omega(m, f);
    if (m.multiply(e, f) != e) return false;
  }
  return true;
}

TransformationMonoid rees_monoid(const std::vector<std::vector<int>>& P) {
  // pairs (i, j) with i < a, j < b, where P is b x a and read as P[j][i]
  const std::size_t b = P.size();
  const std::size_t a = b ? P[0].size() : 0;
  for (const auto& row : P)
    if (row.size() != a) throw DomainError("rees_monoid: ragged structure matrix");
  const std::size_t N = 2 + a * b;
  auto pair_id = [&](std::size_t i, std::size_t j) { return 1 + i * b + j; };
  const std::size_t zero = N - 1;
  auto mult = [&](std::size_t x, std::size_t y) -> std::size_t {
    if (x == 0) return y;
    if (y == 0) return x;
    if (x == zero || y == zero) return zero;
    std::size_t i = (x - 1) / b, j = (x - 1) % b;
    std::size_t i2 = (y - 1) / b, j2 = (y - 1) % b;
    return P[j][i2] ? pair_id(i, j2) : zero;
  };
  std::vector<std::string> labels;
  std::vector<WFunction> gens;
  for (std::size_t y = 1; y < N; ++y) {
    WFunction f(N);
    for (std::size_t x = 0; x < N; ++x) f[x] = ElementId(mult(x, y));
    gens.push_back(std::move(f));
    if (y == zero)
      labels.push_back("0");
    else
      labels.push_back("b" + std::to_string((y - 1) / b + 1) + std::to_string((y - 1) % b + 1));
  }
  return closure(N, std::move(labels), gens);
}

// ---------------------------------------------------------------------------

WFunction pi(const CoxeterGroup& g, int i) {
  WFunction f(g.size());
  for (ElementId w = 0; w < g.size(); ++w) f[w] = g.has_right_descent(w, i) ? w : g.right_mul(w, i);
  return f;
}

WFunction opi(const CoxeterGroup& g, int i) {
  WFunction f(g.size());
  for (ElementId w = 0; w < g.size(); ++w) f[w] = g.has_right_descent(w, i) ? g.right_mul(w, i) : w;
  return f;
}

namespace {

WFunction along_word(const CoxeterGroup& g, ElementId w, bool bar_side) {
  WFunction f = identity_function(g.size());
  for (ElementId x = 0; x < g.size(); ++x) {
    ElementId y = x;
    for (int i : g.reduced_word(w)) {
      bool d = g.has_right_descent(y, i);
      if (d == bar_side) y = g.right_mul(y, i);
    }
    f[x] = y;
  }
  return f;
}

}  // namespace

WFunction pi_of(const CoxeterGroup& g, ElementId w) { return along_word(g, w, false); }
WFunction opi_of(const CoxeterGroup& g, ElementId w) { return along_word(g, w, true); }

TransformationMonoid bihecke_monoid(const CoxeterGroup& g, const ClosureOptions& opts) {
  std::vector<std::string> labels;
  std::vector<WFunction> gens;
  for (int i = 0; i < g.rank(); ++i) {
    labels.push_back("pi" + std::to_string(i + 1));
    gens.push_back(pi(g, i));
  }
  for (int i = 0; i < g.rank(); ++i) {
    labels.push_back("opi" + std::to_string(i + 1));
    gens.push_back(opi(g, i));
  }
  return closure(g.size(), std::move(labels), gens, opts);
}

namespace {

// Members (ids of m, containing the identity) that are not a product a*c of
// two other non-identity members.
std::vector<std::size_t> irreducible_members(const TransformationMonoid& m, const std::vector<std::size_t>& members) {
  std::vector<bool> in(m.size(), false), reducible(m.size(), false);
  for (std::size_t f : members) in[f] = true;
  std::vector<std::uint16_t> buf(m.degree());
  for (std::size_t a : members) {
    if (a == 0) continue;
    auto x = m.images(a);
    for (std::size_t c : members) {
      if (c == 0) continue;
      auto y = m.images(c);
      for (std::size_t w = 0; w < m.degree(); ++w) buf[w] = y[x[w]];
      auto p = m.find(std::span<const std::uint16_t>(buf));
      if (p && *p != a && *p != c) reducible[*p] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t f : members)
    if (f != 0 && in[f] && !reducible[f]) out.push_back(f);
  return out;
}

}  // namespace

std::vector<std::size_t> irreducibles(const TransformationMonoid& m) {
  std::vector<std::size_t> all(m.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return irreducible_members(m, all);
}

TransformationMonoid borel(const CoxeterGroup& g, BorelFix fixed, const TransformationMonoid& full,
                           const ClosureOptions& opts) {
  const ElementId point = fixed == BorelFix::Identity ? g.identity() : g.w0();
  std::vector<std::size_t> members;
  for (std::size_t f = 0; f < full.size(); ++f)
    if (full.apply(point, f) == point) members.push_back(f);
  std::vector<std::string> labels;
  std::vector<WFunction> gens;
  for (std::size_t f : irreducible_members(full, members)) {
    labels.push_back(full.word_label(f));
    gens.push_back(full.function(f));
  }
  TransformationMonoid sub = closure(full.degree(), std::move(labels), gens, opts);
  if (sub.size() != members.size()) throw Error("Borel submonoid is not generated by its irreducible elements");
  return sub;
}

TransformationMonoid borel(const CoxeterGroup& g, BorelFix fixed, const ClosureOptions& opts) {
  return borel(g, fixed, bihecke_monoid(g, opts), opts);
}

WFunction e_w(const CoxeterGroup& g, ElementId w) {
  return compose(pi_of(g, g.product(g.inverse(w), g.w0())), opi_of(g, g.product(g.w0(), w)));
}

WFunction e_tilde(const CoxeterGroup& g, ElementId w) { return compose(opi_of(g, g.inverse(w)), pi_of(g, w)); }

WFunction e_ab(const CoxeterGroup& g, ElementId a, ElementId b) {
  if (!g.le_L(a, b)) throw DomainError("e_ab: a is not below b in left order");
  return compose(compose(opi_of(g, g.inverse(a)), e_w(g, g.product(b, g.inverse(a)))), pi_of(g, a));
}

std::vector<std::vector<ElementId>> fibers(const WFunction& f) {
  std::map<ElementId, std::vector<ElementId>> by;
  for (ElementId w = 0; w < f.size(); ++w) by[f[w]].push_back(w);
  std::vector<std::vector<ElementId>> out;
  for (auto& [_, v] : by) out.push_back(std::move(v));
  return out;
}

std::vector<ElementId> image_set(const WFunction& f) {
  std::vector<ElementId> out(f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementId type_of(const CoxeterGroup& g, const WFunction& f) {
  return g.product(f[g.w0()], g.inverse(f[g.identity()]));
}

std::size_t rank_of(const WFunction& f) { return image_set(f).size(); }

WFunction reconstruct(const CoxeterGroup& g, const std::vector<std::vector<ElementId>>& parts, ElementId base) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> cls(n, kNone);
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (ElementId w : parts[c]) {
      if (w >= n || cls[w] != kNone) throw DomainError("reconstruct: not a partition of W");
      cls[w] = std::uint32_t(c);
    }
  for (auto c : cls)
    if (c == kNone) throw DomainError("reconstruct: not a partition of W");
  std::vector<ElementId> value(parts.size(), ElementId(kNone));
  value[cls[0]] = base;
  std::vector<ElementId> queue{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    ElementId w = queue[h];
    for (int j = 0; j < g.rank(); ++j) {
      ElementId x = g.left_mul(j, w);
      if (seen[x]) continue;
      seen[x] = true;
      queue.push_back(x);
      if (cls[x] == cls[w]) continue;
      ElementId y = g.left_mul(j, value[cls[w]]);
      // moving up in left order must move up in the image
      if (g.length(y) != g.length(value[cls[w]]) + 1) throw DomainError("reconstruct: invalid partition");
      if (value[cls[x]] == ElementId(kNone))
        value[cls[x]] = y;
      else if (value[cls[x]] != y)
        throw DomainError("reconstruct: invalid partition");
    }
  }
  WFunction f(n);
  for (ElementId w = 0; w < n; ++w) f[w] = value[cls[w]];
  // consistency along every left Cayley edge
  for (ElementId w = 0; w < n; ++w)
    for (int j = 0; j < g.rank(); ++j) {
      ElementId x = g.left_mul(j, w);
      if (cls[x] != cls[w] && f[x] != g.left_mul(j, f[w])) throw DomainError("reconstruct: invalid partition");
    }
  if (image_set(f).size() != parts.size()) throw DomainError("reconstruct: invalid partition");
  return f;
}

WFunction bar(const CoxeterGroup& g, const WFunction& f) {
  WFunction out(f.size());
  const ElementId w0 = g.w0();
  for (ElementId w = 0; w < f.size(); ++w) out[w] = g.product(w0, f[g.product(w0, w)]);
  return out;
}

bool check_fiber_contraction(const CoxeterGroup& g, const WFunction& f) {
  const std::size_t n = g.size();
  auto parts = fibers(f);
  std::vector<std::uint32_t> cls(n);
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (ElementId w : parts[c]) cls[w] = std::uint32_t(c);
  const std::size_t R = std::size_t(g.rank());
  // contracted coloured edges: (class, colour) -> class
  std::vector<std::uint32_t> edge(parts.size() * R, kNone);
  for (ElementId w = 0; w < n; ++w)
    for (int j = 0; j < g.rank(); ++j) {
      if (g.has_left_descent(w, j)) continue;
      ElementId x = g.left_mul(j, w);
      if (cls[x] == cls[w]) continue;
      auto& e = edge[cls[w] * R + j];
      if (e != kNone && e != cls[x]) return false;
      e = cls[x];
    }
  std::vector<ElementId> phi(parts.size(), ElementId(kNone));
  phi[cls[0]] = f[0];
  std::vector<std::uint32_t> queue{cls[0]};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    std::uint32_t a = queue[h];
    for (std::size_t j = 0; j < R; ++j) {
      std::uint32_t b = edge[a * R + j];
      if (b == kNone) continue;
      if (g.has_left_descent(phi[a], int(j))) return false;
      ElementId y = g.left_mul(int(j), phi[a]);
      if (phi[b] == ElementId(kNone)) {
        phi[b] = y;
        queue.push_back(b);
      } else if (phi[b] != y) {
        return false;
      }
    }
  }
  std::vector<ElementId> img;
  for (ElementId v : phi) {
    if (v == ElementId(kNone)) return false;
    img.push_back(v);
  }
  std::vector<ElementId> sorted = img;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  // left-order Hasse edges inside the image must be exactly the contracted edges
  std::size_t contracted = 0, target = 0;
  for (auto e : edge) contracted += e != kNone;
  for (ElementId x : sorted)
    for (int j = 0; j < g.rank(); ++j)
      if (!g.has_left_descent(x, j) && std::binary_search(sorted.begin(), sorted.end(), g.left_mul(j, x))) ++target;
  if (contracted != target) return false;
  for (ElementId w = 0; w < n; ++w)
    if (phi[cls[w]] != f[w]) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

constexpr char kMagic[4] = {'B', 'H', 'M', 'C'};
constexpr std::uint32_t kCacheVersion = 1;

std::uint64_t descriptor_hash(const CoxeterGroup& g) {
  std::string key = g.descriptor().name() + "|" + std::to_string(g.size());
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

template <class T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
bool get(std::istream& is, T& v) {
  return bool(is.read(reinterpret_cast<char*>(&v), sizeof v));
}

}  // namespace

void save_monoid(const std::string& path, const CoxeterGroup& g, const TransformationMonoid& m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write cache file " + path);
  os.write(kMagic, 4);
  put(os, kCacheVersion);
  put(os, descriptor_hash(g));
  put(os, std::uint64_t(g.size()));
  put(os, std::uint64_t(m.size()));
  put(os, std::uint32_t(m.generator_count()));
  for (std::size_t k = 0; k < m.generator_count(); ++k) {
    const auto& l = m.generator_labels()[k];
    put(os, std::uint32_t(l.size()));
    os.write(l.data(), std::streamsize(l.size()));
    put(os, std::uint32_t(m.generator(k)));
  }
  const auto& raw = m.raw_images();
  os.write(reinterpret_cast<const char*>(raw.data()), std::streamsize(raw.size() * sizeof(std::uint16_t)));
  if (!os) throw Error("failed writing cache file " + path);
}

std::optional<TransformationMonoid> load_monoid(const std::string& path, const CoxeterGroup& g, unsigned threads) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) throw Error("not a monoid cache file: " + path);
  std::uint32_t version = 0;
  std::uint64_t hash = 0, order = 0, count = 0;
  std::uint32_t ngens = 0;
  if (!get(is, version)) throw Error("truncated cache file: " + path);
  if (version != kCacheVersion)
    throw Error("cache file " + path + " has format version " + std::to_string(version) + ", expected " +
                std::to_string(kCacheVersion));
  if (!get(is, hash) || !get(is, order) || !get(is, count) || !get(is, ngens)) throw Error("truncated cache file: " + path);
  if (hash != descriptor_hash(g) || order != g.size()) throw Error("cache file " + path + " belongs to another group");
  std::vector<std::string> labels;
  std::vector<std::uint32_t> ids;
  for (std::uint32_t k = 0; k < ngens; ++k) {
    std::uint32_t len = 0, id = 0;
    if (!get(is, len) || len > 4096) throw Error("corrupt cache file: " + path);
    std::string l(len, '\0');
    is.read(l.data(), len);
    if (!get(is, id)) throw Error("truncated cache file: " + path);
    labels.push_back(std::move(l));
    ids.push_back(id);
  }
  std::vector<std::uint16_t> raw(count * order);
  if (!is.read(reinterpret_cast<char*>(raw.data()), std::streamsize(raw.size() * sizeof(std::uint16_t))))
    throw Error("truncated cache file: " + path);
  return TransformationMonoid::from_elements(order, std::move(labels), std::move(ids), std::move(raw), threads);
}

}  // namespace bihecke

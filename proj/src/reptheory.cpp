#include "bihecke/reptheory.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

namespace bihecke {

// MatrixRep ------------------------------------------------------------------

const RationalMatrix& MatrixRep::generator(const std::string& label) const {
  for (std::size_t k = 0; k < generator_labels.size(); ++k)
    if (generator_labels[k] == label) return generators[k];
  throw DomainError("no generator named " + label);
}

RationalMatrix MatrixRep::word_matrix(const std::vector<std::size_t>& word) const {
  RationalMatrix m = RationalMatrix::identity(dimension);
  for (std::size_t k : word) m = m * generators.at(k);
  return m;
}

// Translation modules --------------------------------------------------------

PartialMap TranslationModule::act(const std::vector<std::size_t>& word) const {
  const std::size_t r = pi.size();
  PartialMap out(basis.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::uint32_t(i);
  for (std::size_t k : word) {
    const PartialMap& step = k < r ? pi[k] : opi[k - r];
    for (auto& x : out)
      if (x != kNone) x = step[x];
  }
  return out;
}

TranslationModule translation_action(const CoxeterGroup& g, ElementId w) {
  TranslationModule t;
  t.w = w;
  t.basis = g.interval(g.identity(), w, Order::Right);
  t.position.assign(g.size(), kNone);
  for (std::size_t k = 0; k < t.basis.size(); ++k) t.position[t.basis[k]] = std::uint32_t(k);
  const int r = g.rank();
  t.pi.assign(std::size_t(r), PartialMap(t.basis.size(), kNone));
  t.opi = t.pi;
  for (int i = 0; i < r; ++i)
    for (std::size_t k = 0; k < t.basis.size(); ++k) {
      ElementId u = t.basis[k];
      std::uint32_t next = t.position[g.right_mul(u, i)];
      if (g.has_right_descent(u, i)) {
        t.pi[i][k] = std::uint32_t(k);
        t.opi[i][k] = next;
      } else if (next != kNone) {
        t.pi[i][k] = next;
        t.opi[i][k] = std::uint32_t(k);
      }
    }
  return t;
}

namespace {

RationalMatrix map_matrix(const PartialMap& m) {
  RationalMatrix a(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != kNone) a(i, m[i]) = 1;
  return a;
}

std::vector<mpq_class> apply_map(const PartialMap& m, const std::vector<mpq_class>& v) {
  std::vector<mpq_class> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (m[i] != kNone && sgn(v[i]) != 0) out[m[i]] += v[i];
  return out;
}

std::vector<std::size_t> pi_word(const CoxeterGroup& g, ElementId v) {
  std::vector<std::size_t> out;
  for (int i : g.reduced_word(v)) out.push_back(std::size_t(i));
  return out;
}

}  // namespace

MatrixRep translation_module(const CoxeterGroup& g, ElementId w) {
  TranslationModule t = translation_action(g, w);
  MatrixRep rep;
  rep.dimension = t.dimension();
  for (ElementId u : t.basis) rep.basis_labels.push_back(g.label(u));
  const int r = g.rank();
  for (int i = 0; i < r; ++i) {
    rep.generator_labels.push_back("pi" + std::to_string(i + 1));
    rep.generators.push_back(map_matrix(t.pi[i]));
  }
  for (int i = 0; i < r; ++i) {
    rep.generator_labels.push_back("opi" + std::to_string(i + 1));
    rep.generators.push_back(map_matrix(t.opi[i]));
  }
  const RationalMatrix id = RationalMatrix::identity(rep.dimension);
  for (int i = 0; i < r; ++i) {
    rep.generator_labels.push_back("s" + std::to_string(i + 1));
    rep.generators.push_back(rep.generators[i] + rep.generators[r + i] - id);
  }
  return rep;
}

RationalMatrix left_reflection(const CoxeterGroup& g, const TranslationModule& t, int i) {
  RationalMatrix a(t.dimension(), t.dimension());
  for (std::size_t k = 0; k < t.dimension(); ++k) {
    std::uint32_t target = t.position[g.left_mul(i, t.basis[k])];
    if (target != kNone)
      a(k, target) = 1;
    else
      a(k, k) = -1;
  }
  return a;
}

std::vector<std::vector<mpq_class>> antisym_subspace(const CoxeterGroup& g, ElementId w, IndexSet J) {
  TranslationModule t = translation_action(g, w);
  const std::size_t d = t.dimension();
  // v (ls_i + 1) = 0 gives one equation per column of ls_i + 1
  std::vector<std::vector<mpq_class>> eqs;
  for (int i : index_members(J)) {
    RationalMatrix a = left_reflection(g, t, i) + RationalMatrix::identity(d);
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<mpq_class> row(d);
      for (std::size_t r = 0; r < d; ++r) row[r] = a(r, c);
      eqs.push_back(std::move(row));
    }
  }
  return nullspace(RationalField{}, eqs, d);
}

std::optional<std::vector<std::vector<mpq_class>>> antisym_submodule(const CoxeterGroup& g, ElementId w, IndexSet J) {
  TranslationModule t = translation_action(g, w);
  const std::size_t d = t.dimension();
  CosetFactorization f = g.min_coset_left(w, J);
  std::vector<mpq_class> vj(d);
  const int lj = g.length(f.factor);
  for (ElementId u : g.interval(g.identity(), f.factor, Order::Right))
    vj[t.position[u]] = ((lj - g.length(u)) % 2) ? -1 : 1;
  // P_J is the cyclic span of v_J; the full kernel of ls_i + 1 can be larger
  std::vector<std::vector<mpq_class>> basis;
  EchelonBasis<RationalField> span(RationalField{}, d);
  for (ElementId v : g.interval(g.identity(), f.rep, Order::Right)) {
    basis.push_back(apply_map(t.act(pi_word(g, v)), vj));
    if (!span.insert(basis.back())) return std::nullopt;
  }
  for (const auto& v : basis)
    for (const auto* maps : {&t.pi, &t.opi})
      for (const auto& m : *maps)
        if (!span.contains(apply_map(m, v))) return std::nullopt;
  EchelonBasis<RationalField> kernel(RationalField{}, d);
  for (auto& v : antisym_subspace(g, w, J)) kernel.insert(std::move(v));
  for (const auto& v : basis)
    if (!kernel.contains(v)) throw Error("antisym_submodule: basis vector is not left-antisymmetric");
  return basis;
}

// Simple modules -------------------------------------------------------------

std::vector<ElementId> simple_basis(const CoxeterGroup& g, ElementId w) {
  std::vector<bool> covered(g.size(), false);
  for (ElementId v : cutting_lower_covers(g, w))
    for (ElementId u : g.interval(g.identity(), v, Order::Right)) covered[u] = true;
  std::vector<ElementId> out;
  for (ElementId u : g.interval(g.identity(), w, Order::Right))
    if (!covered[u]) out.push_back(u);
  return out;
}

std::size_t dim_simple(const CoxeterGroup& g, ElementId w) { return simple_basis(g, w).size(); }

std::size_t dim_simple_linear(const CoxeterGroup& g, ElementId w) {
  const std::size_t d = g.interval(g.identity(), w, Order::Right).size();
  EchelonBasis<RationalField> sum(RationalField{}, d);
  auto blocks = all_blocks(g, w);
  for (ElementId v : cutting_lower_covers(g, w)) {
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const BlockData& b) { return b.cutting_point == v; });
    if (it == blocks.end()) throw Error("dim_simple_linear: no block for a cutting point");
    auto p = antisym_submodule(g, w, it->J);
    if (!p) throw Error("dim_simple_linear: P_J is not a submodule at a cutting point");
    for (auto& b : *p) sum.insert(std::move(b));
  }
  return d - sum.dimension();
}

std::size_t whbihecke_dim(const CoxeterGroup& g, ElementId w) {
  auto basis = g.interval(g.identity(), w, Order::Right);
  std::vector<IndexSet> js;
  for (ElementId u : basis) js.push_back(jblock(g, w, u));
  std::size_t count = 0;
  for (IndexSet a : js)
    for (IndexSet b : js)
      if ((a & ~b) == 0) ++count;
  return count;
}

std::size_t whbihecke_dim_linear(const CoxeterGroup& g, ElementId w, std::size_t max_dimension) {
  TranslationModule t = translation_action(g, w);
  const std::size_t d = t.dimension();
  std::vector<PartialMap> gens(t.pi);
  gens.insert(gens.end(), t.opi.begin(), t.opi.end());
  std::set<PartialMap> seen;
  std::vector<PartialMap> queue{t.act({})};
  seen.insert(queue[0]);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (const auto& s : gens) {
      PartialMap next = queue[h];
      for (auto& x : next)
        if (x != kNone) x = s[x];
      if (seen.insert(next).second) {
        if (seen.size() > max_dimension)
          throw SizeError("whbihecke_dim_linear: more than " + std::to_string(max_dimension) + " operators");
        queue.push_back(std::move(next));
      }
    }
  }
  IntegerMatrix a(queue.size(), d * d);
  for (std::size_t r = 0; r < queue.size(); ++r)
    for (std::size_t i = 0; i < d; ++i)
      if (queue[r][i] != kNone) a(r, i * d + queue[r][i]) = 1;
  return bareiss_rank(std::move(a));
}

// Borel submonoid fixing 1 ----------------------------------------------------

ElementId rfix(const CoxeterGroup& g, const WFunction& f) { return f[g.w0()]; }

ElementId lfix(const CoxeterGroup& g, const WFunction& f) {
  if (f[g.identity()] != g.identity()) throw DomainError("lfix: function does not fix 1");
  std::vector<ElementId> hits;
  for (ElementId u = 0; u < g.size(); ++u)
    if (compose(e_w(g, u), f) == f) hits.push_back(u);
  if (hits.empty()) throw DomainError("lfix: no idempotent e_u fixes f on the left");
  ElementId best = hits.front();
  for (ElementId u : hits)
    if (g.length(u) < g.length(best)) best = u;
  for (ElementId u : hits)
    if (!g.le_L(best, u)) throw Error("lfix: no left-order minimum");
  return best;
}

std::vector<std::vector<long long>> cartan_m1(const CoxeterGroup& g, const TransformationMonoid& m1) {
  const std::size_t n = g.size();
  std::vector<WFunction> idem;
  for (ElementId u = 0; u < n; ++u) idem.push_back(e_w(g, u));
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (std::size_t x = 0; x < m1.size(); ++x) {
    WFunction f = m1.function(x);
    if (f[g.identity()] != g.identity()) throw DomainError("cartan_m1: element does not fix 1");
    ElementId l = n;
    for (ElementId u = 0; u < n; ++u)
      if (compose(idem[u], f) == f && (l == n || g.length(u) < g.length(l))) l = u;
    c[l][rfix(g, f)] += 1;
  }
  return c;
}

std::vector<QuiverEdge> quiver_m1(const CoxeterGroup& g) {
  const std::size_t n = g.size();
  BitMatrix bruhat_up(n);  // row c = {a : c <=_B a}
  for (ElementId a = 0; a < n; ++a)
    for (ElementId c = 0; c < n; ++c)
      if (g.le_B(c, a)) bruhat_up.set(c, a);
  const std::size_t words = bruhat_up.words();
  auto lower = [&](Order o, ElementId x) { return g.lower_set(o, x); };

  std::vector<QuiverEdge> edges;
  std::vector<std::uint64_t> iv(words);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId z = 0; z < n; ++z) {
      if (x == z || !g.le_B(z, x) || g.le_L(z, x)) continue;
      // intervals [c, a]_B with a <=_L x, c <=_L z, c <=_B a
      std::vector<std::vector<std::uint64_t>> intervals;
      for (ElementId a = 0; a < n; ++a) {
        if (!g.le_L(a, x)) continue;
        for (ElementId c = 0; c < n; ++c) {
          if (!g.le_L(c, z) || !g.le_B(c, a)) continue;
          const std::uint64_t* up = bruhat_up.row(c);
          const std::uint64_t* down = lower(Order::Bruhat, a);
          for (std::size_t k = 0; k < words; ++k) iv[k] = up[k] & down[k];
          intervals.push_back(iv);
        }
      }
      bool blocked = false;
      for (ElementId y = 0; y < n && !blocked; ++y) {
        if (y == x || y == z || !g.le_B(y, x) || !g.le_B(z, y) || g.le_L(z, y)) continue;
        const std::uint64_t* ly = lower(Order::Left, y);
        bool all = true;
        for (const auto& I : intervals) {
          bool hit = false;
          for (std::size_t k = 0; k < words && !hit; ++k) hit = (I[k] & ly[k]) != 0;
          if (!hit) {
            all = false;
            break;
          }
        }
        blocked = all;
      }
      if (!blocked) edges.push_back({x, z});
    }
  std::sort(edges.begin(), edges.end());
  for (ElementId x = 0; x < n; ++x)
    for (ElementId z = 0; z < n; ++z) {
      if (g.length(x) != g.length(z) + 1 || !g.le_B(z, x) || g.le_L(z, x)) continue;
      if (!std::binary_search(edges.begin(), edges.end(), QuiverEdge{x, z}))
        throw Error("quiver_m1: Bruhat cover " + g.label(x) + " > " + g.label(z) + " is not an edge");
    }
  return edges;
}

std::vector<QuiverEdge> quiver_m1_monoid(const CoxeterGroup& g) {
  const std::size_t n = g.size();
  std::vector<WFunction> e;
  for (ElementId u = 0; u < n; ++u) e.push_back(e_w(g, u));
  std::vector<QuiverEdge> edges;
  for (ElementId x = 0; x < n; ++x)
    for (ElementId z = 0; z < n; ++z) {
      if (x == z) continue;
      WFunction q = compose(e[x], e[z]);
      if (is_idempotent(q) || rfix(g, q) != z || lfix(g, q) != x) continue;
      bool blocked = false;
      for (ElementId y = 0; y < n && !blocked; ++y) {
        WFunction xy = compose(e[x], e[y]);
        if (xy == e[x] || compose(e[y], e[z]) == e[z]) continue;
        blocked = compose(xy, e[z]) == q;
      }
      if (!blocked) edges.push_back({x, z});
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Radical filtration and graded Cartan matrices -------------------------------

MultiplicationTable multiplication_table(const TransformationMonoid& m) {
  MultiplicationTable t;
  t.n = m.size();
  t.t.resize(t.n * t.n);
  for (std::size_t a = 0; a < t.n; ++a)
    for (std::size_t b = 0; b < t.n; ++b) t.t[a * t.n + b] = std::uint32_t(m.multiply(a, b));
  return t;
}

namespace {

template <class F>
using Vec = std::vector<typename F::value_type>;

template <class F>
Vec<F> algebra_product(const F& f, const MultiplicationTable& t, const Vec<F>& x, const Vec<F>& y) {
  Vec<F> out(t.n, f.zero());
  std::vector<std::size_t> ys;
  for (std::size_t b = 0; b < t.n; ++b)
    if (!f.is_zero(y[b])) ys.push_back(b);
  for (std::size_t a = 0; a < t.n; ++a) {
    if (f.is_zero(x[a])) continue;
    for (std::size_t b : ys) {
      auto& o = out[t(a, b)];
      o = f.add(o, f.mul(x[a], y[b]));
    }
  }
  return out;
}

template <class F>
EchelonBasis<F> trace_radical(const F& f, const MultiplicationTable& t) {
  std::vector<long long> fix(t.n, 0);
  for (std::size_t m = 0; m < t.n; ++m)
    for (std::size_t z = 0; z < t.n; ++z)
      if (t(m, z) == z) ++fix[m];
  std::vector<Vec<F>> rows(t.n, Vec<F>(t.n));
  for (std::size_t x = 0; x < t.n; ++x)
    for (std::size_t y = 0; y < t.n; ++y) rows[x][y] = f.from_int(fix[t(x, y)]);
  EchelonBasis<F> rad(f, t.n);
  for (auto& v : nullspace(f, rows, t.n)) rad.insert(std::move(v));
  return rad;
}

// Bases of rad^1, rad^2, ... down to the last non-zero power.
std::vector<EchelonBasis<RationalField>> filtration_exact(const MultiplicationTable& t, const LinearOptions& opts) {
  RationalField f;
  std::vector<EchelonBasis<RationalField>> levels;
  levels.push_back(trace_radical(f, t));
  while (levels.back().dimension() > 0) {
    const auto& cur = levels.back();
    EchelonBasis<RationalField> next(f, t.n);
    for (const auto& a : cur.vectors())
      for (const auto& b : levels.front().vectors()) next.insert(algebra_product(f, t, a, b));
    if (next.dimension() == cur.dimension()) throw Error("radical is not nilpotent");
    if (opts.progress) opts.progress("radical power " + std::to_string(levels.size() + 1) + ": dim " + std::to_string(next.dimension()));
    levels.push_back(std::move(next));
  }
  levels.pop_back();
  return levels;
}

std::vector<EchelonBasis<PrimeField>> filtration_modular(const MultiplicationTable& t, PrimeField f,
                                                         const LinearOptions& opts) {
  std::mt19937_64 rng(opts.seed ^ f.p);
  std::uniform_int_distribution<std::uint64_t> coef(0, f.p - 1);
  auto random_member = [&](const EchelonBasis<PrimeField>& e) {
    Vec<PrimeField> v(t.n, 0);
    for (const auto& r : e.vectors()) {
      std::uint64_t c = coef(rng);
      for (std::size_t j = 0; j < t.n; ++j)
        if (r[j]) v[j] = f.add(v[j], f.mul(c, r[j]));
    }
    return v;
  };
  std::vector<EchelonBasis<PrimeField>> levels;
  levels.push_back(trace_radical(f, t));
  while (levels.back().dimension() > 0) {
    EchelonBasis<PrimeField> next(f, t.n);
    unsigned misses = 0;
    while (misses < opts.patience && next.dimension() < levels.back().dimension()) {
      if (next.insert(algebra_product(f, t, random_member(levels.back()), random_member(levels.front()))))
        misses = 0;
      else
        ++misses;
    }
    if (next.dimension() == levels.back().dimension()) throw Error("radical is not nilpotent");
    if (opts.progress) opts.progress("radical power " + std::to_string(levels.size() + 1) + ": dim " + std::to_string(next.dimension()));
    levels.push_back(std::move(next));
  }
  levels.pop_back();
  return levels;
}

// traces[k][i][j]: trace of x -> test_i x test_j on rad^k (k = 0 is the whole algebra).
template <class F>
std::vector<std::vector<Vec<F>>> layer_traces(const F& f, const MultiplicationTable& t,
                                              const std::vector<EchelonBasis<F>>& levels,
                                              const std::vector<std::size_t>& test) {
  const std::size_t s = test.size();
  std::vector<std::vector<Vec<F>>> out(levels.size() + 1, std::vector<Vec<F>>(s, Vec<F>(s, f.zero())));
  std::vector<std::uint32_t> img(t.n);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      long long fixed = 0;
      for (std::size_t m = 0; m < t.n; ++m) {
        img[m] = t(t(test[i], m), test[j]);
        if (img[m] == m) ++fixed;
      }
      out[0][i][j] = f.from_int(fixed);
      for (std::size_t k = 0; k < levels.size(); ++k) {
        const auto& vs = levels[k].vectors();
        const auto& piv = levels[k].pivots();
        auto acc = f.zero();
        for (std::size_t r = 0; r < vs.size(); ++r)
          for (std::size_t m = 0; m < t.n; ++m)
            if (img[m] == piv[r] && !f.is_zero(vs[r][m])) acc = f.add(acc, vs[r][m]);
        out[k + 1][i][j] = acc;
      }
    }
  return out;
}

// Layer multiplicities X^-1 (T_k - T_k+1) X^-T for each k.
template <class F>
std::vector<std::vector<Vec<F>>> layer_multiplicities(const F& f, const std::vector<std::vector<Vec<F>>>& traces,
                                                      const std::vector<std::vector<long long>>& chars) {
  const std::size_t s = chars.size();
  std::vector<Vec<F>> x(s, Vec<F>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t u = 0; u < s; ++u) x[i][u] = f.from_int(chars[i][u]);
  auto xi = inverse(f, x);
  if (!xi) throw Error("graded_cartan: character matrix is singular");
  std::vector<std::vector<Vec<F>>> out;
  for (std::size_t k = 0; k < traces.size(); ++k) {
    std::vector<Vec<F>> layer(s, Vec<F>(s, f.zero()));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        layer[i][j] = k + 1 < traces.size() ? f.sub(traces[k][i][j], traces[k + 1][i][j]) : traces[k][i][j];
    // C = Xi L Xi^T
    std::vector<Vec<F>> tmp(s, Vec<F>(s, f.zero())), c(s, Vec<F>(s, f.zero()));
    for (std::size_t u = 0; u < s; ++u)
      for (std::size_t i = 0; i < s; ++i) {
        if (f.is_zero((*xi)[u][i])) continue;
        for (std::size_t j = 0; j < s; ++j) tmp[u][j] = f.add(tmp[u][j], f.mul((*xi)[u][i], layer[i][j]));
      }
    for (std::size_t u = 0; u < s; ++u)
      for (std::size_t v = 0; v < s; ++v) {
        auto acc = f.zero();
        for (std::size_t j = 0; j < s; ++j)
          if (!f.is_zero((*xi)[v][j])) acc = f.add(acc, f.mul(tmp[u][j], (*xi)[v][j]));
        c[u][v] = acc;
      }
    out.push_back(std::move(c));
  }
  return out;
}

void set_coefficient(GradedMatrix& g, std::size_t u, std::size_t v, std::size_t k, long long c) {
  if (c < 0) throw Error("graded_cartan: negative multiplicity (wrong list of simples?)");
  if (c == 0) return;
  auto& p = g.at(u, v);
  if (p.size() <= k) p.resize(k + 1, 0);
  p[k] = c;
}

}  // namespace

std::vector<std::size_t> radical_filtration(const TransformationMonoid& m, const LinearOptions& opts) {
  const std::size_t n = m.size();
  std::vector<std::size_t> dims{n};
  if (opts.mode == Arithmetic::Exact) {
    if (n > opts.exact_cap)
      throw SizeError("radical: monoid has " + std::to_string(n) + " elements, exact mode allows " +
                      std::to_string(opts.exact_cap) + " (use --modular)");
    for (const auto& l : filtration_exact(multiplication_table(m), opts)) dims.push_back(l.dimension());
  } else {
    if (n > opts.modular_cap)
      throw SizeError("radical: monoid has " + std::to_string(n) + " elements, modular mode allows " +
                      std::to_string(opts.modular_cap));
    auto t = multiplication_table(m);
    std::vector<std::size_t> first;
    for (std::uint64_t p : kModularPrimes) {
      std::vector<std::size_t> d{n};
      for (const auto& l : filtration_modular(t, PrimeField{p}, opts)) d.push_back(l.dimension());
      if (first.empty())
        first = d;
      else if (d != first)
        throw Error("radical: modular images disagree between primes");
    }
    dims = first;
  }
  dims.push_back(0);
  return dims;
}

std::vector<std::vector<mpq_class>> radical_basis(const TransformationMonoid& m, std::size_t cap) {
  if (m.size() > cap) throw SizeError("radical: monoid has " + std::to_string(m.size()) + " elements, cap is " + std::to_string(cap));
  return trace_radical(RationalField{}, multiplication_table(m)).vectors();
}

std::string format_qpolynomial(const QPolynomial& p) {
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    long long c = p[k];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    long long a = c < 0 ? -c : c;
    if (k == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a);
    out += "q";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "." : out;
}

long long evaluate_at_one(const QPolynomial& p) {
  long long s = 0;
  for (long long c : p) s += c;
  return s;
}

std::vector<std::vector<long long>> GradedMatrix::at_one() const {
  std::vector<std::vector<long long>> out(size(), std::vector<long long>(size()));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) out[i][j] = evaluate_at_one(at(i, j));
  return out;
}

GradedMatrix graded_cartan(const TransformationMonoid& m, const std::vector<std::size_t>& test,
                           const std::vector<std::vector<long long>>& chars, std::vector<ElementId> labels,
                           const LinearOptions& opts) {
  const std::size_t s = labels.size();
  if (test.size() != s || chars.size() != s) throw DomainError("graded_cartan: need one test element per simple");
  GradedMatrix out;
  out.index = std::move(labels);
  out.entries.assign(s * s, {});
  const std::size_t n = m.size();
  if (opts.mode == Arithmetic::Exact) {
    if (n > opts.exact_cap)
      throw SizeError("graded_cartan: monoid has " + std::to_string(n) + " elements, exact mode allows " +
                      std::to_string(opts.exact_cap) + " (use --modular)");
    RationalField f;
    auto t = multiplication_table(m);
    auto levels = filtration_exact(t, opts);
    auto c = layer_multiplicities(f, layer_traces(f, t, levels, test), chars);
    for (std::size_t k = 0; k < c.size(); ++k)
      for (std::size_t u = 0; u < s; ++u)
        for (std::size_t v = 0; v < s; ++v) {
          if (c[k][u][v].get_den() != 1) throw Error("graded_cartan: non-integral multiplicity");
          set_coefficient(out, u, v, k, c[k][u][v].get_num().get_si());
        }
    return out;
  }
  if (n > opts.modular_cap)
    throw SizeError("graded_cartan: monoid has " + std::to_string(n) + " elements, modular mode allows " +
                    std::to_string(opts.modular_cap));
  auto t = multiplication_table(m);
  std::vector<std::vector<std::vector<long long>>> first;
  for (std::uint64_t p : kModularPrimes) {
    PrimeField f{p};
    auto levels = filtration_modular(t, f, opts);
    auto c = layer_multiplicities(f, layer_traces(f, t, levels, test), chars);
    std::vector<std::vector<std::vector<long long>>> lifted(c.size(), std::vector<std::vector<long long>>(s, std::vector<long long>(s)));
    for (std::size_t k = 0; k < c.size(); ++k)
      for (std::size_t u = 0; u < s; ++u)
        for (std::size_t v = 0; v < s; ++v) lifted[k][u][v] = f.to_signed(c[k][u][v]);
    if (opts.progress) opts.progress("prime " + std::to_string(p) + " done");
    if (first.empty())
      first = std::move(lifted);
    else if (lifted != first)
      throw Error("graded_cartan: modular images disagree between primes");
  }
  for (std::size_t k = 0; k < first.size(); ++k)
    for (std::size_t u = 0; u < s; ++u)
      for (std::size_t v = 0; v < s; ++v) set_coefficient(out, u, v, k, first[k][u][v]);
  return out;
}

namespace {

std::vector<ElementId> all_ids(const CoxeterGroup& g) {
  std::vector<ElementId> out(g.size());
  for (ElementId u = 0; u < g.size(); ++u) out[u] = u;
  return out;
}

std::size_t member(const TransformationMonoid& m, const WFunction& f) {
  auto id = m.find(f);
  if (!id) throw DomainError("element is not in the monoid");
  return *id;
}

}  // namespace

GradedMatrix qcartan_borel(const CoxeterGroup& g, const TransformationMonoid& m_w0, const LinearOptions& opts) {
  const std::size_t n = g.size();
  std::vector<std::size_t> test;
  std::vector<std::vector<long long>> chars(n, std::vector<long long>(n, 0));
  for (ElementId v = 0; v < n; ++v) {
    WFunction e = e_ab(g, v, g.w0());
    test.push_back(member(m_w0, e));
    for (ElementId u = 0; u < n; ++u) chars[v][u] = e[u] == u;
  }
  return graded_cartan(m_w0, test, chars, all_ids(g), opts);
}

GradedMatrix qcartan_m1(const CoxeterGroup& g, const TransformationMonoid& m1, const LinearOptions& opts) {
  const std::size_t n = g.size();
  std::vector<std::size_t> test;
  std::vector<std::vector<long long>> chars(n, std::vector<long long>(n, 0));
  for (ElementId v = 0; v < n; ++v) {
    WFunction e = e_w(g, v);
    test.push_back(member(m1, e));
    for (ElementId u = 0; u < n; ++u) chars[v][u] = e[u] == u;
  }
  return graded_cartan(m1, test, chars, all_ids(g), opts);
}

long long simple_character_at(const CoxeterGroup& g, ElementId w, ElementId v) {
  WFunction e = e_ab(g, v, g.w0());
  long long c = 0;
  for (ElementId u : simple_basis(g, w)) c += e[u] == u;
  return c;
}

GradedMatrix qcartan_full(const CoxeterGroup& g, const TransformationMonoid& m, const LinearOptions& opts) {
  const std::size_t n = g.size();
  std::vector<std::vector<ElementId>> simples(n);
  for (ElementId w = 0; w < n; ++w) simples[w] = simple_basis(g, w);
  std::vector<std::size_t> test;
  std::vector<std::vector<long long>> chars(n, std::vector<long long>(n, 0));
  for (ElementId v = 0; v < n; ++v) {
    WFunction e = e_ab(g, v, g.w0());
    test.push_back(member(m, e));
    for (ElementId w = 0; w < n; ++w)
      for (ElementId u : simples[w]) chars[v][w] += e[u] == u;
  }
  return graded_cartan(m, test, chars, all_ids(g), opts);
}

// Decomposition data ----------------------------------------------------------

std::vector<std::vector<int>> decomposition_matrix(const CoxeterGroup& g) {
  std::vector<std::vector<int>> d(g.size(), std::vector<int>(g.size(), 0));
  for (ElementId w = 0; w < g.size(); ++w)
    for (ElementId u : simple_basis(g, w)) d[w][u] = 1;
  return d;
}

std::vector<int> character_T_restricted(const CoxeterGroup& g, ElementId w) {
  std::vector<int> c(g.size(), 0);
  for (ElementId u : g.interval(g.identity(), w, Order::Right)) c[u] = 1;
  return c;
}

IndexSet h0_restriction(const CoxeterGroup& g, ElementId w) { return g.right_descents(w); }

std::string Table1Row::format() const {
  std::ostringstream os;
  os << name << ' ' << group_size << ' ' << borel_size << ' ' << monoid_size;
  for (auto [d, k] : dims) os << ' ' << d << '^' << k;
  os << ' ' << dim_sum;
  return os.str();
}

Table1Row table1_row(const GroupDescriptor& d, const ClosureOptions& opts) {
  CoxeterGroup g = build_group(d);
  return table1_row(g, bihecke_monoid(g, opts), opts);
}

Table1Row table1_row(const CoxeterGroup& g, const TransformationMonoid& m, const ClosureOptions& opts) {
  TransformationMonoid mw0 = borel(g, BorelFix::LongestElement, m, opts);
  Table1Row row;
  row.name = g.descriptor().name();
  row.group_size = g.size();
  row.borel_size = mw0.size();
  row.monoid_size = m.size();
  for (ElementId w = 0; w < g.size(); ++w) {
    std::size_t k = dim_simple(g, w);
    row.dims[k] += 1;
    row.dim_sum += k;
  }
  return row;
}

}  // namespace bihecke

#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <set>

#include "bihecke/fmonoid.hpp"

using namespace bihecke;

namespace {

ElementId el(const CoxeterGroup& W, const char* s) { return *W.parse_element(s); }

WFunction word_fn(const CoxeterGroup& W, std::initializer_list<int> word) {
  // positive i: pi_i, negative i: opi_i (1-based)
  WFunction f = identity_function(W.size());
  for (int x : word) f = compose(f, x > 0 ? pi(W, x - 1) : opi(W, -x - 1));
  return f;
}

bool is_left_interval(const CoxeterGroup& W, const std::vector<ElementId>& s) {
  ElementId lo = s.front(), hi = s.front();
  for (ElementId x : s) {
    if (W.length(x) < W.length(lo)) lo = x;
    if (W.length(x) > W.length(hi)) hi = x;
  }
  return W.interval(lo, hi, Order::Left) == s;
}

}  // namespace

TEST_CASE("biHecke monoid sizes") {
  CHECK(bihecke_monoid(build_group(GroupDescriptor::A(0))).size() == 1);
  CHECK(bihecke_monoid(build_group(GroupDescriptor::A(1))).size() == 3);
  CHECK(bihecke_monoid(build_group(GroupDescriptor::A(2))).size() == 23);
  auto W3 = build_group(GroupDescriptor::A(3));
  auto M3 = bihecke_monoid(W3);
  CHECK(M3.size() == 477);
  CHECK(borel(W3, BorelFix::LongestElement, M3).size() == 71);
  CHECK(borel(W3, BorelFix::Identity, M3).size() == 71);
  auto W2 = build_group(GroupDescriptor::A(2));
  CHECK(borel(W2, BorelFix::Identity).size() == 8);
  CHECK(borel(build_group(GroupDescriptor::I2(5)), BorelFix::LongestElement).size() == 22);
}

TEST_CASE("closure is deterministic across thread counts") {
  auto W = build_group(GroupDescriptor::B(3));
  ClosureOptions one, three;
  three.threads = 3;
  auto a = bihecke_monoid(W, one), b = bihecke_monoid(W, three);
  CHECK(a.raw_images() == b.raw_images());
  for (std::size_t f = 0; f < a.size(); ++f) CHECK(a.word(f) == b.word(f));
}

TEST_CASE("closure respects the element cap") {
  auto W = build_group(GroupDescriptor::A(3));
  ClosureOptions o;
  o.max_elements = 100;
  CHECK_THROWS_AS(bihecke_monoid(W, o), SizeError);
}

TEST_CASE("Cayley tables and words") {
  auto W = build_group(GroupDescriptor::A(2));
  auto M = bihecke_monoid(W);
  for (std::size_t f = 0; f < M.size(); ++f) {
    WFunction x = identity_function(W.size());
    for (std::size_t k : M.word(f)) x = compose(x, M.function(M.generator(k)));
    CHECK(M.find(x) == f);
    for (std::size_t k = 0; k < M.generator_count(); ++k) {
      CHECK(M.right(f, k) == M.multiply(f, M.generator(k)));
      CHECK(M.left(k, f) == M.multiply(M.generator(k), f));
    }
  }
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::size_t a = rng() % M.size(), b = rng() % M.size();
    CHECK(M.find(compose(M.function(a), M.function(b))));
  }
}

TEST_CASE("Green structure of M(A2)") {
  auto M = bihecke_monoid(build_group(GroupDescriptor::A(2)));
  auto gs = green(M);
  std::multiset<std::uint32_t> sizes(gs.J_size.begin(), gs.J_size.end());
  CHECK(sizes == std::multiset<std::uint32_t>{1, 2, 2, 6, 6, 6});
  std::multiset<std::pair<std::uint32_t, std::uint32_t>> shapes;
  for (std::size_t j = 0; j < gs.nJ; ++j) shapes.emplace(gs.J_rows[j], gs.J_cols[j]);
  CHECK(shapes == std::multiset<std::pair<std::uint32_t, std::uint32_t>>{{1, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}, {1, 6}});
  CHECK(gs.nH == M.size());
  for (std::size_t f = 0; f < M.size(); ++f)
    for (std::size_t h = 0; h < M.size(); ++h)
      if (gs.H[f] == gs.H[h]) CHECK((gs.R[f] == gs.R[h] && gs.L[f] == gs.L[h]));
}

TEST_CASE("Rees matrix monoid") {
  auto R = rees_monoid({{1, 0}, {0, 1}});
  CHECK(R.size() == 6);
  auto gs = green(R);
  std::multiset<std::uint32_t> sizes(gs.J_size.begin(), gs.J_size.end());
  CHECK(sizes == std::multiset<std::uint32_t>{1, 1, 4});
  auto gen = [&](const std::string& l) {
    for (std::size_t k = 0; k < R.generator_count(); ++k)
      if (R.generator_labels()[k] == l) return R.generator(k);
    return std::size_t(-1);
  };
  CHECK(R.multiply(gen("b11"), gen("b12")) == gen("b12"));
  CHECK(R.multiply(gen("b11"), gen("b21")) == gen("0"));
  CHECK(R.multiply(gen("b12"), gen("0")) == gen("0"));
  CHECK(is_aperiodic(R));
  CHECK(rees_monoid({{1, 1}, {1, 0}}).size() == 6);
}

TEST_CASE("omega and aperiodicity") {
  auto W = build_group(GroupDescriptor::A(3));
  auto M = bihecke_monoid(W);
  CHECK(is_aperiodic(M));
  for (std::size_t f = 0; f < M.size(); ++f) {
    std::size_t e = omega(M, f);
    CHECK(M.is_idempotent(e));
    CHECK(M.find(omega(M.function(f))) == e);
  }
  // the group S3 acting on itself by right multiplication
  auto W2 = build_group(GroupDescriptor::A(2));
  std::vector<WFunction> gens;
  for (int i = 0; i < 2; ++i) {
    WFunction s(W2.size());
    for (ElementId w = 0; w < W2.size(); ++w) s[w] = W2.right_mul(w, i);
    gens.push_back(s);
  }
  auto S3 = closure(W2.size(), {"s1", "s2"}, gens);
  CHECK(S3.size() == 6);
  CHECK_FALSE(is_aperiodic(S3));
  CHECK(omega(S3, S3.generator(0)) == S3.identity());
}

TEST_CASE("operators on A3") {
  auto W = build_group(GroupDescriptor::A(3));
  CHECK(W.label(pi(W, 0)[W.identity()]) == "2134");
  CHECK(W.label(pi(W, 0)[el(W, "2134")]) == "2134");
  auto pw0 = pi_of(W, W.w0());
  for (ElementId w = 0; w < W.size(); ++w) CHECK(W.label(pw0[w]) == "4321");
  for (int i = 0; i < 3; ++i) {
    auto p = pi(W, i), q = opi(W, i);
    for (ElementId w = 0; w < W.size(); ++w) CHECK(q[w] == W.product(W.w0(), p[W.product(W.w0(), w)]));
    CHECK(bar(W, p) == q);
  }
  auto f = word_fn(W, {1, 3, -2});
  auto img = image_set(f);
  ElementId lo = img.front(), hi = img.front();
  for (ElementId x : img) {
    if (W.length(x) < W.length(lo)) lo = x;
    if (W.length(x) > W.length(hi)) hi = x;
  }
  CHECK(W.label(lo) == "2143");
  CHECK(W.label(hi) == "4231");
  for (ElementId x : img) CHECK((W.le_L(lo, x) && W.le_L(x, hi)));
}

TEST_CASE("order preservation and fiber structure on M(A3)") {
  auto W = build_group(GroupDescriptor::A(3));
  auto M = bihecke_monoid(W);
  auto gs = green(M);
  std::map<std::vector<std::vector<ElementId>>, std::uint32_t> rclass;
  for (std::size_t id = 0; id < M.size(); ++id) {
    auto f = M.function(id);
    for (ElementId w = 0; w < W.size(); ++w)
      for (int j = 0; j < W.rank(); ++j) {
        ElementId sw = W.left_mul(j, w);
        CHECK((f[sw] == f[w] || f[sw] == W.left_mul(j, f[w])));
      }
    for (ElementId u = 0; u < W.size(); ++u)
      for (ElementId v = 0; v < W.size(); ++v) {
        if (W.le_L(u, v)) {
          CHECK(W.le_L(f[u], f[v]));
          CHECK(W.length(f[v]) - W.length(f[u]) <= W.length(v) - W.length(u));
        }
        if (W.le_B(u, v)) CHECK(W.le_B(f[u], f[v]));
      }
    if (f[0] == 0)
      for (ElementId w = 0; w < W.size(); ++w) CHECK(W.le_B(f[w], w));
    if (f[W.w0()] == W.w0())
      for (ElementId w = 0; w < W.size(); ++w) CHECK(W.le_B(w, f[w]));
    auto img = image_set(f);
    if (is_idempotent(f)) CHECK(is_left_interval(W, img));
    std::vector<ElementId> fixed;
    for (ElementId w = 0; w < W.size(); ++w)
      if (f[w] == w) fixed.push_back(w);
    if (!fixed.empty()) CHECK(is_left_interval(W, fixed));
    // unique minimum and maximum of the image in left order
    std::size_t mins = 0, maxs = 0;
    for (ElementId x : img) {
      bool mn = true, mx = true;
      for (ElementId y : img) {
        if (y != x && W.le_L(y, x)) mn = false;
        if (y != x && W.le_L(x, y)) mx = false;
      }
      mins += mn;
      maxs += mx;
    }
    CHECK(mins == 1);
    CHECK(maxs == 1);
    CHECK(check_fiber_contraction(W, f));
    auto parts = fibers(f);
    CHECK(reconstruct(W, parts, f[0]) == f);
    CHECK(rank_of(f) == parts.size());
    // R-classes are fiber classes
    auto key = parts;
    std::sort(key.begin(), key.end());
    auto [it, fresh] = rclass.emplace(key, gs.R[id]);
    if (!fresh) CHECK(it->second == gs.R[id]);
    // R-class size from the type
    ElementId t = type_of(W, f);
    std::size_t rsize = 0;
    for (std::size_t h = 0; h < M.size(); ++h) rsize += gs.R[h] == gs.R[id];
    CHECK(rsize == W.interval(W.identity(), W.product(W.inverse(t), W.w0()), Order::Right).size());
    CHECK(bar(W, bar(W, f)) == f);
    CHECK(M.find(bar(W, f)));
  }
  CHECK(rclass.size() == gs.nR);
  std::set<std::uint32_t> rids;
  for (auto& [_, r] : rclass) rids.insert(r);
  CHECK(rids.size() == gs.nR);
}

TEST_CASE("bar is an anti-generator-swapping morphism") {
  auto W = build_group(GroupDescriptor::A(2));
  auto M = bihecke_monoid(W);
  for (std::size_t a = 0; a < M.size(); ++a)
    for (std::size_t b = 0; b < M.size(); ++b)
      CHECK(bar(W, M.function(M.multiply(a, b))) == compose(bar(W, M.function(a)), bar(W, M.function(b))));
  auto M1 = borel(W, BorelFix::Identity, M), M0 = borel(W, BorelFix::LongestElement, M);
  std::set<std::size_t> imgs;
  for (std::size_t f = 0; f < M1.size(); ++f) {
    auto b = M0.find(bar(W, M1.function(f)));
    REQUIRE(b);
    imgs.insert(*b);
  }
  CHECK(imgs.size() == M0.size());
}

TEST_CASE("fiber contraction rejects foreign functions") {
  auto W = build_group(GroupDescriptor::A(2));
  std::mt19937 rng(5);
  int rejected = 0;
  for (int t = 0; t < 200; ++t) {
    WFunction f(W.size());
    for (auto& x : f) x = ElementId(rng() % W.size());
    rejected += !check_fiber_contraction(W, f);
  }
  CHECK(rejected > 150);
  CHECK(check_fiber_contraction(W, identity_function(W.size())));
  WFunction bad = identity_function(W.size());
  std::swap(bad[0], bad[W.w0()]);
  CHECK_FALSE(check_fiber_contraction(W, bad));
  CHECK_THROWS_AS(reconstruct(W, {{0, W.w0()}, {1, 2, 3, 4}}, 0), DomainError);
}

namespace {

void e_family_checks(const CoxeterGroup& W, const TransformationMonoid& M) {
  auto gs = green(M);
  std::size_t regular = 0;
  for (bool r : gs.regular) regular += r;
  CHECK(regular == W.size());
  std::vector<std::size_t> hit(gs.nJ, 0);
  for (ElementId w = 0; w < W.size(); ++w) {
    auto e = e_w(W, w);
    CHECK(is_idempotent(e));
    CHECK(e[0] == 0);
    CHECK(e[W.w0()] == w);
    CHECK(image_set(e) == W.interval(W.identity(), w, Order::Left));
    // w'.e_w is the Bruhat-largest element of [1,w']_B cap [1,w]_L
    for (ElementId x = 0; x < W.size(); ++x) {
      ElementId best = 0;
      for (ElementId z = 0; z < W.size(); ++z)
        if (W.le_B(z, x) && W.le_L(z, w) && W.length(z) > W.length(best)) best = z;
      CHECK(e[x] == best);
      CHECK(W.le_B(e[x], x));
    }
    auto id = M.find(e);
    REQUIRE(id);
    ++hit[gs.J[*id]];
    auto et = e_tilde(W, w);
    CHECK(is_idempotent(et));
    CHECK(M.find(et));
    for (ElementId a = 0; a < W.size(); ++a) {
      if (!W.le_L(a, w)) continue;
      auto eab = e_ab(W, a, w);
      CHECK(is_idempotent(eab));
      CHECK(image_set(eab) == W.interval(a, w, Order::Left));
      CHECK(M.find(eab));
    }
  }
  for (std::size_t j = 0; j < gs.nJ; ++j) CHECK(hit[j] == (gs.regular[j] ? 1u : 0u));
  CHECK(e_w(W, W.w0()) == identity_function(W.size()));
  CHECK(image_set(e_w(W, W.identity())) == std::vector<ElementId>{0});
}

}  // namespace

TEST_CASE("idempotent family e_w") {
  for (const char* d : {"A3", "B2"}) {
    CAPTURE(d);
    auto W = build_group(GroupDescriptor::parse(d));
    e_family_checks(W, bihecke_monoid(W));
  }
  auto W2 = build_group(GroupDescriptor::A(2));
  CHECK(W2.label(e_w(W2, el(W2, "213"))[el(W2, "321")]) == "213");
}

TEST_CASE("regular J-class count equals |W|") {
  for (const char* d : {"A1", "A2", "B2", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)"}) {
    CAPTURE(d);
    auto W = build_group(GroupDescriptor::parse(d));
    auto gs = green(bihecke_monoid(W));
    std::size_t regular = 0;
    for (bool r : gs.regular) regular += r;
    CHECK(regular == W.size());
  }
}

TEST_CASE("M1 idempotent order and generators") {
  auto W = build_group(GroupDescriptor::A(3));
  auto M = bihecke_monoid(W);
  auto M1 = borel(W, BorelFix::Identity, M);
  for (ElementId u = 0; u < W.size(); ++u)
    for (ElementId v = 0; v < W.size(); ++v) {
      auto eu = e_w(W, u), ev = e_w(W, v);
      auto p = compose(eu, ev);
      CHECK((p == eu) == W.le_L(u, v));
      CHECK(omega(p) == e_w(W, W.meet(u, v, Side::Left)));
    }
  for (int r = 2; r <= 4; ++r) {
    auto G = build_group(GroupDescriptor::A(r));
    auto B = borel(G, BorelFix::Identity, bihecke_monoid(G));
    auto irr = irreducibles(B);
    std::set<WFunction> expect;
    for (ElementId w = 0; w < G.size(); ++w) {
      ElementId x = G.product(G.inverse(w), G.w0());
      if (std::popcount(G.right_descents(x)) <= 1 && w != G.w0()) expect.insert(e_w(G, w));
    }
    std::set<WFunction> got;
    for (auto f : irr) got.insert(B.function(f));
    CHECK(got == expect);
    // with the identity e_{w0} this is the 2^n - n Grassmannian count for S_n
    CHECK(irr.size() + 1 == (std::size_t{1} << (r + 1)) - std::size_t(r + 1));
  }
}

TEST_CASE("non-regular element with interval image in B3") {
  auto W = build_group(GroupDescriptor::B(3));
  auto M = bihecke_monoid(W);
  auto gs = green(M);
  auto f = word_fn(W, {-1, -3, -2, 1, -3, -2, -1});
  auto id = M.find(f);
  REQUIRE(id);
  CHECK(is_left_interval(W, image_set(f)));
  CHECK_FALSE(gs.regular[gs.J[*id]]);
}

TEST_CASE("cache round trip") {
  auto W = build_group(GroupDescriptor::A(3));
  auto M = bihecke_monoid(W);
  auto path = (std::filesystem::temp_directory_path() / "bihecke_cache_test.bin").string();
  save_monoid(path, W, M);
  auto L = load_monoid(path, W);
  REQUIRE(L);
  CHECK(L->raw_images() == M.raw_images());
  CHECK(L->generator_labels() == M.generator_labels());
  for (std::size_t f = 0; f < M.size(); ++f) {
    CHECK(L->word(f) == M.word(f));
    for (std::size_t k = 0; k < M.generator_count(); ++k) CHECK(L->right(f, k) == M.right(f, k));
  }
  auto W2 = build_group(GroupDescriptor::B(2));
  CHECK_THROWS_AS(load_monoid(path, W2), Error);
  std::remove(path.c_str());
  CHECK_FALSE(load_monoid(path, W));
}

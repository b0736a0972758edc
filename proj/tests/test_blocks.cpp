#include "doctest.h"

#include <random>

#include "bihecke/blocks.hpp"

using namespace bihecke;

namespace {

ElementId el(const CoxeterGroup& W, const char* s) { return *W.parse_element(s); }

IndexSet set_of(std::initializer_list<int> xs) {
  IndexSet s = 0;
  for (int x : xs) s |= IndexSet{1} << (x - 1);
  return s;
}

std::vector<int> one_line(const CoxeterGroup& W, ElementId w) {
  std::vector<int> p;
  for (auto x : W.action(w)) p.push_back(x + 1);
  return p;
}

}  // namespace

TEST_CASE("blocks of 4312") {
  auto W = build_group(GroupDescriptor::A(3));
  ElementId w = el(W, "4312");
  auto b = is_right_block(W, w, set_of({2, 3}));
  REQUIRE(b);
  CHECK(W.label(b->cutting_point) == "4123");
  CHECK(b->J == set_of({1, 2}));
  std::vector<IndexSet> red, nonred;
  for (const auto& x : all_blocks(W, w)) (x.reduced ? red : nonred).push_back(x.K);
  CHECK(red == std::vector<IndexSet>{0, set_of({1}), set_of({2, 3}), set_of({1, 2, 3})});
  CHECK(nonred == std::vector<IndexSet>{set_of({3}), set_of({1, 3})});
  std::vector<IndexSet> lefts;
  for (const auto& x : reduced_blocks(W, w)) lefts.push_back(x.J);
  CHECK(lefts == std::vector<IndexSet>{0, set_of({3}), set_of({1, 2}), set_of({1, 2, 3})});
  std::vector<std::string> pts;
  for (ElementId v : cutting_points(W, w)) pts.push_back(W.label(v));
  std::sort(pts.begin(), pts.end());
  CHECK(pts == std::vector<std::string>{"1234", "3412", "4123", "4312"});
  CHECK(W.label(W.meet(el(W, "3412"), el(W, "4123"), Side::Right)) == "1234");
  CHECK(short_right_nondescents(W, w) == set_of({3}));
  CHECK(jblock(W, w, el(W, "1432")) == 0);
  CHECK(jblock(W, w, w) == 0);
  CHECK(mobius_cutting(W, W.identity(), w) == 1);
}

TEST_CASE("non-block example in A4") {
  auto W = build_group(GroupDescriptor::A(4));
  ElementId w = el(W, "43125");
  CHECK_FALSE(is_right_block(W, w, set_of({1, 4})));
  CHECK(W.min_coset_right(w, set_of({1, 4})).rep == W.min_coset_left(w, set_of({3, 4})).rep);
  CHECK_FALSE(is_left_block(W, w, set_of({3, 4})));
}

TEST_CASE("blocks of w0 and identity") {
  for (const char* d : {"A3", "B3", "I2(5)"}) {
    auto W = build_group(GroupDescriptor::parse(d));
    CHECK(reduced_blocks(W, W.w0()).size() == (std::size_t{1} << W.rank()));
    auto idb = all_blocks(W, W.identity());
    CHECK(idb.size() == (std::size_t{1} << W.rank()));
    CHECK(reduced_blocks(W, W.identity()).size() == 1);
    for (ElementId u = 0; u < W.size(); ++u)
      CHECK(jblock(W, W.w0(), u) == (W.full_index_set() & ~W.left_descents(u)));
  }
}

TEST_CASE("cutting poset of S3 and U_4312") {
  auto W2 = build_group(GroupDescriptor::A(2));
  auto cp = cutting_poset(W2);
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [a, b] : cp.poset.covers()) covers.emplace_back(W2.label(ElementId(a)), W2.label(ElementId(b)));
  std::sort(covers.begin(), covers.end());
  CHECK(covers == std::vector<std::pair<std::string, std::string>>{
                      {"123", "132"}, {"123", "213"}, {"123", "231"}, {"123", "312"}, {"231", "321"}, {"312", "321"}});
  auto W = build_group(GroupDescriptor::A(3));
  ElementId w = el(W, "4312");
  std::vector<std::string> U;
  for (ElementId x = 0; x < W.size(); ++x)
    if (cutting_le(W, w, x)) U.push_back(W.label(x));
  CHECK(U == std::vector<std::string>{"4312", "4321"});
}

TEST_CASE("join-irreducible counts of the cutting poset") {
  std::vector<std::size_t> expect{0, 1, 4, 16};
  for (int r = 0; r <= 3; ++r) {
    auto W = build_group(GroupDescriptor::A(r));
    CHECK(cutting_poset(W).poset.join_irreducibles().size() == expect[r]);
  }
}

TEST_CASE("cutting poset structure") {
  for (const char* d : {"A2", "A3", "B2", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)"}) {
    CAPTURE(d);
    auto W = build_group(GroupDescriptor::parse(d));
    auto cp = cutting_poset(W);
    const auto& P = cp.poset;
    CHECK(P.is_meet_semilattice());
    CHECK(P.is_meet_distributive());
    CHECK(P.minimal_elements() == std::vector<std::size_t>{0});
    for (std::size_t u = 0; u < W.size(); ++u) {
      auto mu = P.mobius_from(u);
      for (std::size_t w = 0; w < W.size(); ++w) {
        if (!P.leq(u, w)) continue;
        CHECK((W.le_L(ElementId(u), ElementId(w)) && W.le_R(ElementId(u), ElementId(w))));
        CHECK(mobius_cutting(W, ElementId(u), ElementId(w)) == mu[w]);
        auto I = P.interval(u, w);
        Poset sub = P.induced(I);
        CHECK(sub.is_distributive());
        Poset weak = Poset::from_relation({I.size(), ""}, [&](std::size_t a, std::size_t b) {
          return W.le_R(ElementId(I[a]), ElementId(I[b]));
        });
        for (std::size_t a = 0; a < I.size(); ++a)
          for (std::size_t b = 0; b < I.size(); ++b) CHECK(sub.leq(a, b) == weak.leq(a, b));
      }
      std::vector<std::size_t> pts;
      for (ElementId v : cutting_points(W, ElementId(u))) pts.push_back(v);
      std::vector<std::size_t> below;
      for (std::size_t x = 0; x < W.size(); ++x)
        if (P.leq(x, u)) below.push_back(x);
      CHECK(pts == below);
    }
    if (W.rank() > 1) CHECK_FALSE(P.is_lattice());
  }
}

namespace {

void block_lattice_checks(const CoxeterGroup& W, ElementId w) {
  auto bl = all_blocks(W, w);
  std::vector<std::optional<BlockData>> byK(W.full_index_set() + 1);
  for (const auto& b : bl) byK[b.K] = b;
  for (const auto& a : bl) {
    for (const auto& b : bl) {
      auto u = byK[a.K | b.K];
      auto i = byK[a.K & b.K];
      REQUIRE(u);
      REQUIRE(i);
      CHECK(u->J == (a.J | b.J));
      CHECK(i->J == (a.J & b.J));
      CHECK(i->cutting_point == W.join(a.cutting_point, b.cutting_point, Side::Right));
      CHECK(u->cutting_point == W.meet(a.cutting_point, b.cutting_point, Side::Right));
    }
    // both sides of the exchange relation are reduced
    for (auto [k, j] : a.phi) {
      CHECK(W.product(a.cutting_point, W.generator(k)) == W.product(W.generator(j), a.cutting_point));
      CHECK_FALSE(W.has_right_descent(a.cutting_point, k));
    }
    auto l = is_left_block(W, w, a.J);
    REQUIRE(l);
    CHECK(l->K == a.K);
    CHECK(l->cutting_point == a.cutting_point);
    CHECK(l->reduced == a.reduced);
    CHECK(a.reduced == (reduce_block(W, w, a.K) == a.K));
    bool direct = true;
    for (IndexSet K2 = 0; K2 < a.K + 1; ++K2)
      if ((K2 & ~a.K) == 0 && K2 != a.K && W.min_coset_right(w, K2).rep == a.cutting_point) direct = false;
    CHECK(a.reduced == direct);
    CHECK(a.trivial == (a.cutting_point == w));
  }
}

}  // namespace

TEST_CASE("block closure and weak-order antimorphism") {
  for (const char* d : {"A3", "B2"}) {
    auto W = build_group(GroupDescriptor::parse(d));
    for (ElementId w = 0; w < W.size(); ++w) block_lattice_checks(W, w);
  }
  auto B3 = build_group(GroupDescriptor::B(3));
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) block_lattice_checks(B3, ElementId(rng() % B3.size()));
}

TEST_CASE("W_J w = w W_K as sets") {
  auto W = build_group(GroupDescriptor::A(3));
  for (ElementId w = 0; w < W.size(); ++w)
    for (const auto& b : all_blocks(W, w)) {
      std::vector<ElementId> left, right;
      for (ElementId x = 0; x < W.size(); ++x) {
        if (W.in_parabolic(x, b.J)) left.push_back(W.product(x, w));
        if (W.in_parabolic(x, b.K)) right.push_back(W.product(w, x));
      }
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      CHECK(left == right);
    }
}

TEST_CASE("tiling by left blocks") {
  for (const char* d : {"A3", "B2", "I2(5)"}) {
    auto W = build_group(GroupDescriptor::parse(d));
    for (ElementId w = 0; w < W.size(); ++w)
      for (const auto& b : all_blocks(W, w)) {
        auto f = W.min_coset_left(w, b.J);
        auto A = W.interval(W.identity(), f.factor, Order::Right);
        auto B = W.interval(W.identity(), f.rep, Order::Right);
        std::vector<ElementId> prod;
        for (ElementId u : A)
          for (ElementId v : B) prod.push_back(W.product(u, v));
        std::sort(prod.begin(), prod.end());
        CHECK(std::adjacent_find(prod.begin(), prod.end()) == prod.end());
        CHECK(prod == W.interval(W.identity(), w, Order::Right));
      }
  }
}

TEST_CASE("descent-complement indexing of cutting points") {
  for (const char* d : {"A3", "B2"}) {
    auto W = build_group(GroupDescriptor::parse(d));
    for (ElementId w = 0; w < W.size(); ++w) {
      auto pts = cutting_points(W, w);
      std::vector<IndexSet> keys;
      for (ElementId u : pts) keys.push_back(W.full_index_set() & ~W.right_descents(u));
      for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = 0; b < pts.size(); ++b) {
          CHECK(std::count(keys.begin(), keys.end(), keys[a] | keys[b]) == 1);
          CHECK(std::count(keys.begin(), keys.end(), keys[a] & keys[b]) == 1);
          // antiisomorphism: u below v iff the key of u contains the key of v
          CHECK(cutting_le(W, pts[a], pts[b]) == ((keys[b] & ~keys[a]) == 0));
        }
    }
  }
}

TEST_CASE("matrix-block examples") {
  std::vector<int> w{3, 6, 4, 7, 5, 8, 1, 2};
  auto bl = matrix_blocks_typeA(w);
  auto find = [&](int lo, int hi) {
    for (const auto& b : bl)
      if (b.col_lo == lo && b.col_hi == hi) return std::optional<MatrixBlock>(b);
    return std::optional<MatrixBlock>();
  };
  auto b25 = find(2, 5);
  REQUIRE(b25);
  CHECK(b25->pattern == std::vector<int>{3, 1, 4, 2});
  CHECK(b25->connected);
  auto b78 = find(7, 8);
  REQUIRE(b78);
  CHECK_FALSE(b78->connected);
  CHECK(matrix_blocks_typeA({5, 8, 3, 1, 7, 4, 6, 2}).empty());
  CHECK(matrix_blocks_typeA({1, 2, 3, 4}).size() == 5);
}

namespace {

// Blocks predicted from matrix-blocks: each maximal run {i..k-1} of K must
// cover the column interval [i, k].
void matrix_oracle(const CoxeterGroup& W, ElementId w) {
  auto p = one_line(W, w);
  for (IndexSet K = 0; K <= W.full_index_set(); ++K) {
    bool block = true, reduced = true, trivial = true;
    for (int i = 0; i < W.rank();) {
      if (!(K >> i & 1u)) {
        ++i;
        continue;
      }
      int j = i;
      while (j < W.rank() && (K >> j & 1u)) ++j;
      // run of generators i..j-1 (0-based) covers positions i+1..j+1
      if (!is_matrix_block(p, i + 1, j + 1)) {
        block = false;
      } else {
        auto mb = matrix_block_at(p, i + 1, j + 1);
        reduced = reduced && mb.connected;
        for (std::size_t t = 0; t < mb.pattern.size(); ++t)
          if (mb.pattern[t] != int(t) + 1) trivial = false;
      }
      i = j;
    }
    auto b = is_right_block(W, w, K);
    CHECK(bool(b) == block);
    if (b && block) {
      CHECK(b->reduced == reduced);
      CHECK(b->trivial == trivial);
    }
    if (K == W.full_index_set()) break;
  }
}

}  // namespace

TEST_CASE("type A blocks match matrix-blocks") {
  auto W = build_group(GroupDescriptor::A(3));
  for (ElementId w = 0; w < W.size(); ++w) matrix_oracle(W, w);
  auto W5 = build_group(GroupDescriptor::A(5));
  std::mt19937 rng(11);
  for (int t = 0; t < 500; ++t) matrix_oracle(W5, ElementId(rng() % W5.size()));
}

#include "doctest.h"

#include "bihecke/coxeter.hpp"

using namespace bihecke;

namespace {
ElementId el(const CoxeterGroup& W, const char* s) { return *W.parse_element(s); }
}  // namespace

TEST_CASE("group orders") {
  CHECK(build_group(GroupDescriptor::parse("A0")).size() == 1);
  CHECK(build_group(GroupDescriptor::parse("A3")).size() == 24);
  CHECK(build_group(GroupDescriptor::parse("B3")).size() == 48);
  CHECK(build_group(GroupDescriptor::parse("D4")).size() == 192);
  CHECK(build_group(GroupDescriptor::parse("G2")).size() == 12);
  CHECK(build_group(GroupDescriptor::parse("I2(7)")).size() == 14);
  CHECK(build_group(GroupDescriptor::parse("A1xA1")).size() == 4);
  CHECK(build_group(GroupDescriptor::parse("A1xB2")).size() == 16);
  CHECK(build_group(GroupDescriptor::parse("I2(2)")).size() == 4);
}

TEST_CASE("size cap refuses large groups") {
  CHECK_THROWS_AS(build_group(GroupDescriptor::parse("A9"), 1000), SizeError);
  CHECK_THROWS_AS(GroupDescriptor::parse("Q3"), DomainError);
}

TEST_CASE("one-line products and descents in type A") {
  auto W = build_group(GroupDescriptor::A(2));
  CHECK(W.label(W.product(el(W, "213"), el(W, "132"))) == "231");
  auto W3 = build_group(GroupDescriptor::A(3));
  ElementId w = el(W3, "4312");
  CHECK(W3.right_descents(w) == 0b011);
  CHECK(W3.length(w) == 5);
  CHECK(W3.label(W3.min_coset_right(w, 0b001).rep) == "3412");
  CHECK(W3.interval(W3.identity(), w, Order::Right).size() == 12);
  CHECK(W3.label(W3.w0()) == "4321");
}

TEST_CASE("group axioms and length identities") {
  for (const char* d : {"A3", "B3", "D4", "G2", "A1xA2", "I2(5)"}) {
    auto W = build_group(GroupDescriptor::parse(d));
    CAPTURE(d);
    for (ElementId w = 0; w < W.size(); ++w) {
      CHECK(W.product(w, W.inverse(w)) == W.identity());
      CHECK(W.length(W.inverse(w)) == W.length(w));
      CHECK(W.length(W.product(W.w0(), w)) == W.max_length() - W.length(w));
      CHECK(W.from_word(W.reduced_word(w)) == w);
      CHECK(int(W.reduced_word(w).size()) == W.length(w));
      CHECK(*W.parse_element(W.label(w)) == w);
    }
  }
}

TEST_CASE("Bruhat order: table agrees with subword criterion") {
  auto W = build_group(GroupDescriptor::parse("B3"));
  REQUIRE(W.has_order_tables());
  for (ElementId w = 0; w < W.size(); ++w) {
    auto word = W.reduced_word(w);
    std::vector<bool> below(W.size(), false);
    for (unsigned m = 0; m < (1u << word.size()); ++m) {
      std::vector<int> sub;
      for (std::size_t k = 0; k < word.size(); ++k)
        if (m >> k & 1u) sub.push_back(word[k]);
      below[W.from_word(sub)] = true;
    }
    for (ElementId u = 0; u < W.size(); ++u) CHECK(W.le_B(u, w) == below[u]);
  }
}

TEST_CASE("weak orders and coset factorizations") {
  auto W = build_group(GroupDescriptor::parse("A3"));
  for (ElementId w = 0; w < W.size(); ++w)
    for (IndexSet K = 0; K <= W.full_index_set(); ++K) {
      auto r = W.min_coset_right(w, K);
      CHECK(W.product(r.rep, r.factor) == w);
      CHECK(W.in_parabolic(r.factor, K));
      CHECK((W.right_descents(r.rep) & K) == 0);
      auto l = W.min_coset_left(w, K);
      CHECK(W.product(l.factor, l.rep) == w);
      CHECK((W.left_descents(l.rep) & K) == 0);
    }
  for (ElementId u = 0; u < W.size(); ++u)
    for (ElementId v = 0; v < W.size(); ++v) {
      CHECK(W.le_R(u, v) == (W.length(u) + W.length(W.product(W.inverse(u), v)) == W.length(v)));
      CHECK(W.le_L(u, v) == W.le_R(W.inverse(u), W.inverse(v)));
      if (W.le_R(u, v) || W.le_L(u, v)) CHECK(W.le_B(u, v));
    }
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihecke/bitmatrix.hpp"

namespace bihecke {

// Finite poset on nodes 0..n-1. Reachability is kept as two bit matrices:
// below_.row(y) = {x : x <= y} and above_.row(x) = {y : x <= y}.
class Poset {
 public:
  Poset() = default;
  // leq(x, y) must describe a partial order; checked on construction.
  static Poset from_relation(std::vector<std::string> labels, const std::function<bool(std::size_t, std::size_t)>& leq);
  // Reflexive-transitive closure of the given (x < y) pairs; throws on cycles.
  static Poset from_covers(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& lt);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool leq(std::size_t x, std::size_t y) const { return below_.test(y, x); }
  bool lt(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  // Hasse diagram as (lower, upper) pairs, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  std::vector<std::size_t> lower_covers(std::size_t y) const;
  std::vector<std::size_t> upper_covers(std::size_t x) const;
  std::vector<std::size_t> interval(std::size_t x, std::size_t y) const;
  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  // Length of the longest chain from a minimal element to x.
  int height(std::size_t x) const { return height_[x]; }

  // Throws DomainError if x is not below y.
  long long mobius(std::size_t x, std::size_t y) const;
  // mu(x, z) for every z (zero outside the upper set of x).
  std::vector<long long> mobius_from(std::size_t x) const;

  std::optional<std::size_t> meet(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> join(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> meet_of(const std::vector<std::size_t>& xs) const;

  bool is_meet_semilattice() const;
  bool is_join_semilattice() const;
  bool is_lattice() const { return is_meet_semilattice() && is_join_semilattice(); }
  bool is_distributive() const;
  bool is_meet_distributive() const;
  // The interval [x, y] is isomorphic to a Boolean lattice.
  bool is_boolean_interval(std::size_t x, std::size_t y) const;

  std::vector<std::size_t> join_irreducibles() const;
  Poset induced(const std::vector<std::size_t>& nodes) const;
  // Lattice of down-closed subsets; refuses more than 25 nodes.
  Poset lower_sets() const;

  // One node per element and one edge per cover, ordered by (height, label).
  std::string to_dot(const std::string& name = "poset",
                     const std::function<std::string(std::size_t, std::size_t)>& edge_color = {}) const;

 private:
  void finish();

  std::vector<std::string> labels_;
  BitMatrix below_, above_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<int> height_;
};

}  // namespace bihecke

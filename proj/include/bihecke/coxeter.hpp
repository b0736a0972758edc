#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bihecke/bitmatrix.hpp"
#include "bihecke/errors.hpp"

namespace bihecke {

using ElementId = std::uint32_t;
// Subset of the index set; bit i stands for generator i (0-based internally,
// printed 1-based).
using IndexSet = std::uint32_t;

enum class Family { A, B, D, I2, Product };
enum class Side { Left, Right };
enum class Order { Left, Right, Bruhat };

std::vector<int> index_members(IndexSet s);
std::string format_index_set(IndexSet s);  // "{1,3}"

struct GroupDescriptor {
  Family family = Family::A;
  int n = 0;  // Cartan rank for A, B, D; p for I2
  std::vector<GroupDescriptor> factors;

  static GroupDescriptor A(int rank) { return {Family::A, rank, {}}; }
  static GroupDescriptor B(int rank) { return {Family::B, rank, {}}; }
  static GroupDescriptor D(int rank) { return {Family::D, rank, {}}; }
  static GroupDescriptor I2(int p) { return {Family::I2, p, {}}; }
  static GroupDescriptor product(std::vector<GroupDescriptor> fs) { return {Family::Product, 0, std::move(fs)}; }

  // Accepts "A3", "B2", "D4", "G2", "I2(7)" and products such as "A1xA1".
  static GroupDescriptor parse(std::string_view text);

  void validate() const;
  std::string name() const;
  int rank() const;
  double order() const;
  bool is_symmetric_group() const { return family == Family::A; }
};

struct CosetFactorization {
  ElementId rep;     // minimal length coset representative
  ElementId factor;  // parabolic part: w = rep * factor (right) or w = factor * rep (left)
};

class CoxeterGroup {
 public:
  const GroupDescriptor& descriptor() const { return desc_; }
  std::size_t size() const { return length_.size(); }
  int rank() const { return rank_; }
  int points() const { return points_; }
  IndexSet full_index_set() const { return rank_ == 0 ? 0 : (IndexSet(~0u) >> (32 - rank_)); }

  ElementId identity() const { return 0; }
  ElementId w0() const { return w0_; }
  ElementId generator(int i) const { return gens_[i]; }

  std::span<const std::uint16_t> action(ElementId w) const {
    return {actions_.data() + std::size_t(w) * points_, std::size_t(points_)};
  }
  std::optional<ElementId> find(std::span<const std::uint16_t> action) const;

  ElementId right_mul(ElementId w, int i) const { return right_[std::size_t(w) * rank_ + i]; }
  ElementId left_mul(int i, ElementId w) const { return left_[std::size_t(w) * rank_ + i]; }
  int length(ElementId w) const { return length_[w]; }
  int max_length() const { return length_[w0_]; }
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  ElementId product(ElementId a, ElementId b) const;

  bool has_right_descent(ElementId w, int i) const { return length(right_mul(w, i)) < length(w); }
  bool has_left_descent(ElementId w, int i) const { return length(left_mul(i, w)) < length(w); }
  IndexSet right_descents(ElementId w) const { return rdes_[w]; }
  IndexSet left_descents(ElementId w) const { return ldes_[w]; }

  // Lexicographically smallest reduced word (0-based generator indices).
  std::vector<int> reduced_word(ElementId w) const;
  ElementId from_word(const std::vector<int>& word) const;

  bool le_R(ElementId u, ElementId w) const;
  bool le_L(ElementId u, ElementId w) const;
  bool le_B(ElementId u, ElementId w) const;
  bool le(Order o, ElementId u, ElementId w) const;
  bool has_order_tables() const { return bruhat_.size() == size(); }
  // Principal lower ideal [1,w] as a bit row; requires order tables.
  const std::uint64_t* lower_set(Order o, ElementId w) const;

  std::vector<ElementId> interval(ElementId a, ElementId b, Order o) const;
  // type([a,b]_L) = b a^{-1}, type([a,b]_R) = a^{-1} b.
  ElementId interval_type(ElementId a, ElementId b, Side side) const;
  ElementId meet(ElementId u, ElementId v, Side side) const;
  ElementId join(ElementId u, ElementId v, Side side) const;

  // w = rep * factor with rep = w^K, factor in W_K.
  CosetFactorization min_coset_right(ElementId w, IndexSet K) const;
  // w = factor * rep with rep = ^J w, factor = w_J in W_J.
  CosetFactorization min_coset_left(ElementId w, IndexSet J) const;
  bool in_parabolic(ElementId w, IndexSet K) const;
  ElementId longest_in_parabolic(IndexSet K) const;
  // Index j with w = s_j, if w is a simple reflection.
  std::optional<int> simple_index(ElementId w) const;

  std::string label(ElementId w) const;
  std::optional<ElementId> parse_element(std::string_view text) const;
  // Element ids in the order used for printed tables.
  std::vector<ElementId> table_order() const;

  friend CoxeterGroup build_group(const GroupDescriptor& d, std::size_t max_elements);

 private:
  void compute_order_tables();

  GroupDescriptor desc_;
  int rank_ = 0;
  int points_ = 0;
  ElementId w0_ = 0;
  std::vector<ElementId> gens_;
  std::vector<std::uint16_t> actions_;
  std::vector<ElementId> right_, left_;
  std::vector<int> length_;
  std::vector<ElementId> inverse_;
  std::vector<IndexSet> rdes_, ldes_;
  std::unordered_map<std::string, ElementId> index_;
  BitMatrix bruhat_, weak_right_, weak_left_;  // row w = lower ideal of w
};

inline constexpr std::size_t kDefaultGroupCap = 10'000'000;
inline constexpr std::size_t kOrderTableLimit = 10'000;

CoxeterGroup build_group(const GroupDescriptor& d, std::size_t max_elements = kDefaultGroupCap);

}  // namespace bihecke

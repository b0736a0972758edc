#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bihecke/coxeter.hpp"

namespace bihecke {

// A function W -> W as its image array: images[w] = w.f.
using WFunction = std::vector<ElementId>;

// Right action: w.(fh) = (w.f).h.
WFunction compose(const WFunction& f, const WFunction& h);
WFunction identity_function(std::size_t n);
bool is_idempotent(const WFunction& f);

struct ClosureOptions {
  std::size_t max_elements = 10'000'000;
  unsigned threads = 1;
  // Called once per finished BFS level with (level, element count).
  std::function<void(std::size_t, std::size_t)> progress;
};

// Finite monoid of functions on {0..degree-1}, closed under composition.
// Element 0 is the identity; ids follow BFS word length over the generators
// in label order, ties broken by lexicographic image array.
class TransformationMonoid {
 public:
  TransformationMonoid() = default;

  // Rebuilds indexes and Cayley tables from an element list in id order.
  static TransformationMonoid from_elements(std::size_t degree, std::vector<std::string> gen_labels,
                                            std::vector<std::uint32_t> gen_ids, std::vector<std::uint16_t> images,
                                            unsigned threads = 1);

  std::size_t size() const { return degree_ ? images_.size() / degree_ : 0; }
  std::size_t degree() const { return degree_; }
  std::size_t identity() const { return 0; }

  std::span<const std::uint16_t> images(std::size_t f) const {
    return {images_.data() + f * degree_, degree_};
  }
  const std::vector<std::uint16_t>& raw_images() const { return images_; }
  WFunction function(std::size_t f) const;
  ElementId apply(std::size_t point, std::size_t f) const { return images_[f * degree_ + point]; }

  std::optional<std::size_t> find(std::span<const std::uint16_t> images) const;
  std::optional<std::size_t> find(const WFunction& f) const;

  std::size_t generator_count() const { return gen_ids_.size(); }
  const std::vector<std::string>& generator_labels() const { return gen_labels_; }
  std::size_t generator(std::size_t k) const { return gen_ids_[k]; }

  // f * g_k and g_k * f.
  std::size_t right(std::size_t f, std::size_t k) const { return right_[f * gen_ids_.size() + k]; }
  std::size_t left(std::size_t k, std::size_t f) const { return left_[f * gen_ids_.size() + k]; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  // A shortest word in the generators (indices into the generator list).
  std::vector<std::size_t> word(std::size_t f) const;
  std::string word_label(std::size_t f) const;

  bool is_idempotent(std::size_t f) const { return multiply(f, f) == f; }

  friend TransformationMonoid closure(std::size_t degree, std::vector<std::string> labels,
                                      const std::vector<WFunction>& gens, const ClosureOptions& opts);

 private:
  std::size_t insert_unchecked(std::span<const std::uint16_t> images);
  void rehash(std::size_t capacity);
  std::uint64_t hash_of(std::span<const std::uint16_t> images) const;
  void build_cayley(unsigned threads);

  std::size_t degree_ = 0;
  std::vector<std::uint16_t> images_;
  std::vector<std::uint32_t> slots_;  // open addressing, value = id + 1
  std::vector<std::string> gen_labels_;
  std::vector<std::uint32_t> gen_ids_;
  std::vector<std::uint32_t> right_, left_;
  std::vector<std::uint32_t> parent_;     // BFS tree: f = parent_[f] * g_{parent_gen_[f]}
  std::vector<std::uint32_t> parent_gen_;
};

TransformationMonoid closure(std::size_t degree, std::vector<std::string> labels, const std::vector<WFunction>& gens,
                             const ClosureOptions& opts = {});

// Class index per element for Green's relations; classes numbered by smallest member.
struct GreenStructure {
  std::vector<std::uint32_t> R, L, J, H;
  std::size_t nR = 0, nL = 0, nJ = 0, nH = 0;
  std::vector<bool> idempotent;       // per element
  std::vector<bool> regular;          // per J-class
  std::vector<std::uint32_t> J_size;  // per J-class
  std::vector<std::uint32_t> J_rows;  // R-classes per J-class
  std::vector<std::uint32_t> J_cols;  // L-classes per J-class
  std::vector<std::uint32_t> transversal;  // first idempotent of each regular J-class
};

GreenStructure green(const TransformationMonoid& m);

// Idempotent power of f. Repeated squaring first, exact power search after 64 doublings.
std::size_t omega(const TransformationMonoid& m, std::size_t f);
WFunction omega(const WFunction& f);
bool is_aperiodic(const TransformationMonoid& m);

// Monoid on {1, (i,j), 0} with (i,j)(i',j') = (i,j') if P[j][i'] = 1 and 0 otherwise,
// realised through its right regular representation. Labels: "1", "b<i><j>", "0".
TransformationMonoid rees_monoid(const std::vector<std::vector<int>>& P);

// biHecke specialisation --------------------------------------------------

WFunction pi(const CoxeterGroup& g, int i);
WFunction opi(const CoxeterGroup& g, int i);
// pi_w and opi_w along a reduced word of w.
WFunction pi_of(const CoxeterGroup& g, ElementId w);
WFunction opi_of(const CoxeterGroup& g, ElementId w);

// Generators pi_1..pi_n, opi_1..opi_n in that order.
TransformationMonoid bihecke_monoid(const CoxeterGroup& g, const ClosureOptions& opts = {});

enum class BorelFix { Identity, LongestElement };
// Elements of M fixing 1 (or w0), regenerated from their irreducible elements.
TransformationMonoid borel(const CoxeterGroup& g, BorelFix fixed, const TransformationMonoid& full,
                           const ClosureOptions& opts = {});
TransformationMonoid borel(const CoxeterGroup& g, BorelFix fixed, const ClosureOptions& opts = {});
// Non-identity elements that are not products of two non-identity elements.
std::vector<std::size_t> irreducibles(const TransformationMonoid& m);

WFunction e_w(const CoxeterGroup& g, ElementId w);
WFunction e_tilde(const CoxeterGroup& g, ElementId w);
WFunction e_ab(const CoxeterGroup& g, ElementId a, ElementId b);

// Fibers ordered by their image, each sorted by id.
std::vector<std::vector<ElementId>> fibers(const WFunction& f);
std::vector<ElementId> image_set(const WFunction& f);
ElementId type_of(const CoxeterGroup& g, const WFunction& f);
std::size_t rank_of(const WFunction& f);
// The unique monoid element with the given fibers and 1.f = base.
WFunction reconstruct(const CoxeterGroup& g, const std::vector<std::vector<ElementId>>& fibers, ElementId base);

// w.bar(f) = w0 ((w0 w).f)
WFunction bar(const CoxeterGroup& g, const WFunction& f);

// Contract the coloured left-order Hasse diagram along the fibers of f and
// compare it with left order on the image, anchored at 1.f.
bool check_fiber_contraction(const CoxeterGroup& g, const WFunction& f);

// Binary cache of a monoid built over g.
void save_monoid(const std::string& path, const CoxeterGroup& g, const TransformationMonoid& m);
std::optional<TransformationMonoid> load_monoid(const std::string& path, const CoxeterGroup& g, unsigned threads = 1);

}  // namespace bihecke

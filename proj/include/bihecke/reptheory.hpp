#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bihecke/blocks.hpp"
#include "bihecke/coxeter.hpp"
#include "bihecke/fmonoid.hpp"
#include "bihecke/linalg.hpp"

namespace bihecke {

// Right representation on row vectors: v.f = v * gens[k].
struct MatrixRep {
  std::size_t dimension = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::string> generator_labels;
  std::vector<RationalMatrix> generators;

  const RationalMatrix& generator(const std::string& label) const;
  // Matrix of a word in the generators (indices into generator_labels).
  RationalMatrix word_matrix(const std::vector<std::size_t>& word) const;
};

// Partial map on a basis: target index, or kNone for zero.
inline constexpr std::uint32_t kNone = 0xffffffffu;
using PartialMap = std::vector<std::uint32_t>;

// Translation module T_w on [1,w]_R (basis in id order).
struct TranslationModule {
  ElementId w = 0;
  std::vector<ElementId> basis;
  std::vector<std::uint32_t> position;  // element id -> basis index or kNone
  std::vector<PartialMap> pi, opi;      // per generator index

  std::size_t dimension() const { return basis.size(); }
  bool contains(ElementId u) const { return position[u] != kNone; }
  // Action of a monoid element given by its word in the pi/opi generators
  // (k < rank means pi_k, otherwise opi_{k-rank}).
  PartialMap act(const std::vector<std::size_t>& word) const;
};

TranslationModule translation_action(const CoxeterGroup& g, ElementId w);
// Generators pi1..pin, opi1..opin as matrices, followed by s1..sn.
MatrixRep translation_module(const CoxeterGroup& g, ElementId w);
// Left operator ls_i on T_w.
RationalMatrix left_reflection(const CoxeterGroup& g, const TranslationModule& t, int i);

// Basis {v_J . pi_v : v in [1, ^J w]_R} of P_J, when its span is a submodule of T_w.
std::optional<std::vector<std::vector<mpq_class>>> antisym_submodule(const CoxeterGroup& g, ElementId w, IndexSet J);
// Left-antisymmetric subspace of T_w (kernel of ls_i + 1 for i in J), always defined.
std::vector<std::vector<mpq_class>> antisym_subspace(const CoxeterGroup& g, ElementId w, IndexSet J);

std::vector<ElementId> simple_basis(const CoxeterGroup& g, ElementId w);
std::size_t dim_simple(const CoxeterGroup& g, ElementId w);
// dim T_w minus the rank of the sum of the P_J for the proper cutting points.
std::size_t dim_simple_linear(const CoxeterGroup& g, ElementId w);

std::size_t whbihecke_dim(const CoxeterGroup& g, ElementId w);
// Dimension of the span of the action matrices of the whole monoid on T_w.
std::size_t whbihecke_dim_linear(const CoxeterGroup& g, ElementId w, std::size_t max_dimension = 4096);

// Borel submonoid fixing 1 ------------------------------------------------

ElementId rfix(const CoxeterGroup& g, const WFunction& f);
ElementId lfix(const CoxeterGroup& g, const WFunction& f);
// c[u][v] = #{f : lfix(f) = u, rfix(f) = v}, indexed by element ids.
std::vector<std::vector<long long>> cartan_m1(const CoxeterGroup& g, const TransformationMonoid& m1);

struct QuiverEdge {
  ElementId from, to;
  bool operator==(const QuiverEdge&) const = default;
  auto operator<=>(const QuiverEdge&) const = default;
};
// Edges from the interval test; throws if a Bruhat cover that is not a left cover is missing.
std::vector<QuiverEdge> quiver_m1(const CoxeterGroup& g);
// Same edge set from products e_x e_z and their intermediate idempotents.
std::vector<QuiverEdge> quiver_m1_monoid(const CoxeterGroup& g);

// Radicals and graded Cartan matrices --------------------------------------

enum class Arithmetic { Exact, Modular };

struct LinearOptions {
  Arithmetic mode = Arithmetic::Exact;
  std::size_t exact_cap = 600;
  std::size_t modular_cap = 2000;
  std::uint64_t seed = 0x5eed;
  unsigned patience = 8;
  std::function<void(const std::string&)> progress;
};

// Full multiplication table of a monoid.
struct MultiplicationTable {
  std::size_t n = 0;
  std::vector<std::uint32_t> t;
  std::uint32_t operator()(std::size_t a, std::size_t b) const { return t[a * n + b]; }
};
MultiplicationTable multiplication_table(const TransformationMonoid& m);

// Dimensions of rad^0 = KM, rad^1, ..., ending with 0.
std::vector<std::size_t> radical_filtration(const TransformationMonoid& m, const LinearOptions& opts = {});
// Exact basis of the radical in the monoid basis (fully reduced echelon form).
std::vector<std::vector<mpq_class>> radical_basis(const TransformationMonoid& m, std::size_t cap = 600);

// Integer polynomial in q, coefficient k for q^k.
using QPolynomial = std::vector<long long>;
std::string format_qpolynomial(const QPolynomial& p);  // ".", "1", "q^2+q", "3q^2"
long long evaluate_at_one(const QPolynomial& p);

// Square matrix of polynomials indexed by simple labels.
struct GradedMatrix {
  std::vector<ElementId> index;  // simple labels, position i <-> index[i]
  std::vector<QPolynomial> entries;
  std::size_t size() const { return index.size(); }
  const QPolynomial& at(std::size_t i, std::size_t j) const { return entries[i * index.size() + j]; }
  QPolynomial& at(std::size_t i, std::size_t j) { return entries[i * index.size() + j]; }
  std::vector<std::vector<long long>> at_one() const;
};

// Multiplicities of the bimodules S_u* (x) S_v in the layers rad^k / rad^{k+1}.
// test[i] are monoid elements, chars[i][u] the value of the character of simple u at test[i];
// chars must be invertible. Entry (u, v) of the result is sum_k c^(k)_{u,v} q^k.
GradedMatrix graded_cartan(const TransformationMonoid& m, const std::vector<std::size_t>& test,
                           const std::vector<std::vector<long long>>& chars, std::vector<ElementId> labels,
                           const LinearOptions& opts = {});

// Tables oriented as printed: row = projective, column = simple.
GradedMatrix qcartan_borel(const CoxeterGroup& g, const TransformationMonoid& m_w0, const LinearOptions& opts = {});
GradedMatrix qcartan_m1(const CoxeterGroup& g, const TransformationMonoid& m1, const LinearOptions& opts = {});
GradedMatrix qcartan_full(const CoxeterGroup& g, const TransformationMonoid& m, const LinearOptions& opts = {});

// Character of the simple M-module S_w at e_{v,w0}.
long long simple_character_at(const CoxeterGroup& g, ElementId w, ElementId v);

// Row w: indicator of the simple M_{w0}-modules in the restriction of S_w.
std::vector<std::vector<int>> decomposition_matrix(const CoxeterGroup& g);
// Indicator of [1,w]_R over W.
std::vector<int> character_T_restricted(const CoxeterGroup& g, ElementId w);
IndexSet h0_restriction(const CoxeterGroup& g, ElementId w);

struct Table1Row {
  std::string name;
  std::size_t group_size = 0, borel_size = 0, monoid_size = 0;
  std::map<std::size_t, std::size_t> dims;  // dimension -> multiplicity
  std::size_t dim_sum = 0;
  std::string format() const;  // "A3 24 71 477 1^8 2^4 3^4 4^6 5^2 62"
};
Table1Row table1_row(const GroupDescriptor& d, const ClosureOptions& opts = {});
Table1Row table1_row(const CoxeterGroup& g, const TransformationMonoid& m, const ClosureOptions& opts = {});

}  // namespace bihecke

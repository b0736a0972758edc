#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bihecke/coxeter.hpp"
#include "bihecke/posets.hpp"

namespace bihecke {

// A right block K of w with its left block J: W_J w = w W_K.
struct BlockData {
  ElementId w = 0;
  IndexSet K = 0;
  IndexSet J = 0;
  std::vector<std::pair<int, int>> phi;  // (k, phi(k)) with w^K s_k = s_phi(k) w^K
  ElementId cutting_point = 0;           // w^K = ^J w
  bool reduced = false;
  bool trivial = false;
};

// Generators occurring in the reduced words of w.
IndexSet support(const CoxeterGroup& g, ElementId w);

std::optional<BlockData> is_right_block(const CoxeterGroup& g, ElementId w, IndexSet K);
std::optional<BlockData> is_left_block(const CoxeterGroup& g, ElementId w, IndexSet J);
// All right blocks ordered by K.
std::vector<BlockData> all_blocks(const CoxeterGroup& g, ElementId w);
std::vector<BlockData> reduced_blocks(const CoxeterGroup& g, ElementId w);
// Largest reduced block inside the block K (support of the parabolic factor of w).
IndexSet reduce_block(const CoxeterGroup& g, ElementId w, IndexSet K);

// Short right (left) nondescents: k not a descent with u s_k u^-1 (u^-1 s_k u) simple.
IndexSet short_right_nondescents(const CoxeterGroup& g, ElementId u);
IndexSet short_left_nondescents(const CoxeterGroup& g, ElementId u);

// u is a cutting point of w.
bool cutting_le(const CoxeterGroup& g, ElementId u, ElementId w);
// Cutting points of w sorted by id, and its lower covers in the cutting poset.
std::vector<ElementId> cutting_points(const CoxeterGroup& g, ElementId w);
std::vector<ElementId> cutting_lower_covers(const CoxeterGroup& g, ElementId w);

struct CuttingPoset {
  Poset poset;  // node i is element id i
  std::vector<IndexSet> K, J;
};
CuttingPoset cutting_poset(const CoxeterGroup& g);

// Index of the lowest cutting point ^J w whose right interval contains u.
IndexSet jblock(const CoxeterGroup& g, ElementId w, ElementId u);
// Mirror version for u in [1,w]_L: the K of the lowest w^K above u in left order.
IndexSet kblock(const CoxeterGroup& g, ElementId w, ElementId u);

// Closed form for the Moebius function of the cutting poset.
long long mobius_cutting(const CoxeterGroup& g, ElementId u, ElementId w);

// Type A: positions [col_lo, col_hi] (1-based) mapped onto values [row_lo, row_hi].
struct MatrixBlock {
  int col_lo = 0, col_hi = 0, row_lo = 0, row_hi = 0;
  bool connected = false;
  std::vector<int> pattern;  // standardized one-line word of the block
};
bool is_matrix_block(const std::vector<int>& perm, int lo, int hi);
// Matrix-blocks with 2 <= size < n.
std::vector<MatrixBlock> matrix_blocks_typeA(const std::vector<int>& perm);
MatrixBlock matrix_block_at(const std::vector<int>& perm, int lo, int hi);

}  // namespace bihecke

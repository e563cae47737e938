#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skelfact/designs.hpp"
#include "skelfact/exact_cover.hpp"
#include "skelfact/polytope.hpp"

namespace skelfact {

// One factor: a set of ell-faces forming a copy of the canonical ell-sphere.
// The label records where the block came from (design block, axis subset,
// fixed-coordinate assignment); it is advisory, never verified.
struct Block {
  std::vector<Face> faces;
  std::string label;
};

struct FactorizationCertificate {
  SkeletonSpec spec;
  std::vector<Block> blocks;
};

// Axis-subset join: the ell-skeleton of the n-cross-polytope splits into
// C(n, ell+1) blocks, one per (ell+1)-subset S of axes, each holding all
// 2^(ell+1) sign patterns on S. Requires 1 <= ell < n.
FactorizationCertificate cross_factorization(int n, int ell);

// A (v, t+1, t)-configuration is exactly a factorization of the (t-1)-skeleton
// of the (v-1)-simplex: each design block B yields the block of all t-subsets
// of B (the boundary of the simplex on B). Requires k = t+1 and a valid design.
FactorizationCertificate simplex_factorization_from_design(const DesignInstance& d);

// Subcube family of a simplex face: all length-n cube words with stars exactly
// at sigma's positions, i.e. 2^(n-|sigma|) pairwise vertex-disjoint
// |sigma|-dimensional subcubes. sigma must be a sorted subset of {0..n-1}.
std::vector<Face> exponentiate_simplex(const std::vector<int>& sigma, int n);

// Carries a factorization of the (ell-1)-skeleton of the (n-1)-simplex to one
// of the ell-skeleton of the n-cube: each canonical simplex block with vertex
// support T becomes 2^(n-ell-1) cube blocks, one per 0/1-assignment of the
// coordinates outside T, each consisting of the 2(ell+1) single-star-fixings
// of the word with stars on T. Throws std::invalid_argument when an input
// block is not a canonical simplex sphere.
FactorizationCertificate exponentiate_factorization(const FactorizationCertificate& cert);

// Factorization of the ell-skeleton of the n-simplex, built from a
// (n+1, ell+2, ell+1)-configuration (constructed when an implemented case
// applies, searched within budget otherwise). Divisibility failure here is
// a proof of impossibility, hence InfeasibleParameters; a feasible order
// with no obtainable design raises UnsupportedConstruction. A zero budget
// means a default bounded search.
FactorizationCertificate simplex_factorization(int n, int ell,
                                               const SearchBudget& budget = {});

// Composes construct_design(n, ell+1, ell) -> simplex factorization ->
// exponentiation. Throws InfeasibleParameters when n fails the divisibility
// test for (ell+1, ell) (evenness is its weakest level), and
// UnsupportedConstruction when no design is obtainable within budget.
FactorizationCertificate cube_factorization(int n, int ell,
                                            const SearchBudget& budget = {});

struct DecideOutcome {
  CoverStatus status = CoverStatus::Infeasible;
  long long nodes_expanded = 0;
  std::optional<FactorizationCertificate> certificate;  // set iff Solved
};

// Exhaustive exact-cover decision over canonical-position candidate blocks:
// every (ell+2)-vertex-subset boundary (simplex), every (ell+1)-axis-subset
// sign family (cross), every subcube boundary from a word with ell+1 stars
// (cube). Infeasible proves no factorization by such blocks exists; for the
// cross family at ell >= 1 and n > ell+1 other sphere embeddings exist, so
// the verdict is scoped to canonical-position blocks.
DecideOutcome decide_factorable_small(const SkeletonSpec& spec,
                                      const SearchBudget& budget = {});

}  // namespace skelfact

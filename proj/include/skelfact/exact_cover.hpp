#pragma once

#include <optional>
#include <vector>

#include "skelfact/designs.hpp"

namespace skelfact {

// Exact cover instance: pick candidates whose element sets partition
// {0..universe_size-1}. Candidate ids are their indices in `candidates`.
struct CoverProblem {
  int universe_size = 0;
  std::vector<std::vector<int>> candidates;  // each sorted, non-empty
};

// 0 means unlimited.
struct SearchBudget {
  long long max_nodes = 0;
  long long max_millis = 0;
};

enum class CoverStatus { Solved, Infeasible, BudgetExhausted };

struct CoverOutcome {
  CoverStatus status = CoverStatus::Infeasible;
  std::vector<int> solution;  // ascending candidate ids when Solved
  long long nodes_expanded = 0;
};

// Dancing-links backtracking. Always branches on the uncovered element with
// the fewest remaining candidates (ties: smallest element index) and tries
// its candidates in ascending id order, so outcomes, solutions and node
// counts are reproducible. First solution wins; Infeasible means the whole
// tree was exhausted within budget. Solved solutions are re-verified before
// being returned. Throws std::invalid_argument on malformed problems.
CoverOutcome solve_exact_cover(const CoverProblem& p,
                               const SearchBudget& budget = {});

// Same engine with candidates `forced` selected up front (they must be
// pairwise disjoint). The forced ids appear in the returned solution.
CoverOutcome solve_exact_cover(const CoverProblem& p, const SearchBudget& budget,
                               const std::vector<int>& forced);

struct DesignSearchResult {
  CoverStatus status = CoverStatus::Infeasible;
  std::optional<DesignInstance> design;  // set iff status == Solved
  long long nodes_expanded = 0;
};

// Searches for a (v, k, t)-configuration: universe = all t-subsets in
// lexicographic rank order, candidates = all k-subsets likewise. The first
// block is pinned to {0..k-1}, which is harmless up to relabeling (whatever
// block covers {0..t-1} can be renamed onto it), so Infeasible remains a
// proof. Requires t < k <= v, t >= 1.
DesignSearchResult search_design(int v, int k, int t,
                                 const SearchBudget& budget = {});

}  // namespace skelfact

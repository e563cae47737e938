#include "skelfact/exact_cover.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace skelfact {

namespace {

// Knuth-style dancing links over index-based node arrays.
struct Dlx {
  struct Node {
    int l, r, u, d;
    int col;  // column header index for row nodes
    int row;  // candidate id, -1 for headers/root
  };

  std::vector<Node> nodes;
  std::vector<int> col_size;
  int root;
  long long nodes_expanded = 0;
  long long max_nodes = 0;
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline = false;
  bool budget_hit = false;
  std::vector<int> chosen;

  explicit Dlx(const CoverProblem& p) {
    int u = p.universe_size;
    col_size.assign(u, 0);
    nodes.resize(u + 1);
    root = u;
    for (int c = 0; c <= u; ++c) {
      nodes[c].l = (c + u) % (u + 1);
      nodes[c].r = (c + 1) % (u + 1);
      nodes[c].u = c;
      nodes[c].d = c;
      nodes[c].col = c;
      nodes[c].row = -1;
    }
    for (int id = 0; id < static_cast<int>(p.candidates.size()); ++id) {
      const auto& elems = p.candidates[id];
      int first = -1;
      for (int e : elems) {
        int idx = static_cast<int>(nodes.size());
        Node nd;
        nd.col = e;
        nd.row = id;
        nd.u = nodes[e].u;
        nd.d = e;
        nodes[nodes[e].u].d = idx;
        nodes[e].u = idx;
        ++col_size[e];
        if (first < 0) {
          nd.l = idx;
          nd.r = idx;
        } else {
          nd.l = nodes[first].l;
          nd.r = first;
          nodes[nodes[first].l].r = idx;
          nodes[first].l = idx;
        }
        nodes.push_back(nd);
        if (first < 0) first = idx;
      }
    }
  }

  void cover(int c) {
    nodes[nodes[c].r].l = nodes[c].l;
    nodes[nodes[c].l].r = nodes[c].r;
    for (int i = nodes[c].d; i != c; i = nodes[i].d)
      for (int j = nodes[i].r; j != i; j = nodes[j].r) {
        nodes[nodes[j].d].u = nodes[j].u;
        nodes[nodes[j].u].d = nodes[j].d;
        --col_size[nodes[j].col];
      }
  }

  void uncover(int c) {
    for (int i = nodes[c].u; i != c; i = nodes[i].u)
      for (int j = nodes[i].l; j != i; j = nodes[j].l) {
        ++col_size[nodes[j].col];
        nodes[nodes[j].d].u = j;
        nodes[nodes[j].u].d = j;
      }
    nodes[nodes[c].r].l = c;
    nodes[nodes[c].l].r = c;
  }

  void select_row(int row_node) {
    cover(nodes[row_node].col);
    for (int j = nodes[row_node].r; j != row_node; j = nodes[j].r)
      cover(nodes[j].col);
  }

  void deselect_row(int row_node) {
    for (int j = nodes[row_node].l; j != row_node; j = nodes[j].l)
      uncover(nodes[j].col);
    uncover(nodes[row_node].col);
  }

  bool out_of_budget() {
    if (max_nodes > 0 && nodes_expanded >= max_nodes) return true;
    if (has_deadline && (nodes_expanded & 1023) == 0 &&
        std::chrono::steady_clock::now() >= deadline)
      return true;
    return false;
  }

  // Returns true when a solution was completed. budget_hit distinguishes
  // an aborted search from an exhausted one.
  bool search() {
    if (nodes[root].r == root) return true;
    // column with fewest candidates; header order is element order, so the
    // first minimum is the smallest element index
    int best = -1, best_size = -1;
    for (int c = nodes[root].r; c != root; c = nodes[c].r)
      if (best < 0 || col_size[c] < best_size) {
        best = c;
        best_size = col_size[c];
      }
    if (best_size == 0) return false;
    for (int i = nodes[best].d; i != best; i = nodes[i].d) {
      ++nodes_expanded;
      if (out_of_budget()) {
        budget_hit = true;
        return false;
      }
      // rows hang off columns in insertion order, i.e. ascending candidate id
      select_row(i);
      chosen.push_back(nodes[i].row);
      if (search()) return true;
      chosen.pop_back();
      deselect_row(i);
      if (budget_hit) return false;
    }
    return false;
  }
};

void check_problem(const CoverProblem& p) {
  if (p.universe_size < 0) throw std::invalid_argument("negative universe");
  for (const auto& cand : p.candidates) {
    if (cand.empty()) throw std::invalid_argument("empty candidate set");
    for (size_t i = 0; i < cand.size(); ++i) {
      if (cand[i] < 0 || cand[i] >= p.universe_size)
        throw std::invalid_argument("candidate element out of universe");
      if (i > 0 && cand[i - 1] >= cand[i])
        throw std::invalid_argument("candidate elements not strictly ascending");
    }
  }
}

void check_partition(const CoverProblem& p, const std::vector<int>& ids) {
  std::vector<char> seen(p.universe_size, 0);
  long long total = 0;
  for (int id : ids) {
    for (int e : p.candidates[id]) {
      if (seen[e]) throw std::logic_error("solver produced a double cover");
      seen[e] = 1;
      ++total;
    }
  }
  if (total != p.universe_size)
    throw std::logic_error("solver left universe elements uncovered");
}

}  // namespace

CoverOutcome solve_exact_cover(const CoverProblem& p, const SearchBudget& budget,
                               const std::vector<int>& forced) {
  check_problem(p);
  Dlx dlx(p);
  dlx.max_nodes = budget.max_nodes;
  if (budget.max_millis > 0) {
    dlx.has_deadline = true;
    dlx.deadline = std::chrono::steady_clock::now() +
                   std::chrono::milliseconds(budget.max_millis);
  }

  for (int id : forced) {
    if (id < 0 || id >= static_cast<int>(p.candidates.size()))
      throw std::invalid_argument("forced candidate id out of range");
    // every column of the row must still be active
    for (int e : p.candidates[id]) {
      bool active = false;
      for (int c = dlx.nodes[dlx.root].r; c != dlx.root; c = dlx.nodes[c].r)
        if (c == e) {
          active = true;
          break;
        }
      if (!active) throw std::invalid_argument("forced candidates overlap");
    }
    // find this row's node in the column of its first element
    int col = p.candidates[id][0];
    int row_node = -1;
    for (int i = dlx.nodes[col].d; i != col; i = dlx.nodes[i].d)
      if (dlx.nodes[i].row == id) {
        row_node = i;
        break;
      }
    if (row_node < 0)
      throw std::invalid_argument("forced candidate no longer available");
    dlx.select_row(row_node);
    dlx.chosen.push_back(id);
  }

  CoverOutcome out;
  bool found = dlx.search();
  out.nodes_expanded = dlx.nodes_expanded;
  if (found) {
    out.status = CoverStatus::Solved;
    out.solution = dlx.chosen;
    std::sort(out.solution.begin(), out.solution.end());
    check_partition(p, out.solution);
  } else if (dlx.budget_hit) {
    out.status = CoverStatus::BudgetExhausted;
  } else {
    out.status = CoverStatus::Infeasible;
  }
  return out;
}

CoverOutcome solve_exact_cover(const CoverProblem& p, const SearchBudget& budget) {
  return solve_exact_cover(p, budget, {});
}

namespace {

void lex_subsets(int v, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == k) {
      fn(cur);
      return;
    }
    int need = k - static_cast<int>(cur.size());
    for (int x = lo; x <= v - need; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

long long binom_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

DesignSearchResult search_design(int v, int k, int t, const SearchBudget& budget) {
  if (t < 1 || t >= k || k > v)
    throw std::invalid_argument("design search needs 1 <= t < k <= v");
  if (binom_ll(v, k) > 2'000'000 || binom_ll(v, t) > 2'000'000)
    throw std::invalid_argument("design search instance too large");

  std::map<std::vector<int>, int> t_rank;
  {
    int next = 0;
    lex_subsets(v, t, [&](const std::vector<int>& s) { t_rank[s] = next++; });
  }

  CoverProblem prob;
  prob.universe_size = static_cast<int>(t_rank.size());
  std::vector<std::vector<int>> blocks;
  lex_subsets(v, k, [&](const std::vector<int>& block) {
    std::vector<int> elems;
    std::vector<int> sub;
    std::function<void(size_t)> rec = [&](size_t lo) {
      if (static_cast<int>(sub.size()) == t) {
        elems.push_back(t_rank.at(sub));
        return;
      }
      size_t need = t - sub.size();
      for (size_t i = lo; i + need <= block.size(); ++i) {
        sub.push_back(block[i]);
        rec(i + 1);
        sub.pop_back();
      }
    };
    rec(0);
    std::sort(elems.begin(), elems.end());
    prob.candidates.push_back(std::move(elems));
    blocks.push_back(block);
  });

  // candidate 0 is {0..k-1}; pinning it is sound because the block covering
  // {0..t-1} can always be relabeled onto {0..k-1}
  auto outcome = solve_exact_cover(prob, budget, {0});

  DesignSearchResult res;
  res.status = outcome.status;
  res.nodes_expanded = outcome.nodes_expanded;
  if (outcome.status == CoverStatus::Solved) {
    DesignInstance d;
    d.v = v;
    d.k = k;
    d.t = t;
    for (int id : outcome.solution) d.blocks.push_back(blocks[id]);
    res.design = std::move(d);
  }
  return res;
}

}  // namespace skelfact

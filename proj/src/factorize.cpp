#include "skelfact/factorize.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "skelfact/divisibility.hpp"
#include "skelfact/errors.hpp"

namespace skelfact {

namespace {

void for_each_subset(int lo, int hi, int k, std::vector<int>& prefix,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (k == 0) {
    fn(prefix);
    return;
  }
  for (int x = lo; x <= hi - k + 1; ++x) {
    prefix.push_back(x);
    for_each_subset(x + 1, hi, k - 1, prefix, fn);
    prefix.pop_back();
  }
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

FactorizationCertificate cross_factorization(int n, int ell) {
  if (ell < 1 || ell >= n)
    throw std::invalid_argument("cross factorization needs 1 <= ell < n");
  FactorizationCertificate cert;
  cert.spec = {Family::CrossPolytope, n, ell};
  std::vector<int> prefix;
  for_each_subset(1, n, ell + 1, prefix, [&](const std::vector<int>& axes) {
    Block blk;
    blk.label = "axes=" + join_ints(axes);
    int m = ell + 1;
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<SignedVert> sv(m);
      for (int i = 0; i < m; ++i)
        sv[i] = {axes[i], (mask >> (m - 1 - i) & 1) != 0};
      blk.faces.push_back(Face::cross(std::move(sv)));
    }
    cert.blocks.push_back(std::move(blk));
  });
  return cert;
}

FactorizationCertificate simplex_factorization_from_design(const DesignInstance& d) {
  if (d.k != d.t + 1)
    throw std::invalid_argument("factorization needs block size = covered size + 1");
  auto rep = verify_design(d);
  if (!rep.valid)
    throw std::invalid_argument("refusing to factor from an invalid design");

  FactorizationCertificate cert;
  cert.spec = {Family::Simplex, d.v - 1, d.t - 1};
  for (const auto& b : d.blocks) {
    Block blk;
    blk.label = "design=" + join_ints(b);
    // the t-subsets of b, i.e. the boundary of the simplex on b
    std::vector<int> sub;
    std::function<void(size_t)> rec = [&](size_t lo) {
      if (static_cast<int>(sub.size()) == d.t) {
        blk.faces.push_back(Face::simplex(sub));
        return;
      }
      size_t need = d.t - sub.size();
      for (size_t i = lo; i + need <= b.size(); ++i) {
        sub.push_back(b[i]);
        rec(i + 1);
        sub.pop_back();
      }
    };
    rec(0);
    cert.blocks.push_back(std::move(blk));
  }
  return cert;
}

std::vector<Face> exponentiate_simplex(const std::vector<int>& sigma, int n) {
  if (sigma.empty()) throw std::invalid_argument("empty vertex set");
  if (n < 1 || n > 30) throw std::invalid_argument("dimension out of range");
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] < 0 || sigma[i] >= n)
      throw std::invalid_argument("vertex " + std::to_string(sigma[i]) +
                                  " outside [0," + std::to_string(n - 1) + "]");
    if (i > 0 && sigma[i - 1] >= sigma[i])
      throw std::invalid_argument("vertices not strictly ascending");
  }
  std::vector<int> rest;
  std::vector<char> in_sigma(n, 0);
  for (int v : sigma) in_sigma[v] = 1;
  for (int p = 0; p < n; ++p)
    if (!in_sigma[p]) rest.push_back(p);

  std::vector<Face> out;
  int m = static_cast<int>(rest.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::string word(n, '*');
    for (int i = 0; i < m; ++i)
      word[rest[i]] = (mask >> (m - 1 - i) & 1) ? '1' : '0';
    out.push_back(Face::cube(std::move(word)));
  }
  return out;
}

FactorizationCertificate exponentiate_factorization(const FactorizationCertificate& cert) {
  if (cert.spec.family != Family::Simplex)
    throw std::invalid_argument("exponentiation starts from a simplex certificate");
  validate_spec(cert.spec);
  int n = cert.spec.n + 1;       // cube dimension = number of simplex vertices
  int ell = cert.spec.ell + 1;   // each j-face becomes a (j+1)-subcube family
  if (n > 30) throw std::invalid_argument("cube dimension out of range");

  FactorizationCertificate out;
  out.spec = {Family::Cube, n, ell};
  for (size_t bi = 0; bi < cert.blocks.size(); ++bi) {
    const auto& blk = cert.blocks[bi];
    std::string where = "block " + std::to_string(bi);
    // the block must be the boundary of the simplex on its vertex support
    std::set<int> support;
    std::set<std::vector<int>> faces;
    for (const auto& f : blk.faces) {
      if (f.family != Family::Simplex)
        throw std::invalid_argument(where + ": face family mismatch");
      if (static_cast<int>(f.verts.size()) != cert.spec.ell + 1)
        throw std::invalid_argument(where + ": face has wrong dimension");
      for (size_t i = 0; i < f.verts.size(); ++i) {
        if (f.verts[i] < 0 || f.verts[i] > cert.spec.n)
          throw std::invalid_argument(where + ": vertex out of range");
        if (i > 0 && f.verts[i - 1] >= f.verts[i])
          throw std::invalid_argument(where + ": face vertices not ascending");
        support.insert(f.verts[i]);
      }
      if (!faces.insert(f.verts).second)
        throw std::invalid_argument(where + ": duplicate face");
    }
    if (support.size() != static_cast<size_t>(cert.spec.ell + 2) ||
        faces.size() != static_cast<size_t>(cert.spec.ell + 2))
      throw std::invalid_argument(where + ": not a canonical simplex sphere");

    std::vector<int> T(support.begin(), support.end());
    std::string base_label =
        blk.label.empty() ? "support=" + join_ints(T) : blk.label;
    std::vector<int> rest;
    {
      std::vector<char> in_T(n, 0);
      for (int v : T) in_T[v] = 1;
      for (int p = 0; p < n; ++p)
        if (!in_T[p]) rest.push_back(p);
    }
    int m = static_cast<int>(rest.size());  // = n - ell - 1
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::string word(n, '*');
      std::string bits(m, '0');
      for (int i = 0; i < m; ++i) {
        char bit = (mask >> (m - 1 - i) & 1) ? '1' : '0';
        word[rest[i]] = bit;
        bits[i] = bit;
      }
      Block cube_blk;
      cube_blk.label = m > 0 ? base_label + " rest=" + bits : base_label;
      for (int p : T) {
        for (char fix : {'0', '1'}) {
          std::string w = word;
          w[p] = fix;
          cube_blk.faces.push_back(Face::cube(std::move(w)));
        }
      }
      std::sort(cube_blk.faces.begin(), cube_blk.faces.end(), face_less);
      out.blocks.push_back(std::move(cube_blk));
    }
  }
  return out;
}

namespace {

SearchBudget effective_budget(const SearchBudget& b) {
  if (b.max_nodes > 0 || b.max_millis > 0) return b;
  return {2'000'000, 10'000};
}

// Obtain a (v, t+1, t)-configuration for a factorization: closed-form
// constructors when available, otherwise a budgeted search.
DesignInstance design_for(int v, int t, const SearchBudget& budget) {
  int k = t + 1;
  if (design_constructible(v, k, t)) return construct_design(v, k, t);
  auto res = search_design(v, k, t, effective_budget(budget));
  if (res.status == CoverStatus::Solved) return *res.design;
  if (res.status == CoverStatus::Infeasible)
    throw UnsupportedConstruction(
        "no (" + std::to_string(v) + "," + std::to_string(k) + "," +
        std::to_string(t) + ")-configuration exists: search exhausted");
  throw UnsupportedConstruction("(" + std::to_string(v) + "," +
                                std::to_string(k) + "," + std::to_string(t) +
                                ")-configuration not found within search budget");
}

std::string divisibility_failure_message(const DivisibilityReport& rep,
                                         bool evenness_is_last) {
  std::string msg;
  if (evenness_is_last && !rep.per_level.back().passes) {
    msg = "evenness fails: each (ell-1)-face lies in " +
          rep.per_level.back().dividend.str() + " ell-faces (odd)";
    return msg;
  }
  msg = "divisibility fails:";
  for (const auto& lvl : rep.per_level)
    if (!lvl.passes)
      msg += " h=" + std::to_string(lvl.h) + " (" + lvl.divisor.str() +
             " does not divide " + lvl.dividend.str() + ")";
  return msg;
}

}  // namespace

FactorizationCertificate simplex_factorization(int n, int ell,
                                               const SearchBudget& budget) {
  if (ell < 1 || ell >= n)
    throw std::invalid_argument("simplex factorization needs 1 <= ell < n");
  auto rep = in_divisibility_set(n + 1, ell + 2, ell + 1);
  if (!rep.member)
    throw InfeasibleParameters("no factorization of this simplex skeleton: " +
                               divisibility_failure_message(rep, false));
  return simplex_factorization_from_design(design_for(n + 1, ell + 1, budget));
}

FactorizationCertificate cube_factorization(int n, int ell,
                                            const SearchBudget& budget) {
  if (ell < 1 || ell >= n)
    throw std::invalid_argument("cube factorization needs 1 <= ell < n");
  auto rep = in_divisibility_set(n, ell + 1, ell);
  if (!rep.member)
    throw InfeasibleParameters(
        "the subcube route needs n in the divisibility set: " +
        divisibility_failure_message(rep, true));
  auto simplex_cert =
      simplex_factorization_from_design(design_for(n, ell, budget));
  return exponentiate_factorization(simplex_cert);
}

DecideOutcome decide_factorable_small(const SkeletonSpec& spec,
                                      const SearchBudget& budget) {
  validate_spec(spec);
  if (spec.ell < 1)
    throw std::invalid_argument("decision procedure needs ell >= 1");

  auto universe = enumerate_faces(spec);
  auto rank_of = [&universe](const Face& f) -> int {
    auto it = std::lower_bound(universe.begin(), universe.end(), f, face_less);
    if (it == universe.end() || !(*it == f)) return -1;
    return static_cast<int>(it - universe.begin());
  };

  CoverProblem prob;
  prob.universe_size = static_cast<int>(universe.size());
  std::vector<Block> block_of_candidate;

  auto add_candidate = [&](Block blk) {
    std::vector<int> elems;
    for (const auto& f : blk.faces) {
      int r = rank_of(f);
      if (r < 0) throw std::logic_error("candidate face outside skeleton");
      elems.push_back(r);
    }
    std::sort(elems.begin(), elems.end());
    prob.candidates.push_back(std::move(elems));
    block_of_candidate.push_back(std::move(blk));
  };

  switch (spec.family) {
    case Family::Simplex: {
      std::vector<int> prefix;
      for_each_subset(0, spec.n, spec.ell + 2, prefix, [&](const std::vector<int>& T) {
        Block blk;
        blk.label = "support=" + join_ints(T);
        std::vector<int> sub;
        std::function<void(size_t)> rec = [&](size_t lo) {
          if (static_cast<int>(sub.size()) == spec.ell + 1) {
            blk.faces.push_back(Face::simplex(sub));
            return;
          }
          size_t need = spec.ell + 1 - sub.size();
          for (size_t i = lo; i + need <= T.size(); ++i) {
            sub.push_back(T[i]);
            rec(i + 1);
            sub.pop_back();
          }
        };
        rec(0);
        add_candidate(std::move(blk));
      });
      break;
    }
    case Family::CrossPolytope: {
      std::vector<int> prefix;
      for_each_subset(1, spec.n, spec.ell + 1, prefix, [&](const std::vector<int>& axes) {
        Block blk;
        blk.label = "axes=" + join_ints(axes);
        int m = spec.ell + 1;
        for (int mask = 0; mask < (1 << m); ++mask) {
          std::vector<SignedVert> sv(m);
          for (int i = 0; i < m; ++i)
            sv[i] = {axes[i], (mask >> (m - 1 - i) & 1) != 0};
          blk.faces.push_back(Face::cross(std::move(sv)));
        }
        add_candidate(std::move(blk));
      });
      break;
    }
    case Family::Cube: {
      // ell+1 == n means the whole cube is the only candidate subcube
      std::vector<Face> words;
      if (spec.ell + 1 < spec.n)
        words = enumerate_faces({Family::Cube, spec.n, spec.ell + 1});
      else
        words.push_back(Face::cube(std::string(spec.n, '*')));
      for (const auto& wf : words) {
        Block blk;
        blk.label = "word=" + wf.word;
        for (size_t p = 0; p < wf.word.size(); ++p) {
          if (wf.word[p] != '*') continue;
          for (char fix : {'0', '1'}) {
            std::string w = wf.word;
            w[p] = fix;
            blk.faces.push_back(Face::cube(std::move(w)));
          }
        }
        std::sort(blk.faces.begin(), blk.faces.end(), face_less);
        add_candidate(std::move(blk));
      }
      break;
    }
  }

  auto outcome = solve_exact_cover(prob, budget);
  DecideOutcome out;
  out.status = outcome.status;
  out.nodes_expanded = outcome.nodes_expanded;
  if (outcome.status == CoverStatus::Solved) {
    FactorizationCertificate cert;
    cert.spec = spec;
    for (int id : outcome.solution)
      cert.blocks.push_back(block_of_candidate[id]);
    out.certificate = std::move(cert);
  }
  return out;
}

}  // namespace skelfact

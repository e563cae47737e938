#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "skelfact/bigint.hpp"
#include "skelfact/polytope.hpp"

namespace skelfact {

// One level h of the divisibility test: C(k-h, l-h) must divide C(v-h, l-h).
struct DivisibilityLevel {
  int h = 0;
  BigInt divisor;
  BigInt dividend;
  bool passes = false;
};

struct DivisibilityReport {
  int v = 0, k = 0, ell = 0;
  std::vector<DivisibilityLevel> per_level;
  bool member = false;  // all levels pass and 0 <= ell-1 < k <= v
};

// Parameter triples (k, ell, v) excluded from factorability despite passing
// the divisibility test. Defaults to empty; loadable from a text file with
// one "k ell v" triple per line, '#' comments allowed.
class ExceptionTable {
 public:
  bool contains(int k, int ell, int v) const {
    return entries_.count({k, ell, v}) != 0;
  }
  void insert(int k, int ell, int v) { entries_.insert({k, ell, v}); }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  static ExceptionTable parse(std::istream& in);            // ParseError
  static ExceptionTable load(const std::string& path);      // ParseError

 private:
  std::set<std::tuple<int, int, int>> entries_;
};

enum class Verdict {
  FactorableConstructive,   // an implemented constructor covers the case
  FactorableExistential,    // admissible parameters, existence only
  NotFactorable,            // proven impossible
  Unknown                   // necessity not established at this scale
};

std::string verdict_name(Verdict v);

struct FeasibilityVerdict {
  SkeletonSpec spec;
  Verdict verdict;
  std::string reason;  // short machine-grep-able tag, e.g. "divisibility-failure h=1"
};

// Exact binomial coefficient; 0 when k < 0 or k > n. Arbitrary precision.
BigInt exact_binomial(int n, int k);

// Membership test for the divisibility set D(k, ell):
// C(k-h, ell-h) | C(v-h, ell-h) for all 0 <= h <= ell-1, with ell-1 < k <= v.
// Requires ell >= 1 and k > ell-1; member is false whenever k > v.
DivisibilityReport in_divisibility_set(int v, int k, int ell);

// All v in [vmin, vmax] with in_divisibility_set(v, k, ell).member, ascending.
std::vector<int> feasible_range(int k, int ell, int vmin, int vmax);

// Feasibility of factoring the ell-skeleton of the n-polytope into canonical
// ell-spheres. Cross-polytopes are always constructive. Simplex skeleta hinge
// on a (n+1, ell+2, ell+1) design: divisibility failure is a proof of
// impossibility, a covered constructor gives Constructive, anything else in
// the divisibility set minus exceptions is Existential. Cube skeleta follow
// the same (n, ell+1, ell) pattern, but divisibility is only known necessary
// through the evenness level, so a non-evenness failure yields Unknown.
FeasibilityVerdict skeleton_feasibility(const SkeletonSpec& spec,
                                        const ExceptionTable& exceptions = {});

}  // namespace skelfact

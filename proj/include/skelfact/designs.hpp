#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace skelfact {

// A (v, k, t)-configuration: blocks are sorted k-subsets of {0..v-1} such
// that every t-subset of points lies in exactly one block.
struct DesignInstance {
  int v = 0;
  int k = 0;
  int t = 0;
  std::vector<std::vector<int>> blocks;
};

// v-1 perfect matchings on {0..v-1} jointly covering every pair once.
struct OneFactorization {
  int v = 0;
  std::vector<std::vector<std::pair<int, int>>> factors;
};

struct DesignReport {
  bool valid = false;
  bool block_count_ok = false;
  // t-subsets covered a number of times != 1, with their observed counts.
  std::vector<std::pair<std::vector<int>, long long>> uncovered;
  // structurally bad blocks (wrong size, duplicate or out-of-range points)
  std::vector<std::pair<int, std::string>> bad_blocks;
};

// Steiner triple system STS(v) = (v,3,2)-configuration. Bose construction
// for v = 3 (mod 6), Skolem construction for v = 1 (mod 6).
// Throws InfeasibleParameters for any other residue.
DesignInstance construct_sts(int v);

// Round-robin (circle method) 1-factorization of K_v, v even.
// Throws InfeasibleParameters for odd or nonpositive v.
OneFactorization one_factorization(int v);

// Doubling construction: a valid SQS(v) yields an SQS(2v) on X x {0,1} with
// 2*|blocks| lifted blocks plus (v-1)*(v/2)^2 cross blocks built from pairs
// of edges within the same 1-factor. Throws std::invalid_argument when the
// input fails verify_design.
DesignInstance double_sqs(const DesignInstance& d);

// Steiner quadruple system SQS(v) = (v,4,3)-configuration.
// Covered directly for v in the doubling closure of {4, 8, 10, 14}
// (v = 4 trivial, v = 8 explicit, v = 10 and 14 by exact-cover search,
// memoized; see SPHERE_FACTOR_CACHE_DIR). Other admissible v get a bounded
// search attempt; on failure throws UnsupportedConstruction.
// Throws InfeasibleParameters unless v >= 4 and v = 2 or 4 (mod 6).
DesignInstance construct_sqs(int v);

// Full brute-force check: every t-subset covered exactly once and the block
// count matches C(v,t)/C(k,t). Never throws; problems land in the report.
DesignReport verify_design(const DesignInstance& d);

// True when construct-* above can produce a (v, k, t)-configuration outright:
// the one-block case k = v, matchings (2,1) for even v, STS residues (3,2),
// and supported SQS orders (4,3).
bool design_constructible(int v, int k, int t);

// Orders reachable by doubling from the {4, 8, 10, 14} base set.
bool sqs_supported(int v);

// The (v,k,t) constructor dispatch behind design_constructible.
// Throws InfeasibleParameters / UnsupportedConstruction as the cases dictate.
DesignInstance construct_design(int v, int k, int t);

// Text format: header "DESIGN v=<v> k=<k> t=<t>", then one
// "BLOCK p1 p2 ... pk" line per block (points ascending). '#' comments and
// blank lines are ignored. Parse errors carry 1-based line numbers.
DesignInstance parse_design(std::istream& in);
DesignInstance read_design_file(const std::string& path);
std::string format_design(const DesignInstance& d);
void write_design_file(const DesignInstance& d, const std::string& path);

}  // namespace skelfact

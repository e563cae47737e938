#include "skelfact/divisibility.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "skelfact/designs.hpp"
#include "skelfact/errors.hpp"

namespace skelfact {

BigInt exact_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

DivisibilityReport in_divisibility_set(int v, int k, int ell) {
  if (ell < 1) throw std::invalid_argument("divisibility set needs ell >= 1");
  if (k <= ell - 1) throw std::invalid_argument("divisibility set needs k > ell-1");
  DivisibilityReport rep;
  rep.v = v;
  rep.k = k;
  rep.ell = ell;
  bool all_pass = true;
  for (int h = 0; h <= ell - 1; ++h) {
    DivisibilityLevel lvl;
    lvl.h = h;
    lvl.divisor = exact_binomial(k - h, ell - h);
    // v < h only happens when k > v (membership already fails on that)
    lvl.dividend = v - h >= 0 ? exact_binomial(v - h, ell - h) : BigInt(0);
    lvl.passes = lvl.divisor != 0 && lvl.dividend % lvl.divisor == 0;
    all_pass = all_pass && lvl.passes;
    rep.per_level.push_back(std::move(lvl));
  }
  rep.member = all_pass && k <= v;
  return rep;
}

std::vector<int> feasible_range(int k, int ell, int vmin, int vmax) {
  std::vector<int> out;
  for (int v = vmin; v <= vmax; ++v)
    if (in_divisibility_set(v, k, ell).member) out.push_back(v);
  return out;
}

ExceptionTable ExceptionTable::parse(std::istream& in) {
  ExceptionTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    int k, ell, v;
    if (!(ss >> k >> ell >> v))
      throw ParseError(lineno, "expected three integers 'k ell v'");
    std::string extra;
    if (ss >> extra) throw ParseError(lineno, "trailing content '" + extra + "'");
    if (k < 2 || ell < 1 || v < k)
      throw ParseError(lineno, "triple out of range (need k >= 2, ell >= 1, v >= k)");
    table.insert(k, ell, v);
  }
  return table;
}

ExceptionTable ExceptionTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open exception table: " + path);
  return parse(in);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FactorableConstructive: return "FactorableConstructive";
    case Verdict::FactorableExistential: return "FactorableExistential";
    case Verdict::NotFactorable: return "NotFactorable";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

std::string failing_levels(const DivisibilityReport& rep) {
  std::string out;
  for (const auto& lvl : rep.per_level) {
    if (lvl.passes) continue;
    if (!out.empty()) out += ", ";
    out += "h=" + std::to_string(lvl.h) + ": " + lvl.divisor.str() +
           " does not divide " + lvl.dividend.str();
  }
  return out;
}

std::string vkt(int v, int k, int t) {
  return "(" + std::to_string(v) + "," + std::to_string(k) + "," +
         std::to_string(t) + ")";
}

}  // namespace

FeasibilityVerdict skeleton_feasibility(const SkeletonSpec& spec,
                                        const ExceptionTable& exceptions) {
  validate_spec(spec);
  if (spec.ell < 1)
    throw std::invalid_argument("feasibility is defined for ell >= 1");

  if (spec.family == Family::CrossPolytope)
    return {spec, Verdict::FactorableConstructive,
            "axis-subset join covers every cross-polytope skeleton"};

  // Both remaining families reduce to a (v, t+1, t)-configuration.
  int v, t;
  if (spec.family == Family::Simplex) {
    v = spec.n + 1;
    t = spec.ell + 1;
  } else {
    v = spec.n;
    t = spec.ell;
  }
  int k = t + 1;
  auto rep = in_divisibility_set(v, k, t);

  if (!rep.member) {
    if (spec.family == Family::Simplex)
      return {spec, Verdict::NotFactorable,
              "divisibility failure: " + failing_levels(rep)};
    // Cube: divisibility is only conjectured necessary, except that the
    // h = t-1 level is the evenness count n-ell+1, and evenness is necessary.
    const auto& evenness_level = rep.per_level.back();
    if (!evenness_level.passes)
      return {spec, Verdict::NotFactorable,
              "evenness failure: each (ell-1)-face lies in " +
                  std::to_string(spec.n - spec.ell + 1) + " ell-faces (odd)"};
    return {spec, Verdict::Unknown,
            "divisibility failure (" + failing_levels(rep) +
                ") rules out the design route, but necessity for cubes is conjectural"};
  }

  if (exceptions.contains(k, t, v)) {
    if (spec.family == Family::Simplex)
      return {spec, Verdict::NotFactorable,
              "exception table lists " + vkt(v, k, t) + ": no configuration exists"};
    return {spec, Verdict::Unknown,
            "exception table lists " + vkt(v, k, t) +
                ", and necessity for cubes is conjectural"};
  }

  if (design_constructible(v, k, t))
    return {spec, Verdict::FactorableConstructive,
            "configuration " + vkt(v, k, t) + " has an implemented constructor"};

  return {spec, Verdict::FactorableExistential,
          "configuration " + vkt(v, k, t) +
              " exists (divisibility holds, finitely many exceptions) but no "
              "constructor is implemented"};
}

}  // namespace skelfact

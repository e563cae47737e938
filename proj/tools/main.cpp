#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "skelfact/designs.hpp"
#include "skelfact/divisibility.hpp"
#include "skelfact/errors.hpp"
#include "skelfact/exact_cover.hpp"
#include "skelfact/factorize.hpp"
#include "skelfact/formats.hpp"
#include "skelfact/verify.hpp"

namespace {

using namespace skelfact;

constexpr int kExitInvalid = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

std::optional<Family> family_arg(const std::string& name) {
  auto fam = family_from_name(name);
  if (!fam)
    std::cerr << "error: unknown family '" << name
              << "' (expected simplex, cross or cube)\n";
  return fam;
}

void print_verification(const VerificationReport& rep, std::ostream& out) {
  constexpr size_t kListLimit = 20;
  if (!rep.coverage_ok) {
    out << "faces covered a number of times != 1 (" << rep.bad_faces.size()
        << "):\n";
    size_t shown = 0;
    for (const auto& [face, count] : rep.bad_faces) {
      if (shown++ == kListLimit) {
        out << "  ... and " << rep.bad_faces.size() - kListLimit << " more\n";
        break;
      }
      out << "  " << encode_face(face) << " covered " << count << " times\n";
    }
  }
  if (!rep.blocks_ok) {
    out << "non-canonical blocks (" << rep.bad_blocks.size() << "):\n";
    size_t shown = 0;
    for (const auto& [index, reason] : rep.bad_blocks) {
      if (shown++ == kListLimit) {
        out << "  ... and " << rep.bad_blocks.size() - kListLimit << " more\n";
        break;
      }
      out << "  block " << index << ": " << reason << "\n";
    }
  }
  if (rep.evenness) {
    out << "evenness: " << (rep.evenness->is_even ? "even" : "NOT even");
    if (rep.evenness->multiplicity)
      out << " (each (l-1)-face lies in " << *rep.evenness->multiplicity
          << " l-faces)";
    out << "\n";
  }
  if (!rep.note.empty()) out << "note: " << rep.note << "\n";
}

void print_design_report(const DesignReport& rep, std::ostream& out) {
  constexpr size_t kListLimit = 20;
  if (!rep.block_count_ok) out << "block count mismatch\n";
  if (!rep.uncovered.empty()) {
    out << "subsets covered a number of times != 1 (" << rep.uncovered.size()
        << "):\n";
    size_t shown = 0;
    for (const auto& [subset, count] : rep.uncovered) {
      if (shown++ == kListLimit) {
        out << "  ... and " << rep.uncovered.size() - kListLimit << " more\n";
        break;
      }
      out << "  {";
      for (size_t i = 0; i < subset.size(); ++i)
        out << (i ? "," : "") << subset[i];
      out << "} covered " << count << " times\n";
    }
  }
  for (const auto& [index, reason] : rep.bad_blocks)
    out << "  block " << index << ": " << reason << "\n";
}

int emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open for writing: " << out_path << "\n";
    return kExitInvalid;
  }
  out << text;
  if (!out) {
    std::cerr << "error: write failed: " << out_path << "\n";
    return kExitInvalid;
  }
  return 0;
}

int run_feasibility(const std::string& family, int n, int ell,
                    const std::string& exceptions_path) {
  auto fam = family_arg(family);
  if (!fam) return kExitUsage;
  ExceptionTable exceptions;
  if (!exceptions_path.empty()) {
    try {
      exceptions = ExceptionTable::load(exceptions_path);
    } catch (const ParseError& e) {
      std::cerr << "error: " << exceptions_path << ": " << e.what() << "\n";
      return kExitParse;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitParse;
    }
  }
  FeasibilityVerdict verdict;
  try {
    verdict = skeleton_feasibility({*fam, n, ell}, exceptions);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  std::cout << verdict_name(verdict.verdict) << ": " << verdict.reason << "\n";
  switch (verdict.verdict) {
    case Verdict::FactorableConstructive:
    case Verdict::FactorableExistential:
      return 0;
    case Verdict::NotFactorable:
      return kExitInfeasible;
    case Verdict::Unknown:
      return kExitUnsupported;
  }
  return kExitInvalid;
}

int run_construct(const std::string& family, int n, int ell,
                  const SearchBudget& budget, const std::string& out_path) {
  auto fam = family_arg(family);
  if (!fam) return kExitUsage;
  FactorizationCertificate cert;
  try {
    switch (*fam) {
      case Family::Simplex:
        cert = simplex_factorization(n, ell, budget);
        break;
      case Family::CrossPolytope:
        cert = cross_factorization(n, ell);
        break;
      case Family::Cube:
        cert = cube_factorization(n, ell, budget);
        break;
    }
  } catch (const InfeasibleParameters& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const UnsupportedConstruction& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  auto rep = verify_certificate(cert);
  if (!rep.valid()) {
    std::cerr << "internal error: constructed certificate failed verification\n";
    print_verification(rep, std::cerr);
    return kExitInvalid;
  }
  return emit_text(format_certificate(cert), out_path);
}

// "-" reads standard input so construct | verify works as a shell pipeline
std::string slurp_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

int run_verify(const std::string& path) {
  FactorizationCertificate cert;
  try {
    std::istringstream in(slurp_input(path));
    cert = parse_certificate(in);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << path << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  auto rep = verify_certificate(cert);
  long long faces = 0;
  for (const auto& blk : cert.blocks) faces += blk.faces.size();
  std::cout << (rep.valid() ? "valid" : "INVALID") << " certificate: family="
            << family_name(cert.spec.family) << " n=" << cert.spec.n
            << " l=" << cert.spec.ell << " blocks=" << cert.blocks.size()
            << " faces=" << faces << "\n";
  print_verification(rep, std::cout);
  return rep.valid() ? 0 : kExitInvalid;
}

int run_search_design(int v, int k, int t, const SearchBudget& budget,
                      const std::string& out_path) {
  DesignSearchResult res;
  try {
    res = search_design(v, k, t, budget);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  switch (res.status) {
    case CoverStatus::Solved:
      std::cerr << "solved: " << res.design->blocks.size() << " blocks, "
                << res.nodes_expanded << " nodes\n";
      return emit_text(format_design(*res.design), out_path);
    case CoverStatus::Infeasible:
      std::cerr << "infeasible: exhaustive search found no (" << v << "," << k
                << "," << t << ")-configuration (" << res.nodes_expanded
                << " nodes)\n";
      return kExitInfeasible;
    case CoverStatus::BudgetExhausted:
      std::cerr << "budget exhausted after " << res.nodes_expanded << " nodes\n";
      return kExitUnsupported;
  }
  return kExitInvalid;
}

// the input may be a design file or a simplex certificate; dispatch on the
// first content line
int run_exponentiate(const std::string& in_path, const std::string& out_path) {
  std::string text;
  try {
    text = slurp_input(in_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }

  std::string first_word;
  {
    std::istringstream probe(text);
    std::string line;
    while (std::getline(probe, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      if (ss >> first_word) break;
    }
  }

  FactorizationCertificate simplex_cert;
  try {
    std::istringstream in(text);
    if (first_word == "DESIGN") {
      auto design = parse_design(in);
      if (design.k != design.t + 1) {
        std::cerr << "invalid input: exponentiation needs block size = "
                     "covered size + 1, got k=" << design.k
                  << " t=" << design.t << "\n";
        return kExitInvalid;
      }
      auto rep = verify_design(design);
      if (!rep.valid) {
        std::cerr << "invalid input design:\n";
        print_design_report(rep, std::cerr);
        return kExitInvalid;
      }
      simplex_cert = simplex_factorization_from_design(design);
    } else if (first_word == "FACTORIZATION") {
      simplex_cert = parse_certificate(in);
      if (simplex_cert.spec.family != Family::Simplex) {
        std::cerr << "invalid input: exponentiation starts from a simplex "
                     "certificate\n";
        return kExitInvalid;
      }
      auto rep = verify_certificate(simplex_cert);
      if (!rep.valid()) {
        std::cerr << "invalid input certificate:\n";
        print_verification(rep, std::cerr);
        return kExitInvalid;
      }
    } else {
      std::cerr << "parse error: " << in_path
                << ": expected a DESIGN or FACTORIZATION file\n";
      return kExitParse;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << in_path << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }

  FactorizationCertificate cube_cert;
  try {
    cube_cert = exponentiate_factorization(simplex_cert);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  auto rep = verify_certificate(cube_cert);
  if (!rep.valid()) {
    std::cerr << "internal error: exponentiated certificate failed "
                 "verification\n";
    print_verification(rep, std::cerr);
    return kExitInvalid;
  }
  return emit_text(format_certificate(cube_cert), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorization of Platonic polytope skeleta into canonical spheres"};
  app.require_subcommand(1);

  std::string family, path, out_path, exceptions_path;
  int n = 0, ell = 0, v = 0, k = 0, t = 0;
  SearchBudget budget;

  auto* feas = app.add_subcommand(
      "feasibility", "decide whether a skeleton factors into canonical spheres");
  feas->add_option("family", family, "simplex | cross | cube")->required();
  feas->add_option("n", n, "polytope dimension")->required();
  feas->add_option("l", ell, "skeleton level")->required();
  feas->add_option("--exceptions", exceptions_path,
                   "file of excluded 'k ell v' triples");

  auto* cons = app.add_subcommand(
      "construct", "build and verify a factorization certificate");
  cons->add_option("family", family, "simplex | cross | cube")->required();
  cons->add_option("n", n, "polytope dimension")->required();
  cons->add_option("l", ell, "skeleton level")->required();
  cons->add_option("-o,--output", out_path, "write to file instead of stdout");
  cons->add_option("--max-nodes", budget.max_nodes,
                   "search node budget (0 = default)");
  cons->add_option("--max-millis", budget.max_millis,
                   "search time budget in ms (0 = default)");

  auto* veri = app.add_subcommand("verify", "check a certificate file");
  veri->add_option("path", path, "certificate file")->required();

  auto* sear = app.add_subcommand(
      "search-design", "exact-cover search for a (v,k,t)-configuration");
  sear->add_option("v", v, "point count")->required();
  sear->add_option("k", k, "block size")->required();
  sear->add_option("t", t, "covered subset size")->required();
  sear->add_option("-o,--output", out_path, "write to file instead of stdout");
  sear->add_option("--max-nodes", budget.max_nodes,
                   "search node budget (0 = unlimited)");
  sear->add_option("--max-millis", budget.max_millis,
                   "search time budget in ms (0 = unlimited)");

  auto* expo = app.add_subcommand(
      "exponentiate",
      "map a design or simplex certificate to the matching cube certificate");
  expo->add_option("input", path, "design or simplex certificate file")
      ->required();
  expo->add_option("-o,--output", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (feas->parsed()) return run_feasibility(family, n, ell, exceptions_path);
  if (cons->parsed()) return run_construct(family, n, ell, budget, out_path);
  if (veri->parsed()) return run_verify(path);
  if (sear->parsed()) return run_search_design(v, k, t, budget, out_path);
  if (expo->parsed()) return run_exponentiate(path, out_path);
  return kExitUsage;
}

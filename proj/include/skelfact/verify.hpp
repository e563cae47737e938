#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skelfact/factorize.hpp"
#include "skelfact/polytope.hpp"

namespace skelfact {

struct VerificationReport {
  bool coverage_ok = false;
  std::vector<std::pair<Face, long long>> bad_faces;  // faces covered != once
  bool blocks_ok = false;
  std::vector<std::pair<int, std::string>> bad_blocks;  // block index, reason
  std::optional<EvennessReport> evenness;  // absent when ell = 0
  std::string note;  // e.g. evenness rules out any factorization

  bool valid() const { return coverage_ok && blocks_ok; }
};

// Is b the canonical ell-sphere in canonical position?
//   simplex: vertex union has ell+2 vertices and faces = all its
//            (ell+1)-subsets;
//   cross:   axis union has ell+1 axes and faces = all 2^(ell+1) sign
//            patterns on it;
//   cube:    some word with ell+1 stars has faces = its 2(ell+1)
//            single-star-fixings (the word is rebuilt by coordinate merge).
// For the cross family this is stricter than abstract sphere isomorphism:
// a 4-cycle can also sit on three axes (two vertices of one diagonal pair on
// distinct axes). Such blocks are deliberately rejected.
bool block_is_canonical(Family family, int ell, const Block& b,
                        std::string* reason = nullptr);

// Independent certificate check, sharing no logic with the constructors:
// enumerates the skeleton's faces itself, counts how often each is covered
// (exactly once required), checks every block with block_is_canonical, and
// attaches the evenness report for ell >= 1. Malformed faces are reported
// against their block, never thrown.
VerificationReport verify_certificate(const FactorizationCertificate& cert);

}  // namespace skelfact

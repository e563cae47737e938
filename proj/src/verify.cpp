#include "skelfact/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace skelfact {

namespace {

bool fail(std::string* reason, const std::string& msg) {
  if (reason) *reason = msg;
  return false;
}

}  // namespace

bool block_is_canonical(Family family, int ell, const Block& b,
                        std::string* reason) {
  size_t expected;
  switch (family) {
    case Family::Simplex: expected = ell + 2; break;
    case Family::CrossPolytope: expected = size_t{1} << (ell + 1); break;
    case Family::Cube: expected = 2 * (ell + 1); break;
    default: return fail(reason, "unknown family");
  }
  if (b.faces.size() != expected)
    return fail(reason, "has " + std::to_string(b.faces.size()) +
                            " faces, canonical sphere has " +
                            std::to_string(expected));

  for (const auto& f : b.faces) {
    if (f.family != family) return fail(reason, "face from a different family");
    if (f.level() != ell)
      return fail(reason, "face " + encode_face(f) + " has wrong dimension");
  }

  switch (family) {
    case Family::Simplex: {
      std::set<int> support;
      std::set<std::vector<int>> seen;
      for (const auto& f : b.faces) {
        for (size_t i = 0; i < f.verts.size(); ++i) {
          if (f.verts[i] < 0) return fail(reason, "negative vertex");
          if (i > 0 && f.verts[i - 1] >= f.verts[i])
            return fail(reason, "face vertices not strictly ascending");
        }
        support.insert(f.verts.begin(), f.verts.end());
        if (!seen.insert(f.verts).second)
          return fail(reason, "duplicate face " + encode_face(f));
      }
      if (support.size() != size_t(ell) + 2)
        return fail(reason, "vertex union has " + std::to_string(support.size()) +
                                " vertices, expected " + std::to_string(ell + 2));
      // ell+2 distinct (ell+1)-subsets of an (ell+2)-set are all of them
      return true;
    }
    case Family::CrossPolytope: {
      std::set<int> axes;
      std::set<std::vector<std::pair<int, bool>>> seen;
      for (const auto& f : b.faces) {
        std::vector<std::pair<int, bool>> key;
        for (size_t i = 0; i < f.signed_verts.size(); ++i) {
          const auto& sv = f.signed_verts[i];
          if (sv.axis < 1) return fail(reason, "axis below 1");
          if (i > 0 && f.signed_verts[i - 1].axis >= sv.axis)
            return fail(reason, "face axes not strictly ascending");
          axes.insert(sv.axis);
          key.emplace_back(sv.axis, sv.neg);
        }
        if (!seen.insert(key).second)
          return fail(reason, "duplicate face " + encode_face(f));
      }
      if (axes.size() != size_t(ell) + 1)
        return fail(reason, "axis union has " + std::to_string(axes.size()) +
                                " axes, expected " + std::to_string(ell + 1));
      // 2^(ell+1) distinct sign patterns on ell+1 axes are all of them
      return true;
    }
    case Family::Cube: {
      size_t n = b.faces.front().word.size();
      std::set<std::string> seen;
      for (const auto& f : b.faces) {
        if (f.word.size() != n)
          return fail(reason, "cube words of differing length");
        int stars = 0;
        for (char c : f.word) {
          if (c == '*') ++stars;
          else if (c != '0' && c != '1')
            return fail(reason, "bad character in word " + f.word);
        }
        if (stars != ell) return fail(reason, "wrong star count in " + f.word);
        if (!seen.insert(f.word).second)
          return fail(reason, "duplicate face " + f.word);
      }
      // rebuild the subcube word: a position is free if any face leaves it
      // free or two faces disagree on it
      std::string w = b.faces.front().word;
      for (const auto& f : b.faces)
        for (size_t p = 0; p < n; ++p)
          if (f.word[p] == '*' || f.word[p] != w[p]) w[p] = '*';
      int stars = static_cast<int>(std::count(w.begin(), w.end(), '*'));
      if (stars != ell + 1)
        return fail(reason, "faces do not merge into one (ell+1)-subcube");
      for (const auto& f : b.faces) {
        int fixed_star = -1;
        for (size_t p = 0; p < n; ++p) {
          if (w[p] == '*') {
            if (f.word[p] != '*') {
              if (fixed_star >= 0)
                return fail(reason, "face " + f.word + " fixes two free positions");
              fixed_star = static_cast<int>(p);
            }
          } else if (f.word[p] != w[p]) {
            return fail(reason, "face " + f.word + " leaves the subcube " + w);
          }
        }
        if (fixed_star < 0)
          return fail(reason, "face " + f.word + " fixes no free position");
      }
      // 2(ell+1) distinct single-star-fixings of w are all of them
      return true;
    }
  }
  return fail(reason, "unknown family");
}

VerificationReport verify_certificate(const FactorizationCertificate& cert) {
  VerificationReport rep;
  const auto& spec = cert.spec;
  if (spec.n < 1 || spec.ell < 0 || spec.ell >= spec.n) {
    rep.note = "malformed skeleton spec";
    return rep;
  }

  auto universe = enumerate_faces(spec);
  std::vector<long long> counts(universe.size(), 0);
  auto rank_of = [&universe](const Face& f) -> int {
    auto it = std::lower_bound(universe.begin(), universe.end(), f, face_less);
    if (it == universe.end() || !(*it == f)) return -1;
    return static_cast<int>(it - universe.begin());
  };

  rep.blocks_ok = true;
  for (size_t bi = 0; bi < cert.blocks.size(); ++bi) {
    const auto& blk = cert.blocks[bi];
    std::string why;
    if (!block_is_canonical(spec.family, spec.ell, blk, &why)) {
      rep.blocks_ok = false;
      rep.bad_blocks.emplace_back(static_cast<int>(bi), why);
    }
    for (const auto& f : blk.faces) {
      std::string face_why;
      if (!face_valid(spec, f, &face_why)) {
        rep.blocks_ok = false;
        rep.bad_blocks.emplace_back(
            static_cast<int>(bi),
            "face " + encode_face(f) + " not in the skeleton: " + face_why);
        continue;
      }
      int r = rank_of(f);
      if (r < 0) {
        rep.blocks_ok = false;
        rep.bad_blocks.emplace_back(static_cast<int>(bi),
                                    "face " + encode_face(f) + " not enumerated");
        continue;
      }
      ++counts[r];
    }
  }

  rep.coverage_ok = true;
  for (size_t i = 0; i < universe.size(); ++i) {
    if (counts[i] != 1) {
      rep.coverage_ok = false;
      rep.bad_faces.emplace_back(universe[i], counts[i]);
    }
  }

  if (spec.ell >= 1) {
    rep.evenness = is_even_skeleton(spec);
    if (!rep.evenness->is_even)
      rep.note = "skeleton is not even, so no sphere factorization can exist";
  }
  return rep;
}

}  // namespace skelfact

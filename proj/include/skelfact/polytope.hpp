#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skelfact/bigint.hpp"

namespace skelfact {

// The three infinite families of Platonic polytopes.
enum class Family { Simplex, CrossPolytope, Cube };

std::string family_name(Family f);  // "simplex" | "cross" | "cube"
std::optional<Family> family_from_name(std::string_view s);

// Identifies the ell-skeleton of the n-dimensional polytope of a family.
struct SkeletonSpec {
  Family family;
  int n;    // polytope dimension, n >= 1
  int ell;  // skeleton level, 0 <= ell <= n-1
};

bool operator==(const SkeletonSpec& a, const SkeletonSpec& b);

// Throws std::invalid_argument unless n >= 1 and 0 <= ell <= n-1.
void validate_spec(const SkeletonSpec& spec);

// A vertex of the cross-polytope: one of +e_axis / -e_axis, axis 1-based.
struct SignedVert {
  int axis = 1;
  bool neg = false;
};

bool operator==(const SignedVert& a, const SignedVert& b);
bool operator<(const SignedVert& a, const SignedVert& b);  // axis asc, + before -

// One ell-face, in the family's native encoding:
//   Simplex      sorted distinct vertices in [0, n], size ell+1
//   CrossPolytope sorted distinct-axis signed vertices, size ell+1
//   Cube         word over {0,1,*} of length n with exactly ell stars
// The struct itself is plain data; validity relative to a skeleton is
// checked by face_valid so that malformed faces can be reported rather
// than made unrepresentable.
struct Face {
  Family family = Family::Simplex;
  std::vector<int> verts;              // Simplex payload
  std::vector<SignedVert> signed_verts;  // CrossPolytope payload
  std::string word;                    // Cube payload

  static Face simplex(std::vector<int> v);
  static Face cross(std::vector<SignedVert> sv);
  static Face cube(std::string w);

  // Dimension of the face (#verts-1, #signed_verts-1, or star count).
  int level() const;
};

bool operator==(const Face& a, const Face& b);
bool operator!=(const Face& a, const Face& b);

// Canonical order: element-wise on sorted vertex lists (simplex, cross),
// and character-wise with '0' < '1' < '*' on cube words.
bool face_less(const Face& a, const Face& b);

// Text encodings, the bit-exact contract for files and the CLI:
//   simplex "0,2,4"   cross "+1,-3,+4"   cube "01*0*"
std::string encode_face(const Face& f);

// Parses the lexical form only (charset / token shape / sortedness);
// level and dimension checks against a skeleton are face_valid's job.
// Throws std::invalid_argument on malformed text.
Face parse_face(Family family, std::string_view text);

// True iff f is a well-formed ell-face of spec; optionally explains why not.
bool face_valid(const SkeletonSpec& spec, const Face& f,
                std::string* why = nullptr);

// Closed-form exact count of ell-faces:
//   simplex C(n+1, ell+1); cross C(n, ell+1)*2^(ell+1); cube C(n, ell)*2^(n-ell)
BigInt face_count(const SkeletonSpec& spec);

// Every ell-face exactly once, strictly increasing in canonical order.
std::vector<Face> enumerate_faces(const SkeletonSpec& spec);

// The (ell-1)-faces of f, canonically sorted. Level-0 faces yield {}.
std::vector<Face> boundary_faces(const Face& f);

// Whether every (ell-1)-face of the skeleton lies in a positive even
// number of ell-faces, and that (uniform) count.
struct EvennessReport {
  bool is_even = false;
  bool positive = false;
  // Uniform for all three families: simplex/cube n-ell+1, cross 2(n-ell).
  std::optional<long long> multiplicity;
};

EvennessReport is_even_skeleton(const SkeletonSpec& spec);  // requires ell >= 1

// The ell-faces of the canonical ell-sphere: the boundary complex of the
// (ell+1)-dimensional polytope of the same family.
std::vector<Face> canonical_sphere_faces(Family family, int ell);

}  // namespace skelfact

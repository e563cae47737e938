#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "skelfact/polytope.hpp"
#include "test_util.hpp"

using namespace skelfact;
using testutil::pascal_binomial;

TEST_CASE("face counts match known skeleta") {
  CHECK(face_count({Family::Simplex, 7, 2}) == 56);
  CHECK(face_count({Family::Cube, 3, 2}) == 6);
  CHECK(face_count({Family::CrossPolytope, 3, 1}) == 12);
  CHECK(face_count({Family::Cube, 8, 3}) == 1792);
  CHECK(face_count({Family::Simplex, 3, 2}) == 4);
  CHECK(face_count({Family::CrossPolytope, 4, 3}) == 16);
}

TEST_CASE("face_count equals closed forms from an independent binomial") {
  for (int n = 1; n <= 9; ++n)
    for (int ell = 0; ell < n; ++ell) {
      CHECK(face_count({Family::Simplex, n, ell}) ==
            pascal_binomial(n + 1, ell + 1));
      CHECK(face_count({Family::CrossPolytope, n, ell}) ==
            pascal_binomial(n, ell + 1) * (BigInt(1) << (ell + 1)));
      CHECK(face_count({Family::Cube, n, ell}) ==
            pascal_binomial(n, ell) * (BigInt(1) << (n - ell)));
    }
}

TEST_CASE("enumeration is strictly increasing, duplicate-free, and counted") {
  for (Family fam : {Family::Simplex, Family::CrossPolytope, Family::Cube})
    for (int n = 1; n <= 8; ++n)
      for (int ell = 0; ell < n; ++ell) {
        SkeletonSpec spec{fam, n, ell};
        auto faces = enumerate_faces(spec);
        CHECK(BigInt(faces.size()) == face_count(spec));
        for (size_t i = 0; i + 1 < faces.size(); ++i)
          CHECK(face_less(faces[i], faces[i + 1]));
        for (const auto& f : faces) CHECK(face_valid(spec, f));
      }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate_spec({Family::Simplex, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_spec({Family::Cube, 3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate_spec({Family::Cube, 3, -1}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_faces({Family::Simplex, 2, 5}), std::invalid_argument);
  CHECK_NOTHROW(validate_spec({Family::CrossPolytope, 1, 0}));
}

TEST_CASE("boundary of a simplex face") {
  auto b = boundary_faces(Face::simplex({0, 1, 2}));
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Face::simplex({0, 1}));
  CHECK(b[1] == Face::simplex({0, 2}));
  CHECK(b[2] == Face::simplex({1, 2}));
}

TEST_CASE("boundary of a cube face follows word order with digits before *") {
  auto b = boundary_faces(Face::cube("*1*"));
  REQUIRE(b.size() == 4);
  CHECK(b[0].word == "01*");
  CHECK(b[1].word == "11*");
  CHECK(b[2].word == "*10");
  CHECK(b[3].word == "*11");
}

TEST_CASE("boundary of a cross face") {
  auto b = boundary_faces(Face::cross({{1, false}, {3, true}}));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == Face::cross({{1, false}}));
  CHECK(b[1] == Face::cross({{3, true}}));
}

TEST_CASE("vertices have empty boundary") {
  CHECK(boundary_faces(Face::simplex({4})).empty());
  CHECK(boundary_faces(Face::cross({{2, true}})).empty());
  CHECK(boundary_faces(Face::cube("010")).empty());
}

TEST_CASE("boundary lists are canonically sorted") {
  std::mt19937 rng(20210905);
  for (int trial = 0; trial < 200; ++trial) {
    int n = testutil::rand_int(rng, 2, 7);
    int ell = testutil::rand_int(rng, 1, n - 1);
    SkeletonSpec spec{Family::Simplex, n, ell};
    switch (testutil::rand_int(rng, 0, 2)) {
      case 0: spec.family = Family::Simplex; break;
      case 1: spec.family = Family::CrossPolytope; break;
      default: spec.family = Family::Cube; break;
    }
    auto faces = enumerate_faces(spec);
    const auto& f = faces[testutil::rand_int(rng, 0, faces.size() - 1)];
    auto b = boundary_faces(f);
    for (size_t i = 0; i + 1 < b.size(); ++i) CHECK(face_less(b[i], b[i + 1]));
    for (const auto& sub : b) CHECK(sub.level() == ell - 1);
  }
}

// counts each (ell-1)-face's appearances across all ell-face boundaries
static std::map<std::string, long long> incidence_counts(const SkeletonSpec& spec) {
  std::map<std::string, long long> counts;
  for (const auto& f : enumerate_faces({spec.family, spec.n, spec.ell - 1}))
    counts[encode_face(f)] = 0;
  for (const auto& f : enumerate_faces(spec))
    for (const auto& sub : boundary_faces(f)) ++counts.at(encode_face(sub));
  return counts;
}

TEST_CASE("evenness report agrees with direct counting for n <= 6") {
  for (Family fam : {Family::Simplex, Family::CrossPolytope, Family::Cube})
    for (int n = 2; n <= 6; ++n)
      for (int ell = 1; ell < n; ++ell) {
        SkeletonSpec spec{fam, n, ell};
        auto rep = is_even_skeleton(spec);
        REQUIRE(rep.multiplicity.has_value());
        for (const auto& [enc, count] : incidence_counts(spec))
          CHECK(count == *rep.multiplicity);
        long long m = *rep.multiplicity;
        CHECK(rep.positive == (m > 0));
        CHECK(rep.is_even == (m > 0 && m % 2 == 0));
      }
}

TEST_CASE("evenness closed forms") {
  auto rep = is_even_skeleton({Family::Simplex, 7, 2});
  CHECK(rep.is_even);
  CHECK(*rep.multiplicity == 6);

  rep = is_even_skeleton({Family::Cube, 3, 1});
  CHECK_FALSE(rep.is_even);
  CHECK(*rep.multiplicity == 3);

  // every cross-polytope skeleton is even: two extensions per free axis,
  // hence exactly 2 on the boundary level
  rep = is_even_skeleton({Family::CrossPolytope, 5, 3});
  CHECK(rep.is_even);
  CHECK(*rep.multiplicity == 4);
  rep = is_even_skeleton({Family::CrossPolytope, 5, 4});
  CHECK(rep.is_even);
  CHECK(*rep.multiplicity == 2);

  for (int n = 2; n <= 9; ++n)
    for (int ell = 1; ell < n; ++ell) {
      CHECK(is_even_skeleton({Family::CrossPolytope, n, ell}).is_even);
      CHECK(is_even_skeleton({Family::Simplex, n, ell}).is_even ==
            ((n - ell + 1) % 2 == 0));
      CHECK(is_even_skeleton({Family::Cube, n, ell}).is_even ==
            ((n - ell + 1) % 2 == 0));
    }
}

TEST_CASE("canonical sphere face counts") {
  for (int ell = 0; ell <= 4; ++ell) {
    CHECK(canonical_sphere_faces(Family::Simplex, ell).size() ==
          size_t(ell) + 2);
    CHECK(canonical_sphere_faces(Family::CrossPolytope, ell).size() ==
          size_t(1) << (ell + 1));
    CHECK(canonical_sphere_faces(Family::Cube, ell).size() ==
          2 * (size_t(ell) + 1));
  }
  auto triangle = canonical_sphere_faces(Family::Simplex, 1);
  REQUIRE(triangle.size() == 3);
  CHECK(encode_face(triangle[0]) == "0,1");
  auto squares = canonical_sphere_faces(Family::Cube, 2);
  CHECK(squares.size() == 6);
  auto cycle = canonical_sphere_faces(Family::CrossPolytope, 1);
  CHECK(cycle.size() == 4);
}

TEST_CASE("encoding round-trips") {
  CHECK(encode_face(Face::simplex({0, 2, 4})) == "0,2,4");
  CHECK(encode_face(Face::cross({{1, false}, {3, true}, {4, false}})) ==
        "+1,-3,+4");
  CHECK(encode_face(Face::cube("01*0*")) == "01*0*");

  CHECK(parse_face(Family::Simplex, "0,2,4") == Face::simplex({0, 2, 4}));
  CHECK(parse_face(Family::CrossPolytope, "+1,-3,+4") ==
        Face::cross({{1, false}, {3, true}, {4, false}}));
  CHECK(parse_face(Family::Cube, "01*0*") == Face::cube("01*0*"));

  std::mt19937 rng(411);
  for (int trial = 0; trial < 300; ++trial) {
    int n = testutil::rand_int(rng, 1, 9);
    int ell = testutil::rand_int(rng, 0, n - 1);
    SkeletonSpec spec{Family::Simplex, n, ell};
    switch (trial % 3) {
      case 0: spec.family = Family::Simplex; break;
      case 1: spec.family = Family::CrossPolytope; break;
      default: spec.family = Family::Cube; break;
    }
    auto faces = enumerate_faces(spec);
    const auto& f = faces[testutil::rand_int(rng, 0, faces.size() - 1)];
    CHECK(parse_face(spec.family, encode_face(f)) == f);
  }
}

TEST_CASE("parser rejects malformed encodings") {
  CHECK_THROWS_AS(parse_face(Family::Simplex, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_face(Family::Simplex, "1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_face(Family::Simplex, "2,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_face(Family::Simplex, "1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_face(Family::Simplex, "a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_face(Family::Simplex, "-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_face(Family::CrossPolytope, "1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_face(Family::CrossPolytope, "+1,-1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_face(Family::CrossPolytope, "+0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_face(Family::CrossPolytope, "+2,+1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_face(Family::Cube, "01a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_face(Family::Cube, ""), std::invalid_argument);
}

TEST_CASE("face_valid catches shape violations") {
  SkeletonSpec spec{Family::Simplex, 4, 2};
  std::string why;
  CHECK(face_valid(spec, Face::simplex({0, 2, 4})));
  CHECK_FALSE(face_valid(spec, Face::simplex({0, 2}), &why));
  CHECK_FALSE(face_valid(spec, Face::simplex({0, 2, 5}), &why));
  CHECK_FALSE(face_valid(spec, Face::cube("**100"), &why));

  SkeletonSpec cube_spec{Family::Cube, 5, 2};
  CHECK(face_valid(cube_spec, Face::cube("01*0*")));
  CHECK_FALSE(face_valid(cube_spec, Face::cube("01*00"), &why));
  CHECK_FALSE(face_valid(cube_spec, Face::cube("01*0"), &why));

  SkeletonSpec cross_spec{Family::CrossPolytope, 4, 1};
  CHECK(face_valid(cross_spec, Face::cross({{1, false}, {4, true}})));
  CHECK_FALSE(face_valid(cross_spec, Face::cross({{1, false}, {5, true}}), &why));
  CHECK_FALSE(face_valid(cross_spec, Face::cross({{1, false}}), &why));
}

TEST_CASE("canonical cube order ranks digits below the free mark") {
  CHECK(face_less(Face::cube("11*"), Face::cube("*00")));
  CHECK(face_less(Face::cube("0*1"), Face::cube("1*0")));
  CHECK_FALSE(face_less(Face::cube("*00"), Face::cube("11*")));
}

TEST_CASE("family names") {
  CHECK(family_name(Family::Simplex) == "simplex");
  CHECK(family_name(Family::CrossPolytope) == "cross");
  CHECK(family_name(Family::Cube) == "cube");
  CHECK(family_from_name("cube") == Family::Cube);
  CHECK_FALSE(family_from_name("dodecahedron").has_value());
}

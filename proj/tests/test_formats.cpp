#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "skelfact/errors.hpp"
#include "skelfact/factorize.hpp"
#include "skelfact/formats.hpp"
#include "skelfact/verify.hpp"

using namespace skelfact;

static FactorizationCertificate reparse(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

TEST_CASE("serialize-parse round trip is the identity on canonical files") {
  for (auto cert : {cross_factorization(4, 2),
                    simplex_factorization_from_design(construct_sts(7)),
                    cube_factorization(4, 3)}) {
    auto text = format_certificate(cert);
    auto back = reparse(text);
    CHECK(back.spec == cert.spec);
    REQUIRE(back.blocks.size() == cert.blocks.size());
    for (size_t i = 0; i < back.blocks.size(); ++i) {
      CHECK(back.blocks[i].label == cert.blocks[i].label);
      CHECK(back.blocks[i].faces == cert.blocks[i].faces);
    }
    CHECK(format_certificate(back) == text);
    CHECK(verify_certificate(back).valid());
  }
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text =
      "# a factorization of the octahedron's edges\n"
      "\n"
      "FACTORIZATION family=cross n=3 l=1 blocks=3\n"
      "BLOCK axes=1,2   # first axis pair\n"
      "+1,+2\n"
      "+1,-2\n"
      "-1,+2\n"
      "-1,-2\n"
      "\n"
      "BLOCK axes=1,3\n"
      "+1,+3\n+1,-3\n-1,+3\n-1,-3\n"
      "BLOCK axes=2,3\n"
      "+2,+3\n+2,-3\n-2,+3\n-2,-3\n";
  auto cert = reparse(text);
  CHECK(cert.spec == SkeletonSpec{Family::CrossPolytope, 3, 1});
  REQUIRE(cert.blocks.size() == 3);
  CHECK(cert.blocks[0].label == "axes=1,2");
  CHECK(cert.blocks[0].faces.size() == 4);
  CHECK(verify_certificate(cert).valid());
}

TEST_CASE("header errors carry line numbers") {
  auto expect_line = [](const std::string& text, int line) {
    try {
      reparse(text);
      FAIL_CHECK("no ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_line("", 1);
  expect_line("DESIGN v=7 k=3 t=2\n", 1);
  expect_line("FACTORIZATION family=cross n=3 l=1\n", 1);
  expect_line("FACTORIZATION family=pyramid n=3 l=1 blocks=1\n", 1);
  expect_line("FACTORIZATION family=cross n=3 l=7 blocks=1\n", 1);
  expect_line("FACTORIZATION family=cross n=x l=1 blocks=1\n", 1);
  expect_line("# c\nFACTORIZATION family=cross n=3 l=1 blocks=one\n", 2);
}

TEST_CASE("body errors carry line numbers") {
  auto expect_line = [](const std::string& text, int line) {
    try {
      reparse(text);
      FAIL_CHECK("no ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  std::string head = "FACTORIZATION family=simplex n=3 l=1 blocks=1\n";
  expect_line(head + "0,1\n", 2);  // face line before any BLOCK
  expect_line(head + "BLOCK\nbad-face\n", 3);
  expect_line(head, 1);  // declared 1 block, got none
  // block count mismatch surfaces at end of input
  expect_line(head + "BLOCK\n0,1\nBLOCK\n0,2\n", 5);
}

TEST_CASE("range violations are a verifier concern, not a parse error") {
  // vertex 9 is a well-formed encoding, just not a face of this skeleton
  auto cert = reparse(
      "FACTORIZATION family=simplex n=3 l=1 blocks=1\n"
      "BLOCK\n0,1\n0,9\n");
  auto rep = verify_certificate(cert);
  CHECK_FALSE(rep.valid());
  bool charged = false;
  for (const auto& [idx, why] : rep.bad_blocks)
    if (idx == 0 && why.find("skeleton") != std::string::npos) charged = true;
  CHECK(charged);
}

TEST_CASE("declared block count is enforced") {
  std::string text =
      "FACTORIZATION family=simplex n=2 l=1 blocks=1\n"
      "BLOCK whole\n0,1\n0,2\n1,2\n";
  auto cert = reparse(text);
  CHECK(cert.blocks.size() == 1);
  CHECK(cert.blocks[0].label == "whole");
  CHECK(verify_certificate(cert).valid());

  std::string extra = text + "BLOCK again\n0,1\n";
  CHECK_THROWS_AS(reparse(extra), ParseError);
}

TEST_CASE("empty blocks parse but never verify") {
  std::string text =
      "FACTORIZATION family=simplex n=2 l=1 blocks=2\n"
      "BLOCK a\n"
      "BLOCK b\n0,1\n0,2\n1,2\n";
  auto cert = reparse(text);
  REQUIRE(cert.blocks.size() == 2);
  CHECK(cert.blocks[0].faces.empty());
  CHECK_FALSE(verify_certificate(cert).valid());
}

TEST_CASE("face encodings must match the declared family") {
  std::string text =
      "FACTORIZATION family=cube n=3 l=1 blocks=1\n"
      "BLOCK\n0,1\n";
  CHECK_THROWS_AS(reparse(text), ParseError);
}

TEST_CASE("labels survive a round trip verbatim") {
  FactorizationCertificate cert;
  cert.spec = {Family::Simplex, 2, 1};
  cert.blocks.push_back({{Face::simplex({0, 1}), Face::simplex({0, 2}),
                          Face::simplex({1, 2})},
                         "design=0,1,2 rest="});
  auto text = format_certificate(cert);
  auto back = reparse(text);
  CHECK(back.blocks[0].label == "design=0,1,2 rest=");
}

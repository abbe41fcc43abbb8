#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coxeter/errors.hpp"
#include "coxeter/oracle_models.hpp"
#include "test_support.hpp"

using namespace testing;

namespace {

const std::vector<std::string> kGoldenTv = {
    "s1", "s2", "s3", "s1 s2 s1", "s2 s3 s2", "s1 s2 s3 s2 s1", "s3 s2 s1 s0 s1 s2 s3"};

}  // namespace

TEST_CASE("B4 inversion sets") {
  const CoxeterSystem b4 = make_system("B4");
  const GroupElement u = el(b4, "s2 s3 s2");
  const GroupElement v = el(b4, "s2 s3 s2 s1 s0 s2 s3");
  CHECK(left_inversions(b4, b4.identity()).empty());
  CHECK(left_inversions(b4, u) == elements_of(b4, {"s2", "s3", "s2 s3 s2"}));
  CHECK(left_inversions(b4, v) == elements_of(b4, kGoldenTv));
  CHECK(right_inversions(b4, b4.generator(1)) == elements_of(b4, {"s1"}));
  CHECK(right_inversions(b4, v) ==
        conjugate_all(b4, b4.inverse(v), left_inversions(b4, v)));
}

TEST_CASE("B4 projections") {
  const CoxeterSystem b4 = make_system("B4");
  const GroupElement v = el(b4, "s2 s3 s2 s1 s0 s2 s3");
  const ParabolicFactorization f3 = project(b4, v, parse_mask("~s3", 4));
  CHECK(format_element(f3.quotient_part) == "s1 s2 s3");
  CHECK(b4.multiply(f3.quotient_part, f3.parabolic_part) == v);
  const ParabolicFactorization f0 = project(b4, v, parse_mask("~s0", 4));
  CHECK(format_element(f0.quotient_part) == "s3 s2 s1 s0");
  CHECK(left_inversions(b4, f3.quotient_part) ==
        elements_of(b4, {"s1", "s1 s2 s1", "s1 s2 s3 s2 s1"}));
  CHECK(left_inversions(b4, f0.quotient_part) ==
        elements_of(b4, {"s3", "s2 s3 s2", "s1 s2 s3 s2 s1", "s3 s2 s1 s0 s1 s2 s3"}));
  const ParabolicFactorization none = project(b4, v, ParabolicMask{});
  CHECK(none.quotient_part == v);
  CHECK(none.parabolic_part.is_identity());
  CHECK(project(b4, v, b4.generators()).quotient_part.is_identity());
}

TEST_CASE("factorization invariants on every element") {
  for (const char* name : {"A3", "B3", "H3", "I2(5)"}) {
    CAPTURE(name);
    const CoxeterSystem sys = make_system(name);
    const auto all = all_elements(sys);
    for (const auto& w : all) {
      CHECK(left_inversions(sys, w).size() == w.length());
      for (ParabolicMask J : subsets_of(sys.generators())) {
        const auto f = project(sys, w, J);
        const auto g = project(sys, w, J, DescentChoice::Largest);
        CHECK(f.quotient_part == g.quotient_part);
        CHECK(f.parabolic_part == g.parabolic_part);
        CHECK(sys.multiply(f.quotient_part, f.parabolic_part) == w);
        CHECK(f.quotient_part.length() + f.parabolic_part.length() == w.length());
        CHECK((sys.right_descents(f.quotient_part) & J).empty());
        CHECK(in_parabolic(f.parabolic_part, J));
        for (ParabolicMask I : subsets_of(J))
          CHECK(quotient_projection(sys, quotient_projection(sys, w, I), J) ==
                f.quotient_part);
      }
    }
  }
}

TEST_CASE("reflections") {
  const CoxeterSystem b3 = make_system("B3");
  std::set<GroupElement> reflections;
  for (const auto& w : all_elements(b3))
    for (const auto& t : left_inversions(b3, w)) reflections.insert(t);
  CHECK(reflections.size() == 9);
  for (const auto& w : all_elements(b3)) {
    CHECK(is_reflection(b3, w) == reflections.contains(w));
    if (reflections.contains(w)) {
      CHECK(b3.inverse(w) == w);
      CHECK(w.length() % 2 == 1);
    }
  }
}

TEST_CASE("weak order: both criteria agree with the covering closure") {
  for (const char* name : {"A3", "B3", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)",
                           "H3"}) {
    CAPTURE(name);
    const CoxeterSystem sys = make_system(name);
    const auto all = all_elements(sys);
    const CoveringClosureOracle oracle(sys, all);
    std::size_t mismatches = 0;
    for (const auto& u : all) {
      for (const auto& v : all) {
        const bool expect = oracle.leq(u, v);
        if (weak_leq(sys, u, v) != expect) ++mismatches;
        if (weak_leq_by_inversions(sys, u, v) != expect) ++mismatches;
      }
    }
    CHECK(mismatches == 0);
  }
  const CoxeterSystem b4 = make_system("B4");
  CHECK(weak_leq(b4, el(b4, "s2 s3 s2"), el(b4, "s2 s3 s2 s1 s0 s2 s3")));
  CHECK(weak_leq(b4, b4.identity(), el(b4, "s2 s3 s2 s1 s0 s2 s3")));
}

TEST_CASE("Bruhat order: recursion, subword oracle and Deodhar agree") {
  for (const char* name : {"A3", "B3", "I2(5)"}) {
    CAPTURE(name);
    const CoxeterSystem sys = make_system(name);
    const auto all = all_elements(sys);
    const SubwordBruhatOracle oracle(sys, all);
    std::size_t mismatches = 0;
    for (const auto& u : all) {
      for (const auto& v : all) {
        const bool b = bruhat_leq(sys, u, v);
        if (b != oracle.leq(u, v)) ++mismatches;
        if (b != deodhar_check(sys, u, v)) ++mismatches;
        if (weak_leq(sys, u, v) && !b) ++mismatches;
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("Bruhat monotonicity of projections") {
  for (const char* name : {"A3", "B3"}) {
    CAPTURE(name);
    const CoxeterSystem sys = make_system(name);
    const auto all = all_elements(sys);
    std::size_t violations = 0;
    for (ParabolicMask J : subsets_of(sys.generators()))
      for (const auto& u : all)
        for (const auto& v : all)
          if (bruhat_leq(sys, u, v) &&
              !bruhat_leq(sys, quotient_projection(sys, u, J), quotient_projection(sys, v, J)))
            ++violations;
    CHECK(violations == 0);
  }
}

TEST_CASE("joins") {
  const CoxeterSystem a2 = make_system("A2");
  const auto all = all_elements(a2);
  CHECK(weak_join(a2, std::vector<GroupElement>{}, all).is_identity());
  const GroupElement s0 = a2.generator(0), s1 = a2.generator(1);
  CHECK(weak_join(a2, std::vector<GroupElement>{s0}, all) == s0);
  CHECK(format_element(weak_join(a2, std::vector<GroupElement>{s0, s1}, all)) == "s0 s1 s0");

  const CoxeterSystem b3 = make_system("B3");
  for (const auto& w : all_elements(b3)) {
    std::vector<GroupElement> parts;
    for (Generator s : b3.right_descents(w).members())
      parts.push_back(maximal_projection(b3, w, s));
    CHECK(weak_join(b3, parts, all_elements(b3)) == w);
  }

  const CoxeterSystem inf = make_system("I2(inf)");
  const auto ball = enumerate(inf, 4).elements;
  CHECK_THROWS_AS(weak_join(inf, std::vector<GroupElement>{inf.generator(0), inf.generator(1)},
                            ball),
                  NoUpperBound);
}

TEST_CASE("enumeration") {
  CHECK(enumerate(make_system("A2"), 3).elements.size() == 6);
  CHECK_FALSE(enumerate(make_system("A2"), 3).truncated);
  CHECK(enumerate(make_system("A2"), 2).truncated);
  CHECK(enumerate(make_system("B4"), 16).elements.size() == 384);
  CHECK(enumerate(make_system("H3"), 40).elements.size() == 120);
  CHECK(enumerate(make_system("D4"), 40).elements.size() == 192);
  CHECK(enumerate(make_system("F4"), 40).elements.size() == 1152);
  const Enumeration inf = enumerate(make_system("I2(inf)"), 5);
  CHECK(inf.elements.size() == 11);
  CHECK(inf.truncated);
  const auto& e = enumerate(make_system("A3"), 40).elements;
  CHECK(std::is_sorted(e.begin(), e.end()));
  CHECK(enumerate_parabolic(make_system("B4"), ParabolicMask{0, 1}, 40).elements.size() == 8);
  CHECK(enumerate_parabolic(make_system("B4"), ParabolicMask{}, 40).elements.size() == 1);
}

TEST_CASE("A3 right inversions match transposition inversions") {
  const CoxeterSystem a3 = make_system("A3");
  const NamedType type = parse_named_type("A3");
  for (const auto& w : all_elements(a3)) {
    std::set<OracleImage> expect;
    const OracleImage p = oracle_map(type, w);
    for (const OracleImage& t : oracle_reflections(type))
      if (oracle_length(compose(p, t)) < oracle_length(p)) expect.insert(t);
    std::set<OracleImage> got;
    for (const auto& t : right_inversions(a3, w)) got.insert(oracle_map(type, t));
    CHECK(got == expect);
  }
}

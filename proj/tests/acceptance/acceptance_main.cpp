// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coxeter/descent_calculus.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/notation.hpp"
#include "coxeter/oracle_models.hpp"
#include "coxeter/sweep.hpp"
#include "coxeter/theorem_suite.hpp"

using namespace coxeter;

namespace {

const std::vector<std::string> kCatalog = {
    "A1",    "A2",    "A3",    "A4",    "A5",     "A6",     "B2",     "B3",
    "B4",    "B5",    "B6",    "D4",    "D5",     "D6",     "I2(3)",  "I2(4)",
    "I2(5)", "I2(6)", "I2(7)", "I2(8)", "I2(9)",  "I2(10)", "I2(11)", "I2(12)",
    "I2(inf)", "H3",  "H4",    "F4",    "E6"};

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (notes.size() < 20) notes.push_back(what);
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double time_limit_seconds;  // 0 = no limit
  std::function<void(Outcome&)> body;
};

CoxeterSystem system_of(const std::string& name) {
  return CoxeterSystem(from_named_type(name));
}

GroupElement el(const CoxeterSystem& sys, const std::string& text) {
  return parse_element(sys, text);
}

ReflectionSet reflections(const CoxeterSystem& sys, const std::vector<std::string>& words) {
  ReflectionSet out;
  for (const std::string& w : words) out.insert(el(sys, w));
  return out;
}

std::vector<GroupElement> whole_group(const CoxeterSystem& sys) {
  const Enumeration e = enumerate(sys, 1000);
  if (e.truncated) throw InternalError("group is not finite within cap");
  return e.elements;
}

void tally(Outcome& out, const VerificationReport& r, std::size_t& checked) {
  ++checked;
  out.require(r.holds(), r.statement_id + " " + r.instance + " | " + r.witness);
}

// A uniformly random letter that extends w, repeated; gives a random
// reduced word that is usually not the normal form.
Word random_reduced_word(const CoxeterSystem& sys, std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  const std::size_t target = len_dist(rng);
  Word word;
  GroupElement w = sys.identity();
  while (word.size() < target) {
    std::vector<Generator> ascents;
    for (Generator s = 0; s < sys.rank(); ++s)
      if (!sys.is_right_descent(w, s)) ascents.push_back(s);
    if (ascents.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, ascents.size() - 1);
    const Generator s = ascents[pick(rng)];
    word.push_back(s);
    w = sys.multiply(w, s);
  }
  return word;
}

// --- criteria ---------------------------------------------------------------

void golden_example(Outcome& out) {
  const CoxeterSystem b4 = system_of("B4");
  const GroupElement u = el(b4, "s2 s3 s2");
  const GroupElement v = el(b4, "s2 s3 s2 s1 s0 s2 s3");
  const GroupElement x = b4.multiply(b4.inverse(u), v);
  out.require(x == el(b4, "s1 s0 s2 s3") && format_element(x) == "s1 s0 s2 s3",
              "u^-1 v = " + format_element(x));
  out.require(b4.right_descents(v) == DescentSet{0, 2, 3},
              "D_R(v) = " + format_set(b4.right_descents(v)));
  out.require(b4.right_descents(x) == DescentSet{0, 3},
              "D_R(u^-1 v) = " + format_set(b4.right_descents(x)));
  out.require(weak_leq(b4, u, v), "u <=_R v");

  const GroupElement v3 = maximal_projection(b4, v, 3);
  const GroupElement v0 = maximal_projection(b4, v, 0);
  out.require(format_element(v3) == "s1 s2 s3", "v^{S-s3} = " + format_element(v3));
  out.require(format_element(v0) == "s3 s2 s1 s0", "v^{S-s0} = " + format_element(v0));

  const ReflectionSet tu = left_inversions(b4, u);
  const ReflectionSet t3 = left_inversions(b4, v3);
  const ReflectionSet t0 = left_inversions(b4, v0);
  const ReflectionSet tv = left_inversions(b4, v);
  out.require(tu == reflections(b4, {"s2", "s3", "s2 s3 s2"}),
              "T_L(u) = " + format_reflections(tu));
  out.require(t3 == reflections(b4, {"s1", "s1 s2 s1", "s1 s2 s3 s2 s1"}),
              "T_L(v^{S-s3}) = " + format_reflections(t3));
  out.require(t0 == reflections(b4, {"s3", "s2 s3 s2", "s1 s2 s3 s2 s1",
                                     "s3 s2 s1 s0 s1 s2 s3"}),
              "T_L(v^{S-s0}) = " + format_reflections(t0));
  out.require(tv == reflections(b4, {"s1", "s2", "s3", "s1 s2 s1", "s2 s3 s2",
                                     "s1 s2 s3 s2 s1", "s3 s2 s1 s0 s1 s2 s3"}),
              "T_L(v) = " + format_reflections(tv));
  out.require(tv == set_union(tu, set_union(t3, t0)), "union identity");
  out.summary = "7 exact set and element comparisons";
}

void descent_union(Outcome& out) {
  std::size_t pairs = 0, checked = 0;
  for (const char* name : {"A3", "B3", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)",
                           "H3"}) {
    const CoxeterSystem sys = system_of(name);
    const auto all = whole_group(sys);
    for (const auto& u : all) {
      for (const auto& v : all) {
        if (!weak_leq(sys, u, v)) continue;
        ++pairs;
        tally(out, verify_finest_corollary(sys, u, v), checked);
        const DescentSet d = sys.right_descents(sys.multiply(sys.inverse(u), v));
        const std::vector<ParabolicMask> single{d.complement(sys.rank())};
        tally(out, verify_theorem(sys, u, v, single), checked);
      }
    }
  }
  out.summary = std::to_string(pairs) + " weak-order pairs, " + std::to_string(checked) +
                " reports";
}

void join_decomposition(Outcome& out) {
  std::size_t checked = 0;
  for (const char* name : {"A3", "B3", "H3", "B4"}) {
    const CoxeterSystem sys = system_of(name);
    const auto all = whole_group(sys);
    for (const auto& w : all) tally(out, verify_join_decomposition(sys, w, all), checked);
  }
  out.summary = std::to_string(checked) + " elements";
}

void reduced_word_union(Outcome& out) {
  std::size_t checked = 0;
  const CoxeterSystem b4 = system_of("B4");
  tally(out, verify_reduced_word_union(b4, Word{2, 3, 2, 1, 0, 2, 3}), checked);
  std::mt19937_64 rng(0);
  for (const std::string& name : kCatalog) {
    const CoxeterSystem sys = system_of(name);
    for (int n = 0; n < 200; ++n)
      tally(out, verify_reduced_word_union(sys, random_reduced_word(sys, rng, 24)), checked);
  }
  out.summary = "worked-example word + " + std::to_string(checked - 1) + " random reduced words over " +
                std::to_string(kCatalog.size()) + " groups";
}

void quotient_compatibility(Outcome& out) {
  SweepOptions options;
  options.scope = Scope::Exhaustive;
  std::ostringstream summary;
  for (const char* name : {"A3", "B3"}) {
    const CoxeterSystem sys = system_of(name);
    const Enumeration universe = enumerate(sys, 1000);
    const SweepSummary s = run_sweep(sys, universe, statement::kQuotientCompatibility, options);
    out.require(s.exhaustive, std::string(name) + " sweep not exhaustive");
    out.require(s.failed == 0, std::string(name) + ": " + summary_to_text(s));
    out.require(s.passed > 0, std::string(name) + ": no qualifying triples");
    for (const auto& r : s.reports)
      if (r.verdict == Verdict::Fails) out.require(false, report_to_text(r));
    if (!summary.str().empty()) summary << "; ";
    summary << name << " " << s.passed << " qualifying triples, " << s.skipped << " filtered";
  }
  out.summary = summary.str();
}

void boolean_poset(Outcome& out) {
  std::size_t checked = 0;
  for (const char* name : {"A3", "B3"}) {
    const CoxeterSystem sys = system_of(name);
    for (const auto& w : whole_group(sys))
      tally(out,
            verify_boolean_poset(sys, w, sys.right_descents(w).complement(sys.rank())),
            checked);
  }
  out.summary = std::to_string(checked) + " elements";
}

void oracle_equivalence(Outcome& out) {
  std::ostringstream summary;
  auto check = [&](const std::string& name, const OracleCheckOptions& options) {
    const OracleCheckResult r =
        run_oracle_check(system_of(name), parse_named_type(name), options);
    for (const auto& d : r.disagreements) out.require(false, name + ": " + d);
    if (!summary.str().empty()) summary << ", ";
    summary << name << " " << r.elements_checked << "/" << r.pairs_checked;
  };
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3"}) check(name, {});
  OracleCheckOptions sampled;
  sampled.samples = 1000;
  sampled.seed = 0;
  check("B4", sampled);
  out.summary = "elements/pairs: " + summary.str();
}

void property_suites(Outcome& out) {
  constexpr int kCases = 500;
  std::size_t cases = 0;
  std::mt19937_64 rng(0);
  for (const char* name : {"A3", "A4", "B3", "B4", "D4", "I2(5)", "I2(8)", "H3", "F4",
                           "I2(inf)"}) {
    const bool finite = std::string(name) != "I2(inf)";
    // The infinite group samples a ball of radius 20; products and
    // conjugates of its elements stay below length 100.
    const CoxeterSystem sys = CoxeterSystem(from_named_type(name), finite ? kDefaultLengthCap : 100);
    const std::vector<GroupElement> all = finite ? whole_group(sys) : enumerate(sys, 20).elements;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<std::uint32_t> mask_bits(0, (1u << sys.rank()) - 1);
    const std::string tag = std::string(name) + ": ";
    std::size_t checked = 0;
    for (int n = 0; n < kCases; ++n) {
      const GroupElement& x = all[pick(rng)];
      const GroupElement& y = all[pick(rng)];
      ParabolicMask J = ParabolicMask::from_bits(mask_bits(rng));
      const ParabolicMask I = ParabolicMask::from_bits(mask_bits(rng)) & J;

      tally(out, verify_symmetric_difference(sys, x, y), checked);

      if (finite) {
        const auto wj = enumerate_parabolic(sys, J, 1000).elements;
        tally(out, verify_quotient_difference(sys, x, J, ElementSet(wj.begin(), wj.end())),
              checked);
      }

      const GroupElement pi = quotient_projection(sys, x, I);
      out.require(quotient_projection(sys, pi, J) == quotient_projection(sys, x, J),
                  tag + "P^J P^I != P^J at " + format_element(x));

      out.require(left_inversions(sys, x).size() == x.length(),
                  tag + "|T_L| != l at " + format_element(x));

      out.require(weak_leq(sys, x, y) == weak_leq_by_inversions(sys, x, y),
                  tag + "weak_leq implementations disagree on " + format_element(x) +
                      ", " + format_element(y));
      // Comparable pairs are rare among random ones; also test x against a
      // random prefix-related element.
      const GroupElement xy = sys.multiply(x, y);
      out.require(weak_leq(sys, x, xy) == weak_leq_by_inversions(sys, x, xy),
                  tag + "weak_leq implementations disagree on " + format_element(x) +
                      ", " + format_element(xy));

      out.require(deodhar_check(sys, x, y) == bruhat_leq(sys, x, y),
                  tag + "Deodhar != Bruhat on " + format_element(x) + ", " +
                      format_element(y));
      out.require(deodhar_check(sys, y, xy) == bruhat_leq(sys, y, xy),
                  tag + "Deodhar != Bruhat on " + format_element(y) + ", " +
                      format_element(xy));
      ++cases;
    }
  }
  out.summary = std::to_string(cases) + " seeded cases";
}

void numerical_robustness(Outcome& out) {
  std::size_t elements = 0;
  std::ostringstream summary;
  for (const std::string& name : kCatalog) {
    const CoxeterSystem sys = system_of(name);
    try {
      const Enumeration e = enumerate(sys, 40);
      for (const GroupElement& w : e.elements) {
        const Word reversed(w.word().rbegin(), w.word().rend());
        for (Generator s = 0; s < sys.rank(); ++s) {
          (void)sign_of(act(w.word(), simple_root(sys.rank(), s), sys.form()));
          (void)sign_of(act(reversed, simple_root(sys.rank(), s), sys.form()));
        }
        (void)sys.right_descents(w);
        (void)sys.left_descents(w);
      }
      elements += e.elements.size();
    } catch (const DegenerateSign& err) {
      out.require(false, name + ": " + err.what());
    }
  }
  out.summary = std::to_string(elements) + " elements over " + std::to_string(kCatalog.size()) +
                " groups";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "B4 golden example", 1.0, golden_example},
      {2, "descent union, finest and single-mask families, exhaustive", 120.0, descent_union},
      {3, "join decomposition, exhaustive on A3 B3 H3 B4", 300.0, join_decomposition},
      {4, "reduced-word union, worked-example word and 200 random words per group", 0.0,
       reduced_word_union},
      {5, "quotient compatibility, exhaustive on A3 B3", 600.0, quotient_compatibility},
      {6, "boolean poset with K = S - D_R(w) on A3 B3", 0.0, boolean_poset},
      {7, "oracle equivalence A1-A4 B2-B3 exhaustive, B4 1000 samples", 0.0,
       oracle_equivalence},
      {8, "seeded property suites, 500 cases per group", 0.0, property_suites},
      {9, "no DegenerateSign up to length 40 in the catalog", 0.0, numerical_robustness},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("unexpected error: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds)
      outcome.require(false, "time limit " + std::to_string(c.time_limit_seconds) + " s exceeded");

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (outcome.passed ? "[PASS] " : "[FAIL] ") << c.number << " " << c.title << " ("
              << outcome.summary << "; " << timing;
    if (c.time_limit_seconds > 0) std::cout << ", limit " << c.time_limit_seconds << " s";
    std::cout << ")\n";
    for (const std::string& note : outcome.notes) std::cout << "       " << note << "\n";
    std::cout.flush();
    if (!outcome.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}

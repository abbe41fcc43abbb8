#include "coxeter/theorem_suite.hpp"

#include <algorithm>
#include <map>

#include "coxeter/errors.hpp"
#include "coxeter/notation.hpp"

namespace coxeter {

std::string format_family(std::span<const ParabolicMask> family) {
  std::string out = "[";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ",";
    out += format_set(family[i]);
  }
  return out + "]";
}

std::string format_reflections(const ReflectionSet& set) {
  std::string out = "{";
  bool first = true;
  for (const GroupElement& t : set) {
    if (!first) out += ", ";
    out += format_element(t);
    first = false;
  }
  return out + "}";
}

namespace {

VerificationReport make_report(std::string_view id, std::string instance) {
  VerificationReport report;
  report.statement_id = std::string(id);
  report.instance = std::move(instance);
  return report;
}

void fail(VerificationReport& report, std::string witness) {
  report.verdict = Verdict::Fails;
  report.witness = std::move(witness);
}

// Checks lhs == rhs one inclusion at a time; on failure records the first
// offending reflection in canonical order.
void check_equal(VerificationReport& report, const ReflectionSet& lhs,
                 std::string_view lhs_name, const ReflectionSet& rhs,
                 std::string_view rhs_name) {
  if (!report.holds()) return;
  for (const GroupElement& t : lhs) {
    if (!rhs.contains(t)) {
      fail(report, format_element(t) + " in " + std::string(lhs_name) +
                       " but not in " + std::string(rhs_name));
      return;
    }
  }
  for (const GroupElement& t : rhs) {
    if (!lhs.contains(t)) {
      fail(report, format_element(t) + " in " + std::string(rhs_name) +
                       " but not in " + std::string(lhs_name));
      return;
    }
  }
}

void check_disjoint(VerificationReport& report, const ReflectionSet& a,
                    std::string_view a_name, const ReflectionSet& b,
                    std::string_view b_name) {
  if (!report.holds()) return;
  for (const GroupElement& t : a) {
    if (b.contains(t)) {
      fail(report, format_element(t) + " in both " + std::string(a_name) +
                       " and " + std::string(b_name));
      return;
    }
  }
}

std::string pair_instance(const GroupElement& u, const GroupElement& v) {
  return "u=" + format_element(u) + "; v=" + format_element(v);
}

GroupElement left_quotient(const CoxeterSystem& system, const GroupElement& u,
                           const GroupElement& v) {
  return system.multiply(system.inverse(u), v);
}

void require_weak_leq(const CoxeterSystem& system, const GroupElement& u,
                      const GroupElement& v, std::string_view u_name,
                      std::string_view v_name) {
  if (!weak_leq(system, u, v))
    throw PreconditionError(std::string(u_name) + "=" + format_element(u) +
                            " is not below " + std::string(v_name) + "=" +
                            format_element(v) + " in right weak order");
}

ParabolicMask intersect_family(const CoxeterSystem& system,
                               std::span<const ParabolicMask> family) {
  ParabolicMask meet = system.generators();
  for (ParabolicMask J : family) meet = meet & J;
  return meet;
}

VerificationReport check_descent_union(const CoxeterSystem& system,
                                       std::string_view id, const GroupElement& u,
                                       const GroupElement& v,
                                       std::span<const ParabolicMask> family) {
  require_weak_leq(system, u, v, "u", "v");
  const GroupElement w = left_quotient(system, u, v);
  const DescentSet descents = system.right_descents(w);
  const ParabolicMask required = descents.complement(system.rank());
  const ParabolicMask meet = intersect_family(system, family);
  if (meet != required)
    throw PreconditionError("family " + format_family(family) +
                            " intersects to " + format_set(meet) +
                            ", expected S \\ D_R(u^-1 v) = " + format_set(required));

  VerificationReport report =
      make_report(id, pair_instance(u, v) + "; E=" + format_family(family));
  ReflectionSet rhs = left_inversions(system, u);
  for (ParabolicMask J : family)
    rhs = set_union(rhs, left_inversions(system, quotient_projection(system, v, J)));
  check_equal(report, left_inversions(system, v), "T_L(v)", rhs, "the union");
  return report;
}

}  // namespace

VerificationReport verify_theorem(const CoxeterSystem& system, const GroupElement& u,
                                  const GroupElement& v,
                                  std::span<const ParabolicMask> family) {
  return check_descent_union(system, statement::kDescentUnion, u, v, family);
}

VerificationReport verify_finest_corollary(const CoxeterSystem& system,
                                           const GroupElement& u,
                                           const GroupElement& v) {
  require_weak_leq(system, u, v, "u", "v");
  std::vector<ParabolicMask> family;
  for (Generator s : system.right_descents(left_quotient(system, u, v)).members()) {
    ParabolicMask J = system.generators();
    J.erase(s);
    family.push_back(J);
  }
  return check_descent_union(system, statement::kFinestDescentUnion, u, v, family);
}

VerificationReport verify_join_decomposition(const CoxeterSystem& system,
                                             const GroupElement& w,
                                             std::span<const GroupElement> universe) {
  if (std::find(universe.begin(), universe.end(), w) == universe.end())
    throw PreconditionError(format_element(w) + " is not in the universe");
  VerificationReport report =
      make_report(statement::kJoinDecomposition, "w=" + format_element(w));
  std::vector<GroupElement> parts;
  for (Generator s : system.right_descents(w).members())
    parts.push_back(maximal_projection(system, w, s));
  const GroupElement join = weak_join(system, parts, universe);
  if (join != w) fail(report, "join of projections is " + format_element(join));
  return report;
}

VerificationReport verify_reduced_word_union(const CoxeterSystem& system,
                                             const Word& word) {
  const GroupElement w = system.normalize(word);
  if (w.length() != word.size())
    throw PreconditionError("word " + format_word(word) + " is not reduced");
  VerificationReport report =
      make_report(statement::kReducedWordUnion, "word=" + format_word(word));

  ReflectionSet rhs;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::size_t prefix_length = word.size() - i;
    const GroupElement prefix = system.normalize(
        std::span<const Generator>(word.data(), prefix_length));
    const Generator last = word[prefix_length - 1];
    rhs = set_union(rhs, left_inversions(system, maximal_projection(system, prefix, last)));
  }
  check_equal(report, left_inversions(system, w), "T_L(w)", rhs, "the union");
  return report;
}

VerificationReport verify_quotient_compatibility(const CoxeterSystem& system,
                                                 const GroupElement& u,
                                                 const GroupElement& v,
                                                 const GroupElement& w) {
  require_weak_leq(system, u, v, "u", "v");
  require_weak_leq(system, u, w, "u", "w");
  VerificationReport report = make_report(
      statement::kQuotientCompatibility,
      pair_instance(u, v) + "; w=" + format_element(w));

  for (Generator s : system.right_descents(left_quotient(system, u, v)).members()) {
    if (maximal_projection(system, v, s) != maximal_projection(system, w, s)) {
      report.verdict = Verdict::Skipped;
      report.skip_reason = "P^(" + generator_label(s) + ")(v) != P^(" +
                           generator_label(s) + ")(w)";
      return report;
    }
  }
  if (!weak_leq(system, v, w)) fail(report, "v is not below w in right weak order");
  return report;
}

VerificationReport verify_boolean_poset(const CoxeterSystem& system,
                                        const GroupElement& w, ParabolicMask K) {
  const DescentSet descents = system.right_descents(w);
  if (!(K & descents).empty())
    throw PreconditionError("K=" + format_set(K) + " meets D_R(w)=" +
                            format_set(descents));
  VerificationReport report = make_report(
      statement::kBooleanPoset, "w=" + format_element(w) + "; K=" + format_set(K));

  const std::vector<ParabolicMask> index_sets = subsets_of(descents);
  std::vector<ReflectionSet> family;
  family.reserve(index_sets.size());
  for (ParabolicMask J : index_sets)
    family.push_back(left_inversions(system, quotient_projection(system, w, K | J)));

  // (a) all 2^n inversion sets are distinct
  std::map<ReflectionSet, ParabolicMask> seen;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto [it, inserted] = seen.emplace(family[i], index_sets[i]);
    if (!inserted) {
      fail(report, "J=" + format_set(it->second) + " and J=" +
                       format_set(index_sets[i]) + " give the same inversion set");
      return report;
    }
  }
  // (b) containment of inversion sets reverses containment of index sets
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = 0; b < family.size(); ++b) {
      const bool sets_included = is_subset(family[a], family[b]);
      const bool indices_reversed = index_sets[b].is_subset_of(index_sets[a]);
      if (sets_included != indices_reversed) {
        fail(report, "I=" + format_set(index_sets[a]) + ", J=" +
                         format_set(index_sets[b]) + ": inversion containment " +
                         (sets_included ? "holds" : "fails") +
                         " but J subset I " + (indices_reversed ? "holds" : "fails"));
        return report;
      }
    }
  }
  return report;
}

VerificationReport verify_minimal_union(const CoxeterSystem& system,
                                        const GroupElement& w) {
  VerificationReport report =
      make_report(statement::kMinimalUnion, "w=" + format_element(w));
  const std::vector<Generator> descents = system.right_descents(w).members();
  std::vector<ReflectionSet> quotient_sets;
  for (Generator s : descents)
    quotient_sets.push_back(left_inversions(system, maximal_projection(system, w, s)));

  for (std::size_t i = 0; i < descents.size(); ++i) {
    const GroupElement t = system.conjugate(w, system.generator(descents[i]));
    if (!quotient_sets[i].contains(t)) {
      fail(report, format_element(t) + " missing from T_L(P^(" +
                       generator_label(descents[i]) + ")(w))");
      return report;
    }
    for (std::size_t j = 0; j < descents.size(); ++j) {
      if (j != i && quotient_sets[j].contains(t)) {
        fail(report, format_element(t) + " also in T_L(P^(" +
                         generator_label(descents[j]) + ")(w))");
        return report;
      }
    }
  }
  return report;
}

VerificationReport verify_symmetric_difference(const CoxeterSystem& system,
                                               const GroupElement& x,
                                               const GroupElement& y) {
  VerificationReport report = make_report(
      statement::kSymmetricDifference,
      "x=" + format_element(x) + "; y=" + format_element(y));
  const ReflectionSet rhs =
      set_symmetric_difference(left_inversions(system, x),
                               conjugate_all(system, x, left_inversions(system, y)));
  check_equal(report, left_inversions(system, system.multiply(x, y)), "T_L(xy)",
              rhs, "T_L(x) + x T_L(y) x^-1");
  return report;
}

VerificationReport verify_quotient_right_inversions(const CoxeterSystem& system,
                                                    const GroupElement& v,
                                                    ParabolicMask J,
                                                    const ElementSet& parabolic) {
  VerificationReport report = make_report(
      statement::kQuotientRightInversions,
      "v=" + format_element(v) + "; J=" + format_set(J));
  const GroupElement q = quotient_projection(system, v, J);
  const ReflectionSet right = right_inversions(system, q);
  check_equal(report, right, "T_R(v^J)",
              conjugate_all(system, system.inverse(q), left_inversions(system, q)),
              "(v^J)^-1 T_L(v^J) v^J");
  if (!report.holds()) return report;
  for (const GroupElement& t : right) {
    if (parabolic.contains(t)) {
      fail(report, format_element(t) + " in T_R(v^J) and in W_J");
      break;
    }
  }
  return report;
}

VerificationReport verify_quotient_disjoint_union(const CoxeterSystem& system,
                                                  const GroupElement& v,
                                                  ParabolicMask J) {
  VerificationReport report = make_report(
      statement::kQuotientDisjointUnion,
      "v=" + format_element(v) + "; J=" + format_set(J));
  const ParabolicFactorization f = project(system, v, J);
  const ReflectionSet quotient_part = left_inversions(system, f.quotient_part);
  const ReflectionSet parabolic_part = conjugate_all(
      system, f.quotient_part, left_inversions(system, f.parabolic_part));
  check_disjoint(report, quotient_part, "T_L(v^J)", parabolic_part,
                 "v^J T_L(v_J) (v^J)^-1");
  check_equal(report, left_inversions(system, v), "T_L(v)",
              set_union(quotient_part, parabolic_part), "the disjoint union");
  return report;
}

VerificationReport verify_quotient_difference(const CoxeterSystem& system,
                                              const GroupElement& v, ParabolicMask J,
                                              const ElementSet& parabolic) {
  VerificationReport report = make_report(
      statement::kQuotientDifference,
      "v=" + format_element(v) + "; J=" + format_set(J));
  const ParabolicFactorization f = project(system, v, J);
  const ReflectionSet inversions = left_inversions(system, v);
  const GroupElement v_inverse = system.inverse(v);
  const GroupElement q_inverse = system.inverse(f.quotient_part);

  // Members of T_L(v) lying in v W_J v^-1 and in v^J W_J (v^J)^-1.
  ReflectionSet in_v_coset;
  ReflectionSet in_q_coset;
  for (const GroupElement& t : inversions) {
    if (parabolic.contains(system.conjugate(v_inverse, t))) in_v_coset.insert(t);
    if (parabolic.contains(system.conjugate(q_inverse, t))) in_q_coset.insert(t);
  }
  const ReflectionSet quotient_inversions = left_inversions(system, f.quotient_part);
  const ReflectionSet parabolic_conjugates = conjugate_all(
      system, f.quotient_part, left_inversions(system, f.parabolic_part));

  check_equal(report, quotient_inversions, "T_L(v^J)",
              set_difference(inversions, parabolic_conjugates),
              "T_L(v) \\ v^J T_L(v_J) (v^J)^-1");
  check_equal(report, quotient_inversions, "T_L(v^J)",
              set_difference(inversions, in_q_coset), "T_L(v) \\ v^J W_J (v^J)^-1");
  check_equal(report, quotient_inversions, "T_L(v^J)",
              set_difference(inversions, in_v_coset), "T_L(v) \\ v W_J v^-1");
  return report;
}

VerificationReport verify_conjugated_quotient(const CoxeterSystem& system,
                                              const GroupElement& u,
                                              const GroupElement& v, ParabolicMask J,
                                              const ElementSet& parabolic) {
  require_weak_leq(system, u, v, "u", "v");
  VerificationReport report = make_report(
      statement::kConjugatedQuotient, pair_instance(u, v) + "; J=" + format_set(J));
  const GroupElement w = left_quotient(system, u, v);
  const GroupElement v_inverse = system.inverse(v);

  const ReflectionSet lhs =
      conjugate_all(system, u, left_inversions(system, quotient_projection(system, w, J)));
  ReflectionSet middle;
  for (const GroupElement& t : conjugate_all(system, u, left_inversions(system, w)))
    if (!parabolic.contains(system.conjugate(v_inverse, t))) middle.insert(t);
  check_equal(report, lhs, "u T_L(w^J) u^-1", middle,
              "u T_L(w) u^-1 \\ v W_J v^-1");
  if (!report.holds()) return report;

  const ReflectionSet target =
      left_inversions(system, quotient_projection(system, v, J));
  for (const GroupElement& t : lhs) {
    if (!target.contains(t)) {
      fail(report, format_element(t) + " in u T_L(w^J) u^-1 but not in T_L(v^J)");
      break;
    }
  }
  return report;
}

}  // namespace coxeter

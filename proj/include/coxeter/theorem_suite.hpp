#ifndef COXETER_THEOREM_SUITE_HPP
#define COXETER_THEOREM_SUITE_HPP

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/descent_calculus.hpp"

namespace coxeter {

/*
  Executable checks of the descent-set identities for right weak order.
  Each verifier evaluates the identity for one instance from first
  principles (inversion sets, brute-force joins, root signs) and returns a
  report. Instances outside a verifier's hypotheses raise PreconditionError,
  except for verify_quotient_compatibility whose projection hypothesis is a
  filter and yields a Skipped report.

  Witnesses are chosen as the first offending item in canonical order, so
  reports are deterministic.
*/

/// Statement identifiers used in reports and on the command line.
namespace statement {
/// T_L(v) = T_L(u) u (union over J in E of T_L(v^J)) for any admissible E.
inline constexpr std::string_view kDescentUnion = "thm-2.1";
/// The same identity for the finest family E = {S \ {s} : s in D_R(u^-1 v)}.
inline constexpr std::string_view kFinestDescentUnion = "cor-2.2";
/// w is the weak-order join of its maximal-quotient projections.
inline constexpr std::string_view kJoinDecomposition = "cor-2.3";
/// T_L(w) is the union of quotient inversion sets along a reduced word.
inline constexpr std::string_view kReducedWordUnion = "cor-2.4";
/// Equal maximal projections above a common lower bound force v <=_R w.
inline constexpr std::string_view kQuotientCompatibility = "cor-2.5";
/// {T_L(w^{K u J}) : J subset D_R(w)} is a Boolean lattice.
inline constexpr std::string_view kBooleanPoset = "prop-2.6";
/// Each reflection w s w^-1 lies in exactly one maximal-quotient set.
inline constexpr std::string_view kMinimalUnion = "minimal-union";
/// T_L(xy) = T_L(x) symmetric-difference x T_L(y) x^-1.
inline constexpr std::string_view kSymmetricDifference = "eq0";
/// T_R(v^J) avoids W_J.
inline constexpr std::string_view kQuotientRightInversions = "eq1";
/// T_L(v) = T_L(v^J) disjoint-union v^J T_L(v_J) (v^J)^-1.
inline constexpr std::string_view kQuotientDisjointUnion = "eq2";
/// T_L(v^J) = T_L(v) \ v W_J v^-1.
inline constexpr std::string_view kQuotientDifference = "eq3";
/// u T_L(w^J) u^-1 = u T_L(w) u^-1 \ v W_J v^-1, contained in T_L(v^J).
inline constexpr std::string_view kConjugatedQuotient = "eq5";
}  // namespace statement

enum class Verdict { Holds, Fails, Skipped };

struct VerificationReport {
  std::string statement_id;
  /// The tested tuple, in element/mask text syntax.
  std::string instance;
  Verdict verdict = Verdict::Holds;
  /// Set iff verdict == Fails.
  std::string witness;
  /// Set iff verdict == Skipped; names the violated hypothesis.
  std::string skip_reason;

  bool holds() const { return verdict == Verdict::Holds; }
};

/// A materialized parabolic subgroup W_J.
using ElementSet = std::set<GroupElement>;

VerificationReport verify_theorem(const CoxeterSystem& system, const GroupElement& u,
                                  const GroupElement& v,
                                  std::span<const ParabolicMask> family);

VerificationReport verify_finest_corollary(const CoxeterSystem& system,
                                           const GroupElement& u,
                                           const GroupElement& v);

VerificationReport verify_join_decomposition(const CoxeterSystem& system,
                                             const GroupElement& w,
                                             std::span<const GroupElement> universe);

VerificationReport verify_reduced_word_union(const CoxeterSystem& system,
                                             const Word& word);

VerificationReport verify_quotient_compatibility(const CoxeterSystem& system,
                                                 const GroupElement& u,
                                                 const GroupElement& v,
                                                 const GroupElement& w);

VerificationReport verify_boolean_poset(const CoxeterSystem& system,
                                        const GroupElement& w, ParabolicMask K);

VerificationReport verify_minimal_union(const CoxeterSystem& system,
                                        const GroupElement& w);

VerificationReport verify_symmetric_difference(const CoxeterSystem& system,
                                               const GroupElement& x,
                                               const GroupElement& y);

/// Also checks T_R(v^J) = (v^J)^-1 T_L(v^J) v^J.
VerificationReport verify_quotient_right_inversions(const CoxeterSystem& system,
                                                    const GroupElement& v,
                                                    ParabolicMask J,
                                                    const ElementSet& parabolic);

VerificationReport verify_quotient_disjoint_union(const CoxeterSystem& system,
                                                  const GroupElement& v,
                                                  ParabolicMask J);

VerificationReport verify_quotient_difference(const CoxeterSystem& system,
                                              const GroupElement& v, ParabolicMask J,
                                              const ElementSet& parabolic);

VerificationReport verify_conjugated_quotient(const CoxeterSystem& system,
                                              const GroupElement& u,
                                              const GroupElement& v, ParabolicMask J,
                                              const ElementSet& parabolic);

// Formatting helpers shared with the sweep and CLI layers.
std::string format_family(std::span<const ParabolicMask> family);
std::string format_reflections(const ReflectionSet& set);

}  // namespace coxeter

#endif  // COXETER_THEOREM_SUITE_HPP

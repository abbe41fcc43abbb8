#ifndef COXETER_DESCENT_CALCULUS_HPP
#define COXETER_DESCENT_CALCULUS_HPP

#include <algorithm>
#include <iterator>
#include <set>
#include <span>
#include <vector>

#include "coxeter/element.hpp"

namespace coxeter {

/// A finite set of reflections, ordered ShortLex by normal form.
using ReflectionSet = std::set<GroupElement>;

/// w = quotient_part * parabolic_part with quotient_part in W^J,
/// parabolic_part in W_J and additive lengths.
struct ParabolicFactorization {
  GroupElement quotient_part;
  GroupElement parabolic_part;
};

/// Which eligible descent project() strips first. The factorization is
/// unique, so the choice only matters for testing that claim.
enum class DescentChoice { Smallest, Largest };

// ---------------------------------------------------------------------------
// Inversion sets
// ---------------------------------------------------------------------------

/// T_L(w) = {t in T : l(tw) < l(w)}, built from the prefix conjugates
/// s1...si...s1 of the normal form. Throws InternalError if two prefix
/// conjugates coincide.
ReflectionSet left_inversions(const CoxeterSystem& system, const GroupElement& w);

/// T_R(w) = T_L(w^-1).
ReflectionSet right_inversions(const CoxeterSystem& system, const GroupElement& w);

/// x * set * x^-1, elementwise.
ReflectionSet conjugate_all(const CoxeterSystem& system, const GroupElement& x,
                            const ReflectionSet& set);

/// t is a reflection iff t lies in its own right inversion set.
bool is_reflection(const CoxeterSystem& system, const GroupElement& t);

/// True iff every letter of the normal form lies in J, i.e. w in W_J.
bool in_parabolic(const GroupElement& w, ParabolicMask J);

// ---------------------------------------------------------------------------
// Parabolic projections
// ---------------------------------------------------------------------------

/// Strips right descents lying in J until none remain.
ParabolicFactorization project(const CoxeterSystem& system, const GroupElement& w,
                               ParabolicMask J,
                               DescentChoice choice = DescentChoice::Smallest);

/// P^J(w) = w^J.
GroupElement quotient_projection(const CoxeterSystem& system,
                                 const GroupElement& w, ParabolicMask J);

/// P^(s)(w) = w^{S \ {s}}.
GroupElement maximal_projection(const CoxeterSystem& system,
                                const GroupElement& w, Generator s);

// ---------------------------------------------------------------------------
// Orders
// ---------------------------------------------------------------------------

/// Right weak order via the prefix criterion l(u) + l(u^-1 v) = l(v).
bool weak_leq(const CoxeterSystem& system, const GroupElement& u,
              const GroupElement& v);

/// Right weak order via inversion-set containment T_L(u) subset T_L(v).
bool weak_leq_by_inversions(const CoxeterSystem& system, const GroupElement& u,
                            const GroupElement& v);

/// Bruhat order by descent recursion on v.
bool bruhat_leq(const CoxeterSystem& system, const GroupElement& u,
                const GroupElement& v);

/// Evaluates P^(s)(u) <= P^(s)(v) for every s in D_R(u).
bool deodhar_check(const CoxeterSystem& system, const GroupElement& u,
                   const GroupElement& v);

/// Least upper bound of `xs` in right weak order, searched by brute force
/// over `universe`. Throws NoUpperBound if no universe element bounds xs,
/// NoLeastUpperBound if the minimal bounds are not comparable.
GroupElement weak_join(const CoxeterSystem& system,
                       std::span<const GroupElement> xs,
                       std::span<const GroupElement> universe);

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

struct Enumeration {
  /// ShortLex ordered.
  std::vector<GroupElement> elements;
  /// True if some element at the cap still has a longer neighbour.
  bool truncated = false;
  int cap = 0;
};

/// Breadth-first closure of {e} under right multiplication by the
/// generators in `J` (all of S by default), up to length `cap`.
Enumeration enumerate(const CoxeterSystem& system, int cap);
Enumeration enumerate_parabolic(const CoxeterSystem& system, ParabolicMask J,
                                int cap);

// ---------------------------------------------------------------------------
// Set helpers
// ---------------------------------------------------------------------------

template <class T>
std::set<T> set_union(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

template <class T>
std::set<T> set_difference(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

template <class T>
std::set<T> set_intersection(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

template <class T>
std::set<T> set_symmetric_difference(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.end()));
  return out;
}

template <class T>
bool is_subset(const std::set<T>& a, const std::set<T>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace coxeter

#endif  // COXETER_DESCENT_CALCULUS_HPP

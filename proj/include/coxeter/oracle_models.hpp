#ifndef COXETER_ORACLE_MODELS_HPP
#define COXETER_ORACLE_MODELS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "coxeter/element.hpp"

namespace coxeter {

// Combinatorial models of types A and B, independent of the root-sign
// machinery.
//
// Conventions (generator -> action by right multiplication on one-line
// notation, positions 1-based):
//   A_n  on n+1 letters: s_i swaps positions i+1 and i+2.
//   B_n  signed, n letters: s0 negates position 1; s_i (i >= 1) swaps
//        positions i and i+1.
// So the B_n chain s1 - s2 - ... sits after the sign generator s0, on the
// 4-bond (s0, s1), matching the catalog labelling.

/// One-line notation (w(1), ..., w(n)) of a bijection of {1..n}.
struct Permutation {
  std::vector<int> images;
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// (w(1), ..., w(n)) with w(-i) = -w(i); |images| is a permutation of 1..n.
struct SignedPermutation {
  std::vector<int> images;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

using OracleImage = std::variant<Permutation, SignedPermutation>;

// -- type A ---------------------------------------------------------------
Permutation identity_permutation(int letters);
/// Inversion count #{i < j : p(i) > p(j)}.
std::size_t oracle_length(const Permutation& p);
/// {s_i : p(i+1) > p(i+2)}.
DescentSet oracle_descents(const Permutation& p);
/// (a b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// Tableau criterion: p <= q iff #{j <= i : p(j) >= k} <= same for q.
bool oracle_bruhat_leq(const Permutation& p, const Permutation& q);
/// All transpositions.
std::vector<Permutation> oracle_reflections(int letters);

// -- type B ---------------------------------------------------------------
SignedPermutation identity_signed(int n);
/// inv(w) - sum of the negative entries.
std::size_t oracle_length(const SignedPermutation& p);
/// s0 iff p(1) < 0; s_i iff p(i) > p(i+1).
DescentSet oracle_descents(const SignedPermutation& p);
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation inverse(const SignedPermutation& p);
/// u <= v iff u[i,j] <= v[i,j] for all i, j in [+-n], where
/// v[i,j] = #{a in [+-n] : a <= i, v(a) >= j}.
bool oracle_bruhat_leq(const SignedPermutation& p, const SignedPermutation& q);
/// The n^2 reflections of B_n.
std::vector<SignedPermutation> oracle_reflections_signed(int n);

// -- dispatch over catalog types -------------------------------------------

/// Throws UnsupportedType unless `type` is A_n or B_n.
void require_oracle_type(const NamedType& type);

/// Evaluates the word through the generator assignment above.
OracleImage oracle_map_word(const NamedType& type, std::span<const Generator> word);
OracleImage oracle_map(const NamedType& type, const GroupElement& w);

std::size_t oracle_length(const OracleImage& p);
DescentSet oracle_descents(const OracleImage& p);
OracleImage compose(const OracleImage& a, const OracleImage& b);
OracleImage inverse(const OracleImage& p);
bool oracle_bruhat_leq(const OracleImage& p, const OracleImage& q);
/// All reflections of the model of `type`.
std::vector<OracleImage> oracle_reflections(const NamedType& type);
std::string to_string(const OracleImage& p);

// -- transport check --------------------------------------------------------

struct OracleCheckOptions {
  /// nullopt: every element and every pair. Otherwise this many random
  /// elements and this many random pairs.
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  int cap = 40;
};

struct OracleCheckResult {
  std::size_t elements_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::string> disagreements;

  bool passed() const { return disagreements.empty(); }
};

/// Compares length, D_R, D_L, T_R, inverses, products and Bruhat order
/// between the engine and the oracle model of `type`. In exhaustive mode
/// also checks that the oracle map is a bijection onto the model.
OracleCheckResult run_oracle_check(const CoxeterSystem& system, const NamedType& type,
                                   const OracleCheckOptions& options);

}  // namespace coxeter

#endif  // COXETER_ORACLE_MODELS_HPP

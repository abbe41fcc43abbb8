#ifndef COXETER_COXETER_MATRIX_HPP
#define COXETER_COXETER_MATRIX_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace coxeter {

/// Index of a simple generator, dense in [0, rank).
using Generator = int;

/// Largest supported rank; generator subsets are stored as a 32-bit mask.
inline constexpr int kMaxRank = 32;

/// Display label of a generator: "s0", "s1", ...
std::string generator_label(Generator s);

/*
  A subset of the simple generators. Used both for parabolic masks J
  (quotients W^J, projections P^J) and for descent sets.
*/
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr GeneratorSet(std::initializer_list<Generator> members) {
    for (Generator s : members) insert(s);
  }

  static constexpr GeneratorSet from_bits(std::uint32_t bits) {
    GeneratorSet set;
    set.bits_ = bits;
    return set;
  }
  static constexpr GeneratorSet full(int rank) {
    return from_bits(rank >= 32 ? ~std::uint32_t{0}
                                : (std::uint32_t{1} << rank) - 1);
  }

  constexpr bool contains(Generator s) const { return (bits_ >> s) & 1u; }
  constexpr void insert(Generator s) { bits_ |= std::uint32_t{1} << s; }
  constexpr void erase(Generator s) { bits_ &= ~(std::uint32_t{1} << s); }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr GeneratorSet complement(int rank) const {
    return from_bits(full(rank).bits_ & ~bits_);
  }
  constexpr bool is_subset_of(GeneratorSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  /// Members in increasing index order.
  std::vector<Generator> members() const;

  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr GeneratorSet operator-(GeneratorSet a, GeneratorSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

using ParabolicMask = GeneratorSet;
using DescentSet = GeneratorSet;

/// All subsets of `set`, in increasing order of their bit patterns.
std::vector<GeneratorSet> subsets_of(GeneratorSet set);

/// An entry m(s,t) of a Coxeter matrix: a positive integer or infinity.
class Bond {
 public:
  constexpr Bond() = default;
  static constexpr Bond finite(int order) { return Bond(order, false); }
  static constexpr Bond infinity() { return Bond(0, true); }

  constexpr bool is_infinite() const { return infinite_; }
  /// The integer order; meaningless (0) for an infinite bond.
  constexpr int order() const { return order_; }

  friend constexpr bool operator==(Bond, Bond) = default;

 private:
  constexpr Bond(int order, bool infinite) : order_(order), infinite_(infinite) {}
  int order_ = 2;
  bool infinite_ = false;
};

std::string to_string(Bond bond);

/*
  Symmetric bond matrix of a Coxeter system (W,S). Instances only come out
  of validate(), so every CoxeterMatrix satisfies:
    - m(s,t) = m(t,s)
    - m(s,t) = 1 iff s = t
    - off-diagonal entries are >= 2 or infinite
*/
class CoxeterMatrix {
 public:
  struct BondEntry {
    Generator s;
    Generator t;
    Bond bond;
  };

  /// Checks a row-major rank x rank candidate and throws
  /// InvalidCoxeterMatrix naming the first violated axiom in scan order.
  static CoxeterMatrix validate(int rank, std::vector<Bond> entries);

  /// Builds from the listed pairs; unlisted off-diagonal pairs are 2.
  static CoxeterMatrix from_bonds(int rank, const std::vector<BondEntry>& bonds);

  int rank() const { return rank_; }
  Bond bond(Generator s, Generator t) const { return entries_[s * rank_ + t]; }
  bool has_infinite_bond() const;

  /// Pairs s < t whose bond differs from 2, row-major.
  std::vector<BondEntry> nontrivial_bonds() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  CoxeterMatrix(int rank, std::vector<Bond> entries)
      : rank_(rank), entries_(std::move(entries)) {}

  int rank_ = 0;
  std::vector<Bond> entries_;
};

/// Symmetric form (alpha_s | alpha_t) = -cos(pi / m(s,t)) on the span of
/// the simple roots; infinite bonds give -1.
class BilinearForm {
 public:
  explicit BilinearForm(const CoxeterMatrix& matrix);

  int rank() const { return rank_; }
  double operator()(Generator s, Generator t) const {
    return entries_[s * rank_ + t];
  }
  /// (u | v) for coordinate vectors over the simple roots.
  double pair(const std::vector<double>& u, const std::vector<double>& v) const;

 private:
  int rank_;
  std::vector<double> entries_;
};

inline BilinearForm bilinear_form(const CoxeterMatrix& matrix) {
  return BilinearForm(matrix);
}

// ---------------------------------------------------------------------------
// Catalog of standard types.
//
// Labelling:
//   A_n   chain s0 - s1 - ... - s(n-1)
//   B_n   s0 =4= s1 - s2 - ... - s(n-1)
//   D_n   s0 and s1 both attached to s2, chain s2 - ... - s(n-1)
//   I2(m) s0 =m= s1
//   H3/H4 s0 =5= s1 - s2 (- s3)
//   F4    s0 - s1 =4= s2 - s3
//   E6    chain s0 - s2 - s3 - s4 - s5 with s1 attached to s3
// ---------------------------------------------------------------------------

enum class Family { A, B, D, I2, H, F, E };

struct NamedType {
  Family family = Family::A;
  /// Rank for A/B/D/H/F/E; ignored for I2.
  int index = 1;
  /// Dihedral bond for I2.
  Bond dihedral = Bond::finite(3);

  friend bool operator==(const NamedType&, const NamedType&) = default;
};

/// Accepts "A3", "A_3", "B4", "D5", "I2(5)", "I2(inf)", "H3", "H4", "F4",
/// "E6". Throws InvalidArgument for unknown names or parameters.
NamedType parse_named_type(std::string_view name);

/// Canonical spelling, e.g. "B4" or "I2(inf)".
std::string to_string(const NamedType& type);

CoxeterMatrix from_named_type(const NamedType& type);
CoxeterMatrix from_named_type(std::string_view name);

}  // namespace coxeter

#endif  // COXETER_COXETER_MATRIX_HPP

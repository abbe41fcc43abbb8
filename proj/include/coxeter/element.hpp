#ifndef COXETER_ELEMENT_HPP
#define COXETER_ELEMENT_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "coxeter/coxeter_matrix.hpp"
#include "coxeter/root_geometry.hpp"

namespace coxeter {

/// A finite sequence of generators, not necessarily reduced.
using Word = std::vector<Generator>;

/*
  An element of W, stored as its ShortLex-minimal reduced word. Two
  elements are equal iff their normal forms are identical sequences.
  Only CoxeterSystem produces non-identity elements, so the normal form
  is always canonical for the system that made it.

  Ordering is ShortLex on normal forms (length first, then lexicographic).
*/
class GroupElement {
 public:
  GroupElement() = default;

  const Word& word() const { return nf_; }
  std::size_t length() const { return nf_.size(); }
  bool is_identity() const { return nf_.empty(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement& a,
                                          const GroupElement& b) {
    if (auto c = a.nf_.size() <=> b.nf_.size(); c != 0) return c;
    return a.nf_ <=> b.nf_;
  }

 private:
  friend class CoxeterSystem;
  explicit GroupElement(Word nf) : nf_(std::move(nf)) {}

  Word nf_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& w) const noexcept;
};

inline constexpr int kDefaultLengthCap = 60;

/*
  A Coxeter system together with its geometric representation. All
  element arithmetic goes through here; every descent decision is a root
  sign test, so the ambient form is required.

  Immutable after construction.
*/
class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterMatrix matrix, int length_cap = kDefaultLengthCap);

  const CoxeterMatrix& matrix() const { return matrix_; }
  const BilinearForm& form() const { return form_; }
  int rank() const { return matrix_.rank(); }
  GeneratorSet generators() const { return GeneratorSet::full(rank()); }

  /// Normal forms longer than this raise CapExceeded.
  int length_cap() const { return length_cap_; }
  CoxeterSystem with_length_cap(int cap) const;

  GroupElement identity() const { return GroupElement(); }
  GroupElement generator(Generator s) const;

  /// Greedy ShortLex normal form: repeatedly strip the smallest left
  /// descent. Accepts any word, reduced or not.
  GroupElement normalize(std::span<const Generator> word) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  /// w * s
  GroupElement multiply(const GroupElement& w, Generator s) const;
  /// s * w
  GroupElement multiply(Generator s, const GroupElement& w) const;
  GroupElement inverse(const GroupElement& w) const;
  /// x * y * x^-1
  GroupElement conjugate(const GroupElement& x, const GroupElement& y) const;

  bool is_right_descent(const GroupElement& w, Generator s) const;
  bool is_left_descent(const GroupElement& w, Generator s) const;
  DescentSet right_descents(const GroupElement& w) const;
  DescentSet left_descents(const GroupElement& w) const;

  /// Throws InvalidArgument unless every letter lies in [0, rank).
  void check_word(std::span<const Generator> word) const;

 private:
  CoxeterMatrix matrix_;
  BilinearForm form_;
  int length_cap_;
};

inline std::size_t length(const GroupElement& w) { return w.length(); }

}  // namespace coxeter

#endif  // COXETER_ELEMENT_HPP

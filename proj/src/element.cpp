#include "coxeter/element.hpp"

#include <algorithm>

#include "coxeter/errors.hpp"

namespace coxeter {

std::size_t GroupElementHash::operator()(const GroupElement& w) const noexcept {
  std::size_t h = w.length();
  for (Generator s : w.word())
    h ^= static_cast<std::size_t>(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, int length_cap)
    : matrix_(std::move(matrix)), form_(matrix_), length_cap_(length_cap) {
  if (length_cap < 0) throw InvalidArgument("length cap must be non-negative");
}

CoxeterSystem CoxeterSystem::with_length_cap(int cap) const {
  return CoxeterSystem(matrix_, cap);
}

void CoxeterSystem::check_word(std::span<const Generator> word) const {
  for (Generator s : word)
    if (s < 0 || s >= rank())
      throw InvalidArgument("generator " + generator_label(s) +
                            " outside rank " + std::to_string(rank()));
}

GroupElement CoxeterSystem::generator(Generator s) const {
  check_word(std::span<const Generator>(&s, 1));
  return GroupElement(Word{s});
}

namespace {

// Matrix of sigma_x in the simple-root basis, stored column-major so that
// column t, the vector x(alpha_t), is contiguous.
class ActionMatrix {
 public:
  explicit ActionMatrix(const BilinearForm& form)
      : form_(form),
        n_(form.rank()),
        m_(static_cast<std::size_t>(n_) * n_, 0.0),
        delta_(n_) {
    for (int i = 0; i < n_; ++i) at(i, i) = 1.0;
  }

  // sigma <- sigma_s * sigma: only row s changes.
  void left_multiply(Generator s) {
    std::fill(delta_.begin(), delta_.end(), 0.0);
    for (int t = 0; t < n_; ++t) {
      const double b = form_(s, t);
      if (b == 0.0) continue;
      for (int j = 0; j < n_; ++j) delta_[j] += b * at(t, j);
    }
    for (int j = 0; j < n_; ++j) at(s, j) -= 2.0 * delta_[j];
  }

  // sigma <- sigma * sigma_s: column t gains -2 (alpha_s|alpha_t) column s.
  void right_multiply(Generator s) {
    for (int i = 0; i < n_; ++i) {
      const double x = at(i, s);
      for (int t = 0; t < n_; ++t) {
        const double b = form_(s, t);
        if (b != 0.0) at(i, t) -= 2.0 * b * x;
      }
    }
  }

  SignClass column_sign(Generator t) const {
    return sign_of(std::span<const double>(m_.data() + static_cast<std::size_t>(t) * n_, n_));
  }

 private:
  double& at(int i, int j) { return m_[static_cast<std::size_t>(j) * n_ + i]; }

  const BilinearForm& form_;
  int n_;
  std::vector<double> m_;
  std::vector<double> delta_;
};

}  // namespace

GroupElement CoxeterSystem::normalize(std::span<const Generator> word) const {
  check_word(word);

  // Track sigma of w^-1; its column s is w^-1(alpha_s), which is negative
  // iff s is a left descent of w.
  ActionMatrix inv(form_);
  for (Generator s : word) inv.left_multiply(s);

  Word nf;
  for (;;) {
    Generator first_descent = -1;
    for (Generator s = 0; s < rank(); ++s) {
      // Every column is classified so numerical breakdown is never masked.
      if (inv.column_sign(s) == SignClass::Negative && first_descent < 0)
        first_descent = s;
    }
    if (first_descent < 0) break;
    nf.push_back(first_descent);
    if (nf.size() > word.size())
      throw InternalError("normal form longer than its input word");
    if (static_cast<int>(nf.size()) > length_cap_)
      throw CapExceeded("normal form exceeds length cap " +
                        std::to_string(length_cap_));
    inv.right_multiply(first_descent);  // w <- s w, so w^-1 <- w^-1 s
  }
  return GroupElement(std::move(nf));
}

GroupElement CoxeterSystem::multiply(const GroupElement& a,
                                     const GroupElement& b) const {
  Word word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  return normalize(word);
}

GroupElement CoxeterSystem::multiply(const GroupElement& w, Generator s) const {
  Word word = w.word();
  word.push_back(s);
  return normalize(word);
}

GroupElement CoxeterSystem::multiply(Generator s, const GroupElement& w) const {
  Word word{s};
  word.insert(word.end(), w.word().begin(), w.word().end());
  return normalize(word);
}

GroupElement CoxeterSystem::inverse(const GroupElement& w) const {
  Word word(w.word().rbegin(), w.word().rend());
  return normalize(word);
}

GroupElement CoxeterSystem::conjugate(const GroupElement& x,
                                      const GroupElement& y) const {
  Word word = x.word();
  word.insert(word.end(), y.word().begin(), y.word().end());
  word.insert(word.end(), x.word().rbegin(), x.word().rend());
  return normalize(word);
}

bool CoxeterSystem::is_right_descent(const GroupElement& w, Generator s) const {
  check_word(std::span<const Generator>(&s, 1));
  return sign_of(act(w.word(), simple_root(rank(), s), form_)) ==
         SignClass::Negative;
}

bool CoxeterSystem::is_left_descent(const GroupElement& w, Generator s) const {
  check_word(std::span<const Generator>(&s, 1));
  const Word reversed(w.word().rbegin(), w.word().rend());
  return sign_of(act(reversed, simple_root(rank(), s), form_)) ==
         SignClass::Negative;
}

DescentSet CoxeterSystem::right_descents(const GroupElement& w) const {
  DescentSet out;
  for (Generator s = 0; s < rank(); ++s)
    if (is_right_descent(w, s)) out.insert(s);
  return out;
}

DescentSet CoxeterSystem::left_descents(const GroupElement& w) const {
  DescentSet out;
  for (Generator s = 0; s < rank(); ++s)
    if (is_left_descent(w, s)) out.insert(s);
  return out;
}

}  // namespace coxeter

#include "coxeter/descent_calculus.hpp"

#include <algorithm>

#include "coxeter/errors.hpp"
#include "coxeter/notation.hpp"

namespace coxeter {

ReflectionSet left_inversions(const CoxeterSystem& system, const GroupElement& w) {
  const Word& nf = w.word();
  ReflectionSet out;
  Word conjugate;
  for (std::size_t i = 0; i < nf.size(); ++i) {
    // s1 ... s(i-1) si s(i-1) ... s1
    conjugate.assign(nf.begin(), nf.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    conjugate.insert(conjugate.end(), nf.rbegin() + static_cast<std::ptrdiff_t>(nf.size() - i),
                     nf.rend());
    if (!out.insert(system.normalize(conjugate)).second)
      throw InternalError("prefix conjugates of " + format_element(w) +
                          " are not distinct");
  }
  return out;
}

ReflectionSet right_inversions(const CoxeterSystem& system, const GroupElement& w) {
  return left_inversions(system, system.inverse(w));
}

ReflectionSet conjugate_all(const CoxeterSystem& system, const GroupElement& x,
                            const ReflectionSet& set) {
  ReflectionSet out;
  for (const GroupElement& t : set) out.insert(system.conjugate(x, t));
  return out;
}

bool is_reflection(const CoxeterSystem& system, const GroupElement& t) {
  if (t.length() % 2 == 0) return false;
  return right_inversions(system, t).contains(t);
}

bool in_parabolic(const GroupElement& w, ParabolicMask J) {
  return std::all_of(w.word().begin(), w.word().end(),
                     [J](Generator s) { return J.contains(s); });
}

ParabolicFactorization project(const CoxeterSystem& system, const GroupElement& w,
                               ParabolicMask J, DescentChoice choice) {
  std::vector<Generator> order = J.members();
  if (choice == DescentChoice::Largest) std::reverse(order.begin(), order.end());

  GroupElement current = w;
  for (;;) {
    auto it = std::find_if(order.begin(), order.end(), [&](Generator s) {
      return system.is_right_descent(current, s);
    });
    if (it == order.end()) break;
    current = system.multiply(current, *it);
  }
  GroupElement parabolic = system.multiply(system.inverse(current), w);
  return {std::move(current), std::move(parabolic)};
}

GroupElement quotient_projection(const CoxeterSystem& system,
                                 const GroupElement& w, ParabolicMask J) {
  return project(system, w, J).quotient_part;
}

GroupElement maximal_projection(const CoxeterSystem& system,
                                const GroupElement& w, Generator s) {
  ParabolicMask J = system.generators();
  J.erase(s);
  return quotient_projection(system, w, J);
}

bool weak_leq(const CoxeterSystem& system, const GroupElement& u,
              const GroupElement& v) {
  if (u.length() > v.length()) return false;
  Word word(u.word().rbegin(), u.word().rend());
  word.insert(word.end(), v.word().begin(), v.word().end());
  return u.length() + system.normalize(word).length() == v.length();
}

bool weak_leq_by_inversions(const CoxeterSystem& system, const GroupElement& u,
                            const GroupElement& v) {
  return is_subset(left_inversions(system, u), left_inversions(system, v));
}

bool bruhat_leq(const CoxeterSystem& system, const GroupElement& u,
                const GroupElement& v) {
  GroupElement x = u;
  GroupElement y = v;
  for (;;) {
    if (y.is_identity()) return x.is_identity();
    if (x.length() > y.length()) return false;
    // The last letter of a reduced word is a right descent.
    const Generator s = y.word().back();
    if (system.is_right_descent(x, s)) x = system.multiply(x, s);
    y = system.multiply(y, s);
  }
}

bool deodhar_check(const CoxeterSystem& system, const GroupElement& u,
                   const GroupElement& v) {
  for (Generator s : system.right_descents(u).members()) {
    if (!bruhat_leq(system, maximal_projection(system, u, s),
                    maximal_projection(system, v, s)))
      return false;
  }
  return true;
}

GroupElement weak_join(const CoxeterSystem& system,
                       std::span<const GroupElement> xs,
                       std::span<const GroupElement> universe) {
  std::vector<const GroupElement*> bounds;
  for (const GroupElement& z : universe) {
    const bool bounds_all = std::all_of(xs.begin(), xs.end(), [&](const GroupElement& x) {
      return weak_leq(system, x, z);
    });
    if (bounds_all) bounds.push_back(&z);
  }
  if (bounds.empty()) throw NoUpperBound("no upper bound inside the universe");

  const GroupElement* least = *std::min_element(
      bounds.begin(), bounds.end(),
      [](const GroupElement* a, const GroupElement* b) { return *a < *b; });
  for (const GroupElement* z : bounds) {
    if (!weak_leq(system, *least, *z))
      throw NoLeastUpperBound("minimal upper bounds " + format_element(*least) +
                              " and " + format_element(*z) + " are incomparable");
  }
  return *least;
}

Enumeration enumerate_parabolic(const CoxeterSystem& system, ParabolicMask J,
                                int cap) {
  if (cap < 0) throw InvalidArgument("enumeration cap must be non-negative");
  const CoxeterSystem local =
      system.with_length_cap(std::max(cap, system.length_cap()));
  const std::vector<Generator> gens = (J & system.generators()).members();

  Enumeration result;
  result.cap = cap;
  std::set<GroupElement> layer{local.identity()};
  for (int len = 0;; ++len) {
    result.elements.insert(result.elements.end(), layer.begin(), layer.end());
    std::set<GroupElement> next;
    for (const GroupElement& x : layer) {
      for (Generator s : gens) {
        if (local.is_right_descent(x, s)) continue;
        if (len == cap) {
          result.truncated = true;
          break;
        }
        next.insert(local.multiply(x, s));
      }
      if (result.truncated) break;
    }
    if (next.empty()) break;
    layer = std::move(next);
  }
  return result;
}

Enumeration enumerate(const CoxeterSystem& system, int cap) {
  return enumerate_parabolic(system, system.generators(), cap);
}

}  // namespace coxeter

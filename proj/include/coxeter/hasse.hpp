#ifndef COXETER_HASSE_HPP
#define COXETER_HASSE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coxeter/descent_calculus.hpp"

namespace coxeter {

enum class OrderKind { Weak, Bruhat };

/// Covering pairs (lower, upper) as indices into `universe.elements`,
/// sorted. Weak: upper = lower * s with l(upper) = l(lower) + 1. Bruhat:
/// lower^-1 upper is a reflection and the lengths differ by one.
std::vector<std::pair<std::size_t, std::size_t>> covering_relations(
    const CoxeterSystem& system, const Enumeration& universe, OrderKind order);

/// DOT digraph of the covering relations, edges pointing upward, nodes in
/// universe order labelled by normal form. A truncated ball is flagged in
/// the graph label.
std::string hasse_dot(const CoxeterSystem& system, const Enumeration& universe,
                      OrderKind order);

}  // namespace coxeter

#endif  // COXETER_HASSE_HPP

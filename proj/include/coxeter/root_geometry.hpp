#ifndef COXETER_ROOT_GEOMETRY_HPP
#define COXETER_ROOT_GEOMETRY_HPP

#include <span>
#include <vector>

#include "coxeter/coxeter_matrix.hpp"

namespace coxeter {

/// Tolerance below which a root coordinate counts as zero.
inline constexpr double kSignTolerance = 1e-7;

/// Coefficients of a vector over the simple roots {alpha_s}.
struct RootVector {
  std::vector<double> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  friend bool operator==(const RootVector&, const RootVector&) = default;
};

enum class SignClass { Positive, Negative };

RootVector simple_root(int rank, Generator s);

/// sigma_s(v) = v - 2 (alpha_s | v) alpha_s
RootVector reflect(Generator s, const RootVector& v, const BilinearForm& form);

/// Left action of a word s1 s2 ... sk: sigma_s1(sigma_s2(...sigma_sk(v))).
/// With this convention w(alpha_s) is negative iff s is a right descent of w.
RootVector act(std::span<const Generator> word, const RootVector& v,
               const BilinearForm& form);

/// Classifies a vector of the root orbit by its largest-magnitude
/// coordinate. Throws DegenerateSign when every coordinate is within
/// `tolerance` of zero, or when coordinates of both signs exceed it.
SignClass sign_of(const RootVector& v, double tolerance = kSignTolerance);
SignClass sign_of(std::span<const double> coords,
                  double tolerance = kSignTolerance);

}  // namespace coxeter

#endif  // COXETER_ROOT_GEOMETRY_HPP

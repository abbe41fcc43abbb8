#include "coxeter/root_geometry.hpp"

#include <cmath>
#include <sstream>

#include "coxeter/errors.hpp"

namespace coxeter {

RootVector simple_root(int rank, Generator s) {
  if (s < 0 || s >= rank)
    throw InvalidArgument("generator " + generator_label(s) + " outside rank " +
                          std::to_string(rank));
  RootVector v{std::vector<double>(rank, 0.0)};
  v.coords[s] = 1.0;
  return v;
}

RootVector reflect(Generator s, const RootVector& v, const BilinearForm& form) {
  RootVector out = v;
  double dot = 0.0;
  for (int t = 0; t < form.rank(); ++t) dot += form(s, t) * v.coords[t];
  out.coords[s] -= 2.0 * dot;
  return out;
}

RootVector act(std::span<const Generator> word, const RootVector& v,
               const BilinearForm& form) {
  RootVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect(*it, out, form);
  return out;
}

SignClass sign_of(const RootVector& v, double tolerance) {
  return sign_of(std::span<const double>(v.coords), tolerance);
}

SignClass sign_of(std::span<const double> coords, double tolerance) {
  double largest = 0.0;
  bool has_positive = false;
  bool has_negative = false;
  for (double c : coords) {
    if (std::abs(c) > std::abs(largest)) largest = c;
    if (c > tolerance) has_positive = true;
    if (c < -tolerance) has_negative = true;
  }
  if (!(std::abs(largest) > tolerance) || (has_positive && has_negative)) {
    std::ostringstream msg;
    msg << "cannot classify root vector (";
    for (std::size_t i = 0; i < coords.size(); ++i)
      msg << (i ? ", " : "") << coords[i];
    msg << ") with tolerance " << tolerance;
    throw DegenerateSign(msg.str());
  }
  return largest > 0 ? SignClass::Positive : SignClass::Negative;
}

}  // namespace coxeter

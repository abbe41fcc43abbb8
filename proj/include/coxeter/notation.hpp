#ifndef COXETER_NOTATION_HPP
#define COXETER_NOTATION_HPP

#include <string>
#include <string_view>

#include "coxeter/element.hpp"

namespace coxeter {

// Text syntax shared by the CLI and every report.
//
//   words:  generator labels separated by whitespace or '.', e.g.
//           "s2 s3 s2" or "s2.s3.s2"; "e" (or the empty string) is the
//           identity.
//   masks:  comma-separated labels "s0,s1"; a leading '~' takes the
//           complement in S, so "~s3" is S \ {s3} and "~" is S.

/// Throws ParseError (with character offset) on bad syntax and on labels
/// outside [0, rank).
Word parse_word(std::string_view text, int rank);
GroupElement parse_element(const CoxeterSystem& system, std::string_view text);
ParabolicMask parse_mask(std::string_view text, int rank);

/// "s2 s3 s2"; the empty word prints as "e".
std::string format_word(const Word& word);
std::string format_element(const GroupElement& w);
/// "{s0,s2}"; the empty set prints as "{}".
std::string format_set(GeneratorSet set);

}  // namespace coxeter

#endif  // COXETER_NOTATION_HPP

#include "coxeter/notation.hpp"

#include <cctype>

#include "coxeter/errors.hpp"

namespace coxeter {

namespace {

bool is_separator(char c) {
  return c == '.' || std::isspace(static_cast<unsigned char>(c));
}

// Parses "s<digits>" starting at text[pos]; advances pos past it.
Generator parse_label(std::string_view text, std::size_t& pos, int rank) {
  const std::size_t start = pos;
  if (pos >= text.size() || text[pos] != 's')
    throw ParseError("expected a generator label like 's0'", start);
  ++pos;
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw ParseError("expected digits after 's'", pos);
  long value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    if (value <= kMaxRank) value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  if (value >= rank)
    throw ParseError("generator s" + std::to_string(value) + " outside rank " +
                         std::to_string(rank),
                     start);
  return static_cast<Generator>(value);
}

}  // namespace

Word parse_word(std::string_view text, int rank) {
  Word word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_separator(text[pos])) {
      ++pos;
      continue;
    }
    if (text[pos] == 'e' &&
        (pos + 1 == text.size() || is_separator(text[pos + 1]))) {
      ++pos;
      continue;
    }
    word.push_back(parse_label(text, pos, rank));
    if (pos < text.size() && !is_separator(text[pos]))
      throw ParseError("generator labels must be separated by whitespace or '.'",
                       pos);
  }
  return word;
}

GroupElement parse_element(const CoxeterSystem& system, std::string_view text) {
  return system.normalize(parse_word(text, system.rank()));
}

ParabolicMask parse_mask(std::string_view text, int rank) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_space();
  bool complement = false;
  if (pos < text.size() && text[pos] == '~') {
    complement = true;
    ++pos;
  }
  ParabolicMask mask;
  skip_space();
  bool expect_label = false;
  while (pos < text.size()) {
    mask.insert(parse_label(text, pos, rank));
    skip_space();
    expect_label = false;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' between mask labels", pos);
    ++pos;
    expect_label = true;
    skip_space();
  }
  if (expect_label) throw ParseError("trailing ',' in mask", text.size());
  return complement ? mask.complement(rank) : mask;
}

std::string format_word(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += generator_label(word[i]);
  }
  return out;
}

std::string format_element(const GroupElement& w) { return format_word(w.word()); }

std::string format_set(GeneratorSet set) {
  std::string out = "{";
  bool first = true;
  for (Generator s : set.members()) {
    if (!first) out += ',';
    out += generator_label(s);
    first = false;
  }
  return out + "}";
}

}  // namespace coxeter

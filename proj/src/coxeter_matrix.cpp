#include "coxeter/coxeter_matrix.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "coxeter/errors.hpp"

namespace coxeter {

std::string generator_label(Generator s) { return "s" + std::to_string(s); }

std::vector<Generator> GeneratorSet::members() const {
  std::vector<Generator> out;
  for (std::uint32_t bits = bits_; bits != 0; bits &= bits - 1)
    out.push_back(std::countr_zero(bits));
  return out;
}

std::vector<GeneratorSet> subsets_of(GeneratorSet set) {
  // Walk the submasks of `set` upward: next = (current - set) & set.
  std::vector<GeneratorSet> out;
  const std::uint32_t mask = set.bits();
  std::uint32_t sub = 0;
  do {
    out.push_back(GeneratorSet::from_bits(sub));
    sub = (sub - mask) & mask;
  } while (sub != 0);
  return out;
}

std::string to_string(Bond bond) {
  return bond.is_infinite() ? "inf" : std::to_string(bond.order());
}

namespace {

std::string pair_text(int s, int t) {
  return "(" + generator_label(s) + "," + generator_label(t) + ")";
}

}  // namespace

CoxeterMatrix CoxeterMatrix::validate(int rank, std::vector<Bond> entries) {
  if (rank < 1 || rank > kMaxRank)
    throw InvalidArgument("rank must lie in [1, " + std::to_string(kMaxRank) +
                          "], got " + std::to_string(rank));
  if (entries.size() != static_cast<std::size_t>(rank) * rank)
    throw InvalidArgument("bond matrix must have rank*rank entries");

  for (int s = 0; s < rank; ++s) {
    for (int t = 0; t < rank; ++t) {
      const Bond m = entries[s * rank + t];
      if (s == t) {
        if (m.is_infinite() || m.order() != 1)
          throw InvalidCoxeterMatrix(
              "diagonal entry must be 1 at " + pair_text(s, t), s, t);
        continue;
      }
      if (!m.is_infinite() && m.order() == 1)
        throw InvalidCoxeterMatrix(
            "diagonal-only ones violated at " + pair_text(s, t), s, t);
      if (!m.is_infinite() && m.order() < 2)
        throw InvalidCoxeterMatrix(
            "off-diagonal bond below 2 at " + pair_text(s, t), s, t);
      if (m != entries[t * rank + s])
        throw InvalidCoxeterMatrix("asymmetric bond at " + pair_text(s, t), s, t);
    }
  }
  return CoxeterMatrix(rank, std::move(entries));
}

CoxeterMatrix CoxeterMatrix::from_bonds(int rank,
                                        const std::vector<BondEntry>& bonds) {
  if (rank < 1 || rank > kMaxRank)
    throw InvalidArgument("rank must lie in [1, " + std::to_string(kMaxRank) +
                          "], got " + std::to_string(rank));
  std::vector<Bond> entries(static_cast<std::size_t>(rank) * rank,
                            Bond::finite(2));
  for (int s = 0; s < rank; ++s) entries[s * rank + s] = Bond::finite(1);
  for (const BondEntry& b : bonds) {
    if (b.s < 0 || b.s >= rank || b.t < 0 || b.t >= rank)
      throw InvalidArgument("bond " + pair_text(b.s, b.t) +
                            " names a generator outside the rank");
    entries[b.s * rank + b.t] = b.bond;
    entries[b.t * rank + b.s] = b.bond;
  }
  return validate(rank, std::move(entries));
}

bool CoxeterMatrix::has_infinite_bond() const {
  for (const Bond& b : entries_)
    if (b.is_infinite()) return true;
  return false;
}

std::vector<CoxeterMatrix::BondEntry> CoxeterMatrix::nontrivial_bonds() const {
  std::vector<BondEntry> out;
  for (int s = 0; s < rank_; ++s)
    for (int t = s + 1; t < rank_; ++t)
      if (bond(s, t) != Bond::finite(2)) out.push_back({s, t, bond(s, t)});
  return out;
}

BilinearForm::BilinearForm(const CoxeterMatrix& matrix)
    : rank_(matrix.rank()),
      entries_(static_cast<std::size_t>(rank_) * rank_) {
  for (int s = 0; s < rank_; ++s) {
    for (int t = 0; t < rank_; ++t) {
      const Bond m = matrix.bond(s, t);
      double value;
      if (m.is_infinite())
        value = -1.0;
      else if (m.order() == 1)
        value = 1.0;
      else if (m.order() == 2)
        value = 0.0;  // exact orthogonality for commuting generators
      else
        value = -std::cos(std::numbers::pi / m.order());
      entries_[s * rank_ + t] = value;
    }
  }
}

double BilinearForm::pair(const std::vector<double>& u,
                          const std::vector<double>& v) const {
  double sum = 0.0;
  for (int s = 0; s < rank_; ++s) {
    if (u[s] == 0.0) continue;
    double row = 0.0;
    for (int t = 0; t < rank_; ++t) row += entries_[s * rank_ + t] * v[t];
    sum += u[s] * row;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw InvalidArgument("unknown type name '" + std::string(whole) + "'");
  return value;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace

NamedType parse_named_type(std::string_view name) {
  const std::string whole(name);
  if (name.empty()) throw InvalidArgument("empty type name");

  NamedType type;
  const char head = name.front();
  std::string_view rest = name.substr(1);

  if (head == 'I') {
    // I2(m) or I2(inf); I_2(m) also accepted.
    if (rest.starts_with("_")) rest.remove_prefix(1);
    if (!rest.starts_with("2(") || !rest.ends_with(")"))
      throw InvalidArgument("unknown type name '" + whole + "'");
    std::string_view param = rest.substr(2, rest.size() - 3);
    type.family = Family::I2;
    type.index = 2;
    if (param == "inf" || param == "oo") {
      type.dihedral = Bond::infinity();
    } else {
      const int m = parse_int(param, name);
      require(m >= 3, "I2(m) requires m >= 3 or inf, got " + std::to_string(m));
      type.dihedral = Bond::finite(m);
    }
    return type;
  }

  if (rest.starts_with("_")) rest.remove_prefix(1);
  switch (head) {
    case 'A': type.family = Family::A; break;
    case 'B': type.family = Family::B; break;
    case 'D': type.family = Family::D; break;
    case 'H': type.family = Family::H; break;
    case 'F': type.family = Family::F; break;
    case 'E': type.family = Family::E; break;
    default: throw InvalidArgument("unknown type name '" + whole + "'");
  }
  type.index = parse_int(rest, name);
  const int n = type.index;
  switch (type.family) {
    case Family::A: require(n >= 1 && n <= kMaxRank, "A_n requires 1 <= n <= 32"); break;
    case Family::B: require(n >= 2 && n <= kMaxRank, "B_n requires 2 <= n <= 32"); break;
    case Family::D: require(n >= 4 && n <= kMaxRank, "D_n requires 4 <= n <= 32"); break;
    case Family::H: require(n == 3 || n == 4, "H_n exists only for n = 3, 4"); break;
    case Family::F: require(n == 4, "F_n exists only for n = 4"); break;
    case Family::E: require(n == 6, "E_n is catalogued only for n = 6"); break;
    case Family::I2: break;
  }
  return type;
}

std::string to_string(const NamedType& type) {
  switch (type.family) {
    case Family::A: return "A" + std::to_string(type.index);
    case Family::B: return "B" + std::to_string(type.index);
    case Family::D: return "D" + std::to_string(type.index);
    case Family::H: return "H" + std::to_string(type.index);
    case Family::F: return "F" + std::to_string(type.index);
    case Family::E: return "E" + std::to_string(type.index);
    case Family::I2: return "I2(" + to_string(type.dihedral) + ")";
  }
  return {};
}

CoxeterMatrix from_named_type(const NamedType& type) {
  using B = CoxeterMatrix::BondEntry;
  const Bond three = Bond::finite(3);
  const Bond four = Bond::finite(4);
  const Bond five = Bond::finite(5);
  std::vector<B> bonds;
  int rank = type.index;

  auto chain = [&](int from, int to) {
    for (int s = from; s + 1 <= to; ++s) bonds.push_back({s, s + 1, three});
  };

  switch (type.family) {
    case Family::A:
      require(rank >= 1, "A_n requires n >= 1");
      chain(0, rank - 1);
      break;
    case Family::B:
      require(rank >= 2, "B_n requires n >= 2");
      bonds.push_back({0, 1, four});
      chain(1, rank - 1);
      break;
    case Family::D:
      require(rank >= 4, "D_n requires n >= 4");
      bonds.push_back({0, 2, three});
      bonds.push_back({1, 2, three});
      chain(2, rank - 1);
      break;
    case Family::I2:
      rank = 2;
      bonds.push_back({0, 1, type.dihedral});
      break;
    case Family::H:
      require(rank == 3 || rank == 4, "H_n exists only for n = 3, 4");
      bonds.push_back({0, 1, five});
      chain(1, rank - 1);
      break;
    case Family::F:
      require(rank == 4, "F_n exists only for n = 4");
      bonds = {{0, 1, three}, {1, 2, four}, {2, 3, three}};
      break;
    case Family::E:
      require(rank == 6, "E_n is catalogued only for n = 6");
      bonds = {{0, 2, three}, {2, 3, three}, {3, 4, three}, {4, 5, three},
               {1, 3, three}};
      break;
  }
  return CoxeterMatrix::from_bonds(rank, bonds);
}

CoxeterMatrix from_named_type(std::string_view name) {
  return from_named_type(parse_named_type(name));
}

}  // namespace coxeter

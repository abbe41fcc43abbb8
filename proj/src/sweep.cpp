#include "coxeter/sweep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include "coxeter/errors.hpp"
#include "coxeter/notation.hpp"
#include "json.hpp"

namespace coxeter {

const std::vector<std::string>& known_statements() {
  static const std::vector<std::string> ids = {
      std::string(statement::kDescentUnion),
      std::string(statement::kFinestDescentUnion),
      std::string(statement::kJoinDecomposition),
      std::string(statement::kReducedWordUnion),
      std::string(statement::kQuotientCompatibility),
      std::string(statement::kBooleanPoset),
      std::string(statement::kMinimalUnion),
      std::string(statement::kSymmetricDifference),
      std::string(statement::kQuotientRightInversions),
      std::string(statement::kQuotientDisjointUnion),
      std::string(statement::kQuotientDifference),
      std::string(statement::kConjugatedQuotient),
  };
  return ids;
}

bool is_known_statement(std::string_view id) {
  for (const std::string& known : known_statements())
    if (known == id) return true;
  return false;
}

Scope parse_scope(std::string_view text) {
  if (text == "auto") return Scope::Auto;
  if (text == "exhaustive") return Scope::Exhaustive;
  if (text == "sample") return Scope::Sample;
  throw InvalidArgument("unknown scope '" + std::string(text) +
                        "' (expected auto, exhaustive or sample)");
}

namespace {

class SweepDriver {
 public:
  SweepDriver(const CoxeterSystem& system, const Enumeration& universe,
              std::string_view id, const SweepOptions& options)
      : system_(system), universe_(universe), options_(options), rng_(options.seed) {
    summary_.statement_id = std::string(id);
    summary_.exhaustive =
        options.scope == Scope::Exhaustive ||
        (options.scope == Scope::Auto &&
         universe.elements.size() <= options.exhaustive_limit);
  }

  SweepSummary run() {
    const std::string& id = summary_.statement_id;
    if (id == statement::kDescentUnion) descent_union();
    else if (id == statement::kFinestDescentUnion) finest_descent_union();
    else if (id == statement::kJoinDecomposition) per_element(join_decomposition());
    else if (id == statement::kReducedWordUnion) reduced_word_union();
    else if (id == statement::kQuotientCompatibility) quotient_compatibility();
    else if (id == statement::kBooleanPoset) boolean_poset();
    else if (id == statement::kMinimalUnion) per_element(minimal_union());
    else if (id == statement::kSymmetricDifference) symmetric_difference();
    else if (id == statement::kQuotientRightInversions) per_element_and_mask(id);
    else if (id == statement::kQuotientDisjointUnion) per_element_and_mask(id);
    else if (id == statement::kQuotientDifference) per_element_and_mask(id);
    else if (id == statement::kConjugatedQuotient) conjugated_quotient();
    else throw InvalidArgument("unknown statement '" + id + "'");
    return std::move(summary_);
  }

 private:
  using ElementCheck = std::function<VerificationReport(const GroupElement&)>;

  void record(VerificationReport report) {
    switch (report.verdict) {
      case Verdict::Holds: ++summary_.passed; break;
      case Verdict::Skipped: ++summary_.skipped; break;
      case Verdict::Fails: ++summary_.failed; break;
    }
    if (options_.keep_all_reports || report.verdict != Verdict::Holds)
      summary_.reports.push_back(std::move(report));
  }

  const std::vector<GroupElement>& elements() const { return universe_.elements; }

  std::size_t uniform(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  const GroupElement& random_element() { return elements()[uniform(elements().size())]; }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[uniform(items.size())];
  }

  // A uniformly random number of steps down from v, each stripping a random
  // right descent. Reaches every u <=_R v.
  GroupElement random_weak_lower(const GroupElement& v) {
    GroupElement u = v;
    std::size_t steps = uniform(v.length() + 1);
    while (steps-- > 0) {
      const std::vector<Generator> descents = system_.right_descents(u).members();
      u = system_.multiply(u, pick(descents));
    }
    return u;
  }

  // Peels right descents chosen by `choose`, giving a reduced word of w.
  Word reduced_word(const GroupElement& w,
                    const std::function<Generator(const std::vector<Generator>&)>& choose) {
    Word reversed;
    GroupElement current = w;
    while (!current.is_identity()) {
      const Generator s = choose(system_.right_descents(current).members());
      reversed.push_back(s);
      current = system_.multiply(current, s);
    }
    return Word(reversed.rbegin(), reversed.rend());
  }

  // Indices of elements above each element, computed once.
  const std::vector<std::vector<std::size_t>>& up_sets() {
    if (!up_sets_) {
      const auto& all = elements();
      up_sets_.emplace(all.size());
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
          if (all[i].length() <= all[j].length() && weak_leq(system_, all[i], all[j]))
            (*up_sets_)[i].push_back(j);
    }
    return *up_sets_;
  }

  std::vector<std::pair<std::size_t, std::size_t>> weak_pairs() {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const auto& ups = up_sets();
    for (std::size_t i = 0; i < ups.size(); ++i)
      for (std::size_t j : ups[i]) pairs.emplace_back(i, j);
    return pairs;
  }

  template <class Fn>
  void for_weak_pairs(Fn&& fn) {
    if (summary_.exhaustive) {
      for (auto [i, j] : weak_pairs()) fn(elements()[i], elements()[j]);
    } else {
      for (std::size_t n = 0; n < options_.samples; ++n) {
        const GroupElement v = random_element();
        fn(random_weak_lower(v), v);
      }
    }
  }

  std::vector<ParabolicMask> all_masks() const {
    return subsets_of(system_.generators());
  }

  ParabolicMask random_subset(ParabolicMask of) {
    std::uint32_t bits = 0;
    for (Generator s : of.members())
      if (uniform(2) == 1) bits |= std::uint32_t{1} << s;
    return ParabolicMask::from_bits(bits);
  }

  const std::optional<ElementSet>& parabolic_subgroup(ParabolicMask J) {
    auto it = parabolic_cache_.find(J.bits());
    if (it == parabolic_cache_.end()) {
      const Enumeration sub = enumerate_parabolic(system_, J, universe_.cap);
      std::optional<ElementSet> value;
      if (!sub.truncated) value.emplace(sub.elements.begin(), sub.elements.end());
      it = parabolic_cache_.emplace(J.bits(), std::move(value)).first;
    }
    return it->second;
  }

  VerificationReport skipped_parabolic(std::string_view id, std::string instance) {
    VerificationReport report;
    report.statement_id = std::string(id);
    report.instance = std::move(instance);
    report.verdict = Verdict::Skipped;
    report.skip_reason = "W_J is not finite within cap " + std::to_string(universe_.cap);
    return report;
  }

  // -- statements ----------------------------------------------------------

  // Three admissible families per pair: the finest one, the single mask
  // S \ D_R(u^-1 v), and a seeded random family with the same intersection.
  void descent_union() {
    for_weak_pairs([&](const GroupElement& u, const GroupElement& v) {
      const DescentSet descents =
          system_.right_descents(system_.multiply(system_.inverse(u), v));
      const ParabolicMask base = descents.complement(system_.rank());

      std::vector<ParabolicMask> finest;
      for (Generator s : descents.members()) finest.push_back(base | (descents - DescentSet{s}));
      const std::vector<ParabolicMask> single{base};

      std::vector<ParabolicMask> random_family;
      ParabolicMask common = descents;
      const std::size_t extra = uniform(3);
      for (std::size_t k = 0; k < extra; ++k) {
        const ParabolicMask part = random_subset(descents);
        random_family.push_back(base | part);
        common = common & part;
      }
      random_family.push_back(base | (descents - common));

      for (const std::vector<ParabolicMask>* family :
           std::initializer_list<const std::vector<ParabolicMask>*>{&finest, &single, &random_family})
        record(verify_theorem(system_, u, v, *family));
    });
  }

  void finest_descent_union() {
    for_weak_pairs([&](const GroupElement& u, const GroupElement& v) {
      record(verify_finest_corollary(system_, u, v));
    });
  }

  ElementCheck join_decomposition() {
    return [this](const GroupElement& w) {
      return verify_join_decomposition(system_, w, elements());
    };
  }

  ElementCheck minimal_union() {
    return [this](const GroupElement& w) { return verify_minimal_union(system_, w); };
  }

  void per_element(const ElementCheck& check) {
    if (summary_.exhaustive) {
      for (const GroupElement& w : elements()) record(check(w));
    } else {
      for (std::size_t n = 0; n < options_.samples; ++n) record(check(random_element()));
    }
  }

  // Exhaustive: the ShortLex normal form and the reduced word built from
  // largest descents, for every element. Sample: random reduced words.
  void reduced_word_union() {
    if (summary_.exhaustive) {
      for (const GroupElement& w : elements()) {
        record(verify_reduced_word_union(system_, w.word()));
        const Word other = reduced_word(
            w, [](const std::vector<Generator>& d) { return d.back(); });
        if (other != w.word()) record(verify_reduced_word_union(system_, other));
      }
    } else {
      for (std::size_t n = 0; n < options_.samples; ++n) {
        const GroupElement w = random_element();
        record(verify_reduced_word_union(
            system_, reduced_word(w, [this](const std::vector<Generator>& d) {
              return pick(d);
            })));
      }
    }
  }

  void quotient_compatibility() {
    const auto& ups = up_sets();
    if (summary_.exhaustive) {
      for (std::size_t i = 0; i < ups.size(); ++i)
        for (std::size_t j : ups[i])
          for (std::size_t k : ups[i])
            record(verify_quotient_compatibility(system_, elements()[i],
                                                 elements()[j], elements()[k]));
      return;
    }
    // Sample mode draws w among the triples meeting the projection
    // hypothesis (w = v always does), so samples are not wasted on skips.
    for (std::size_t n = 0; n < options_.samples; ++n) {
      const std::size_t i = uniform(elements().size());
      const GroupElement& u = elements()[i];
      const GroupElement& v = elements()[pick(ups[i])];
      const std::vector<Generator> descents =
          system_.right_descents(system_.multiply(system_.inverse(u), v)).members();
      std::vector<std::size_t> qualifying;
      for (std::size_t k : ups[i]) {
        const GroupElement& w = elements()[k];
        bool same = true;
        for (Generator s : descents)
          if (maximal_projection(system_, v, s) != maximal_projection(system_, w, s)) {
            same = false;
            break;
          }
        if (same) qualifying.push_back(k);
      }
      record(verify_quotient_compatibility(system_, u, v, elements()[pick(qualifying)]));
    }
  }

  void boolean_poset() {
    if (summary_.exhaustive) {
      for (const GroupElement& w : elements()) {
        const ParabolicMask free = system_.right_descents(w).complement(system_.rank());
        for (ParabolicMask K : subsets_of(free)) record(verify_boolean_poset(system_, w, K));
      }
    } else {
      for (std::size_t n = 0; n < options_.samples; ++n) {
        const GroupElement w = random_element();
        const ParabolicMask free = system_.right_descents(w).complement(system_.rank());
        record(verify_boolean_poset(system_, w, random_subset(free)));
      }
    }
  }

  void symmetric_difference() {
    if (summary_.exhaustive) {
      for (const GroupElement& x : elements())
        for (const GroupElement& y : elements())
          record(verify_symmetric_difference(system_, x, y));
    } else {
      for (std::size_t n = 0; n < options_.samples; ++n) {
        const GroupElement x = random_element();
        record(verify_symmetric_difference(system_, x, random_element()));
      }
    }
  }

  void element_and_mask(std::string_view id, const GroupElement& v, ParabolicMask J) {
    if (id == statement::kQuotientDisjointUnion) {
      record(verify_quotient_disjoint_union(system_, v, J));
      return;
    }
    const auto& parabolic = parabolic_subgroup(J);
    if (!parabolic) {
      record(skipped_parabolic(id, "v=" + format_element(v) + "; J=" + format_set(J)));
      return;
    }
    if (id == statement::kQuotientRightInversions)
      record(verify_quotient_right_inversions(system_, v, J, *parabolic));
    else
      record(verify_quotient_difference(system_, v, J, *parabolic));
  }

  void per_element_and_mask(std::string_view id) {
    if (summary_.exhaustive) {
      for (const GroupElement& v : elements())
        for (ParabolicMask J : all_masks()) element_and_mask(id, v, J);
    } else {
      for (std::size_t n = 0; n < options_.samples; ++n) {
        const GroupElement v = random_element();
        element_and_mask(id, v, random_subset(system_.generators()));
      }
    }
  }

  void conjugated_quotient() {
    auto check = [&](const GroupElement& u, const GroupElement& v, ParabolicMask J) {
      const auto& parabolic = parabolic_subgroup(J);
      if (!parabolic) {
        record(skipped_parabolic(statement::kConjugatedQuotient,
                                 "u=" + format_element(u) + "; v=" + format_element(v) +
                                     "; J=" + format_set(J)));
        return;
      }
      record(verify_conjugated_quotient(system_, u, v, J, *parabolic));
    };
    if (summary_.exhaustive) {
      for (auto [i, j] : weak_pairs())
        for (ParabolicMask J : all_masks()) check(elements()[i], elements()[j], J);
    } else {
      for_weak_pairs([&](const GroupElement& u, const GroupElement& v) {
        check(u, v, random_subset(system_.generators()));
      });
    }
  }

  const CoxeterSystem& system_;
  const Enumeration& universe_;
  SweepOptions options_;
  std::mt19937_64 rng_;
  SweepSummary summary_;
  std::optional<std::vector<std::vector<std::size_t>>> up_sets_;
  std::map<std::uint32_t, std::optional<ElementSet>> parabolic_cache_;
};

const char* verdict_text(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds: return "PASS";
    case Verdict::Fails: return "FAIL";
    case Verdict::Skipped: return "SKIP";
  }
  return "?";
}

}  // namespace

SweepSummary run_sweep(const CoxeterSystem& system, const Enumeration& universe,
                       std::string_view statement_id, const SweepOptions& options) {
  if (!is_known_statement(statement_id))
    throw InvalidArgument("unknown statement '" + std::string(statement_id) + "'");
  if (universe.elements.empty()) throw InvalidArgument("empty universe");
  // Products and conjugates of ball elements reach about four times the
  // ball radius; the ambient cap must not cut them off.
  const CoxeterSystem local =
      system.with_length_cap(std::max(system.length_cap(), 4 * universe.cap + 4));
  return SweepDriver(local, universe, statement_id, options).run();
}

std::string report_to_text(const VerificationReport& report) {
  std::string line = report.statement_id + " " + verdict_text(report.verdict) + " " +
                     report.instance;
  if (report.verdict == Verdict::Fails) line += " | witness: " + report.witness;
  if (report.verdict == Verdict::Skipped) line += " | skipped: " + report.skip_reason;
  return line;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["statement_id"] = report.statement_id;
  doc["instance"] = report.instance;
  switch (report.verdict) {
    case Verdict::Holds: doc["status"] = "holds"; break;
    case Verdict::Fails: doc["status"] = "fails"; break;
    case Verdict::Skipped: doc["status"] = "skipped"; break;
  }
  doc["holds"] = report.holds();
  if (report.verdict == Verdict::Fails) doc["witness"] = report.witness;
  if (report.verdict == Verdict::Skipped) doc["skip_reason"] = report.skip_reason;
  return doc.dump();
}

std::string summary_to_text(const SweepSummary& summary) {
  return summary.statement_id + ": " + std::to_string(summary.passed) + " passed, " +
         std::to_string(summary.skipped) + " skipped, " +
         std::to_string(summary.failed) + " failed (" +
         (summary.exhaustive ? "exhaustive" : "sample") + ")";
}

}  // namespace coxeter

#include "coxeter/oracle_models.hpp"

#include <cstdlib>
#include <random>
#include <set>

#include "coxeter/descent_calculus.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/notation.hpp"

namespace coxeter {

// ---------------------------------------------------------------------------
// Type A
// ---------------------------------------------------------------------------

Permutation identity_permutation(int letters) {
  Permutation p;
  for (int i = 1; i <= letters; ++i) p.images.push_back(i);
  return p;
}

std::size_t oracle_length(const Permutation& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.images.size(); ++i)
    for (std::size_t j = i + 1; j < p.images.size(); ++j)
      if (p.images[i] > p.images[j]) ++count;
  return count;
}

DescentSet oracle_descents(const Permutation& p) {
  DescentSet out;
  for (std::size_t i = 0; i + 1 < p.images.size(); ++i)
    if (p.images[i] > p.images[i + 1]) out.insert(static_cast<Generator>(i));
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out;
  for (int x : b.images) out.images.push_back(a.images[x - 1]);
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out;
  out.images.resize(p.images.size());
  for (std::size_t i = 0; i < p.images.size(); ++i)
    out.images[p.images[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

bool oracle_bruhat_leq(const Permutation& p, const Permutation& q) {
  const int n = static_cast<int>(p.images.size());
  for (int k = 1; k <= n; ++k) {
    int count_p = 0;
    int count_q = 0;
    for (int i = 0; i < n; ++i) {
      count_p += p.images[i] >= k;
      count_q += q.images[i] >= k;
      if (count_p > count_q) return false;
    }
  }
  return true;
}

std::vector<Permutation> oracle_reflections(int letters) {
  std::vector<Permutation> out;
  for (int a = 0; a < letters; ++a)
    for (int b = a + 1; b < letters; ++b) {
      Permutation t = identity_permutation(letters);
      std::swap(t.images[a], t.images[b]);
      out.push_back(t);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Type B
// ---------------------------------------------------------------------------

namespace {

// v(a) for a in [+-n].
int signed_image(const SignedPermutation& v, int a) {
  return a > 0 ? v.images[a - 1] : -v.images[-a - 1];
}

}  // namespace

SignedPermutation identity_signed(int n) {
  SignedPermutation p;
  for (int i = 1; i <= n; ++i) p.images.push_back(i);
  return p;
}

std::size_t oracle_length(const SignedPermutation& p) {
  std::size_t inversions = 0;
  long negative_sum = 0;
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    for (std::size_t j = i + 1; j < p.images.size(); ++j)
      if (p.images[i] > p.images[j]) ++inversions;
    if (p.images[i] < 0) negative_sum += p.images[i];
  }
  return inversions + static_cast<std::size_t>(-negative_sum);
}

DescentSet oracle_descents(const SignedPermutation& p) {
  DescentSet out;
  if (!p.images.empty() && p.images[0] < 0) out.insert(0);
  for (std::size_t i = 0; i + 1 < p.images.size(); ++i)
    if (p.images[i] > p.images[i + 1]) out.insert(static_cast<Generator>(i + 1));
  return out;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  SignedPermutation out;
  for (int x : b.images) out.images.push_back(signed_image(a, x));
  return out;
}

SignedPermutation inverse(const SignedPermutation& p) {
  SignedPermutation out;
  out.images.resize(p.images.size());
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    const int x = p.images[i];
    const int position = static_cast<int>(i) + 1;
    out.images[std::abs(x) - 1] = x > 0 ? position : -position;
  }
  return out;
}

bool oracle_bruhat_leq(const SignedPermutation& p, const SignedPermutation& q) {
  const int n = static_cast<int>(p.images.size());
  std::vector<int> domain;
  for (int a = -n; a <= n; ++a)
    if (a != 0) domain.push_back(a);
  for (int j : domain) {
    int count_p = 0;
    int count_q = 0;
    for (int i : domain) {  // increasing, so counts accumulate over a <= i
      count_p += signed_image(p, i) >= j;
      count_q += signed_image(q, i) >= j;
      if (count_p > count_q) return false;
    }
  }
  return true;
}

std::vector<SignedPermutation> oracle_reflections_signed(int n) {
  std::vector<SignedPermutation> out;
  for (int i = 0; i < n; ++i) {
    SignedPermutation t = identity_signed(n);
    t.images[i] = -t.images[i];
    out.push_back(t);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SignedPermutation swap = identity_signed(n);
      swap.images[i] = j + 1;
      swap.images[j] = i + 1;
      out.push_back(swap);
      SignedPermutation negated_swap = identity_signed(n);
      negated_swap.images[i] = -(j + 1);
      negated_swap.images[j] = -(i + 1);
      out.push_back(negated_swap);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

void require_oracle_type(const NamedType& type) {
  if (type.family != Family::A && type.family != Family::B)
    throw UnsupportedType("no oracle model for type " + to_string(type) +
                          " (only A_n and B_n)");
}

OracleImage oracle_map_word(const NamedType& type, std::span<const Generator> word) {
  require_oracle_type(type);
  const int rank = type.index;
  for (Generator s : word)
    if (s < 0 || s >= rank)
      throw InvalidArgument("generator " + generator_label(s) + " outside rank " +
                            std::to_string(rank));
  if (type.family == Family::A) {
    Permutation p = identity_permutation(rank + 1);
    for (Generator s : word) std::swap(p.images[s], p.images[s + 1]);
    return p;
  }
  SignedPermutation p = identity_signed(rank);
  for (Generator s : word) {
    if (s == 0)
      p.images[0] = -p.images[0];
    else
      std::swap(p.images[s - 1], p.images[s]);
  }
  return p;
}

OracleImage oracle_map(const NamedType& type, const GroupElement& w) {
  return oracle_map_word(type, w.word());
}

std::size_t oracle_length(const OracleImage& p) {
  return std::visit([](const auto& x) { return oracle_length(x); }, p);
}

DescentSet oracle_descents(const OracleImage& p) {
  return std::visit([](const auto& x) { return oracle_descents(x); }, p);
}

OracleImage compose(const OracleImage& a, const OracleImage& b) {
  if (a.index() != b.index()) throw InvalidArgument("mixed oracle models");
  if (const auto* pa = std::get_if<Permutation>(&a))
    return compose(*pa, std::get<Permutation>(b));
  return compose(std::get<SignedPermutation>(a), std::get<SignedPermutation>(b));
}

OracleImage inverse(const OracleImage& p) {
  return std::visit([](const auto& x) -> OracleImage { return inverse(x); }, p);
}

bool oracle_bruhat_leq(const OracleImage& p, const OracleImage& q) {
  if (p.index() != q.index()) throw InvalidArgument("mixed oracle models");
  if (const auto* pp = std::get_if<Permutation>(&p))
    return oracle_bruhat_leq(*pp, std::get<Permutation>(q));
  return oracle_bruhat_leq(std::get<SignedPermutation>(p),
                           std::get<SignedPermutation>(q));
}

std::vector<OracleImage> oracle_reflections(const NamedType& type) {
  require_oracle_type(type);
  std::vector<OracleImage> out;
  if (type.family == Family::A) {
    for (auto& t : oracle_reflections(type.index + 1)) out.emplace_back(std::move(t));
  } else {
    for (auto& t : oracle_reflections_signed(type.index)) out.emplace_back(std::move(t));
  }
  return out;
}

std::string to_string(const OracleImage& p) {
  const std::vector<int>& images =
      std::visit([](const auto& x) -> const std::vector<int>& { return x.images; }, p);
  std::string out = "(";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(images[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Transport check
// ---------------------------------------------------------------------------

namespace {

class OracleChecker {
 public:
  OracleChecker(const CoxeterSystem& system, const NamedType& type)
      : system_(system), type_(type), reflections_(oracle_reflections(type)) {}

  void check_element(const GroupElement& w, OracleCheckResult& result) {
    ++result.elements_checked;
    const OracleImage image = oracle_map(type_, w);
    const std::string where = " at w=" + format_element(w) + " " + to_string(image);
    auto disagree = [&](const std::string& what) {
      result.disagreements.push_back(what + where);
    };

    const std::size_t length = oracle_length(image);
    if (length != w.length()) disagree("length");
    if (oracle_descents(image) != system_.right_descents(w)) disagree("right descents");
    if (oracle_descents(inverse(image)) != system_.left_descents(w))
      disagree("left descents");
    if (oracle_map(type_, system_.inverse(w)) != inverse(image)) disagree("inverse");

    // T_R(w): engine reflections must map to model reflections that shorten
    // w, and must account for all such model reflections.
    const ReflectionSet right = right_inversions(system_, w);
    std::set<OracleImage> engine_images;
    for (const GroupElement& t : right) engine_images.insert(oracle_map(type_, t));
    std::set<OracleImage> model_inversions;
    for (const OracleImage& t : reflections_)
      if (oracle_length(compose(image, t)) < length) model_inversions.insert(t);
    if (right.size() != model_inversions.size()) disagree("|T_R|");
    else if (engine_images != model_inversions) disagree("T_R");
  }

  void check_pair(const GroupElement& a, const GroupElement& b,
                  OracleCheckResult& result) {
    ++result.pairs_checked;
    const OracleImage ia = oracle_map(type_, a);
    const OracleImage ib = oracle_map(type_, b);
    const std::string where =
        " at a=" + format_element(a) + ", b=" + format_element(b);
    if (oracle_map(type_, system_.multiply(a, b)) != compose(ia, ib))
      result.disagreements.push_back("product" + where);
    if (bruhat_leq(system_, a, b) != oracle_bruhat_leq(ia, ib))
      result.disagreements.push_back("bruhat order" + where);
  }

 private:
  const CoxeterSystem& system_;
  NamedType type_;
  std::vector<OracleImage> reflections_;
};

std::size_t model_order(const NamedType& type) {
  std::size_t order = 1;
  if (type.family == Family::A) {
    for (int i = 2; i <= type.index + 1; ++i) order *= static_cast<std::size_t>(i);
  } else {
    for (int i = 1; i <= type.index; ++i) order *= 2 * static_cast<std::size_t>(i);
  }
  return order;
}

}  // namespace

OracleCheckResult run_oracle_check(const CoxeterSystem& system, const NamedType& type,
                                   const OracleCheckOptions& options) {
  require_oracle_type(type);
  if (from_named_type(type) != system.matrix())
    throw InvalidArgument("system does not match type " + to_string(type));

  const Enumeration universe = enumerate(system, options.cap);
  if (universe.truncated)
    throw CapExceeded("cap " + std::to_string(options.cap) +
                      " is below the longest element of " + to_string(type));
  const std::vector<GroupElement>& all = universe.elements;

  OracleCheckResult result;
  OracleChecker checker(system, type);
  if (!options.samples) {
    std::set<OracleImage> images;
    for (const GroupElement& w : all) {
      checker.check_element(w, result);
      images.insert(oracle_map(type, w));
    }
    if (images.size() != all.size() || all.size() != model_order(type))
      result.disagreements.push_back(
          "oracle map is not a bijection: " + std::to_string(all.size()) +
          " elements, " + std::to_string(images.size()) + " distinct images, model order " +
          std::to_string(model_order(type)));
    for (const GroupElement& a : all)
      for (const GroupElement& b : all) checker.check_pair(a, b, result);
    return result;
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (std::size_t n = 0; n < *options.samples; ++n) checker.check_element(all[pick(rng)], result);
  for (std::size_t n = 0; n < *options.samples; ++n) {
    const GroupElement& a = all[pick(rng)];
    checker.check_pair(a, all[pick(rng)], result);
  }
  return result;
}

}  // namespace coxeter

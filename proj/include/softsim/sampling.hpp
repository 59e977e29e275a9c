#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <iterator>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "softsim/errors.hpp"
#include "softsim/soft_set.hpp"

namespace softsim {

struct SamplerOptions {
  std::uint64_t seed = 1;
  std::size_t min_elements = 1;
  std::size_t max_elements = 4;
  std::size_t min_attributes = 1;
  std::size_t max_attributes = 4;
  bool nonempty_domain = true;
};

/// Spaces with elements x1..xn and attributes e1..em.
inline SpacePtr standard_space(std::size_t attributes, std::size_t elements) {
  std::vector<std::string> universe;
  std::vector<std::string> attrs;
  for (std::size_t j = 1; j <= elements; ++j) universe.push_back("x" + std::to_string(j));
  for (std::size_t i = 1; i <= attributes; ++i) attrs.push_back("e" + std::to_string(i));
  return make_space(std::move(universe), std::move(attrs));
}

/// Seeded generator of random soft sets. The stream is a pure function of the
/// options: draws are taken straight from mt19937_64 (whose output sequence is
/// fixed by the standard) without library distributions.
class SoftSetSampler {
 public:
  explicit SoftSetSampler(SamplerOptions options) : options_(options), rng_(options.seed) {
    if (options_.min_elements < 1 || options_.min_attributes < 1 ||
        options_.min_elements > options_.max_elements || options_.min_attributes > options_.max_attributes) {
      throw PreconditionError("sampler size bounds must satisfy 1 <= min <= max");
    }
  }

  const SamplerOptions& options() const { return options_; }

  /// Uniform in [0, bound).
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }
  bool coin(std::size_t one_in = 2) { return below(one_in) == 0; }

  SpacePtr draw_space() {
    const std::size_t m = options_.min_attributes + below(options_.max_attributes - options_.min_attributes + 1);
    const std::size_t n = options_.min_elements + below(options_.max_elements - options_.min_elements + 1);
    auto& slot = spaces_[{m, n}];
    if (!slot) slot = standard_space(m, n);
    return slot;
  }

  ElementSet draw_values(std::size_t n) {
    ElementSet values(n);
    for (std::size_t j = 0; j < n; ++j) values[j] = coin();
    return values;
  }

  /// A random soft set. One draw in eight has all value sets empty and one in
  /// eight is total, so those edge shapes show up often.
  SoftSet draw(const SpacePtr& space) {
    const std::size_t m = space->attribute_count();
    const std::size_t n = space->element_count();
    const bool all_empty = coin(8);
    const bool total = coin(8);
    SoftSet::Assignment assignment;
    for (std::size_t i = 0; i < m; ++i) {
      if (total || coin()) assignment.emplace(i, all_empty ? ElementSet(n) : draw_values(n));
    }
    if (assignment.empty() && options_.nonempty_domain) {
      assignment.emplace(below(m), all_empty ? ElementSet(n) : draw_values(n));
    }
    return {space, std::move(assignment)};
  }

  /// A small edit of `f`: toggle one membership, drop or add an attribute,
  /// swap two memberships, or move a value set to an absent attribute. The
  /// last two keep every cardinality, which is what zero-distance searches
  /// need.
  SoftSet perturb(const SoftSet& f) {
    const std::size_t m = f.space().attribute_count();
    const std::size_t n = f.space().element_count();
    SoftSet::Assignment a = f.assignment();
    std::vector<std::size_t> present;
    std::vector<std::size_t> absent;
    for (std::size_t i = 0; i < m; ++i) (a.count(i) ? present : absent).push_back(i);
    const auto pick = [this](const std::vector<std::size_t>& v) { return v[below(v.size())]; };

    switch (below(5)) {
      case 0:
        if (!present.empty()) a[pick(present)].flip(below(n));
        break;
      case 1:
        if (present.size() > 1 || (!present.empty() && !options_.nonempty_domain)) a.erase(pick(present));
        break;
      case 2:
        if (!absent.empty()) a.emplace(pick(absent), draw_values(n));
        break;
      case 3:
        if (!present.empty()) {
          auto& values = a[pick(present)];
          const std::size_t x = below(n);
          const std::size_t y = below(n);
          const bool vx = values[x];
          values[x] = values[y];
          values[y] = vx;
        }
        break;
      default:
        if (!present.empty() && !absent.empty()) {
          const std::size_t from = pick(present);
          a.emplace(pick(absent), a[from]);
          a.erase(from);
        }
        break;
    }
    return {f.space_ptr(), std::move(a)};
  }

  /// Nested triple (F,A) ⊆ (G,B) ⊆ (H,C), built by deleting attributes and
  /// elements from a random (H,C).
  std::array<SoftSet, 3> draw_chain(const SpacePtr& space) {
    SoftSet h = draw(space);
    SoftSet g = shrink(h);
    SoftSet f = shrink(g);
    return {std::move(f), std::move(g), std::move(h)};
  }

 private:
  SoftSet shrink(const SoftSet& outer) {
    SoftSet::Assignment a;
    for (const auto& [attr, values] : outer.assignment()) {
      if (coin(3)) continue;
      ElementSet kept = values;
      for (std::size_t j = 0; j < kept.size(); ++j) {
        if (kept[j] && coin(3)) kept[j] = false;
      }
      a.emplace(attr, std::move(kept));
    }
    if (a.empty() && options_.nonempty_domain) {
      const auto& [attr, values] = *std::next(outer.assignment().begin(),
                                              static_cast<std::ptrdiff_t>(below(outer.domain_size())));
      a.emplace(attr, values);
    }
    return {outer.space_ptr(), std::move(a)};
  }

  SamplerOptions options_;
  std::mt19937_64 rng_;
  std::map<std::pair<std::size_t, std::size_t>, SpacePtr> spaces_;
};

/// Every soft set over `space`: each attribute is absent or mapped to one of
/// the 2^n subsets, (2^n + 1)^m sets in total.
inline std::vector<SoftSet> enumerate_soft_sets(const SpacePtr& space, bool nonempty_domain = true) {
  const std::size_t m = space->attribute_count();
  const std::size_t n = space->element_count();
  const std::size_t choices = (std::size_t{1} << n) + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= choices;

  std::vector<SoftSet> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    SoftSet::Assignment a;
    std::size_t rest = code;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t choice = rest % choices;
      rest /= choices;
      if (choice == 0) continue;
      a.emplace(i, ElementSet(n, choice - 1));
    }
    if (nonempty_domain && a.empty()) continue;
    out.emplace_back(space, std::move(a));
  }
  return out;
}

}  // namespace softsim

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "softsim/errors.hpp"

namespace softsim {

/// Subset of a universe, one bit per element in declaration order.
using ElementSet = boost::dynamic_bitset<>;

/// A universe of elements together with a universe of attributes. Both are
/// ordered by declaration; that order fixes matrix layouts and serialization.
class SoftSpace {
 public:
  SoftSpace(std::vector<std::string> universe, std::vector<std::string> attributes)
      : universe_(std::move(universe)), attributes_(std::move(attributes)) {
    if (universe_.empty()) throw ParseError("soft space needs at least one element");
    if (attributes_.empty()) throw ParseError("soft space needs at least one attribute");
    index_names(universe_, element_index_, "element");
    index_names(attributes_, attribute_index_, "attribute");
  }

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  std::size_t element_count() const { return universe_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }

  std::optional<std::size_t> element_index(std::string_view name) const {
    return lookup(element_index_, name);
  }
  std::optional<std::size_t> attribute_index(std::string_view name) const {
    return lookup(attribute_index_, name);
  }

  friend bool operator==(const SoftSpace& a, const SoftSpace& b) {
    return a.universe_ == b.universe_ && a.attributes_ == b.attributes_;
  }

 private:
  using Index = std::unordered_map<std::string, std::size_t>;

  static void index_names(const std::vector<std::string>& names, Index& index, const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!index.emplace(names[i], i).second) {
        throw ParseError(std::string("duplicate ") + what + " identifier '" + names[i] + "'");
      }
    }
  }

  static std::optional<std::size_t> lookup(const Index& index, std::string_view name) {
    const auto it = index.find(std::string(name));
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::string> universe_;
  std::vector<std::string> attributes_;
  Index element_index_;
  Index attribute_index_;
};

using SpacePtr = std::shared_ptr<const SoftSpace>;

inline SpacePtr make_space(std::vector<std::string> universe, std::vector<std::string> attributes) {
  return std::make_shared<const SoftSpace>(std::move(universe), std::move(attributes));
}

/// A soft set (F,A): a partial map from attributes to subsets of the
/// universe. An attribute mapped to the empty set is present; an attribute
/// missing from the map is absent. The two are never conflated.
class SoftSet {
 public:
  /// Keyed by attribute index, so iteration follows declaration order.
  using Assignment = std::map<std::size_t, ElementSet>;
  using NamedAssignment = std::vector<std::pair<std::string, std::vector<std::string>>>;

  SoftSet(SpacePtr space, Assignment assignment)
      : space_(std::move(space)), assignment_(std::move(assignment)) {
    if (!space_) throw PreconditionError("soft set without a soft space");
    for (const auto& [attr, values] : assignment_) {
      if (attr >= space_->attribute_count()) throw PreconditionError("attribute index out of range");
      if (values.size() != space_->element_count()) {
        throw PreconditionError("value set does not match the universe size");
      }
    }
  }

  /// Builds from identifiers, rejecting unknown and duplicate tokens.
  static SoftSet from_names(SpacePtr space, const NamedAssignment& named) {
    Assignment assignment;
    for (const auto& [attr_name, members] : named) {
      const auto attr = space->attribute_index(attr_name);
      if (!attr) throw ParseError("unknown attribute '" + attr_name + "'");
      ElementSet values(space->element_count());
      for (const auto& member : members) {
        const auto idx = space->element_index(member);
        if (!idx) throw ParseError("element '" + member + "' of attribute '" + attr_name + "' is not in the universe");
        if (values.test(*idx)) throw ParseError("duplicate element '" + member + "' in attribute '" + attr_name + "'");
        values.set(*idx);
      }
      if (!assignment.emplace(*attr, std::move(values)).second) {
        throw ParseError("duplicate attribute '" + attr_name + "'");
      }
    }
    return {std::move(space), std::move(assignment)};
  }

  const SoftSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const Assignment& assignment() const { return assignment_; }

  bool has_attribute(std::size_t attr) const { return assignment_.count(attr) != 0; }
  /// Value set of `attr`, or nullptr when the attribute is absent.
  const ElementSet* value(std::size_t attr) const {
    const auto it = assignment_.find(attr);
    return it == assignment_.end() ? nullptr : &it->second;
  }
  std::size_t domain_size() const { return assignment_.size(); }
  bool is_total() const { return assignment_.size() == space_->attribute_count(); }

  /// Same named content, re-expressed in another space that contains all of
  /// this set's attribute and element identifiers.
  SoftSet rebased(SpacePtr target) const {
    return from_names(std::move(target), named());
  }

  NamedAssignment named() const {
    NamedAssignment out;
    for (const auto& [attr, values] : assignment_) {
      std::vector<std::string> members;
      for (auto i = values.find_first(); i != ElementSet::npos; i = values.find_next(i)) {
        members.push_back(space_->universe()[i]);
      }
      out.emplace_back(space_->attributes()[attr], std::move(members));
    }
    return out;
  }

 private:
  SpacePtr space_;
  Assignment assignment_;
};

enum class ComplementConvention {
  SameAttributes,     ///< (F,A)^c = (F^c, A)
  NegatedAttributes,  ///< (F,A)^c = (F^c, ¬A) with ¬A disjoint from A
};

inline constexpr std::string_view kNegationPrefix = "\xC2\xAC";  // U+00AC NOT SIGN

/// ¬e for e, and e for ¬e.
inline std::string negated_attribute(std::string_view name) {
  if (name.substr(0, kNegationPrefix.size()) == kNegationPrefix) {
    return std::string(name.substr(kNegationPrefix.size()));
  }
  return std::string(kNegationPrefix) + std::string(name);
}

inline bool same_space(const SoftSet& f, const SoftSet& g) {
  return f.space_ptr() == g.space_ptr() || f.space() == g.space();
}

inline void require_same_space(const SoftSet& f, const SoftSet& g) {
  if (!same_space(f, g)) throw SpaceMismatchError();
}

inline SoftSet null_soft_set(const SpacePtr& space) {
  SoftSet::Assignment assignment;
  for (std::size_t i = 0; i < space->attribute_count(); ++i) {
    assignment.emplace(i, ElementSet(space->element_count()));
  }
  return {space, std::move(assignment)};
}

inline SoftSet whole_soft_set(const SpacePtr& space) {
  SoftSet::Assignment assignment;
  for (std::size_t i = 0; i < space->attribute_count(); ++i) {
    assignment.emplace(i, ElementSet(space->element_count()).set());
  }
  return {space, std::move(assignment)};
}

/// (F,A) ⊆ (G,B): A ⊆ B and F(ε) ⊆ G(ε) on A.
inline bool is_soft_subset(const SoftSet& f, const SoftSet& g) {
  require_same_space(f, g);
  for (const auto& [attr, values] : f.assignment()) {
    const ElementSet* other = g.value(attr);
    if (other == nullptr || !values.is_subset_of(*other)) return false;
  }
  return true;
}

inline bool soft_equal(const SoftSet& f, const SoftSet& g) {
  require_same_space(f, g);
  return f.assignment() == g.assignment();
}

inline SoftSet soft_union(const SoftSet& f, const SoftSet& g) {
  require_same_space(f, g);
  SoftSet::Assignment out = f.assignment();
  for (const auto& [attr, values] : g.assignment()) {
    auto [it, inserted] = out.try_emplace(attr, values);
    if (!inserted) it->second |= values;
  }
  return {f.space_ptr(), std::move(out)};
}

inline SoftSet soft_intersection_restricted(const SoftSet& f, const SoftSet& g) {
  require_same_space(f, g);
  SoftSet::Assignment out;
  for (const auto& [attr, values] : f.assignment()) {
    if (const ElementSet* other = g.value(attr)) out.emplace(attr, values & *other);
  }
  if (out.empty()) throw EmptyIntersectionError();
  return {f.space_ptr(), std::move(out)};
}

/// The space extended with the negated twin of every attribute, appended in
/// declaration order. A space already closed under negation is returned as is.
inline SpacePtr negation_closure(const SpacePtr& space) {
  std::vector<std::string> attributes = space->attributes();
  for (const auto& name : space->attributes()) {
    std::string twin = negated_attribute(name);
    if (!space->attribute_index(twin)) attributes.push_back(std::move(twin));
  }
  if (attributes.size() == space->attribute_count()) return space;
  return make_space(space->universe(), std::move(attributes));
}

inline SoftSet soft_complement(const SoftSet& f,
                               ComplementConvention conv = ComplementConvention::SameAttributes) {
  if (conv == ComplementConvention::SameAttributes) {
    SoftSet::Assignment out;
    for (const auto& [attr, values] : f.assignment()) out.emplace(attr, ~values);
    return {f.space_ptr(), std::move(out)};
  }
  SpacePtr extended = negation_closure(f.space_ptr());
  SoftSet::Assignment out;
  for (const auto& [attr, values] : f.assignment()) {
    const auto twin = extended->attribute_index(negated_attribute(f.space().attributes()[attr]));
    out.emplace(*twin, ~values);
  }
  return {std::move(extended), std::move(out)};
}

/// A soft set and its complement expressed in one common space, ready to be
/// compared. Under NegatedAttributes the original is lifted into the
/// negation-closed space.
struct ComplementPair {
  SoftSet original;
  SoftSet complement;
};

inline ComplementPair complement_pair(const SoftSet& f, ComplementConvention conv) {
  SoftSet c = soft_complement(f, conv);
  if (c.space_ptr() == f.space_ptr()) return {f, std::move(c)};
  return {f.rebased(c.space_ptr()), std::move(c)};
}

}  // namespace softsim

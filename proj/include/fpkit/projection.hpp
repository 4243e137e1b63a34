#pragma once

#include <string>
#include <vector>

#include "fpkit/word.hpp"

namespace fpkit {

/// Per-factor normal subgroups N_j of a factor family. The normal closure H
/// of their union is the kernel of the induced projection onto the free
/// product of the quotients G_j / N_j; that kernel predicate is the only
/// representation of H used anywhere (H has infinite index in general).
struct QuotientSpec {
  FactorFamily family;
  std::vector<Subgroup> normals;  // one per factor
  std::vector<std::string> factor_names;
  bool allow_multi = false;

  /// Factors with a nontrivial normal subgroup.
  std::vector<int> quotiented_factors() const;

  bool same_as(const QuotientSpec& other) const;
};

/// Validates the subgroup/normality of each entry. At most one factor may
/// carry a nontrivial subgroup unless allow_multi is set. Missing names
/// default to G<j>.
QuotientSpec make_spec(FactorFamily family, std::vector<std::vector<int>> normal_elements,
                       bool allow_multi = false, std::vector<std::string> names = {});

/// The morphism pi from the free product of the G_j onto the free product of
/// the quotients G_j / N_j. Factors with trivial quotient disappear from the
/// target (their letters map to the empty word); the rest survive in order.
class ProjectionMap {
 public:
  const QuotientSpec& spec() const { return spec_; }
  const FactorFamily& source() const { return spec_.family; }
  const FactorFamily& target() const { return target_; }

  /// True when every factor has trivial quotient, i.e. the target free
  /// product is trivial and the closure is the whole group.
  bool degenerate() const { return target_.size() == 0; }

  bool quotiented(int source_factor) const { return spec_.normals[source_factor].order() > 1; }
  const std::vector<int>& quotiented_factors() const { return quotiented_; }

  int target_factor(int source_factor) const { return to_target_[source_factor]; }
  int source_factor(int target_factor) const { return to_source_[target_factor]; }

  /// Image of a factor element in its quotient (block index), or -1 when the
  /// factor is dropped.
  int image_element(int source_factor, int element) const;

  /// The section lift of a quotient block back into the factor.
  int section_element(int source_factor, int block) const;

 private:
  friend ProjectionMap build_projection(const QuotientSpec&);
  ProjectionMap() = default;

  QuotientSpec spec_;
  FactorFamily target_;
  std::vector<int> to_target_;               // source factor -> target factor or -1
  std::vector<int> to_source_;               // target factor -> source factor
  std::vector<std::vector<int>> letter_map_;  // per source factor: element -> block
  std::vector<std::vector<int>> section_;     // per source factor: block -> element
  std::vector<int> quotiented_;
};

ProjectionMap build_projection(const QuotientSpec& spec);

/// Letterwise image of u under pi, reduced in the target family.
ReducedWord project(const ProjectionMap& p, const ReducedWord& u);

/// Letterwise lift of a target word: quotient letters lift through the
/// section, untouched factors lift identically. project(lift_word(w)) = w.
ReducedWord lift_word(const ProjectionMap& p, const ReducedWord& target_word);

/// Membership in the normal closure H = ker pi.
bool in_normal_closure(const ProjectionMap& p, const ReducedWord& u);

/// The generators g a g^-1 of H, for every conjugator g of length up to
/// max_conjugator_length and every nonidentity a in a nontrivial N_j,
/// reduced and deduplicated, in enumeration order.
std::vector<ReducedWord> closure_generators(const ProjectionMap& p, int max_conjugator_length);

}  // namespace fpkit

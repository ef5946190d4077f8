#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hurwitz/braid.hpp"
#include "hurwitz/cover.hpp"
#include "hurwitz/nielsen.hpp"

namespace hurwitz {

/// Finite parameter space: point ids partitioned into named connected
/// components.
struct FiniteBase {
  std::vector<std::string> points;                              // sorted
  std::map<std::string, std::vector<std::string>> components;   // name -> sorted points

  static FiniteBase discrete(std::vector<std::string> points);
  static FiniteBase connected(std::vector<std::string> points, std::string name = "S");

  // Throws UsageError unless the components partition the points.
  void validate() const;
  const std::string& component_of(const std::string& point) const;
  bool has_point(const std::string& point) const;

  friend bool operator==(const FiniteBase&, const FiniteBase&) = default;
};

/// Set-level family of pointed covers: one monodromy invariant per base
/// point, with a common group, base genus and branch count.
struct PointedFamily {
  FiniteBase base;
  std::map<std::string, MonodromyInvariant> assignment;

  // Divisor degrees equal n everywhere, and the branching type is constant
  // on every connected component of the base.
  void validate() const;
  bool empty() const { return assignment.empty(); }

  friend bool operator==(const PointedFamily&, const PointedFamily&) = default;
};

struct BaseMorphism {
  FiniteBase source;
  FiniteBase target;
  std::map<std::string, std::string> map;

  static BaseMorphism identity(const FiniteBase& base);
  static BaseMorphism constant(const FiniteBase& source, const FiniteBase& target, const std::string& point);
  // Every point mapped into the target, each source component into a single
  // target component.
  void validate() const;
};

// outer o inner, i.e. first inner then outer.
BaseMorphism compose(const BaseMorphism& outer, const BaseMorphism& inner);

using ClassifyingMap = std::map<std::string, MonodromyInvariant>;

ClassifyingMap classifying_map(const PointedFamily& F);
PointedFamily pullback(const PointedFamily& F, const BaseMorphism& u);

struct UniversalFamily {
  PointedFamily family;
  // False when the base components could not be computed (genus > 0); the
  // components are then singletons.
  bool components_known = true;
};

/// One base point per tuple of the fiber over `divisor`, with ids
/// "<prefix>u<index>". For genus 0 the components are the braid orbits.
UniversalFamily universal_family(const GroupPtr& group, std::size_t genus, std::size_t n,
                                 const BranchDivisor& divisor, const EnumerationOptions& options = {},
                                 const std::string& prefix = {});

/// The universal family over (G, g, n) in indexed form, built once and
/// shared between roundtrip checks. Base points over a divisor D are named
/// "<D>|u<i>" after the position i of their tuple in the sorted fiber.
class UniversalIndex {
 public:
  UniversalIndex(GroupPtr group, std::size_t genus, std::size_t n, const EnumerationOptions& options = {});

  const GroupPtr& group() const { return group_; }
  std::size_t genus() const { return genus_; }
  std::size_t branch_count() const { return n_; }
  const std::vector<HurwitzTuple>& fiber() const { return fiber_; }
  // False for genus > 0, where every point is its own component.
  bool components_known() const { return components_known_; }

  std::optional<std::size_t> find(const HurwitzTuple& t) const;
  std::string point_id(const std::string& prefix, std::size_t i) const;
  std::string component_id(const std::string& prefix, std::size_t i) const;

  // The universal family over D restricted to the points with the given
  // fiber indices; components are intersected with the restriction.
  PointedFamily restrict(const BranchDivisor& D, const std::string& prefix,
                         const std::vector<std::size_t>& indices) const;

 private:
  GroupPtr group_;
  std::size_t genus_ = 0;
  std::size_t n_ = 0;
  std::vector<HurwitzTuple> fiber_;  // sorted
  std::vector<std::size_t> component_;
  bool components_known_ = true;
  std::size_t width_ = 1;
};

struct PointCheck {
  std::string point;
  bool passed = false;
  std::string message;
};

struct CheckReport {
  std::vector<PointCheck> entries;  // sorted by point id
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Pulls the universal family back along the classifying map (or along a
/// supplied map) and checks each point against F with the identity as the
/// unique pointed witness.
CheckReport fine_roundtrip_check(const PointedFamily& F, const EnumerationOptions& options = {},
                                 const std::optional<ClassifyingMap>& claimed = std::nullopt);
// Same check against a prebuilt universal index with matching parameters.
CheckReport fine_roundtrip_check(const PointedFamily& F, const UniversalIndex& universal,
                                 const std::optional<ClassifyingMap>& claimed = std::nullopt);

std::map<std::string, UnpointedInvariant> unpointed_classifying(const PointedFamily& F);

struct CoarseReport {
  std::size_t pointed = 0;
  std::size_t classes = 0;               // conjugation orbits
  std::size_t equivalence_classes = 0;   // classes of cover models under unpointed equivalence
  std::size_t expected_fiber = 0;        // |G| / |Z(G)|
  std::vector<std::size_t> fiber_sizes;  // pointed preimage size per class
  std::size_t witnesses_per_pair = 0;    // common witness count, 0 when empty
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

CoarseReport coarse_check(const GroupPtr& group, std::size_t genus, std::size_t n,
                          const EnumerationOptions& options = {});

/// Random valid family over the fiber: a few components, each over one
/// divisor and inside one component of the universal family.
PointedFamily random_family(const std::vector<HurwitzTuple>& fiber, const std::vector<BraidOrbit>& components,
                            std::mt19937_64& rng);
// Replaces the invariant at `point` by a different one of the same
// branching type (or moves its divisor when no other tuple qualifies).
PointedFamily perturb_family(const PointedFamily& F, const std::string& point,
                             const std::vector<HurwitzTuple>& fiber, std::mt19937_64& rng);

}  // namespace hurwitz

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace blf {

using ComponentId = std::string;

struct FiberComponent {
  ComponentId id;
  std::int64_t genus = 0;

  bool operator==(const FiberComponent&) const = default;
};

/// A regular fiber: a non-empty set of closed orientable surfaces, kept
/// sorted by component id.
class FiberDescription {
 public:
  FiberDescription() = default;  // empty; only valid as a placeholder
  explicit FiberDescription(std::vector<FiberComponent> components);

  const std::vector<FiberComponent>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  const FiberComponent* find(const ComponentId& id) const;
  std::int64_t total_genus() const;

  /// Multiset of genera in ascending order; two fibers with equal profiles are
  /// diffeomorphic.
  std::vector<std::int64_t> genus_profile() const;

  bool operator==(const FiberDescription&) const = default;

 private:
  std::vector<FiberComponent> components_;
};

struct SurgeryDescriptor {
  enum class Kind { nonseparating, separating };

  Kind kind = Kind::nonseparating;
  ComponentId component;
  std::int64_t g1 = 0;  // separating only
  std::int64_t g2 = 0;

  static SurgeryDescriptor nonseparating(ComponentId c);
  static SurgeryDescriptor separating(ComponentId c, std::int64_t g1, std::int64_t g2);

  bool operator==(const SurgeryDescriptor&) const = default;
};

std::int64_t euler_of_fiber(const FiberDescription& fiber);

bool is_applicable(const FiberDescription& fiber, const SurgeryDescriptor& s);

/// Fiberwise 2-handle. Throws Error(not_applicable) when the descriptor does
/// not fit the fiber.
FiberDescription apply_surgery(const FiberDescription& fiber, const SurgeryDescriptor& s);

/// Diffeomorphic fibers: same multiset of genera.
bool equivalent(const FiberDescription& a, const FiberDescription& b);

/// True iff crossing against the arrow from `low` by the inverse 1-handle of
/// `s` yields `high`, i.e. apply_surgery(high, s) is equivalent to low.
bool reverse_crossing(const FiberDescription& low, const SurgeryDescriptor& s,
                      const FiberDescription& high);

/// Ids of the components produced by a separating surgery on `c`; the first
/// carries the smaller genus.
std::pair<ComponentId, ComponentId> derived_ids(const ComponentId& c);

/// Genus-preserving bijection from the components of `from` to those of `to`,
/// pairing components in (genus, id) order. Empty when not equivalent.
std::optional<std::map<ComponentId, ComponentId>> component_matching(
    const FiberDescription& from, const FiberDescription& to);

/// Every descriptor applicable to `fiber`, in a fixed order.
std::vector<SurgeryDescriptor> applicable_surgeries(const FiberDescription& fiber);

/// A fiber with one extra 1-handle together with the surgery that undoes it.
struct HandleAddition {
  FiberDescription fiber;
  SurgeryDescriptor undo;
};

/// All ways of attaching one fiberwise 1-handle to `fiber`: adding a genus to a
/// component, or joining two components (the joined one keeps the first id).
std::vector<HandleAddition> handle_additions(const FiberDescription& fiber);

/// Given surgeries `first` on `fiber` and `second` on the result, finds
/// descriptors for crossing the two circles in the opposite order. Returns
/// nullopt when no genus-level reordering exists.
struct CommutedPair {
  SurgeryDescriptor first;   // acts on `fiber`
  SurgeryDescriptor second;  // acts on apply_surgery(fiber, first)
};
std::optional<CommutedPair> commute_surgeries(const FiberDescription& fiber,
                                              const SurgeryDescriptor& first,
                                              const SurgeryDescriptor& second);

std::string to_string(const FiberDescription& fiber);
std::string to_string(const SurgeryDescriptor& s);

}  // namespace blf

#include "blf/fiber.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "blf/error.hpp"

namespace blf {

FiberDescription::FiberDescription(std::vector<FiberComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw Error(ErrorCode::invalid_argument, "fiber must have at least one component");
  }
  std::sort(components_.begin(), components_.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].id.empty()) {
      throw Error(ErrorCode::invalid_argument, "empty component id");
    }
    if (components_[i].genus < 0) {
      throw Error(ErrorCode::invalid_argument,
                  "negative genus on component " + components_[i].id);
    }
    if (i > 0 && components_[i].id == components_[i - 1].id) {
      throw Error(ErrorCode::duplicate_id, "duplicate component id " + components_[i].id);
    }
  }
}

const FiberComponent* FiberDescription::find(const ComponentId& id) const {
  auto it = std::lower_bound(components_.begin(), components_.end(), id,
                             [](const FiberComponent& c, const ComponentId& key) { return c.id < key; });
  if (it == components_.end() || it->id != id) return nullptr;
  return &*it;
}

std::int64_t FiberDescription::total_genus() const {
  std::int64_t g = 0;
  for (const auto& c : components_) g += c.genus;
  return g;
}

std::vector<std::int64_t> FiberDescription::genus_profile() const {
  std::vector<std::int64_t> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.genus);
  std::sort(out.begin(), out.end());
  return out;
}

SurgeryDescriptor SurgeryDescriptor::nonseparating(ComponentId c) {
  return {Kind::nonseparating, std::move(c), 0, 0};
}

SurgeryDescriptor SurgeryDescriptor::separating(ComponentId c, std::int64_t g1, std::int64_t g2) {
  return {Kind::separating, std::move(c), g1, g2};
}

std::int64_t euler_of_fiber(const FiberDescription& fiber) {
  std::int64_t chi = 0;
  for (const auto& c : fiber.components()) chi += 2 - 2 * c.genus;
  return chi;
}

std::pair<ComponentId, ComponentId> derived_ids(const ComponentId& c) {
  return {c + "a", c + "b"};
}

namespace {

std::string why_not_applicable(const FiberDescription& fiber, const SurgeryDescriptor& s) {
  const FiberComponent* comp = fiber.find(s.component);
  if (comp == nullptr) return "no component " + s.component + " in fiber " + to_string(fiber);
  if (s.kind == SurgeryDescriptor::Kind::nonseparating) {
    if (comp->genus < 1) return "component " + s.component + " is a sphere";
    return {};
  }
  if (s.g1 < 0 || s.g2 < 0) return "negative genus in separating descriptor";
  if (s.g1 + s.g2 != comp->genus) {
    return "component " + s.component + " has genus " + std::to_string(comp->genus) +
           ", not " + std::to_string(s.g1) + "+" + std::to_string(s.g2);
  }
  auto [a, b] = derived_ids(s.component);
  if (fiber.find(a) != nullptr || fiber.find(b) != nullptr) {
    return "derived ids of " + s.component + " already in use";
  }
  return {};
}

}  // namespace

bool is_applicable(const FiberDescription& fiber, const SurgeryDescriptor& s) {
  return why_not_applicable(fiber, s).empty();
}

FiberDescription apply_surgery(const FiberDescription& fiber, const SurgeryDescriptor& s) {
  if (auto why = why_not_applicable(fiber, s); !why.empty()) {
    throw Error(ErrorCode::not_applicable, to_string(s) + ": " + why);
  }
  std::vector<FiberComponent> out;
  for (const auto& c : fiber.components()) {
    if (c.id != s.component) {
      out.push_back(c);
    } else if (s.kind == SurgeryDescriptor::Kind::nonseparating) {
      out.push_back({c.id, c.genus - 1});
    } else {
      auto [a, b] = derived_ids(c.id);
      out.push_back({a, std::min(s.g1, s.g2)});
      out.push_back({b, std::max(s.g1, s.g2)});
    }
  }
  return FiberDescription(std::move(out));
}

bool equivalent(const FiberDescription& a, const FiberDescription& b) {
  return a.genus_profile() == b.genus_profile();
}

bool reverse_crossing(const FiberDescription& low, const SurgeryDescriptor& s,
                      const FiberDescription& high) {
  if (low.empty() || high.empty() || !is_applicable(high, s)) return false;
  return equivalent(apply_surgery(high, s), low);
}

std::optional<std::map<ComponentId, ComponentId>> component_matching(
    const FiberDescription& from, const FiberDescription& to) {
  if (!equivalent(from, to)) return std::nullopt;
  auto order = [](const FiberDescription& f) {
    std::vector<FiberComponent> v = f.components();
    std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
      return x.genus < y.genus;  // ids already ascending
    });
    return v;
  };
  auto a = order(from);
  auto b = order(to);
  // Prefer the identity on components that keep both id and genus.
  std::map<ComponentId, ComponentId> result;
  std::set<ComponentId> used;
  for (const auto& c : a) {
    if (const auto* t = to.find(c.id); t != nullptr && t->genus == c.genus) {
      result[c.id] = c.id;
      used.insert(c.id);
    }
  }
  for (const auto& c : a) {
    if (result.count(c.id)) continue;
    for (const auto& t : b) {
      if (t.genus == c.genus && !used.count(t.id)) {
        result[c.id] = t.id;
        used.insert(t.id);
        break;
      }
    }
  }
  return result;
}

std::vector<SurgeryDescriptor> applicable_surgeries(const FiberDescription& fiber) {
  std::vector<SurgeryDescriptor> out;
  for (const auto& c : fiber.components()) {
    if (c.genus >= 1) out.push_back(SurgeryDescriptor::nonseparating(c.id));
    for (std::int64_t g1 = 0; g1 * 2 <= c.genus; ++g1) {
      auto s = SurgeryDescriptor::separating(c.id, g1, c.genus - g1);
      if (is_applicable(fiber, s)) out.push_back(s);
    }
  }
  return out;
}

std::vector<HandleAddition> handle_additions(const FiberDescription& fiber) {
  std::vector<HandleAddition> out;
  const auto& comps = fiber.components();
  for (const auto& c : comps) {
    std::vector<FiberComponent> v = comps;
    for (auto& x : v) {
      if (x.id == c.id) ++x.genus;
    }
    out.push_back({FiberDescription(std::move(v)), SurgeryDescriptor::nonseparating(c.id)});
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      std::vector<FiberComponent> v;
      for (std::size_t k = 0; k < comps.size(); ++k) {
        if (k == i) {
          v.push_back({comps[i].id, comps[i].genus + comps[j].genus});
        } else if (k != j) {
          v.push_back(comps[k]);
        }
      }
      FiberDescription joined(std::move(v));
      auto undo = SurgeryDescriptor::separating(comps[i].id, comps[i].genus, comps[j].genus);
      if (is_applicable(joined, undo)) out.push_back({std::move(joined), undo});
    }
  }
  return out;
}

std::optional<CommutedPair> commute_surgeries(const FiberDescription& fiber,
                                              const SurgeryDescriptor& first,
                                              const SurgeryDescriptor& second) {
  const FiberDescription target = apply_surgery(apply_surgery(fiber, first), second);

  auto works = [&](const SurgeryDescriptor& a, const SurgeryDescriptor& b) {
    if (!is_applicable(fiber, a)) return false;
    auto mid = apply_surgery(fiber, a);
    return is_applicable(mid, b) && equivalent(apply_surgery(mid, b), target);
  };

  // Candidates in preference order: same circle kinds as the original order,
  // then everything else.
  auto ranked = [](std::vector<SurgeryDescriptor> v, const SurgeryDescriptor& like) {
    std::stable_partition(v.begin(), v.end(), [&](const auto& s) { return s.kind == like.kind; });
    std::stable_partition(v.begin(), v.end(), [&](const auto& s) { return s == like; });
    return v;
  };

  for (const auto& a : ranked(applicable_surgeries(fiber), second)) {
    auto mid = apply_surgery(fiber, a);
    for (const auto& b : ranked(applicable_surgeries(mid), first)) {
      if (works(a, b)) return CommutedPair{a, b};
    }
  }
  return std::nullopt;
}

std::string to_string(const FiberDescription& fiber) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : fiber.components()) {
    if (!first) os << ',';
    first = false;
    os << c.id << ':' << c.genus;
  }
  return os.str();
}

std::string to_string(const SurgeryDescriptor& s) {
  if (s.kind == SurgeryDescriptor::Kind::nonseparating) return "nonsep(" + s.component + ")";
  return "sep(" + s.component + "," + std::to_string(s.g1) + "," + std::to_string(s.g2) + ")";
}

}  // namespace blf

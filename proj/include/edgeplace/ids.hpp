#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>

namespace edgeplace {

/// Index into one of the topology's collections, tagged so that a device
/// index cannot be passed where a link index is expected.
template <typename Tag>
struct Id {
  std::size_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::size_t v) : value(v) {}

  constexpr auto operator<=>(const Id&) const = default;
};

template <typename Tag>
std::ostream& operator<<(std::ostream& os, Id<Tag> id) {
  return os << id.value;
}

using SiteId = Id<struct SiteTag>;
using DeviceId = Id<struct DeviceTag>;
using LinkId = Id<struct LinkTag>;
using InputNodeId = Id<struct InputNodeTag>;

}  // namespace edgeplace

template <typename Tag>
struct std::hash<edgeplace::Id<Tag>> {
  std::size_t operator()(edgeplace::Id<Tag> id) const noexcept {
    return std::hash<std::size_t>{}(id.value);
  }
};

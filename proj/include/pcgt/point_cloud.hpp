#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcgt {

using Vec3 = std::array<double, 3>;

// One named per-point attribute array, e.g. "Y" or "R".
struct Channel {
  std::string name;
  std::vector<double> values;
};

// Point cloud with positions and named attribute channels. Point order is
// identity: index i refers to the same point in every channel, and encoder
// and decoder must see the same order.
struct PointCloud {
  std::vector<Vec3> positions;
  std::vector<Channel> channels;

  std::size_t point_count() const { return positions.size(); }

  const std::vector<double>* find_channel(std::string_view name) const {
    for (const auto& c : channels)
      if (c.name == name) return &c.values;
    return nullptr;
  }

  std::vector<double>* find_channel(std::string_view name) {
    for (auto& c : channels)
      if (c.name == name) return &c.values;
    return nullptr;
  }

  const std::vector<double>& channel(std::string_view name) const {
    if (const auto* v = find_channel(name)) return *v;
    throw std::runtime_error("point cloud: missing channel \"" + std::string(name) + "\"");
  }

  bool has_channel(std::string_view name) const { return find_channel(name) != nullptr; }

  // Adds or replaces a channel. The array length must equal point_count.
  std::vector<double>& set_channel(std::string name, std::vector<double> values) {
    if (values.size() != positions.size())
      throw std::invalid_argument("point cloud: channel \"" + name + "\" has " +
                                  std::to_string(values.size()) + " values for " +
                                  std::to_string(positions.size()) + " points");
    if (auto* existing = find_channel(name)) {
      *existing = std::move(values);
      return *existing;
    }
    channels.push_back(Channel{std::move(name), std::move(values)});
    return channels.back().values;
  }

  void validate() const {
    for (const auto& c : channels)
      if (c.values.size() != positions.size())
        throw std::runtime_error("point cloud: channel \"" + c.name + "\" length mismatch");
  }
};

}  // namespace pcgt

// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fanogeo {

/// Ordered partition of the subsystems {0, .., M-1} into disjoint groups.
/// Group members are kept sorted ascending; the group order is meaningful
/// (it fixes coordinate ordering elsewhere) and is preserved as given.
struct Partition {
  std::vector<std::vector<int>> groups;

  /// Total number of subsystems covered.
  int qudits() const;
  /// Number of groups.
  int group_count() const { return int(groups.size()); }
  /// Index of the group containing the given subsystem (-1 if absent).
  int group_of(int subsystem) const;

  /// Throws std::invalid_argument unless the groups are nonempty, disjoint,
  /// sorted, and cover exactly {0, .., qudits-1}.
  void check(int qudits) const;

  /// Text form with 1-based subsystems, e.g. "1,2|3".
  std::string to_string() const;

  /// Parses the 1-based text form. Members may appear unsorted within a
  /// group and surrounded by spaces; group order is preserved.
  static Partition parse(std::string_view text, int qudits);

  /// The single-group partition {1..M} and the all-singletons partition.
  static Partition trivial(int qudits);
  static Partition finest(int qudits);

  bool operator==(const Partition&) const = default;
};

/// Every partition of {0, .., M-1}, ordered coarsest to finest (ascending
/// group count, restricted-growth order within a level). Supports M <= 6;
/// larger M is refused (the count grows too fast to enumerate usefully).
std::vector<Partition> all_partitions(int qudits);

}  // namespace fanogeo

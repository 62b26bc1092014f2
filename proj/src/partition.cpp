// SPDX-License-Identifier: MIT
#include "fanogeo/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace fanogeo {

int Partition::qudits() const {
  int total = 0;
  for (const auto& g : groups) total += int(g.size());
  return total;
}

int Partition::group_of(int subsystem) const {
  for (size_t l = 0; l < groups.size(); ++l)
    if (std::find(groups[l].begin(), groups[l].end(), subsystem) != groups[l].end())
      return int(l);
  return -1;
}

void Partition::check(int expected_qudits) const {
  if (groups.empty()) throw std::invalid_argument("partition: no groups");
  std::vector<bool> seen(size_t(expected_qudits), false);
  for (const auto& g : groups) {
    if (g.empty()) throw std::invalid_argument("partition: empty group");
    for (size_t i = 0; i < g.size(); ++i) {
      const int s = g[i];
      if (s < 0 || s >= expected_qudits)
        throw std::invalid_argument("partition: subsystem index out of range");
      if (seen[size_t(s)]) throw std::invalid_argument("partition: duplicate subsystem");
      seen[size_t(s)] = true;
      if (i > 0 && g[i - 1] >= s)
        throw std::invalid_argument("partition: group members must be sorted ascending");
    }
  }
  for (bool b : seen)
    if (!b) throw std::invalid_argument("partition: does not cover all subsystems");
}

std::string Partition::to_string() const {
  std::string out;
  for (size_t l = 0; l < groups.size(); ++l) {
    if (l > 0) out += '|';
    for (size_t i = 0; i < groups[l].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(groups[l][i] + 1);
    }
  }
  return out;
}

Partition Partition::parse(std::string_view text, int qudits) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  Partition p;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t bar = std::min(text.find('|', pos), text.size());
    std::string_view grp = text.substr(pos, bar - pos);
    std::vector<int> members;
    size_t gpos = 0;
    while (gpos <= grp.size()) {
      const size_t comma = std::min(grp.find(',', gpos), grp.size());
      std::string_view tok = trim(grp.substr(gpos, comma - gpos));
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("partition: cannot parse member '" + std::string(tok) + "'");
      members.push_back(value - 1);  // external form is 1-based
      gpos = comma + 1;
      if (comma == grp.size()) break;
    }
    std::sort(members.begin(), members.end());
    p.groups.push_back(std::move(members));
    pos = bar + 1;
    if (bar == text.size()) break;
  }
  p.check(qudits);
  return p;
}

Partition Partition::trivial(int qudits) {
  Partition p;
  p.groups.emplace_back();
  for (int i = 0; i < qudits; ++i) p.groups[0].push_back(i);
  return p;
}

Partition Partition::finest(int qudits) {
  Partition p;
  for (int i = 0; i < qudits; ++i) p.groups.push_back({i});
  return p;
}

std::vector<Partition> all_partitions(int qudits) {
  if (qudits < 1) throw std::invalid_argument("all_partitions: qudits must be >= 1");
  if (qudits > 6)
    throw std::invalid_argument("all_partitions: refusing more than 6 subsystems");
  // Enumerate restricted-growth strings a with a[0] = 0,
  // a[i] <= 1 + max(a[0..i-1]).
  std::vector<Partition> out;
  std::vector<int> a(size_t(qudits), 0);
  auto emit = [&] {
    Partition p;
    const int ngroups = *std::max_element(a.begin(), a.end()) + 1;
    p.groups.assign(size_t(ngroups), {});
    for (int i = 0; i < qudits; ++i) p.groups[size_t(a[size_t(i)])].push_back(i);
    out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, int i, int maxv) -> void {
    if (i == qudits) {
      emit();
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      a[size_t(i)] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  rec(rec, 1, 0);
  std::stable_sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
    return x.group_count() < y.group_count();
  });
  return out;
}

}  // namespace fanogeo

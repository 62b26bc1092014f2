// SPDX-License-Identifier: MIT
#include "doctest.h"
#include "fanogeo/partition.hpp"

#include <stdexcept>

using namespace fanogeo;

TEST_CASE("partition text form parses and round-trips") {
  Partition p = Partition::parse("1,2|3", 3);
  REQUIRE(p.group_count() == 2);
  CHECK(p.groups[0] == std::vector<int>{0, 1});
  CHECK(p.groups[1] == std::vector<int>{2});
  CHECK(p.to_string() == "1,2|3");

  // Unsorted members and spaces are accepted; group order is preserved.
  Partition q = Partition::parse(" 3 | 2 , 1 ", 3);
  CHECK(q.groups[0] == std::vector<int>{2});
  CHECK(q.groups[1] == std::vector<int>{0, 1});
  CHECK(q.to_string() == "3|1,2");

  CHECK(Partition::parse("1|2|3|4", 4) == Partition::finest(4));
  CHECK(Partition::parse("1,2,3", 3) == Partition::trivial(3));
}

TEST_CASE("malformed partition text is rejected") {
  CHECK_THROWS_AS(Partition::parse("", 2), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,|2", 2), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1|2", 3), std::invalid_argument);    // missing 3
  CHECK_THROWS_AS(Partition::parse("1,4|2", 3), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(Partition::parse("1,1|2", 2), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(Partition::parse("a|b", 2), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("0|1", 2), std::invalid_argument);    // 1-based form
  CHECK_THROWS_AS(Partition::parse("1||2", 2), std::invalid_argument);
}

TEST_CASE("group lookup and counts") {
  Partition p = Partition::parse("1,3|2", 3);
  CHECK(p.qudits() == 3);
  CHECK(p.group_of(0) == 0);
  CHECK(p.group_of(1) == 1);
  CHECK(p.group_of(2) == 0);
  CHECK(p.group_of(5) == -1);
}

TEST_CASE("three-subsystem partitions enumerate coarsest to finest") {
  std::vector<Partition> all = all_partitions(3);
  REQUIRE(all.size() == 5);
  CHECK(all[0].to_string() == "1,2,3");
  CHECK(all[1].to_string() == "1,2|3");
  CHECK(all[2].to_string() == "1,3|2");
  CHECK(all[3].to_string() == "1|2,3");
  CHECK(all[4].to_string() == "1|2|3");
}

TEST_CASE("partition counts follow the Bell numbers") {
  CHECK(all_partitions(1).size() == 1);
  CHECK(all_partitions(2).size() == 2);
  CHECK(all_partitions(4).size() == 15);
  CHECK(all_partitions(5).size() == 52);
  CHECK(all_partitions(6).size() == 203);
  CHECK_THROWS_AS(all_partitions(7), std::invalid_argument);
  CHECK_THROWS_AS(all_partitions(0), std::invalid_argument);
}

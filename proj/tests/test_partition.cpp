#include "doctest.h"

#include "densityforge/partition.hpp"

using namespace df;

TEST_CASE("conjugate hand values and involution") {
  CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  for (int d = 0; d <= 12; ++d)
    for (const auto& lam : enumerate_partitions(d))
      CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("insert_sorted keeps weak decrease and drops zero parts") {
  CHECK(insert_sorted(2, Partition({3, 1})) == Partition({3, 2, 1}));
  CHECK(insert_sorted(0, Partition({1, 1})) == Partition({1, 1}));
  CHECK(insert_sorted(3, Partition({3})) == Partition({3, 3}));
  for (int d = 0; d <= 8; ++d)
    for (const auto& lam : enumerate_partitions(d))
      for (int m = 0; m <= 4; ++m)
        CHECK(insert_sorted(m, lam).size() == m + lam.size());
}

TEST_CASE("enumeration order and partition counts") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
  CHECK(enumerate_partitions(3) ==
        std::vector<Partition>{Partition({3}), Partition({2, 1}),
                               Partition({1, 1, 1})});
  CHECK(enumerate_partitions(4, 2) ==
        std::vector<Partition>{Partition({4}), Partition({3, 1}),
                               Partition({2, 2})});
  const int p[] = {1,  1,  2,  3,  5,   7,   11,  15,  22,  30, 42,
                   56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
  for (int d = 0; d <= 20; ++d)
    CHECK(enumerate_partitions(d).size() == size_t(p[d]));
}

TEST_CASE("n statistic") {
  CHECK(n_stat(Partition({3})) == 0);
  CHECK(n_stat(Partition({1, 1, 1})) == 3);
  CHECK(n_stat(Partition({2, 2, 1})) == 4);
}

TEST_CASE("serialization round trip") {
  CHECK(Partition({3, 1, 1}).to_string() == "3,1,1");
  CHECK(Partition().to_string() == "-");
  CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
  CHECK(Partition::parse("-") == Partition());
}

TEST_CASE("dominance order") {
  CHECK(dominates(Partition({3}), Partition({2, 1})));
  CHECK(dominates(Partition({2, 1}), Partition({1, 1, 1})));
  CHECK(!dominates(Partition({1, 1, 1}), Partition({2, 1})));
  CHECK(dominates(Partition({2, 2}), Partition({2, 2})));
}

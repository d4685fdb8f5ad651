#include "hyperfun/types.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace hyperfun;

TEST_CASE("multi-index stream walks shells in order") {
    MultiIndexStream stream(2, 2);
    std::vector<int> idx;
    std::vector<std::vector<int>> seen;
    while (stream.next(idx)) seen.push_back(idx);
    std::vector<std::vector<int>> want = {{0, 0}, {1, 0}, {0, 1},
                                          {2, 0}, {1, 1}, {0, 2}};
    CHECK(seen == want);
}

TEST_CASE("multi-index enumeration counts binomial shell sizes") {
    auto all = iterate_multi_indices(3, 4);
    // sum_{s=0}^{4} C(s+2, 2) = 1 + 3 + 6 + 10 + 15
    CHECK(all.size() == 35);
    int shells[5] = {0, 0, 0, 0, 0};
    for (const auto& mi : all) shells[mi.total()]++;
    CHECK(shells[0] == 1);
    CHECK(shells[2] == 6);
    CHECK(shells[4] == 15);
}

TEST_CASE("composition advance covers a fixed total exactly once") {
    std::vector<int> comp = {3, 0, 0};
    int count = 1;
    while (next_composition(comp)) {
        CHECK(comp[0] + comp[1] + comp[2] == 3);
        ++count;
    }
    CHECK(count == 10);
}

TEST_CASE("compensated accumulation beats naive summation") {
    CompensatedSum<double> acc;
    double naive = 0.0;
    acc.add(1.0);
    naive += 1.0;
    for (int i = 0; i < 10000000; ++i) {
        acc.add(1e-16);
        naive += 1e-16;
    }
    double want = 1.0 + 1e-9;
    CHECK(std::abs(acc.value() - want) < 1e-18);
    CHECK(std::abs(naive - want) > 1e-10);
}

TEST_CASE("parameter validation rejects malformed inputs") {
    HaParams bad_sizes{0.5, {0.3, 0.4}, {0.6}};
    CHECK_THROWS_AS(bad_sizes.validate(), ValidationError);
    HaParams pole{0.5, {0.3}, {-1.0}};
    CHECK_THROWS_AS(pole.validate(), PoleError);
    HaParams fine{0.5, {0.3}, {0.6}};
    CHECK_NOTHROW(fine.validate());
}

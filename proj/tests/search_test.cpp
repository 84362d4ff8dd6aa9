#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "oracle.hpp"
#include "ucs/search.hpp"

using namespace ucs;

// Golden counts computed with the brute-force subfamily filter before the
// enumerator was written.
static constexpr std::uint64_t kGoldenCounts[] = {0, 1, 6, 60, 2479};

TEST_CASE("enumeration counts match the frozen oracle values") {
    for (int n = 1; n <= 4; ++n) CHECK(count_union_closed(n) == kGoldenCounts[n]);
}

TEST_CASE("n = 2 enumeration is exactly the six known families") {
    std::set<std::vector<SetMask>> got;
    for (const Family& f : enumerate_union_closed(2)) got.insert(f.members());
    std::set<std::vector<SetMask>> expect = {{1}, {2}, {3}, {1, 3}, {2, 3}, {1, 2, 3}};
    CHECK(got == expect);
}

TEST_CASE("enumerator equals the brute-force filter, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        std::set<std::vector<SetMask>> got;
        for (const Family& f : enumerate_union_closed(n)) got.insert(f.members());
        std::set<std::vector<SetMask>> expect;
        for (const auto& raw : oracle::enumerate_union_closed(n)) expect.insert(raw);
        CHECK(got == expect);
    }
}

TEST_CASE("every enumerated family is union-closed and the order is stable") {
    auto a = enumerate_union_closed(3);
    auto b = enumerate_union_closed(3);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k] == b[k]);
        CHECK(is_union_closed(a[k]));
    }
}

TEST_CASE("enumeration caps") {
    CHECK_THROWS_AS(count_union_closed(5), universe_too_large);
    CHECK_THROWS_AS(count_union_closed(6, true), universe_too_large);
}

TEST_CASE("sampling basics") {
    Family f = sample_union_closed(6, 1, 99);
    CHECK(f.size() == 1);
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        CHECK(is_union_closed(sample_union_closed(7, 5, seed)));
}

TEST_CASE("sampling is deterministic") {
    CHECK(sample_union_closed(8, 20, 42) == sample_union_closed(8, 20, 42));
}

TEST_CASE("frozen sample vectors") {
    // frozen from an independent splitmix64 implementation
    CHECK(sample_union_closed(4, 3, 1).members() == std::vector<SetMask>{1, 5, 6, 7});
    CHECK(sample_union_closed(6, 5, 7).members() == std::vector<SetMask>{1, 25, 31, 62, 63});
    CHECK(sample_union_closed(8, 8, 42).members() ==
          std::vector<SetMask>{14, 40, 46, 62, 109, 111, 127, 236, 237, 238, 239, 249, 251, 253,
                               254, 255});
}

TEST_CASE("arbitrary family supply is deterministic") {
    CHECK(sample_arbitrary_family(8, 20, 7) == sample_arbitrary_family(8, 20, 7));
}

#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "ucs/family.hpp"
#include "ucs/search.hpp"

using namespace ucs;

TEST_CASE("make_family builds, dedups, rejects") {
    Family f = make_family(2, {{1}, {2}, {1, 2}});
    CHECK(f.members() == std::vector<SetMask>{1, 2, 3});

    CHECK(make_family(2, {{1}, {1}}).size() == 1);

    CHECK_THROWS_AS(make_family(2, {{}}), empty_set_rejected);
    CHECK_THROWS_AS(make_family(17, {{1}}), universe_too_large);
    CHECK_THROWS_AS(make_family(2, {{3}}), element_out_of_range);
}

TEST_CASE("full_universe counts") {
    CHECK(full_universe(3).size() == 7);
    CHECK(full_universe(1).members() == std::vector<SetMask>{1});
    CHECK(subfamily_containing(full_universe(3), 1).size() == 4);
    CHECK(subfamily_containing(full_universe(3), 2).size() == 4);
    CHECK_THROWS_AS(full_universe(17), universe_too_large);
}

TEST_CASE("is_union_closed and least witness") {
    CHECK(is_union_closed(make_family(2, {{1}, {2}, {1, 2}})));

    auto chk = check_union_closed(make_family(2, {{1}, {2}}));
    REQUIRE_FALSE(chk.closed);
    CHECK(chk.violation == std::make_pair(SetMask{1}, SetMask{2}));

    CHECK(is_union_closed(make_family(3, {{3}, {1, 2, 3}})));
}

TEST_CASE("union_closure") {
    Family f = make_family(2, {{1}, {2}});
    CHECK(union_closure(f) == make_family(2, {{1}, {2}, {1, 2}}));
    CHECK(union_closure(make_family(3, {{1}, {2}, {3}})) == full_universe(3));
}

TEST_CASE("union_closure is idempotent and extensive") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Family f = sample_arbitrary_family(6, 8, seed);
        Family c = union_closure(f);
        CHECK(union_closure(c) == c);
        for (SetMask m : f.members()) CHECK(c.contains(m));
        CHECK(is_union_closed(c) == (c == union_closure(c)));
        CHECK(is_union_closed(f) == (c == f));
    }
}

TEST_CASE("subfamily_containing") {
    Family f = make_family(3, {{3}, {1, 2, 3}});
    CHECK(subfamily_containing(f, 3).size() == 2);
    CHECK(subfamily_containing(f, 1) == make_family(3, {{1, 2, 3}}));
    CHECK_THROWS_AS(subfamily_containing(f, 4), element_out_of_range);
}

TEST_CASE("complement_family") {
    CHECK(complement_family(full_universe(3)).empty());
    Family f = make_family(3, {{3}, {1, 2, 3}});
    CHECK(complement_family(f) == make_family(3, {{1}, {2}, {1, 2}, {1, 3}, {2, 3}}));
    CHECK(complement_family(make_family(2, {{1, 2}})) == make_family(2, {{1}, {2}}));
}

TEST_CASE("complement partitions the universe") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Family f = sample_arbitrary_family(5, 10, seed);
        Family d = complement_family(f);
        CHECK(f.size() + d.size() == (1u << 5) - 1);
        for (SetMask m : d.members()) CHECK_FALSE(f.contains(m));
    }
}

TEST_CASE("check_conjecture") {
    ConjectureVerdict v = check_conjecture(make_family(2, {{1}, {1, 2}}));
    CHECK(v.holds);
    CHECK(v.abundant_elements == std::vector<int>{1, 2});
    CHECK(v.identity_checked);

    ConjectureVerdict w = check_conjecture(make_family(3, {{3}, {1, 2, 3}}));
    CHECK(w.holds);
    CHECK(std::find(w.abundant_elements.begin(), w.abundant_elements.end(), 3) !=
          w.abundant_elements.end());

    CHECK_THROWS_AS(check_conjecture(Family(2, {})), empty_family);
}

TEST_CASE("conjecture holds on all union-closed families up to n = 3") {
    for (const auto& raw : oracle::enumerate_union_closed(3)) {
        Family f(3, raw);
        ConjectureVerdict v = check_conjecture(f);
        CHECK(v.holds);
        CHECK(v.identity_checked);
    }
}

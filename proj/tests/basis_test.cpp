#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "ucs/basis.hpp"
#include "ucs/search.hpp"

using namespace ucs;

TEST_CASE("basis examples") {
    CHECK(basis(full_universe(2)) == make_family(2, {{1}, {2}}));
    // Y = Z is allowed by the quantifier but never produces a different set
    CHECK(basis(make_family(2, {{1}, {1, 2}})) == make_family(2, {{1}, {1, 2}}));
    CHECK(basis(make_family(3, {{1, 3}})) == make_family(3, {{1, 3}}));
}

TEST_CASE("basis matches the definition-level oracle on all families, n = 3") {
    for (std::uint64_t idx = 1; idx < (1u << 7); ++idx) {
        oracle::Fam raw = oracle::family_at(3, idx);
        Family f(3, raw);
        CHECK(basis(f).members() == oracle::basis(raw));
    }
}

TEST_CASE("no basis member is a union of two other basis members") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Family f = sample_arbitrary_family(6, 12, seed);
        const Family b = basis(f);
        for (SetMask y : b.members())
            for (SetMask z : b.members()) {
                SetMask u = y | z;
                if (u != y && u != z) CHECK_FALSE(b.contains(u));
            }
    }
}

TEST_CASE("decompose examples") {
    BasisDecomposition d = decompose(full_universe(2), 3);
    CHECK(d.parts == std::vector<SetMask>{1, 2});

    Family f = make_family(2, {{1}, {1, 2}});
    CHECK(decompose(f, 3).parts == std::vector<SetMask>{3});  // basis member: itself

    BasisDecomposition e = decompose(full_universe(3), 7);
    SetMask u = 0;
    for (SetMask p : e.parts) {
        u |= p;
        CHECK(popcount(p) == 1);  // basis of A is the singletons
    }
    CHECK(u == 7);

    CHECK_THROWS_AS(decompose(make_family(2, {{1}}), 3), not_a_member);
}

// Lemma 1: every member decomposes into basis parts, union-closed or not.
TEST_CASE("decompose succeeds on every member of every family, n = 3") {
    for (std::uint64_t idx = 1; idx < (1u << 7); ++idx) {
        Family f(3, oracle::family_at(3, idx));
        const Family b = basis(f);
        for (SetMask x : f.members()) {
            BasisDecomposition d = decompose(f, x);
            SetMask u = 0;
            for (SetMask p : d.parts) {
                CHECK(b.contains(p));
                u |= p;
            }
            CHECK(u == x);
        }
    }
}

TEST_CASE("decompose succeeds on random families, n = 8") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Family f = sample_arbitrary_family(8, 20, seed);
        const Family b = basis(f);
        for (SetMask x : f.members()) {
            BasisDecomposition d = decompose(f, x);
            SetMask u = 0;
            for (SetMask p : d.parts) {
                CHECK(b.contains(p));
                u |= p;
            }
            CHECK(u == x);
        }
    }
}

// Lemma 2: deleting a basis member of a union-closed family keeps it closed.
TEST_CASE("basis members delete cleanly from union-closed families, n = 3") {
    for (const auto& raw : oracle::enumerate_union_closed(3)) {
        Family f(3, raw);
        const Family b = basis(f);
        for (SetMask bm : b.members()) CHECK(is_union_closed(f.without(bm)));
    }
}

// Lemma 3: deleting a non-basis member never shrinks the basis.
TEST_CASE("basis is stable under non-basis deletion, n = 3 exhaustive and n = 8 random") {
    for (std::uint64_t idx = 1; idx < (1u << 7); ++idx) {
        Family f(3, oracle::family_at(3, idx));
        const Family b = basis(f);
        for (SetMask z : f.members()) {
            if (b.contains(z)) continue;
            const Family b2 = basis(f.without(z));
            for (SetMask t : b.members()) CHECK(b2.contains(t));
        }
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Family f = sample_arbitrary_family(8, 16, seed);
        const Family b = basis(f);
        for (SetMask z : f.members()) {
            if (b.contains(z)) continue;
            const Family b2 = basis(f.without(z));
            for (SetMask t : b.members()) CHECK(b2.contains(t));
        }
    }
}

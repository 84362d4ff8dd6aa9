#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracle.hpp"
#include "ucs/predicates.hpp"
#include "ucs/quasiminimal.hpp"
#include "ucs/search.hpp"

using namespace ucs;

TEST_CASE("extension") {
    CHECK(extension(1, 6, 3) == make_family(3, {{1}, {1, 2}, {1, 3}, {1, 2, 3}}));
    CHECK(extension(3, 1, 2) == make_family(2, {{1, 2}}));  // X subset Y collapses
    CHECK(extension(1, 2, 3) == make_family(3, {{1}, {1, 2}}));
    CHECK_THROWS_AS(extension(1, 1u << 5, 3), element_out_of_range);
    CHECK_THROWS_AS(extension(0, 1, 3), empty_set_rejected);
}

TEST_CASE("extension size and endpoints") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        SplitMix64 rng(seed);
        const int n = 5;
        SetMask y = static_cast<SetMask>(rng.next() % universe_mask(n)) + 1;
        SetMask x = static_cast<SetMask>(rng.next() % (universe_mask(n) + 1));
        Family e = extension(y, x, n);
        CHECK(e.size() == (std::size_t{1} << popcount(x & ~y)));
        CHECK(e.contains(y));
        CHECK(e.contains(y | x));
    }
}

TEST_CASE("is_vincolated") {
    Family f = make_family(3, {{3}, {1, 2, 3}});
    auto w = vincolated_witness(f, 1);  // X = {1}
    REQUIRE(w);
    CHECK(w->y == 4);       // Y = {3}
    CHECK(w->result == 5);  // {1,3} in D

    CHECK_FALSE(is_vincolated(make_family(2, {{1, 2}}), 1));
    CHECK_THROWS_AS(is_vincolated(full_universe(2), 1), not_in_complement);
    CHECK_THROWS_AS(is_vincolated(f, 4), not_in_complement);  // {3} is in F
}

// The vincolated predicate's two characterizations, with the X|Y = X degenerate case carved
// out: X|Y = X is never a closure violation of F|{X} since X is present.
TEST_CASE("vincolated characterization equivalence, exhaustive n = 3") {
    for (const auto& raw : oracle::enumerate_union_closed(3)) {
        Family f(3, raw);
        const Family d = complement_family(f);
        for (SetMask x : d.members()) {
            bool exists_y = false;
            for (SetMask y : f.members()) {
                SetMask u = x | y;
                if (u != x && !f.contains(u)) exists_y = true;
            }
            Family aug = f.with(x);
            CHECK(exists_y == !is_union_closed(aug));
            CHECK(exists_y == is_vincolated(f, x));
        }
    }
}

// The naive phrasing (some Y in F with X|Y in D, X itself allowed) is
// strictly weaker: counterexample F = {{1}}, X = {1,2}.
TEST_CASE("naive vincolated rephrasing is not equivalent") {
    Family f = make_family(2, {{1}});
    SetMask x = 3;  // {1,2}
    bool literal = false;
    for (SetMask y : f.members())
        if (!f.contains(x | y)) literal = true;  // x|y = x, still "in D"
    CHECK(literal);
    CHECK_FALSE(is_vincolated(f, x));
}

TEST_CASE("is_vincolated_to") {
    Family f = make_family(3, {{3}, {1, 2, 3}});
    CHECK(is_vincolated_to(f, 1, 5));        // X={1} to Y={1,3}
    CHECK_FALSE(is_vincolated_to(f, 1, 6));  // F|{X,{2,3}} still misses {1,3}

    Family g = make_family(2, {{1, 2}});
    // X={1} not vincolated, so not vincolated to anything
    CHECK_FALSE(is_vincolated_to(g, 1, 2));
    CHECK_THROWS_AS(is_vincolated_to(g, 1, 1), not_in_complement);
}

// Lemma 4: F | D^j is union-closed, every union-closed F, every j. n = 3.
TEST_CASE("F union D^j stays union-closed, exhaustive n = 3") {
    for (const auto& raw : oracle::enumerate_union_closed(3)) {
        Family f(3, raw);
        const Family d = complement_family(f);
        for (int j = 1; j <= 3; ++j) {
            Family fj = f;
            const Family dj = subfamily_containing(d, j);
            for (SetMask m : dj.members()) fj = fj.with(m);
            CHECK(is_union_closed(fj));
        }
    }
}

TEST_CASE("minimal_elements") {
    CHECK(minimal_elements(make_family(3, {{1}, {2}, {1, 2}, {1, 3}, {2, 3}})) ==
          std::vector<int>{3});
    CHECK(minimal_elements(Family(3, {})) == std::vector<int>{1, 2, 3});
    CHECK(minimal_elements(make_family(2, {{1}})) == std::vector<int>{2});
}

TEST_CASE("minimal_elements commutes with relabeling") {
    // swap elements 1 and 2 of the universe
    auto relabel = [](SetMask m) {
        SetMask out = m & ~SetMask{3};
        if (m & 1) out |= 2;
        if (m & 2) out |= 1;
        return out;
    };
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Family d = sample_arbitrary_family(4, 8, seed);
        std::vector<SetMask> relabeled;
        for (SetMask m : d.members()) relabeled.push_back(relabel(m));
        Family d2(4, std::move(relabeled));
        std::vector<int> mins = minimal_elements(d);
        std::vector<int> expect;
        for (int j : mins) expect.push_back(j == 1 ? 2 : j == 2 ? 1 : j);
        std::sort(expect.begin(), expect.end());
        CHECK(minimal_elements(d2) == expect);
        CHECK_FALSE(minimal_elements(d2).empty());
    }
}

namespace {

// Definition-level quasiminimality oracle: clauses 1-3 inline, clause 4 by
// trying every deletion order of A - (F - {Y1,Y2}) that ends Y1 then Y2.
bool oracle_quasiminimal(const oracle::Fam& f, int n, int i, oracle::Mask y1, oracle::Mask y2) {
    const oracle::Mask bit = oracle::Mask{1} << (i - 1);
    if (!(y2 & bit) || (y1 & bit)) return false;
    oracle::Fam dy = oracle::complement(n, f);
    dy.push_back(y1);
    dy.push_back(y2);
    auto freq = [&](int k) {
        std::size_t c = 0;
        for (oracle::Mask m : dy) c += (m >> (k - 1)) & 1u;
        return c;
    };
    for (int k = 1; k <= n; ++k)
        if (freq(k) < freq(i)) return false;

    oracle::Fam target = oracle::without(oracle::without(f, y1), y2);
    oracle::Fam pool = oracle::complement(n, target);
    pool = oracle::without(oracle::without(pool, y1), y2);
    std::sort(pool.begin(), pool.end());
    auto try_order = [&](const oracle::Fam& prefix) {
        std::vector<oracle::Mask> dels = prefix;
        dels.push_back(y1);
        dels.push_back(y2);
        std::size_t t = dels.size();
        if (!(dels[t - 1] & bit) || (dels[t - 2] & bit)) return false;
        // all steps union-closed
        oracle::Fam cur;
        for (oracle::Mask m = 1; m <= ((oracle::Mask{1} << n) - 1); ++m) cur.push_back(m);
        for (oracle::Mask d : dels) {
            cur = oracle::without(cur, d);
            if (!oracle::union_closed(cur)) return false;
        }
        // ideal(i) split of the prefix, relative to target|{y1,y2} = F
        std::size_t dsz = prefix.size(), di = 0;
        for (oracle::Mask m : prefix) di += (m & bit) != 0;
        for (std::size_t k = 0; k < prefix.size(); ++k) {
            bool has = (prefix[k] & bit) != 0;
            if (k < dsz - di && has) return false;
            if (k >= dsz - di && !has) return false;
        }
        return true;
    };
    do {
        if (try_order(pool)) return true;
    } while (std::next_permutation(pool.begin(), pool.end()));
    return false;
}

}  // namespace

TEST_CASE("quasiminimal clause violations") {
    Family f = full_universe(3).without(1);  // all but {1}
    // clause 1: i not in Y2
    CHECK_FALSE(is_quasiminimal(f, 1, 2, 6));  // Y2 = {2,3} lacks 1
    // F - {Y1,Y2} not union-closed kills clause 4
    CHECK_FALSE(is_quasiminimal(f, 3, 3, 7));  // removing {1,2},{1,2,3} leaves 3|5=7 missing
    CHECK_THROWS_AS(is_quasiminimal(f, 1, 1, 7), not_a_member);   // {1} not in F
    CHECK_THROWS_AS(is_quasiminimal(f, 1, 7, 7), not_a_member);   // Y1 = Y2
}

TEST_CASE("quasiminimal agrees with the exhaustive definition oracle, n <= 3") {
    auto families = oracle::enumerate_union_closed(3);
    // a deterministic spread of union-closed instances
    for (std::size_t k = 0; k < families.size(); k += 7) {
        Family f(3, families[k]);
        for (int i = 1; i <= 3; ++i)
            for (SetMask y1 : f.members())
                for (SetMask y2 : f.members()) {
                    if (y1 == y2) continue;
                    bool expect = oracle_quasiminimal(families[k], 3, i, y1, y2);
                    CHECK(is_quasiminimal(f, i, y1, y2) == expect);
                }
    }
}

TEST_CASE("quasiminimal certificate is a valid optimal sequence with the stated tail") {
    auto families = oracle::enumerate_union_closed(3);
    for (std::size_t k = 0; k < families.size(); k += 11) {
        Family f(3, families[k]);
        for (int i = 1; i <= 3; ++i)
            for (SetMask y1 : f.members())
                for (SetMask y2 : f.members()) {
                    if (y1 == y2) continue;
                    auto cert = quasiminimal_certificate(f, i, y1, y2);
                    if (!cert) continue;
                    const auto& dels = cert->sequence.deletions;
                    REQUIRE(dels.size() >= 2);
                    CHECK(dels[dels.size() - 2] == y1);
                    CHECK(dels.back() == y2);
                    CHECK(validate_sequence(cert->sequence).valid);
                }
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "ucs/io.hpp"
#include "ucs/search.hpp"
#include "ucs/sequences.hpp"

using namespace ucs;

TEST_CASE("family file parse and render") {
    std::istringstream in(
        "# a comment\n"
        "n 3\n"
        "\n"
        "1\n"
        "1,3\n"
        "1, 2, 3\n");
    ParsedFamily pf = parse_family(in);
    CHECK(pf.family == make_family(3, {{1}, {1, 3}, {1, 2, 3}}));
    CHECK(pf.warnings.empty());

    std::ostringstream out;
    render_family(out, pf.family);
    std::istringstream back(out.str());
    CHECK(parse_family(back).family == pf.family);
}

TEST_CASE("family file edge cases") {
    std::istringstream dup("n 2\n1\n1\n");
    ParsedFamily pf = parse_family(dup);
    CHECK(pf.family.size() == 1);
    CHECK(pf.warnings.size() == 1);

    std::istringstream empty_set("n 2\n{}\n");
    CHECK_THROWS_AS(parse_family(empty_set), empty_set_rejected);

    std::istringstream stripped("n 2\n{}\n1\n");
    ParsedFamily ps = parse_family(stripped, true);
    CHECK(ps.family == make_family(2, {{1}}));
    CHECK(ps.warnings.size() == 1);

    std::istringstream no_header("1,2\n");
    CHECK_THROWS_AS(parse_family(no_header), parse_error);

    std::istringstream bad_elem("n 2\n5\n");
    CHECK_THROWS_AS(parse_family(bad_elem), element_out_of_range);
}

TEST_CASE("family round-trip property") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Family f = sample_union_closed(6, 6, seed);
        std::ostringstream out;
        render_family(out, f);
        std::istringstream back(out.str());
        CHECK(parse_family(back).family == f);
    }
}

TEST_CASE("sequence file parse and render") {
    Family f = make_family(2, {{1, 2}});
    DeletionSequence seq = build_ideal_sequence(f, 1);
    std::ostringstream out;
    render_sequence(out, seq);
    std::istringstream back(out.str());
    ParsedSequence ps = parse_sequence(back);
    CHECK(ps.sequence.target == seq.target);
    CHECK(ps.sequence.deletions == seq.deletions);
    CHECK(ps.sequence.kind == SeqKind::ideal);
    CHECK(ps.sequence.element == 1);
    CHECK(validate_sequence(ps.sequence).valid);
}

TEST_CASE("sequence file structural check on load") {
    std::istringstream in(
        "n 2\n"
        "1,2\n"
        "delete 1\n"
        "kind uc\n");  // {2} neither deleted nor in target
    CHECK_THROWS_AS(parse_sequence(in), malformed_sequence);

    std::istringstream bad_kind(
        "n 2\n"
        "1,2\n"
        "delete 1\n"
        "delete 2\n"
        "kind wobbly\n");
    CHECK_THROWS_AS(parse_sequence(bad_kind), parse_error);
}

TEST_CASE("sequence kinds round-trip through the tag") {
    for (int n = 2; n <= 3; ++n) {
        Family f = make_family(n, {{1, 2}});
        for (SeqKind k : {SeqKind::plain, SeqKind::union_closed}) {
            DeletionSequence seq{n, f, complement_family(f).members(), k, 0};
            std::ostringstream out;
            render_sequence(out, seq);
            std::istringstream back(out.str());
            CHECK(parse_sequence(back).sequence.kind == k);
        }
    }
}

#ifndef UCS_QUASIMINIMAL_HPP
#define UCS_QUASIMINIMAL_HPP

#include <optional>

#include "ucs/sequences.hpp"

// Quasiminimality: element i is quasiminimal on D for {Y1, Y2} (Y1, Y2 in F)
// when i is in Y2 but not Y1, i is minimal on D | {Y1, Y2}, and some optimal
// sequence for i from A to F - {Y1, Y2} deletes Y1 then Y2 last.

namespace ucs {

struct QuasiminimalCertificate {
    int i = 0;
    SetMask y1 = 0;
    SetMask y2 = 0;
    DeletionSequence sequence;  // optimal(i) to F - {Y1, Y2}, ending Y1 then Y2
};

namespace detail {

// Least deletion order (lexicographic over mask lists) realizing the
// clause-4 sequence, by exhaustive search over prefix permutations.
// Only viable for tiny universes.
inline std::optional<DeletionSequence> quasiminimal_exhaustive(const Family& g, int i, SetMask y1,
                                                               SetMask y2) {
    std::vector<SetMask> pool = complement_family(g).members();
    pool.erase(std::remove(pool.begin(), pool.end(), y1), pool.end());
    pool.erase(std::remove(pool.begin(), pool.end(), y2), pool.end());
    std::sort(pool.begin(), pool.end());
    do {
        DeletionSequence seq{g.universe_size(), g, pool, SeqKind::optimal, i};
        seq.deletions.push_back(y1);
        seq.deletions.push_back(y2);
        if (validate_sequence(seq).valid) return seq;
    } while (std::next_permutation(pool.begin(), pool.end(), std::less<SetMask>()));
    return std::nullopt;
}

}  // namespace detail

/// Test the four quasiminimality clauses. Clause 4 is decided constructively
/// (ideal sequence to F, then Y1, Y2) with an exhaustive fallback over
/// deletion orders when n <= 3. The returned certificate, if any, is the
/// constructive sequence or the least exhaustive one.
inline std::optional<QuasiminimalCertificate> quasiminimal_certificate(const Family& f, int i,
                                                                       SetMask y1, SetMask y2) {
    if (!f.contains(y1) || !f.contains(y2))
        throw not_a_member("quasiminimal: Y1 and Y2 must be members of F");
    if (y1 == y2) throw not_a_member("quasiminimal: Y1 and Y2 must differ");
    const int n = f.universe_size();
    if (i < 1 || i > n) throw element_out_of_range("quasiminimal: element outside universe");
    const SetMask bit = SetMask{1} << (i - 1);
    if (!(y2 & bit)) return std::nullopt;  // clause 1
    if (y1 & bit) return std::nullopt;     // clause 2
    const Family d_plus_y = complement_family(f).with(y1).with(y2);
    const auto mins = minimal_elements(d_plus_y);  // clause 3
    if (!std::binary_search(mins.begin(), mins.end(), i)) return std::nullopt;

    // clause 4: optimal(i) sequence from A to F - {Y1, Y2} ending Y1 then Y2.
    const Family g = f.without(y1).without(y2);
    if (!is_union_closed(g)) return std::nullopt;  // the target must itself be union-closed
    if (is_union_closed(f)) {
        try {
            // The sequence's ideal(i) prefix ends at F, so try our ideal
            // constructor for the prefix and bolt the two deletions on.
            DeletionSequence seq = detail::build_ideal_unchecked(f, i);
            seq.target = g;
            seq.kind = SeqKind::optimal;
            seq.element = i;
            seq.deletions.push_back(y1);
            seq.deletions.push_back(y2);
            if (validate_sequence(seq).valid)
                return QuasiminimalCertificate{i, y1, y2, std::move(seq)};
        } catch (const construction_blocked&) {
            // fall through to the exhaustive search
        }
    }
    if (n <= 3) {
        if (auto seq = detail::quasiminimal_exhaustive(g, i, y1, y2))
            return QuasiminimalCertificate{i, y1, y2, std::move(*seq)};
    }
    return std::nullopt;
}

inline bool is_quasiminimal(const Family& f, int i, SetMask y1, SetMask y2) {
    return quasiminimal_certificate(f, i, y1, y2).has_value();
}

}  // namespace ucs

#endif

#ifndef UCS_SEQUENCES_HPP
#define UCS_SEQUENCES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ucs/basis.hpp"
#include "ucs/predicates.hpp"

// Deletion sequences from the full universe A down to a target family F,
// their validators, and the constructive procedures for union-closed,
// ideal and optimal sequences. Constructions the theory predicts can never
// fail are still allowed to fail here, and surface as RefutationReports.

namespace ucs {

enum class SeqKind { plain, union_closed, ideal, optimal };

inline std::string seq_kind_name(SeqKind k) {
    switch (k) {
        case SeqKind::plain: return "plain";
        case SeqKind::union_closed: return "uc";
        case SeqKind::ideal: return "ideal";
        case SeqKind::optimal: return "optimal";
    }
    return "?";
}

struct DeletionSequence {
    int universe_size = 1;
    Family target;                   // the family F deleted down to
    std::vector<SetMask> deletions;  // X_1 ... X_t, in deletion order
    SeqKind kind = SeqKind::plain;
    int element = 0;  // the i of ideal(i) / optimal(i); 0 otherwise
};

struct StepReport {
    SetMask deleted = 0;
    bool union_closed = false;
    std::optional<std::pair<SetMask, SetMask>> violation;
};

struct ValidationReport {
    bool valid = false;
    std::string reason;  // empty when valid
    std::vector<StepReport> steps;
};

namespace detail {

// by-size order: nondecreasing cardinality, ties by mask value.
inline bool size_then_bits(SetMask a, SetMask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
}

// Checks the ideal split of `deletions` against a target whose deleted
// complement is `d`: all i-free deletions first, all i-sets after.
inline bool ideal_split_ok(const std::vector<SetMask>& deletions, const Family& d, int i,
                           std::string& reason) {
    const SetMask bit = SetMask{1} << (i - 1);
    const std::size_t cutoff = d.size() - subfamily_containing(d, i).size();
    for (std::size_t k = 0; k < deletions.size(); ++k) {
        const bool has_i = (deletions[k] & bit) != 0;
        if (k < cutoff && has_i) {
            reason = "deletion " + std::to_string(k + 1) + " contains element " +
                     std::to_string(i) + " before the ideal cutoff";
            return false;
        }
        if (k >= cutoff && !has_i) {
            reason = "deletion " + std::to_string(k + 1) + " lacks element " + std::to_string(i) +
                     " after the ideal cutoff";
            return false;
        }
    }
    return true;
}

}  // namespace detail

/// Structural + kind-specific validation. Structural breakage (deletions not
/// partitioning A - F) throws malformed_sequence; everything else is
/// reported in the returned ValidationReport.
inline ValidationReport validate_sequence(const DeletionSequence& seq) {
    const int n = seq.universe_size;
    require_universe(n);
    if (seq.target.universe_size() != n)
        throw malformed_sequence("target universe differs from sequence universe");

    // deletions distinct, disjoint from target, and jointly covering A - F
    std::vector<SetMask> sorted = seq.deletions;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw malformed_sequence("duplicate deletion");
    for (SetMask m : sorted) {
        if (m == 0 || (m & ~universe_mask(n))) throw malformed_sequence("deletion outside universe");
        if (seq.target.contains(m))
            throw malformed_sequence("deletion " + mask_to_string(m) + " belongs to the target");
    }
    if (seq.target.size() + sorted.size() != (std::size_t{1} << n) - 1)
        throw malformed_sequence("deletions do not partition A - F");
    if ((seq.kind == SeqKind::ideal || seq.kind == SeqKind::optimal) &&
        (seq.element < 1 || seq.element > n))
        throw malformed_sequence("ideal/optimal sequence requires an element in 1..n");

    ValidationReport rep;
    Family cur = full_universe(n);
    rep.steps.reserve(seq.deletions.size());
    for (SetMask x : seq.deletions) {
        cur = cur.without(x);
        auto chk = check_union_closed(cur);
        rep.steps.push_back({x, chk.closed, chk.violation});
    }

    switch (seq.kind) {
        case SeqKind::plain:
            rep.valid = true;
            return rep;
        case SeqKind::union_closed:
        case SeqKind::ideal:
        case SeqKind::optimal:
            for (const auto& s : rep.steps)
                if (!s.union_closed) {
                    rep.reason = "family after deleting " + mask_to_string(s.deleted) +
                                 " is not union-closed";
                    return rep;
                }
            break;
    }

    if (seq.kind == SeqKind::ideal) {
        const Family d = complement_family(seq.target);
        if (!detail::ideal_split_ok(seq.deletions, d, seq.element, rep.reason)) return rep;
    } else if (seq.kind == SeqKind::optimal) {
        const std::size_t t = seq.deletions.size();
        const SetMask bit = SetMask{1} << (seq.element - 1);
        if (t < 2) {
            rep.reason = "optimal sequence needs at least two deletions";
            return rep;
        }
        if (!(seq.deletions[t - 1] & bit)) {
            rep.reason = "last deletion must contain element " + std::to_string(seq.element);
            return rep;
        }
        if (seq.deletions[t - 2] & bit) {
            rep.reason = "second-to-last deletion must avoid element " + std::to_string(seq.element);
            return rep;
        }
        // prefix must be an ideal(i) sequence down to F | {X_t, X_{t-1}}
        const Family prefix_target = seq.target.with(seq.deletions[t - 1]).with(seq.deletions[t - 2]);
        const Family d = complement_family(prefix_target);
        std::vector<SetMask> prefix(seq.deletions.begin(), seq.deletions.end() - 2);
        if (!detail::ideal_split_ok(prefix, d, seq.element, rep.reason)) return rep;
    }
    rep.valid = true;
    return rep;
}

enum class SeqStrategy { greedy_basis, by_size };

/// Union-closed sequence from A to F. greedy_basis deletes, at every step,
/// the least basis member of the current family outside F; by_size deletes
/// D in nondecreasing cardinality (ties by mask value).
inline DeletionSequence build_union_closed_sequence(const Family& f, SeqStrategy strategy) {
    if (f.empty()) throw empty_family("sequence target must be nonempty");
    if (!is_union_closed(f)) throw not_union_closed("sequence target must be union-closed");
    const int n = f.universe_size();
    DeletionSequence seq{n, f, {}, SeqKind::union_closed, 0};
    if (strategy == SeqStrategy::by_size) {
        seq.deletions = complement_family(f).members();
        std::sort(seq.deletions.begin(), seq.deletions.end(), detail::size_then_bits);
        return seq;
    }
    Family cur = full_universe(n);
    while (cur.size() > f.size()) {
        SetMask pick = 0;
        const Family curb = basis(cur);
        for (SetMask b : curb.members())
            if (!f.contains(b)) {
                pick = b;
                break;
            }
        if (pick == 0)
            throw construction_blocked("basis of the current family is contained in the target");
        seq.deletions.push_back(pick);
        cur = cur.without(pick);
    }
    return seq;
}

namespace detail {

// Ideal construction without the D^i != empty precondition: greedy
// union-closed phase down to F | D^i, then D^i in by-size order.
inline DeletionSequence build_ideal_unchecked(const Family& f, int i) {
    const Family d = complement_family(f);
    const Family di = subfamily_containing(d, i);
    Family phase1_target = f;
    for (SetMask m : di.members()) phase1_target = phase1_target.with(m);
    DeletionSequence seq = build_union_closed_sequence(phase1_target, SeqStrategy::greedy_basis);
    seq.target = f;
    seq.kind = SeqKind::ideal;
    seq.element = i;
    std::vector<SetMask> tail = di.members();
    std::sort(tail.begin(), tail.end(), size_then_bits);
    seq.deletions.insert(seq.deletions.end(), tail.begin(), tail.end());
    return seq;
}

}  // namespace detail

/// Ideal sequence for i from A to F: delete D - D^i first (greedy
/// union-closed order), then D^i in nondecreasing cardinality.
inline DeletionSequence build_ideal_sequence(const Family& f, int i) {
    if (f.empty()) throw empty_family("sequence target must be nonempty");
    if (!is_union_closed(f)) throw not_union_closed("sequence target must be union-closed");
    if (i < 1 || i > f.universe_size())
        throw element_out_of_range("element " + std::to_string(i) + " outside universe");
    if (subfamily_containing(complement_family(f), i).empty())
        throw empty_deleted_subfamily("D^" + std::to_string(i) + " is empty");
    return detail::build_ideal_unchecked(f, i);
}

struct Theorem3Witness {
    SetMask y = 0;  // in D - D^i, vincolated
    SetMask r = 0;  // in D^i, not vincolated; y is vincolated to r
    bool y_vincolated = false;
    bool r_not_vincolated = false;
    bool y_vincolated_to_r = false;
};

struct RefutationReport {
    std::string claim;
    std::string detail;
    // the offending deletions, when the refutation is a constructed sequence
    // failing validation; empty otherwise
    std::vector<SetMask> sequence_deletions;
};

struct PreconditionNotMet {
    std::string detail;
};

using Theorem3Outcome = std::variant<Theorem3Witness, PreconditionNotMet, RefutationReport>;

/// Search for the pair promised when every member of D - D^i is vincolated:
/// a Y there vincolated to a non-vincolated R in D^i. Scan order follows the
/// proof's maximum-cardinality choice: both Y and R by descending size, ties
/// by ascending mask. Exhaustive failure is a refutation, not an error.
inline Theorem3Outcome find_theorem3_witness(const Family& f, int i) {
    if (f.empty() || !is_union_closed(f)) return PreconditionNotMet{"F is not union-closed"};
    if (i < 1 || i > f.universe_size()) return PreconditionNotMet{"element outside universe"};
    const Family d = complement_family(f);
    const SetMask bit = SetMask{1} << (i - 1);
    std::vector<SetMask> d_minus_di, di;
    for (SetMask m : d.members()) (m & bit ? di : d_minus_di).push_back(m);
    if (d_minus_di.empty()) return PreconditionNotMet{"D - D^i is empty"};
    for (SetMask m : d_minus_di)
        if (!is_vincolated(f, m))
            return PreconditionNotMet{"hypothesis fails: " + mask_to_string(m) +
                                      " in D - D^i is not vincolated"};
    auto desc = [](SetMask a, SetMask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa > pb : a < b;
    };
    std::sort(d_minus_di.begin(), d_minus_di.end(), desc);
    std::sort(di.begin(), di.end(), desc);
    for (SetMask y : d_minus_di)
        for (SetMask r : di) {
            if (is_vincolated(f, r)) continue;
            if (is_vincolated_to(f, y, r))
                return Theorem3Witness{y, r, true, true, true};
        }
    return RefutationReport{"T3", "no vincolated Y in D - D^i is vincolated to a non-vincolated R in D^i"};
}

using OptimalOutcome = std::variant<DeletionSequence, PreconditionNotMet, RefutationReport>;

/// Optimal sequence for i, following the two-case construction: if all of
/// D - D^i is vincolated, end with the Theorem-3 pair (Y then R); otherwise
/// take a non-vincolated X*, build the ideal sequence to F | {X*} and swap
/// its tail so the last two deletions are X* then the final i-set. The
/// result is validated rather than trusted; a failure is a refutation.
inline OptimalOutcome build_optimal_sequence(const Family& f, int i) {
    if (f.empty() || !is_union_closed(f)) return PreconditionNotMet{"F is not union-closed"};
    if (i < 1 || i > f.universe_size()) return PreconditionNotMet{"element outside universe"};
    const Family d = complement_family(f);
    const Family di = subfamily_containing(d, i);
    if (di.empty()) return PreconditionNotMet{"D^i is empty"};
    if (di.size() == d.size()) return PreconditionNotMet{"D^i equals D"};

    SetMask x_star = 0;
    for (SetMask m : d.members())
        if (!di.contains(m) && !is_vincolated(f, m)) {
            x_star = m;
            break;
        }

    DeletionSequence seq{f.universe_size(), f, {}, SeqKind::optimal, i};
    try {
        if (x_star == 0) {
            // case 1: every member of D - D^i is vincolated
            Theorem3Outcome t3 = find_theorem3_witness(f, i);
            if (auto* ref = std::get_if<RefutationReport>(&t3))
                return RefutationReport{"L6", "Theorem 3 yields no pair: " + ref->detail};
            if (auto* pre = std::get_if<PreconditionNotMet>(&t3)) return *pre;
            const auto& w = std::get<Theorem3Witness>(t3);
            DeletionSequence prefix =
                detail::build_ideal_unchecked(f.with(w.y).with(w.r), i);
            seq.deletions = prefix.deletions;
            seq.deletions.push_back(w.y);
            seq.deletions.push_back(w.r);
        } else {
            // case 2: ideal sequence to F | {X*}, tail reordered
            DeletionSequence ideal = detail::build_ideal_unchecked(f.with(x_star), i);
            if (ideal.deletions.empty())
                return RefutationReport{"L6", "ideal sequence to F | {X*} is empty"};
            SetMask last_i_set = ideal.deletions.back();
            seq.deletions.assign(ideal.deletions.begin(), ideal.deletions.end() - 1);
            seq.deletions.push_back(x_star);
            seq.deletions.push_back(last_i_set);
        }
    } catch (const construction_blocked& e) {
        return RefutationReport{"L6", std::string("greedy construction blocked: ") + e.what()};
    }
    ValidationReport rep = validate_sequence(seq);
    if (!rep.valid)
        return RefutationReport{"L6", "constructed sequence fails validation: " + rep.reason,
                                seq.deletions};
    return seq;
}

}  // namespace ucs

#endif

#ifndef UCS_AUDIT_HPP
#define UCS_AUDIT_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ucs/quasiminimal.hpp"
#include "ucs/search.hpp"
#include "ucs/sequences.hpp"

// Empirical audit of the structural claims (L1-L6, T1-T5) over enumerated
// instances. Every reported counterexample is re-verified by an independent
// definition-level code path before it enters the report; the report digest
// is a hash of all ordered results and is invariant under the worker count.

namespace ucs {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ClaimId { L1, L2, L3, L4, L5, L6, T1, T2, T3, T4a, T4b, T5 };

inline const std::vector<ClaimId>& all_claims() {
    static const std::vector<ClaimId> v = {ClaimId::L1, ClaimId::L2,  ClaimId::L3,  ClaimId::L4,
                                           ClaimId::L5, ClaimId::L6,  ClaimId::T1,  ClaimId::T2,
                                           ClaimId::T3, ClaimId::T4a, ClaimId::T4b, ClaimId::T5};
    return v;
}

inline std::string claim_name(ClaimId c) {
    switch (c) {
        case ClaimId::L1: return "L1";
        case ClaimId::L2: return "L2";
        case ClaimId::L3: return "L3";
        case ClaimId::L4: return "L4";
        case ClaimId::L5: return "L5";
        case ClaimId::L6: return "L6";
        case ClaimId::T1: return "T1";
        case ClaimId::T2: return "T2";
        case ClaimId::T3: return "T3";
        case ClaimId::T4a: return "T4a";
        case ClaimId::T4b: return "T4b";
        case ClaimId::T5: return "T5";
    }
    return "?";
}

inline ClaimId claim_from_name(const std::string& s) {
    for (ClaimId c : all_claims())
        if (claim_name(c) == s) return c;
    throw error("unknown claim id: " + s);
}

enum class Verdict { holds, fails, precondition_not_met };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::precondition_not_met: return "precondition-not-met";
    }
    return "?";
}

struct ClaimResult {
    ClaimId claim = ClaimId::L1;
    Family instance;
    nlohmann::json params;   // binding parameters (i, j, strategy, ...)
    Verdict verdict = Verdict::holds;
    nlohmann::json witness;  // claim-specific evidence; self-contained for failures
};

struct AuditOptions {
    int n = 3;
    std::set<ClaimId> claims;  // empty = all
    int jobs = 1;
    int t4_budget = 512;       // clause-4 evaluations per instance at n >= 4; 0 = unlimited
    bool long_run = false;
};

struct ClaimStats {
    std::uint64_t instances_checked = 0;  // parameter bindings evaluated
    std::uint64_t preconditions_skipped = 0;
    std::uint64_t budget_skipped = 0;
    std::vector<ClaimResult> failures;
};

struct AuditReport {
    int n = 0;
    std::string version = kToolVersion;
    int t4_budget = 0;
    std::map<ClaimId, ClaimStats> per_claim;
    double elapsed_seconds = 0;
    std::string digest;  // FNV-1a over ordered results, hex
};

// ---------------------------------------------------------------------------
// json helpers for families, masks and sequences

namespace detail {

inline nlohmann::json mask_to_json(SetMask m) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < kMaxUniverse; ++i)
        if (m >> i & 1u) a.push_back(i + 1);
    return a;
}

inline SetMask mask_from_json(const nlohmann::json& a) {
    SetMask m = 0;
    for (int e : a) m |= SetMask{1} << (e - 1);
    return m;
}

inline nlohmann::json family_to_json(const Family& f) {
    nlohmann::json a = nlohmann::json::array();
    for (SetMask m : f.members()) a.push_back(mask_to_json(m));
    return a;
}

inline Family family_from_json(int n, const nlohmann::json& a) {
    std::vector<SetMask> ms;
    for (const auto& s : a) ms.push_back(mask_from_json(s));
    return Family(n, std::move(ms));
}

inline nlohmann::json masks_to_json(const std::vector<SetMask>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (SetMask m : v) a.push_back(mask_to_json(m));
    return a;
}

inline std::vector<SetMask> masks_from_json(const nlohmann::json& a) {
    std::vector<SetMask> v;
    for (const auto& s : a) v.push_back(mask_from_json(s));
    return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Independent re-verification. Everything below works on raw mask vectors
// with plain loops and deliberately shares no helper with the main paths.

namespace recheck {

inline bool raw_in(const std::vector<SetMask>& ms, SetMask x) {
    for (SetMask m : ms)
        if (m == x) return true;
    return false;
}

inline bool raw_uc(const std::vector<SetMask>& ms) {
    for (SetMask a : ms)
        for (SetMask b : ms)
            if (!raw_in(ms, a | b)) return false;
    return true;
}

inline std::vector<SetMask> raw_complement(int n, const std::vector<SetMask>& f) {
    std::vector<SetMask> d;
    for (SetMask m = 1; m <= ((SetMask{1} << n) - 1); ++m)
        if (!raw_in(f, m)) d.push_back(m);
    return d;
}

inline std::vector<SetMask> raw_basis(const std::vector<SetMask>& ms) {
    std::vector<SetMask> b;
    for (SetMask x : ms) {
        bool splits = false;
        for (SetMask y : ms) {
            if (y == x) continue;
            for (SetMask z : ms) {
                if (z == x) continue;
                if ((y | z) == x) splits = true;
            }
        }
        if (!splits) b.push_back(x);
    }
    return b;
}

inline std::vector<SetMask> raw_without(const std::vector<SetMask>& ms, SetMask x) {
    std::vector<SetMask> out;
    for (SetMask m : ms)
        if (m != x) out.push_back(m);
    return out;
}

inline bool raw_vincolated(const std::vector<SetMask>& f, SetMask x) {
    for (SetMask y : f) {
        SetMask u = x | y;
        if (u != x && !raw_in(f, u)) return true;
    }
    return false;
}

inline bool raw_vincolated_to(const std::vector<SetMask>& f, SetMask x, SetMask y) {
    if (!raw_vincolated(f, x)) return false;
    std::vector<SetMask> aug = f;
    aug.push_back(x);
    aug.push_back(y);
    return raw_uc(aug);
}

// Simulates the deletion sequence and rechecks every kind-specific clause.
inline bool raw_valid_sequence(int n, const std::vector<SetMask>& target,
                               const std::vector<SetMask>& deletions, SeqKind kind, int elem) {
    std::vector<SetMask> cur;
    for (SetMask m = 1; m <= ((SetMask{1} << n) - 1); ++m) cur.push_back(m);
    // structure
    {
        std::vector<SetMask> expect = target;
        for (SetMask d : deletions) {
            if (raw_in(expect, d)) return false;
            expect.push_back(d);
        }
        if (expect.size() != cur.size()) return false;
        for (SetMask m : cur)
            if (!raw_in(expect, m)) return false;
    }
    if (kind == SeqKind::plain) return true;
    for (SetMask d : deletions) {
        cur = raw_without(cur, d);
        if (!raw_uc(cur)) return false;
    }
    auto split_ok = [&](const std::vector<SetMask>& dels, const std::vector<SetMask>& tgt) {
        std::size_t di = 0, dsz = 0;
        for (SetMask m = 1; m <= ((SetMask{1} << n) - 1); ++m)
            if (!raw_in(tgt, m)) {
                ++dsz;
                if (m >> (elem - 1) & 1u) ++di;
            }
        for (std::size_t k = 0; k < dels.size(); ++k) {
            bool has = (dels[k] >> (elem - 1)) & 1u;
            if (k < dsz - di && has) return false;
            if (k >= dsz - di && !has) return false;
        }
        return true;
    };
    if (kind == SeqKind::ideal) return split_ok(deletions, target);
    if (kind == SeqKind::optimal) {
        std::size_t t = deletions.size();
        if (t < 2) return false;
        if (!((deletions[t - 1] >> (elem - 1)) & 1u)) return false;
        if ((deletions[t - 2] >> (elem - 1)) & 1u) return false;
        std::vector<SetMask> prefix_target = target;
        prefix_target.push_back(deletions[t - 1]);
        prefix_target.push_back(deletions[t - 2]);
        std::vector<SetMask> prefix(deletions.begin(), deletions.end() - 2);
        return split_ok(prefix, prefix_target);
    }
    return true;
}

// Can x be written as a union of raw basis members (all subsets of x)?
inline bool raw_basis_reaches(const std::vector<SetMask>& f, SetMask x) {
    std::vector<SetMask> b = raw_basis(f);
    std::vector<SetMask> reach = {0};
    for (;;) {
        bool grew = false;
        for (SetMask r : reach)
            for (SetMask p : b) {
                if ((p | x) != x) continue;
                SetMask u = r | p;
                if (!raw_in(reach, u)) {
                    reach.push_back(u);
                    grew = true;
                }
            }
        if (!grew) break;
    }
    return raw_in(reach, x);
}

// Confirms that the greedy union-closed construction from A toward `target`
// genuinely blocks (reaches a family whose basis is inside the target).
inline bool raw_greedy_blocks(int n, const std::vector<SetMask>& target) {
    std::vector<SetMask> cur;
    for (SetMask m = 1; m <= ((SetMask{1} << n) - 1); ++m) cur.push_back(m);
    while (cur.size() > target.size()) {
        SetMask pick = 0;
        std::vector<SetMask> b = raw_basis(cur);
        std::sort(b.begin(), b.end());
        for (SetMask m : b)
            if (!raw_in(target, m)) {
                pick = m;
                break;
            }
        if (pick == 0) return true;
        cur = raw_without(cur, pick);
    }
    return false;
}

}  // namespace recheck

// ---------------------------------------------------------------------------
// Per-claim audits

namespace detail {

struct ClaimRun {
    std::vector<ClaimResult> results;
    std::uint64_t budget_skipped = 0;
};

inline ClaimResult make_result(ClaimId c, const Family& f, nlohmann::json params, Verdict v,
                               nlohmann::json witness = nlohmann::json::object()) {
    return ClaimResult{c, f, std::move(params), v, std::move(witness)};
}

inline void audit_l1(const Family& f, ClaimRun& run) {
    const Family b = basis(f);
    for (SetMask x : f.members()) {
        nlohmann::json params{{"x", mask_to_json(x)}};
        try {
            BasisDecomposition d = decompose(f, x);
            SetMask u = 0;
            bool parts_ok = true;
            for (SetMask p : d.parts) {
                u |= p;
                if (!b.contains(p)) parts_ok = false;
            }
            if (u == x && parts_ok)
                run.results.push_back(make_result(ClaimId::L1, f, params, Verdict::holds));
            else
                run.results.push_back(make_result(ClaimId::L1, f, params, Verdict::fails,
                                                  {{"parts", masks_to_json(d.parts)}}));
        } catch (const error& e) {
            run.results.push_back(
                make_result(ClaimId::L1, f, params, Verdict::fails, {{"error", e.what()}}));
        }
    }
}

inline void audit_l2(const Family& f, ClaimRun& run) {
    if (!is_union_closed(f)) {
        run.results.push_back(make_result(ClaimId::L2, f, {}, Verdict::precondition_not_met,
                                          {{"detail", "F is not union-closed"}}));
        return;
    }
    const Family b = basis(f);
    for (SetMask bm : b.members()) {
        nlohmann::json params{{"b", mask_to_json(bm)}};
        auto chk = check_union_closed(f.without(bm));
        if (chk.closed)
            run.results.push_back(make_result(ClaimId::L2, f, params, Verdict::holds));
        else
            run.results.push_back(make_result(
                ClaimId::L2, f, params, Verdict::fails,
                {{"violation",
                  masks_to_json({chk.violation->first, chk.violation->second})}}));
    }
}

inline void audit_l3(const Family& f, ClaimRun& run) {
    const Family b = basis(f);
    for (SetMask z : f.members()) {
        if (b.contains(z)) continue;
        nlohmann::json params{{"z", mask_to_json(z)}};
        const Family b2 = basis(f.without(z));
        SetMask missing = 0;
        for (SetMask t : b.members())
            if (!b2.contains(t)) {
                missing = t;
                break;
            }
        if (missing == 0)
            run.results.push_back(make_result(ClaimId::L3, f, params, Verdict::holds));
        else
            run.results.push_back(make_result(ClaimId::L3, f, params, Verdict::fails,
                                              {{"missing", mask_to_json(missing)}}));
    }
}

inline void audit_l4(const Family& f, ClaimRun& run) {
    if (!is_union_closed(f)) {
        run.results.push_back(make_result(ClaimId::L4, f, {}, Verdict::precondition_not_met,
                                          {{"detail", "F is not union-closed"}}));
        return;
    }
    const Family d = complement_family(f);
    for (int j = 1; j <= f.universe_size(); ++j) {
        nlohmann::json params{{"j", j}};
        Family fj = f;
        const Family dj = subfamily_containing(d, j);
        for (SetMask m : dj.members()) fj = fj.with(m);
        auto chk = check_union_closed(fj);
        if (chk.closed)
            run.results.push_back(make_result(ClaimId::L4, f, params, Verdict::holds));
        else
            run.results.push_back(make_result(
                ClaimId::L4, f, params, Verdict::fails,
                {{"violation",
                  masks_to_json({chk.violation->first, chk.violation->second})}}));
    }
}

inline void sequence_failure(ClaimId c, const Family& f, nlohmann::json params,
                             const DeletionSequence& seq, const std::string& reason,
                             ClaimRun& run) {
    run.results.push_back(make_result(c, f, std::move(params), Verdict::fails,
                                      {{"sequence", masks_to_json(seq.deletions)},
                                       {"kind", seq_kind_name(seq.kind)},
                                       {"element", seq.element},
                                       {"reason", reason}}));
}

inline void audit_l5(const Family& f, ClaimRun& run) {
    const Family d = complement_family(f);
    for (int i = 1; i <= f.universe_size(); ++i) {
        nlohmann::json params{{"i", i}};
        if (subfamily_containing(d, i).empty()) {
            run.results.push_back(make_result(ClaimId::L5, f, params,
                                              Verdict::precondition_not_met,
                                              {{"detail", "D^i is empty"}}));
            continue;
        }
        try {
            DeletionSequence seq = build_ideal_sequence(f, i);
            ValidationReport rep = validate_sequence(seq);
            if (rep.valid)
                run.results.push_back(make_result(ClaimId::L5, f, params, Verdict::holds));
            else
                sequence_failure(ClaimId::L5, f, params, seq, rep.reason, run);
        } catch (const construction_blocked& e) {
            Family stage = f;
            const Family di = subfamily_containing(d, i);
            for (SetMask m : di.members()) stage = stage.with(m);
            run.results.push_back(make_result(ClaimId::L5, f, params, Verdict::fails,
                                              {{"error", "construction-blocked"},
                                               {"stage_target", family_to_json(stage)},
                                               {"detail", e.what()}}));
        }
    }
}

inline void audit_l6(const Family& f, ClaimRun& run) {
    const Family d = complement_family(f);
    for (int i = 1; i <= f.universe_size(); ++i) {
        nlohmann::json params{{"i", i}};
        OptimalOutcome out = build_optimal_sequence(f, i);
        if (auto* pre = std::get_if<PreconditionNotMet>(&out)) {
            run.results.push_back(make_result(ClaimId::L6, f, params,
                                              Verdict::precondition_not_met,
                                              {{"detail", pre->detail}}));
        } else if (auto* ref = std::get_if<RefutationReport>(&out)) {
            run.results.push_back(make_result(ClaimId::L6, f, params, Verdict::fails,
                                              {{"detail", ref->detail},
                                               {"sequence", masks_to_json(ref->sequence_deletions)},
                                               {"element", i}}));
        } else {
            // the builder validated the sequence already; holds
            (void)d;
            run.results.push_back(make_result(ClaimId::L6, f, params, Verdict::holds));
        }
    }
}

inline void audit_t1(const Family& f, ClaimRun& run) {
    ConjectureVerdict v = check_conjecture(f);
    if (v.holds && v.identity_checked)
        run.results.push_back(make_result(ClaimId::T1, f, {}, Verdict::holds));
    else {
        nlohmann::json freqs = nlohmann::json::array();
        for (int i = 1; i <= f.universe_size(); ++i) freqs.push_back(frequency(f, i));
        run.results.push_back(make_result(ClaimId::T1, f, {}, Verdict::fails,
                                          {{"frequencies", freqs},
                                           {"identity_checked", v.identity_checked}}));
    }
}

inline void audit_t2(const Family& f, ClaimRun& run) {
    for (SeqStrategy st : {SeqStrategy::greedy_basis, SeqStrategy::by_size}) {
        nlohmann::json params{{"strategy", st == SeqStrategy::greedy_basis ? "greedy" : "by-size"}};
        try {
            DeletionSequence seq = build_union_closed_sequence(f, st);
            ValidationReport rep = validate_sequence(seq);
            if (rep.valid)
                run.results.push_back(make_result(ClaimId::T2, f, params, Verdict::holds));
            else
                sequence_failure(ClaimId::T2, f, params, seq, rep.reason, run);
        } catch (const construction_blocked& e) {
            run.results.push_back(make_result(ClaimId::T2, f, params, Verdict::fails,
                                              {{"error", "construction-blocked"},
                                               {"stage_target", family_to_json(f)},
                                               {"detail", e.what()}}));
        }
    }
}

inline void audit_t3(const Family& f, ClaimRun& run) {
    for (int i = 1; i <= f.universe_size(); ++i) {
        nlohmann::json params{{"i", i}};
        Theorem3Outcome out = find_theorem3_witness(f, i);
        if (auto* pre = std::get_if<PreconditionNotMet>(&out)) {
            run.results.push_back(make_result(ClaimId::T3, f, params,
                                              Verdict::precondition_not_met,
                                              {{"detail", pre->detail}}));
        } else if (std::get_if<RefutationReport>(&out)) {
            run.results.push_back(make_result(
                ClaimId::T3, f, params, Verdict::fails,
                {{"detail", "no vincolated Y in D-D^i vincolated to non-vincolated R in D^i"}}));
        } else {
            const auto& w = std::get<Theorem3Witness>(out);
            // verify with independently recomputed predicate calls
            bool ok = is_vincolated(f, w.y) && !is_vincolated(f, w.r) &&
                      is_vincolated_to(f, w.y, w.r);
            run.results.push_back(make_result(ClaimId::T3, f, params,
                                              ok ? Verdict::holds : Verdict::fails,
                                              {{"y", mask_to_json(w.y)}, {"r", mask_to_json(w.r)}}));
        }
    }
}

// Shared T4 candidate walk: all (i, Y1, Y2) with clauses 1-3, ascending.
// visit(i, y1, y2, certificate-or-null) is called per full clause-4
// evaluation; returns the number skipped by budget.
template <typename Fn>
inline std::uint64_t t4_walk(const Family& f, int budget, Fn&& visit) {
    const int n = f.universe_size();
    const Family d = complement_family(f);
    const bool budgeted = n >= 4 && budget > 0;
    int evaluated = 0;
    std::uint64_t skipped = 0;
    for (int i = 1; i <= n; ++i) {
        const SetMask bit = SetMask{1} << (i - 1);
        for (SetMask y1 : f.members()) {
            if (y1 & bit) continue;  // clause 2
            for (SetMask y2 : f.members()) {
                if (y2 == y1 || !(y2 & bit)) continue;  // clause 1
                const Family dy = d.with(y1).with(y2);
                const auto mins = minimal_elements(dy);
                if (!std::binary_search(mins.begin(), mins.end(), i)) continue;  // clause 3
                if (budgeted && evaluated >= budget) {
                    ++skipped;
                    continue;
                }
                ++evaluated;
                auto cert = quasiminimal_certificate(f, i, y1, y2);
                visit(i, y1, y2, cert ? &*cert : nullptr, dy);
            }
        }
    }
    return skipped;
}

inline bool t4_bound_holds(const Family& dy, int i) {
    return 2 * frequency(dy, i) <= dy.size() + 1;
}

inline nlohmann::json t4_witness_json(int i, SetMask y1, SetMask y2,
                                      const QuasiminimalCertificate& cert, const Family& dy) {
    return {{"i", i},
            {"y1", mask_to_json(y1)},
            {"y2", mask_to_json(y2)},
            {"sequence", masks_to_json(cert.sequence.deletions)},
            {"sequence_target", family_to_json(cert.sequence.target)},
            {"dy_freq_i", frequency(dy, i)},
            {"dy_size", dy.size()}};
}

// T4a: there exists i such that every quasiminimal witness for i meets the
// bound (an i with no witness counts). One result per family.
inline void audit_t4a(const Family& f, int budget, ClaimRun& run) {
    const int n = f.universe_size();
    std::vector<char> bad(n + 1, 0);
    std::vector<nlohmann::json> violation(n + 1);
    run.budget_skipped += t4_walk(f, budget,
                                  [&](int i, SetMask y1, SetMask y2,
                                      const QuasiminimalCertificate* cert, const Family& dy) {
                                      if (!cert) return;
                                      if (!t4_bound_holds(dy, i) && !bad[i]) {
                                          bad[i] = 1;
                                          violation[i] = t4_witness_json(i, y1, y2, *cert, dy);
                                      }
                                  });
    int good_i = 0;
    for (int i = 1; i <= n; ++i)
        if (!bad[i]) {
            good_i = i;
            break;
        }
    if (good_i)
        run.results.push_back(
            make_result(ClaimId::T4a, f, {{"i", good_i}}, Verdict::holds));
    else {
        nlohmann::json viols = nlohmann::json::array();
        for (int i = 1; i <= n; ++i) viols.push_back(violation[i]);
        run.results.push_back(
            make_result(ClaimId::T4a, f, {}, Verdict::fails, {{"violations", viols}}));
    }
}

// T4b: every quasiminimal (i, Y1, Y2) meets the bound. One result per
// clause-1..3 candidate; candidates whose clause 4 fails are vacuous.
inline void audit_t4b(const Family& f, int budget, ClaimRun& run) {
    run.budget_skipped += t4_walk(
        f, budget,
        [&](int i, SetMask y1, SetMask y2, const QuasiminimalCertificate* cert, const Family& dy) {
            nlohmann::json params{{"i", i}, {"y1", mask_to_json(y1)}, {"y2", mask_to_json(y2)}};
            if (!cert) {
                run.results.push_back(make_result(ClaimId::T4b, f, params,
                                                  Verdict::precondition_not_met,
                                                  {{"detail", "not quasiminimal (clause 4)"}}));
                return;
            }
            if (t4_bound_holds(dy, i))
                run.results.push_back(make_result(ClaimId::T4b, f, params, Verdict::holds));
            else
                run.results.push_back(make_result(ClaimId::T4b, f, params, Verdict::fails,
                                                  t4_witness_json(i, y1, y2, *cert, dy)));
        });
}

inline void audit_t5(const Family& f, ClaimRun& run) {
    const Family d = complement_family(f);
    for (int j : minimal_elements(d)) {
        nlohmann::json params{{"j", j}};
        if (d.size() <= 1) {
            run.results.push_back(make_result(ClaimId::T5, f, params,
                                              Verdict::precondition_not_met,
                                              {{"detail", "|D| <= 1"}}));
            continue;
        }
        const std::size_t dj = frequency(d, j);
        if (2 * dj <= d.size() + 1)
            run.results.push_back(make_result(ClaimId::T5, f, params, Verdict::holds));
        else
            run.results.push_back(make_result(ClaimId::T5, f, params, Verdict::fails,
                                              {{"dj", dj}, {"d_size", d.size()}}));
    }
}

inline ClaimRun run_claim(ClaimId claim, const Family& f, const AuditOptions& opts) {
    ClaimRun run;
    switch (claim) {
        case ClaimId::L1: audit_l1(f, run); break;
        case ClaimId::L2: audit_l2(f, run); break;
        case ClaimId::L3: audit_l3(f, run); break;
        case ClaimId::L4: audit_l4(f, run); break;
        case ClaimId::L5: audit_l5(f, run); break;
        case ClaimId::L6: audit_l6(f, run); break;
        case ClaimId::T1: audit_t1(f, run); break;
        case ClaimId::T2: audit_t2(f, run); break;
        case ClaimId::T3: audit_t3(f, run); break;
        case ClaimId::T4a: audit_t4a(f, opts.t4_budget, run); break;
        case ClaimId::T4b: audit_t4b(f, opts.t4_budget, run); break;
        case ClaimId::T5: audit_t5(f, run); break;
    }
    return run;
}

}  // namespace detail

/// Audit a single claim on a single instance; one result per parameter
/// binding the claim quantifies over.
inline std::vector<ClaimResult> audit_claim(ClaimId claim, const Family& f,
                                            const AuditOptions& opts = {}) {
    return detail::run_claim(claim, f, opts).results;
}

// ---------------------------------------------------------------------------
// Failure re-verification (definition-level, raw code path)

inline bool reverify_failure(const ClaimResult& r) {
    const int n = r.instance.universe_size();
    const std::vector<SetMask>& fm = r.instance.members();
    using namespace recheck;
    switch (r.claim) {
        case ClaimId::L1: {
            SetMask x = detail::mask_from_json(r.params.at("x"));
            return raw_in(fm, x) && !raw_basis_reaches(fm, x);
        }
        case ClaimId::L2: {
            SetMask b = detail::mask_from_json(r.params.at("b"));
            return raw_in(raw_basis(fm), b) && !raw_uc(raw_without(fm, b));
        }
        case ClaimId::L3: {
            SetMask z = detail::mask_from_json(r.params.at("z"));
            SetMask t = detail::mask_from_json(r.witness.at("missing"));
            std::vector<SetMask> b = raw_basis(fm);
            return raw_in(fm, z) && !raw_in(b, z) && raw_in(b, t) &&
                   !raw_in(raw_basis(raw_without(fm, z)), t);
        }
        case ClaimId::L4: {
            int j = r.params.at("j");
            std::vector<SetMask> fj = fm;
            for (SetMask m : raw_complement(n, fm))
                if (m >> (j - 1) & 1u) fj.push_back(m);
            return !raw_uc(fj);
        }
        case ClaimId::L5:
        case ClaimId::T2: {
            if (r.witness.contains("error")) {
                std::vector<SetMask> stage;
                for (const auto& s : r.witness.at("stage_target"))
                    stage.push_back(detail::mask_from_json(s));
                return raw_greedy_blocks(n, stage);
            }
            SeqKind k = r.claim == ClaimId::L5 ? SeqKind::ideal : SeqKind::union_closed;
            int elem = r.claim == ClaimId::L5 ? int(r.params.at("i")) : 0;
            return !raw_valid_sequence(n, fm, detail::masks_from_json(r.witness.at("sequence")), k,
                                       elem);
        }
        case ClaimId::L6: {
            int i = r.params.at("i");
            std::vector<SetMask> seq = detail::masks_from_json(r.witness.at("sequence"));
            if (!seq.empty())
                return !raw_valid_sequence(n, fm, seq, SeqKind::optimal, i);
            // refutation came from the Theorem 3 scan: confirm no pair exists
            std::vector<SetMask> d = raw_complement(n, fm);
            for (SetMask y : d) {
                if (y >> (i - 1) & 1u) continue;
                for (SetMask rr : d) {
                    if (!(rr >> (i - 1) & 1u)) continue;
                    if (raw_vincolated(fm, y) && !raw_vincolated(fm, rr) &&
                        raw_vincolated_to(fm, y, rr))
                        return false;
                }
            }
            return true;
        }
        case ClaimId::T1: {
            for (int i = 1; i <= n; ++i) {
                std::size_t fi = 0;
                for (SetMask m : fm) fi += (m >> (i - 1)) & 1u;
                if (2 * fi >= fm.size()) return false;
            }
            return true;
        }
        case ClaimId::T3: {
            int i = r.params.at("i");
            std::vector<SetMask> d = raw_complement(n, fm);
            // hypothesis must hold raw, and no witness pair may exist
            for (SetMask y : d)
                if (!(y >> (i - 1) & 1u) && !raw_vincolated(fm, y)) return false;
            for (SetMask y : d) {
                if (y >> (i - 1) & 1u) continue;
                for (SetMask rr : d) {
                    if (!(rr >> (i - 1) & 1u)) continue;
                    if (raw_vincolated(fm, y) && !raw_vincolated(fm, rr) &&
                        raw_vincolated_to(fm, y, rr))
                        return false;
                }
            }
            return true;
        }
        case ClaimId::T4a:
        case ClaimId::T4b: {
            auto check_one = [&](const nlohmann::json& w) {
                int i = w.at("i");
                SetMask y1 = detail::mask_from_json(w.at("y1"));
                SetMask y2 = detail::mask_from_json(w.at("y2"));
                if (!raw_in(fm, y1) || !raw_in(fm, y2)) return false;
                if (!(y2 >> (i - 1) & 1u) || (y1 >> (i - 1) & 1u)) return false;
                std::vector<SetMask> dy = raw_complement(n, fm);
                dy.push_back(y1);
                dy.push_back(y2);
                // i minimal on D | Y
                std::size_t fi = 0;
                for (SetMask m : dy) fi += (m >> (i - 1)) & 1u;
                for (int k = 1; k <= n; ++k) {
                    std::size_t fk = 0;
                    for (SetMask m : dy) fk += (m >> (k - 1)) & 1u;
                    if (fk < fi) return false;
                }
                // bound violated
                if (2 * fi <= dy.size() + 1) return false;
                // certificate sequence is a genuine optimal(i) sequence
                std::vector<SetMask> tgt = raw_without(raw_without(fm, y1), y2);
                std::vector<SetMask> seq = detail::masks_from_json(w.at("sequence"));
                return raw_valid_sequence(n, tgt, seq, SeqKind::optimal, i);
            };
            if (r.claim == ClaimId::T4b) return check_one(r.witness);
            for (const auto& w : r.witness.at("violations"))
                if (!check_one(w)) return false;
            return true;
        }
        case ClaimId::T5: {
            int j = r.params.at("j");
            std::vector<SetMask> d = raw_complement(n, fm);
            if (d.size() <= 1) return false;
            std::size_t dj = 0;
            for (SetMask m : d) dj += (m >> (j - 1)) & 1u;
            for (int k = 1; k <= n; ++k) {
                std::size_t dk = 0;
                for (SetMask m : d) dk += (m >> (k - 1)) & 1u;
                if (dk < dj) return false;  // j not minimal
            }
            return 2 * dj > d.size() + 1;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// audit_all: enumeration supply, optional parallelism, deterministic digest

namespace detail {

struct Fnv1a {
    std::uint64_t h = 0xCBF29CE484222325ull;
    void feed(const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001B3ull;
        }
    }
};

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

// All nonempty subfamilies of full_universe(n), by ascending characteristic
// index: the deterministic arbitrary-family supply for L1/L3 at n <= 3.
inline std::vector<Family> all_families(int n) {
    const SetMask top = universe_mask(n);
    std::vector<Family> out;
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << top); ++idx) {
        std::vector<SetMask> ms;
        for (SetMask m = 1; m <= top; ++m)
            if (idx >> (m - 1) & 1u) ms.push_back(m);
        out.push_back(Family(n, std::move(ms)));
    }
    return out;
}

template <typename Work>
inline void parallel_for(std::size_t count, int jobs, Work&& work) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t k = 0; k < count; ++k) work(k);
        return;
    }
    std::vector<std::thread> pool;
    const int threads = std::min<std::size_t>(jobs, count);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t k = t; k < count; k += threads) work(k);
        });
    for (auto& th : pool) th.join();
}

}  // namespace detail

inline AuditReport audit_all(const AuditOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    AuditReport report;
    report.n = opts.n;
    report.t4_budget = opts.t4_budget;

    std::vector<ClaimId> claims;
    for (ClaimId c : all_claims())
        if (opts.claims.empty() || opts.claims.count(c)) claims.push_back(c);

    const std::vector<Family> uc = enumerate_union_closed(opts.n, opts.long_run);
    std::vector<Family> arb;  // lazy; only built when L1/L3 requested at n <= 3
    detail::Fnv1a digest;

    for (ClaimId c : claims) {
        const bool arbitrary_supply = (c == ClaimId::L1 || c == ClaimId::L3) && opts.n <= 3;
        if (arbitrary_supply && arb.empty()) arb = detail::all_families(opts.n);
        const std::vector<Family>& supply = arbitrary_supply ? arb : uc;

        std::vector<detail::ClaimRun> runs(supply.size());
        detail::parallel_for(supply.size(), opts.jobs,
                             [&](std::size_t k) { runs[k] = detail::run_claim(c, supply[k], opts); });

        ClaimStats& stats = report.per_claim[c];
        for (const auto& run : runs) {
            stats.budget_skipped += run.budget_skipped;
            for (const ClaimResult& r : run.results) {
                digest.feed(claim_name(r.claim));
                digest.feed(detail::family_to_json(r.instance).dump());
                digest.feed(r.params.dump());
                digest.feed(verdict_name(r.verdict));
                switch (r.verdict) {
                    case Verdict::holds: ++stats.instances_checked; break;
                    case Verdict::precondition_not_met:
                        ++stats.instances_checked;
                        ++stats.preconditions_skipped;
                        break;
                    case Verdict::fails: {
                        ++stats.instances_checked;
                        ClaimResult f = r;
                        f.witness["reverified"] = reverify_failure(r);
                        digest.feed(f.witness.dump());
                        stats.failures.push_back(std::move(f));
                        break;
                    }
                }
            }
        }
    }
    report.digest = detail::hex64(digest.h);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

// ---------------------------------------------------------------------------
// Rendering and round-trip

inline nlohmann::json report_to_json(const AuditReport& rep) {
    nlohmann::json claims = nlohmann::json::object();
    for (const auto& [c, stats] : rep.per_claim) {
        nlohmann::json failures = nlohmann::json::array();
        for (const ClaimResult& r : stats.failures)
            failures.push_back({{"family", detail::family_to_json(r.instance)},
                                {"params", r.params},
                                {"witness", r.witness}});
        claims[claim_name(c)] = {{"instances_checked", stats.instances_checked},
                                 {"preconditions_skipped", stats.preconditions_skipped},
                                 {"budget_skipped", stats.budget_skipped},
                                 {"failures", failures}};
    }
    return {{"version", rep.version}, {"n", rep.n},      {"t4_budget", rep.t4_budget},
            {"claims", claims},       {"digest", rep.digest},
            {"elapsed_seconds", rep.elapsed_seconds}};
}

inline AuditReport report_from_json(const nlohmann::json& j) {
    AuditReport rep;
    rep.version = j.at("version");
    rep.n = j.at("n");
    rep.t4_budget = j.at("t4_budget");
    rep.digest = j.at("digest");
    rep.elapsed_seconds = j.at("elapsed_seconds");
    for (const auto& [name, stats] : j.at("claims").items()) {
        ClaimId c = claim_from_name(name);
        ClaimStats& s = rep.per_claim[c];
        s.instances_checked = stats.at("instances_checked");
        s.preconditions_skipped = stats.at("preconditions_skipped");
        s.budget_skipped = stats.at("budget_skipped");
        for (const auto& fj : stats.at("failures")) {
            ClaimResult r;
            r.claim = c;
            r.instance = detail::family_from_json(rep.n, fj.at("family"));
            r.params = fj.at("params");
            r.verdict = Verdict::fails;
            r.witness = fj.at("witness");
            s.failures.push_back(std::move(r));
        }
    }
    return rep;
}

inline std::string render_report(const AuditReport& rep, bool as_json) {
    if (as_json) return report_to_json(rep).dump(2) + "\n";
    std::string out;
    out += "audit report (ucs " + rep.version + "), n = " + std::to_string(rep.n) + "\n";
    std::uint64_t total_failures = 0;
    for (const auto& [c, stats] : rep.per_claim) {
        out += "  " + claim_name(c) + ": " + std::to_string(stats.instances_checked) +
               " bindings, " + std::to_string(stats.preconditions_skipped) +
               " precondition-not-met, " + std::to_string(stats.failures.size()) + " failures";
        if (stats.budget_skipped)
            out += " (" + std::to_string(stats.budget_skipped) + " skipped by t4 budget " +
                   std::to_string(rep.t4_budget) + ")";
        out += "\n";
        total_failures += stats.failures.size();
        for (const ClaimResult& r : stats.failures) {
            out += "    FAIL " + claim_name(c) + " params=" + r.params.dump() +
                   " family=" + detail::family_to_json(r.instance).dump() +
                   " witness=" + r.witness.dump() + "\n";
        }
    }
    out += "digest " + rep.digest + "\n";
    out += total_failures == 0 ? "all audited claims hold\n"
                               : std::to_string(total_failures) + " failure(s) found\n";
    return out;
}

}  // namespace ucs

#endif

#ifndef UCS_PREDICATES_HPP
#define UCS_PREDICATES_HPP

#include <optional>
#include <vector>

#include "ucs/family.hpp"

// Pointwise predicates on a family and its deleted complement D = A - F:
// extension sets, vincolated / vincolated-to, and minimal elements.
// (is_quasiminimal lives in quasiminimal.hpp; it needs sequence machinery.)

namespace ucs {

/// E_X(Y) = all T in A with Y subset T subset Y|X. Size 2^|X-Y|.
inline Family extension(SetMask y, SetMask x, int n) {
    require_universe(n);
    if (y == 0) throw empty_set_rejected("extension: Y must be nonempty");
    if ((y | x) & ~universe_mask(n))
        throw element_out_of_range("extension: set exceeds universe [" + std::to_string(n) + "]");
    const SetMask free = x & ~y;
    std::vector<SetMask> v;
    SetMask sub = free;
    for (;;) {
        v.push_back(y | sub);
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
    return Family(n, std::move(v));
}

struct VincolatedWitness {
    SetMask x = 0;       // the vincolated set, in D
    SetMask y = 0;       // member of F
    SetMask result = 0;  // x|y, in D and distinct from x
};

namespace detail {

inline void require_in_complement(const Family& f, SetMask x, const char* who) {
    if (x == 0 || (x & ~universe_mask(f.universe_size())) || f.contains(x))
        throw not_in_complement(std::string(who) + ": " + mask_to_string(x) +
                                " is not in the complement D");
}

}  // namespace detail

/// X in D is vincolated iff F|{X} is not union-closed, equivalently iff some
/// Y in F has X|Y in D-{X}. (The X|Y = X case is no violation: X itself is
/// present in F|{X}.) Witness: least such Y by mask value.
inline std::optional<VincolatedWitness> vincolated_witness(const Family& f, SetMask x) {
    detail::require_in_complement(f, x, "is_vincolated");
    for (SetMask y : f.members()) {
        SetMask u = x | y;
        if (u != x && !f.contains(u)) return VincolatedWitness{x, y, u};
    }
    return std::nullopt;
}

inline bool is_vincolated(const Family& f, SetMask x) {
    return vincolated_witness(f, x).has_value();
}

/// X is vincolated to Y iff F|{X} is not union-closed but F|{X,Y} is.
inline bool is_vincolated_to(const Family& f, SetMask x, SetMask y) {
    detail::require_in_complement(f, x, "is_vincolated_to");
    detail::require_in_complement(f, y, "is_vincolated_to");
    if (x == y) throw not_in_complement("is_vincolated_to: X and Y must differ");
    if (!is_vincolated(f, x)) return false;
    return is_union_closed(f.with(x).with(y));
}

/// All j minimizing |D^j| over j in 1..n, ascending. Empty D ties everyone.
inline std::vector<int> minimal_elements(const Family& d) {
    const int n = d.universe_size();
    std::vector<std::size_t> freq(n + 1, 0);
    for (int i = 1; i <= n; ++i) freq[i] = frequency(d, i);
    std::size_t best = freq[1];
    for (int i = 2; i <= n; ++i) best = std::min(best, freq[i]);
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (freq[i] == best) out.push_back(i);
    return out;
}

}  // namespace ucs

#endif

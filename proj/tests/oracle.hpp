#ifndef UCS_TESTS_ORACLE_HPP
#define UCS_TESTS_ORACLE_HPP

// Brute-force oracles written straight from the definitions. Test-only and
// deliberately independent of the library implementation: plain loops over
// raw mask vectors.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using Fam = std::vector<Mask>;  // sorted ascending

inline bool contains(const Fam& f, Mask x) {
    for (Mask m : f)
        if (m == x) return true;
    return false;
}

inline bool union_closed(const Fam& f) {
    for (Mask a : f)
        for (Mask b : f)
            if (!contains(f, a | b)) return false;
    return true;
}

// Every nonempty union-closed subfamily of the nonempty subsets of [n],
// by filtering all 2^(2^n - 1) candidate subfamilies.
inline std::vector<Fam> enumerate_union_closed(int n) {
    const Mask top = (Mask{1} << n) - 1;
    std::vector<Fam> out;
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << top); ++idx) {
        Fam f;
        for (Mask m = 1; m <= top; ++m)
            if (idx >> (m - 1) & 1u) f.push_back(m);
        if (union_closed(f)) out.push_back(f);
    }
    return out;
}

inline Fam basis(const Fam& f) {
    Fam b;
    for (Mask x : f) {
        bool splits = false;
        for (Mask y : f)
            for (Mask z : f)
                if (y != x && z != x && (y | z) == x) splits = true;
        if (!splits) b.push_back(x);
    }
    return b;
}

inline Fam without(const Fam& f, Mask x) {
    Fam out;
    for (Mask m : f)
        if (m != x) out.push_back(m);
    return out;
}

inline Fam complement(int n, const Fam& f) {
    Fam d;
    for (Mask m = 1; m <= ((Mask{1} << n) - 1); ++m)
        if (!contains(f, m)) d.push_back(m);
    return d;
}

inline bool vincolated(const Fam& f, Mask x) {
    Fam aug = f;
    aug.push_back(x);
    return !union_closed(aug);
}

// Deterministic arbitrary-family supply: the subfamily with characteristic
// index idx (bit m-1 selects mask m).
inline Fam family_at(int n, std::uint64_t idx) {
    Fam f;
    for (Mask m = 1; m <= ((Mask{1} << n) - 1); ++m)
        if (idx >> (m - 1) & 1u) f.push_back(m);
    return f;
}

}  // namespace oracle

#endif

#ifndef UCS_SEARCH_HPP
#define UCS_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "ucs/family.hpp"

// Instance supply: exhaustive enumeration of the nonempty union-closed
// subfamilies of A for small n, and seeded random sampling for larger n.

namespace ucs {

inline constexpr int kEnumerateCap = 4;       // default exhaustive cap
inline constexpr int kEnumerateLongCap = 5;   // behind the long-run flag

namespace detail {

// Masks are visited in descending numeric order. X|Y >= max(X, Y)
// numerically, so when mask m is considered every union m|y with an already
// chosen y has already been decided; including m is legal iff all those
// unions were included. Every node of the decision tree is therefore a
// prefix of a union-closed family and the walk never dead-ends.
// Include-first gives the canonical order.
template <typename Fn>
inline void enumerate_rec(int n, SetMask m, std::vector<SetMask>& chosen, std::uint64_t member_bits,
                          Fn&& emit) {
    if (m == 0) {
        if (!chosen.empty()) {
            std::vector<SetMask> sorted(chosen.rbegin(), chosen.rend());
            emit(Family(n, std::move(sorted)));
        }
        return;
    }
    bool can_include = true;
    for (SetMask y : chosen)
        if (!(member_bits >> (m | y) & 1)) {
            can_include = false;
            break;
        }
    if (can_include) {
        chosen.push_back(m);
        enumerate_rec(n, m - 1, chosen, member_bits | (std::uint64_t{1} << m), emit);
        chosen.pop_back();
    }
    enumerate_rec(n, m - 1, chosen, member_bits, emit);
}

inline void check_enumeration_cap(int n, bool long_run) {
    require_universe(n);
    const int cap = long_run ? kEnumerateLongCap : kEnumerateCap;
    if (n > cap)
        throw universe_too_large("exhaustive enumeration capped at n = " + std::to_string(cap) +
                                 (long_run ? "" : " (pass the long-run flag for n = 5)"));
}

}  // namespace detail

/// Visit every nonempty union-closed subfamily of full_universe(n) exactly
/// once, in a deterministic canonical order.
template <typename Fn>
inline void for_each_union_closed(int n, Fn&& fn, bool long_run = false) {
    detail::check_enumeration_cap(n, long_run);
    std::vector<SetMask> chosen;
    detail::enumerate_rec(n, universe_mask(n), chosen, 0, fn);
}

inline std::vector<Family> enumerate_union_closed(int n, bool long_run = false) {
    std::vector<Family> out;
    for_each_union_closed(n, [&](Family f) { out.push_back(std::move(f)); }, long_run);
    return out;
}

inline std::uint64_t count_union_closed(int n, bool long_run = false) {
    std::uint64_t c = 0;
    for_each_union_closed(n, [&](const Family&) { ++c; }, long_run);
    return c;
}

// splitmix64: the output function of Steele/Lea/Vigna's SplitMix generator.
// Pure 64-bit integer arithmetic, so seeds reproduce across platforms and
// implementations.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

/// Union closure of generator_count random nonempty subsets of [n]. Each
/// generator is next() mod (2^n - 1) plus 1. Identical (n, count, seed)
/// yields an identical family on every platform.
inline Family sample_union_closed(int n, int generator_count, std::uint64_t seed) {
    require_universe(n);
    SplitMix64 rng(seed);
    std::vector<SetMask> gens;
    gens.reserve(static_cast<std::size_t>(generator_count));
    for (int k = 0; k < generator_count; ++k)
        gens.push_back(static_cast<SetMask>(rng.next() % universe_mask(n)) + 1);
    return union_closure(Family(n, std::move(gens)));
}

/// Seeded supply of arbitrary (not necessarily union-closed) families, used
/// for auditing the lemmas (L1, L3) that hold without the union-closed
/// hypothesis. Member count is 1 + next() mod max_sets.
inline Family sample_arbitrary_family(int n, int max_sets, std::uint64_t seed) {
    require_universe(n);
    SplitMix64 rng(seed);
    const int count = static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_sets)) + 1;
    std::vector<SetMask> masks;
    masks.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        masks.push_back(static_cast<SetMask>(rng.next() % universe_mask(n)) + 1);
    return Family(n, std::move(masks));
}

}  // namespace ucs

#endif

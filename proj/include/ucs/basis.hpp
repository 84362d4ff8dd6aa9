#ifndef UCS_BASIS_HPP
#define UCS_BASIS_HPP

#include <cassert>
#include <vector>

#include "ucs/family.hpp"

// Basis of a family (members not expressible as a union of two other
// members) and decomposition of any member into basis parts.

namespace ucs {

/// B(F) = { X in F | no Y, Z in F-{X} with Y union Z = X }.
inline Family basis(const Family& f) {
    const auto& ms = f.members();
    std::vector<char> non_basis(ms.size(), 0);
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a; b < ms.size(); ++b) {
            SetMask u = ms[a] | ms[b];
            if (u == ms[a] || u == ms[b]) continue;  // Y=Z or one absorbs the other
            auto it = std::lower_bound(ms.begin(), ms.end(), u);
            if (it != ms.end() && *it == u) non_basis[it - ms.begin()] = 1;
        }
    std::vector<SetMask> out;
    for (std::size_t k = 0; k < ms.size(); ++k)
        if (!non_basis[k]) out.push_back(ms[k]);
    return Family(f.universe_size(), std::move(out));
}

struct BasisDecomposition {
    SetMask target = 0;
    std::vector<SetMask> parts;  // sorted, all in basis(F), union == target
};

namespace detail {

inline void decompose_rec(const Family& f, const Family& b, SetMask x,
                          std::vector<SetMask>& parts, int depth) {
    // |Y| < |X| at every split, so depth is bounded by the universe size.
    assert(depth <= f.universe_size());
    if (b.contains(x)) {
        parts.push_back(x);
        return;
    }
    // Least (Y, Z) by mask value with Y, Z in F-{X} and Y|Z == X.
    for (SetMask y : f.members()) {
        if (y == x || (y | x) != x) continue;
        for (SetMask z : f.members()) {
            if (z == x) continue;
            if ((y | z) == x) {
                decompose_rec(f, b, y, parts, depth + 1);
                decompose_rec(f, b, z, parts, depth + 1);
                return;
            }
        }
    }
    // Unreachable for any family: a non-basis member always splits.
    assert(false && "member outside basis admits no split");
}

}  // namespace detail

/// Express X (a member of F) as a union of basis members, following the
/// induction on |X|: basis members are their own decomposition, anything
/// else splits as Y|Z with both strictly smaller.
inline BasisDecomposition decompose(const Family& f, SetMask x) {
    if (!f.contains(x)) throw not_a_member("decompose: " + mask_to_string(x) + " not in family");
    BasisDecomposition d;
    d.target = x;
    const Family b = basis(f);
    detail::decompose_rec(f, b, x, d.parts, 0);
    std::sort(d.parts.begin(), d.parts.end());
    d.parts.erase(std::unique(d.parts.begin(), d.parts.end()), d.parts.end());
    return d;
}

}  // namespace ucs

#endif

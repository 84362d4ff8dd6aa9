#ifndef UCS_FAMILY_HPP
#define UCS_FAMILY_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core representations: subsets of [n] as bitmasks (element i <-> bit i-1),
// families of distinct nonempty subsets, union-closure machinery, and the
// abundant-element check.

namespace ucs {

using SetMask = std::uint32_t;

inline constexpr int kMaxUniverse = 16;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct universe_too_large : error { using error::error; };
struct element_out_of_range : error { using error::error; };
struct empty_set_rejected : error { using error::error; };
struct empty_family : error { using error::error; };
struct not_a_member : error { using error::error; };
struct not_in_complement : error { using error::error; };
struct malformed_sequence : error { using error::error; };
struct not_union_closed : error { using error::error; };
struct empty_deleted_subfamily : error { using error::error; };
// Raised when the greedy constructor of a union-closed sequence finds no
// deletable basis element outside the target; the auditor records this as a
// refutation rather than letting it escape.
struct construction_blocked : error { using error::error; };

inline int popcount(SetMask m) { return std::popcount(m); }

/// Full-universe mask for [n].
inline SetMask universe_mask(int n) { return static_cast<SetMask>((1u << n) - 1u); }

inline void require_universe(int n) {
    if (n < 1 || n > kMaxUniverse)
        throw universe_too_large("universe size must be in 1.." + std::to_string(kMaxUniverse) +
                                 ", got " + std::to_string(n));
}

/// Render a mask as 1-based elements, e.g. "{1,3}".
inline std::string mask_to_string(SetMask m) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < kMaxUniverse; ++i) {
        if (m >> i & 1u) {
            if (!first) out += ',';
            out += std::to_string(i + 1);
            first = false;
        }
    }
    out += '}';
    return out;
}

// A finite collection of distinct nonempty subsets of [n], kept sorted
// ascending by mask value. The sorted member list is the canonical form:
// equality and iteration order are defined by it. Immutable after
// construction.
class Family {
  public:
    Family() : n_(1) {}

    Family(int n, std::vector<SetMask> members) : n_(n), members_(std::move(members)) {
        require_universe(n_);
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        for (SetMask m : members_) {
            if (m == 0) throw empty_set_rejected("the empty set is not a member of the universe");
            if (m & ~universe_mask(n_))
                throw element_out_of_range("set " + mask_to_string(m) + " exceeds universe [" +
                                           std::to_string(n_) + "]");
        }
    }

    int universe_size() const { return n_; }
    const std::vector<SetMask>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(SetMask m) const {
        return std::binary_search(members_.begin(), members_.end(), m);
    }

    Family with(SetMask m) const {
        std::vector<SetMask> v = members_;
        v.push_back(m);
        return Family(n_, std::move(v));
    }

    Family without(SetMask m) const {
        std::vector<SetMask> v;
        v.reserve(members_.size());
        for (SetMask x : members_)
            if (x != m) v.push_back(x);
        return Family(n_, std::move(v));
    }

    friend bool operator==(const Family&, const Family&) = default;

  private:
    int n_;
    std::vector<SetMask> members_;
};

/// Build a family from 1-based element lists. Duplicate sets collapse.
inline Family make_family(int n, const std::vector<std::vector<int>>& sets) {
    require_universe(n);
    std::vector<SetMask> masks;
    masks.reserve(sets.size());
    for (const auto& elems : sets) {
        if (elems.empty()) throw empty_set_rejected("input contains the empty set");
        SetMask m = 0;
        for (int e : elems) {
            if (e < 1 || e > n)
                throw element_out_of_range("element " + std::to_string(e) + " outside 1.." +
                                           std::to_string(n));
            m |= SetMask{1} << (e - 1);
        }
        masks.push_back(m);
    }
    return Family(n, std::move(masks));
}

/// All nonempty subsets of [n]; size 2^n - 1.
inline Family full_universe(int n) {
    require_universe(n);
    std::vector<SetMask> v(universe_mask(n));
    for (SetMask m = 1; m <= universe_mask(n); ++m) v[m - 1] = m;
    return Family(n, std::move(v));
}

struct ClosureCheck {
    bool closed = true;
    // Lexicographically least violating pair (by mask values) when not closed.
    std::optional<std::pair<SetMask, SetMask>> violation;
};

inline ClosureCheck check_union_closed(const Family& f) {
    const auto& ms = f.members();
    for (SetMask x : ms)
        for (SetMask y : ms) {
            SetMask u = x | y;
            if (u != x && u != y && !f.contains(u)) return {false, std::make_pair(x, y)};
        }
    return {};
}

inline bool is_union_closed(const Family& f) { return check_union_closed(f).closed; }

/// Smallest union-closed superfamily of f. Every member of the result is a
/// union of a nonempty subfamily of f, so a worklist over x|g reaches all of
/// them.
inline Family union_closure(const Family& f) {
    const int n = f.universe_size();
    std::vector<char> seen(std::size_t{1} << n, 0);
    std::vector<SetMask> queue;
    for (SetMask m : f.members()) {
        if (!seen[m]) {
            seen[m] = 1;
            queue.push_back(m);
        }
    }
    const std::vector<SetMask> gens = queue;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        SetMask x = queue[head];
        for (SetMask g : gens) {
            SetMask u = x | g;
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return Family(n, std::move(queue));
}

/// F^i = members containing element i (1-based).
inline Family subfamily_containing(const Family& f, int i) {
    if (i < 1 || i > f.universe_size())
        throw element_out_of_range("element " + std::to_string(i) + " outside 1.." +
                                   std::to_string(f.universe_size()));
    const SetMask bit = SetMask{1} << (i - 1);
    std::vector<SetMask> v;
    for (SetMask m : f.members())
        if (m & bit) v.push_back(m);
    return Family(f.universe_size(), std::move(v));
}

inline std::size_t frequency(const Family& f, int i) {
    if (i < 1 || i > f.universe_size())
        throw element_out_of_range("element " + std::to_string(i) + " outside 1.." +
                                   std::to_string(f.universe_size()));
    const SetMask bit = SetMask{1} << (i - 1);
    std::size_t c = 0;
    for (SetMask m : f.members()) c += (m & bit) != 0;
    return c;
}

/// D = full_universe(n) - F.
inline Family complement_family(const Family& f) {
    const int n = f.universe_size();
    std::vector<SetMask> v;
    v.reserve((std::size_t{1} << n) - 1 - f.size());
    auto it = f.members().begin();
    for (SetMask m = 1; m <= universe_mask(n); ++m) {
        if (it != f.members().end() && *it == m)
            ++it;
        else
            v.push_back(m);
    }
    return Family(n, std::move(v));
}

struct ConjectureVerdict {
    bool holds = false;
    std::vector<int> abundant_elements;  // all i with 2|F^i| >= |F|
    bool identity_checked = false;       // |F| = 2|A^i|-1-|D| and |F^i| = |A^i|-|D^i|, every i
};

inline ConjectureVerdict check_conjecture(const Family& f) {
    if (f.empty()) throw empty_family("conjecture check requires a nonempty family");
    const int n = f.universe_size();
    ConjectureVerdict v;
    const Family d = complement_family(f);
    const std::size_t half_universe = std::size_t{1} << (n - 1);  // |A^i|
    v.identity_checked = true;
    for (int i = 1; i <= n; ++i) {
        const std::size_t fi = frequency(f, i);
        const std::size_t di = frequency(d, i);
        if (2 * fi >= f.size()) v.abundant_elements.push_back(i);
        if (f.size() != 2 * half_universe - 1 - d.size()) v.identity_checked = false;
        if (fi != half_universe - di) v.identity_checked = false;
    }
    v.holds = !v.abundant_elements.empty();
    return v;
}

}  // namespace ucs

#endif

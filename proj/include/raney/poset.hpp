#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "raney/sets.hpp"

namespace raney {

// Finite poset on dense element ids 0..n-1. The order is stored as one
// up-set mask per element; reflexivity, antisymmetry and transitivity are
// checked at construction and never again.
struct FinitePoset {
    int n = 0;
    std::vector<Bits> up;  // up[i] = { j : i <= j }

    FinitePoset() = default;
    FinitePoset(int n_, std::vector<Bits> up_) : n(n_), up(std::move(up_)) { validate(); }

    bool leq(int i, int j) const { return has_bit(up[i], j); }
    bool lt(int i, int j) const { return i != j && leq(i, j); }

    Bits strict_up(int i) const { return up[i] & ~bit(i); }

    Bits down_mask(int i) const {
        Bits d = 0;
        for (int j = 0; j < n; ++j)
            if (leq(j, i)) d |= bit(j);
        return d;
    }

    bool is_downset(Bits s) const {
        for (int j = 0; j < n; ++j)
            if (has_bit(s, j) && !is_subset(down_mask(j), s)) return false;
        return true;
    }

    bool is_upset(Bits s) const {
        for (int j = 0; j < n; ++j)
            if (has_bit(s, j) && !is_subset(up[j], s)) return false;
        return true;
    }

    std::vector<Bits> downsets() const {
        std::vector<Bits> out;
        for (Bits s = 0; s <= full_mask(n); ++s) {
            if (is_downset(s)) out.push_back(s);
            if (s == full_mask(n)) break;
        }
        return out;
    }

    std::vector<Bits> upsets() const {
        std::vector<Bits> out;
        for (Bits s = 0; s <= full_mask(n); ++s) {
            if (is_upset(s)) out.push_back(s);
            if (s == full_mask(n)) break;
        }
        return out;
    }

    // Pairs i < j with nothing strictly between.
    std::vector<std::pair<int, int>> cover_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!lt(i, j)) continue;
                bool covered = true;
                for (int k = 0; k < n && covered; ++k)
                    if (k != i && k != j && lt(i, k) && lt(k, j)) covered = false;
                if (covered) out.emplace_back(i, j);
            }
        return out;
    }

    // Lexicographically least relation matrix over all relabelings;
    // two posets are isomorphic iff the keys agree.
    std::vector<Bits> canonical_key() const {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<Bits> best;
        do {
            std::vector<Bits> rows(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (leq(perm[i], perm[j])) rows[i] |= bit(j);
            if (best.empty() || rows < best) best = rows;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

   private:
    void validate() const {
        if (n < 0 || n > 64) throw error("poset size out of range");
        if ((int)up.size() != n) throw error("poset: up-set table size mismatch");
        Bits all = full_mask(n);
        for (int i = 0; i < n; ++i) {
            if (up[i] & ~all) throw error("poset: relation mentions unknown element");
            if (!has_bit(up[i], i)) throw error("poset: relation not reflexive");
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i != j && leq(i, j) && leq(j, i)) throw error("poset: relation not antisymmetric");
                if (leq(i, j) && !is_subset(up[j], up[i])) throw error("poset: relation not transitive");
            }
    }
};

// Builds a poset from arbitrary <=-pairs (cover pairs suffice); the
// transitive closure is taken before validation.
inline FinitePoset poset_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Bits> up(n, 0);
    for (int i = 0; i < n; ++i) up[i] = bit(i);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw error("poset pair out of range");
        up[a] |= bit(b);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (has_bit(up[i], j) && (up[i] | up[j]) != up[i]) {
                    up[i] |= up[j];
                    changed = true;
                }
    }
    return FinitePoset(n, std::move(up));
}

inline FinitePoset chain_poset(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return poset_from_pairs(n, pairs);
}

inline FinitePoset antichain_poset(int n) { return poset_from_pairs(n, {}); }

inline FinitePoset dual_poset(const FinitePoset& p) {
    std::vector<Bits> up(p.n, 0);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.leq(j, i)) up[i] |= bit(j);
    return FinitePoset(p.n, std::move(up));
}

// All posets on n points up to isomorphism. Grown one point at a time:
// every poset has a maximal element whose removal leaves a smaller poset,
// and re-attaching a maximal element above an arbitrary downset recovers
// it, so the walk is exhaustive.
inline std::vector<FinitePoset> all_posets(int n) {
    if (n <= 0) return {};
    std::vector<FinitePoset> cur = {antichain_poset(1)};
    for (int k = 1; k < n; ++k) {
        std::vector<FinitePoset> next;
        std::vector<std::vector<Bits>> seen;
        for (const auto& p : cur) {
            for (Bits d : p.downsets()) {
                std::vector<Bits> up(k + 1, 0);
                for (int i = 0; i < k; ++i) {
                    up[i] = p.up[i];
                    if (has_bit(d, i)) up[i] |= bit(k);
                }
                up[k] = bit(k);
                FinitePoset q(k + 1, std::move(up));
                auto key = q.canonical_key();
                if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                    seen.push_back(key);
                    next.push_back(std::move(q));
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace raney

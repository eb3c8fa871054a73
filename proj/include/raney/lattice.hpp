#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "raney/poset.hpp"

namespace raney {

// Finite lattice over dense ids with eagerly computed n x n operation
// tables. Construction validates everything it claims: bounds exist,
// meets and joins are genuine greatest lower / least upper bounds, and
// when the Heyting table is present it satisfies the adjunction.
struct FiniteLattice {
    FinitePoset ord;
    int bottom = -1, top = -1;
    std::vector<int> meet_t, join_t, hey_t;
    bool distributive = false;
    bool has_heyting = false;
    // When built from a poset of downsets, the set each element denotes.
    std::vector<Bits> elem_bits;

    int n() const { return ord.n; }
    bool leq(int a, int b) const { return ord.leq(a, b); }
    bool lt(int a, int b) const { return ord.lt(a, b); }
    int meet(int a, int b) const { return meet_t[a * n() + b]; }
    int join(int a, int b) const { return join_t[a * n() + b]; }

    int heyting(int a, int b) const {
        if (!has_heyting) throw error("lattice has no Heyting operation");
        return hey_t[a * n() + b];
    }

    Bits up_mask(int a) const { return ord.up[a]; }
    Bits down_mask(int a) const { return ord.down_mask(a); }
    Bits all_mask() const { return full_mask(n()); }

    // Meet/join over an element mask; empty mask gives top/bottom.
    int meet_mask(Bits s) const {
        int acc = top;
        for_each_bit(s, [&](int i) { acc = meet(acc, i); });
        return acc;
    }
    int join_mask(Bits s) const {
        int acc = bottom;
        for_each_bit(s, [&](int i) { acc = join(acc, i); });
        return acc;
    }

    bool is_prime(int p) const {
        if (p == top) return false;
        for (int x = 0; x < n(); ++x)
            for (int y = 0; y < n(); ++y)
                if (leq(meet(x, y), p) && !leq(x, p) && !leq(y, p)) return false;
        return true;
    }

    std::vector<int> primes() const {
        std::vector<int> out;
        for (int p = 0; p < n(); ++p)
            if (is_prime(p)) out.push_back(p);
        return out;
    }

    // A prime p is covered iff the meet of everything strictly above it
    // stays strictly above it. That single meet decides the general
    // quantifier: any family meeting down to p must contain an element
    // not strictly above p, which then equals p.
    bool is_covered_prime(int p) const {
        if (!is_prime(p)) throw error("not-prime");
        return meet_mask(ord.strict_up(p)) != p;
    }

    std::vector<int> covered_primes() const {
        std::vector<int> out;
        for (int p : primes())
            if (is_covered_prime(p)) out.push_back(p);
        return out;
    }

    bool is_maximal_prime(int p) const {
        if (!is_prime(p)) throw error("not-prime");
        return ord.strict_up(p) == bit(top);
    }

    int complement_of(int a) const {
        for (int b = 0; b < n(); ++b)
            if (meet(a, b) == bottom && join(a, b) == top) return b;
        return -1;
    }

    bool is_boolean() const {
        if (!distributive) return false;
        for (int a = 0; a < n(); ++a)
            if (complement_of(a) < 0) return false;
        return true;
    }

    // a <= b fails, yet some c joins a to the top while leaving b short of it.
    bool is_subfit() const {
        for (int a = 0; a < n(); ++a)
            for (int b = 0; b < n(); ++b) {
                if (leq(a, b)) continue;
                bool found = false;
                for (int c = 0; c < n() && !found; ++c)
                    if (join(a, c) == top && join(b, c) != top) found = true;
                if (!found) return false;
            }
        return true;
    }
};

namespace detail {

inline int bound_of(const FinitePoset& p, Bits candidates, bool greatest) {
    int found = -1;
    for_each_bit(candidates, [&](int g) {
        bool ok = true;
        for_each_bit(candidates, [&](int x) {
            if (greatest ? !p.leq(x, g) : !p.leq(g, x)) ok = false;
        });
        if (ok) found = g;
    });
    return found;
}

}  // namespace detail

// Builds the lattice structure on an arbitrary validated poset. Fails if
// some pair has no meet or join. `want_heyting` additionally computes the
// implication table and fails when some max{x : x & a <= b} is missing.
inline FiniteLattice lattice_from_poset(FinitePoset ord, bool want_heyting = true) {
    FiniteLattice L;
    L.ord = std::move(ord);
    const int n = L.n();
    if (n == 0) throw error("lattice: empty carrier");

    for (int i = 0; i < n; ++i) {
        if (L.ord.up[i] == bit(i)) {
            if (L.top >= 0 && L.top != i) throw error("lattice: no greatest element");
            L.top = i;
        }
        if (L.ord.down_mask(i) == bit(i)) {
            if (L.bottom >= 0 && L.bottom != i) throw error("lattice: no least element");
            L.bottom = i;
        }
    }
    // In a finite poset with all binary meets/joins these exist; recheck anyway.
    if (L.top < 0 || L.bottom < 0) throw error("lattice: missing bound");

    L.meet_t.assign(n * n, -1);
    L.join_t.assign(n * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Bits lower = L.down_mask(a) & L.down_mask(b);
            Bits upper = L.up_mask(a) & L.up_mask(b);
            int m = detail::bound_of(L.ord, lower, true);
            int j = detail::bound_of(L.ord, upper, false);
            if (m < 0) throw error("lattice: pair without meet");
            if (j < 0) throw error("lattice: pair without join");
            L.meet_t[a * n + b] = m;
            L.join_t[a * n + b] = j;
        }

    L.distributive = true;
    for (int a = 0; a < n && L.distributive; ++a)
        for (int b = 0; b < n && L.distributive; ++b)
            for (int c = 0; c < n; ++c)
                if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) {
                    L.distributive = false;
                    break;
                }

    if (want_heyting) {
        L.hey_t.assign(n * n, -1);
        L.has_heyting = true;
        for (int a = 0; a < n && L.has_heyting; ++a)
            for (int b = 0; b < n; ++b) {
                Bits below = 0;
                for (int x = 0; x < n; ++x)
                    if (L.leq(L.meet(x, a), b)) below |= bit(x);
                int h = detail::bound_of(L.ord, below, true);
                // The greatest such x must itself satisfy x & a <= b.
                if (h < 0 || !has_bit(below, h)) {
                    L.has_heyting = false;
                    L.hey_t.clear();
                    break;
                }
                L.hey_t[a * n + b] = h;
            }
        if (!L.has_heyting && L.distributive)
            throw error("lattice: distributive but Heyting operation missing");
    }
    return L;
}

inline FiniteLattice lattice_from_leq(int n, const std::function<bool(int, int)>& leq,
                                      bool want_heyting = true) {
    std::vector<Bits> up(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq(i, j)) up[i] |= bit(j);
    return lattice_from_poset(FinitePoset(n, std::move(up)), want_heyting);
}

// Down-closed subsets of P ordered by inclusion: always a distributive
// lattice with meet = intersection and join = union. Elements are sorted
// by (size, value), which is a linear extension with bottom first.
inline FiniteLattice downset_lattice(const FinitePoset& p) {
    std::vector<Bits> ds = p.downsets();
    std::sort(ds.begin(), ds.end(), [](Bits a, Bits b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
    if (ds.size() > 64) throw error("downset lattice too large");
    const int n = (int)ds.size();
    FiniteLattice L = lattice_from_leq(n, [&](int i, int j) { return is_subset(ds[i], ds[j]); });
    L.elem_bits = ds;
    if (!L.distributive) throw error("downset lattice failed distributivity check");
    return L;
}

inline FiniteLattice dual_lattice(const FiniteLattice& L, bool want_heyting = true) {
    return lattice_from_poset(dual_poset(L.ord), want_heyting);
}

// Named small frames used throughout tests and the CLI.
inline FiniteLattice frame_2() { return downset_lattice(antichain_poset(1)); }
inline FiniteLattice chain_frame(int elems) { return downset_lattice(chain_poset(elems - 1)); }
inline FiniteLattice diamond_frame() { return downset_lattice(antichain_poset(2)); }
inline FiniteLattice boolean_frame(int atoms) { return downset_lattice(antichain_poset(atoms)); }

}  // namespace raney

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "raney/lattice.hpp"

namespace raney {

// Finite topological space: point ids 0..n-1 and the full family of open
// sets as masks. The family is validated to be a topology; opens are kept
// sorted by (size, value).
struct FiniteSpace {
    int n = 0;
    std::vector<Bits> opens;

    FiniteSpace() = default;
    FiniteSpace(int n_, std::vector<Bits> opens_) : n(n_), opens(std::move(opens_)) {
        normalize();
        validate();
    }

    bool is_open(Bits s) const { return std::binary_search(opens.begin(), opens.end(), s, cmp); }

    // x <= y iff every open containing x contains y.
    bool spec_leq(int x, int y) const {
        for (Bits u : opens)
            if (has_bit(u, x) && !has_bit(u, y)) return false;
        return true;
    }

    bool is_t0() const {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && spec_leq(x, y) && spec_leq(y, x)) return false;
        return true;
    }

    Bits closure(Bits s) const {  // smallest closed superset
        Bits c = full_mask(n);
        for (Bits u : opens) {
            Bits cl = full_mask(n) & ~u;
            if (is_subset(s, cl)) c &= cl;
        }
        return c;
    }

    // Neighborhood filter of a point as a mask over open-set indices.
    Bits nbhd_mask(int x) const {
        Bits m = 0;
        for (size_t i = 0; i < opens.size(); ++i)
            if (has_bit(opens[i], x)) m |= bit((int)i);
        return m;
    }

    static bool cmp(Bits a, Bits b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    }

   private:
    void normalize() {
        std::sort(opens.begin(), opens.end(), cmp);
        opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    }
    void validate() const {
        if (n < 0 || n > 32) throw error("space too large");
        if (!is_open(0) || !is_open(full_mask(n))) throw error("topology must contain {} and X");
        for (Bits u : opens) {
            if (u & ~full_mask(n)) throw error("open set mentions unknown point");
            for (Bits v : opens) {
                if (!is_open(u | v)) throw error("topology not closed under union");
                if (!is_open(u & v)) throw error("topology not closed under intersection");
            }
        }
    }
};

inline FinitePoset specialization(const FiniteSpace& X) {
    if (!X.is_t0()) throw error("not-T0");
    std::vector<Bits> up(X.n, 0);
    for (int x = 0; x < X.n; ++x)
        for (int y = 0; y < X.n; ++y)
            if (X.spec_leq(x, y)) up[x] |= bit(y);
    return FinitePoset(X.n, std::move(up));
}

// Frame of opens, ordered by inclusion; elem_bits holds the point sets.
inline FiniteLattice omega_lattice(const FiniteSpace& X) {
    const auto& ops = X.opens;
    if (ops.size() > 64) throw error("too many opens");
    FiniteLattice L = lattice_from_leq((int)ops.size(),
                                       [&](int i, int j) { return is_subset(ops[i], ops[j]); });
    L.elem_bits = ops;
    return L;
}

// Saturated sets = upsets of specialization. For finite spaces this is
// the same family as the opens (finite spaces are Alexandrov); that
// collapse is checked, never assumed.
inline std::vector<Bits> saturated_sets(const FiniteSpace& X) {
    FinitePoset sp = specialization(X);
    std::vector<Bits> ups = sp.upsets();
    std::sort(ups.begin(), ups.end(), FiniteSpace::cmp);
    return ups;
}

inline bool alexandrov_collapse(const FiniteSpace& X) { return saturated_sets(X) == X.opens; }

// U(X) as a lattice under inclusion.
inline FiniteLattice saturated_lattice(const FiniteSpace& X) {
    auto sats = saturated_sets(X);
    if (sats.size() > 64) throw error("too many saturated sets");
    FiniteLattice L = lattice_from_leq((int)sats.size(),
                                       [&](int i, int j) { return is_subset(sats[i], sats[j]); });
    L.elem_bits = sats;
    return L;
}

// Alexandrov space of a poset: opens are exactly the upsets.
inline FiniteSpace alexandrov_space(const FinitePoset& p) {
    return FiniteSpace(p.n, p.upsets());
}

inline FiniteSpace sierpinski_space() {
    // two points, the top one open
    return FiniteSpace(2, {0, bit(1), bit(0) | bit(1)});
}

inline FiniteSpace discrete_space(int n) {
    std::vector<Bits> opens;
    for (Bits s = 0; s <= full_mask(n); ++s) {
        opens.push_back(s);
        if (s == full_mask(n)) break;
    }
    return FiniteSpace(n, std::move(opens));
}

inline FiniteSpace indiscrete_space(int n) { return FiniteSpace(n, {0, full_mask(n)}); }

// --- point-set property oracles (independent of the filter machinery) ------

inline bool pointset_sober(const FiniteSpace& X) {
    // every irreducible closed set is the closure of exactly one point
    std::vector<Bits> closed;
    for (Bits u : X.opens) closed.push_back(full_mask(X.n) & ~u);
    for (Bits c : closed) {
        if (c == 0) continue;
        bool irreducible = true;
        for (Bits a : closed)
            for (Bits b : closed)
                if (a != c && b != c && (a | b) == c) irreducible = false;
        if (!irreducible) continue;
        int generic = 0;
        for (int x = 0; x < X.n; ++x)
            if (X.closure(bit(x)) == c) ++generic;
        if (generic != 1) return false;
    }
    return true;
}

inline bool pointset_td(const FiniteSpace& X) {
    // every point is open minus open
    for (int x = 0; x < X.n; ++x) {
        bool found = false;
        for (Bits u : X.opens)
            for (Bits v : X.opens)
                if ((u & ~v) == bit(x)) found = true;
        if (!found) return false;
    }
    return true;
}

inline bool pointset_t1(const FiniteSpace& X) {
    for (int x = 0; x < X.n; ++x)
        if (X.closure(bit(x)) != bit(x)) return false;
    return true;
}

// All topologies on n points up to homeomorphism (n <= 3 is all that is
// needed; the family of opens is brute-forced as a subset of P(P(X))).
inline std::vector<FiniteSpace> all_topologies(int n) {
    if (n < 1 || n > 3) throw error("topology enumeration supported for 1..3 points");
    const int subsets = 1 << n;
    std::vector<std::vector<Bits>> seen_keys;
    std::vector<FiniteSpace> out;

    std::vector<int> perm(n);
    for (Bits fam = 0; fam < (Bits{1} << subsets); ++fam) {
        if (!has_bit(fam, 0) || !has_bit(fam, subsets - 1)) continue;
        std::vector<Bits> opens;
        for (int s = 0; s < subsets; ++s)
            if (has_bit(fam, s)) opens.push_back((Bits)s);
        bool closed = true;
        for (Bits u : opens)
            for (Bits v : opens) {
                if (!has_bit(fam, (int)(u | v)) || !has_bit(fam, (int)(u & v))) closed = false;
            }
        if (!closed) continue;
        // canonical key over point relabelings
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<Bits> best;
        do {
            std::vector<Bits> img;
            for (Bits u : opens) {
                Bits w = 0;
                for_each_bit(u, [&](int i) { w |= bit(perm[i]); });
                img.push_back(w);
            }
            std::sort(img.begin(), img.end());
            if (best.empty() || img < best) best = img;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (std::find(seen_keys.begin(), seen_keys.end(), best) == seen_keys.end()) {
            seen_keys.push_back(best);
            out.emplace_back(n, opens);
        }
    }
    return out;
}

// --- the two symbolic infinite spaces ---------------------------------------

// CofiniteNat: N with the cofinite topology. T1 (singletons are closed),
// hence T_D, but not sober: N itself is an irreducible closed set (it is
// not a union of two finite sets) with no generic point.
//
// CofiniteNatPlusGeneric: N u {*} where the nonempty opens are the
// cofinite sets containing *. Sober: the irreducible closed sets are the
// singletons {n} and the whole space, which is the closure of *. Not T_D:
// {*} is not open-minus-open, because any open around * is cofinite and
// the open to subtract would have to be empty. Not T1: {*} is not closed.
enum class SymbolicSpace { cofinite_nat, cofinite_nat_generic };

struct SymbolicSpaceFacts {
    bool sober, td, t1;
    std::string specialization;  // description of the order
    std::string saturated;       // description of U(X)
};

inline SymbolicSpaceFacts pointset_facts(SymbolicSpace s) {
    switch (s) {
        case SymbolicSpace::cofinite_nat:
            return {false, true, true, "antichain on N",
                    "all subsets of N (discrete specialization)"};
        case SymbolicSpace::cofinite_nat_generic:
            return {true, false, false, "antichain on N with n <= * for every n",
                    "{} and the sets S u {*} for S <= N"};
    }
    throw error("unknown symbolic space");
}

// Saturated sets of CofiniteNatPlusGeneric, finitely supported: the empty
// set or an N-part (finite or cofinite) together with the star.
struct StarUpset {
    bool empty = true;
    bool nat_cofinite = false;  // N-part = N \ mask when true, = mask when false
    Bits mask = 0;

    static StarUpset none() { return {}; }
    static StarUpset with_star_fin(Bits m) { return StarUpset{false, false, m}; }
    static StarUpset with_star_cof(Bits m) { return StarUpset{false, true, m}; }
};

inline bool star_upset_contains_nat(const StarUpset& u, int point) {
    if (u.empty) return false;
    return u.nat_cofinite ? !has_bit(u.mask, point) : has_bit(u.mask, point);
}

inline bool star_upset_is_upset(const StarUpset&) {
    // Everything of this shape is an upset: the only strict order
    // relation is n <= *, and the star is present whenever the set is
    // nonempty.
    return true;
}

}  // namespace raney

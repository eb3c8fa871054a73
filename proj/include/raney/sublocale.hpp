#pragma once

#include <vector>

#include "raney/filter.hpp"
#include "raney/lattice.hpp"

namespace raney {

// Sublocales of a finite frame as element masks: subsets closed under all
// meets (so the empty meet 1 is in) and under x -> (-) for every x.

inline bool is_sublocale(const FiniteLattice& L, Bits s) {
    if (!has_bit(s, L.top)) return false;
    bool ok = true;
    for_each_bit(s, [&](int a) {
        for_each_bit(s, [&](int b) {
            if (!has_bit(s, L.meet(a, b))) ok = false;
        });
        for (int x = 0; x < L.n(); ++x)
            if (!has_bit(s, L.heyting(x, a))) ok = false;
    });
    return ok;
}

inline Bits meet_closure(const FiniteLattice& L, Bits s) {
    Bits cur = s | bit(L.top);
    for (bool changed = true; changed;) {
        changed = false;
        Bits add = 0;
        for_each_bit(cur, [&](int a) {
            for_each_bit(cur, [&](int b) {
                int m = L.meet(a, b);
                if (!has_bit(cur | add, m)) add |= bit(m);
            });
        });
        if (add) {
            cur |= add;
            changed = true;
        }
    }
    return cur;
}

// o(a) = { a -> b : b in L },  c(a) = up(a),  b(a) = { x -> a : x in L }.
inline Bits open_sl(const FiniteLattice& L, int a) {
    Bits s = 0;
    for (int b = 0; b < L.n(); ++b) s |= bit(L.heyting(a, b));
    return s;
}

inline Bits closed_sl(const FiniteLattice& L, int a) { return L.up_mask(a); }

inline Bits boolean_sl(const FiniteLattice& L, int a) {
    Bits s = 0;
    for (int x = 0; x < L.n(); ++x) s |= bit(L.heyting(x, a));
    return s;
}

// Smallest sublocale containing X: the meet closure of {a -> x}.
inline Bits smallest_sublocale(const FiniteLattice& L, Bits X) {
    Bits gen = 0;
    for (int a = 0; a < L.n(); ++a)
        for_each_bit(X, [&](int x) { gen |= bit(L.heyting(a, x)); });
    return meet_closure(L, gen);
}

// Joins in S(L) are meet closures of unions: a union of sublocales is
// already stable under x -> (-), and meet-closing keeps it so because
// x -> meet(m_j) = meet(x -> m_j).
inline Bits sl_join(const FiniteLattice& L, Bits s, Bits t) { return meet_closure(L, s | t); }

inline Bits sl_join_many(const FiniteLattice& L, const std::vector<Bits>& ss) {
    Bits u = 0;
    for (Bits s : ss) u |= s;
    return meet_closure(L, u);
}

struct SublocaleEnumeration {
    std::vector<Bits> all;
    bool contains(Bits s) const {
        for (Bits t : all)
            if (t == s) return true;
        return false;
    }
};

inline SublocaleEnumeration enumerate_sublocales(const FiniteLattice& L,
                                                 int cap = kDefaultSublocCap) {
    if (L.n() > cap) throw error("size-cap exceeded for sublocale enumeration");
    SublocaleEnumeration out;
    Bits rest = L.all_mask() & ~bit(L.top);
    for_each_subset(rest, [&](Bits s) {
        Bits cand = s | bit(L.top);
        if (is_sublocale(L, cand)) out.all.push_back(cand);
    });
    return out;
}

// Join computed the definitional way, as the intersection of every listed
// sublocale containing the union. Agrees with sl_join; both are kept and
// cross-checked.
inline Bits sl_join_enum(const FiniteLattice& L, const SublocaleEnumeration& subs, Bits s, Bits t) {
    Bits acc = L.all_mask();
    for (Bits u : subs.all)
        if (is_subset(s | t, u)) acc &= u;
    return acc;
}

// Difference S \ T: the least sublocale U with S <= T v U, computed as
// the meet over the enumerated candidates. The join here must be the
// sublocale join: on the eight-element Boolean frame the plain set union
// admits strictly fewer candidates and the resulting "difference" breaks
// the co-Heyting adjunction S\T <= U iff S <= T v U.
inline Bits sl_difference(const FiniteLattice& L, const SublocaleEnumeration& subs, Bits s, Bits t) {
    Bits acc = L.all_mask();
    for (Bits u : subs.all)
        if (is_subset(s, sl_join(L, t, u))) acc &= u;
    return acc;
}

inline Bits sl_supplement(const FiniteLattice& L, const SublocaleEnumeration& subs, Bits s) {
    return sl_difference(L, subs, L.all_mask(), s);
}

// nu_S(x) = least element of S above x; the frame surjection onto S.
inline int sl_nucleus(const FiniteLattice& L, Bits s, int x) {
    return L.meet_mask(s & L.up_mask(x));
}

// ker(S) = {a : S <= o(a)},  coker(S) = {a : c(a) <= S}.
inline Bits ker_set(const FiniteLattice& L, Bits s) {
    Bits out = 0;
    for (int a = 0; a < L.n(); ++a)
        if (is_subset(s, open_sl(L, a))) out |= bit(a);
    return out;
}

inline Bits coker_set(const FiniteLattice& L, Bits s) {
    Bits out = 0;
    for (int a = 0; a < L.n(); ++a)
        if (is_subset(closed_sl(L, a), s)) out |= bit(a);
    return out;
}

// The same filters as symbolic representations; on a finite frame both
// are principal at the least member.
inline FilterRepr ker(const FiniteLattice& L, Bits s) {
    Bits f = ker_set(L, s);
    if (!set_is_filter(L, f)) throw error("ker did not produce a filter");
    return FilterRepr::principal(Elem::fin(L.meet_mask(f)));
}

inline FilterRepr coker(const FiniteLattice& L, Bits s) {
    Bits f = coker_set(L, s);
    if (!set_is_filter(L, f)) throw error("coker did not produce a filter");
    return FilterRepr::principal(Elem::fin(L.meet_mask(f)));
}

namespace detail {

inline bool contains_mask(const std::vector<Bits>& v, Bits s) {
    for (Bits t : v)
        if (t == s) return true;
    return false;
}

template <class Combine>
std::vector<Bits> closure_under(std::vector<Bits> seed, Combine&& comb) {
    std::vector<Bits> out;
    for (Bits s : seed)
        if (!contains_mask(out, s)) out.push_back(s);
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            Bits c = comb(out[i], out[j]);
            if (!contains_mask(out, c)) out.push_back(c);
        }
    return out;
}

}  // namespace detail

// Fitted sublocales: all intersections of open ones (including the empty
// intersection, L itself).
inline std::vector<Bits> fitted_sublocales(const FiniteLattice& L) {
    std::vector<Bits> seed = {L.all_mask()};
    for (int a = 0; a < L.n(); ++a) seed.push_back(open_sl(L, a));
    return detail::closure_under(std::move(seed), [](Bits a, Bits b) { return a & b; });
}

// Joins of closed sublocales (including the empty join {1}).
inline std::vector<Bits> joins_of_closed(const FiniteLattice& L) {
    std::vector<Bits> seed = {bit(L.top)};
    for (int a = 0; a < L.n(); ++a) seed.push_back(closed_sl(L, a));
    return detail::closure_under(std::move(seed),
                                 [&](Bits a, Bits b) { return sl_join(L, a, b); });
}

// An element c of a coframe is linear when joins distribute over meeting
// with it; checked for binary and ternary families of sublocales.
inline bool sl_is_linear(const FiniteLattice& L, const SublocaleEnumeration& subs, Bits c) {
    for (Bits x : subs.all)
        for (Bits y : subs.all) {
            if (sl_join(L, x & c, y & c) != (sl_join(L, x, y) & c)) return false;
            for (Bits z : subs.all) {
                Bits lhs = sl_join(L, sl_join(L, x & c, y & c), z & c);
                Bits rhs = sl_join_many(L, {x, y, z}) & c;
                if (lhs != rhs) return false;
            }
        }
    return true;
}

// Exactness of the surjection nu_S: for every family X with an exact meet
// (every meet in a finite frame is one), meet of nu over X must land at
// nu of the meet. Quantifies over all subsets of the carrier.
inline bool is_exact_sublocale(const FiniteLattice& L, Bits s) {
    if (!is_sublocale(L, s)) throw error("not a sublocale");
    std::vector<int> nu(L.n());
    for (int x = 0; x < L.n(); ++x) nu[x] = sl_nucleus(L, s, x);
    bool ok = true;
    for_each_subset(L.all_mask(), [&](Bits X) {
        int lhs = L.top, m = L.top;
        for_each_bit(X, [&](int x) {
            lhs = L.meet(lhs, nu[x]);
            m = L.meet(m, x);
        });
        if (!L.leq(lhs, nu[m])) ok = false;
    });
    return ok;
}

// D-sublocale: the surjection sends covered primes of S to covered primes
// of L. Primes and coveredness inside S are read off the inherited order;
// meets agree with L and joins are nu of the L-join.
inline FiniteLattice sublocale_lattice(const FiniteLattice& L, Bits s) {
    std::vector<int> members;
    for_each_bit(s, [&](int x) { members.push_back(x); });
    const int k = (int)members.size();
    return lattice_from_leq(k, [&](int i, int j) { return L.leq(members[i], members[j]); });
}

inline bool is_D_sublocale(const FiniteLattice& L, Bits s) {
    if (!is_sublocale(L, s)) throw error("not a sublocale");
    std::vector<int> members;
    for_each_bit(s, [&](int x) { members.push_back(x); });
    FiniteLattice S = sublocale_lattice(L, s);
    for (int p : S.primes()) {
        if (!S.is_covered_prime(p)) continue;
        int pl = members[p];
        if (!L.is_prime(pl)) return false;  // right adjoints send primes to primes
        if (!L.is_covered_prime(pl)) return false;
    }
    return true;
}

}  // namespace raney

#pragma once

#include <string>
#include <vector>

#include "raney/sets.hpp"

namespace raney {

// Open set of the cofinite topology on N: either the empty set or a
// cofinite set stored by its finite complement. All operations are exact
// on this representation; nothing is approximated. Complements are kept
// inside {0..63}, which every operation preserves (they only shrink or
// combine by union).
struct CofElem {
    bool empty = true;
    Bits cmpl = 0;  // meaningful when !empty; the element is N minus cmpl

    bool operator==(const CofElem&) const = default;
};

inline CofElem cof_empty() { return CofElem{true, 0}; }
inline CofElem cof_whole() { return CofElem{false, 0}; }
inline CofElem cof(Bits complement) { return CofElem{false, complement}; }

inline bool cof_leq(const CofElem& a, const CofElem& b) {
    if (a.empty) return true;
    if (b.empty) return false;
    return is_subset(b.cmpl, a.cmpl);
}

inline CofElem cof_meet(const CofElem& a, const CofElem& b) {
    if (a.empty || b.empty) return cof_empty();
    return cof(a.cmpl | b.cmpl);  // intersection of cofinite sets is cofinite
}

inline CofElem cof_join(const CofElem& a, const CofElem& b) {
    if (a.empty) return b;
    if (b.empty) return a;
    return cof(a.cmpl & b.cmpl);
}

// a -> b = largest open x with x & a <= b.
//   a = 0:              whole.
//   a = N\S, b = 0:     an open meeting every cofinite set must be 0, so 0.
//   a = N\S, b = N\T:   x must avoid T\S, and N\(T\S) works, so N\(T\S).
inline CofElem cof_heyting(const CofElem& a, const CofElem& b) {
    if (a.empty) return cof_whole();
    if (b.empty) return cof_empty();
    return cof(b.cmpl & ~a.cmpl);
}

inline std::string cof_to_string(const CofElem& a) {
    if (a.empty) return "{}";
    if (a.cmpl == 0) return "N";
    std::string s = "N\\{";
    bool first = true;
    for_each_bit(a.cmpl, [&](int i) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    });
    return s + "}";
}

// ---------------------------------------------------------------------------
// Normal form for the filters of the cofinite frame that arise from the
// filter inventory (principal, prime-complement, arrow, finite meets).
//
// Every such filter is determined by a set W together with an "is it all
// of Filt" marker:   F = { N\T : T & W = 0 }  (+ the empty open iff F = L).
//
//   Principal(N\S)      : W = N\S (cofinite W)        -- T & (N\S) = 0 iff T <= S
//   Principal(0) = L    : W = 0, whole-filter marker
//   PrimeComplement(N\n): W = {n}                     -- x not<= N\{n} iff n in x
//   PrimeComplement(0)  : W = 0 (finite), no marker   -- all nonempty opens
//   Arrow(a,b), both cofinite with complements Ta,Tb:
//       { x : Tx & Ta <= Tb } = { x : Tx & (Ta\Tb) = 0 } : W = Ta\Tb (finite)
//   Arrow(0,b) = Principal(b); Arrow(a,0) = L.
//   Intersections union the W parts; finite-or-cofinite W is closed under
//   that, so the normal form is closed under the whole inventory.
// ---------------------------------------------------------------------------
struct FiltNF {
    bool all = false;      // F = L (the improper filter)
    bool w_cofinite = false;
    Bits m = 0;            // w_cofinite ? (W = N \ m) : (W = m)

    bool operator==(const FiltNF&) const = default;
};

inline FiltNF nf_all() { return FiltNF{true, false, 0}; }
inline FiltNF nf_generic() { return FiltNF{false, false, 0}; }      // all nonempty opens
inline FiltNF nf_top_only() { return FiltNF{false, true, 0}; }      // {N}

inline FiltNF nf_principal(const CofElem& a) {
    if (a.empty) return nf_all();
    return FiltNF{false, true, a.cmpl};
}

inline FiltNF nf_prime_complement(const CofElem& p) {
    if (p.empty) return nf_generic();
    if (popcount(p.cmpl) != 1) throw error("not-prime");
    return FiltNF{false, false, p.cmpl};
}

inline FiltNF nf_neighborhood(int point) { return FiltNF{false, false, bit(point)}; }

inline FiltNF nf_arrow(const CofElem& a, const CofElem& b) {
    if (b.empty) {
        // { x : 0 <= x v a } = L
        return nf_all();
    }
    if (a.empty) return nf_principal(b);
    Bits w = a.cmpl & ~b.cmpl;
    if (w == 0) return nf_all();  // b <= a already
    return FiltNF{false, false, w};
}

inline bool nf_member(const FiltNF& f, const CofElem& x) {
    if (x.empty) return f.all;
    if (f.all) return true;
    if (f.w_cofinite) return is_subset(x.cmpl, f.m);  // T & (N\m) = 0
    return (x.cmpl & f.m) == 0;
}

inline FiltNF nf_intersect(const FiltNF& a, const FiltNF& b) {
    if (a.all) return b;
    if (b.all) return a;
    if (!a.w_cofinite && !b.w_cofinite) return FiltNF{false, false, a.m | b.m};
    if (a.w_cofinite && b.w_cofinite) return FiltNF{false, true, a.m & b.m};
    const FiltNF& fin = a.w_cofinite ? b : a;
    const FiltNF& cofin = a.w_cofinite ? a : b;
    // W = fin.m | (N \ cofin.m) = N \ (cofin.m \ fin.m)
    return FiltNF{false, true, cofin.m & ~fin.m};
}

// Join in Filt(L): the filter generated by the union. Members are the
// x >= f1 & f2 with f_i in F_i, i.e. complements T <= T1 u T2 where T_i
// avoids W_i; such a split exists exactly when T avoids W1 & W2. The
// empty open only appears when one side already is L.
inline FiltNF nf_filter_join(const FiltNF& a, const FiltNF& b) {
    if (a.all || b.all) return nf_all();
    if (a.w_cofinite && b.w_cofinite)
        return FiltNF{false, true, a.m | b.m};  // (N\m1) & (N\m2) = N\(m1|m2)
    if (!a.w_cofinite && !b.w_cofinite) return FiltNF{false, false, a.m & b.m};
    const FiltNF& fin = a.w_cofinite ? b : a;     // W = fin.m
    const FiltNF& cof = a.w_cofinite ? a : b;     // W = N \ cof.m
    return FiltNF{false, false, fin.m & ~cof.m};  // finite intersection
}

// Pseudocomplement in Filt(L):  ~F = { x : x v f = N for all f in F }.
// For F = (W): x v f = N iff Tx & Tf = 0; Tf ranges over all finite sets
// avoiding W, so Tx must avoid N\W, i.e. Tx <= W.  Edge cases: ~L = {N},
// ~{N} = L.
inline FiltNF nf_pseudocomplement(const FiltNF& f) {
    if (f.all) return nf_top_only();
    if (f.w_cofinite) {
        if (f.m == 0) return nf_all();       // ~{N} = L
        return FiltNF{false, false, f.m};    // W' = N \ W where W = N\m
    }
    return FiltNF{false, true, f.m};         // W' = N \ W, stored complement = m
}

inline bool nf_is_regular(const FiltNF& f) { return nf_pseudocomplement(nf_pseudocomplement(f)) == f; }

// Completely prime filters of the cofinite frame: the neighborhood
// filters {x : n in x} and the generic filter of all nonempty opens.
inline bool nf_is_completely_prime(const FiltNF& f) {
    return !f.all && !f.w_cofinite && popcount(f.m) <= 1;
}

inline bool nf_is_generic(const FiltNF& f) { return f == nf_generic(); }

// Every element of the cofinite frame is compact (the topology is
// hereditarily compact: a directed family of finite complements with
// intersection inside S must reach a member inside S), so principal
// filters are Scott-open; neighborhood filters are completely prime,
// hence Scott-open; finite intersections preserve Scott-openness; and the
// generic filter is Scott-open because a directed join of opens is
// nonempty only if some member is. Every normal form is one of these.
inline bool nf_is_scott_open(const FiltNF&) { return true; }

// Exact filters are closed under exact meets. Every inventory shape other
// than the generic filter is an intersection of principal and covered
// prime-complement filters, all exact; the generic filter fails: the
// family of all nonempty opens has exact meet 0, which it omits.
inline bool nf_is_exact(const FiltNF& f) { return !nf_is_generic(f); }

// All completely prime filters are strongly exact, arrows and principals
// are exact hence strongly exact, and intersections preserve it.
inline bool nf_is_strongly_exact(const FiltNF&) { return true; }

inline std::string nf_to_string(const FiltNF& f) {
    if (f.all) return "Filt:all";
    if (f.w_cofinite) return "Filt:up(" + cof_to_string(cof(f.m)) + ")";
    if (f.m == 0) return "Filt:generic";
    std::string s = "Filt:nbhd{";
    bool first = true;
    for_each_bit(f.m, [&](int i) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    });
    return s + "}";
}

}  // namespace raney

#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "raney/frame.hpp"

namespace raney {

enum class Tri { yes, no, unknown };

inline std::string tri_to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "true";
        case Tri::no: return "false";
        default: return "unknown";
    }
}

// Symbolic filter of a frame with decidable membership:
//   Principal(a)        x in F  iff  a <= x
//   Generated(G)        x in F  iff  meet(G) <= x
//   PrimeComplement(p)  x in F  iff  x not<= p
//   Arrow(a,b)          x in F  iff  b <= x v a      (up a -> up b in Filt)
//   Meet(Fs)            intersection of memberships
struct FilterRepr {
    enum class Kind { principal, generated, prime_complement, arrow, meet };
    Kind kind = Kind::principal;
    std::vector<Elem> elems;
    std::vector<FilterRepr> children;

    static FilterRepr principal(Elem a) { return FilterRepr{Kind::principal, {a}, {}}; }
    static FilterRepr generated(std::vector<Elem> g) {
        return FilterRepr{Kind::generated, std::move(g), {}};
    }
    static FilterRepr prime_complement(Elem p) {
        return FilterRepr{Kind::prime_complement, {p}, {}};
    }
    static FilterRepr arrow(Elem a, Elem b) { return FilterRepr{Kind::arrow, {a, b}, {}}; }
    static FilterRepr meet_of(std::vector<FilterRepr> fs) {
        FilterRepr f;
        f.kind = Kind::meet;
        // nests are flattened, nothing more
        for (auto& g : fs) {
            if (g.kind == Kind::meet)
                for (auto& h : g.children) f.children.push_back(std::move(h));
            else
                f.children.push_back(std::move(g));
        }
        return f;
    }
};

inline bool filter_member(const FrameHandle& F, const FilterRepr& f, const Elem& x) {
    using K = FilterRepr::Kind;
    switch (f.kind) {
        case K::principal:
            return F.leq(f.elems[0], x);
        case K::generated: {
            Elem m = F.top();
            for (const Elem& g : f.elems) m = F.meet(m, g);
            return F.leq(m, x);
        }
        case K::prime_complement:
            return !F.leq(x, f.elems[0]);
        case K::arrow:
            return F.leq(f.elems[1], F.join(x, f.elems[0]));
        case K::meet:
            for (const auto& g : f.children)
                if (!filter_member(F, g, x)) return false;
            return true;
    }
    throw error("bad filter representation");
}

// ~F for finitely generated F: the filter {x : x v g = 1 for all
// generators g}, one arrow per generator.
inline FilterRepr filter_pseudocomplement(const FrameHandle& F, const FilterRepr& f) {
    using K = FilterRepr::Kind;
    std::vector<Elem> gens;
    if (f.kind == K::principal || f.kind == K::generated) {
        gens = f.elems;
    } else if (f.kind == K::prime_complement && F.is_finite()) {
        // On a finite frame the complement of a prime is principal.
        Elem m = F.top();
        for (int x = 0; x < F.lat.n(); ++x)
            if (filter_member(F, f, Elem::fin(x))) m = F.meet(m, Elem::fin(x));
        gens = {m};
    } else {
        throw error("unsupported-representation");
    }
    std::vector<FilterRepr> arrows;
    for (const Elem& g : gens) arrows.push_back(FilterRepr::arrow(g, F.top()));
    if (arrows.size() == 1) return arrows[0];
    return FilterRepr::meet_of(std::move(arrows));
}

// --- extensional treatment over finite frames -------------------------------

// Member mask of a representation over the element universe.
inline Bits filter_set(const FrameHandle& F, const FilterRepr& f) {
    if (!F.is_finite()) throw error("filter_set needs a finite frame");
    Bits s = 0;
    for (int x = 0; x < F.lat.n(); ++x)
        if (filter_member(F, f, Elem::fin(x))) s |= bit(x);
    return s;
}

inline bool set_is_filter(const FiniteLattice& L, Bits s) {
    if (!has_bit(s, L.top)) return false;
    bool ok = true;
    for_each_bit(s, [&](int a) {
        for (int b = 0; b < L.n(); ++b) {
            if (L.leq(a, b) && !has_bit(s, b)) ok = false;       // upward closed
        }
        for_each_bit(s, [&](int b) {
            if (!has_bit(s, L.meet(a, b))) ok = false;           // meet closed
        });
    });
    return ok;
}

// ~F = {x : x v f = 1 for all f in F} as a mask.
inline Bits set_pseudocomplement(const FiniteLattice& L, Bits f) {
    Bits out = 0;
    for (int x = 0; x < L.n(); ++x) {
        bool all = true;
        for_each_bit(f, [&](int g) {
            if (L.join(x, g) != L.top) all = false;
        });
        if (all) out |= bit(x);
    }
    return out;
}

inline bool set_is_regular(const FiniteLattice& L, Bits f) {
    return set_pseudocomplement(L, set_pseudocomplement(L, f)) == f;
}

// Inaccessible by arbitrary joins; the empty join 0 rules out improper
// filters, and binary inaccessibility gives every finite family.
inline bool set_is_completely_prime(const FiniteLattice& L, Bits f) {
    if (has_bit(f, L.bottom)) return false;
    for (int x = 0; x < L.n(); ++x)
        for (int y = 0; y < L.n(); ++y)
            if (has_bit(f, L.join(x, y)) && !has_bit(f, x) && !has_bit(f, y)) return false;
    return true;
}

// All up-closed subsets, by descending one linear extension and only
// admitting an element once everything above it is in.
inline std::vector<Bits> enumerate_upsets(const FiniteLattice& L) {
    std::vector<int> order(L.n());
    {
        std::vector<int> idx(L.n());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            int pa = popcount(L.up_mask(a)), pb = popcount(L.up_mask(b));
            if (pa != pb) return pa < pb;  // top first
            return a < b;
        });
        order = idx;
    }
    std::vector<Bits> out;
    std::function<void(size_t, Bits)> walk = [&](size_t i, Bits cur) {
        if (i == order.size()) {
            out.push_back(cur);
            return;
        }
        int x = order[i];
        walk(i + 1, cur);
        if (is_subset(L.up_mask(x) & ~bit(x), cur)) walk(i + 1, cur | bit(x));
    };
    walk(0, 0);
    return out;
}

// Filters = nonempty upsets closed under binary meets.
inline std::vector<Bits> enumerate_filters(const FiniteLattice& L) {
    std::vector<Bits> out;
    for (Bits u : enumerate_upsets(L)) {
        if (u == 0) continue;
        bool closed = true;
        for_each_bit(u, [&](int a) {
            for_each_bit(u, [&](int b) {
                if (!has_bit(u, L.meet(a, b))) closed = false;
            });
        });
        if (closed) out.push_back(u);
    }
    return out;
}

// The lattice of all filters of a finite frame, with the verified
// anti-isomorphism a -> up(a).
struct FiltFrame {
    FiniteLattice lat;              // the filter frame, = L with order reversed
    std::vector<Bits> filters;      // filters[i] is the member mask of element i
    std::vector<int> up_of;         // up_of[a] = index of the principal filter at a
};

inline FiltFrame filt_frame(const FiniteLattice& L) {
    auto filters = enumerate_filters(L);
    if ((int)filters.size() != L.n())
        throw error("filter frame degeneracy failed: a finite frame has one filter per element");
    FiltFrame ff;
    ff.lat = dual_lattice(L);
    ff.filters.resize(L.n());
    ff.up_of.assign(L.n(), -1);
    for (int a = 0; a < L.n(); ++a) {
        Bits up = L.up_mask(a);
        bool found = false;
        for (Bits f : filters)
            if (f == up) found = true;
        if (!found) throw error("filter frame: principal filter missing from enumeration");
        ff.filters[a] = up;
        ff.up_of[a] = a;
    }
    // up(-) : L^op -> Filt must be an order isomorphism.
    for (int a = 0; a < L.n(); ++a)
        for (int b = 0; b < L.n(); ++b)
            if (L.leq(a, b) != is_subset(L.up_mask(b), L.up_mask(a)))
                throw error("filter frame: up(-) is not an order isomorphism");
    return ff;
}

// --- classification ---------------------------------------------------------

struct FilterClassification {
    Tri exact = Tri::unknown;
    Tri strongly_exact = Tri::unknown;
    Tri regular = Tri::unknown;
    Tri completely_prime = Tri::unknown;
    Tri scott_open = Tri::unknown;
};

inline FilterClassification classify_filter(const FrameHandle& F, const FilterRepr& f) {
    FilterClassification out;
    if (F.is_finite()) {
        const FiniteLattice& L = F.lat;
        Bits s = filter_set(F, f);
        if (!set_is_filter(L, s)) throw error("representation does not denote a filter");
        // Every filter of a finite frame is principal, hence closed under
        // all meets: exact and strongly exact. Every directed family has
        // a greatest member, so every filter is Scott-open.
        out.exact = Tri::yes;
        out.strongly_exact = Tri::yes;
        out.scott_open = Tri::yes;
        out.regular = set_is_regular(L, s) ? Tri::yes : Tri::no;
        out.completely_prime = set_is_completely_prime(L, s) ? Tri::yes : Tri::no;
        return out;
    }
    if (f.kind == FilterRepr::Kind::prime_complement) {
        Elem p = f.elems[0];
        out.completely_prime = Tri::yes;
        out.strongly_exact = Tri::yes;  // completely prime filters always are
        out.exact = F.is_covered_prime(p) ? Tri::yes : Tri::no;
        out.regular = F.is_maximal_prime(p) ? Tri::yes : Tri::no;
        // Closed form per representation: a directed join of opens is
        // nonempty only if some member is, so prime-complement filters of
        // the cofinite frame are Scott-open.
        out.scott_open = Tri::yes;
        return out;
    }
    // No guessing for other representations on infinite frames.
    return out;
}

}  // namespace raney

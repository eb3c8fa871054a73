#pragma once

#include <functional>
#include <future>
#include <string>
#include <vector>

#include "raney/io.hpp"

namespace raney {

struct SuiteOptions {
    int max_points = 5;
    int window = kDefaultWindow;
    int subloc_cap = kDefaultSublocCap;
};

namespace detail {

// Aggregates a per-target law over many corpus entries into one check;
// the worst status wins and keeps its witness.
struct LawAggregator {
    std::vector<CheckResult>& out;

    static int rank(Status s) {
        switch (s) {
            case Status::fail: return 3;
            case Status::unknown: return 2;
            case Status::inventory_verified: return 1;
            default: return 0;
        }
    }

    void merge(const CheckResult& c) {
        for (auto& e : out) {
            if (e.id != c.id) continue;
            if (rank(c.status) > rank(e.status)) {
                e.status = c.status;
                e.witness = c.witness;
            }
            return;
        }
        out.push_back(c);
    }

    void add(const std::string& id, bool ok, const std::string& witness,
             Status good = Status::pass) {
        merge(CheckResult{id, ok ? good : Status::fail, ok ? "" : witness});
    }
};

// Deterministic parallel map over corpus entries: results are merged in
// input order regardless of completion order.
template <class T, class F>
std::vector<T> parallel_map(const std::vector<const CorpusEntry*>& items, F&& f) {
    std::vector<std::future<T>> futs;
    futs.reserve(items.size());
    for (const CorpusEntry* e : items)
        futs.push_back(std::async(std::launch::async, [&f, e] { return f(*e); }));
    std::vector<T> out;
    out.reserve(items.size());
    for (auto& fu : futs) out.push_back(fu.get());
    return out;
}

}  // namespace detail

// --- background: open/closed sublocale laws, primes, Heyting ------------------

inline std::vector<CheckResult> background_checks(const FiniteLattice& L, const std::string& id,
                                                  int cap) {
    std::vector<CheckResult> out;
    detail::LawAggregator agg{out};
    const int n = L.n();
    const bool capped = n <= cap;

    agg.add("o(1)=L and o(0)={1}",
            open_sl(L, L.top) == L.all_mask() && open_sl(L, L.bottom) == bit(L.top), id);
    agg.add("c(1)={1} and c(0)=L",
            closed_sl(L, L.top) == bit(L.top) && closed_sl(L, L.bottom) == L.all_mask(), id);

    bool o_join = true, o_meet = true, c_meet = true, c_join = true, compl_ok = true,
         order_ok = true, adj = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (sl_join(L, open_sl(L, a), open_sl(L, b)) != open_sl(L, L.join(a, b)))
                o_join = false;
            if ((open_sl(L, a) & open_sl(L, b)) != open_sl(L, L.meet(a, b))) o_meet = false;
            if ((closed_sl(L, a) & closed_sl(L, b)) != closed_sl(L, L.join(a, b))) c_meet = false;
            if (sl_join(L, closed_sl(L, a), closed_sl(L, b)) != closed_sl(L, L.meet(a, b)))
                c_join = false;
            if (is_subset(closed_sl(L, a), open_sl(L, b)) != (L.join(a, b) == L.top))
                order_ok = false;
            if (is_subset(open_sl(L, a), closed_sl(L, b)) != (L.meet(a, b) == L.bottom))
                order_ok = false;
            for (int x = 0; x < n; ++x)
                if (L.leq(L.meet(x, a), b) != L.leq(x, L.heyting(a, b))) adj = false;
        }
    for (int a = 0; a < n; ++a) {
        if ((open_sl(L, a) & closed_sl(L, a)) != bit(L.top)) compl_ok = false;
        if (sl_join(L, open_sl(L, a), closed_sl(L, a)) != L.all_mask()) compl_ok = false;
    }
    // ternary spot of the family versions inside the cap
    if (capped) {
        for (int a = 0; a < n && o_join; ++a)
            for (int b = 0; b < n && o_join; ++b)
                for (int c = 0; c < n; ++c) {
                    Bits lhs = sl_join_many(L, {open_sl(L, a), open_sl(L, b), open_sl(L, c)});
                    if (lhs != open_sl(L, L.join(L.join(a, b), c))) {
                        o_join = false;
                        break;
                    }
                    if ((closed_sl(L, a) & closed_sl(L, b) & closed_sl(L, c)) !=
                        closed_sl(L, L.join(L.join(a, b), c))) {
                        c_meet = false;
                        break;
                    }
                }
    }
    agg.add("joins of opens are opens of joins", o_join, id);
    agg.add("meets of opens are opens of meets", o_meet, id);
    agg.add("intersections of closed are closed of joins", c_meet, id);
    agg.add("joins of closed are closed of meets", c_join, id);
    agg.add("o(a) and c(a) are complements in S(L)", compl_ok, id);
    agg.add("c(a)<=o(b) iff a v b=1; o(a)<=c(b) iff a^b=0", order_ok, id);
    agg.add("heyting adjunction", adj, id);

    // prime laws
    bool hey_prime = true, bp_open = true;
    for (int p : L.primes()) {
        for (int x = 0; x < n; ++x) {
            int expect = L.leq(x, p) ? L.top : p;
            if (L.heyting(x, p) != expect) hey_prime = false;
            if (is_subset(boolean_sl(L, p), open_sl(L, x)) != !L.leq(x, p)) bp_open = false;
        }
        if (boolean_sl(L, p) != (bit(L.top) | bit(p))) bp_open = false;
    }
    agg.add("x->p collapses to 1 or p at primes", hey_prime, id);
    agg.add("b(p)={1,p} and b(p)<=o(x) iff x not<= p", bp_open, id);

    if (capped) {
        auto subs = enumerate_sublocales(L, cap);
        bool cjp = true, primes_bp = true, minimal = true, linear = true;
        for (int p : L.primes()) {
            Bits bp = boolean_sl(L, p);
            std::vector<Bits> others;
            for (Bits s : subs.all)
                if (!is_subset(bp, s)) others.push_back(s);
            Bits worst = sl_join_many(L, others);
            if (is_subset(bp, worst)) cjp = false;
        }
        // prime elements of the coframe S(L) -- its join-primes, the
        // coframe reading of primality -- are exactly the b(p)
        {
            const auto& ss = subs.all;
            FiniteLattice SL = lattice_from_leq(
                (int)ss.size(), [&](int i, int j) { return is_subset(ss[i], ss[j]); }, false);
            std::vector<Bits> expected;
            for (int p : L.primes()) expected.push_back(boolean_sl(L, p));
            std::vector<Bits> got;
            for (int q = 0; q < SL.n(); ++q) {
                if (q == SL.bottom) continue;
                bool jp = true;
                for (int x = 0; x < SL.n(); ++x)
                    for (int y = 0; y < SL.n(); ++y)
                        if (SL.leq(q, SL.join(x, y)) && !SL.leq(q, x) && !SL.leq(q, y)) jp = false;
                if (jp) got.push_back(ss[q]);
            }
            std::sort(expected.begin(), expected.end());
            std::sort(got.begin(), got.end());
            if (expected != got) primes_bp = false;
        }
        for_each_subset(L.all_mask(), [&](Bits X) {
            Bits s = smallest_sublocale(L, X);
            if (!is_sublocale(L, s) || !is_subset(X, s)) minimal = false;
            for (Bits t : subs.all)
                if (is_subset(X, t) && !is_subset(s, t)) minimal = false;
        });
        for (Bits s : subs.all) {
            Bits sup = sl_supplement(L, subs, s);
            bool complemented = (s & sup) == bit(L.top) && sl_join(L, s, sup) == L.all_mask();
            if (complemented && !sl_is_linear(L, subs, s)) linear = false;
        }
        agg.add("b(p) is completely join-prime in S(L)", cjp, id);
        agg.add("primes of S(L) are the b(p)", primes_bp, id);
        agg.add("smallest sublocale via a->x meets is minimal", minimal, id);
        agg.add("complemented sublocales are linear", linear, id);
    }
    return out;
}

// --- raney-core: the finite degeneracy ----------------------------------------

inline std::vector<CheckResult> raney_core_checks(const FrameHandle& F, const std::string& id) {
    if (!F.is_finite())
        throw error("raney-core targets finite frames; the cofinite fixtures live in `fixtures`");
    std::vector<CheckResult> out;
    detail::LawAggregator agg{out};
    const FiniteLattice& L = F.lat;

    auto filters = enumerate_filters(L);
    bool principal = (int)filters.size() == L.n();
    bool closed_all = true;
    for (Bits f : filters) {
        int min = L.meet_mask(f);
        if (!has_bit(f, min) || L.up_mask(min) != f) principal = false;
        if (!has_bit(f, L.meet_mask(f))) closed_all = false;
    }
    agg.add("every filter is principal", principal, id);
    agg.add("filters are closed under all meets", closed_all, id);

    bool iso_ok = true;
    try {
        filt_frame(L);
    } catch (const error&) {
        iso_ok = false;
    }
    agg.add("Filt(L) is isomorphic to L-op", iso_ok, id);

    Bits e = family_mask(L, FilterFamily::E), se = family_mask(L, FilterFamily::SE);
    agg.add("exact = strongly exact = all filters", e == L.all_mask() && se == L.all_mask(), id);

    // the unique extension: the full class validates, dropping any one
    // principal filter breaks containment
    std::vector<FilterRepr> all;
    for (int a = 0; a < L.n(); ++a) all.push_back(FilterRepr::principal(Elem::fin(a)));
    bool unique = validate_raney(F, FilterClass::explicit_set(all)).ok();
    for (int drop = 0; drop < L.n() && unique; ++drop) {
        std::vector<FilterRepr> rest;
        for (int a = 0; a < L.n(); ++a)
            if (a != drop) rest.push_back(FilterRepr::principal(Elem::fin(a)));
        if (validate_raney(F, FilterClass::explicit_set(rest)).ok()) unique = false;
    }
    agg.add("exactly one valid class between E and SE", unique, id);

    bool covered = true;
    for (int p : L.primes())
        if (!L.is_covered_prime(p)) covered = false;
    agg.add("every prime is covered", covered, id);

    RaneyExt re{F, FilterClass::explicit_set(all)};
    auto sp = spectrum(re);
    bool pts = (int)sp.points.size() == (int)L.primes().size() &&
               (int)sp.points.size() == (int)L.covered_primes().size();
    agg.add("pt_R = pt_D = pt", pts, id);

    // cross-check: p prime iff its complement filter is completely prime
    bool cp_link = true;
    for (int p = 0; p < L.n(); ++p) {
        Bits f = L.all_mask() & ~L.down_mask(p);
        bool filt = set_is_filter(L, f);
        if (L.is_prime(p) != (filt && set_is_completely_prime(L, f))) cp_link = false;
    }
    agg.add("p prime iff L minus down(p) is a completely prime filter", cp_link, id);
    return out;
}

// --- duality ------------------------------------------------------------------

inline std::vector<CheckResult> duality_checks_t0(const FiniteSpace& X, const std::string& id) {
    std::vector<CheckResult> out;
    detail::LawAggregator agg{out};
    RaneyExt re = omega_R(X);
    const FiniteLattice& L = re.frame.lat;
    SpectrumSpace sp = spectrum(re);

    // psi x = the neighborhood filter, i.e. the prime join of the opens
    // missing x
    std::vector<int> prime_of(X.n, -1);
    bool primes_ok = true, bijective = true, opens_match = true;
    std::vector<int> sp_primes;
    for (const auto& f : sp.points) sp_primes.push_back(f.elems[0].id);
    for (int x = 0; x < X.n; ++x) {
        Bits missing = 0;
        for (size_t i = 0; i < X.opens.size(); ++i)
            if (!has_bit(X.opens[i], x)) missing |= bit((int)i);
        int px = L.join_mask(missing);
        if (!L.is_prime(px)) primes_ok = false;
        prime_of[x] = px;
    }
    {
        std::vector<int> sorted = prime_of;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect = sp_primes;
        std::sort(expect.begin(), expect.end());
        if (sorted != expect || (int)sp_primes.size() != X.n) bijective = false;
        for (size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1]) bijective = false;
    }
    for (int x = 0; x < X.n && bijective; ++x)
        for (int u = 0; u < L.n(); ++u)
            if (has_bit(X.opens[u], x) != !L.leq(u, prime_of[x])) opens_match = false;
    agg.add("psi lands in primes", primes_ok, id);
    agg.add("psi is a bijection onto pt_R", bijective, id);
    agg.add("psi matches opens both ways", opens_match, id);

    // phi: L -> Omega(pt_R) is injective and an order embedding; the
    // coframe side collapses because the spectrum is finite Alexandrov.
    bool phi_inj = true, phi_order = true;
    std::vector<Bits> phi(L.n());
    for (int a = 0; a < L.n(); ++a) {
        Bits m = 0;
        for (size_t k = 0; k < sp_primes.size(); ++k)
            if (!L.leq(a, sp_primes[k])) m |= bit((int)k);
        phi[a] = m;
    }
    for (int a = 0; a < L.n(); ++a)
        for (int b = 0; b < L.n(); ++b) {
            if (a != b && phi[a] == phi[b]) phi_inj = false;
            if (L.leq(a, b) != is_subset(phi[a], phi[b])) phi_order = false;
        }
    agg.add("phi is injective", phi_inj, id);
    agg.add("phi is an order isomorphism onto the spectrum opens", phi_order, id);
    agg.add("spectrum opens count matches L", (int)sp.topology.opens.size() == L.n(), id);
    agg.add("saturated sets of the spectrum are its opens", alexandrov_collapse(sp.topology), id);
    agg.add("unit space is homeomorphic to the spectrum", homeomorphic(X, sp.topology), id);
    return out;
}

inline std::vector<CheckResult> duality_checks_non_t0(const FiniteSpace& X, const std::string& id) {
    std::vector<CheckResult> out;
    bool noninjective = false;
    for (int x = 0; x < X.n && !noninjective; ++x)
        for (int y = x + 1; y < X.n; ++y)
            if (X.nbhd_mask(x) == X.nbhd_mask(y)) noninjective = true;
    out.push_back(CheckResult{"psi is non-injective on a non-T0 space",
                              noninjective ? Status::pass : Status::fail,
                              noninjective ? "" : id});
    return out;
}

// --- ker/coker ----------------------------------------------------------------

inline std::vector<CheckResult> kercoker_checks(const FiniteLattice& L, const std::string& id,
                                                int cap) {
    std::vector<CheckResult> out;
    detail::LawAggregator agg{out};
    if (L.n() > cap) return out;

    auto fitted = fitted_sublocales(L);
    auto jclosed = joins_of_closed(L);

    bool ker_oa = true;
    for (int a = 0; a < L.n(); ++a)
        if (ker_set(L, open_sl(L, a)) != L.up_mask(a)) ker_oa = false;
    agg.add("ker(o(a)) = up(a)", ker_oa, id);

    agg.add("fitted sublocales count = strongly exact filters count",
            (int)fitted.size() == L.n(), id);
    agg.add("joins of closed count = exact filters count", (int)jclosed.size() == L.n(), id);

    bool ker_iso = true;
    for (Bits S : fitted) {
        Bits F = ker_set(L, S);
        if (!set_is_filter(L, F)) ker_iso = false;
        Bits back = L.all_mask();
        for_each_bit(F, [&](int a) { back &= open_sl(L, a); });
        if (back != S) ker_iso = false;
    }
    for (int a = 0; a < L.n(); ++a) {
        Bits F = L.up_mask(a);
        Bits S = L.all_mask();
        for_each_bit(F, [&](int b) { S &= open_sl(L, b); });
        if (ker_set(L, S) != F) ker_iso = false;
    }
    for (Bits S : fitted)
        for (Bits T : fitted)
            if (is_subset(S, T) != is_subset(ker_set(L, T), ker_set(L, S))) ker_iso = false;
    agg.add("ker is an order-reversing bijection fitted <-> strongly exact filters", ker_iso, id);

    bool coker_iso = true;
    for (Bits S : jclosed) {
        Bits F = coker_set(L, S);
        if (!set_is_filter(L, F)) coker_iso = false;
        std::vector<Bits> cls;
        for_each_bit(F, [&](int a) { cls.push_back(closed_sl(L, a)); });
        if (sl_join_many(L, cls) != S) coker_iso = false;
    }
    for (int a = 0; a < L.n(); ++a) {
        Bits F = L.up_mask(a);
        std::vector<Bits> cls;
        for_each_bit(F, [&](int b) { cls.push_back(closed_sl(L, b)); });
        Bits S = sl_join_many(L, cls);
        if (coker_set(L, S) != F) coker_iso = false;
    }
    for (Bits S : jclosed)
        for (Bits T : jclosed)
            if (is_subset(S, T) != is_subset(coker_set(L, S), coker_set(L, T))) coker_iso = false;
    agg.add("coker is an order bijection joins-of-closed <-> exact filters", coker_iso, id);
    return out;
}

// --- exact sublocales ----------------------------------------------------------

inline std::vector<CheckResult> exact_sublocale_checks(const FiniteLattice& L,
                                                       const std::string& id, int cap) {
    std::vector<CheckResult> out;
    detail::LawAggregator agg{out};
    if (L.n() > cap) return out;

    auto subs = enumerate_sublocales(L, cap);
    std::vector<Bits> exact;
    for (Bits s : subs.all)
        if (is_exact_sublocale(L, s)) exact.push_back(s);
    auto in_exact = [&](Bits s) {
        return std::find(exact.begin(), exact.end(), s) != exact.end();
    };

    bool contents = true;
    for (int a = 0; a < L.n(); ++a) {
        if (!in_exact(open_sl(L, a))) contents = false;
        if (!in_exact(closed_sl(L, a))) contents = false;
    }
    for (int p : L.primes())
        if (L.is_covered_prime(p) && !in_exact(boolean_sl(L, p))) contents = false;
    agg.add("open, closed and covered b(p) sublocales are exact", contents, id);

    bool joins = true;
    for (Bits s : exact)
        for (Bits t : exact)
            if (!in_exact(sl_join(L, s, t))) joins = false;
    agg.add("exact sublocales are closed under joins", joins, id);

    bool diff = true;
    for (Bits s : exact)
        for (Bits t : subs.all)
            if (!in_exact(sl_difference(L, subs, s, t))) diff = false;
    agg.add("exact sublocales are stable under difference", diff, id);

    bool dsub = true;
    for (Bits s : joins_of_closed(L))
        if (!is_D_sublocale(L, s)) dsub = false;
    for (Bits s : exact)
        if (!is_D_sublocale(L, s)) dsub = false;
    agg.add("joins of closed and exact sublocales are D-sublocales", dsub, id);

    // stability of the exact and D families under meeting with open and
    // closed sublocales, and join-closure of the D family
    std::vector<Bits> dfam;
    for (Bits s : subs.all)
        if (is_D_sublocale(L, s)) dfam.push_back(s);
    auto in_d = [&](Bits s) { return std::find(dfam.begin(), dfam.end(), s) != dfam.end(); };
    bool stab = true;
    for (int x = 0; x < L.n(); ++x) {
        for (Bits s : exact) {
            if (!in_exact(s & closed_sl(L, x))) stab = false;
            if (!in_exact(s & open_sl(L, x))) stab = false;
        }
        for (Bits s : dfam) {
            if (!in_d(s & closed_sl(L, x))) stab = false;
            if (!in_d(s & open_sl(L, x))) stab = false;
        }
    }
    bool djoins = true;
    for (Bits s : dfam)
        for (Bits t : dfam)
            if (!in_d(sl_join(L, s, t))) djoins = false;
    agg.add("exact and D families are stable under meets with open and closed", stab, id);
    agg.add("D-sublocales are closed under joins", djoins, id);

    // reported as data, never asserted: whether S_E = S_D = S(L) here
    bool all_equal = exact.size() == subs.all.size() && dfam.size() == subs.all.size();
    agg.add(std::string("data: S_E = S_D = S(L) on every corpus frame within the cap (") +
                (all_equal ? "holds" : "differs") + " here)",
            true, id);
    return out;
}

// --- fixtures -------------------------------------------------------------------

inline std::vector<CheckResult> fixture_checks(int window) {
    std::vector<CheckResult> out;
    auto push = [&](std::string id, bool ok, std::string w = "") {
        out.push_back(
            CheckResult{std::move(id), ok ? Status::inventory_verified : Status::fail, std::move(w)});
    };
    FrameHandle F = FrameHandle::cofinite(window);

    // (a) covered primes
    auto pe = F.enumerate_primes(window);
    bool covered_ok = true;
    int cofinite_primes = 0;
    for (const Elem& p : pe.primes) {
        bool cov = F.is_covered_prime(p);
        if (p.c.empty) {
            if (cov) covered_ok = false;
        } else {
            ++cofinite_primes;
            if (!cov) covered_ok = false;
        }
    }
    push("covered primes are exactly the complements of points",
         covered_ok && cofinite_primes == window, pe.tail);

    // (b) the generic completely prime filter
    FilterRepr generic = FilterRepr::prime_complement(Elem::cof(cof_empty()));
    auto cls = classify_filter(F, generic);
    push("generic filter: completely prime, strongly exact, Scott-open, not exact, not regular",
         cls.completely_prime == Tri::yes && cls.strongly_exact == Tri::yes &&
             cls.scott_open == Tri::yes && cls.exact == Tri::no && cls.regular == Tri::no);

    // (c) spectra of the E and SE classes
    RaneyExt reE{F, FilterClass::named(FilterFamily::E)};
    RaneyExt reSE{F, FilterClass::named(FilterFamily::SE)};
    auto spE = spectrum(reE, window);
    auto spSE = spectrum(reSE, window);
    push("spectrum of the E class is the window of points",
         (int)spE.points.size() == window && !spE.has_generic, spE.tail);
    push("spectrum of the SE class adds exactly the generic point",
         (int)spSE.points.size() == window + 1 && spSE.has_generic, spSE.tail);

    // the realizable windowed spectra over all five named classes are
    // exactly those two point sets
    {
        bool interval = true;
        for (FilterFamily fam : {FilterFamily::E, FilterFamily::SE, FilterFamily::R,
                                 FilterFamily::ICP, FilterFamily::ISO}) {
            auto sp = spectrum(RaneyExt{F, FilterClass::named(fam)}, window);
            bool like_e = (int)sp.points.size() == window && !sp.has_generic;
            bool like_se = (int)sp.points.size() == window + 1 && sp.has_generic;
            if (!like_e && !like_se) interval = false;
        }
        push("every named-class spectrum realizes one end of the interval", interval);
    }

    // the regular-class spectrum is the space of maximal primes
    {
        RaneyExt reR{F, FilterClass::named(FilterFamily::R)};
        auto spR = spectrum(reR, window);
        bool maximal_only = !spR.has_generic;
        for (const auto& pt : spR.points)
            if (!F.is_maximal_prime(pt.elems[0])) maximal_only = false;
        int maximal_in_window = 0;
        for (const Elem& p : pe.primes)
            if (F.is_maximal_prime(p)) ++maximal_in_window;
        push("the regular-class spectrum consists of the maximal primes",
             maximal_only && (int)spR.points.size() == maximal_in_window);
    }

    // (d) property suites against the point-set oracles
    RaneyExt reNat = omega_R(SymbolicSpace::cofinite_nat, window);
    RaneyExt reGen = omega_R(SymbolicSpace::cofinite_nat_generic, window);
    auto prNat = property_suite(reNat, window);
    auto prGen = property_suite(reGen, window);
    auto factsNat = pointset_facts(SymbolicSpace::cofinite_nat);
    auto factsGen = pointset_facts(SymbolicSpace::cofinite_nat_generic);
    auto same = [](const FlaggedTri& t, bool b) { return t.value == (b ? Tri::yes : Tri::no); };
    push("cofinite space: sober=false, TD=true, T1=true, matching the point-set oracle",
         same(prNat.sober, factsNat.sober) && same(prNat.td, factsNat.td) &&
             same(prNat.t1, factsNat.t1) && !factsNat.sober && factsNat.td && factsNat.t1);
    push("generic-point space: sober=true, TD=false, T1=false, matching the point-set oracle",
         same(prGen.sober, factsGen.sober) && same(prGen.td, factsGen.td) &&
             same(prGen.t1, factsGen.t1) && factsGen.sober && !factsGen.td && !factsGen.t1);
    push("both fixtures are spatial and subfit",
         prNat.spatial.value == Tri::yes && prGen.spatial.value == Tri::yes &&
             prNat.subfit.value == Tri::yes && prGen.subfit.value == Tri::yes);
    push("the cofinite frame is not scattered-subfit (SE and E differ at the generic filter)",
         prNat.scattered_subfit.value == Tri::no);

    // (e) sobrification
    RaneyExt sob = sobrification(reNat, window);
    bool sob_ok = is_compact(sob, FilterFamily::CP, window).value == Tri::yes;
    auto spN = spectrum(reNat, window);
    auto spS = spectrum(sob, window);
    sob_ok = sob_ok && !spN.has_generic && spS.has_generic &&
             (int)spS.points.size() == (int)spN.points.size() + 1;
    RaneyExt sob2 = sobrification(sob, window);
    sob_ok = sob_ok && sob2.cstar.kind == sob.cstar.kind;  // idempotent
    push("sobrification is CP-compact and adds exactly the generic point", sob_ok);

    // (f) the classifier map is refused with the generic witness
    FrameHandle two = FrameHandle::finite(frame_2());
    FrameMap cl = FrameMap::classifier(F, two);
    std::vector<FilterRepr> all2;
    for (int a = 0; a < two.lat.n(); ++a) all2.push_back(FilterRepr::principal(Elem::fin(a)));
    RaneyExt re2{two, FilterClass::explicit_set(all2)};
    auto ext = extend_morphism(cl, reNat, re2, window);
    bool refused = ext.decided == Tri::no && !ext.extends &&
                   ext.offending_preimage.kind == FilterRepr::Kind::prime_complement &&
                   ext.offending_preimage.elems[0].c.empty;
    push("the nonempty-classifier is refused with the generic preimage witness", refused,
         ext.witness_name);
    auto extSE = extend_morphism(cl, RaneyExt{F, FilterClass::named(FilterFamily::SE)}, re2,
                                 window);
    bool accepted = extSE.decided == Tri::yes && extSE.extends;
    for (const auto& c : extSE.verification)
        if (!c.ok()) accepted = false;
    push("the free SE extension accepts the classifier", accepted);
    // and so does the sobrification of the refusing extension: the map
    // into a sober target factors through the sober hull
    auto via_hull = extend_morphism(cl, sob, re2, window);
    push("the classifier factors through the sobrification", via_hull.extends);

    // exactness of morphisms: identity yes, classifier no
    push("identity is exact, the classifier is not",
         is_exact_morphism(FrameMap::identity_map(F), window) == Tri::yes &&
             is_exact_morphism(cl, window) == Tri::no);

    // adjunction fixpoints on the inventory
    {
        bool fix = true;
        for (const RaneyExt& re : {reNat, reGen, reSE}) {
            for (const auto& item : cofinite_inventory(F, window))
                if (nf_in_cstar(re, item.nf) && nf_roundup(re, item.nf) != item.nf) fix = false;
        }
        push("C* members are fixpoints of the filter adjunction", fix);
    }

    // validations of the named classes on this frame
    for (FilterFamily fam : {FilterFamily::E, FilterFamily::SE, FilterFamily::R,
                             FilterFamily::ICP, FilterFamily::ISO}) {
        auto rep = validate_raney(F, FilterClass::named(fam), window);
        push("class " + family_name(fam) + " validates on the cofinite frame", rep.ok());
    }

    // canonical extension and algebraicity
    RaneyExt can = canonical_extension(F, window);
    push("canonical extension is algebraic and sober",
         is_algebraic(can, window).value == Tri::yes &&
             is_compact(can, FilterFamily::CP, window).value == Tri::yes);
    return out;
}

// --- morphisms -------------------------------------------------------------------

inline std::vector<CheckResult> morphism_checks(const Corpus& corpus, int max_elems) {
    std::vector<CheckResult> out;
    detail::LawAggregator agg{out};
    auto frames = frames_with_at_most(corpus, max_elems);
    int total_maps = 0;
    for (const CorpusEntry* se : frames)
        for (const CorpusEntry* te : frames) {
            FrameHandle S = FrameHandle::finite(se->frame);
            FrameHandle T = FrameHandle::finite(te->frame);
            std::vector<FilterRepr> sAll, tAll;
            for (int a = 0; a < S.lat.n(); ++a) sAll.push_back(FilterRepr::principal(Elem::fin(a)));
            for (int a = 0; a < T.lat.n(); ++a) tAll.push_back(FilterRepr::principal(Elem::fin(a)));
            RaneyExt sre{S, FilterClass::explicit_set(sAll)};
            RaneyExt tre{T, FilterClass::explicit_set(tAll)};
            std::string pid = se->id + "->" + te->id;
            for (const FrameMap& f : enumerate_frame_maps(S, T)) {
                ++total_maps;
                std::string w;
                agg.add("enumerated maps are lawful", frame_map_lawful(f, &w), pid + ": " + w);
                auto ext = extend_morphism(f, sre, tre);
                bool ok = ext.decided == Tri::yes && ext.extends;
                for (const auto& c : ext.verification)
                    if (!c.ok()) ok = false;
                agg.add("every map between finite extensions lifts and the lift is verified", ok,
                        pid);
                agg.add("finite maps are exact", is_exact_morphism(f) == Tri::yes, pid);
                agg.add("exact maps are D-maps: the adjoint preserves covered primes",
                        is_D_morphism(f) == Tri::yes, pid);
                // the adjunction itself: f(x) <= m iff x <= f_*(m)
                bool adjoint = true;
                for (int x = 0; x < S.lat.n(); ++x)
                    for (int m = 0; m < T.lat.n(); ++m)
                        if (T.lat.leq(f.apply(Elem::fin(x)).id, m) !=
                            S.lat.leq(x, frame_map_right_adjoint(f, m)))
                            adjoint = false;
                agg.add("the right adjoint satisfies the adjunction", adjoint, pid);
            }
        }
    agg.add("at least one map per frame pair was exercised", total_maps > 0, "none found");
    return out;
}

// --- properties: subfitness, T1, canonical extensions ------------------------------

inline std::vector<CheckResult> property_checks(const FrameHandle& F, const std::string& id,
                                                int window) {
    std::vector<CheckResult> out;
    detail::LawAggregator agg{out};

    // The five equivalent readings of subfitness, each computed on its
    // own route: (1) the join-splitting definition, (2) exact filters are
    // regular, (3) the E extension is T1, (4) some T1 extension exists,
    // (5) the regular class is the unique T1 extension.
    FlaggedTri item1 = frame_subfit(F, window);
    FlaggedTri item2, item3, item4, item5;
    if (F.is_finite()) {
        const FiniteLattice& L = F.lat;
        item2 = {is_subset(family_mask(L, FilterFamily::E), family_mask(L, FilterFamily::R))
                     ? Tri::yes
                     : Tri::no,
                 false};
        std::vector<FilterRepr> all;
        for (int a = 0; a < L.n(); ++a) all.push_back(FilterRepr::principal(Elem::fin(a)));
        RaneyExt unique{F, FilterClass::explicit_set(all)};
        item3 = re_is_t1(unique, window);  // the E-based extension is the unique one
        bool exists = false;
        for (FilterFamily fam : {FilterFamily::E, FilterFamily::SE, FilterFamily::R,
                                 FilterFamily::ICP, FilterFamily::ISO}) {
            FilterClass c = FilterClass::named(fam);
            if (!validate_raney(F, c, window).ok()) continue;
            if (re_is_t1(RaneyExt{F, c}, window).value == Tri::yes) exists = true;
        }
        item4 = {exists ? Tri::yes : Tri::no, false};
        FilterClass rc = FilterClass::named(FilterFamily::R);
        bool runique = validate_raney(F, rc, window).ok() &&
                       re_is_t1(RaneyExt{F, rc}, window).value == Tri::yes;
        item5 = {runique ? Tri::yes : Tri::no, false};
    } else {
        bool e_in_r = true;
        for (const auto& item : cofinite_inventory(F, window))
            if (nf_in_family(item.nf, FilterFamily::E) && !nf_in_family(item.nf, FilterFamily::R))
                e_in_r = false;
        item2 = {e_in_r ? Tri::yes : Tri::no, true};
        item3 = re_is_t1(RaneyExt{F, FilterClass::named(FilterFamily::E)}, window);
        bool exists = validate_raney(F, FilterClass::named(FilterFamily::R), window).ok() &&
                      re_is_t1(RaneyExt{F, FilterClass::named(FilterFamily::R)}, window).value ==
                          Tri::yes;
        item4 = {exists ? Tri::yes : Tri::no, true};
        item5 = item4;
    }
    bool agree = item1.value == item2.value && item2.value == item3.value &&
                 item3.value == item4.value && item4.value == item5.value &&
                 item1.value != Tri::unknown;
    agg.add("the five subfitness and T1-extension readings agree", agree, id,
            F.is_finite() ? Status::pass : Status::inventory_verified);

    if (F.is_finite()) {
        const FiniteLattice& L = F.lat;
        if (L.is_boolean()) {
            RaneyExt can = canonical_extension(F, window);
            Bits canMask = finite_cstar_mask(can);
            Bits rMask = family_mask(L, FilterFamily::R);
            agg.add("on Boolean frames the canonical extension is the regular class",
                    canMask == rMask && rMask == L.all_mask(), id);
        } else {
            Bits rMask = family_mask(L, FilterFamily::R);
            agg.add("on non-Boolean frames the regular class is proper",
                    rMask != L.all_mask(), id);
        }
        RaneyExt can = canonical_extension(F, window);
        agg.add("finite extensions are algebraic", is_algebraic(can, window).value == Tri::yes,
                id);
        // T1 iff the frame is Boolean
        std::vector<FilterRepr> all;
        for (int a = 0; a < L.n(); ++a) all.push_back(FilterRepr::principal(Elem::fin(a)));
        RaneyExt unique{F, FilterClass::explicit_set(all)};
        agg.add("the unique finite extension is T1 iff the frame is Boolean",
                (re_is_t1(unique, window).value == Tri::yes) == L.is_boolean(), id);
        agg.add("finite extensions are sober and TD",
                is_compact(unique, FilterFamily::CP, window).value == Tri::yes &&
                    is_dense(unique, FilterFamily::E, window).value == Tri::yes,
                id);
        agg.add("finite frames are spatial: I(CP) contains all filters",
                family_mask(L, FilterFamily::ICP) == L.all_mask(), id);

        // scatteredness equivalences on subfit frames, within the
        // sublocale cap: the filter classes coincide, the sublocale
        // coframe is Boolean, and fitted = joins of closed
        if (L.is_subfit() && L.n() <= kDefaultSublocCap) {
            bool classes = frame_scattered_subfit(F, window).value == Tri::yes;
            auto subs = enumerate_sublocales(L);
            const auto& ss = subs.all;
            FiniteLattice SL = lattice_from_leq(
                (int)ss.size(), [&](int i, int j) { return is_subset(ss[i], ss[j]); }, false);
            bool boolean_sl_frame = true;
            for (int i = 0; i < SL.n(); ++i)
                if (SL.complement_of(i) < 0) boolean_sl_frame = false;
            auto fitted = fitted_sublocales(L);
            auto jcl = joins_of_closed(L);
            std::sort(fitted.begin(), fitted.end());
            std::sort(jcl.begin(), jcl.end());
            agg.add("subfit frames here are scattered: classes coincide, S(L) Boolean, "
                    "fitted = joins of closed",
                    classes && boolean_sl_frame && fitted == jcl, id);
        }
    }
    return out;
}

// --- drivers ----------------------------------------------------------------------

inline SuiteReport run_corpus_suite(
    const std::string& suite, const Corpus& corpus, const SuiteOptions& opt,
    const std::function<std::vector<CheckResult>(const CorpusEntry&)>& per_entry) {
    SuiteReport rep;
    rep.suite = suite;
    rep.target = "corpus<=" + std::to_string(corpus.max_points);
    std::vector<const CorpusEntry*> items;
    for (const auto& e : corpus.entries) items.push_back(&e);
    auto results = detail::parallel_map<std::vector<CheckResult>>(
        items, [&](const CorpusEntry& e) { return per_entry(e); });
    detail::LawAggregator agg{rep.checks};
    for (const auto& rs : results)
        for (const auto& c : rs) agg.merge(c);
    (void)opt;
    return rep;
}

inline std::vector<SuiteReport> run_verify(const std::string& suite, const std::string& target,
                                           const SuiteOptions& opt) {
    std::vector<SuiteReport> out;
    auto corpus_target = [&] { return build_corpus(opt.max_points); };

    auto frame_for = [&](const std::string& name) -> FrameHandle {
        if (name == "cofinite") return FrameHandle::cofinite(opt.window);
        return FrameHandle::finite(lattice_by_name(name));
    };

    if (suite == "background") {
        if (target == "corpus") {
            Corpus c = corpus_target();
            out.push_back(run_corpus_suite(suite, c, opt, [&](const CorpusEntry& e) {
                return background_checks(e.frame, e.id, opt.subloc_cap);
            }));
        } else {
            FiniteLattice L = lattice_by_name(target);
            out.push_back(SuiteReport{suite, target, background_checks(L, target, opt.subloc_cap)});
        }
    } else if (suite == "raney-core") {
        if (target == "corpus") {
            Corpus c = corpus_target();
            out.push_back(run_corpus_suite(suite, c, opt, [&](const CorpusEntry& e) {
                return raney_core_checks(FrameHandle::finite(e.frame), e.id);
            }));
        } else {
            out.push_back(SuiteReport{suite, target,
                                      raney_core_checks(frame_for(target), target)});
        }
    } else if (suite == "duality") {
        Corpus c = build_corpus(std::min(opt.max_points, 4));
        SuiteReport rep;
        rep.suite = suite;
        rep.target = "T0 spaces <= " + std::to_string(std::min(opt.max_points, 4)) +
                     " points, non-T0 <= 3";
        detail::LawAggregator agg{rep.checks};
        for (const auto& e : c.entries)
            for (const auto& chk : duality_checks_t0(e.space, e.id)) agg.merge(chk);
        for (int n = 1; n <= 3; ++n)
            for (const auto& X : all_topologies(n)) {
                if (X.is_t0()) continue;
                for (const auto& chk : duality_checks_non_t0(X, "non-t0")) agg.merge(chk);
            }
        out.push_back(rep);
    } else if (suite == "sublocales") {
        Corpus c = corpus_target();
        out.push_back(run_corpus_suite("sublocales/ker-coker", c, opt, [&](const CorpusEntry& e) {
            return kercoker_checks(e.frame, e.id, opt.subloc_cap);
        }));
        out.push_back(run_corpus_suite("sublocales/exact", c, opt, [&](const CorpusEntry& e) {
            return exact_sublocale_checks(e.frame, e.id, opt.subloc_cap);
        }));
    } else if (suite == "fixtures") {
        SuiteReport rep;
        rep.suite = suite;
        rep.target = target.empty() ? "cofinite fixtures" : target;
        rep.checks = fixture_checks(opt.window);
        out.push_back(rep);
    } else if (suite == "morphisms") {
        Corpus c = corpus_target();
        SuiteReport rep;
        rep.suite = suite;
        rep.target = "corpus frames with at most 4 elements";
        rep.checks = morphism_checks(c, 4);
        out.push_back(rep);
    } else if (suite == "properties") {
        if (target == "corpus") {
            Corpus c = corpus_target();
            out.push_back(run_corpus_suite(suite, c, opt, [&](const CorpusEntry& e) {
                return property_checks(FrameHandle::finite(e.frame), e.id, opt.window);
            }));
        } else {
            out.push_back(SuiteReport{suite, target,
                                      property_checks(frame_for(target), target, opt.window)});
        }
    } else {
        throw error("unknown suite: " + suite);
    }
    return out;
}

}  // namespace raney

#include <doctest.h>

#include "raney/sublocale.hpp"

using namespace raney;

TEST_CASE("sublocales of the smallest frames") {
    FiniteLattice c3 = chain_frame(3);
    auto subs = enumerate_sublocales(c3);
    // {1}, {1,m}, {1,0}, L  -- elements are 0 < 1 < 2
    std::vector<Bits> expect = {bit(2), bit(2) | bit(1), bit(2) | bit(0), c3.all_mask()};
    std::sort(expect.begin(), expect.end());
    std::vector<Bits> got = subs.all;
    std::sort(got.begin(), got.end());
    CHECK(got == expect);

    CHECK(enumerate_sublocales(frame_2()).all.size() == 2);
    CHECK(enumerate_sublocales(diamond_frame()).all.size() == 4);
    CHECK_THROWS_AS(enumerate_sublocales(boolean_frame(4)), error);  // 16 > default cap
}

TEST_CASE("open, closed and Boolean sublocales") {
    FiniteLattice c3 = chain_frame(3);
    CHECK(open_sl(c3, c3.top) == c3.all_mask());
    CHECK(open_sl(c3, c3.bottom) == bit(c3.top));
    CHECK(closed_sl(c3, c3.bottom) == c3.all_mask());
    CHECK(closed_sl(c3, c3.top) == bit(c3.top));
    // o(m) on the 3-chain is {0, 1(top)}: m->0 = 0, m->m = m->top = top
    CHECK(open_sl(c3, 1) == (bit(0) | bit(c3.top)));
    for (int p : c3.primes()) CHECK(boolean_sl(c3, p) == (bit(p) | bit(c3.top)));
}

TEST_CASE("smallest sublocale generation") {
    FiniteLattice d = diamond_frame();
    CHECK(smallest_sublocale(d, bit(d.top)) == bit(d.top));
    CHECK(smallest_sublocale(d, d.all_mask()) == d.all_mask());
    for (int p : d.primes()) CHECK(smallest_sublocale(d, bit(p)) == boolean_sl(d, p));
    // minimality against the enumeration
    auto subs = enumerate_sublocales(d);
    for_each_subset(d.all_mask(), [&](Bits X) {
        Bits s = smallest_sublocale(d, X);
        CHECK(is_sublocale(d, s));
        CHECK(is_subset(X, s));
        for (Bits t : subs.all)
            if (is_subset(X, t)) CHECK(is_subset(s, t));
    });
}

TEST_CASE("joins computed two ways agree, and difference is the adjoint") {
    for (const FinitePoset& p : all_posets(3)) {
        FiniteLattice L = downset_lattice(p);
        if (L.n() > kDefaultSublocCap) continue;
        auto subs = enumerate_sublocales(L);
        for (Bits s : subs.all)
            for (Bits t : subs.all) {
                Bits j1 = sl_join(L, s, t);
                Bits j2 = sl_join_enum(L, subs, s, t);
                CHECK(j1 == j2);
                Bits d = sl_difference(L, subs, s, t);
                CHECK(is_sublocale(L, d));
                for (Bits u : subs.all)
                    CHECK(is_subset(d, u) == is_subset(s, sl_join(L, t, u)));
            }
    }
}

TEST_CASE("ker and coker on generators") {
    FiniteLattice c4 = chain_frame(4);
    for (int a = 0; a < c4.n(); ++a) {
        CHECK(ker_set(c4, open_sl(c4, a)) == c4.up_mask(a));
        CHECK(coker_set(c4, closed_sl(c4, a)) == c4.up_mask(a));
    }
    // ker of the bottom sublocale {1} is the whole frame
    CHECK(ker_set(c4, bit(c4.top)) == c4.all_mask());
}

TEST_CASE("fitted and joins-of-closed counts and isomorphisms") {
    for (const FinitePoset& p : all_posets(3)) {
        FiniteLattice L = downset_lattice(p);
        auto fitted = fitted_sublocales(L);
        auto jcl = joins_of_closed(L);
        CHECK(fitted.size() == (size_t)L.n());
        CHECK(jcl.size() == (size_t)L.n());
        for (Bits S : fitted) {
            Bits F = ker_set(L, S);
            Bits back = L.all_mask();
            for_each_bit(F, [&](int a) { back &= open_sl(L, a); });
            CHECK(back == S);
        }
        for (Bits S : jcl) {
            Bits F = coker_set(L, S);
            std::vector<Bits> cls;
            for_each_bit(F, [&](int a) { cls.push_back(closed_sl(L, a)); });
            CHECK(sl_join_many(L, cls) == S);
        }
    }
}

TEST_CASE("exact and D sublocales on small frames") {
    for (const FinitePoset& p : all_posets(3)) {
        FiniteLattice L = downset_lattice(p);
        auto subs = enumerate_sublocales(L);
        for (int a = 0; a < L.n(); ++a) {
            CHECK(is_exact_sublocale(L, open_sl(L, a)));
            CHECK(is_exact_sublocale(L, closed_sl(L, a)));
        }
        for (int q : L.primes())
            if (L.is_covered_prime(q)) CHECK(is_exact_sublocale(L, boolean_sl(L, q)));
        for (Bits s : subs.all) CHECK(is_D_sublocale(L, s));
    }
}

TEST_CASE("the nucleus is a frame surjection onto the sublocale") {
    FiniteLattice d = diamond_frame();
    auto subs = enumerate_sublocales(d);
    for (Bits s : subs.all) {
        for (int x = 0; x < d.n(); ++x) {
            int nx = sl_nucleus(d, s, x);
            CHECK(has_bit(s, nx));
            CHECK(d.leq(x, nx));
        }
        for (int x = 0; x < d.n(); ++x)
            for (int y = 0; y < d.n(); ++y)
                CHECK(sl_nucleus(d, s, d.meet(x, y)) ==
                      d.meet(sl_nucleus(d, s, x), sl_nucleus(d, s, y)));
    }
}

TEST_CASE("sublocale lattices inherit meets and recompute joins") {
    FiniteLattice c4 = chain_frame(4);
    auto subs = enumerate_sublocales(c4);
    for (Bits s : subs.all) {
        FiniteLattice SL = sublocale_lattice(c4, s);
        CHECK(SL.n() == popcount(s));
        CHECK(SL.distributive);
    }
}

#include <doctest.h>

#include <random>

#include "raney/lattice.hpp"

using namespace raney;

namespace {

// Independent oracle: the largest x with x & a <= b, found by scanning.
int heyting_oracle(const FiniteLattice& L, int a, int b) {
    int best = -1;
    for (int x = 0; x < L.n(); ++x) {
        if (!L.leq(L.meet(x, a), b)) continue;
        if (best < 0 || L.leq(best, x)) best = x;
    }
    return best;
}

// Independent oracle: coveredness by quantifying over every subset family.
bool covered_oracle(const FiniteLattice& L, int p) {
    bool covered = true;
    for_each_subset(L.all_mask(), [&](Bits X) {
        if (L.meet_mask(X) == p && !has_bit(X, p)) covered = false;
    });
    return covered;
}

FinitePoset random_poset(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coin(0, 2);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) == 0) pairs.emplace_back(i, j);  // i<j keeps it acyclic
    return poset_from_pairs(n, pairs);
}

}  // namespace

TEST_CASE("poset construction validates the order axioms") {
    CHECK_THROWS_AS(FinitePoset(2, {bit(1), bit(1)}), error);                    // not reflexive
    CHECK_THROWS_AS(FinitePoset(2, {bit(0) | bit(1), bit(0) | bit(1)}), error);  // not antisym
    CHECK_THROWS_AS(FinitePoset(3, {bit(0) | bit(1), bit(1) | bit(2), bit(2)}), error);
    CHECK_NOTHROW(chain_poset(4));
    // transitive closure makes loose pair lists valid
    FinitePoset p = poset_from_pairs(3, {{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
}

TEST_CASE("downset lattices of tiny posets") {
    FiniteLattice two = downset_lattice(antichain_poset(1));
    CHECK(two.n() == 2);
    FiniteLattice diamond = downset_lattice(antichain_poset(2));
    CHECK(diamond.n() == 4);
    FiniteLattice chain3 = downset_lattice(chain_poset(2));
    CHECK(chain3.n() == 3);
    for (int i = 0; i + 1 < chain3.n(); ++i) CHECK(chain3.leq(i, i + 1));  // a chain
    CHECK(two.distributive);
    CHECK(diamond.distributive);
    CHECK(chain3.distributive);
}

TEST_CASE("heyting on the 3-chain and the diamond") {
    FiniteLattice c3 = chain_frame(3);
    const int m = 1;  // elements are sorted by downset size: 0 < m < top
    CHECK(c3.heyting(c3.top, m) == m);  // x->p = p when x not<= p, at the prime m
    for (int a = 0; a < c3.n(); ++a) CHECK(c3.heyting(a, a) == c3.top);

    FiniteLattice d = diamond_frame();
    // the two atoms
    int a = -1, b = -1;
    for (int x = 0; x < d.n(); ++x)
        if (x != d.top && x != d.bottom) (a < 0 ? a : b) = x;
    CHECK(d.heyting(a, b) == heyting_oracle(d, a, b));
    CHECK(d.heyting(a, b) == b);
}

TEST_CASE("heyting tables agree with the max oracle and the adjunction") {
    for (const FinitePoset& p : all_posets(4)) {
        FiniteLattice L = downset_lattice(p);
        for (int a = 0; a < L.n(); ++a)
            for (int b = 0; b < L.n(); ++b) {
                CHECK(L.heyting(a, b) == heyting_oracle(L, a, b));
                for (int x = 0; x < L.n(); ++x)
                    CHECK(L.leq(L.meet(x, a), b) == L.leq(x, L.heyting(a, b)));
            }
    }
}

TEST_CASE("primes of the small frames") {
    FiniteLattice c3 = chain_frame(3);
    CHECK(c3.primes() == std::vector<int>{0, 1});
    FiniteLattice two = frame_2();
    CHECK(two.primes() == std::vector<int>{0});
    FiniteLattice d = diamond_frame();
    auto pr = d.primes();
    CHECK(pr.size() == 2);
    for (int p : pr) {
        CHECK(p != d.top);
        CHECK(p != d.bottom);
        CHECK(d.ord.strict_up(p) == bit(d.top));  // the coatoms
    }
}

TEST_CASE("primes of a downset lattice are the complements of point up-sets") {
    for (const FinitePoset& p : all_posets(4)) {
        FiniteLattice L = downset_lattice(p);
        std::vector<Bits> expected;
        for (int x = 0; x < p.n; ++x) expected.push_back(full_mask(p.n) & ~p.up[x]);
        std::sort(expected.begin(), expected.end());
        std::vector<Bits> got;
        for (int q : L.primes()) got.push_back(L.elem_bits[q]);
        std::sort(got.begin(), got.end());
        CHECK(expected == got);
    }
}

TEST_CASE("the single-meet coveredness test matches the all-families oracle") {
    for (int n = 1; n <= 3; ++n)
        for (const FinitePoset& p : all_posets(n)) {
            FiniteLattice L = downset_lattice(p);
            for (int q : L.primes()) CHECK(L.is_covered_prime(q) == covered_oracle(L, q));
        }
}

TEST_CASE("in a finite frame every prime is covered") {
    for (int n = 1; n <= 4; ++n)
        for (const FinitePoset& p : all_posets(n)) {
            FiniteLattice L = downset_lattice(p);
            CHECK(L.covered_primes() == L.primes());
        }
}

TEST_CASE("poset enumeration hits the known counts") {
    CHECK(all_posets(1).size() == 1);
    CHECK(all_posets(2).size() == 2);
    CHECK(all_posets(3).size() == 5);
    CHECK(all_posets(4).size() == 16);
    CHECK(all_posets(5).size() == 63);
}

TEST_CASE("random posets make lawful distributive lattices") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        FinitePoset p = random_poset(rng, 5);
        FiniteLattice L = downset_lattice(p);
        CHECK(L.distributive);
        CHECK(L.has_heyting);
        // joins and meets really are bounds
        for (int a = 0; a < L.n(); ++a)
            for (int b = 0; b < L.n(); ++b) {
                CHECK(L.leq(L.meet(a, b), a));
                CHECK(L.leq(a, L.join(a, b)));
            }
    }
}

TEST_CASE("lattice_from_leq rejects non-lattices") {
    // two incomparable tops: no join for the two bottoms
    auto leq = [](int i, int j) { return i == j || (i < 2 && j >= 2); };
    CHECK_THROWS_AS(lattice_from_leq(4, leq), error);
}

TEST_CASE("subfitness of small frames") {
    CHECK_FALSE(chain_frame(3).is_subfit());  // the Sierpinski frame is not subfit
    CHECK(diamond_frame().is_subfit());
    CHECK(boolean_frame(3).is_subfit());
    CHECK(frame_2().is_subfit());
}

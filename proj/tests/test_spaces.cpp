#include <doctest.h>

#include "raney/raney.hpp"
#include "raney/corpus.hpp"

using namespace raney;

TEST_CASE("specialization orders of tiny spaces") {
    FiniteSpace sier = sierpinski_space();
    FinitePoset sp = specialization(sier);
    CHECK(sp.lt(0, 1));  // the closed point sits below the open one
    CHECK_FALSE(sp.lt(1, 0));

    FinitePoset disc = specialization(discrete_space(2));
    CHECK_FALSE(disc.lt(0, 1));
    CHECK_FALSE(disc.lt(1, 0));

    CHECK_THROWS_AS(specialization(indiscrete_space(2)), error);  // not T0
}

TEST_CASE("topology validation rejects non-topologies") {
    CHECK_THROWS_AS(FiniteSpace(2, {0}), error);                          // missing X
    CHECK_THROWS_AS(FiniteSpace(3, {0, bit(0), bit(1), full_mask(3)}), error);  // no union
    CHECK_NOTHROW(FiniteSpace(3, {0, bit(0), bit(0) | bit(1), full_mask(3)}));
}

TEST_CASE("saturated sets collapse to opens on finite spaces") {
    Corpus c = build_corpus(4);
    for (const auto& e : c.entries) {
        CHECK(alexandrov_collapse(e.space));
        CHECK(e.space.is_t0());
    }
    CHECK(saturated_sets(sierpinski_space()) == sierpinski_space().opens);
}

TEST_CASE("omega of the Sierpinski space is the 3-chain") {
    FiniteLattice om = omega_lattice(sierpinski_space());
    CHECK(om.n() == 3);
    CHECK(om.leq(0, 1));
    CHECK(om.leq(1, 2));
    // and U(X) is the same lattice, element for element
    FiniteLattice u = saturated_lattice(sierpinski_space());
    CHECK(u.n() == om.n());
    CHECK(u.elem_bits == om.elem_bits);
}

TEST_CASE("point-set oracles on finite spaces") {
    Corpus c = build_corpus(4);
    for (const auto& e : c.entries) {
        CHECK(pointset_sober(e.space));  // finite T0 spaces are sober
        CHECK(pointset_td(e.space));     // and TD
        // T1 iff the specialization order is discrete
        bool discrete = true;
        FinitePoset sp = specialization(e.space);
        for (int x = 0; x < sp.n; ++x)
            if (sp.up[x] != bit(x)) discrete = false;
        CHECK(pointset_t1(e.space) == discrete);
    }
    CHECK_FALSE(pointset_t1(sierpinski_space()));
    CHECK(pointset_t1(discrete_space(3)));
}

TEST_CASE("topology enumeration counts") {
    CHECK(all_topologies(1).size() == 1);
    CHECK(all_topologies(2).size() == 3);
    CHECK(all_topologies(3).size() == 9);
    int t0 = 0, non_t0 = 0;
    for (const auto& X : all_topologies(3)) (X.is_t0() ? t0 : non_t0)++;
    CHECK(t0 == 5);  // the posets on three points
    CHECK(non_t0 == 4);
}

TEST_CASE("symbolic space facts") {
    auto nat = pointset_facts(SymbolicSpace::cofinite_nat);
    CHECK_FALSE(nat.sober);
    CHECK(nat.td);
    CHECK(nat.t1);
    auto gen = pointset_facts(SymbolicSpace::cofinite_nat_generic);
    CHECK(gen.sober);
    CHECK_FALSE(gen.td);
    CHECK_FALSE(gen.t1);
}

TEST_CASE("star upsets of the generic extension") {
    StarUpset u = StarUpset::with_star_fin(bit(2) | bit(5));
    CHECK(star_upset_contains_nat(u, 2));
    CHECK_FALSE(star_upset_contains_nat(u, 3));
    StarUpset cu = StarUpset::with_star_cof(bit(1));
    CHECK(star_upset_contains_nat(cu, 0));
    CHECK_FALSE(star_upset_contains_nat(cu, 1));
    CHECK(star_upset_is_upset(u));
    CHECK_FALSE(star_upset_contains_nat(StarUpset::none(), 0));
}

TEST_CASE("raney-level space properties match the point-set oracles") {
    Corpus c = build_corpus(3);
    for (const auto& e : c.entries) {
        CHECK(space_is_sober(e.space) == pointset_sober(e.space));
        CHECK(space_is_td(e.space) == pointset_td(e.space));
        CHECK(space_is_t1(e.space) == pointset_t1(e.space));
    }
    CHECK(space_is_sober(SymbolicSpace::cofinite_nat).value == Tri::no);
    CHECK(space_is_td(SymbolicSpace::cofinite_nat).value == Tri::yes);
    CHECK(space_is_t1(SymbolicSpace::cofinite_nat).value == Tri::yes);
    CHECK(space_is_sober(SymbolicSpace::cofinite_nat_generic).value == Tri::yes);
    CHECK(space_is_td(SymbolicSpace::cofinite_nat_generic).value == Tri::no);
    CHECK(space_is_t1(SymbolicSpace::cofinite_nat_generic).value == Tri::no);
}

TEST_CASE("T1 implies TD implies T0 wherever all are evaluable") {
    Corpus c = build_corpus(4);
    for (const auto& e : c.entries) {
        if (pointset_t1(e.space)) CHECK(pointset_td(e.space));
        if (pointset_td(e.space)) CHECK(e.space.is_t0());
    }
    // symbolic: cofinite_nat is T1 and TD; the generic extension is neither
    auto nat = pointset_facts(SymbolicSpace::cofinite_nat);
    CHECK((!nat.t1 || nat.td));
}

TEST_CASE("omega_R produces validated extensions with the right classes") {
    RaneyExt re = omega_R(sierpinski_space());
    CHECK(validate_raney(re.frame, re.cstar).ok());
    CHECK(omega_R(SymbolicSpace::cofinite_nat).cstar.name == FilterFamily::R);
    CHECK(omega_R(SymbolicSpace::cofinite_nat_generic).cstar.name == FilterFamily::ICP);
    CHECK_THROWS_AS(omega_R(indiscrete_space(2)), error);
}

TEST_CASE("the two symbolic spaces share a frame but not an extension") {
    RaneyExt nat = omega_R(SymbolicSpace::cofinite_nat);
    RaneyExt gen = omega_R(SymbolicSpace::cofinite_nat_generic);
    CHECK(nat.frame.kind == gen.frame.kind);  // same cofinite frame of opens
    // the classes differ exactly at the generic completely prime filter
    CHECK_FALSE(nf_in_cstar(nat, nf_generic()));
    CHECK(nf_in_cstar(gen, nf_generic()));
    for (int n = 0; n < 4; ++n) {
        CHECK(nf_in_cstar(nat, nf_neighborhood(n)));
        CHECK(nf_in_cstar(gen, nf_neighborhood(n)));
    }
}

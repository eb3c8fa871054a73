#include <doctest.h>

#include "raney/suites.hpp"

using namespace raney;

namespace {
RaneyExt unique_re(const FiniteLattice& L) {
    FrameHandle F = FrameHandle::finite(L);
    std::vector<FilterRepr> all;
    for (int a = 0; a < L.n(); ++a) all.push_back(FilterRepr::principal(Elem::fin(a)));
    return RaneyExt{F, FilterClass::explicit_set(std::move(all))};
}
}  // namespace

TEST_CASE("validation of explicit classes") {
    FiniteLattice c3 = chain_frame(3);
    RaneyExt good = unique_re(c3);
    CHECK(validate_raney(good.frame, good.cstar).ok());

    // dropping any principal filter breaks containment
    for (int drop = 0; drop < c3.n(); ++drop) {
        std::vector<FilterRepr> rest;
        for (int a = 0; a < c3.n(); ++a)
            if (a != drop) rest.push_back(FilterRepr::principal(Elem::fin(a)));
        auto rep = validate_raney(good.frame, FilterClass::explicit_set(rest));
        CHECK_FALSE(rep.ok());
        bool contains_cond = false;
        for (const auto& c : rep.conditions)
            if (c.id == "contains-principal-filters" && c.status == Status::fail)
                contains_cond = true;
        CHECK(contains_cond);
    }
}

TEST_CASE("validation of named classes") {
    FrameHandle C = FrameHandle::cofinite();
    for (FilterFamily fam : {FilterFamily::E, FilterFamily::SE, FilterFamily::R,
                             FilterFamily::ICP, FilterFamily::ISO})
        CHECK(validate_raney(C, FilterClass::named(fam)).ok());

    // Named(R) on a non-subfit finite frame fails: the 3-chain
    FrameHandle c3 = FrameHandle::finite(chain_frame(3));
    CHECK_FALSE(validate_raney(c3, FilterClass::named(FilterFamily::R)).ok());
    // and passes on a Boolean one
    FrameHandle d = FrameHandle::finite(diamond_frame());
    CHECK(validate_raney(d, FilterClass::named(FilterFamily::R)).ok());

    CHECK_THROWS_AS(FilterClass::named(FilterFamily::CP), error);
}

TEST_CASE("every Raney extension is E-compact") {
    for (const FinitePoset& p : all_posets(3)) {
        RaneyExt re = unique_re(downset_lattice(p));
        CHECK(is_compact(re, FilterFamily::E).value == Tri::yes);
        CHECK(is_compact(re, FilterFamily::R).value == Tri::yes);
        CHECK(is_compact(re, FilterFamily::CP).value == Tri::yes);  // finite: sober
        CHECK(is_dense(re, FilterFamily::E).value == Tri::yes);     // finite: TD
    }
    for (FilterFamily fam : {FilterFamily::E, FilterFamily::SE, FilterFamily::R,
                             FilterFamily::ICP, FilterFamily::ISO}) {
        RaneyExt re{FrameHandle::cofinite(), FilterClass::named(fam)};
        CHECK(is_compact(re, FilterFamily::E).value == Tri::yes);
    }
}

TEST_CASE("CP-compactness separates the two fixtures") {
    RaneyExt nat = omega_R(SymbolicSpace::cofinite_nat);
    RaneyExt gen = omega_R(SymbolicSpace::cofinite_nat_generic);
    CHECK(is_compact(nat, FilterFamily::CP).value == Tri::no);
    CHECK(is_compact(gen, FilterFamily::CP).value == Tri::yes);
    CHECK(is_compact(gen, FilterFamily::CP).inventory);
}

TEST_CASE("spectra of finite extensions are the prime spectra") {
    for (const FinitePoset& p : all_posets(3)) {
        FiniteLattice L = downset_lattice(p);
        RaneyExt re = unique_re(L);
        auto sp = spectrum(re);
        CHECK(sp.points.size() == L.primes().size());
        CHECK(sp.complete);
        CHECK(alexandrov_collapse(sp.topology));
        // the topologizing map turns joins into unions and meets into
        // intersections
        auto primes = L.primes();
        auto phi = [&](int a) {
            Bits m = 0;
            for (size_t k = 0; k < primes.size(); ++k)
                if (!L.leq(a, primes[k])) m |= bit((int)k);
            return m;
        };
        for (int a = 0; a < L.n(); ++a)
            for (int b = 0; b < L.n(); ++b) {
                CHECK(phi(L.join(a, b)) == (phi(a) | phi(b)));
                CHECK(phi(L.meet(a, b)) == (phi(a) & phi(b)));
            }
    }
}

TEST_CASE("adjunction fixpoints on finite extensions") {
    // every member of C* is up of its own meet
    for (const FinitePoset& p : all_posets(3)) {
        FiniteLattice L = downset_lattice(p);
        Bits cm = finite_cstar_mask(unique_re(L));
        for_each_bit(cm, [&](int a) {
            Bits f = L.up_mask(a);
            CHECK(L.up_mask(L.meet_mask(f)) == f);
        });
    }
}

TEST_CASE("spectra over the cofinite frame realize the two-point-set interval") {
    FrameHandle C = FrameHandle::cofinite();
    auto spE = spectrum(RaneyExt{C, FilterClass::named(FilterFamily::E)}, 6);
    CHECK(spE.points.size() == 6);
    CHECK_FALSE(spE.has_generic);
    auto spSE = spectrum(RaneyExt{C, FilterClass::named(FilterFamily::SE)}, 6);
    CHECK(spSE.points.size() == 7);
    CHECK(spSE.has_generic);
    CHECK_FALSE(spSE.complete);

    // the windowed topologies match the fixture spaces: discrete trace
    // for E, one added generic top for SE
    CHECK(spE.topology.opens.size() == 64);  // full powerset of the window
    FinitePoset spec = specialization(spSE.topology);
    int star = spSE.topology.n - 1;
    for (int x = 0; x < star; ++x) {
        CHECK(spec.lt(x, star));
        for (int y = 0; y < star; ++y) CHECK((x == y || !spec.lt(x, y)));
    }
}

TEST_CASE("property suites of the fixtures and of finite frames") {
    auto nat = property_suite(omega_R(SymbolicSpace::cofinite_nat));
    CHECK(nat.sober.value == Tri::no);
    CHECK(nat.td.value == Tri::yes);
    CHECK(nat.t1.value == Tri::yes);
    CHECK(nat.subfit.value == Tri::yes);
    auto gen = property_suite(omega_R(SymbolicSpace::cofinite_nat_generic));
    CHECK(gen.sober.value == Tri::yes);
    CHECK(gen.td.value == Tri::no);
    CHECK(gen.t1.value == Tri::no);

    for (const FinitePoset& p : all_posets(3)) {
        FiniteLattice L = downset_lattice(p);
        auto pr = property_suite(unique_re(L));
        CHECK(pr.sober.value == Tri::yes);
        CHECK(pr.td.value == Tri::yes);
        CHECK((pr.t1.value == Tri::yes) == L.is_boolean());
        CHECK((pr.subfit.value == Tri::yes) == L.is_subfit());
        CHECK(pr.spatial.value == Tri::yes);
    }
}

TEST_CASE("extension of morphisms between finite frames always succeeds") {
    FiniteLattice c3 = chain_frame(3);
    FiniteLattice d = diamond_frame();
    FrameHandle S = FrameHandle::finite(c3), T = FrameHandle::finite(d);
    RaneyExt sre = unique_re(c3), tre = unique_re(d);
    auto maps = enumerate_frame_maps(S, T);
    CHECK(!maps.empty());
    for (const auto& f : maps) {
        auto ext = extend_morphism(f, sre, tre);
        CHECK(ext.extends);
        for (const auto& c : ext.verification) CHECK(c.ok());
        CHECK(is_exact_morphism(f) == Tri::yes);
    }
    // identity on anything extends
    auto id = FrameMap::identity_map(S);
    CHECK(extend_morphism(id, sre, sre).extends);
}

TEST_CASE("the classifier map is refused from the regular class and accepted from SE") {
    FrameHandle C = FrameHandle::cofinite();
    FrameHandle two = FrameHandle::finite(frame_2());
    FrameMap cl = FrameMap::classifier(C, two);
    RaneyExt tgt = unique_re(two.lat);

    auto refused = extend_morphism(cl, omega_R(SymbolicSpace::cofinite_nat), tgt);
    CHECK_FALSE(refused.extends);
    CHECK(refused.decided == Tri::no);
    CHECK(refused.offending_preimage.kind == FilterRepr::Kind::prime_complement);
    CHECK(refused.offending_preimage.elems[0].c.empty);

    auto accepted = extend_morphism(cl, RaneyExt{C, FilterClass::named(FilterFamily::SE)}, tgt);
    CHECK(accepted.extends);
    for (const auto& c : accepted.verification) CHECK(c.ok());

    // the sober fixture also accepts it: sobrification repairs the refusal
    auto via_sober = extend_morphism(cl, omega_R(SymbolicSpace::cofinite_nat_generic), tgt);
    CHECK(via_sober.extends);

    CHECK(is_exact_morphism(cl) == Tri::no);
    CHECK(is_exact_morphism(FrameMap::identity_map(C)) == Tri::yes);
}

TEST_CASE("the identity extends down the class order but not up") {
    // the free SE extension surjects onto every other extension of the
    // same frame; the regular extension cannot reach back up
    FrameHandle C = FrameHandle::cofinite();
    FrameMap id = FrameMap::identity_map(C);
    RaneyExt se{C, FilterClass::named(FilterFamily::SE)};
    RaneyExt r{C, FilterClass::named(FilterFamily::R)};
    CHECK(extend_morphism(id, se, r).extends);
    auto up = extend_morphism(id, r, se);
    CHECK_FALSE(up.extends);
    CHECK(up.decided == Tri::no);
    CHECK(up.offending_preimage.elems[0].c.empty);  // the generic witness again
}

TEST_CASE("explicit classes reject representations that do not denote filters") {
    FiniteLattice d = diamond_frame();
    FrameHandle F = FrameHandle::finite(d);
    // the complement of a non-prime element is not meet-closed
    FilterRepr bad = FilterRepr::prime_complement(Elem::fin(d.bottom));
    auto rep = validate_raney(F, FilterClass::explicit_set({bad}));
    CHECK_FALSE(rep.ok());
}

TEST_CASE("sobrification adds the generic point exactly once") {
    RaneyExt nat = omega_R(SymbolicSpace::cofinite_nat);
    RaneyExt sob = sobrification(nat);
    CHECK(is_compact(sob, FilterFamily::CP).value == Tri::yes);
    auto before = spectrum(nat, 5), after = spectrum(sob, 5);
    CHECK_FALSE(before.has_generic);
    CHECK(after.has_generic);
    CHECK(after.points.size() == before.points.size() + 1);
    // idempotent
    RaneyExt again = sobrification(sob);
    CHECK(again.cstar.kind == sob.cstar.kind);
    // finite extensions are already sober
    RaneyExt fin = unique_re(chain_frame(4));
    CHECK(finite_cstar_mask(sobrification(fin)) == finite_cstar_mask(fin));
}

TEST_CASE("TD reflection drops the generic point") {
    RaneyExt gen = omega_R(SymbolicSpace::cofinite_nat_generic);
    RaneyExt refl = td_reflection(gen);
    auto sp = spectrum(refl, 5);
    CHECK_FALSE(sp.has_generic);
    CHECK(is_dense(refl, FilterFamily::E).value == Tri::yes);
    // finite: identity
    RaneyExt fin = unique_re(diamond_frame());
    CHECK(finite_cstar_mask(td_reflection(fin)) == finite_cstar_mask(fin));
}

TEST_CASE("canonical extensions") {
    // Boolean finite frame: canonical = regular class = everything
    FiniteLattice b = boolean_frame(2);
    RaneyExt can = canonical_extension(FrameHandle::finite(b));
    CHECK(finite_cstar_mask(can) == b.all_mask());
    CHECK(family_mask(b, FilterFamily::R) == b.all_mask());
    // non-Boolean: the regular class is properly smaller
    FiniteLattice c3 = chain_frame(3);
    CHECK(family_mask(c3, FilterFamily::R) != c3.all_mask());
    CHECK(is_algebraic(canonical_extension(FrameHandle::finite(c3))).value == Tri::yes);
    // cofinite: canonical extension contains the generic point and is sober
    RaneyExt cc = canonical_extension(FrameHandle::cofinite());
    CHECK(is_compact(cc, FilterFamily::CP).value == Tri::yes);
    CHECK(is_algebraic(cc).value == Tri::yes);
}

TEST_CASE("adjunction fixpoints of C*") {
    FrameHandle C = FrameHandle::cofinite();
    for (FilterFamily fam : {FilterFamily::R, FilterFamily::SE, FilterFamily::ICP}) {
        RaneyExt re{C, FilterClass::named(fam)};
        for (const auto& item : cofinite_inventory(C, 8))
            if (nf_in_cstar(re, item.nf)) CHECK(nf_roundup(re, item.nf) == item.nf);
    }
    // outside C* the generic filter rounds up to the improper filter
    RaneyExt nat = omega_R(SymbolicSpace::cofinite_nat);
    CHECK(nf_roundup(nat, nf_generic()) == nf_all());
}

TEST_CASE("the full suite drivers stay green on a small corpus") {
    SuiteOptions opt;
    opt.max_points = 3;
    for (const char* s :
         {"background", "raney-core", "duality", "sublocales", "morphisms", "properties"})
        for (const auto& rep : run_verify(s, "corpus", opt)) CHECK(rep.all_ok());
    for (const auto& rep : run_verify("fixtures", "", opt)) CHECK(rep.all_ok());
}

#include <doctest.h>

#include <sstream>

#include "raney/suites.hpp"

using namespace raney;

TEST_CASE("corpus construction and frozen counts") {
    Corpus c = build_corpus(4);
    int n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    for (const auto& e : c.entries) {
        if (e.poset.n == 1) ++n1;
        if (e.poset.n == 2) ++n2;
        if (e.poset.n == 3) ++n3;
        if (e.poset.n == 4) ++n4;
        CHECK(e.frame.distributive);
        CHECK(e.space.is_t0());
    }
    CHECK(n1 == expected_poset_count(1));
    CHECK(n2 == expected_poset_count(2));
    CHECK(n3 == expected_poset_count(3));
    CHECK(n4 == expected_poset_count(4));
}

TEST_CASE("six-point posets reach the catalog bound") {
    CHECK(all_posets(6).size() == (size_t)expected_poset_count(6));
}

TEST_CASE("poset text round-trip") {
    FinitePoset p = poset_from_pairs(4, {{0, 1}, {1, 2}, {0, 3}});
    std::istringstream in(poset_to_text(p));
    FinitePoset q = parse_poset_text(in);
    CHECK(p.canonical_key() == q.canonical_key());
    CHECK(p.up == q.up);  // same labels, not just isomorphic
}

TEST_CASE("space text round-trip") {
    FiniteSpace X = sierpinski_space();
    std::istringstream in(space_to_text(X));
    FiniteSpace Y = parse_space_text(in);
    CHECK(X.opens == Y.opens);
    CHECK(X.n == Y.n);
}

TEST_CASE("lattice and frame JSON round-trip") {
    FiniteLattice L = diamond_frame();
    FiniteLattice M = lattice_from_json(lattice_to_json(L));
    CHECK(M.n() == L.n());
    for (int a = 0; a < L.n(); ++a)
        for (int b = 0; b < L.n(); ++b) {
            CHECK(L.leq(a, b) == M.leq(a, b));
            CHECK(L.meet(a, b) == M.meet(a, b));
            CHECK(L.heyting(a, b) == M.heyting(a, b));
        }
    FrameHandle C = FrameHandle::cofinite(12);
    FrameHandle C2 = frame_from_json(frame_to_json(C));
    CHECK(C2.kind == FrameHandle::Kind::cofinite);
    CHECK(C2.support_bound == 12);
}

TEST_CASE("filter and extension JSON round-trip") {
    FrameHandle C = FrameHandle::cofinite();
    FilterRepr f = FilterRepr::meet_of(
        {FilterRepr::prime_complement(Elem::cof(cof_empty())),
         FilterRepr::arrow(Elem::cof(cof(bit(0))), Elem::cof(cof(bit(1))))});
    FilterRepr g = filter_from_json(C, filter_to_json(C, f));
    // same denotation on the element samples
    for (const Elem& x : C.sample_elements())
        CHECK(filter_member(C, f, x) == filter_member(C, g, x));

    RaneyExt re = omega_R(SymbolicSpace::cofinite_nat);
    RaneyExt re2 = raney_from_json(raney_to_json(re));
    CHECK(re2.cstar.kind == FilterClass::Kind::named);
    CHECK(re2.cstar.name == FilterFamily::R);

    RaneyExt hull = sobrification(re);
    RaneyExt hull2 = raney_from_json(raney_to_json(hull));
    CHECK(hull2.cstar.kind == FilterClass::Kind::sober_hull);
}

TEST_CASE("sublocale JSON carries the classification flags") {
    FiniteLattice c3 = chain_frame(3);
    Json j = sublocale_to_json(c3, open_sl(c3, 1));
    CHECK(j["open"].get<bool>());
    CHECK(j["exact"].get<bool>());
}

TEST_CASE("reports are deterministic") {
    SuiteOptions opt;
    opt.max_points = 3;
    auto run = [&] {
        std::vector<SuiteReport> all;
        for (const char* s : {"background", "fixtures", "properties"})
            for (auto& r : run_verify(s, s == std::string("fixtures") ? "" : "corpus", opt))
                all.push_back(std::move(r));
        return dump_report(all);
    };
    std::string a = run(), b = run();
    CHECK(a == b);
    CHECK(a.find("raney-report/1") != std::string::npos);
}

TEST_CASE("report JSON shape") {
    SuiteOptions opt;
    opt.max_points = 2;
    auto reports = run_verify("raney-core", "corpus", opt);
    Json j = report_to_json(reports);
    CHECK(j["schema"] == kReportSchema);
    REQUIRE(j["reports"].size() == 1);
    for (const auto& chk : j["reports"][0]["checks"]) {
        CHECK(chk.contains("law"));
        CHECK(chk.contains("status"));
    }
    CHECK(j["reports"][0]["summary"]["fail"].get<int>() == 0);
}

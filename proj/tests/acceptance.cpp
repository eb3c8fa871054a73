// Acceptance suite: one criterion per line, nonzero exit on any failure.
// Everything runs at the documented defaults: corpus of all posets on at
// most 5 points, sublocale enumeration capped at 12 elements, cofinite
// window 16.

#include <chrono>
#include <iostream>

#include "raney/suites.hpp"

using namespace raney;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

struct SuiteOutcome {
    bool ok = true;
    std::string detail;
};

SuiteOutcome outcome(const std::vector<SuiteReport>& reports) {
    SuiteOutcome o;
    for (const auto& r : reports)
        for (const auto& c : r.checks)
            if (!c.ok()) {
                o.ok = false;
                if (o.detail.empty()) o.detail = c.id + (c.witness.empty() ? "" : ": " + c.witness);
            }
    return o;
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    SuiteOptions opt;  // max_points 5, window 16, sublocale cap 12

    {
        auto o = outcome(run_verify("background", "corpus", opt));
        criterion(1,
                  "background laws (open/closed sublocale identities, prime laws, Heyting "
                  "adjunction, smallest-sublocale minimality) hold on every corpus frame",
                  o.ok, o.detail);
    }
    {
        auto o = outcome(run_verify("raney-core", "corpus", opt));
        criterion(2,
                  "degenerate collapse on finite frames: principal filters, Filt = L-op, "
                  "E = SE, unique extension, covered primes, pt_R = pt_D = pt",
                  o.ok, o.detail);
    }
    {
        auto o = outcome(run_verify("duality", "corpus", opt));
        criterion(3,
                  "duality: psi is a homeomorphism and phi an isomorphism on T0 spaces up to "
                  "4 points; psi is non-injective on non-T0 spaces up to 3 points",
                  o.ok, o.detail);
    }
    {
        Corpus corpus = build_corpus(opt.max_points);
        SuiteReport rep;
        rep.suite = "sublocales/ker-coker";
        rep.target = "corpus";
        detail::LawAggregator agg{rep.checks};
        for (const auto& e : corpus.entries)
            for (const auto& c : kercoker_checks(e.frame, e.id, opt.subloc_cap)) agg.merge(c);
        auto o = outcome({rep});
        criterion(4,
                  "ker and coker are mutually inverse order isomorphisms onto the filter "
                  "classes on every corpus frame within the cap, with ker(o(a)) = up(a)",
                  o.ok, o.detail);
    }
    {
        Corpus corpus = build_corpus(opt.max_points);
        SuiteReport rep;
        rep.suite = "sublocales/exact";
        rep.target = "corpus";
        detail::LawAggregator agg{rep.checks};
        for (const auto& e : corpus.entries)
            for (const auto& c : exact_sublocale_checks(e.frame, e.id, opt.subloc_cap))
                agg.merge(c);
        auto o = outcome({rep});
        criterion(5,
                  "exact sublocales contain open, closed and covered two-element sublocales, "
                  "are join-closed, and are stable under difference",
                  o.ok, o.detail);
    }
    {
        auto o = outcome(run_verify("fixtures", "", opt));
        criterion(6,
                  "cofinite fixtures at window 16: covered primes, the generic filter's "
                  "classification, the E/SE spectra, the property suites against the "
                  "point-set oracles, sobrification, and the refused classifier",
                  o.ok, o.detail);
    }
    {
        auto o = outcome(run_verify("morphisms", "corpus", opt));
        criterion(7,
                  "every frame map between corpus frames with at most 4 elements extends to "
                  "the unique extensions, preserving meets and finite joins",
                  o.ok, o.detail);
    }
    {
        auto o = outcome(run_verify("properties", "corpus", opt));
        criterion(8,
                  "subfitness and the T1 characterizations agree on every corpus frame; on "
                  "Boolean frames the canonical extension is the regular class",
                  o.ok, o.detail);
    }
    {
        auto run_all = [&] {
            std::vector<SuiteReport> all;
            for (const char* s : {"background", "raney-core", "duality", "sublocales",
                                  "morphisms", "properties"})
                for (auto& r : run_verify(s, "corpus", opt)) all.push_back(std::move(r));
            for (auto& r : run_verify("fixtures", "", opt)) all.push_back(std::move(r));
            return dump_report(all);
        };
        std::string first = run_all();
        std::string second = run_all();
        criterion(9, "two consecutive full runs produce byte-identical JSON reports",
                  first == second);
    }

    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << failures << " failing) in " << dt << " ms" << std::endl;
    return failures == 0 ? 0 : 1;
}

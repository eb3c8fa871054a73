// Batch driver: corpus generation, theorem regression suites, spectrum and
// extension queries, deterministic JSON reports.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "raney/suites.hpp"

namespace fs = std::filesystem;
using namespace raney;

namespace {

struct GlobalOpts {
    std::string corpus_dir = "corpus";
    int max_points = 5;
    int window = kDefaultWindow;
    int subloc_cap = kDefaultSublocCap;
    std::string json_out;
    bool strict_unknown = false;

    SuiteOptions suite() const { return SuiteOptions{max_points, window, subloc_cap}; }
};

FrameHandle frame_target(const std::string& name, const GlobalOpts& g) {
    if (name == "cofinite") return FrameHandle::cofinite(g.window);
    if (!name.empty() && name[0] == '@') {
        std::ifstream in(name.substr(1));
        if (!in) throw error("cannot open " + name.substr(1));
        Json j = Json::parse(in);
        return frame_from_json(j);
    }
    return FrameHandle::finite(lattice_by_name(name));
}

RaneyExt re_target(const std::string& name, const GlobalOpts& g) {
    if (name == "cofinite-nat") return omega_R(SymbolicSpace::cofinite_nat, g.window);
    if (name == "cofinite-nat-generic")
        return omega_R(SymbolicSpace::cofinite_nat_generic, g.window);
    if (name == "sierpinski") return omega_R(sierpinski_space());
    if (name.rfind("@space:", 0) == 0) {
        std::ifstream in(name.substr(7));
        if (!in) throw error("cannot open " + name.substr(7));
        return omega_R(parse_space_text(in));
    }
    if (!name.empty() && name[0] == '@') {
        std::ifstream in(name.substr(1));
        if (!in) throw error("cannot open " + name.substr(1));
        return raney_from_json(Json::parse(in));
    }
    FrameHandle F = frame_target(name, g);
    if (!F.is_finite()) return RaneyExt{F, FilterClass::named(FilterFamily::SE)};
    std::vector<FilterRepr> all;
    for (int a = 0; a < F.lat.n(); ++a) all.push_back(FilterRepr::principal(Elem::fin(a)));
    return RaneyExt{F, FilterClass::explicit_set(std::move(all))};
}

int finish(const std::vector<SuiteReport>& reports, const GlobalOpts& g,
           std::chrono::steady_clock::time_point started) {
    bool any_fail = false, any_unknown = false;
    for (const auto& r : reports) {
        std::cout << "suite " << r.suite << " [" << r.target << "]\n";
        for (const auto& c : r.checks) {
            std::cout << "  " << status_name(c.status) << "  " << c.id;
            if (!c.witness.empty()) std::cout << "  (" << c.witness << ")";
            std::cout << "\n";
            if (c.status == Status::fail) any_fail = true;
            if (c.status == Status::unknown) any_unknown = true;
        }
    }
    if (!g.json_out.empty()) {
        std::ofstream out(g.json_out, std::ios::binary);
        out << dump_report(reports);
    }
    // wall-clock on stderr only; the JSON report stays byte-reproducible
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cerr << "verified in " << ms << " ms\n";
    if (any_fail) return 1;
    if (any_unknown && g.strict_unknown) return 2;
    return 0;
}

int cmd_catalog(const GlobalOpts& g) {
    if (g.max_points > 6) throw error("catalog supports at most 6 points");
    Corpus corpus = build_corpus(g.max_points);
    fs::create_directories(fs::path(g.corpus_dir) / "posets");
    fs::create_directories(fs::path(g.corpus_dir) / "spaces");
    fs::create_directories(fs::path(g.corpus_dir) / "frames");
    Json manifest;
    manifest["schema"] = "raney-corpus/1";
    manifest["max_points"] = g.max_points;
    Json posets = Json::array(), frames = Json::array(), spaces = Json::array();
    for (const auto& e : corpus.entries) {
        std::string pfile = "posets/" + e.id + ".txt";
        std::string sfile = "spaces/" + e.id + ".txt";
        std::string ffile = "frames/" + e.id + ".json";
        std::ofstream(fs::path(g.corpus_dir) / pfile) << poset_to_text(e.poset);
        std::ofstream(fs::path(g.corpus_dir) / sfile) << space_to_text(e.space);
        std::ofstream(fs::path(g.corpus_dir) / ffile)
            << Json{{"kind", "finite"}, {"data", lattice_to_json(e.frame)}}.dump(2) << "\n";
        posets.push_back(Json{{"id", e.id}, {"points", e.poset.n}, {"file", pfile}});
        frames.push_back(Json{{"id", e.id}, {"elements", e.frame.n()}, {"file", ffile}});
        spaces.push_back(Json{{"id", e.id}, {"points", e.space.n}, {"file", sfile}});
    }
    manifest["posets"] = posets;
    manifest["frames"] = frames;
    manifest["spaces"] = spaces;
    std::ofstream(fs::path(g.corpus_dir) / "manifest.json") << manifest.dump(2) << "\n";
    std::cout << "wrote " << corpus.entries.size() << " corpus entries to " << g.corpus_dir
              << "\n";
    return 0;
}

int cmd_spectrum(const std::string& target, const std::string& cls, const GlobalOpts& g) {
    RaneyExt re = re_target(target, g);
    if (!cls.empty()) {
        auto fam = family_from_name(cls);
        if (!fam) throw error("unknown class: " + cls);
        re.cstar = FilterClass::named(*fam);
        auto rep = validate_raney(re.frame, re.cstar, g.window);
        if (!rep.ok()) throw error("class " + cls + " is not a valid extension here");
    }
    SpectrumSpace sp = spectrum(re, g.window);
    Json j;
    j["schema"] = "raney-spectrum/1";
    j["target"] = target;
    j["cstar"] = re.cstar.describe();
    Json pts = Json::array();
    for (size_t i = 0; i < sp.points.size(); ++i)
        pts.push_back(Json{{"name", sp.point_names[i]},
                           {"filter", filter_to_json(re.frame, sp.points[i])}});
    j["points"] = pts;
    j["complete"] = sp.complete;
    if (!sp.tail.empty()) j["tail"] = sp.tail;
    std::cout << j.dump(2) << "\n";
    if (!g.json_out.empty()) std::ofstream(g.json_out, std::ios::binary) << j.dump(2) << "\n";
    return 0;
}

int cmd_extend(const std::string& mapname, const std::string& src, const std::string& tgt,
               const GlobalOpts& g) {
    RaneyExt s = re_target(src, g);
    RaneyExt t = re_target(tgt, g);
    // The identity frame map between two different extensions of the same
    // frame is a meaningful query (that is how reflections are probed),
    // so the target is taken as given.
    auto identity_between = [&]() {
        if (s.frame.kind != t.frame.kind ||
            (s.frame.is_finite() && s.frame.lat.n() != t.frame.lat.n()))
            throw error("identity needs the same frame on both sides");
        return FrameMap::identity_map(s.frame);
    };
    FrameMap f;
    if (mapname == "identity") {
        f = identity_between();
    } else if (mapname == "classifier") {
        f = FrameMap::classifier(s.frame, t.frame);
    } else if (!mapname.empty() && mapname[0] == '@') {
        std::ifstream in(mapname.substr(1));
        if (!in) throw error("cannot open " + mapname.substr(1));
        Json j = Json::parse(in);
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "identity") {
            f = identity_between();
        } else if (kind == "classifier") {
            f = FrameMap::classifier(s.frame, t.frame);
        } else if (kind == "table") {
            f = FrameMap::table_map(s.frame, t.frame, j.at("table").get<std::vector<int>>());
        } else {
            throw error("unknown map kind: " + kind);
        }
    } else {
        throw error("map must be identity, classifier, or @file.json");
    }
    auto ext = extend_morphism(f, s, t, g.window);
    Json j;
    j["schema"] = "raney-extend/1";
    j["source"] = src;
    j["target"] = tgt;
    j["extends"] = ext.extends;
    j["decided"] = tri_to_string(ext.decided);
    if (ext.decided == Tri::no) {
        j["refusal"] = Json{{"target_filter", filter_to_json(t.frame, ext.offending_target)},
                            {"preimage", filter_to_json(s.frame, ext.offending_preimage)},
                            {"note", ext.witness_name}};
    } else if (ext.extends) {
        Json checks = Json::array();
        for (const auto& c : ext.verification)
            checks.push_back(Json{{"law", c.id}, {"status", status_name(c.status)}});
        j["verification"] = checks;
    }
    std::cout << j.dump(2) << "\n";
    if (!g.json_out.empty()) std::ofstream(g.json_out, std::ios::binary) << j.dump(2) << "\n";
    return ext.decided == Tri::unknown && g.strict_unknown ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"raney: a computational toolkit for frames, filters, sublocales and their "
                 "Raney extensions"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--corpus", g.corpus_dir, "corpus directory");
    app.add_option("--max-points", g.max_points, "poset size bound for corpus generation");
    app.add_option("--window", g.window, "reporting window for the cofinite frame");
    app.add_option("--subloc-cap", g.subloc_cap, "frame size cap for sublocale enumeration");
    app.add_option("--json", g.json_out, "write the report as JSON to this file");
    app.add_flag("--strict-unknown", g.strict_unknown, "exit 2 when any check is unknown");

    auto* catalog = app.add_subcommand("catalog", "enumerate the poset/frame/space corpus");

    std::string suite, verify_target = "corpus";
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite,
                       "background | raney-core | duality | properties | morphisms | "
                       "sublocales | fixtures")
        ->required();
    verify->add_option("target", verify_target,
                       "corpus, a frame name, cofinite, or a fixture name");

    std::string sp_target, sp_class;
    auto* spec = app.add_subcommand("spectrum", "compute the spectrum of a Raney extension");
    spec->add_option("target", sp_target, "extension: frame name, fixture name, or @file")
        ->required();
    spec->add_option("class", sp_class, "filter class: E | SE | R | ICP | ISO");

    std::string map_name, ext_src, ext_tgt;
    auto* extend = app.add_subcommand("extend", "extend a frame map to Raney extensions");
    extend->add_option("map", map_name, "identity | classifier | @file.json")->required();
    extend->add_option("src", ext_src, "source extension")->required();
    extend->add_option("tgt", ext_tgt, "target extension")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*catalog) return cmd_catalog(g);
        if (*verify) {
            auto started = std::chrono::steady_clock::now();
            return finish(run_verify(suite, verify_target, g.suite()), g, started);
        }
        if (*spec) return cmd_spectrum(sp_target, sp_class, g);
        if (*extend) return cmd_extend(map_name, ext_src, ext_tgt, g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

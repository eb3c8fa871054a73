#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "raney/corpus.hpp"

namespace raney {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "raney-report/1";

// --- poset / space text formats ---------------------------------------------
//
// Poset:  first line n, then one `i < j` pair per line.
// Space:  first line n, then one open set per line as a decimal bitmask.

inline FinitePoset parse_poset_text(std::istream& in) {
    int n;
    if (!(in >> n)) throw error("poset text: missing size line");
    std::vector<std::pair<int, int>> pairs;
    int i, j;
    std::string lt;
    while (in >> i >> lt >> j) {
        if (lt != "<") throw error("poset text: expected `i < j`");
        pairs.emplace_back(i, j);
    }
    return poset_from_pairs(n, pairs);
}

inline std::string poset_to_text(const FinitePoset& p) {
    std::ostringstream out;
    out << p.n << "\n";
    for (auto [a, b] : p.cover_pairs()) out << a << " < " << b << "\n";
    return out.str();
}

inline FiniteSpace parse_space_text(std::istream& in) {
    int n;
    if (!(in >> n)) throw error("space text: missing point count");
    std::vector<Bits> opens;
    Bits m;
    while (in >> m) opens.push_back(m);
    return FiniteSpace(n, std::move(opens));
}

inline std::string space_to_text(const FiniteSpace& X) {
    std::ostringstream out;
    out << X.n << "\n";
    for (Bits u : X.opens) out << u << "\n";
    return out.str();
}

// --- JSON: lattices, frames, elements, filters, extensions -------------------

inline Json lattice_to_json(const FiniteLattice& L) {
    Json j;
    Json elems = Json::array();
    for (int i = 0; i < L.n(); ++i) elems.push_back(i);
    j["elements"] = elems;
    Json rows = Json::array();
    for (int a = 0; a < L.n(); ++a) {
        Json row = Json::array();
        for (int b = 0; b < L.n(); ++b) row.push_back(L.leq(a, b) ? 1 : 0);
        rows.push_back(row);
    }
    j["leq_matrix"] = rows;
    auto table = [&](const std::vector<int>& t) {
        Json rs = Json::array();
        for (int a = 0; a < L.n(); ++a) {
            Json row = Json::array();
            for (int b = 0; b < L.n(); ++b) row.push_back(t[a * L.n() + b]);
            rs.push_back(row);
        }
        return rs;
    };
    j["tables"] = Json{{"meet", table(L.meet_t)},
                       {"join", table(L.join_t)},
                       {"heyting", L.has_heyting ? table(L.hey_t) : Json(nullptr)}};
    return j;
}

inline FiniteLattice lattice_from_json(const Json& j) {
    auto rows = j.at("leq_matrix");
    const int n = (int)rows.size();
    return lattice_from_leq(n, [&](int a, int b) { return rows[a][b].get<int>() != 0; });
}

inline Json frame_to_json(const FrameHandle& F) {
    if (F.is_finite()) return Json{{"kind", "finite"}, {"data", lattice_to_json(F.lat)}};
    return Json{{"kind", "cofinite"}, {"data", Json{{"support_bound", F.support_bound}}}};
}

inline FrameHandle frame_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite") return FrameHandle::finite(lattice_from_json(j.at("data")));
    if (kind == "cofinite")
        return FrameHandle::cofinite(j.at("data").value("support_bound", kDefaultWindow));
    throw error("unknown frame kind: " + kind);
}

inline Json elem_to_json(const FrameHandle& F, const Elem& e) {
    if (F.is_finite()) return Json(e.id);
    if (e.c.empty) return Json{{"empty", true}};
    Json comp = Json::array();
    for_each_bit(e.c.cmpl, [&](int i) { comp.push_back(i); });
    return Json{{"cofinite_complement", comp}};
}

inline Elem elem_from_json(const FrameHandle& F, const Json& j) {
    if (F.is_finite()) return Elem::fin(j.get<int>());
    if (j.contains("empty") && j["empty"].get<bool>()) return Elem::cof(cof_empty());
    Bits m = 0;
    for (const auto& v : j.at("cofinite_complement")) m |= bit(v.get<int>());
    return Elem::cof(cof(m));
}

inline Json filter_to_json(const FrameHandle& F, const FilterRepr& f) {
    using K = FilterRepr::Kind;
    switch (f.kind) {
        case K::principal: return Json{{"kind", "principal"}, {"a", elem_to_json(F, f.elems[0])}};
        case K::generated: {
            Json g = Json::array();
            for (const Elem& e : f.elems) g.push_back(elem_to_json(F, e));
            return Json{{"kind", "generated"}, {"generators", g}};
        }
        case K::prime_complement:
            return Json{{"kind", "prime_complement"}, {"p", elem_to_json(F, f.elems[0])}};
        case K::arrow:
            return Json{{"kind", "arrow"},
                        {"a", elem_to_json(F, f.elems[0])},
                        {"b", elem_to_json(F, f.elems[1])}};
        case K::meet: {
            Json ch = Json::array();
            for (const auto& g : f.children) ch.push_back(filter_to_json(F, g));
            return Json{{"kind", "meet"}, {"of", ch}};
        }
    }
    throw error("bad filter representation");
}

inline FilterRepr filter_from_json(const FrameHandle& F, const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "principal") return FilterRepr::principal(elem_from_json(F, j.at("a")));
    if (kind == "generated") {
        std::vector<Elem> g;
        for (const auto& v : j.at("generators")) g.push_back(elem_from_json(F, v));
        return FilterRepr::generated(std::move(g));
    }
    if (kind == "prime_complement")
        return FilterRepr::prime_complement(elem_from_json(F, j.at("p")));
    if (kind == "arrow")
        return FilterRepr::arrow(elem_from_json(F, j.at("a")), elem_from_json(F, j.at("b")));
    if (kind == "meet") {
        std::vector<FilterRepr> ch;
        for (const auto& v : j.at("of")) ch.push_back(filter_from_json(F, v));
        return FilterRepr::meet_of(std::move(ch));
    }
    throw error("unknown filter kind: " + kind);
}

inline Json raney_to_json(const RaneyExt& re) {
    Json j;
    j["frame"] = frame_to_json(re.frame);
    switch (re.cstar.kind) {
        case FilterClass::Kind::explicit_set: {
            Json fs = Json::array();
            for (const auto& f : re.cstar.filters) fs.push_back(filter_to_json(re.frame, f));
            j["cstar"] = Json{{"explicit", fs}};
            break;
        }
        case FilterClass::Kind::named:
            j["cstar"] = Json{{"named", family_name(re.cstar.name)}};
            break;
        case FilterClass::Kind::sober_hull:
            j["cstar"] = Json{{"sober_hull", family_name(re.cstar.name)}};
            break;
    }
    return j;
}

inline RaneyExt raney_from_json(const Json& j) {
    RaneyExt re{frame_from_json(j.at("frame")), FilterClass::named(FilterFamily::SE)};
    const Json& c = j.at("cstar");
    if (c.contains("explicit")) {
        std::vector<FilterRepr> fs;
        for (const auto& v : c["explicit"]) fs.push_back(filter_from_json(re.frame, v));
        re.cstar = FilterClass::explicit_set(std::move(fs));
    } else if (c.contains("named")) {
        auto f = family_from_name(c["named"].get<std::string>());
        if (!f) throw error("unknown class name");
        re.cstar = FilterClass::named(*f);
    } else if (c.contains("sober_hull")) {
        auto f = family_from_name(c["sober_hull"].get<std::string>());
        if (!f) throw error("unknown class name");
        re.cstar = FilterClass::sober_hull(*f);
    } else {
        throw error("cstar must be explicit, named or sober_hull");
    }
    return re;
}

inline Json sublocale_to_json(const FiniteLattice& L, Bits s) {
    Json j;
    j["bitmask"] = s;
    j["exact"] = is_exact_sublocale(L, s);
    j["d_sublocale"] = is_D_sublocale(L, s);
    j["open"] = false;
    j["closed"] = false;
    for (int a = 0; a < L.n(); ++a) {
        if (open_sl(L, a) == s) j["open"] = true;
        if (closed_sl(L, a) == s) j["closed"] = true;
    }
    return j;
}

// --- suite reports ------------------------------------------------------------
//
// Reports are deterministic: no wall-clock data is serialized, so two runs
// with the same inputs are byte-identical. Timing stays on stderr.

struct SuiteReport {
    std::string suite;
    std::string target;
    std::vector<CheckResult> checks;

    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok()) return false;
        return true;
    }
    bool any_unknown() const {
        for (const auto& c : checks)
            if (c.status == Status::unknown) return true;
        return false;
    }
};

inline Json report_to_json(const std::vector<SuiteReport>& reports) {
    Json j;
    j["schema"] = kReportSchema;
    Json rs = Json::array();
    for (const auto& r : reports) {
        Json jr;
        jr["suite"] = r.suite;
        jr["target"] = r.target;
        Json cs = Json::array();
        int pass = 0, fail = 0, unknown = 0;
        for (const auto& c : r.checks) {
            Json jc;
            jc["law"] = c.id;
            jc["status"] = status_name(c.status);
            if (!c.witness.empty()) jc["witness"] = c.witness;
            cs.push_back(jc);
            if (c.status == Status::fail)
                ++fail;
            else if (c.status == Status::unknown)
                ++unknown;
            else
                ++pass;
        }
        jr["checks"] = cs;
        jr["summary"] = Json{{"pass", pass}, {"fail", fail}, {"unknown", unknown}};
        rs.push_back(jr);
    }
    j["reports"] = rs;
    return j;
}

inline std::string dump_report(const std::vector<SuiteReport>& reports) {
    return report_to_json(reports).dump(2) + "\n";
}

}  // namespace raney

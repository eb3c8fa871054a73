#pragma once

#include <string>
#include <vector>

#include "raney/raney.hpp"

namespace raney {

// The finite test corpus: all posets up to max_points (up to isomorphism),
// their downset frames, and the corresponding Alexandrov T0 spaces.
struct CorpusEntry {
    std::string id;
    FinitePoset poset;
    FiniteLattice frame;   // downset lattice of the poset
    FiniteSpace space;     // Alexandrov space (opens = upsets)
};

struct Corpus {
    int max_points = 0;
    std::vector<CorpusEntry> entries;
};

inline Corpus build_corpus(int max_points) {
    if (max_points < 1 || max_points > 6) throw error("corpus supports 1..6 points");
    Corpus c;
    c.max_points = max_points;
    for (int n = 1; n <= max_points; ++n) {
        auto ps = all_posets(n);
        for (size_t i = 0; i < ps.size(); ++i) {
            CorpusEntry e;
            e.id = "p" + std::to_string(n) + "_" + std::to_string(i);
            e.poset = ps[i];
            e.frame = downset_lattice(ps[i]);
            e.space = alexandrov_space(ps[i]);
            c.entries.push_back(std::move(e));
        }
    }
    return c;
}

// Known values of the unlabeled poset count, frozen as a regression guard.
inline int expected_poset_count(int n) {
    switch (n) {
        case 1: return 1;
        case 2: return 2;
        case 3: return 5;
        case 4: return 16;
        case 5: return 63;
        case 6: return 318;
    }
    throw error("no frozen count for this size");
}

inline std::vector<const CorpusEntry*> frames_with_at_most(const Corpus& c, int max_elems) {
    std::vector<const CorpusEntry*> out;
    for (const auto& e : c.entries)
        if (e.frame.n() <= max_elems) out.push_back(&e);
    return out;
}

// Named frames for the CLI and fixtures.
inline FiniteLattice lattice_by_name(const std::string& name) {
    if (name == "frame-2") return frame_2();
    if (name == "chain-3") return chain_frame(3);
    if (name == "chain-4") return chain_frame(4);
    if (name == "diamond") return diamond_frame();
    if (name == "boolean-8") return boolean_frame(3);
    throw error("unknown frame name: " + name);
}

inline bool homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
    if (a.n != b.n || a.opens.size() != b.opens.size()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Bits> img;
        for (Bits u : a.opens) {
            Bits w = 0;
            for_each_bit(u, [&](int i) { w |= bit(perm[i]); });
            img.push_back(w);
        }
        std::sort(img.begin(), img.end(), FiniteSpace::cmp);
        if (img == b.opens) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace raney

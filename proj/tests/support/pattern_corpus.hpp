#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spun/pattern.hpp"

namespace spun::testing {

struct CorpusCase {
    std::string name;
    PreNormalPattern pattern;
    int fingers = 0;
    int circles = 0;
    int nested_circles = 0;
};

// Random finger moves and face circles on top of a normal pattern. Every
// third finger is pushed again right next to the previous one so that the
// canceling pairs nest.
inline CorpusCase grow(const IdealTriangulation& tri, const PreNormalPattern& base, std::uint32_t seed, int fingers,
                       int circles) {
    std::mt19937 rng(seed);
    CorpusCase c{"seed " + std::to_string(seed), base, 0, 0, 0};
    struct Last {
        int tet, face, slot, gap;
    };
    std::optional<Last> last;
    for (int attempt = 0; attempt < 400 && c.fingers < fingers; ++attempt) {
        const auto arcs = face_arcs(tri, c.pattern);
        int tet, face, slot, gap;
        if (last && c.fingers % 3 == 2) {
            tet = last->tet, face = last->face, slot = last->slot, gap = last->gap + 1;
        } else {
            tet = static_cast<int>(rng() % static_cast<unsigned>(tri.size()));
            face = static_cast<int>(rng() % 4);
            const auto cf = canonical_face(tri, tet, face);
            tet = cf[0], face = cf[1];
            do slot = static_cast<int>(rng() % 6);
            while (!edge_on_face(slot, face));
            const int n = c.pattern.points[static_cast<std::size_t>(tri.slot(tet, slot).edge_class)];
            gap = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
        }
        const auto& here = arcs[static_cast<std::size_t>(4 * tet + face)];
        if (here.empty()) continue;
        const int n = c.pattern.points[static_cast<std::size_t>(tri.slot(tet, slot).edge_class)];
        if (gap > n) continue;
        bool done = false;
        for (std::size_t k = 0; k < here.size() && !done; ++k) {
            const std::size_t a = (k + rng() % here.size()) % here.size();
            if (auto next = finger_move(tri, c.pattern, tet, face, static_cast<int>(a), slot, gap)) {
                c.pattern = std::move(*next);
                ++c.fingers;
                last = Last{tet, face, slot, gap};
                done = true;
            }
        }
        if (!done) last.reset();
    }
    for (int i = 0; i < circles; ++i) {
        const int tet = static_cast<int>(rng() % static_cast<unsigned>(tri.size()));
        const int face = static_cast<int>(rng() % 4);
        if (!c.pattern.circles.empty() && rng() % 2 == 0) {
            const FaceCircle& p = c.pattern.circles.back();
            c.pattern = add_circle(tri, c.pattern, p.tet, p.face, p.id);
            ++c.nested_circles;
        } else {
            c.pattern = add_circle(tri, c.pattern, tet, face);
        }
        ++c.circles;
    }
    return c;
}

inline std::vector<CorpusCase> seeded_corpus(const IdealTriangulation& tri, const PreNormalPattern& base, int count,
                                             std::uint32_t seed) {
    std::vector<CorpusCase> out;
    for (int i = 0; i < count; ++i) {
        const auto s = seed + static_cast<std::uint32_t>(i);
        out.push_back(grow(tri, base, s, 1 + i % 6, i % 4));
    }
    return out;
}

}  // namespace spun::testing

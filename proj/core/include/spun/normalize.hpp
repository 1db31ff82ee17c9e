#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spun/coords.hpp"
#include "spun/pattern.hpp"
#include "spun/triangulation.hpp"

namespace spun {

struct CircleInfo {
    FaceCircle circle;
    bool innermost = false;
};

/// Face circles, grouped by face and listed innermost first.
std::vector<CircleInfo> find_face_circles(const IdealTriangulation& tri, const PreNormalPattern& p);

/// Removes an innermost circle. Circles are disjoint from all arcs, so the
/// pieces are untouched.
PreNormalPattern compress_circle(const IdealTriangulation& tri, const PreNormalPattern& p, int circle_id);

/// Two crossings x < y of edge class `edge_class` joined by an arc of one
/// face that returns to the edge it left. (tet, face, slot) locate that arc
/// on the canonical side of the face.
struct CancelingPair {
    int edge_class = 0;
    int x = 0;
    int y = 0;
    int tet = 0;
    int face = 0;
    int slot = 0;
    bool innermost = false;
    friend bool operator==(const CancelingPair&, const CancelingPair&) = default;
};

/// One entry per (edge class, x, y), ordered by edge class, then span
/// (innermost first), then position.
std::vector<CancelingPair> find_canceling_pairs(const IdealTriangulation& tri, const PreNormalPattern& p);

/// Pushes the surface across the disk cut off by the pair's arc. Crossings x
/// and y disappear; arcs meeting them elsewhere around the edge are joined,
/// which can leave new circles on faces.
PreNormalPattern cancel_pair(const IdealTriangulation& tri, const PreNormalPattern& p, const CancelingPair& pair);

bool is_normal(const IdealTriangulation& tri, const PreNormalPattern& p);

/// Triangle and quad counts of a normal pattern. Throws PatternError if the
/// pattern is not normal.
SurfaceVector to_surface_vector(const IdealTriangulation& tri, const PreNormalPattern& p);

struct Move {
    enum class Kind { CompressCircle, CancelPair };
    Kind kind = Kind::CompressCircle;
    int tet = 0;  // face pair, canonical side
    int face = 0;
    int circle = -1;
    int edge_class = -1;
    int x = -1;
    int y = -1;
    long weight_before = 0;
    long weight_after = 0;
    std::string str() const;
};

struct MoveLedger {
    std::vector<Move> moves;
    int cancels() const;
    int compressions() const;
    std::string str() const;
};

/// Each move is applied without checking that the surface is incompressible;
/// the ledger text carries this note.
inline constexpr const char* kMoveAssumption =
    "assumed: circle compressions and pair cancellations are isotopies of an incompressible surface";

struct NormalizeResult {
    bool ok = false;
    PreNormalPattern pattern;
    std::optional<SurfaceVector> vector;
    MoveLedger ledger;
    std::string failure;
};

/// Compresses innermost circles, then cancels innermost pairs, until the
/// pattern is normal. Fails if max_steps moves are not enough or no move
/// applies.
NormalizeResult normalize(const IdealTriangulation& tri, const PreNormalPattern& p, int max_steps);

}  // namespace spun

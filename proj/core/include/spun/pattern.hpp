#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spun/coords.hpp"
#include "spun/triangulation.hpp"

namespace spun {

class PatternError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point where the surface meets an edge, seen from one tetrahedron: the
/// edge slot plus the point's position along its edge class (0 nearest the
/// start of the class direction).
struct EdgePoint {
    int slot = 0;
    int pos = 0;
    friend auto operator<=>(const EdgePoint&, const EdgePoint&) = default;
};

/// One letter of a boundary word: an arc on `face` ending at the edge point.
/// The arc starts at the previous letter's point.
struct Step {
    int face = 0;
    int slot = 0;
    int pos = 0;
    EdgePoint point() const { return {slot, pos}; }
    friend auto operator<=>(const Step&, const Step&) = default;
};

struct Piece {
    int tet = 0;
    std::vector<Step> steps;  // cyclic
    int length() const { return static_cast<int>(steps.size()); }
    friend auto operator<=>(const Piece&, const Piece&) = default;
};

/// A closed curve of the surface inside a face, bounding a disk there.
struct FaceCircle {
    int id = 0;
    int tet = 0;   // canonical side of the face pair
    int face = 0;
    int depth = 0;  // 0 = outermost on its face
    int parent = -1;
    friend bool operator==(const FaceCircle&, const FaceCircle&) = default;
};

/// An arc on one face, as a pair of edge points in that tetrahedron's labels.
using Arc = std::array<EdgePoint, 2>;

/// Surface meeting the 2-skeleton: disk pieces per tetrahedron and circles
/// in faces. Pieces are kept in canonical form (see canonical_piece) and
/// sorted, so equal patterns compare equal.
struct PreNormalPattern {
    std::vector<int> points;  // intersection count per edge class
    std::vector<Piece> pieces;
    std::vector<FaceCircle> circles;
    int next_circle_id = 0;

    long edge_weight() const;
    friend bool operator==(const PreNormalPattern&, const PreNormalPattern&) = default;
};

/// Rotation and direction of the boundary word giving the smallest sequence.
Piece canonical_piece(Piece p);

/// Face pair representative: the lexicographically smaller (tet, face).
std::array<int, 2> canonical_face(const IdealTriangulation& tri, int tet, int face);

/// Where an edge point of (tet, face) lands in the glued tetrahedron.
EdgePoint point_across(const IdealTriangulation& tri, int tet, int face, const EdgePoint& p);

/// Arcs of the pattern on every face pair, keyed by canonical face
/// (index 4*tet + face, empty for non-canonical sides), in canonical labels.
std::vector<std::vector<Arc>> face_arcs(const IdealTriangulation& tri, const PreNormalPattern& p);

/// The arcs of one side of a face, in that side's labels.
std::vector<Arc> side_arcs(const IdealTriangulation& tri, const std::vector<std::vector<Arc>>& arcs, int tet,
                           int face);

/// Rebuilds the pieces of every tetrahedron as the boundary cycles of the
/// given arcs. Point counts and circles are kept.
PreNormalPattern from_face_arcs(const IdealTriangulation& tri, std::vector<int> points,
                                const std::vector<std::vector<Arc>>& arcs, std::vector<FaceCircle> circles,
                                int next_circle_id);

/// First failed consistency check, or nullopt if the pattern is consistent.
std::optional<std::string> consistency_failure(const IdealTriangulation& tri, const PreNormalPattern& p);
void check_consistency(const IdealTriangulation& tri, const PreNormalPattern& p);

/// Pattern file:
///     piece <tet> <face>.<slot>.<pos> ...
///     circle <tet> <face> <depth>
/// Circles nest inside the nearest earlier circle on the same face one level
/// up. Edge point counts are read off the pieces.
PreNormalPattern parse_pattern(std::string_view text, const IdealTriangulation& tri);
PreNormalPattern load_pattern(const std::string& path, const IdealTriangulation& tri);
std::string format_pattern(const PreNormalPattern& p);

/// The normal pattern of an admissible surface vector, with parallel copies
/// nested. Throws PatternError if the vector does not match across faces.
PreNormalPattern pattern_from_surface(const IdealTriangulation& tri, const SurfaceVector& v);

/// Pushes the arc `arc_index` of face (tet, face) across edge slot `slot` of
/// that face, entering the edge at gap `gap` (0..n, counted from the slot's
/// lower vertex). Creates two adjacent edge points, a bigon in every other
/// wedge of the edge, and rewrites the two pieces holding the arc.
/// Returns nullopt when the arc cannot reach that gap without crossing.
std::optional<PreNormalPattern> finger_move(const IdealTriangulation& tri, const PreNormalPattern& p, int tet,
                                            int face, int arc_index, int slot, int gap);

/// Adds an isolated circle on a face, nested in `parent` if given.
PreNormalPattern add_circle(const IdealTriangulation& tri, PreNormalPattern p, int tet, int face,
                            std::optional<int> parent = std::nullopt);

}  // namespace spun

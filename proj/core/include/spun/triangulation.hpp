#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spun/perm.hpp"

namespace spun {

/// Raised for malformed triangulation text (carries the 1-based line, 0 if global).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Raised when gluing data does not describe a pseudo-manifold
/// (face glued twice, non-involutive gluing, face glued to itself, ...).
class TriangulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FaceGluing {
    int tet = -1;
    int face = -1;
    Perm4 perm;  // carries vertices of the source tetrahedron to vertices of `tet`
};

/// A (tetrahedron, edge slot) pair together with a vertex labelling: vertices[0],
/// vertices[1] are the endpoints, in the direction of the edge class; walking
/// around the edge leaves the tetrahedron through the face opposite vertices[2]
/// and enters the next one through the face opposite its vertices[3].
struct EdgeEmbedding {
    int tet = 0;
    int edge = 0;
    Perm4 vertices;
};

struct EdgeClass {
    int id = 0;
    std::vector<EdgeEmbedding> slots;  // cyclic order around the edge
    bool reversed = false;             // edge is identified with itself in reverse
    int valence() const { return static_cast<int>(slots.size()); }
};

struct Corner {
    int tet = 0;
    int vertex = 0;
    friend auto operator<=>(const Corner&, const Corner&) = default;
};

struct VertexClass {
    int id = 0;
    std::vector<Corner> corners;  // ascending
};

/// Per (tet, edge slot) lookup into the edge classes.
struct SlotInfo {
    int edge_class = -1;
    int index = -1;       // position in EdgeClass::slots
    bool aligned = true;  // slot's lower vertex is the start of the class direction
};

/// Peripheral curves for one cusp, as link-edge weight vectors in the cusp's
/// local link-edge numbering (see CuspLink).
struct PeripheralSpec {
    int cusp = 0;
    std::vector<long> meridian;
    std::vector<long> longitude;
};

/// Tetrahedra with face pairings; the quotient pseudo-manifold is N.
/// Immutable once built; derived skeleta are computed at construction.
class IdealTriangulation {
public:
    /// `gluings[4*t + f]` is the target of face f of tetrahedron t. Missing
    /// reverse gluings are filled in; conflicting ones throw TriangulationError.
    IdealTriangulation(int tet_count, std::vector<std::optional<FaceGluing>> gluings,
                       std::vector<PeripheralSpec> peripheral = {});

    int size() const { return tet_count_; }
    const FaceGluing& glue(int tet, int face) const { return gluings_[static_cast<std::size_t>(4 * tet + face)]; }

    const std::vector<EdgeClass>& edges() const { return edges_; }
    const std::vector<VertexClass>& vertices() const { return vertices_; }
    const SlotInfo& slot(int tet, int edge) const { return slots_[static_cast<std::size_t>(6 * tet + edge)]; }
    int vertex_class_of(int tet, int vertex) const { return corner_class_[static_cast<std::size_t>(4 * tet + vertex)]; }

    /// +1/-1 per tetrahedron if a consistent orientation exists.
    const std::optional<std::vector<int>>& orientation() const { return orientation_; }
    bool orientable() const { return orientation_.has_value(); }

    const std::vector<PeripheralSpec>& peripheral() const { return peripheral_; }
    const PeripheralSpec* peripheral_for(int cusp) const;

    /// Disjoint union of two copies of this triangulation (tetrahedra of the
    /// second copy are shifted by size()). Peripheral data is duplicated.
    IdealTriangulation doubled() const;

    /// Canonical text form, parseable by parse_triangulation.
    std::string to_text() const;

private:
    void build_edges();
    void build_vertices();
    void build_orientation();

    int tet_count_;
    std::vector<FaceGluing> gluings_;
    std::vector<PeripheralSpec> peripheral_;
    std::vector<EdgeClass> edges_;
    std::vector<SlotInfo> slots_;
    std::vector<VertexClass> vertices_;
    std::vector<int> corner_class_;
    std::optional<std::vector<int>> orientation_;
};

/// Parses the structured-text triangulation format:
///
///     # comment
///     tets: <n>
///     glue <t> <f> -> <t'> <f'> [p0 p1 p2 p3]
///     peripheral <cusp> meridian <w...> longitude <w...>
///
/// Each gluing may be given from one side or both; both sides must agree.
IdealTriangulation parse_triangulation(std::string_view text);
IdealTriangulation load_triangulation(const std::string& path);

/// Edge classes in ascending order of their smallest (tet, slot) member.
const std::vector<EdgeClass>& edge_classes(const IdealTriangulation& tri);

enum class ViolationKind {
    LowValence,
    ReversedEdge,
    NonTorusCusp,
    NonOrientable,
};

struct Violation {
    ViolationKind kind;
    int index = -1;  // edge class or cusp, where applicable
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    /// Hypotheses that are recorded but not decided (essential edges).
    std::vector<std::string> assumptions;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const IdealTriangulation& tri);

}  // namespace spun

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spun/cone.hpp"
#include "spun/cusp.hpp"
#include "spun/normalize.hpp"
#include "spun/pattern.hpp"
#include "spun/spin.hpp"
#include "spun/surfaces.hpp"
#include "spun/triangulation.hpp"

using nlohmann::json;
using namespace spun;

namespace {

// Exit codes: 0 ok, 1 domain violation, 2 I/O or parse error.
struct DomainFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Out {
    bool records = false;
    std::ostringstream text;
    void record(const json& j) { text << j.dump() << '\n'; }
};

std::string join(const std::vector<long>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string slope_text(const Slope& s) {
    if (s.p == 0 && s.q == 0) return "none";
    return s.q == 1 ? std::to_string(s.p) : to_string(s);
}

std::string cusp_summary(const std::vector<CuspLink>& links) {
    int torus = 0;
    for (const auto& l : links) torus += l.is_torus() ? 1 : 0;
    const auto n = links.size();
    if (static_cast<std::size_t>(torus) == n) return std::to_string(n) + " torus cusp" + (n == 1 ? "" : "s");
    return std::to_string(n) + " cusp" + (n == 1 ? "" : "s") + ", " + std::to_string(torus) + " torus";
}

int cmd_validate(const std::string& path, Out& out) {
    const auto tri = load_triangulation(path);
    const auto report = validate(tri);
    const auto links = vertex_links(tri);
    std::vector<long> valences;
    for (const auto& e : tri.edges()) valences.push_back(e.valence());
    if (out.records) {
        out.record({{"type", "summary"},
                    {"tets", tri.size()},
                    {"edges", tri.edges().size()},
                    {"valences", valences},
                    {"cusps", links.size()},
                    {"ok", report.ok()}});
        for (const auto& v : report.violations)
            out.record({{"type", "violation"}, {"index", v.index}, {"message", v.message}});
        for (const auto& a : report.assumptions) out.record({{"type", "assumption"}, {"message", a}});
    } else {
        const auto edges = tri.edges().size();
        out.text << tri.size() << (tri.size() == 1 ? " tet, " : " tets, ") << edges << (edges == 1 ? " edge" : " edges")
                 << " (valence " << join(valences, ",")
                 << "), " << cusp_summary(links) << '\n';
        for (const auto& v : report.violations) out.text << "violation: " << v.message << '\n';
        for (const auto& a : report.assumptions) out.text << "assumed: " << a << '\n';
    }
    return report.ok() ? 0 : 1;
}

void require_valid(const IdealTriangulation& tri) {
    const auto report = validate(tri);
    if (!report.ok()) throw DomainFailure(report.violations.front().message);
}

// A basis override is either "synthesized" or a file of peripheral lines
// written as in the triangulation format.
std::vector<PeripheralBasis> bases_for(const IdealTriangulation& tri, const std::vector<CuspLink>& links,
                                       const std::string& spec) {
    std::vector<PeripheralBasis> bases;
    if (spec.empty()) {
        for (const auto& l : links) bases.push_back(peripheral_basis(tri, l));
        return bases;
    }
    if (spec == "synthesized") {
        for (const auto& l : links) bases.push_back(synthesized_basis(l));
        return bases;
    }
    std::ifstream in(spec);
    if (!in) throw std::ios_base::failure("cannot open " + spec);
    std::map<int, std::pair<std::vector<long>, std::vector<long>>> given;
    int lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        int cusp = -1;
        if (word != "peripheral" || !(ls >> cusp)) throw ParseError("expected 'peripheral <cusp> ...'", lineno);
        std::vector<long>* into = nullptr;
        auto& entry = given[cusp];
        while (ls >> word) {
            if (word == "meridian") into = &entry.first;
            else if (word == "longitude") into = &entry.second;
            else if (into) into->push_back(std::stol(word));
            else throw ParseError("weights before 'meridian' or 'longitude'", lineno);
        }
    }
    for (const auto& l : links) {
        auto it = given.find(l.vertex());
        if (it == given.end()) bases.push_back(peripheral_basis(tri, l));
        else bases.push_back(basis_from_weights(l, it->second.first, it->second.second));
    }
    return bases;
}

int cmd_surfaces(const std::string& path, bool oracle, const std::string& basis, Out& out) {
    const auto tri = load_triangulation(path);
    require_valid(tri);
    const auto links = vertex_links(tri);
    const auto set = admissible_vertex_solutions(tri, bases_for(tri, links, basis));

    for (std::size_t c = 0; c < set.bases.size(); ++c) {
        const char* kind = set.bases[c].synthesized ? "synthesized" : "given";
        if (out.records) out.record({{"type", "basis"}, {"cusp", links[c].vertex()}, {"kind", kind}});
        else out.text << "cusp " << links[c].vertex() << " basis: " << kind << '\n';
    }
    if (!out.records)
        out.text << set.rays.size() << " extremal rays, " << set.admissible.size() << " admissible\n";
    for (const auto& s : set.admissible) {
        if (out.records) {
            json b = json::array();
            for (const auto& cb : s.boundary)
                b.push_back({{"cusp", cb.cusp},
                             {"class", {cb.lattice.p, cb.lattice.q}},
                             {"slope", slope_text(cb.slope)},
                             {"multiplicity", cb.multiplicity}});
            out.record({{"type", "solution"},
                        {"ray", s.id},
                        {"quads", s.quads.q},
                        {"euler", format_rational(s.euler)},
                        {"boundary", b}});
        } else {
            out.text << "solution " << s.id << ": quads " << join(s.quads.q) << ", euler "
                     << format_rational(s.euler) << '\n';
            for (const auto& cb : s.boundary)
                out.text << "  cusp " << cb.cusp << ": class (" << cb.lattice.p << ", " << cb.lattice.q
                         << "), slope " << slope_text(cb.slope) << ", multiplicity " << cb.multiplicity << '\n';
        }
    }
    if (oracle) {
        std::string verdict;
        const long bound = minor_bound(set.system);
        if (set.system.columns > 8 || bound > 12) {
            verdict = "unavailable (system too large for brute force)";
        } else {
            const auto brute = brute_force_rays(set.system, static_cast<int>(std::max(bound, 1L)));
            verdict = brute == set.rays ? "yes" : "no";
        }
        if (out.records) out.record({{"type", "oracle"}, {"agreement", verdict}});
        else out.text << "oracle agreement: " << verdict << '\n';
        if (verdict == "no") return 1;
    }
    return 0;
}

int cmd_normalize(const std::string& tri_path, const std::string& pattern_path, int max_steps, Out& out) {
    const auto tri = load_triangulation(tri_path);
    const auto pattern = load_pattern(pattern_path, tri);
    const auto res = normalize(tri, pattern, max_steps);

    std::vector<long> trace{pattern.edge_weight()};
    for (const auto& m : res.ledger.moves)
        if (m.kind == Move::Kind::CancelPair) trace.push_back(m.weight_after);
    if (out.records) {
        out.record({{"type", "assumption"}, {"message", kMoveAssumption}});
        for (const auto& m : res.ledger.moves) {
            json j{{"type", "move"}, {"weight_before", m.weight_before}, {"weight_after", m.weight_after}};
            if (m.kind == Move::Kind::CompressCircle) {
                j["move"] = "compress-circle";
                j["face"] = {m.tet, m.face};
                j["circle"] = m.circle;
            } else {
                j["move"] = "cancel-pair";
                j["edge"] = m.edge_class;
                j["positions"] = {m.x, m.y};
            }
            out.record(j);
        }
        out.record({{"type", "weights"}, {"trace", trace}});
        if (res.ok) {
            for (int t = 0; t < res.vector->tets(); ++t)
                out.record({{"type", "normal"},
                            {"tet", t},
                            {"tri", res.vector->tri[static_cast<std::size_t>(t)]},
                            {"quad", res.vector->quad[static_cast<std::size_t>(t)]}});
        } else {
            out.record({{"type", "failure"}, {"message", res.failure}});
        }
    } else {
        out.text << res.ledger.str();
        out.text << "weight trace: " << join(trace) << '\n';
        if (res.ok) out.text << "normal coordinates:\n" << format_surface(*res.vector);
        else out.text << "failed: " << res.failure << '\n';
    }
    return res.ok ? 0 : 1;
}

LatticeClass parse_slope(const std::string& s) {
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const long p = std::stol(s, &used);
            if (used == s.size()) return {p, 1};
        } else {
            const long p = std::stol(s.substr(0, slash), &used);
            std::size_t used_q = 0;
            const std::string qs = s.substr(slash + 1);
            const long q = std::stol(qs, &used_q);
            if (used == slash && used_q == qs.size()) return {p, q};
        }
    } catch (const std::logic_error&) {
    }
    throw CLI::ValidationError("--slope", "expected p/q, got '" + s + "'");
}

int cmd_spin(const std::string& path, int cusp, const std::string& slope_text_in, int levels, Out& out) {
    const auto tri = load_triangulation(path);
    const auto cls = parse_slope(slope_text_in);
    const auto links = vertex_links(tri);
    const CuspLink* link = nullptr;
    for (const auto& l : links)
        if (l.vertex() == cusp) link = &l;
    if (!link) throw DomainFailure("no cusp " + std::to_string(cusp));
    if (!link->is_torus()) throw DomainFailure("cusp " + std::to_string(cusp) + " is not a torus cusp");
    const auto model = spun_end_model(*link, peripheral_basis(tri, *link));
    const auto weights = straight_curve(model.torus, cls);
    const auto counts = spin_level_counts(model, cls, levels);
    if (out.records) {
        out.record({{"type", "curve"},
                    {"cusp", cusp},
                    {"class", {cls.p, cls.q}},
                    {"spin", model.spin_direction},
                    {"weights", weights}});
        for (int j = 0; j < levels; ++j)
            out.record({{"type", "level"}, {"level", j + 1}, {"triangles", counts[static_cast<std::size_t>(j)]}});
    } else {
        out.text << "cusp " << cusp << ": class (" << cls.p << ", " << cls.q << "), spin " << model.spin_direction
                 << '\n';
        out.text << "straight curve weights: " << join(weights) << '\n';
        for (int j = 0; j < levels; ++j)
            out.text << "level " << j + 1 << ": " << counts[static_cast<std::size_t>(j)] << " triangles\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spun-normal surfaces in ideal triangulations"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "table";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "records"}));

    std::string tri_path, pattern_path, basis, slope;
    bool oracle = false;
    int max_steps = 1000, cusp = 0, levels = 1;

    auto* validate_cmd = app.add_subcommand("validate", "Check a triangulation");
    validate_cmd->add_option("triangulation", tri_path)->required();

    auto* surfaces_cmd = app.add_subcommand("surfaces", "Admissible extremal spun-normal solutions");
    surfaces_cmd->add_option("triangulation", tri_path)->required();
    surfaces_cmd->add_flag("--oracle", oracle, "Cross-check the rays by brute force");
    surfaces_cmd->add_option("--basis", basis, "'synthesized' or a file of peripheral lines");

    auto* normalize_cmd = app.add_subcommand("normalize", "Normalize a pre-normal pattern");
    normalize_cmd->add_option("triangulation", tri_path)->required();
    normalize_cmd->add_option("pattern", pattern_path)->required();
    normalize_cmd->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber);

    auto* spin_cmd = app.add_subcommand("spin", "Straight boundary curve and spun level counts");
    spin_cmd->add_option("triangulation", tri_path)->required();
    spin_cmd->add_option("--cusp", cusp);
    spin_cmd->add_option("--slope", slope)->required();
    spin_cmd->add_option("--levels", levels)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Out out;
    out.records = format == "records";
    int code = 0;
    try {
        if (*validate_cmd) code = cmd_validate(tri_path, out);
        else if (*surfaces_cmd) code = cmd_surfaces(tri_path, oracle, basis, out);
        else if (*normalize_cmd) code = cmd_normalize(tri_path, pattern_path, max_steps, out);
        else code = cmd_spin(tri_path, cusp, slope, levels, out);
    } catch (const std::ios_base::failure& e) {
        std::string what = e.what();
        what = what.substr(0, what.find(": iostream error"));
        std::cerr << "error: " << what << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error, line " << e.line() << ": " << e.what() << '\n';
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cout << out.text.str();
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    std::cout << out.text.str();
    return code;
}

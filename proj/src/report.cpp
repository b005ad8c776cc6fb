#include "mutpot/report.hpp"

namespace mutpot {

using nlohmann::json;

json to_json(const LatticeVector& v) { return std::vector<Coord>(v.coords().begin(), v.coords().end()); }

json to_json(const LaurentnessVerdict& v) {
    json j{{"laurent", v.laurent}};
    if (v.failing_level) j["failing_level"] = *v.failing_level;
    if (v.remainder) j["remainder"] = v.remainder->str();
    if (!v.laurent) j["witness"] = v.witness();
    return j;
}

json to_json(const MembershipReport& r) {
    json j{{"verdict", r.verdict}, {"potential_laurent", r.potential_laurent}};
    if (r.potential_witness) j["potential_witness"] = r.potential_witness->str();
    json dirs = json::array();
    for (const auto& d : r.directions) {
        json e = to_json(d.verdict);
        e["vector"] = to_json(d.vector);
        e["multiplicity"] = d.multiplicity;
        dirs.push_back(std::move(e));
    }
    j["directions"] = std::move(dirs);
    return j;
}

json to_json(const GeneratorPresentation& g) {
    json gens = json::array();
    for (const auto& p : g.generators) gens.push_back(p.str());
    json j{{"shape", to_string(g.shape)}, {"generators", std::move(gens)}};
    if (g.coordinate_change) j["coordinate_change"] = g.coordinate_change->to_rows();
    return j;
}

json to_json(const OrbitGraph& g) {
    json nodes = json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        json n{{"id", i}, {"collection", g.nodes[i].collection.str()}, {"depth", g.nodes[i].depth}};
        if (g.nodes[i].potential) n["potential"] = g.nodes[i].potential->str();
        nodes.push_back(std::move(n));
    }
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"direction", to_json(e.direction)}, {"to", e.to}});
    return {{"form", g.form.str()},
            {"nodes", std::move(nodes)},
            {"edges", std::move(edges)},
            {"depth_reached", g.depth_reached},
            {"truncated", g.truncated}};
}

json to_json(const SuiteResult& r) {
    return {{"suite", r.name}, {"passed", r.passed}, {"total", r.total}, {"ok", r.ok()}, {"failures", r.failures}};
}

std::string jsonl(const std::string& record, json body) {
    json out{{"record", record}};
    out.update(body);
    return out.dump();
}

}  // namespace mutpot

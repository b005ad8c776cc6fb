// mutpot: command-line front end for seeds, mutations and upper bounds.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mutpot/expression.hpp"
#include "mutpot/orbit.hpp"
#include "mutpot/report.hpp"
#include "mutpot/seed_file.hpp"
#include "mutpot/upper_bound.hpp"
#include "mutpot/verify.hpp"

using namespace mutpot;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct Options {
    std::string format = "text";
    std::string seed;
    std::string dir;
    int times = 1;
    std::string expr;
    std::size_t depth = 0;
    std::string dot;
    bool with_potential = false;
    std::string suite;
    std::size_t cases = 0;
    std::uint64_t rng_seed = 1;
};

bool jsonl_mode(const Options& o) { return o.format == "jsonl"; }

LatticeVector parse_direction(const std::string& text, std::size_t rank) {
    std::vector<Coord> coords;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        Coord c = 0;
        try {
            c = std::stoll(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
        if (used == 0 || used != part.size()) throw std::invalid_argument("malformed direction '" + text + "'");
        coords.push_back(c);
    }
    if (coords.size() != rank) {
        throw std::invalid_argument("direction '" + text + "' needs " + std::to_string(rank) + " coordinates");
    }
    return LatticeVector(coords);
}

void print_verdict_lines(const MembershipReport& r) {
    std::cout << "verdict: " << (r.verdict ? "true" : "false") << "\n";
    std::cout << "potential laurent: " << (r.potential_laurent ? "true" : "false");
    if (r.potential_witness) std::cout << " (surviving denominator " << r.potential_witness->str() << ")";
    std::cout << "\n";
    for (const auto& d : r.directions) {
        std::cout << "direction " << d.vector.str() << " x " << d.multiplicity << ": ";
        if (d.verdict.laurent) std::cout << "laurent\n";
        else std::cout << "not laurent (" << d.verdict.witness() << ")\n";
    }
}

int cmd_mutate(const Options& o) {
    SeedDocument doc = load_seed(o.seed);
    const LatticeVector d = parse_direction(o.dir, doc.rank);
    if (o.times < 1) throw std::invalid_argument("--times must be positive");
    for (int i = 0; i < o.times; ++i) doc.collection = collection_mutate(doc.collection, d, doc.form);
    if (doc.potential) doc.potential = potential_mutate(*doc.potential, d, doc.form, o.times);
    const std::string text = render_seed(doc);
    if (jsonl_mode(o)) {
        nlohmann::json body{{"direction", to_json(d)}, {"times", o.times}, {"collection", doc.collection.str()},
                            {"document", text}};
        if (doc.potential) body["potential"] = doc.potential->str();
        std::cout << jsonl("mutation", body) << "\n";
    } else {
        std::cout << text;
    }
    return kOk;
}

int cmd_check_v(const Options& o) {
    const SeedDocument doc = load_seed(o.seed);
    if (!doc.potential) throw std::invalid_argument("seed '" + o.seed + "' has no potential");
    const MembershipReport r = check_property_V(*doc.potential, doc.collection, doc.form);
    if (jsonl_mode(o)) std::cout << jsonl("property_v", to_json(r)) << "\n";
    else print_verdict_lines(r);
    return kOk;
}

int cmd_ub_member(const Options& o) {
    const SeedDocument doc = load_seed(o.seed);
    const BinomialRationalFn w = parse_function(o.expr, doc.rank);
    const MembershipReport r = ub_member(w, doc.cseed());
    if (jsonl_mode(o)) {
        nlohmann::json body = to_json(r);
        body["expression"] = w.str();
        std::cout << jsonl("ub_member", body) << "\n";
    } else {
        std::cout << "expression: " << w.str() << "\n";
        print_verdict_lines(r);
    }
    return kOk;
}

int cmd_generators(const Options& o) {
    const SeedDocument doc = load_seed(o.seed);
    const GeneratorPresentation g = generators_for(doc.cseed());
    if (jsonl_mode(o)) {
        std::cout << jsonl("generators", to_json(g)) << "\n";
        return kOk;
    }
    std::cout << "shape: " << to_string(g.shape) << "\n";
    if (g.coordinate_change) std::cout << "exponent map from standard coordinates: " << g.coordinate_change->str() << "\n";
    for (const auto& p : g.generators) std::cout << "  " << p.str() << "\n";
    return kOk;
}

int cmd_orbit(const Options& o) {
    const SeedDocument doc = load_seed(o.seed);
    if (o.with_potential && !doc.potential) throw std::invalid_argument("--with-potential needs a potential");
    const OrbitGraph g = explore_orbit(doc.vseed(), o.depth, o.with_potential);
    if (!o.dot.empty()) {
        if (o.dot == "-") {
            std::cout << to_dot(g);
        } else {
            std::ofstream out(o.dot, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot write '" + o.dot + "'");
            out << to_dot(g);
        }
    }
    if (o.dot == "-") return kOk;
    if (jsonl_mode(o)) {
        std::cout << jsonl("orbit", to_json(g)) << "\n";
        return kOk;
    }
    std::cout << "nodes: " << g.nodes.size() << "\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        std::cout << "  n" << i << " depth " << g.nodes[i].depth << " " << g.nodes[i].collection.str();
        if (g.nodes[i].potential) std::cout << " W=" << g.nodes[i].potential->str();
        std::cout << "\n";
    }
    std::cout << "edges: " << g.edges.size() << "\n";
    for (const auto& e : g.edges) std::cout << "  n" << e.from << " -" << e.direction.str() << "-> n" << e.to << "\n";
    std::cout << "depth reached: " << g.depth_reached << "\n";
    std::cout << "truncated: " << (g.truncated ? "true" : "false") << "\n";
    return kOk;
}

int cmd_verify(const Options& o) {
    const auto results = run_suites(o.suite, SuiteOptions{o.cases, o.rng_seed});
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.ok();
        if (jsonl_mode(o)) {
            std::cout << jsonl("suite", to_json(r)) << "\n";
            continue;
        }
        std::cout << r.name << ": " << r.passed << "/" << r.total << " passed\n";
        for (const auto& f : r.failures) std::cout << "  FAILED " << f << "\n";
    }
    return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mutations of potentials, property (V) and upper bounds"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "jsonl"}));

    auto* mutate = app.add_subcommand("mutate", "Mutate a seed along a direction");
    mutate->add_option("--seed", o.seed, "Seed file")->required();
    mutate->add_option("--dir", o.dir, "Direction \"a,b\"")->required();
    mutate->add_option("--times", o.times, "Repetitions");

    auto* check = app.add_subcommand("check-v", "Check property (V) for the seed potential");
    check->add_option("--seed", o.seed, "Seed file")->required();

    auto* member = app.add_subcommand("ub-member", "Upper-bound membership of an expression");
    member->add_option("--seed", o.seed, "Seed file")->required();
    member->add_option("--expr", o.expr, "Expression")->required();

    auto* gens = app.add_subcommand("generators", "Generators of the upper bound");
    gens->add_option("--seed", o.seed, "Seed file")->required();

    auto* orbit = app.add_subcommand("orbit", "Breadth-first orbit of collection mutations");
    orbit->add_option("--seed", o.seed, "Seed file")->required();
    orbit->add_option("--depth", o.depth, "Depth bound")->required();
    orbit->add_option("--dot", o.dot, "Write DOT to this file ('-' for stdout)");
    orbit->add_flag("--with-potential", o.with_potential, "Track potentials and deduplicate by them too");

    auto* verify = app.add_subcommand("verify", "Run property suites");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("--suite", o.suite, "Suite")->required()->check(CLI::IsMember(suites));
    verify->add_option("--cases", o.cases, "Cases per suite (0: default)");
    verify->add_option("--rng-seed", o.rng_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*mutate) return cmd_mutate(o);
        if (*check) return cmd_check_v(o);
        if (*member) return cmd_ub_member(o);
        if (*gens) return cmd_generators(o);
        if (*orbit) return cmd_orbit(o);
        if (*verify) return cmd_verify(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

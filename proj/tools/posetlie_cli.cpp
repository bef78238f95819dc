// posetlie: homology of poset Lie algebras from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "posetlie/block_engine.hpp"
#include "posetlie/cup.hpp"
#include "posetlie/families.hpp"
#include "posetlie/homology.hpp"
#include "posetlie/subgraphs.hpp"
#include "posetlie/verify.hpp"

using namespace posetlie;

namespace {

struct RunConfig {
    std::string family;
    std::string poset_path;
    std::string mode = "reflexive";
    std::string coeff = "Z";
    int max_degree = -1;
    int jobs = 0;
    std::string format = "text";
    std::string out;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_poset = true) {
    if (with_poset) {
        auto* fam = cmd->add_option("--family", cfg.family, "built-in family NAME:PARAMS, e.g. complete-bipartite:2,2");
        auto* file = cmd->add_option("--poset", cfg.poset_path, "poset file (text, or JSON when the name ends in .json)");
        fam->excludes(file);
    }
    cmd->add_option("--mode", cfg.mode, "reflexive (gl^<=) or strict (gl^<)")->check(CLI::IsMember({"reflexive", "strict"}));
    cmd->add_option("--coeff", cfg.coeff, "Z, Q or Zp:P");
    cmd->add_option("--max-degree", cfg.max_degree, "highest homology degree to report");
    cmd->add_option("--jobs", cfg.jobs, "worker threads for the block engine (0 = OpenMP default)");
    cmd->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", cfg.out, "write output to this path instead of stdout");
}

Poset load_poset(const RunConfig& cfg) {
    if (!cfg.family.empty()) return family_poset(cfg.family);
    if (cfg.poset_path.empty()) throw UsageError("one of --family or --poset is required");
    std::ifstream in(cfg.poset_path);
    if (!in) throw UsageError("cannot open " + cfg.poset_path);
    if (cfg.poset_path.size() >= 5 && cfg.poset_path.ends_with(".json")) return parse_poset_json(nlohmann::json::parse(in));
    return parse_poset_text(in);
}

std::pair<std::string, std::vector<int>> split_family(const std::string& spec) {
    const auto colon = spec.find(':');
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) args.push_back(std::stoi(tok));
    }
    return {spec.substr(0, colon), args};
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_homology(const RunConfig& cfg, bool prune, bool reference, bool cohomology) {
    const Poset p = load_poset(cfg);
    const PosetLieAlgebra g(p, parse_mode(cfg.mode));
    const Coefficients coeff = Coefficients::parse(cfg.coeff);
    HomologyTable t;
    if (reference) {
        t = reference_homology(g, coeff, cfg.max_degree);
    } else {
        EngineOptions o;
        o.coeff = coeff;
        o.jobs = cfg.jobs;
        o.prune = prune && g.mode() == Mode::Reflexive;
        o.max_degree = cfg.max_degree;
        t = block_homology(g, o);
    }
    if (cohomology) {
        if (coeff.kind != Coefficients::Kind::Z) throw UsageError("--cohomology needs --coeff Z");
        t = cohomology_from_homology(t);
    }
    if (cfg.format == "json") {
        emit(cfg, dump({{"schema", 1},
                        {"poset", poset_to_json(p)},
                        {"mode", to_string(g.mode())},
                        {"coefficients", coeff.to_string()},
                        {cohomology ? "cohomology" : "homology", t.to_json()}}));
    } else if (cfg.format == "csv") {
        emit(cfg, t.to_csv());
    } else {
        std::string text = t.to_text();
        if (cohomology)
            for (std::size_t pos = 0; (pos = text.find("H_", pos)) != std::string::npos; pos += 2) text.replace(pos, 2, "H^");
        emit(cfg, text);
    }
    return 0;
}

int cmd_hp(const RunConfig& cfg, const std::string& source, bool normalized) {
    const Coefficients coeff = Coefficients::parse(cfg.coeff);
    if (coeff.kind == Coefficients::Kind::Z) throw UsageError("hp needs a field: --coeff Q or Zp:P");
    const std::uint32_t p = coeff.kind == Coefficients::Kind::Q ? 0 : coeff.p;

    std::optional<Polynomial> formula, engine;
    if (source != "engine") {
        if (cfg.family.empty()) throw UsageError("closed forms need --family");
        auto [name, args] = split_family(cfg.family);
        formula = closed_form(name, args, p);
    }
    if (source != "formula") {
        const PosetLieAlgebra g(load_poset(cfg), parse_mode(cfg.mode));
        EngineOptions o;
        o.coeff = coeff;
        o.jobs = cfg.jobs;
        std::vector<BigInt> c;
        for (auto d : block_homology(g, o).dims()) c.emplace_back(long(d));
        engine = Polynomial(std::move(c));
    }

    const bool agree = !(formula && engine) || *formula == *engine;
    const Polynomial& shown = formula ? *formula : *engine;
    if (cfg.format == "csv") {
        if (formula && engine) {
            std::string out = "degree,formula,engine,diff\n";
            const int top = std::max(formula->degree(), engine->degree());
            for (int k = 0; k <= top; ++k) {
                BigInt diff = (*formula)[k] - (*engine)[k];
                out += std::to_string(k) + "," + (*formula)[k].get_str() + "," + (*engine)[k].get_str() + "," + diff.get_str() + "\n";
            }
            emit(cfg, out);
        } else {
            emit(cfg, normalized ? normalized_csv(shown) : series_csv(shown));
        }
    } else if (cfg.format == "json") {
        auto coeffs = [](const Polynomial& f) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& c : f.coefficients()) a.push_back(c.get_str());
            return a;
        };
        nlohmann::json j{{"schema", 1}, {"family", cfg.family}, {"coefficients", coeff.to_string()}};
        if (formula) j["formula"] = coeffs(*formula);
        if (engine) j["engine"] = coeffs(*engine);
        if (formula && engine) j["agree"] = agree;
        emit(cfg, dump(j));
    } else {
        std::string out;
        if (formula) out += "formula: " + formula->to_string() + "\n";
        if (engine) out += "engine:  " + engine->to_string() + "\n";
        if (formula && engine) out += agree ? "agree\n" : "DIFFER\n";
        emit(cfg, out);
    }
    return agree ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::vector<std::string> suites, const SuiteOptions& opts) {
    if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
    bool ok = true;
    nlohmann::json j = nlohmann::json::array();
    std::string text;
    for (const auto& s : suites) {
        SuiteReport r = run_suite(s, opts);
        ok = ok && r.passed;
        text += r.to_text();
        j.push_back({{"suite", r.name}, {"passed", r.passed}, {"lines", r.lines}});
    }
    emit(cfg, cfg.format == "json" ? dump(j) : text);
    return ok ? 0 : 1;
}

int cmd_subgraphs(const RunConfig& cfg, int q, const std::string& matrices) {
    Polynomial counts;
    nlohmann::json j{{"schema", 1}, {"q", q}};
    if (!matrices.empty()) {
        auto [m, n] = std::pair<int, int>{};
        if (std::sscanf(matrices.c_str(), "%d,%d", &m, &n) != 2) throw UsageError("--even-matrices expects M,N");
        counts = enumerate_even_matrices(m, n, q);
        j["matrix"] = {m, n};
    } else {
        const Poset p = load_poset(cfg);
        counts = enumerate_p_plus_regular(p, q);
        j["poset"] = poset_to_json(p);
        if (q == 2) j["cycle_space_size"] = cycle_space_size(p).get_str();
    }
    nlohmann::json by_size = nlohmann::json::array();
    for (const auto& c : counts.coefficients()) by_size.push_back(c.get_str());
    j["count_by_size"] = by_size;
    if (cfg.format == "json")
        emit(cfg, dump(j));
    else if (cfg.format == "csv") {
        std::string out = "size,count\n";
        for (int k = 0; k <= counts.degree(); ++k) out += std::to_string(k) + "," + counts[k].get_str() + "\n";
        emit(cfg, out);
    } else
        emit(cfg, "subsets by size: " + counts.to_string() + "\n");
    return 0;
}

int cmd_cup(const RunConfig& cfg, bool probe) {
    const Coefficients coeff = Coefficients::parse(cfg.coeff == "Z" ? "Zp:2" : cfg.coeff);
    if (coeff.kind != Coefficients::Kind::Zp) throw UsageError("cup products are computed over Z_p");
    auto [name, args] = split_family(cfg.family);
    const Presentation pr = name == "umbrella" && args.size() == 1  ? umbrella_presentation(args[0], coeff.p)
                            : name == "diamond" && args.size() == 1 ? diamond_presentation(args[0], coeff.p)
                                                                    : height1_presentation(load_poset(cfg), coeff.p);

    CupModel model(pr.basis);
    const ProductTable table = wedge_basis_cup(model);
    CupReport axioms = check_table(model, table), rel = verify_presentation(model, pr.relations);
    const bool ok = axioms.ok && rel.ok;
    std::optional<GeneratorProbe> gp;
    if (probe) gp = minimal_generator_probe(model);

    if (cfg.format == "json") {
        nlohmann::json j = table.to_json(model);
        nlohmann::json rels = nlohmann::json::array();
        for (const auto& r : pr.relations) rels.push_back(r.to_string());
        j["relations"] = rels;
        j["checks"] = axioms.lines;
        for (const auto& l : rel.lines) j["checks"].push_back(l);
        j["passed"] = ok;
        if (gp) j["generator_probe"] = {{"upper_bound", gp->size}, {"chosen", gp->chosen}, {"note", "greedy bound, not a proof of minimality"}};
        emit(cfg, dump(j));
    } else {
        std::string out = "basis classes: " + std::to_string(model.basis().basis.size()) + "\n";
        for (const auto& l : axioms.lines) out += l + "\n";
        for (const auto& l : rel.lines) out += l + "\n";
        if (gp) out += "greedy generating set (upper bound, not minimality proof): " + std::to_string(gp->size) + "\n";
        emit(cfg, out);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homology of Lie algebras of poset matrices"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* hom = app.add_subcommand("homology", "homology table of gl^<= or gl^< of a poset");
    add_common(hom, cfg);
    bool prune = false, reference = false, cohomology = false;
    hom->add_flag("--prune", prune, "skip reflexive weight blocks that are acyclic for the coefficients");
    hom->add_flag("--reference", reference, "serial full-complex computation instead of the block engine");
    hom->add_flag("--cohomology", cohomology, "report integral cohomology (torsion moved up one degree)");

    auto* hp = app.add_subcommand("hp", "Hilbert-Poincare series: closed form and/or engine");
    add_common(hp, cfg);
    std::string source = "both";
    bool normalized = false;
    hp->add_option("--source", source, "formula, engine or both")->check(CLI::IsMember({"formula", "engine", "both"}));
    hp->add_flag("--normalized", normalized, "CSV with coefficients divided by the largest one");

    auto* ver = app.add_subcommand("verify", "run invariant suites");
    add_common(ver, cfg, false);
    std::vector<std::string> suites;
    SuiteOptions sopts;
    ver->add_option("--suite", suites, "suite name (repeatable) or all");
    ver->add_option("--max-n", sopts.max_n, "poset size bound (0: suite default)");
    ver->add_option("--max", sopts.max, "parameter bound for stanley-konvalinka");
    ver->add_option("--trials", sopts.trials, "random trials for the Morse suite");
    ver->add_option("--seed", sopts.seed, "random seed");

    auto* sub = app.add_subcommand("subgraphs", "count q+-regular edge subsets of a height-1 poset");
    add_common(sub, cfg);
    int q = 2;
    std::string matrices;
    sub->add_option("--q", q, "degree modulus");
    sub->add_option("--even-matrices", matrices, "count M x N 0/1 matrices with row and column sums in qZ instead");

    auto* cup = app.add_subcommand("cup", "cup-product table and presentation checks over Z_p");
    add_common(cup, cfg);
    bool probe = false;
    cup->add_flag("--probe", probe, "greedy generating-set experiment");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    sopts.jobs = cfg.jobs;
    try {
        if (*hom) return cmd_homology(cfg, prune, reference, cohomology);
        if (*hp) return cmd_hp(cfg, source, normalized);
        if (*ver) return cmd_verify(cfg, suites, sopts);
        if (*sub) return cmd_subgraphs(cfg, q, matrices);
        if (*cup) return cmd_cup(cfg, probe);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

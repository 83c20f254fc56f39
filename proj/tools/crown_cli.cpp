#include "crown/gen.hpp"
#include "crown/io.hpp"
#include "crown/render.hpp"
#include "crown/solve.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace crown;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io-error", "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error("io-error", "cannot write " + out);
    f << text;
}

/// Written to a temporary first so concurrent bench workers never expose
/// half-written files.
void emitAtomic(const fs::path& out, const std::string& text) {
    fs::path tmp = out;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw Error("io-error", "cannot write " + tmp.string());
        f << text;
    }
    fs::rename(tmp, out);
}

SolveReport dispatch(const std::string& algo, Instance ins, const SolverConfig& cfg) {
    ins.model = cfg.model;
    if (algo == "auto") return solveAuto(ins, cfg);
    if (algo == "star") return solveStar(ins);
    if (algo == "tree") return solveTreeWeighted(ins);
    if (algo == "outerplanar") return solveOuterplanar(ins);
    if (algo == "planar") return solvePlanarWeighted(ins);
    if (algo == "bipartite") return solveBipartite(ins);
    if (algo == "general-rand") return solveGeneralRandomized(ins, cfg);
    if (algo == "general-det") return solveGeneralDeterministic(ins);
    if (algo == "unweighted-tree") return solveTreeUnweighted(ins);
    if (algo == "unweighted-general") return solveGeneralUnweighted(ins);
    if (algo == "ptas") return solvePlanarPtas(ins, cfg);
    if (algo == "exact") return solveExact(ins, cfg.exactBudget);
    throw Error("unsupported-class", "unknown algorithm " + algo);
}

const std::vector<std::string> kAlgos = {"auto",         "star",      "tree",
                                         "outerplanar",  "planar",    "bipartite",
                                         "general-rand", "general-det", "unweighted-tree",
                                         "unweighted-general", "ptas", "exact"};

std::vector<std::array<int, 3>> parseHyperedges(const std::string& text) {
    std::vector<std::array<int, 3>> out;
    std::stringstream edges(text);
    std::string edge;
    while (std::getline(edges, edge, ';')) {
        if (edge.empty()) continue;
        std::array<int, 3> e{};
        char comma = 0;
        std::stringstream part(edge);
        if (!(part >> e[0] >> comma >> e[1] >> comma >> e[2]))
            throw Error("invalid-spec", "hyperedge must be x,y,z: " + edge);
        out.push_back(e);
    }
    return out;
}

int benchThreads() {
    if (const char* env = std::getenv("CROWN_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

struct BenchRow {
    std::string line;
};

int runBench(const std::string& dir, const std::string& outDir, const SolverConfig& cfg,
             bool seedGiven) {
    if (!seedGiven)
        std::cerr << "warning: randomized trials use the default seed 0; pass --seed to vary\n";
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (!outDir.empty()) fs::create_directories(outDir);

    const std::vector<std::string> algos = {"auto", "general-det", "general-rand"};
    std::vector<BenchRow> rows(files.size());
    std::atomic<size_t> cursor{0};
    std::atomic<bool> failed{false};
    auto worker = [&]() {
        for (size_t i = cursor.fetch_add(1); i < files.size(); i = cursor.fetch_add(1)) {
            try {
                const Instance ins = readInstance(slurp(files[i].string()));
                std::ostringstream row;
                row << files[i].filename().string() << "," << ins.vertices.size() << ","
                    << ins.edges.size();
                Rat exactProfit;
                bool haveExact = ins.vertices.size() <= 3;
                if (haveExact) exactProfit = dispatch("exact", ins, cfg).profit;
                row << "," << (haveExact ? formatRat(exactProfit) : std::string());
                for (const auto& algo : algos) {
                    const SolveReport rep = dispatch(algo, ins, cfg);
                    row << "," << formatRat(rep.profit) << ","
                        << (haveExact && exactProfit != Rat(0)
                                ? formatRat(rep.profit / exactProfit)
                                : std::string())
                        << "," << formatRat(rep.certifiedRatio.bound());
                    if (!outDir.empty()) {
                        const std::string stem = files[i].stem().string() + "." + algo;
                        emitAtomic(fs::path(outDir) / (stem + ".report.json"), writeReport(rep));
                        emitAtomic(fs::path(outDir) / (stem + ".svg"), renderSvg(ins, rep));
                    }
                }
                rows[i].line = row.str();
            } catch (const std::exception& e) {
                std::cerr << files[i].string() << ": " << e.what() << "\n";
                failed = true;
            }
        }
    };
    const int nThreads = std::min(benchThreads(), std::max(static_cast<int>(files.size()), 1));
    std::vector<std::thread> pool;
    for (int t = 0; t < nThreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed) return kExitValidation;

    std::ostringstream table;
    table << "instance,n,m,exact";
    for (const auto& algo : algos)
        table << "," << algo << "_profit," << algo << "_ratio," << algo << "_cert";
    table << "\n";
    for (const auto& row : rows) table << row.line << "\n";
    std::cout << table.str();
    if (!outDir.empty()) emitAtomic(fs::path(outDir) / "table.csv", table.str());
    return kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"crown: contact representations of weighted graphs with boxes"};
    app.require_subcommand(1);

    SolverConfig cfg;
    std::string instancePath, reportPath, outPath, algo = "auto", modelName, epsText;

    auto addSolverFlags = [&](CLI::App* cmd) {
        cmd->add_option("--algo", algo, "solver to run")
            ->check(CLI::IsMember(kAlgos))
            ->capture_default_str();
        cmd->add_option("--model", modelName, "contact model: proper|point")
            ->check(CLI::IsMember({"proper", "point"}));
        cmd->add_option("--eps", epsText, "accuracy knob for --algo ptas (rational)");
        cmd->add_option("--seed", cfg.seed, "seed for randomized solvers")->capture_default_str();
        cmd->add_option("--trials", cfg.trials, "trials for --algo general-rand")
            ->capture_default_str();
        cmd->add_option("--exact-budget", cfg.exactBudget, "node budget for --algo exact")
            ->capture_default_str();
    };

    auto* solve = app.add_subcommand("solve", "solve an instance and write a report");
    solve->add_option("instance", instancePath, "instance JSON file, or - for stdin")->required();
    addSolverFlags(solve);
    solve->add_option("--out", outPath, "report destination (default stdout)");

    auto* eval = app.add_subcommand("eval", "re-validate a report against its instance");
    eval->add_option("--instance", instancePath, "instance JSON file")->required();
    eval->add_option("--report", reportPath, "report JSON file")->required();

    auto* render = app.add_subcommand("render", "draw a report as SVG");
    render->add_option("--instance", instancePath, "instance JSON file")->required();
    render->add_option("--report", reportPath, "report JSON file")->required();
    render->add_option("--out", outPath, "SVG destination (default stdout)");

    std::string genClass;
    int genN = 8;
    GenOptions genOpt;
    uint64_t genSeed = 0;
    int gadgetK = 0;
    std::string gadgetEdges, gadgetMatched, wordsPath, pairsPath;
    long long textScale = 1;
    bool unweighted = false;
    auto* gen = app.add_subcommand(
        "gen",
        "generate an instance; classes: path cycle star tree outerplanar planar-triangulation "
        "bipartite general gadget text. The text class reads --words (lines: word count) and "
        "--pairs (lines: word word count), whitespace separated.");
    gen->add_option("--class", genClass, "instance class")->required();
    gen->add_option("--n", genN, "vertex count for random classes")->capture_default_str();
    gen->add_option("--seed", genSeed, "generator seed")->capture_default_str();
    gen->add_option("--min-dim", genOpt.minDim)->capture_default_str();
    gen->add_option("--max-dim", genOpt.maxDim)->capture_default_str();
    gen->add_option("--min-profit", genOpt.minProfit)->capture_default_str();
    gen->add_option("--max-profit", genOpt.maxProfit)->capture_default_str();
    gen->add_flag("--unweighted", unweighted, "force all profits to 1");
    gen->add_option("--model", modelName, "contact model: proper|point")
        ->check(CLI::IsMember({"proper", "point"}));
    gen->add_option("--k", gadgetK, "gadget: element count per side");
    gen->add_option("--edges", gadgetEdges, "gadget: hyperedges as x,y,z;x,y,z;...");
    gen->add_option("--matched", gadgetMatched,
                    "gadget: matching edge indices (writes the hand layout as a report)");
    gen->add_option("--layout-out", reportPath, "gadget: destination for the matched layout report");
    gen->add_option("--words", wordsPath, "text: word/frequency file");
    gen->add_option("--pairs", pairsPath, "text: pair/count file");
    gen->add_option("--scale", textScale, "text: size scale")->capture_default_str();
    gen->add_option("--out", outPath, "instance destination (default stdout)");

    std::string benchDir, benchOut;
    auto* bench = app.add_subcommand("bench", "run the solver matrix over a directory");
    bench->add_option("--dir", benchDir, "directory of instance JSON files")->required();
    bench->add_option("--out-dir", benchOut, "directory for per-instance reports and SVGs");
    addSolverFlags(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (!epsText.empty()) cfg.epsilon = parseRat(epsText);
    if (modelName == "point") cfg.model = ContactModel::Point;
    if (modelName == "proper") cfg.model = ContactModel::Proper;
    genOpt.unweighted = unweighted;
    genOpt.model = cfg.model;

    if (solve->parsed()) {
        Instance ins = readInstance(slurp(instancePath));
        if (modelName.empty()) cfg.model = ins.model;
        emit(outPath, writeReport(dispatch(algo, ins, cfg)));
        return kExitOk;
    }
    if (eval->parsed()) {
        const Instance ins = readInstance(slurp(instancePath));
        const SolveReport rep = readReport(slurp(reportPath));
        const auto violations = validate(ins, rep.layout);
        if (!violations.empty()) {
            for (const auto& v : violations) {
                std::cerr << v.kind << ": " << v.a;
                if (!v.b.empty()) std::cerr << " " << v.b;
                if (!v.witness.empty()) std::cerr << " at " << v.witness;
                std::cerr << "\n";
            }
            return kExitValidation;
        }
        const Evaluation ev = evaluate(ins, rep.layout);
        std::cout << "profit " << formatRat(ev.profit) << ", " << ev.realizedEdges.size()
                  << " realized contacts\n";
        return kExitOk;
    }
    if (render->parsed()) {
        const Instance ins = readInstance(slurp(instancePath));
        const SolveReport rep = readReport(slurp(reportPath));
        emit(outPath, renderSvg(ins, rep));
        return kExitOk;
    }
    if (gen->parsed()) {
        Instance ins;
        if (genClass == "gadget") {
            GadgetSpec spec{gadgetK, parseHyperedges(gadgetEdges)};
            ins = genGadget(spec);
            if (!gadgetMatched.empty() || !reportPath.empty()) {
                std::vector<int> matched;
                std::stringstream ms(gadgetMatched);
                std::string tok;
                while (std::getline(ms, tok, ','))
                    if (!tok.empty()) matched.push_back(std::stoi(tok));
                SolveReport rep;
                rep.layout = gadgetWellFormedLayout(spec, matched);
                rep.algorithm = "gadget-hand-layout";
                rep.certifiedRatio = Certificate::incumbent();
                reevaluate(ins, rep);
                emit(reportPath, writeReport(rep));
            }
        } else if (genClass == "text") {
            std::map<std::string, long long> freq;
            std::map<std::pair<std::string, std::string>, long long> cooc;
            {
                std::stringstream in(slurp(wordsPath));
                std::string word;
                long long count;
                while (in >> word >> count) freq[word] = count;
            }
            if (!pairsPath.empty()) {
                std::stringstream in(slurp(pairsPath));
                std::string a, b;
                long long count;
                while (in >> a >> b >> count) cooc[{a, b}] = count;
            }
            ins = genFromText(freq, cooc, textScale);
        } else {
            ins = genRandom(genClass, genN, genOpt, genSeed);
        }
        emit(outPath, writeInstance(ins));
        return kExitOk;
    }
    return runBench(benchDir, benchOut, cfg, bench->count("--seed") > 0);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == "budget-exceeded" ? kExitBudget : kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

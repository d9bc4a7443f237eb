// Command-line front end: poset generators, minimal-dominating-set
// enumeration on either side of a poset, verification against the brute
// force oracles, and minimal-transversal enumeration for hypergraph files.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mindom/domination.hpp"
#include "mindom/flashlight.hpp"
#include "mindom/flipping.hpp"
#include "mindom/hypergraph.hpp"
#include "mindom/io.hpp"
#include "mindom/poset.hpp"

namespace {

using namespace mindom;
using Clock = std::chrono::steady_clock;

constexpr int kExitBadInput = 2;
constexpr int kExitOracleCap = 3;

struct RunStats {
    uint64_t solutions = 0;
    double wall_total_ms = 0.0;
    double delay_max_ms = 0.0;
    double delay_sum_ms = 0.0;
    int peak_frames = 0;

    void report(std::ostream& out) const {
        out << "solutions=" << solutions << '\n';
        out << "wall_total_ms=" << wall_total_ms << '\n';
        out << "delay_max_ms=" << delay_max_ms << '\n';
        out << "delay_mean_ms=" << (solutions ? delay_sum_ms / static_cast<double>(solutions) : 0.0) << '\n';
        out << "peak_frames=" << peak_frames << '\n';
    }
};

Poset load_poset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open poset file: " + path);
    return parse_poset(in);
}

int run_gen(const std::string& kind, int n, int d, int t, uint64_t seed) {
    Poset p = [&] {
        if (kind == "random") return random_poset(n, d, seed);
        if (kind == "standard") return standard_example(t);
        if (kind == "chain") return chain_poset(n);
        if (kind == "antichain") return antichain_poset(n);
        throw std::invalid_argument("unknown generator kind: " + kind);
    }();
    write_poset(p, std::cout);
    return 0;
}

int run_mds(const std::string& path, const std::string& side, std::string algorithm, bool stats,
            const std::string& output, int max_oracle_n) {
    Poset p = load_poset(path);
    if (algorithm == "auto") algorithm = side == "incomp" ? "flashlight" : "flipping";
    if (algorithm == "flashlight" && side != "incomp")
        throw std::invalid_argument("flashlight enumerates the incomparability side only");
    if (algorithm == "flipping" && side != "comp")
        throw std::invalid_argument("flipping enumerates the comparability side only");

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!output.empty()) {
        file_out.open(output);
        if (!file_out) throw std::invalid_argument("cannot open output file: " + output);
        out = &file_out;
    }

    RunStats rs;
    EnumProbe probe;
    auto start = Clock::now();
    auto last = start;
    Sink sink([&](const VertexSet& s) {
        auto now = Clock::now();
        double delay = std::chrono::duration<double, std::milli>(now - last).count();
        last = now;
        rs.delay_sum_ms += delay;
        if (delay > rs.delay_max_ms) rs.delay_max_ms = delay;
        ++rs.solutions;
        (*out) << format_solution(s) << '\n';
        return true;
    });

    if (algorithm == "flipping") {
        enumerate_mds_flipping(p, sink, &probe);
    } else if (algorithm == "flashlight") {
        enumerate_mds_incomparability(p, sink, &probe);
    } else if (algorithm == "oracle") {
        if (p.size() > max_oracle_n) {
            std::cerr << "error: oracle size cap exceeded (n = " << p.size() << ", cap = " << max_oracle_n
                      << ")\n";
            return kExitOracleCap;
        }
        Graph g = side == "incomp" ? incomparability_graph(p) : comparability_graph(p);
        for (const auto& s : brute_force_mds(g)) sink.emit(s);
    } else {
        throw std::invalid_argument("unknown algorithm: " + algorithm);
    }

    rs.wall_total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    rs.peak_frames = probe.peak;
    if (stats) rs.report(std::cerr);
    return 0;
}

int run_transversals(const std::string& path, bool stats) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open hypergraph file: " + path);
    Hypergraph h = sperner_reduce(parse_hypergraph(in));
    if (h.has_empty_edge()) {
        std::cout << "infeasible\n";
        return 0;
    }

    RunStats rs;
    EnumProbe probe;
    auto start = Clock::now();
    Sink sink([&](const VertexSet& t) {
        ++rs.solutions;
        std::cout << format_solution(t) << '\n';
        return true;
    });
    enumerate_transversals(h, sink, &probe);
    rs.wall_total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    rs.peak_frames = probe.peak;
    if (stats) rs.report(std::cerr);
    return 0;
}

std::vector<VertexSet> sorted_family(std::vector<VertexSet> fam) {
    std::sort(fam.begin(), fam.end());
    return fam;
}

bool verify_instance(const Poset& p, std::string& why) {
    Graph comp = comparability_graph(p);
    Graph inc = incomparability_graph(p);
    auto mds_comp = sorted_family(brute_force_mds(comp));
    auto mds_inc = sorted_family(brute_force_mds(inc));

    std::vector<VertexSet> got;
    Sink s1([&](const VertexSet& s) {
        got.push_back(s);
        return true;
    });
    enumerate_mds_flipping(p, s1);
    if (sorted_family(got) != mds_comp) {
        why = "flipping enumeration disagrees with the comparability oracle";
        return false;
    }

    got.clear();
    Sink s2([&](const VertexSet& s) {
        got.push_back(s);
        return true;
    });
    enumerate_mds_incomparability(p, s2);
    if (sorted_family(got) != mds_inc) {
        why = "flashlight enumeration disagrees with the incomparability oracle";
        return false;
    }

    for (const auto& d : mds_comp)
        if (!check_width_bound(p, d)) {
            why = "a comparability solution violates the 2*width bound";
            return false;
        }

    auto l6 = min_filter_hypergraph(p);
    for (int t = 2; t <= 3; ++t) {
        if (!conformality_at_most(l6.h, t - 1) && !contains_st_suborder(p, t).has_value()) {
            why = "low conformality without a standard-example witness";
            return false;
        }
    }
    return true;
}

void dump_instance(const Poset& p) {
    std::cerr << "failing instance:\n";
    write_poset(p, std::cerr);
}

int run_verify(const std::string& path, bool sweep, int max_n, int dims, int seeds,
               const std::string& solutions, const std::string& side, int max_oracle_n) {
    if (sweep) {
        if (max_n > max_oracle_n) {
            std::cerr << "error: oracle size cap exceeded (sweep up to n = " << max_n << ", cap = "
                      << max_oracle_n << ")\n";
            return kExitOracleCap;
        }
        for (int n = 1; n <= max_n; ++n) {
            for (uint64_t seed = 0; seed < static_cast<uint64_t>(seeds); ++seed) {
                Poset p = random_poset(n, dims, seed);
                std::string why;
                if (!verify_instance(p, why)) {
                    std::cerr << "verification failed: " << why << '\n';
                    dump_instance(p);
                    return 1;
                }
            }
        }
        std::cout << "verify: all checks passed\n";
        return 0;
    }

    Poset p = load_poset(path);
    if (p.size() > max_oracle_n) {
        std::cerr << "error: oracle size cap exceeded (n = " << p.size() << ", cap = " << max_oracle_n
                  << ")\n";
        return kExitOracleCap;
    }
    if (!solutions.empty()) {
        // Compare a solution file against the oracle family.
        std::ifstream in(solutions);
        if (!in) throw std::invalid_argument("cannot open solutions file: " + solutions);
        Graph g = side == "incomp" ? incomparability_graph(p) : comparability_graph(p);
        std::vector<VertexSet> given;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line.front() == '#') continue;
            given.push_back(parse_solution(line, p.size()));
        }
        if (sorted_family(given) != sorted_family(brute_force_mds(g))) {
            std::cerr << "verification failed: solution file disagrees with the oracle\n";
            dump_instance(p);
            return 1;
        }
        std::cout << "verify: solution file matches the oracle\n";
        return 0;
    }

    std::string why;
    if (!verify_instance(p, why)) {
        std::cerr << "verification failed: " << why << '\n';
        dump_instance(p);
        return 1;
    }
    std::cout << "verify: all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal dominating set enumeration for posets of bounded dimension"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "write a poset file to standard output");
    std::string gen_kind;
    int gen_n = 4, gen_d = 2, gen_t = 2;
    uint64_t gen_seed = 0;
    gen->add_option("kind", gen_kind, "random|standard|chain|antichain")->required();
    gen->add_option("--n", gen_n, "element count");
    gen->add_option("--d", gen_d, "number of linear orders");
    gen->add_option("--t", gen_t, "order of the standard example");
    gen->add_option("--seed", gen_seed, "random seed");

    // mds
    auto* mds = app.add_subcommand("mds", "enumerate minimal dominating sets of a poset file");
    std::string mds_file, mds_side = "comp", mds_algorithm = "auto", mds_output;
    bool mds_stats = false;
    int mds_cap = 20;
    mds->add_option("file", mds_file, "poset file")->required();
    mds->add_option("--side", mds_side, "comp|incomp")->check(CLI::IsMember({"comp", "incomp"}));
    mds->add_option("--algorithm", mds_algorithm, "auto|flipping|flashlight|oracle")
        ->check(CLI::IsMember({"auto", "flipping", "flashlight", "oracle"}));
    mds->add_flag("--stats", mds_stats, "print run statistics to standard error");
    mds->add_option("--output", mds_output, "write solutions to a file instead of standard output");
    mds->add_option("--max-oracle-n", mds_cap, "size cap for the oracle algorithm");

    // verify
    auto* verify = app.add_subcommand("verify", "check the enumerators against the oracles");
    std::string verify_file, verify_solutions, verify_side = "comp";
    bool verify_sweep = false;
    int verify_n = 6, verify_d = 2, verify_seeds = 25, verify_cap = 20;
    verify->add_option("file", verify_file, "poset file");
    verify->add_flag("--sweep", verify_sweep, "verify random posets for every n up to --n");
    verify->add_option("--n", verify_n, "largest element count in the sweep");
    verify->add_option("--d", verify_d, "number of linear orders in the sweep");
    verify->add_option("--seeds", verify_seeds, "seeds per size in the sweep");
    verify->add_option("--solutions", verify_solutions, "solution file to compare against the oracle");
    verify->add_option("--side", verify_side, "comp|incomp")->check(CLI::IsMember({"comp", "incomp"}));
    verify->add_option("--max-oracle-n", verify_cap, "size cap for the oracles");

    // transversals
    auto* tr = app.add_subcommand("transversals", "enumerate minimal transversals of a hypergraph file");
    std::string tr_file;
    bool tr_stats = false;
    tr->add_option("file", tr_file, "hypergraph file")->required();
    tr->add_flag("--stats", tr_stats, "print run statistics to standard error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (gen->parsed()) return run_gen(gen_kind, gen_n, gen_d, gen_t, gen_seed);
        if (mds->parsed()) return run_mds(mds_file, mds_side, mds_algorithm, mds_stats, mds_output, mds_cap);
        if (verify->parsed()) {
            if (!verify_sweep && verify_file.empty()) {
                std::cerr << "error: verify needs a poset file or --sweep\n";
                return kExitBadInput;
            }
            return run_verify(verify_file, verify_sweep, verify_n, verify_d, verify_seeds, verify_solutions,
                              verify_side, verify_cap);
        }
        if (tr->parsed()) return run_transversals(tr_file, tr_stats);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

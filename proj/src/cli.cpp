#include "sigma6/cli.hpp"

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sigma6/canonical.hpp"
#include "sigma6/report.hpp"

namespace sigma6 {

namespace {

int exit_code_for(const Error& e) {
    return e.code() == errc::base_family_empty ? 3 : 2;
}

void print_description(const Tree& t, std::ostream& out) {
    EdgeTypeCounts ec = edge_type_counts(t);
    PatternMatch pm = verify_parameter_description(t);
    out << "n=" << t.order() << " delta=" << t.max_degree() << " sigma=" << sigma(t)
        << " P=" << penalty(ec).str() << " pattern=" << pattern_name(pm.pattern);
    out << " counts:";
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j)
            if (ec.m[i][j]) out << " m" << i << j << "=" << ec.m[i][j];
    out << "\n";
}

}  // namespace

int cmd_sigma(const std::string& path, std::ostream& out, std::ostream& err) {
    try {
        Tree t = read_edge_list_file(path);
        std::int64_t sg = sigma(t);
        int delta = t.max_degree();
        out << "n=" << t.order() << " delta=" << delta << " sigma=" << sg;
        if (delta == 6) {
            DeciValue p = penalty(edge_type_counts(t));
            bool ok = 10 * sg + p.tenths == 10 * c_of_n(t.order());
            out << " P=" << p.str() << " check=" << (ok ? "ok" : "FAIL");
        } else {
            out << " P=n/a";
        }
        out << "\n";
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

int cmd_construct(const FamilySpec& spec, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
    try {
        Tree t = build(spec);
        if (out_path.empty() || out_path == "-") {
            write_edge_list(out, t);
            print_description(t, err);
        } else {
            std::ofstream f(out_path);
            if (!f) throw Error(errc::invalid_input, "cannot write " + out_path);
            write_edge_list(f, t);
            print_description(t, out);
        }
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_pmin(std::int64_t n, std::ostream& out, std::ostream& err) {
    try {
        PMinEntry e = p_min_closed_form(n);
        SigmaMaxResult sm = sigma_max(n);
        out << "n=" << n << " residue=" << e.residue << " p_min=" << e.value.str()
            << " threshold=" << e.threshold << " threshold_ok=" << (sm.at_or_above_threshold ? "yes" : "no")
            << " sigma_max=" << sm.value
            << (sm.at_or_above_threshold ? "" : " (below threshold: unverified)") << "\n";
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        if (opts.n < 7 || opts.n > opts.ceiling)
            throw Error(errc::invalid_input,
                        "n must be in [7," + std::to_string(opts.ceiling) +
                            "] (raise --ceiling for larger orders)");
        ScanOptions so;
        so.max_degree = opts.max_degree;
        so.exact_degree = opts.exact_degree;
        so.threads = opts.threads;
        ExtremalReport rep = brute_force_min(opts.n, so);
        out << report_to_json(rep, opts.stable_output);
        if (opts.max_degree != 6 || !opts.exact_degree) return 0;  // exploratory run
        if (!rep.threshold_ok) {
            err << "informational: order below the asserted threshold, empirical record only\n";
            return 0;
        }
        return rep.matches_closed_form() ? 0 : 1;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

int cmd_families(FamilyId id, int k, std::ostream& out, std::ostream& err) {
    try {
        auto members = family_member_trees(id, k);
        out << "family=" << family_name(id) << " k=" << k << " order=" << family_order(id, k)
            << " classes=" << members.size() << "\n";
        for (const auto& t : members) {
            out << canonical_code(t) << "\n";
        }
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_oracle_feasible(std::int64_t n, DeciValue budget, FeasibilityMode mode, std::ostream& out,
                        std::ostream& err) {
    try {
        auto vectors = feasible_s_vectors(n, budget, mode);
        out << "n=" << n << " budget=" << budget.str() << " mode="
            << (mode == FeasibilityMode::handshake_only ? "handshake" : "bounded")
            << " feasible=" << vectors.size() << "\n";
        for (const auto& v : vectors) out << v.str() << "\n";
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

int cmd_oracle_lemmas(std::int64_t from, std::int64_t to, DeciValue budget, FeasibilityMode mode,
                      std::ostream& out, std::ostream& err) {
    try {
        LemmaReplayReport rep = replay_exclusion_lemmas(from, to, budget, mode);
        out << "orders=" << from << ".." << to << " budget=" << budget.str() << " mode="
            << (mode == FeasibilityMode::handshake_only ? "handshake" : "bounded") << "\n";
        for (const auto& item : rep.items) {
            out << (item.violations.empty() ? "ok   " : "FAIL ") << item.id << ": "
                << item.description << "\n";
            for (const auto& viol : item.violations)
                out << "      n=" << viol.n << " " << viol.vec.str() << "\n";
        }
        return rep.clean() ? 0 : 1;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, char** argv) {
    CLI::App app{"exact sigma-irregularity toolkit for trees with maximum degree 6"};
    app.require_subcommand(1);

    // sigma
    std::string sigma_path;
    auto* sc_sigma = app.add_subcommand("sigma", "compute n, max degree, sigma and penalty of an edge-list file");
    sc_sigma->add_option("path", sigma_path, "edge-list file")->required();

    // construct
    std::string fam_name, out_path;
    FamilySpec spec{FamilyId::tt1, 0};
    spec.edge = 0;  // first edge in the sorted order unless chosen explicitly
    auto* sc_con = app.add_subcommand("construct", "build an extremal-family tree and write its edge list");
    sc_con->add_option("--family", fam_name, "tt1|tt6|tt5|tt2|tt4|tt3i|tt3ii")->required();
    sc_con->add_option("--k", spec.k, "scale parameter")->required();
    sc_con->add_option("--i", spec.i, "odd path index (tt6/tt2, and first index of tt3ii)");
    sc_con->add_option("--j", spec.j, "second odd path index (tt3ii)");
    sc_con->add_option("--edge", spec.edge, "edge selector for tt5/tt4/tt3i (default 0)");
    sc_con->add_option("--base", spec.base, "base member selector (tt5/tt4/tt3i)");
    sc_con->add_option("--out", out_path, "output file; '-' or absent: stdout");

    // pmin
    std::int64_t pmin_n = 0;
    auto* sc_pmin = app.add_subcommand("pmin", "closed-form minimal penalty and maximal sigma for an order");
    sc_pmin->add_option("--n", pmin_n, "order")->required();

    // verify
    VerifyOptions vo;
    std::string degree_mode = "exact";
    auto* sc_ver = app.add_subcommand("verify", "brute-force extremal report for one order");
    sc_ver->add_option("--n", vo.n, "order")->required();
    sc_ver->add_option("--ceiling", vo.ceiling, "largest accepted order (guard for huge runs)");
    sc_ver->add_option("--max-degree", vo.max_degree, "degree bound (default 6)");
    sc_ver->add_option("--degree-mode", degree_mode, "exact|atmost (default exact)");
    sc_ver->add_option("--threads", vo.threads, "worker count (0: SIGMA6_THREADS env or auto)");
    sc_ver->add_flag("--stable-output", vo.stable_output, "zero elapsed_ms for byte-stable reports");

    // families
    std::string famlist_name;
    int famlist_k = 0;
    auto* sc_fam = app.add_subcommand("families", "list the isomorphism classes of a family at scale k");
    sc_fam->add_option("--family", famlist_name, "tt1|tt6|tt5|tt2|tt4|tt3i|tt3ii")->required();
    sc_fam->add_option("--k", famlist_k, "scale parameter")->required();

    // oracle
    std::int64_t on = 0, ofrom = 7, oto = 60;
    std::string budget_str = "40.0", mode_str = "bounded";
    bool lemmas = false;
    auto* sc_or = app.add_subcommand("oracle", "multiset-level feasibility oracle");
    sc_or->add_option("--n", on, "order (feasible-vector listing)");
    sc_or->add_flag("--lemmas", lemmas, "replay the degree-exclusion rules over an order range");
    sc_or->add_option("--from", ofrom, "first order for --lemmas (default 7)");
    sc_or->add_option("--to", oto, "last order for --lemmas (default 60)");
    sc_or->add_option("--budget", budget_str, "penalty budget, e.g. 40.0");
    sc_or->add_option("--mode", mode_str, "bounded|handshake (default bounded)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (sc_sigma->parsed()) return cmd_sigma(sigma_path, std::cout, std::cerr);
        if (sc_con->parsed()) {
            auto id = family_from_name(fam_name);
            if (!id) {
                std::cerr << "ParamOutOfRange: unknown family " << fam_name << "\n";
                return 2;
            }
            spec.id = *id;
            return cmd_construct(spec, out_path, std::cout, std::cerr);
        }
        if (sc_pmin->parsed()) return cmd_pmin(pmin_n, std::cout, std::cerr);
        if (sc_ver->parsed()) {
            if (degree_mode != "exact" && degree_mode != "atmost") {
                std::cerr << "InvalidInput: --degree-mode must be exact or atmost\n";
                return 2;
            }
            vo.exact_degree = degree_mode == "exact";
            return cmd_verify(vo, std::cout, std::cerr);
        }
        if (sc_fam->parsed()) {
            auto id = family_from_name(famlist_name);
            if (!id) {
                std::cerr << "ParamOutOfRange: unknown family " << famlist_name << "\n";
                return 2;
            }
            return cmd_families(*id, famlist_k, std::cout, std::cerr);
        }
        if (sc_or->parsed()) {
            FeasibilityMode mode = mode_str == "handshake" ? FeasibilityMode::handshake_only
                                                           : FeasibilityMode::simple_graph_bounds;
            DeciValue budget = DeciValue::parse(budget_str);
            if (lemmas) return cmd_oracle_lemmas(ofrom, oto, budget, mode, std::cout, std::cerr);
            if (on < 2) {
                std::cerr << "InvalidInput: oracle needs --n or --lemmas\n";
                return 2;
            }
            return cmd_oracle_feasible(on, budget, mode, std::cout, std::cerr);
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    }
    return 0;
}

}  // namespace sigma6

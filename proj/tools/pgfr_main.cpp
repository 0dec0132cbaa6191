// Command-line front end: exact FR/PGFR decisions, walk simulation, family
// generation and the labeled regression corpus.
//
// Exit codes: 0 decided/ok, 2 input parse error, 3 semantic input error,
// 4 corpus mismatch.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgfr/deciders.hpp"
#include "pgfr/families.hpp"
#include "pgfr/graph_spec.hpp"
#include "pgfr/json_out.hpp"
#include "pgfr/simulator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitCorpusMismatch = 4;

struct ExitError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ExitError{kExitParse, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

pgfr::BuiltGraph load_graph(const std::string& path) {
    try {
        return pgfr::build_graph(pgfr::parse_graph_spec(read_file(path)));
    } catch (const pgfr::GraphSpecError& e) {
        throw ExitError{kExitParse, std::string("graph spec error: ") + e.what()};
    }
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text, std::int64_t n) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ExitError{kExitSemantic, "pair must be given as a,b"};
    std::int64_t a = 0, b = 0;
    try {
        a = std::stoll(text.substr(0, comma));
        b = std::stoll(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw ExitError{kExitSemantic, "pair must hold two integers"};
    }
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw ExitError{kExitSemantic, "pair vertex out of range"};
    if (a == b) throw ExitError{kExitSemantic, "pair vertices must be distinct"};
    return {a, b};
}

pgfr::JsonValue mpz_json(const mpz_class& v) {
    if (v.fits_slong_p()) return pgfr::JsonValue::num(static_cast<std::int64_t>(v.get_si()));
    return pgfr::JsonValue::str(v.get_str());
}

pgfr::JsonValue pgfr_json(const pgfr::PgfrVerdict& v) {
    pgfr::JsonValue j = pgfr::JsonValue::object();
    if (v.outcome == pgfr::PgfrVerdict::Outcome::Yes) {
        j.set("outcome", pgfr::JsonValue::str("yes"));
        j.set("d", mpz_json(v.d));
    } else {
        j.set("outcome", pgfr::JsonValue::str("no"));
        if (v.reason == pgfr::PgfrVerdict::Reason::NotCospectral) {
            j.set("reason", pgfr::JsonValue::str("not_cospectral"));
        } else {
            j.set("reason", pgfr::JsonValue::str("relation_witness"));
            pgfr::JsonValue w = pgfr::JsonValue::array();
            for (const auto& x : v.witness) w.push(mpz_json(x));
            j.set("witness", std::move(w));
        }
    }
    return j;
}

pgfr::JsonValue fr_json(const pgfr::FrVerdict& v) {
    pgfr::JsonValue j = pgfr::JsonValue::object();
    if (v.outcome == pgfr::FrVerdict::Outcome::Yes) {
        j.set("outcome", pgfr::JsonValue::str("yes"));
        j.set("t_witness", pgfr::JsonValue::num(v.t_witness));
        j.set("description", pgfr::JsonValue::str(v.description));
        return j;
    }
    j.set("outcome", pgfr::JsonValue::str("no"));
    switch (v.reason) {
        case pgfr::FrVerdict::Reason::NotOrderTwo:
            j.set("reason", pgfr::JsonValue::str("not_order_two"));
            break;
        case pgfr::FrVerdict::Reason::OddFactor:
            j.set("reason", pgfr::JsonValue::str("odd_factor"));
            break;
        case pgfr::FrVerdict::Reason::IncommensurableDifferences: {
            j.set("reason", pgfr::JsonValue::str("incommensurable_differences"));
            pgfr::JsonValue p = pgfr::JsonValue::array();
            p.push(pgfr::JsonValue::num(v.incommensurable_pair.first));
            p.push(pgfr::JsonValue::num(v.incommensurable_pair.second));
            j.set("pair", std::move(p));
            break;
        }
        case pgfr::FrVerdict::Reason::CrossClassResonant:
            j.set("reason", pgfr::JsonValue::str("cross_class_resonant"));
            break;
    }
    return j;
}

pgfr::JsonValue graph_echo_json(const pgfr::BuiltGraph& built) {
    const pgfr::CayleyGraph& g = built.graph;
    pgfr::JsonValue j = pgfr::JsonValue::object();
    j.set("name", pgfr::JsonValue::str(built.name.value_or("")));
    pgfr::JsonValue orders = pgfr::JsonValue::array();
    for (std::int64_t o : g.group().orders()) orders.push(pgfr::JsonValue::num(o));
    j.set("orders", std::move(orders));
    j.set("degree", pgfr::JsonValue::num(static_cast<std::int64_t>(g.degree())));
    j.set("connected", pgfr::JsonValue::boolean(g.connected()));
    j.set("integral", pgfr::JsonValue::boolean(g.is_integral()));
    return j;
}

pgfr::JsonValue verdict_report(const pgfr::BuiltGraph& built, std::int64_t a, std::int64_t b,
                               bool with_timing) {
    const auto start = std::chrono::steady_clock::now();
    pgfr::PgfrVerdict pv = pgfr::decide_pgfr(built.graph, a, b);
    pgfr::FrVerdict fv = pgfr::decide_fr(built.graph, a, b);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    pgfr::JsonValue j = pgfr::JsonValue::object();
    j.set("graph", graph_echo_json(built));
    pgfr::JsonValue pair = pgfr::JsonValue::object();
    pair.set("a", pgfr::JsonValue::num(a));
    pair.set("b", pgfr::JsonValue::num(b));
    j.set("pair", std::move(pair));
    j.set("pgfr", pgfr_json(pv));
    j.set("fr", fr_json(fv));
    // timing is opt-in so that default reports stay byte-deterministic
    if (with_timing) j.set("timing_seconds", pgfr::JsonValue::num(secs));
    return j;
}

pgfr::JsonValue profile_json(const pgfr::PairProfile& p) {
    pgfr::JsonValue j = pgfr::JsonValue::object();
    j.set("t", pgfr::JsonValue::num(p.t));
    j.set("alpha_re", pgfr::JsonValue::num(p.alpha.real()));
    j.set("alpha_im", pgfr::JsonValue::num(p.alpha.imag()));
    j.set("beta_re", pgfr::JsonValue::num(p.beta.real()));
    j.set("beta_im", pgfr::JsonValue::num(p.beta.imag()));
    j.set("leakage", pgfr::JsonValue::num(p.leakage));
    if (p.gamma) {
        j.set("gamma_re", pgfr::JsonValue::num(p.gamma->real()));
        j.set("gamma_im", pgfr::JsonValue::num(p.gamma->imag()));
    }
    return j;
}

struct FamilyOutput {
    pgfr::GraphSpecDocument doc;
    std::optional<std::pair<std::int64_t, std::int64_t>> pair;
    std::optional<bool> hypothesis_ok;
};

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

void emit_family(const FamilyOutput& fam) {
    pgfr::JsonValue j = pgfr::graph_spec_to_json(fam.doc);
    if (fam.pair) {
        pgfr::JsonValue p = pgfr::JsonValue::array();
        p.push(pgfr::JsonValue::num(fam.pair->first));
        p.push(pgfr::JsonValue::num(fam.pair->second));
        j.set("pair", std::move(p));
    }
    std::cout << j.dump() << "\n";
    if (fam.hypothesis_ok)
        std::cerr << "hypothesis " << (*fam.hypothesis_ok ? "holds" : "VIOLATED") << "\n";
}

int run_corpus(bool manifest, const std::string& filter) {
    const auto cases = pgfr::corpus();
    auto expect_str = [](pgfr::Expectation e) {
        switch (e) {
            case pgfr::Expectation::Yes: return "yes";
            case pgfr::Expectation::No: return "no";
            default: return "unlabeled";
        }
    };

    if (manifest) {
        pgfr::JsonValue arr = pgfr::JsonValue::array();
        for (const auto& c : cases) {
            if (!filter.empty() && c.name.find(filter) == std::string::npos) continue;
            pgfr::JsonValue j = pgfr::JsonValue::object();
            j.set("name", pgfr::JsonValue::str(c.name));
            pgfr::JsonValue orders = pgfr::JsonValue::array();
            for (std::int64_t o : c.graph.group().orders()) orders.push(pgfr::JsonValue::num(o));
            j.set("orders", std::move(orders));
            pgfr::JsonValue conn = pgfr::JsonValue::array();
            for (const auto& y : c.graph.connection()) {
                pgfr::JsonValue t = pgfr::JsonValue::array();
                for (std::int64_t r : y.residues) t.push(pgfr::JsonValue::num(r));
                conn.push(std::move(t));
            }
            j.set("connection", std::move(conn));
            pgfr::JsonValue p = pgfr::JsonValue::array();
            p.push(pgfr::JsonValue::num(c.a));
            p.push(pgfr::JsonValue::num(c.b));
            j.set("pair", std::move(p));
            j.set("expect_pgfr", pgfr::JsonValue::str(expect_str(c.expect_pgfr)));
            j.set("expect_fr", pgfr::JsonValue::str(expect_str(c.expect_fr)));
            j.set("provenance", pgfr::JsonValue::str(c.provenance));
            arr.push(std::move(j));
        }
        std::cout << arr.dump() << "\n";
        return kExitOk;
    }

    bool all_ok = true;
    pgfr::JsonValue arr = pgfr::JsonValue::array();
    for (const auto& c : cases) {
        if (!filter.empty() && c.name.find(filter) == std::string::npos) continue;
        pgfr::PgfrVerdict pv = pgfr::decide_pgfr(c.graph, c.a, c.b);
        pgfr::FrVerdict fv = pgfr::decide_fr(c.graph, c.a, c.b);
        const bool got_pgfr = pv.outcome == pgfr::PgfrVerdict::Outcome::Yes;
        const bool got_fr = fv.outcome == pgfr::FrVerdict::Outcome::Yes;
        const bool pgfr_ok = c.expect_pgfr == pgfr::Expectation::Unlabeled ||
                             (c.expect_pgfr == pgfr::Expectation::Yes) == got_pgfr;
        const bool fr_ok = c.expect_fr == pgfr::Expectation::Unlabeled ||
                           (c.expect_fr == pgfr::Expectation::Yes) == got_fr;
        all_ok = all_ok && pgfr_ok && fr_ok;

        pgfr::JsonValue j = pgfr::JsonValue::object();
        j.set("name", pgfr::JsonValue::str(c.name));
        j.set("expect_pgfr", pgfr::JsonValue::str(expect_str(c.expect_pgfr)));
        j.set("got_pgfr", pgfr::JsonValue::str(got_pgfr ? "yes" : "no"));
        j.set("expect_fr", pgfr::JsonValue::str(expect_str(c.expect_fr)));
        j.set("got_fr", pgfr::JsonValue::str(got_fr ? "yes" : "no"));
        j.set("ok", pgfr::JsonValue::boolean(pgfr_ok && fr_ok));
        arr.push(std::move(j));

        std::cerr << (pgfr_ok && fr_ok ? "pass  " : "FAIL  ") << c.name << "  pgfr "
                  << expect_str(c.expect_pgfr) << "/" << (got_pgfr ? "yes" : "no") << "  fr "
                  << expect_str(c.expect_fr) << "/" << (got_fr ? "yes" : "no") << "\n";
    }
    std::cout << arr.dump() << "\n";
    return all_ok ? kExitOk : kExitCorpusMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact FR/PGFR decisions and quantum-walk simulation on abelian Cayley graphs"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // keep --h free for the family parameter

    // decide
    auto* decide = app.add_subcommand("decide", "exact FR/PGFR verdicts for a vertex pair");
    std::string decide_file, decide_pair;
    bool decide_all = false, decide_timing = false;
    decide->add_option("graph-file", decide_file, "graph spec JSON file")->required();
    decide->add_option("--pair", decide_pair, "vertex pair a,b");
    decide->add_flag("--all-pairs", decide_all, "one verdict per order-two difference");
    decide->add_flag("--timing", decide_timing, "include timing in the report");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "continuous-time walk profiles");
    std::string sim_file, sim_pair, sim_csv;
    double sim_t = 0.0, sim_tmax = 0.0;
    std::int64_t sim_grid = 0;
    bool sim_search = false;
    auto* sim_t_opt = simulate->add_option("--t", sim_t, "single evaluation time");
    simulate->add_option("graph-file", sim_file, "graph spec JSON file")->required();
    simulate->add_option("--pair", sim_pair, "vertex pair a,b")->required();
    simulate->add_flag("--search", sim_search, "grid-and-refine leakage search");
    simulate->add_option("--t-max", sim_tmax, "search horizon");
    simulate->add_option("--grid", sim_grid, "search grid points");
    simulate->add_option("--csv", sim_csv, "write scan CSV to this path");

    // family
    auto* family = app.add_subcommand("family", "emit a named family instance as a graph spec");
    family->set_help_flag("--help", "print help");
    std::string fam_name, fam_ks, fam_ys;
    std::int64_t fam_n = 0, fam_p = 0, fam_s = 0, fam_h = 0, fam_m = 0;
    family->add_option("name", fam_name, "family name")->required();
    family->add_option("--n", fam_n, "number of vertices");
    family->add_option("--p", fam_p, "odd prime parameter");
    family->add_option("--s", fam_s, "prime power exponent");
    family->add_option("--h", fam_h, "number of product factors");
    family->add_option("--m", fam_m, "number of Z_2 factors");
    family->add_option("--ks", fam_ks, "comma-separated power exponents");
    family->add_option("--ys", fam_ys, "comma-separated connection elements");

    // corpus
    auto* corpus_cmd = app.add_subcommand("corpus", "labeled regression corpus");
    bool corpus_run = false, corpus_manifest = false;
    std::string corpus_filter;
    corpus_cmd->add_flag("--run", corpus_run, "evaluate deciders against the labels");
    corpus_cmd->add_flag("--manifest", corpus_manifest, "emit the corpus manifest JSON");
    corpus_cmd->add_option("--filter", corpus_filter, "substring filter on case names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) {
            pgfr::BuiltGraph built = load_graph(decide_file);
            for (const auto& w : built.warnings) std::cerr << "warning: " << w << "\n";
            if (decide_pair.empty() != decide_all)
                throw ExitError{kExitSemantic, "give exactly one of --pair or --all-pairs"};
            if (decide_all) {
                pgfr::JsonValue arr = pgfr::JsonValue::array();
                for (const auto& [b, verdict] :
                     pgfr::decide_pgfr_from_identity(built.graph)) {
                    pgfr::JsonValue j = verdict_report(built, 0, b, decide_timing);
                    arr.push(std::move(j));
                }
                std::cout << arr.dump() << "\n";
            } else {
                auto [a, b] = parse_pair(decide_pair, built.graph.order());
                std::cout << verdict_report(built, a, b, decide_timing).dump() << "\n";
            }
            return kExitOk;
        }

        if (simulate->parsed()) {
            pgfr::BuiltGraph built = load_graph(sim_file);
            for (const auto& w : built.warnings) std::cerr << "warning: " << w << "\n";
            auto [a, b] = parse_pair(sim_pair, built.graph.order());
            if (sim_search) {
                pgfr::SearchConfig cfg;
                if (sim_tmax > 0) cfg.t_max = sim_tmax;
                if (sim_grid > 0) cfg.grid_points = sim_grid;
                auto results = pgfr::search_times(built.graph, a, b, cfg);
                pgfr::JsonValue arr = pgfr::JsonValue::array();
                for (const auto& p : results) arr.push(profile_json(p));
                pgfr::JsonValue j = pgfr::JsonValue::object();
                j.set("results", std::move(arr));
                std::cout << j.dump() << "\n";
                if (!sim_csv.empty()) {
                    std::ofstream csv(sim_csv);
                    if (!csv) throw ExitError{kExitSemantic, "cannot write " + sim_csv};
                    pgfr::write_scan_csv(csv, results);
                }
            } else {
                if (sim_t_opt->count() == 0)
                    throw ExitError{kExitSemantic, "give --t or --search"};
                std::cout << profile_json(pgfr::pair_profile(built.graph, a, b, sim_t)).dump()
                          << "\n";
            }
            return kExitOk;
        }

        if (family->parsed()) {
            FamilyOutput fam;
            auto set_doc = [&](const pgfr::CayleyGraph& base, bool comp, const std::string& name) {
                fam.doc.orders = base.group().orders();
                for (const auto& y : base.connection()) fam.doc.connection.push_back(y.residues);
                fam.doc.apply_complement = comp;
                fam.doc.name = name;
            };
            try {
                if (fam_name == "cycle") {
                    set_doc(pgfr::cycle(fam_n), false, "cycle-" + std::to_string(fam_n));
                } else if (fam_name == "complement-cycle") {
                    set_doc(pgfr::cycle(fam_n), true,
                            "complement-cycle-" + std::to_string(fam_n));
                } else if (fam_name == "complete") {
                    set_doc(pgfr::complete(fam_n), false, "complete-" + std::to_string(fam_n));
                } else if (fam_name == "thm42") {
                    auto fg = pgfr::prime_power_circulant(fam_p, fam_s, parse_int_list(fam_ks));
                    set_doc(fg.graph, false, "thm42");
                    fam.hypothesis_ok = fg.hypothesis_ok;
                } else if (fam_name == "thm46") {
                    auto fg = pgfr::parity_split_circulant(fam_p, fam_s, parse_int_list(fam_ys));
                    set_doc(fg.graph, false, "thm46");
                    fam.hypothesis_ok = fg.hypothesis_ok;
                } else if (fam_name == "cor48") {
                    set_doc(pgfr::near_cycle_circulant(fam_p, fam_s), false, "cor48");
                } else if (fam_name == "thm51") {
                    auto pg = pgfr::product_line_complement(fam_p, fam_s, fam_h,
                                                            parse_int_list(fam_ys));
                    set_doc(pgfr::complement(pg.graph), true, "thm51");
                    fam.pair = {pg.a, pg.b};
                } else if (fam_name == "thm54") {
                    auto pg = pgfr::two_by_prime_power_complement(fam_p, fam_s);
                    set_doc(pgfr::complement(pg.graph), true, "thm54");
                    fam.pair = {pg.a, pg.b};
                } else if (fam_name == "thm56") {
                    auto pg = pgfr::boolean_cube_complement(fam_m);
                    set_doc(pgfr::complement(pg.graph), true, "thm56");
                    fam.pair = {pg.a, pg.b};
                } else {
                    throw ExitError{kExitSemantic, "unknown family: " + fam_name};
                }
            } catch (const std::invalid_argument& e) {
                throw ExitError{kExitSemantic, std::string("bad family parameters: ") + e.what()};
            }
            emit_family(fam);
            return kExitOk;
        }

        if (corpus_cmd->parsed()) {
            if (corpus_run == corpus_manifest)
                throw ExitError{kExitSemantic, "give exactly one of --run or --manifest"};
            return run_corpus(corpus_manifest, corpus_filter);
        }
    } catch (const ExitError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}

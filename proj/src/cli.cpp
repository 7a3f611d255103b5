#include "mdc/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdc/circulant.hpp"
#include "mdc/dimension.hpp"
#include "mdc/directions.hpp"
#include "mdc/errors.hpp"
#include "mdc/normal_form.hpp"
#include "mdc/oracle.hpp"
#include "mdc/sweeps.hpp"

namespace mdc {
namespace {

using njson = nlohmann::ordered_json;

// Keeps CirculantGraph construction from exploding on huge orders typed at
// the command line; analysis beyond this size is not useful anyway.
constexpr long kBuildLimit = 200000;

njson json_int(const Int& v) {
    if (v.fits_slong_p()) return njson(v.get_si());
    return njson(v.get_str());  // decimal string once past 64-bit range
}

njson json_vec(const Vec& a) {
    njson j = njson::array();
    for (const Int& x : a) j.push_back(json_int(x));
    return j;
}

njson json_vec_list(const std::vector<Vec>& list) {
    njson j = njson::array();
    for (const Vec& v : list) j.push_back(json_vec(v));
    return j;
}

njson json_matrix(const IntMatrix& m) {
    njson j = njson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        njson row = njson::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(json_int(m(i, k)));
        j.push_back(row);
    }
    return j;
}

std::string group_text(const QuotientGroup& g) {
    if (g.cyclic_factors().empty()) return "Z_1";
    std::string s;
    for (const Int& f : g.cyclic_factors()) {
        if (!s.empty()) s += " x ";
        s += "Z_" + f.get_str();
    }
    return s;
}

void emit(std::ostream& out, const njson& j) { out << j.dump() << "\n"; }

QuotientGroup make_group(const std::string& text) {
    const IntMatrix m = parse_matrix(text);
    if (!m.is_square()) throw DimensionMismatch("the presentation matrix must be square");
    QuotientGroup g(m);
    if (g.order() > kBuildLimit)
        throw TooLarge("group order " + g.order().get_str() + " exceeds the build limit " +
                       std::to_string(kBuildLimit));
    return g;
}

CirculantGraph make_instance(const std::string& matrix, const std::string& jumps,
                             bool symmetric) {
    QuotientGroup g = make_group(matrix);
    JumpSet a = make_jump_set(g, parse_vector_list(jumps), symmetric);
    return CirculantGraph(std::move(g), std::move(a));
}

njson report_json(const DimensionReport& r) {
    njson j;
    j["m"] = json_int(r.m);
    njson factorization = njson::array();
    for (const auto& [p, e] : r.prime_factorization)
        factorization.push_back(njson::array({json_int(p), e}));
    j["prime_factorization"] = factorization;
    j["snf_rank_bound"] = r.snf_rank_bound;
    j["prime_exponent_bound"] = r.prime_exponent_bound;
    j["generator_bound"] = r.generator_bound;
    j["is_circulant"] = r.circulant ? njson(r.circulant->is_circulant) : njson(nullptr);
    j["rule"] = r.circulant ? njson(r.circulant->rule) : njson(nullptr);
    j["exceptional_eta"] = r.exceptional_eta ? json_int(*r.exceptional_eta) : njson(nullptr);
    j["exact_dimension"] = r.exact_dimension ? njson(*r.exact_dimension) : njson(nullptr);
    j["exact_source"] =
        !r.exact_source ? njson(nullptr)
                        : njson(*r.exact_source == ExactSource::ClosedForm ? "closed-form"
                                                                           : "brute-force");
    return j;
}

void print_report_text(std::ostream& out, const DimensionReport& r) {
    out << "order: " << r.m.get_str() << "\n";
    out << "snf rank bound: " << r.snf_rank_bound << "\n";
    out << "prime exponent bound: " << r.prime_exponent_bound << "\n";
    out << "generator bound: " << r.generator_bound << "\n";
    if (r.circulant)
        out << "circulant: " << (r.circulant->is_circulant ? "true" : "false") << " ("
            << r.circulant->rule << ")\n";
    if (r.exceptional_eta) out << "exceptional eta: " << r.exceptional_eta->get_str() << "\n";
    if (r.exact_dimension)
        out << "dimension: " << *r.exact_dimension << " ("
            << (*r.exact_source == ExactSource::ClosedForm ? "closed-form" : "brute-force")
            << ")\n";
}

std::string read_text_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analysis of multidimensional circulant (di)graphs"};
    app.require_subcommand(1);

    struct Args {
        std::string matrix, matrix2;
        std::string jumps, jumps2;
        std::string element;
        std::string graph_file;
        std::string mode = "digraph";
        std::string format = "json";
        std::string verify_format = "text";
        unsigned long prime = 0;
        std::size_t cap = 0;
        bool exact = false;
        bool serial = false;
        unsigned seed = SweepConfig{}.seed;
    } a;
    int exit_override = 0;

    const auto mode_check = CLI::IsMember({"digraph", "graph"});
    auto add_format = [&](CLI::App* cmd, const std::vector<std::string>& choices) {
        cmd->add_option("--format", a.format, "output format")
            ->check(CLI::IsMember(choices))
            ->capture_default_str();
    };
    auto symmetric = [&] { return a.mode == "graph"; };

    // ---- integer matrix commands ----
    auto* snf = app.add_subcommand("snf", "Smith normal form U*M*V = S");
    snf->add_option("-m,--matrix", a.matrix, "rows ';'-separated, entries ','-separated")
        ->required();
    add_format(snf, {"json", "text"});
    snf->callback([&] {
        const IntMatrix m = parse_matrix(a.matrix);
        const SmithDecomposition s = smith_normal_form(m);
        if (a.format == "text") {
            out << "factors: " << vec_to_string(s.factors) << "\n";
            out << "divisors: " << vec_to_string(s.divisors) << "\n";
            out << "S: " << s.S.to_text() << "\n";
            out << "U: " << s.U.to_text() << "\n";
            out << "V: " << s.V.to_text() << "\n";
        } else {
            njson j;
            j["factors"] = json_vec(s.factors);
            j["divisors"] = json_vec(s.divisors);
            j["S"] = json_matrix(s.S);
            j["U"] = json_matrix(s.U);
            j["V"] = json_matrix(s.V);
            emit(out, j);
        }
    });

    auto* hnf = app.add_subcommand("hnf", "column-style Hermite normal form M*V = H");
    hnf->add_option("-m,--matrix", a.matrix, "rows ';'-separated, entries ','-separated")
        ->required();
    add_format(hnf, {"json", "text"});
    hnf->callback([&] {
        const HermiteDecomposition h = hermite_normal_form(parse_matrix(a.matrix));
        if (a.format == "text") {
            out << "H: " << h.H.to_text() << "\n";
            out << "V: " << h.V.to_text() << "\n";
        } else {
            njson j;
            j["H"] = json_matrix(h.H);
            j["V"] = json_matrix(h.V);
            emit(out, j);
        }
    });

    auto* divisors = app.add_subcommand("divisors", "determinantal divisors and invariant factors");
    divisors->add_option("-m,--matrix", a.matrix, "rows ';'-separated, entries ','-separated")
        ->required();
    add_format(divisors, {"json", "text"});
    divisors->callback([&] {
        const IntMatrix m = parse_matrix(a.matrix);
        const Vec d = determinantal_divisors(m);
        const Vec f = invariant_factors(m);
        if (a.format == "text") {
            out << "divisors: " << vec_to_string(d) << "\n";
            out << "factors: " << vec_to_string(f) << "\n";
        } else {
            njson j;
            j["divisors"] = json_vec(d);
            j["factors"] = json_vec(f);
            emit(out, j);
        }
    });

    // ---- quotient group commands ----
    auto* group = app.add_subcommand("group", "structure of Z^n modulo the matrix columns");
    group->add_option("-m,--matrix", a.matrix, "presentation matrix")->required();
    add_format(group, {"json", "text"});
    group->callback([&] {
        const QuotientGroup g = make_group(a.matrix);
        if (a.format == "text") {
            out << group_text(g) << "\n";
            out << "order: " << g.order().get_str() << "\n";
            out << "rank: " << g.rank() << "\n";
        } else {
            njson j;
            j["order"] = json_int(g.order());
            j["rank"] = g.rank();
            j["invariant_factors"] = json_vec(g.cyclic_factors());
            j["group"] = group_text(g);
            emit(out, j);
        }
    });

    auto* order = app.add_subcommand("order", "order of a group element");
    order->add_option("-m,--matrix", a.matrix, "presentation matrix")->required();
    order->add_option("-a,--element", a.element, "element, entries ','-separated")->required();
    add_format(order, {"json", "text"});
    order->callback([&] {
        const QuotientGroup g = make_group(a.matrix);
        const Vec v = parse_vector(a.element);
        const Int o = g.element_order(v);
        if (a.format == "text") {
            out << o.get_str() << "\n";
        } else {
            njson j;
            j["element"] = json_vec(v);
            j["canonical"] = json_vec(g.canonicalize(v));
            j["order"] = json_int(o);
            emit(out, j);
        }
    });

    auto* canon = app.add_subcommand("canon", "canonical representative of a congruence class");
    canon->add_option("-m,--matrix", a.matrix, "presentation matrix")->required();
    canon->add_option("-a,--element", a.element, "element, entries ','-separated")->required();
    add_format(canon, {"json", "text"});
    canon->callback([&] {
        const QuotientGroup g = make_group(a.matrix);
        const Vec c = g.canonicalize(parse_vector(a.element));
        if (a.format == "text") {
            out << vec_to_string(c) << "\n";
            out << "invariant coords: " << vec_to_string(g.to_snf_coords(c)) << "\n";
        } else {
            njson j;
            j["canonical"] = json_vec(c);
            j["invariant_coords"] = json_vec(g.to_snf_coords(c));
            emit(out, j);
        }
    });

    // ---- circulant commands ----
    auto* build = app.add_subcommand("build", "Cayley (di)graph of the quotient on a jump set");
    build->add_option("-m,--matrix", a.matrix, "presentation matrix")->required();
    build->add_option("--jumps", a.jumps, "jumps '|'-separated, coordinates ','-separated")
        ->required();
    build->add_option("--mode", a.mode, "digraph or graph")->check(mode_check)
        ->capture_default_str();
    add_format(build, {"json", "text", "dot"});
    build->callback([&] {
        const CirculantGraph cg = make_instance(a.matrix, a.jumps, symmetric());
        if (a.format == "dot") {
            out << graph_to_dot(cg.graph(), cg.vertex_labels());
        } else if (a.format == "text") {
            out << group_text(cg.group()) << ", " << cg.jump_set().jumps.size() << " jumps\n";
            out << "vertices: " << cg.graph().size() << "\n";
            out << "directed: " << (cg.directed() ? "true" : "false") << "\n";
            out << "edges: " << cg.graph().edge_count() << "\n";
            out << "connected: " << (cg.graph().is_connected() ? "true" : "false") << "\n";
        } else {
            out << graph_to_json(cg.graph()) << "\n";
        }
    });

    auto* comps = app.add_subcommand("components",
                                     "connected components and the reduced presentation");
    comps->add_option("-m,--matrix", a.matrix, "presentation matrix")->required();
    comps->add_option("--jumps", a.jumps, "jumps '|'-separated")->required();
    comps->add_option("--mode", a.mode, "digraph or graph")->check(mode_check)
        ->capture_default_str();
    add_format(comps, {"json", "text"});
    comps->callback([&] {
        const CirculantGraph cg = make_instance(a.matrix, a.jumps, symmetric());
        const CirculantComponents cc = components(cg);
        const bool connected = cc.alpha == 1;
        if (a.format == "text") {
            out << "alpha: " << cc.alpha.get_str() << "\n";
            for (std::size_t i = 0; i < cc.vertex_sets.size(); ++i) {
                out << "component " << i << ":";
                for (std::size_t v : cc.vertex_sets[i]) out << " " << v;
                out << "\n";
            }
            if (!connected) {
                const ReducedPresentation rp = reduce_disconnected(cg.group(), cg.jump_set());
                out << "reduced matrix: " << rp.matrix.to_text() << "\n";
                out << "reduced jumps:";
                for (const Vec& v : rp.jumps) out << " (" << vec_to_string(v) << ")";
                out << "\n";
            }
        } else {
            njson j;
            j["alpha"] = json_int(cc.alpha);
            njson sets = njson::array();
            for (const auto& s : cc.vertex_sets) sets.push_back(s);
            j["components"] = sets;
            if (connected) {
                j["reduced"] = nullptr;
            } else {
                const ReducedPresentation rp = reduce_disconnected(cg.group(), cg.jump_set());
                njson red;
                red["alpha"] = json_int(rp.alpha);
                red["matrix"] = json_matrix(rp.matrix);
                red["jumps"] = json_vec_list(rp.jumps);
                j["reduced"] = red;
            }
            emit(out, j);
        }
    });

    auto* product = app.add_subcommand("product", "cartesian product of two instances");
    product->add_option("--m1", a.matrix, "first presentation matrix")->required();
    product->add_option("--jumps1", a.jumps, "first jump set")->required();
    product->add_option("--m2", a.matrix2, "second presentation matrix")->required();
    product->add_option("--jumps2", a.jumps2, "second jump set")->required();
    product->add_option("--mode", a.mode, "digraph or graph")->check(mode_check)
        ->capture_default_str();
    add_format(product, {"json", "text", "dot"});
    product->callback([&] {
        const CirculantGraph g1 = make_instance(a.matrix, a.jumps, symmetric());
        const CirculantGraph g2 = make_instance(a.matrix2, a.jumps2, symmetric());
        const CirculantGraph p = cartesian_product(g1, g2);
        if (a.format == "dot") {
            out << graph_to_dot(p.graph(), p.vertex_labels());
        } else if (a.format == "text") {
            out << group_text(p.group()) << ", " << p.jump_set().jumps.size() << " jumps\n";
            out << "matrix: " << p.group().matrix().to_text() << "\n";
            out << "vertices: " << p.graph().size() << "\n";
            out << "edges: " << p.graph().edge_count() << "\n";
        } else {
            njson j;
            j["matrix"] = json_matrix(p.group().matrix());
            j["jumps"] = json_vec_list(p.jump_set().jumps);
            j["directed"] = p.directed();
            j["graph"] = njson::parse(graph_to_json(p.graph()));
            emit(out, j);
        }
    });

    auto* adam = app.add_subcommand("adam-canon",
                                    "canonical presentation over the invariant-factor group");
    adam->add_option("-m,--matrix", a.matrix, "presentation matrix")->required();
    adam->add_option("--jumps", a.jumps, "jumps '|'-separated")->required();
    adam->add_option("--mode", a.mode, "digraph or graph")->check(mode_check)
        ->capture_default_str();
    add_format(adam, {"json", "text"});
    adam->callback([&] {
        const CirculantGraph cg = make_instance(a.matrix, a.jumps, symmetric());
        const AdamCanonicalForm form = adam_canonical(cg.group(), cg.jump_set());
        const QuotientGroup cgroup(form.sprime);
        if (a.format == "text") {
            out << group_text(cgroup) << " with jumps";
            for (const Vec& v : form.jumps) out << " (" << vec_to_string(v) << ")";
            out << "\n";
        } else {
            njson j;
            j["matrix"] = json_matrix(form.sprime);
            j["jumps"] = json_vec_list(form.jumps);
            j["symmetric"] = form.symmetric;
            j["group"] = group_text(cgroup);
            emit(out, j);
        }
    });

    auto* dirs = app.add_subcommand("directions",
                                    "recover product directions of a prime-power instance");
    dirs->add_option("-m,--matrix", a.matrix, "presentation matrix");
    dirs->add_option("--jumps", a.jumps, "jumps '|'-separated");
    dirs->add_option("--mode", a.mode, "digraph or graph")->check(mode_check)
        ->capture_default_str();
    dirs->add_option("-g,--graph", a.graph_file, "graph JSON file, or '-' for stdin");
    dirs->add_option("-p,--prime", a.prime, "odd prime order of each factor")->required();
    add_format(dirs, {"json", "text"});
    dirs->callback([&] {
        Graph g;
        if (!a.matrix.empty() && !a.jumps.empty())
            g = make_instance(a.matrix, a.jumps, symmetric()).graph();
        else if (!a.graph_file.empty())
            g = graph_from_json(read_text_input(a.graph_file));
        else
            throw CLI::ValidationError(
                "directions", "provide either --matrix with --jumps or --graph");
        const DirectionPartition dp = detect_directions(g, a.prime);
        // One entry per direction: its edges plus the distinct factor copies.
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges(dp.direction_count);
        for (const auto& [e, d] : dp.direction_of_edge) edges[d].push_back(e);
        std::vector<std::vector<std::vector<std::size_t>>> copies(dp.direction_count);
        for (std::size_t d = 0; d < dp.direction_count; ++d) {
            std::set<std::vector<std::size_t>> uniq(dp.copies[d].begin(), dp.copies[d].end());
            copies[d].assign(uniq.begin(), uniq.end());
        }
        if (a.format == "text") {
            out << "directions: " << dp.direction_count << "\n";
            for (std::size_t d = 0; d < dp.direction_count; ++d)
                out << "direction " << d << ": " << edges[d].size() << " edges, "
                    << copies[d].size() << " copies\n";
        } else {
            njson j;
            j["direction_count"] = dp.direction_count;
            njson list = njson::array();
            for (std::size_t d = 0; d < dp.direction_count; ++d) {
                njson rec;
                njson es = njson::array();
                for (const auto& [u, v] : edges[d]) es.push_back(njson::array({u, v}));
                rec["edges"] = es;
                rec["copies"] = copies[d];
                list.push_back(rec);
            }
            j["directions"] = list;
            emit(out, j);
        }
    });

    // ---- dimension commands ----
    auto* bounds = app.add_subcommand("bounds", "upper bounds on the dimension");
    bounds->add_option("-m,--matrix", a.matrix, "presentation matrix")->required();
    bounds->add_option("--jumps", a.jumps, "jumps '|'-separated")->required();
    add_format(bounds, {"json", "text"});
    bounds->callback([&] {
        const QuotientGroup g = make_group(a.matrix);
        const DimensionReport r = dimension_bounds(g, parse_vector_list(a.jumps));
        if (a.format == "text")
            print_report_text(out, r);
        else
            emit(out, report_json(r));
    });

    auto* isc = app.add_subcommand("is-circulant", "decide whether the instance is a circulant");
    isc->add_option("-m,--matrix", a.matrix, "presentation matrix")->required();
    isc->add_option("--jumps", a.jumps, "jumps '|'-separated")->required();
    isc->add_option("--mode", a.mode, "digraph or graph")->check(mode_check)
        ->capture_default_str();
    isc->add_flag("--exact", a.exact, "fall back to the automorphism search when undecided");
    isc->add_option("--cap", a.cap, "vertex limit for the search fallback");
    add_format(isc, {"json", "text"});
    isc->callback([&] {
        const QuotientGroup g = make_group(a.matrix);
        DimensionReport r = dimension_report(g, parse_vector_list(a.jumps),
                                             symmetric() ? TwoStepMode::Graph
                                                         : TwoStepMode::Digraph);
        if (!r.circulant && a.exact) {
            const CirculantGraph cg = make_instance(a.matrix, a.jumps, symmetric());
            TwoStepVerdict v;
            v.is_circulant =
                has_regular_cyclic_subgroup(cg.graph(), a.cap ? a.cap : 32);
            v.rule = "regular-cyclic-search";
            r.circulant = v;
            if (v.is_circulant) {
                r.exact_dimension = 1;
                r.exact_source = ExactSource::BruteForce;
            }
        }
        if (a.format == "text") {
            if (!r.circulant)
                out << "unknown\n";
            else
                out << (r.circulant->is_circulant ? "true" : "false") << " ("
                    << r.circulant->rule << ")\n";
        } else {
            njson j;
            j["is_circulant"] = r.circulant ? njson(r.circulant->is_circulant) : njson(nullptr);
            j["rule"] = r.circulant ? njson(r.circulant->rule) : njson(nullptr);
            j["exceptional_eta"] =
                r.exceptional_eta ? json_int(*r.exceptional_eta) : njson(nullptr);
            emit(out, j);
        }
    });

    auto* dim = app.add_subcommand("dimension", "bounds and exact dimension where known");
    dim->add_option("-m,--matrix", a.matrix, "presentation matrix")->required();
    dim->add_option("--jumps", a.jumps, "jumps '|'-separated")->required();
    dim->add_option("--mode", a.mode, "digraph or graph")->check(mode_check)
        ->capture_default_str();
    dim->add_flag("--exact", a.exact, "run the exhaustive search when closed forms fall short");
    dim->add_option("--cap", a.cap, "vertex limit for the exhaustive search");
    add_format(dim, {"json", "text"});
    dim->callback([&] {
        const QuotientGroup g = make_group(a.matrix);
        DimensionReport r = dimension_report(g, parse_vector_list(a.jumps),
                                             symmetric() ? TwoStepMode::Graph
                                                         : TwoStepMode::Digraph);
        if (!r.exact_dimension && a.exact) {
            const CirculantGraph cg = make_instance(a.matrix, a.jumps, symmetric());
            r.exact_dimension = dimension_bruteforce(cg.graph(), a.cap ? a.cap : 16);
            r.exact_source = ExactSource::BruteForce;
        }
        if (a.format == "text")
            print_report_text(out, r);
        else
            emit(out, report_json(r));
    });

    // ---- verification ----
    auto* verify = app.add_subcommand("verify", "run the full verification sweep suite");
    verify->add_flag("--serial", a.serial, "disable the per-instance fan-out");
    verify->add_option("--seed", a.seed, "seed for the randomized sweeps")
        ->capture_default_str();
    verify->add_option("--format", a.verify_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    verify->callback([&] {
        SweepConfig cfg;
        cfg.parallel = !a.serial;
        cfg.seed = a.seed;
        const std::vector<SweepOutcome> results = run_verification(cfg);
        bool all = true;
        njson list = njson::array();
        for (std::size_t i = 0; i < results.size(); ++i) {
            const SweepOutcome& o = results[i];
            all = all && o.ok();
            if (a.verify_format == "json") {
                njson rec;
                rec["name"] = o.name;
                rec["pass"] = o.pass;
                rec["within_budget"] = o.within_budget();
                rec["checked"] = o.checked;
                rec["seconds"] = o.seconds;
                rec["budget_seconds"] = o.budget_seconds;
                rec["detail"] = o.detail;
                list.push_back(rec);
            } else {
                out << format_outcome(o, i + 1, results.size()) << std::endl;
            }
        }
        if (a.verify_format == "json") emit(out, list);
        exit_override = all ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_override;
}

}  // namespace mdc

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "mdc/cli.hpp"

namespace {

struct CliResult {
    int code = 0;
    std::string out, err;
};

CliResult run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"mdc"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    CliResult r;
    r.code = mdc::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("normal form subcommands emit stable JSON") {
    const CliResult snf = run({"snf", "-m", "2,0,0;0,2,0;0,0,3"});
    CHECK(snf.code == 0);
    CHECK(snf.out.find("\"factors\":[1,2,6]") != std::string::npos);
    CHECK(snf.out.find("\"divisors\":[1,2,12]") != std::string::npos);
    CHECK(snf.out == run({"snf", "-m", "2,0,0;0,2,0;0,0,3"}).out);  // byte-identical

    const CliResult hnf = run({"hnf", "-m", "4,1;0,1", "--format", "text"});
    CHECK(hnf.code == 0);
    CHECK(hnf.out.substr(0, 3) == "H: ");

    CHECK(run({"divisors", "-m", "2,0;0,6"}).out == "{\"divisors\":[2,12],\"factors\":[2,6]}\n");
}

TEST_CASE("group subcommands answer in both formats") {
    CHECK(run({"group", "-m", "2,0,0;0,2,0;0,0,3", "--format", "text"}).out ==
          "Z_2 x Z_6\norder: 12\nrank: 2\n");
    CHECK(run({"order", "-m", "2,0;0,6", "-a", "1,1", "--format", "text"}).out == "6\n");
    CHECK(run({"order", "-m", "2,0;0,6", "-a", "1,1"}).out ==
          "{\"element\":[1,1],\"canonical\":[1,1],\"order\":6}\n");
    CHECK(run({"canon", "-m", "2,0;0,6", "-a", "-1,9"}).out ==
          "{\"canonical\":[1,3],\"invariant_coords\":[1,3]}\n");
}

TEST_CASE("build, components and product describe instances") {
    CHECK(run({"build", "-m", "5", "--jumps", "1"}).out ==
          "{\"n_vertices\":5,\"directed\":true,\"edges\":[[0,1],[1,2],[2,3],[3,4],[4,0]]}\n");

    const CliResult dot = run({"build", "-m", "2,0;0,2", "--jumps", "1,0|0,1", "--mode", "graph",
                               "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph G {") != std::string::npos);

    const CliResult comps = run({"components", "-m", "6", "--jumps", "2"});
    CHECK(comps.out ==
          "{\"alpha\":2,\"components\":[[0,2,4],[1,3,5]],"
          "\"reduced\":{\"alpha\":2,\"matrix\":[[6]],\"jumps\":[[2]]}}\n");

    const CliResult prod = run({"product", "--m1", "3", "--jumps1", "1", "--m2", "5", "--jumps2",
                                "1", "--format", "text"});
    CHECK(prod.code == 0);
    CHECK(prod.out.find("vertices: 15") != std::string::npos);
}

TEST_CASE("canonical presentation and direction recovery from the command line") {
    const CliResult adam =
        run({"adam-canon", "-m", "2,0,0;0,2,0;0,0,3", "--jumps", "1,0,0|0,1,0|0,0,2"});
    CHECK(adam.code == 0);
    CHECK(adam.out.find("\"matrix\":[[2,0],[0,6]]") != std::string::npos);
    CHECK(adam.out.find("\"group\":\"Z_2 x Z_6\"") != std::string::npos);

    const CliResult dirs =
        run({"directions", "-m", "3,0;0,3", "--jumps", "1,0|0,1", "--mode", "graph", "-p", "3",
             "--format", "text"});
    CHECK(dirs.code == 0);
    CHECK(dirs.out.find("directions: 2") != std::string::npos);

    // The same graph fed back through its JSON export.
    const std::string path = "cli_directions_input.json";
    {
        std::ofstream f(path);
        f << run({"build", "-m", "3,0;0,3", "--jumps", "1,0|0,1", "--mode", "graph"}).out;
    }
    const CliResult from_file = run({"directions", "-g", path.c_str(), "-p", "3"});
    std::remove(path.c_str());
    CHECK(from_file.code == 0);
    CHECK(from_file.out.find("\"direction_count\":2") != std::string::npos);
}

TEST_CASE("dimension subcommands report bounds, verdicts and exact values") {
    const CliResult bounds = run({"bounds", "-m", "30", "--jumps", "7"});
    CHECK(bounds.out.find("\"prime_exponent_bound\":1") != std::string::npos);
    CHECK(bounds.out.find("\"rule\":\"square-free-order\"") != std::string::npos);

    const CliResult isc =
        run({"is-circulant", "-m", "2,0;0,4", "--jumps", "1,0|0,1", "--mode", "digraph"});
    CHECK(isc.code == 0);
    CHECK(isc.out ==
          "{\"is_circulant\":false,\"rule\":\"two-jump-characterization\","
          "\"exceptional_eta\":null}\n");

    const CliResult exc = run({"is-circulant", "-m", "2,0;0,2", "--jumps", "1,0|1,1"});
    CHECK(exc.out.find("\"is_circulant\":true") != std::string::npos);
    CHECK(exc.out.find("\"exceptional_eta\":1") != std::string::npos);

    const CliResult dim = run({"dimension", "-m", "2,0;0,2", "--jumps", "1,0|0,1", "--mode",
                               "graph", "--exact"});
    CHECK(dim.code == 0);
    CHECK(dim.out.find("\"exact_dimension\":1") != std::string::npos);

    const CliResult undecided =
        run({"dimension", "-m", "2,0,0;0,2,0;0,0,3", "--jumps", "1,0,0|0,1,0|0,0,1"});
    CHECK(undecided.out.find("\"exact_dimension\":null") != std::string::npos);

    // The three unit jumps over diag(2,2,3) give C_4 x directed C_3, which is
    // the circulant G(12; {3,9,4}); only the search can see that.
    const CliResult exact =
        run({"dimension", "-m", "2,0,0;0,2,0;0,0,3", "--jumps", "1,0,0|0,1,0|0,0,1", "--exact"});
    CHECK(exact.out.find("\"exact_dimension\":1") != std::string::npos);
    CHECK(exact.out.find("\"exact_source\":\"brute-force\"") != std::string::npos);

    // The 3-cube needs two cyclic factors.
    const CliResult cube = run({"dimension", "-m", "2,0,0;0,2,0;0,0,2", "--jumps",
                                "1,0,0|0,1,0|0,0,1", "--mode", "graph", "--exact"});
    CHECK(cube.out.find("\"exact_dimension\":2") != std::string::npos);
    CHECK(cube.out.find("\"exact_source\":\"brute-force\"") != std::string::npos);
}

TEST_CASE("exit codes separate domain errors from usage errors") {
    const CliResult singular = run({"snf", "-m", "1,2;2,4"});
    CHECK(singular.code == 1);
    CHECK(singular.err.find("[SingularMatrix]") != std::string::npos);

    const CliResult badjump = run({"build", "-m", "5", "--jumps", "5"});
    CHECK(badjump.code == 1);
    CHECK(badjump.err.find("[IdentityJump]") != std::string::npos);

    const CliResult badtext = run({"snf", "-m", "1,2;a,4"});
    CHECK(badtext.code == 2);
    CHECK(badtext.err.find("position") != std::string::npos);

    CHECK(run({"snf"}).code == 2);                    // missing required flag
    CHECK(run({"nonsense"}).code == 2);               // unknown subcommand
    CHECK(run({"directions", "-p", "3"}).code == 2);  // no input source
    CHECK(run({"--help"}).code == 0);

    const CliResult toobig = run({"group", "-m", "1000000,0;0,1000000"});
    CHECK(toobig.code == 1);
    CHECK(toobig.err.find("[TooLarge]") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rankcrit/cli.hpp"
#include "rankcrit/json_io.hpp"

using namespace rankcrit;

namespace {
int run(std::vector<std::string> args) {
    std::vector<const char*> argv{"rankcrit"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    return cli_dispatch((int)argv.size(), argv.data());
}

std::string tmp_path(const std::string& name) { return "/tmp/rankcrit_test_" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}
}  // namespace

TEST_CASE("construct + certify round trip") {
    std::string f = tmp_path("skew3.json");
    CHECK(run({"construct", "skew", "--n", "3", "--output", f}) == 0);
    MatrixSpace a = matrix_space_from_json(load_json_file(f));
    CHECK(a.dim() == 3);
    CHECK(run({"space", "certify", f, "--expect", "certified"}) == 0);
    std::remove(f.c_str());
}

TEST_CASE("space rank on empty basis exits 2") {
    std::string f = tmp_path("empty.json");
    write_text_file(f, "{\"n\": 3, \"basis\": []}\n");
    CHECK(run({"space", "rank", f}) == 2);
    std::remove(f.c_str());
}

TEST_CASE("malformed input exits 2") {
    std::string f = tmp_path("bad.json");
    write_text_file(f, "{not json");
    CHECK(run({"space", "rank", f}) == 2);
    write_text_file(f, "{\"n\": 2, \"basis\": [[[\"1\",\"0\"],[\"0\",\"1\"]], [[\"2\",\"0\"],[\"0\",\"2\"]]]}\n");
    CHECK(run({"space", "rank", f}) == 2);  // dependent basis
    CHECK(run({"rep", "certify", "adjoint", "--algebra", "e8"}) == 2);
    std::remove(f.c_str());
}

TEST_CASE("expect certified gates the exit code") {
    CHECK(run({"rep", "certify", "adjoint", "--algebra", "sl2", "--expect", "certified"}) == 0);
    // g2-7 yields UpperBound (its RND is all of o7), so --expect certified exits 1
    CHECK(run({"rep", "certify", "g2-7", "--expect", "certified"}) == 1);
    CHECK(run({"rep", "certify", "g2-7"}) == 0);
}

TEST_CASE("reports are byte-identical for identical inputs and seed") {
    std::string f1 = tmp_path("rep1.json"), f2 = tmp_path("rep2.json");
    CHECK(run({"rep", "certify", "adjoint", "--algebra", "sl2", "--seed", "9", "--output", f1}) == 0);
    CHECK(run({"rep", "certify", "adjoint", "--algebra", "sl2", "--seed", "9", "--output", f2}) == 0);
    CHECK(slurp(f1) == slurp(f2));
    CHECK(!slurp(f1).empty());
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("rep build emits a readable representation") {
    std::string f = tmp_path("sl2std.json");
    CHECK(run({"rep", "build", "adjoint", "--algebra", "sl2", "--output", f}) == 0);
    Representation rho = representation_from_json(load_json_file(f));
    CHECK(rho.dim_v() == 3);
    CHECK(run({"rep", "certify", "--file", f, "--expect", "certified"}) == 0);
    std::remove(f.c_str());
}

TEST_CASE("construct compression emits the right dimensions") {
    std::string f = tmp_path("comp.json");
    CHECK(run({"construct", "compression", "--n", "4", "--k", "2", "--output", f}) == 0);
    CHECK(matrix_space_from_json(load_json_file(f)).dim() == 10);
    std::remove(f.c_str());
}

TEST_CASE("pencil witness subcommand") {
    std::string f = tmp_path("pencil.json");
    // E12, E13 in 3x3: singular, witnessed
    write_text_file(f,
                    "{\"n\":3,\"basis\":[[[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"0\"],[\"0\",\"0\",\"0\"]],"
                    "[[\"0\",\"0\",\"1\"],[\"0\",\"0\",\"0\"],[\"0\",\"0\",\"0\"]]]}\n");
    CHECK(run({"construct", "pencil-witness", f}) == 0);
    // a nonsingular pencil reports NotSingular with exit 1
    write_text_file(f,
                    "{\"n\":2,\"basis\":[[[\"1\",\"0\"],[\"0\",\"0\"]],"
                    "[[\"0\",\"0\"],[\"0\",\"1\"]]]}\n");
    CHECK(run({"construct", "pencil-witness", f}) == 1);
    std::remove(f.c_str());
}

TEST_CASE("poly subcommands") {
    CHECK(run({"poly", "pde", "--d", "2", "--e", "1"}) == 0);
    CHECK(run({"poly", "verify-qd", "--emax", "4"}) == 0);
    CHECK(run({"poly", "verify-brute", "--emax", "2", "--dmax", "4"}) == 0);
}

TEST_CASE("algebra validate") {
    std::string f = tmp_path("alg.json");
    write_text_file(f,
                    "{\"dim\":3,\"labels\":[\"e\",\"f\",\"h\"],\"cartan\":[2],"
                    "\"c\":[[2,0,0,\"2\"],[2,1,1,\"-2\"],[0,1,2,\"1\"]]}\n");
    CHECK(run({"algebra", "validate", f}) == 0);
    write_text_file(f,
                    "{\"dim\":3,\"labels\":[\"e\",\"f\",\"h\"],\"cartan\":[2],"
                    "\"c\":[[2,0,0,\"2\"],[2,1,1,\"-2\"],[0,1,2,\"1\"],[0,1,0,\"1\"]]}\n");
    CHECK(run({"algebra", "validate", f}) == 2);  // [e,f] = h + e breaks Jacobi
    std::remove(f.c_str());
}

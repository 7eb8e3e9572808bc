#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "folocal/io.hpp"

using namespace folocal;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    try {
        return read_file(path);
    } catch (const DomainError&) {
        return {};
    }
}

std::string work_dir() {
    static std::string dir = [] {
        auto d = std::filesystem::temp_directory_path() / "folocal_cli_tests";
        std::filesystem::create_directories(d);
        return d.string();
    }();
    return dir;
}

std::string path_in(const std::string& name) { return work_dir() + "/" + name; }

std::string tautology_file() {
    std::string path = path_in("taut.json");
    write_file(path, R"({"op": "leaf", "leaf": {"r": 1, "m": 1, "psi": "x = x"}})");
    return path;
}

RunResult run(const std::string& args) {
    static int counter = 0;
    std::string out = path_in("stdout" + std::to_string(counter) + ".txt");
    std::string err = path_in("stderr" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string("\"") + FOLOCAL_CLI_PATH + "\" " + args +
                      " >" + out + " 2>" + err;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    std::remove(out.c_str());
    std::remove(err.c_str());
    return r;
}

int count_lines(const std::string& text, const std::string& prefix = "") {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line))
        if (prefix.empty() || line.rfind(prefix, 0) == 0)
            ++n;
    return n;
}

} // namespace

TEST_CASE("gen produces deterministic, well-formed instances") {
    std::string a = path_in("rand_a.json");
    std::string b = path_in("rand_b.json");
    CHECK(run("gen --family rand-deg --params n=30,deg=3 --seed 7 -o " + a).code == 0);
    CHECK(run("gen --family rand-deg --params n=30,deg=3 --seed 7 -o " + b).code == 0);
    CHECK(read_file(a) == read_file(b));

    std::string grid = path_in("grid_5x4.json");
    CHECK(run("gen --family grid --params width=5,height=4 -o " + grid).code == 0);
    Structure g = load_structure(grid);
    CHECK(g.universe_size() == 20);
    CHECK(g.tuples(0).size() == 62); // 2 * (2*5*4 - 5 - 4) directed edges

    std::string cycle = path_in("cycle_9.json");
    CHECK(run("gen --family cycle --params n=9 -o " + cycle).code == 0);
    Structure c = load_structure(cycle);
    CHECK(c.universe_size() == 9);
    CHECK(c.tuples(0).size() == 18);
}

TEST_CASE("gen set-cover reports the planted optimum") {
    std::string f = path_in("cover_6_3.json");
    auto r = run("gen --family setcover --params ground=6,sets=3,cover=2 --seed 3 -o " + f);
    CHECK(r.code == 0);
    CHECK(r.err.find("planted optimum: 2") != std::string::npos);
    Structure s = load_structure(f);
    CHECK(s.universe_size() == 9);
    CHECK(s.tuples(s.vocabulary().index_of("P")).size() == 6);
}

TEST_CASE("check returns the verdict through the exit code") {
    std::string grid = path_in("grid_4x4.json");
    REQUIRE(run("gen --family grid --params width=4,height=4 -o " + grid).code == 0);

    std::string taut = tautology_file();
    std::string isolated = path_in("isolated.json");
    write_file(isolated, R"js({"op": "leaf", "leaf": {"r": 1, "m": 1,
        "psi": "not exists y (dist(x, y) <= 1 and E(x, y))"}})js");

    auto t = run("check --structure " + grid + " --gnf " + taut +
                 " --strategy peleg --k 2");
    CHECK(t.code == 0);
    auto report = nlohmann::json::parse(t.out);
    CHECK(report["verdict"] == true);
    CHECK(report["leaves"].size() == 1);
    CHECK(report["leaves"][0]["satisfiers"] == 16);

    auto f = run("check --structure " + grid + " --gnf " + isolated +
                 " --strategy bfs-layers --k 2");
    CHECK(f.code == 1);
    CHECK(nlohmann::json::parse(f.out)["verdict"] == false);

    CHECK(run("check --structure " + path_in("nope.json") + " --gnf " + taut +
              " --strategy peleg --k 2").code == 2);
    CHECK(run("check --structure " + grid + " --gnf " + taut +
              " --strategy bogus --k 2").code == 2);
}

TEST_CASE("check and oracle agree on verdicts") {
    std::string cycle = path_in("cycle_14.json");
    REQUIRE(run("gen --family cycle --params n=14 -o " + cycle).code == 0);

    std::vector<std::string> sentences = {
        R"js({"op": "leaf", "leaf": {"r": 1, "m": 3,
            "psi": "exists y (dist(x, y) <= 1 and E(x, y))"}})js",
        R"js({"op": "not", "children": [{"op": "leaf", "leaf": {"r": 1, "m": 5,
            "psi": "x = x"}}]})js",
        R"js({"op": "and", "children": [
            {"op": "leaf", "leaf": {"r": 2, "m": 2, "psi": "x = x"}},
            {"op": "leaf", "leaf": {"r": 1, "m": 1,
             "psi": "not exists y (dist(x, y) <= 1 and E(x, y))"}}]})js",
    };
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        std::string gnf = path_in("agree_" + std::to_string(i) + ".json");
        write_file(gnf, sentences[i]);
        int oracle = run("oracle --structure " + cycle + " --gnf " + gnf).code;
        CHECK(oracle <= 1);
        for (std::string strategy : {"peleg", "bfs-layers"}) {
            int check = run("check --structure " + cycle + " --gnf " + gnf +
                            " --strategy " + strategy + " --k 2").code;
            CHECK(check == oracle);
        }
    }
}

TEST_CASE("oracle evaluates raw sentences") {
    std::string inst = path_in("cover_12_4.json");
    REQUIRE(run("gen --family setcover --params ground=12,sets=4,cover=2 --seed 5 -o " +
                inst).code == 0);

    auto cover_sentence = [](int k) {
        std::string inner = "P(y) -> (";
        for (int i = 1; i <= k; ++i) {
            if (i > 1)
                inner += " or ";
            inner += "E(y, x" + std::to_string(i) + ")";
        }
        inner += ")";
        std::string phi = "forall y (" + inner + ")";
        for (int i = k; i >= 1; --i)
            phi = "exists x" + std::to_string(i) + " (" + phi + ")";
        return phi;
    };

    std::string phi2 = path_in("phi2.txt");
    write_file(phi2, cover_sentence(2));
    std::string phi1 = path_in("phi1.txt");
    write_file(phi1, cover_sentence(1));

    auto yes = run("oracle --structure " + inst + " --formula " + phi2);
    CHECK(yes.code == 0);
    CHECK(nlohmann::json::parse(yes.out)["verdict"] == true);
    CHECK(run("oracle --structure " + inst + " --formula " + phi1).code == 1);

    std::string open = path_in("open.txt");
    write_file(open, "E(x, y)");
    CHECK(run("oracle --structure " + inst + " --formula " + open).code == 2);
    CHECK(run("oracle --structure " + inst).code == 2);
    CHECK(run("oracle --structure " + inst + " --gnf " + tautology_file() +
              " --formula " + phi2).code == 2);
}

TEST_CASE("covers emits one row per piece plus a summary") {
    std::string grid = path_in("grid_16x16.json");
    REQUIRE(run("gen --family grid --params width=16,height=16 -o " + grid).code == 0);

    auto r = run("covers --structure " + grid + " --r 1 --strategy peleg --k 2");
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "index,size,kernel_size,width");
    int rows = 0;
    std::uint64_t total = 0;
    std::string line;
    std::string summary;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0) {
            summary = line;
            break;
        }
        std::istringstream fields(line);
        std::string cell;
        std::getline(fields, cell, ',');
        CHECK(std::stoi(cell) == rows);
        std::getline(fields, cell, ',');
        total += std::stoull(cell);
        ++rows;
    }
    CHECK(rows > 0);
    CHECK(total <= 4096); // 256^(1 + 1/2)
    CHECK(summary.find("valid=true") != std::string::npos);
    CHECK(summary.find("total=" + std::to_string(total)) != std::string::npos);

    auto layered = run("covers --structure " + grid +
                       " --r 2 --strategy bfs-layers --k 2");
    CHECK(layered.code == 0);
    CHECK(layered.out.find("valid=true") != std::string::npos);
}

TEST_CASE("bench prints csv and fits a slope across sizes") {
    std::string taut = tautology_file();
    std::string out = path_in("bench.csv");

    auto multi = run("bench --family grid --sizes 4,6,8 --gnf " + taut +
                     " --strategy bfs-layers --k 2 --out " + out);
    CHECK(multi.code == 0);
    CHECK(multi.out.rfind("family,n,", 0) == 0);
    CHECK(count_lines(multi.out, "grid,") == 3);
    CHECK(multi.out.find("# slope=") != std::string::npos);
    CHECK(read_file(out) == multi.out);

    auto single = run("bench --family grid --sizes 4 --gnf " + taut +
                      " --strategy peleg --k 2");
    CHECK(single.code == 0);
    CHECK(single.out.find("# slope=") == std::string::npos);

    CHECK(run("bench --family grid --sizes 8,4 --gnf " + taut +
              " --strategy peleg --k 2").code == 2);
}

TEST_CASE("malformed invocations exit with code two") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("gen --family grid --params width=4 -o " + path_in("x.json")).code == 2);
    CHECK(run("gen --family mystery --params n=4 -o " + path_in("x.json")).code == 2);
    CHECK(run("gen --family grid --params width=4,height=oops -o " +
              path_in("x.json")).code == 2);
}

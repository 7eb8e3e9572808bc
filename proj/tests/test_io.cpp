#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "folocal/generators.hpp"
#include "folocal/io.hpp"
#include "folocal/logic.hpp"
#include "folocal/parser.hpp"
#include "test_support.hpp"

using namespace folocal;
using namespace testsupport;

namespace {

std::string temp_path(const std::string& stem) {
    return (std::filesystem::temp_directory_path() / stem).string();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& stem, const std::string& content)
        : path(temp_path(stem)) {
        write_file(path, content);
    }
    ~TempFile() { std::remove(path.c_str()); }
};

void check_error(const std::string& doc, const std::string& needle) {
    try {
        structure_from_json(doc);
        FAIL_CHECK("expected a parse failure for: " << doc);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
}

} // namespace

TEST_CASE("structures survive a json round trip") {
    rng_t rng(601);
    for (int trial = 0; trial < 30; ++trial) {
        Structure s = random_mixed_structure(rng, 20);
        Structure back = structure_from_json(structure_to_json(s));
        CHECK(back.universe_size() == s.universe_size());
        REQUIRE(back.vocabulary().size() == s.vocabulary().size());
        for (int rel = 0; rel < s.vocabulary().size(); ++rel) {
            CHECK(back.vocabulary().symbol(rel).name == s.vocabulary().symbol(rel).name);
            CHECK(back.tuples(rel) == s.tuples(rel));
        }
    }
}

TEST_CASE("structure parsing accepts the documented format") {
    Structure s = structure_from_json(R"({
        "vocabulary": [{"name": "E", "arity": 2}, {"name": "P", "arity": 1}],
        "universe": 3,
        "relations": {"E": [[0, 1], [1, 2]], "P": [[2]]}
    })");
    CHECK(s.universe_size() == 3);
    CHECK(s.tuples(s.vocabulary().index_of("E")).size() == 2);
    CHECK(s.tuples(s.vocabulary().index_of("P")).size() == 1);
}

TEST_CASE("structure parse errors name the offending location") {
    check_error("not json at all", "document is not valid JSON");
    check_error("[1,2]", "structure document must be an object");
    check_error(R"({"universe": 2, "relations": {}})", "missing field 'vocabulary'");
    check_error(R"({"vocabulary": [], "universe": 0, "relations": {}})",
                "'universe' must be >= 1");
    check_error(R"({"vocabulary": [{"name": "E", "arity": 2}], "universe": 2,
                    "relations": {"F": []}})",
                "relation 'F' is not in the vocabulary");
    check_error(R"({"vocabulary": [{"name": "E", "arity": 2}], "universe": 2,
                    "relations": {"E": [[0]]}})",
                "relation 'E' tuple 0 must be an array of length 2");
    check_error(R"({"vocabulary": [{"name": "E", "arity": 2}], "universe": 2,
                    "relations": {"E": [[0, 1], [0, "x"]]}})",
                "relation 'E' tuple 1 must contain integers");
    check_error(R"({"vocabulary": [{"name": "E", "arity": 2}], "universe": 2,
                    "relations": {"E": [[0, 5]]}})",
                "relation 'E' tuple 0 element 5 is outside the universe [0, 2)");
    check_error(R"({"vocabulary": [{"name": "E", "arity": "two"}], "universe": 2,
                    "relations": {}})",
                "field 'arity' must be an integer");
}

TEST_CASE("sentences survive a json round trip") {
    rng_t rng(602);
    Vocabulary v;
    v.add("E", 2);
    v.add("P", 1);
    for (int trial = 0; trial < 40; ++trial) {
        GnfPtr g = random_gnf(rng, v, 2, 3, 2);
        GnfPtr back = gnf_from_json(gnf_to_json(g));
        CHECK(gnf_to_json(back) == gnf_to_json(g));
    }
}

TEST_CASE("sentence parsing accepts the documented format") {
    GnfPtr g = gnf_from_json(R"js({
        "op": "and",
        "children": [
            {"op": "leaf", "leaf": {"r": 1, "m": 2,
             "psi": "exists y (dist(x, y) <= 1 and E(x, y))"}},
            {"op": "not", "children": [
                {"op": "leaf", "leaf": {"r": 1, "m": 1, "psi": "x = x"}}]}
        ]
    })js");
    CHECK(g->op == GnfOp::And);
    REQUIRE(g->children.size() == 2);
    CHECK(g->children[0]->op == GnfOp::Leaf);
    CHECK(g->children[0]->leaf.r == 1);
    CHECK(g->children[0]->leaf.m == 2);
}

TEST_CASE("sentence parse errors carry the node path") {
    auto expect = [](const std::string& doc, const std::string& needle) {
        try {
            gnf_from_json(doc);
            FAIL_CHECK("expected a parse failure for: " << doc);
        } catch (const DomainError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect("[]", "sentence must be an object");
    expect(R"({"children": []})", "sentence is missing field 'op'");
    expect(R"({"op": "xor", "children": [
              {"op": "leaf", "leaf": {"r": 1, "m": 1, "psi": "x = x"}}]})",
           "unknown op 'xor'");
    expect(R"({"op": "and", "children": []})",
           "field 'children' must be a non-empty array");
    expect(R"({"op": "not", "children": [
              {"op": "leaf", "leaf": {"r": 1, "m": 1, "psi": "x = x"}},
              {"op": "leaf", "leaf": {"r": 1, "m": 1, "psi": "x = x"}}]})",
           "'not' takes exactly one child");
    expect(R"({"op": "and", "children": [{"op": "leaf"}]})",
           "sentence.children[0] is missing field 'leaf'");
    expect(R"({"op": "and", "children": [
              {"op": "leaf", "leaf": {"r": 1, "m": 1, "psi": "E(x"}}]})",
           "sentence.children[0].leaf.psi:");
    expect(R"({"op": "leaf", "leaf": {"r": 0, "m": 1, "psi": "x = x"}})",
           "leaf radius must be >= 1");
    expect(R"js({"op": "leaf", "leaf": {"r": 1, "m": 1, "psi": "E(x, y)"}})js",
           "free variable");
}

TEST_CASE("structure files load and save through paths") {
    Structure s = gen_grid(3, 2);
    std::string path = temp_path("folocal_io_structure.json");
    save_structure(s, path);
    Structure back = load_structure(path);
    CHECK(back.universe_size() == 6);
    CHECK(back.tuples(0) == s.tuples(0));
    std::remove(path.c_str());
}

TEST_CASE("sentence files load and save through paths") {
    GnfPtr g = gnf_not(gnf_leaf(2, 1, relativize(parse_formula("x = x"), 2, "x")));
    std::string path = temp_path("folocal_io_gnf.json");
    save_gnf(g, path);
    GnfPtr back = load_gnf(path);
    CHECK(gnf_to_json(back) == gnf_to_json(g));
    std::remove(path.c_str());
}

TEST_CASE("formula files parse their whole contents") {
    TempFile f("folocal_io_formula.txt",
               "forall y (P(y) -> exists z (E(y, z)))\n");
    FormulaPtr phi = load_formula(f.path);
    auto fv = free_variables(phi);
    CHECK(fv.empty());

    TempFile bad("folocal_io_formula_bad.txt", "exists y (E(y, y)");
    try {
        load_formula(bad.path);
        FAIL_CHECK("expected a parse failure");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find(bad.path) != std::string::npos);
    }
}

TEST_CASE("file errors name the path") {
    std::string missing = temp_path("folocal_io_definitely_missing.json");
    try {
        read_file(missing);
        FAIL_CHECK("expected read to fail");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find(missing) != std::string::npos);
    }
    CHECK_THROWS_AS(load_structure(missing), DomainError);

    std::string bad_dir = temp_path("folocal_no_such_dir") + "/out.json";
    CHECK_THROWS_AS(write_file(bad_dir, "x"), DomainError);
}

TEST_CASE("load errors prefix the file path to the parse message") {
    TempFile f("folocal_io_bad_structure.json", R"({"universe": 1})");
    try {
        load_structure(f.path);
        FAIL_CHECK("expected load to fail");
    } catch (const DomainError& e) {
        std::string what = e.what();
        CHECK(what.find(f.path) != std::string::npos);
        CHECK(what.find("missing field 'vocabulary'") != std::string::npos);
    }
}

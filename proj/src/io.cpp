#include "folocal/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "folocal/parser.hpp"

namespace folocal {

namespace {

using json = nlohmann::ordered_json;

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("document is not valid JSON: ") + e.what());
    }
}

const json& require(const json& node, const char* key, const char* where) {
    auto it = node.find(key);
    if (it == node.end())
        throw DomainError(std::string(where) + " is missing field '" + key + "'");
    return *it;
}

int require_int(const json& node, const char* key, const char* where) {
    const json& v = require(node, key, where);
    if (!v.is_number_integer())
        throw DomainError(std::string(where) + " field '" + key + "' must be an integer");
    return v.get<int>();
}

} // namespace

Structure structure_from_json(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object())
        throw DomainError("structure document must be an object");

    const json& vocab_node = require(doc, "vocabulary", "structure document");
    if (!vocab_node.is_array())
        throw DomainError("'vocabulary' must be an array");
    Vocabulary vocab;
    for (std::size_t i = 0; i < vocab_node.size(); ++i) {
        const json& sym = vocab_node[i];
        std::string where = "vocabulary entry " + std::to_string(i);
        if (!sym.is_object())
            throw DomainError(where + " must be an object");
        const json& name = require(sym, "name", where.c_str());
        if (!name.is_string())
            throw DomainError(where + " field 'name' must be a string");
        vocab.add(name.get<std::string>(), require_int(sym, "arity", where.c_str()));
    }

    int universe = require_int(doc, "universe", "structure document");
    if (universe < 1)
        throw DomainError("'universe' must be >= 1");
    Structure s(std::move(vocab), universe);

    const json& rels = require(doc, "relations", "structure document");
    if (!rels.is_object())
        throw DomainError("'relations' must be an object");
    for (const auto& [name, tuples] : rels.items()) {
        int rel = s.vocabulary().index_of(name);
        if (rel < 0)
            throw DomainError("relation '" + name + "' is not in the vocabulary");
        if (!tuples.is_array())
            throw DomainError("relation '" + name + "' must map to an array of tuples");
        int arity = s.vocabulary().symbol(rel).arity;
        for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
            const json& tuple = tuples[ti];
            std::string where = "relation '" + name + "' tuple " + std::to_string(ti);
            if (!tuple.is_array() || static_cast<int>(tuple.size()) != arity)
                throw DomainError(where + " must be an array of length " +
                                  std::to_string(arity));
            std::vector<int> values;
            values.reserve(tuple.size());
            for (const json& v : tuple) {
                if (!v.is_number_integer())
                    throw DomainError(where + " must contain integers");
                int value = v.get<int>();
                if (value < 0 || value >= universe)
                    throw DomainError(where + " element " + std::to_string(value) +
                                      " is outside the universe [0, " +
                                      std::to_string(universe) + ")");
                values.push_back(value);
            }
            s.add_tuple(rel, values);
        }
    }
    return s;
}

std::string structure_to_json(const Structure& s) {
    json doc;
    doc["vocabulary"] = json::array();
    for (const auto& sym : s.vocabulary().symbols())
        doc["vocabulary"].push_back({{"name", sym.name}, {"arity", sym.arity}});
    doc["universe"] = s.universe_size();
    doc["relations"] = json::object();
    for (int r = 0; r < s.relation_count(); ++r) {
        json rows = json::array();
        for (const auto& t : s.tuples(r))
            rows.push_back(t);
        doc["relations"][s.vocabulary().symbol(r).name] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

namespace {

GnfPtr gnf_from_node(const json& node, const std::string& where) {
    if (!node.is_object())
        throw DomainError(where + " must be an object");
    const json& op_node = require(node, "op", where.c_str());
    if (!op_node.is_string())
        throw DomainError(where + " field 'op' must be a string");
    std::string op = op_node.get<std::string>();

    if (op == "leaf") {
        const json& leaf = require(node, "leaf", where.c_str());
        std::string leaf_where = where + ".leaf";
        int r = require_int(leaf, "r", leaf_where.c_str());
        int m = require_int(leaf, "m", leaf_where.c_str());
        const json& psi = require(leaf, "psi", leaf_where.c_str());
        if (!psi.is_string())
            throw DomainError(leaf_where + " field 'psi' must be a string");
        FormulaPtr parsed;
        try {
            parsed = parse_formula(psi.get<std::string>());
        } catch (const ParseError& e) {
            throw DomainError(leaf_where + ".psi: " + e.what());
        }
        return gnf_leaf(r, m, std::move(parsed));
    }

    const json& children = require(node, "children", where.c_str());
    if (!children.is_array() || children.empty())
        throw DomainError(where + " field 'children' must be a non-empty array");
    std::vector<GnfPtr> parsed;
    parsed.reserve(children.size());
    for (std::size_t i = 0; i < children.size(); ++i)
        parsed.push_back(gnf_from_node(children[i], where + ".children[" + std::to_string(i) + "]"));

    if (op == "not") {
        if (parsed.size() != 1)
            throw DomainError(where + ": 'not' takes exactly one child");
        return gnf_not(std::move(parsed[0]));
    }
    if (op == "and")
        return gnf_and(std::move(parsed));
    if (op == "or")
        return gnf_or(std::move(parsed));
    throw DomainError(where + ": unknown op '" + op + "'");
}

json gnf_to_node(const GnfPtr& g) {
    json node;
    switch (g->op) {
    case GnfOp::Leaf:
        node["op"] = "leaf";
        node["leaf"] = {{"r", g->leaf.r}, {"m", g->leaf.m}, {"psi", print_formula(g->leaf.psi)}};
        break;
    case GnfOp::Not:
        node["op"] = "not";
        node["children"] = json::array({gnf_to_node(g->children[0])});
        break;
    case GnfOp::And:
    case GnfOp::Or:
        node["op"] = g->op == GnfOp::And ? "and" : "or";
        node["children"] = json::array();
        for (const auto& c : g->children)
            node["children"].push_back(gnf_to_node(c));
        break;
    }
    return node;
}

} // namespace

GnfPtr gnf_from_json(const std::string& text) {
    json doc = parse_document(text);
    GnfPtr g = gnf_from_node(doc, "sentence");
    validate_gnf(g);
    return g;
}

std::string gnf_to_json(const GnfPtr& g) {
    validate_gnf(g);
    return gnf_to_node(g).dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open '" + path + "' for reading");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DomainError("cannot open '" + path + "' for writing");
    out << content;
    if (!out)
        throw DomainError("failed writing '" + path + "'");
}

Structure load_structure(const std::string& path) {
    try {
        return structure_from_json(read_file(path));
    } catch (const DomainError& e) {
        throw DomainError(path + ": " + e.what());
    }
}

void save_structure(const Structure& s, const std::string& path) {
    write_file(path, structure_to_json(s));
}

GnfPtr load_gnf(const std::string& path) {
    try {
        return gnf_from_json(read_file(path));
    } catch (const DomainError& e) {
        throw DomainError(path + ": " + e.what());
    }
}

void save_gnf(const GnfPtr& g, const std::string& path) {
    write_file(path, gnf_to_json(g));
}

FormulaPtr load_formula(const std::string& path) {
    std::string text = read_file(path);
    try {
        return parse_formula(text);
    } catch (const ParseError& e) {
        throw DomainError(path + ": " + e.what());
    }
}

} // namespace folocal

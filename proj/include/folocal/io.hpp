#pragma once

#include <string>

#include "folocal/gnf.hpp"
#include "folocal/structure.hpp"

namespace folocal {

/// Structure document:
///   { "vocabulary": [{"name": "E", "arity": 2}, ...],
///     "universe": n,
///     "relations": {"E": [[0,1], ...], ...} }
/// Elements are 0-based; every error message names the offending relation
/// and tuple index.
Structure structure_from_json(const std::string& text);
std::string structure_to_json(const Structure& s);

Structure load_structure(const std::string& path);
void save_structure(const Structure& s, const std::string& path);

/// Sentence document: a Boolean tree of
///   {"op": "and"|"or"|"not", "children": [...]}
/// nodes over {"op": "leaf", "leaf": {"r": R, "m": M, "psi": "<formula>"}}
/// leaves, where psi uses the concrete formula syntax with free variable x.
GnfPtr gnf_from_json(const std::string& text);
std::string gnf_to_json(const GnfPtr& g);

GnfPtr load_gnf(const std::string& path);
void save_gnf(const GnfPtr& g, const std::string& path);

/// Whole file parsed as one formula.
FormulaPtr load_formula(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace folocal

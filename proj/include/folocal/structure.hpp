#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace folocal {

/// Raised when a structure, formula, or file violates a contract.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RelationSymbol {
    std::string name;
    int arity = 0;
};

/// A finite set of relation symbols with fixed arities. Symbol order is
/// the order of insertion and is preserved everywhere downstream.
class Vocabulary {
public:
    Vocabulary() = default;

    int add(std::string name, int arity);

    int index_of(std::string_view name) const;          // -1 if absent
    bool contains(std::string_view name) const { return index_of(name) >= 0; }
    const RelationSymbol& symbol(int index) const { return symbols_.at(index); }
    int size() const { return static_cast<int>(symbols_.size()); }
    int max_arity() const;

    const std::vector<RelationSymbol>& symbols() const { return symbols_; }

private:
    std::vector<RelationSymbol> symbols_;
    std::unordered_map<std::string, int> index_;
};

struct TupleHash {
    std::size_t operator()(const std::vector<int>& t) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : t)
            h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
        return h;
    }
};

/// A finite relational structure over universe {0, ..., n-1}. Tuples are
/// deduplicated on insertion; iteration follows insertion order. Immutable
/// once fully built (no removal API), so concurrent reads are safe.
class Structure {
public:
    Structure(Vocabulary vocabulary, int universe_size);

    void add_tuple(int rel_index, std::span<const int> tuple);
    void add_tuple(std::string_view rel_name, std::span<const int> tuple);
    void add_tuple(std::string_view rel_name, std::initializer_list<int> tuple);

    bool has_tuple(int rel_index, std::span<const int> tuple) const;

    int universe_size() const { return universe_size_; }
    const Vocabulary& vocabulary() const { return vocabulary_; }
    int relation_count() const { return static_cast<int>(relations_.size()); }

    std::size_t tuple_count(int rel_index) const { return relations_.at(rel_index).tuples.size(); }
    const std::vector<std::vector<int>>& tuples(int rel_index) const {
        return relations_.at(rel_index).tuples;
    }

    /// n + sum over relations of arity * tuple count.
    std::uint64_t total_size() const;

private:
    struct Relation {
        std::vector<std::vector<int>> tuples;
        std::unordered_set<std::vector<int>, TupleHash> index;
    };

    Vocabulary vocabulary_;
    int universe_size_ = 0;
    std::vector<Relation> relations_;
};

struct SizeReport {
    std::uint64_t universe = 0;
    std::uint64_t total_size = 0;
};

SizeReport size_report(const Structure& s);

/// Element -> incident (relation, tuple) pairs; built once, shared by the
/// piece extraction machinery so extracting a piece costs time proportional
/// to the piece, not to the whole structure.
class IncidenceIndex {
public:
    explicit IncidenceIndex(const Structure& s);

    struct Entry {
        int rel;
        std::uint32_t tuple;
    };

    std::span<const Entry> incident(int element) const {
        return {entries_.data() + offsets_[element],
                offsets_[element + 1] - offsets_[element]};
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Entry> entries_;
};

} // namespace folocal

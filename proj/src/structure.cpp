#include "folocal/structure.hpp"

#include <algorithm>

namespace folocal {

int Vocabulary::add(std::string name, int arity) {
    if (name.empty())
        throw DomainError("relation symbol name must be non-empty");
    if (arity < 1)
        throw DomainError("relation symbol '" + name + "' must have arity >= 1");
    if (contains(name))
        throw DomainError("duplicate relation symbol '" + name + "'");
    int idx = static_cast<int>(symbols_.size());
    index_.emplace(name, idx);
    symbols_.push_back(RelationSymbol{std::move(name), arity});
    return idx;
}

int Vocabulary::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

int Vocabulary::max_arity() const {
    int m = 0;
    for (const auto& s : symbols_)
        m = std::max(m, s.arity);
    return m;
}

Structure::Structure(Vocabulary vocabulary, int universe_size)
    : vocabulary_(std::move(vocabulary)), universe_size_(universe_size) {
    if (universe_size < 1)
        throw DomainError("universe must be non-empty");
    relations_.resize(static_cast<std::size_t>(vocabulary_.size()));
}

void Structure::add_tuple(int rel_index, std::span<const int> tuple) {
    if (rel_index < 0 || rel_index >= vocabulary_.size())
        throw DomainError("relation index out of range");
    const auto& sym = vocabulary_.symbol(rel_index);
    if (static_cast<int>(tuple.size()) != sym.arity)
        throw DomainError("tuple for '" + sym.name + "' has length " +
                          std::to_string(tuple.size()) + ", expected arity " +
                          std::to_string(sym.arity));
    for (int v : tuple)
        if (v < 0 || v >= universe_size_)
            throw DomainError("tuple element " + std::to_string(v) +
                              " outside universe of size " + std::to_string(universe_size_));
    std::vector<int> t(tuple.begin(), tuple.end());
    auto& rel = relations_[rel_index];
    if (rel.index.insert(t).second)
        rel.tuples.push_back(std::move(t));
}

void Structure::add_tuple(std::string_view rel_name, std::span<const int> tuple) {
    int idx = vocabulary_.index_of(rel_name);
    if (idx < 0)
        throw DomainError("unknown relation symbol '" + std::string(rel_name) + "'");
    add_tuple(idx, tuple);
}

void Structure::add_tuple(std::string_view rel_name, std::initializer_list<int> tuple) {
    add_tuple(rel_name, std::span<const int>(tuple.begin(), tuple.size()));
}

bool Structure::has_tuple(int rel_index, std::span<const int> tuple) const {
    if (rel_index < 0 || rel_index >= vocabulary_.size())
        throw DomainError("relation index out of range");
    const auto& rel = relations_[rel_index];
    std::vector<int> t(tuple.begin(), tuple.end());
    return rel.index.contains(t);
}

std::uint64_t Structure::total_size() const {
    std::uint64_t total = static_cast<std::uint64_t>(universe_size_);
    for (int r = 0; r < relation_count(); ++r)
        total += static_cast<std::uint64_t>(vocabulary_.symbol(r).arity) * relations_[r].tuples.size();
    return total;
}

SizeReport size_report(const Structure& s) {
    return SizeReport{static_cast<std::uint64_t>(s.universe_size()), s.total_size()};
}

namespace {

// Distinct elements of a short tuple, via linear scan of the prefix.
template <typename F>
void for_each_distinct(const std::vector<int>& tuple, F&& f) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i && !seen; ++j)
            seen = tuple[j] == tuple[i];
        if (!seen)
            f(tuple[i]);
    }
}

} // namespace

IncidenceIndex::IncidenceIndex(const Structure& s) {
    int n = s.universe_size();
    std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 0; r < s.relation_count(); ++r)
        for (const auto& t : s.tuples(r))
            for_each_distinct(t, [&](int v) { ++counts[static_cast<std::size_t>(v) + 1]; });
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v)
        offsets_[static_cast<std::size_t>(v) + 1] = offsets_[v] + counts[static_cast<std::size_t>(v) + 1];
    entries_.resize(offsets_[static_cast<std::size_t>(n)]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (int r = 0; r < s.relation_count(); ++r) {
        const auto& tuples = s.tuples(r);
        for (std::uint32_t ti = 0; ti < tuples.size(); ++ti)
            for_each_distinct(tuples[ti], [&](int v) {
                entries_[cursor[static_cast<std::size_t>(v)]++] = Entry{r, ti};
            });
    }
}

} // namespace folocal

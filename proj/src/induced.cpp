#include "folocal/induced.hpp"

#include <algorithm>

namespace folocal {

int InducedPiece::to_local(int parent_element) const {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent_element);
    if (it != to_parent.end() && *it == parent_element)
        return static_cast<int>(it - to_parent.begin());
    return -1;
}

PieceExtractor::PieceExtractor(const Structure& s) : parent_(s), index_(s) {
    member_stamp_.assign(static_cast<std::size_t>(s.universe_size()), 0);
    local_id_.assign(static_cast<std::size_t>(s.universe_size()), -1);
    tuple_base_.resize(static_cast<std::size_t>(s.relation_count()) + 1, 0);
    for (int r = 0; r < s.relation_count(); ++r)
        tuple_base_[static_cast<std::size_t>(r) + 1] =
            tuple_base_[r] + s.tuple_count(r);
    tuple_stamp_.assign(tuple_base_.back(), 0);
}

InducedPiece PieceExtractor::extract(std::span<const int> elements) {
    ++epoch_;
    std::vector<int> sorted(elements.begin(), elements.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int e : sorted)
        if (e < 0 || e >= parent_.universe_size())
            throw DomainError("piece element outside universe");

    for (std::size_t i = 0; i < sorted.size(); ++i) {
        member_stamp_[static_cast<std::size_t>(sorted[i])] = epoch_;
        local_id_[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
    }

    InducedPiece piece{Structure(parent_.vocabulary(), static_cast<int>(sorted.size())),
                       sorted};

    std::vector<int> local_tuple;
    for (int e : sorted) {
        for (const auto& entry : index_.incident(e)) {
            std::size_t key = tuple_base_[static_cast<std::size_t>(entry.rel)] + entry.tuple;
            if (tuple_stamp_[key] == epoch_)
                continue;
            tuple_stamp_[key] = epoch_;
            const auto& t = parent_.tuples(entry.rel)[entry.tuple];
            bool inside = true;
            for (int v : t)
                if (member_stamp_[static_cast<std::size_t>(v)] != epoch_) {
                    inside = false;
                    break;
                }
            if (!inside)
                continue;
            local_tuple.resize(t.size());
            for (std::size_t i = 0; i < t.size(); ++i)
                local_tuple[i] = local_id_[static_cast<std::size_t>(t[i])];
            piece.structure.add_tuple(entry.rel, local_tuple);
        }
    }
    return piece;
}

InducedPiece induced_substructure(const Structure& s, std::span<const int> elements) {
    PieceExtractor extractor(s);
    return extractor.extract(elements);
}

} // namespace folocal

#pragma once

#include <span>
#include <vector>

#include "folocal/structure.hpp"

namespace folocal {

/// An induced substructure <B> together with the maps between the local
/// universe {0, ..., |B|-1} and the elements of the parent structure.
/// to_parent[i] is the parent element of local element i; elements keep
/// their relative order, so to_parent is sorted ascending.
struct InducedPiece {
    Structure structure;
    std::vector<int> to_parent;

    int to_local(int parent_element) const;   // -1 if absent
};

/// One-shot extraction; builds its own incidence index.
InducedPiece induced_substructure(const Structure& s, std::span<const int> elements);

/// Repeated extraction against one parent structure. Keeps the incidence
/// index and epoch-stamped scratch arrays alive, so each call costs time
/// proportional to the extracted piece.
class PieceExtractor {
public:
    explicit PieceExtractor(const Structure& s);

    InducedPiece extract(std::span<const int> elements);

private:
    const Structure& parent_;
    IncidenceIndex index_;
    std::vector<std::uint32_t> member_stamp_;
    std::vector<int> local_id_;
    std::vector<std::uint32_t> tuple_stamp_;     // per (rel, tuple), flattened
    std::vector<std::size_t> tuple_base_;
    std::uint32_t epoch_ = 0;
};

} // namespace folocal

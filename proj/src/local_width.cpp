#include "folocal/local_width.hpp"

#include <algorithm>

#include "folocal/gaifman.hpp"
#include "folocal/induced.hpp"
#include "folocal/treewidth.hpp"

namespace folocal {

std::vector<int> local_tree_width_profile(const Structure& s, int r_max) {
    if (r_max < 0)
        throw DomainError("profile radius must be >= 0");
    GaifmanGraph g(s);
    PieceExtractor extractor(s);
    BfsScratch scratch;
    scratch.reset(g.size());

    std::vector<int> profile(static_cast<std::size_t>(r_max) + 1, 0);
    for (int r = 0; r <= r_max; ++r) {
        int widest = 0;
        for (int a = 0; a < s.universe_size(); ++a) {
            int src[1] = {a};
            auto ball = scratch.ball(g, src, r);
            auto piece = extractor.extract(ball);
            int width = piece.structure.universe_size() <= 12
                            ? exact_width(piece.structure)
                            : heuristic_width(piece.structure);
            widest = std::max(widest, width);
        }
        profile[static_cast<std::size_t>(r)] = widest;
    }
    return profile;
}

} // namespace folocal

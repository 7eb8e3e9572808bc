#include "folocal/generators.hpp"

#include <algorithm>
#include <random>

namespace folocal {

namespace {

Vocabulary graph_vocabulary() {
    Vocabulary v;
    v.add("E", 2);
    return v;
}

void add_edge(Structure& s, int u, int v) {
    s.add_tuple("E", {u, v});
    s.add_tuple("E", {v, u});
}

} // namespace

Structure gen_grid(int width, int height) {
    if (width < 1 || height < 1)
        throw DomainError("grid sides must be >= 1");
    Structure s(graph_vocabulary(), width * height);
    auto id = [width](int row, int col) { return row * width + col; };
    for (int row = 0; row < height; ++row)
        for (int col = 0; col < width; ++col) {
            if (col + 1 < width)
                add_edge(s, id(row, col), id(row, col + 1));
            if (row + 1 < height)
                add_edge(s, id(row, col), id(row + 1, col));
        }
    return s;
}

Structure gen_cycle(int n) {
    if (n < 1)
        throw DomainError("cycle needs at least one element");
    Structure s(graph_vocabulary(), n);
    for (int v = 0; v + 1 < n; ++v)
        add_edge(s, v, v + 1);
    if (n > 2)
        add_edge(s, n - 1, 0);
    return s;
}

Structure gen_rand_deg(int n, int deg, std::uint64_t seed) {
    if (n < 1)
        throw DomainError("graph needs at least one element");
    if (deg < 1 || deg >= n)
        throw DomainError("degree bound must satisfy 1 <= deg < n");
    Structure s(graph_vocabulary(), n);
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::mt19937_64 rng(seed);
    std::uint64_t target = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(deg) / 2;
    std::uint64_t trials = 10 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(deg);
    std::uint64_t added = 0;
    for (std::uint64_t t = 0; t < trials && added < target; ++t) {
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u == v || degree[static_cast<std::size_t>(u)] >= deg ||
            degree[static_cast<std::size_t>(v)] >= deg)
            continue;
        int tuple[2] = {u, v};
        if (s.has_tuple(0, tuple))
            continue;
        add_edge(s, u, v);
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
        ++added;
    }
    return s;
}

SetCoverInstance gen_setcover(int ground, int sets, int freq, int cover, std::uint64_t seed) {
    if (ground < 1 || sets < 1)
        throw DomainError("set-cover instance needs ground elements and sets");
    if (cover < 1 || cover > sets || cover > ground)
        throw DomainError("planted cover size must satisfy 1 <= cover <= min(sets, ground)");
    if (freq < 1)
        throw DomainError("frequency cap must be >= 1");

    Vocabulary vocab;
    vocab.add("E", 2);
    vocab.add("P", 1);
    Structure s(vocab, ground + sets);

    for (int v = 0; v < ground; ++v)
        s.add_tuple("P", {v});

    auto set_id = [ground](int i) { return ground + i; };
    std::mt19937_64 rng(seed);

    // Blocks partition the ground set; block b's elements are those with
    // index % cover == b, and its first element is the private one.
    std::vector<int> frequency(static_cast<std::size_t>(ground), 0);
    std::vector<char> is_private(static_cast<std::size_t>(ground), 0);
    for (int b = 0; b < cover; ++b) {
        is_private[static_cast<std::size_t>(b)] = 1; // elements 0..cover-1 lead the blocks
        for (int v = b; v < ground; v += cover) {
            s.add_tuple("E", {v, set_id(b)});
            ++frequency[static_cast<std::size_t>(v)];
        }
    }

    std::vector<int> open; // non-private elements with spare frequency
    for (int v = cover; v < ground; ++v)
        if (frequency[static_cast<std::size_t>(v)] < freq)
            open.push_back(v);

    int block_size = (ground + cover - 1) / cover;
    for (int d = cover; d < sets; ++d) {
        std::erase_if(open, [&](int v) { return frequency[static_cast<std::size_t>(v)] >= freq; });
        if (open.empty())
            break; // decoy sets stay empty once every element is saturated
        int want = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(block_size));
        std::vector<int> chosen;
        for (int pick = 0; pick < want && !open.empty(); ++pick) {
            std::size_t idx = static_cast<std::size_t>(rng() % open.size());
            int v = open[idx];
            chosen.push_back(v);
            open.erase(open.begin() + static_cast<std::ptrdiff_t>(idx));
        }
        for (int v : chosen) {
            s.add_tuple("E", {v, set_id(d)});
            ++frequency[static_cast<std::size_t>(v)];
            if (frequency[static_cast<std::size_t>(v)] < freq)
                open.push_back(v);
        }
    }

    SetCoverInstance out{std::move(s), ground, sets, cover};
    return out;
}

} // namespace folocal

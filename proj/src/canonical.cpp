#include "ramseykit/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace ramseykit {

namespace {

// Equitable refinement. Vertex keys collect, per incident tuple, the symbol,
// the tuple's color pattern, and which slots hold the vertex itself. Keys are
// isomorphism-invariant, so equal inputs up to relabeling refine identically.
void refine(const Structure& a, std::vector<int>& color) {
    const int n = a.size();
    while (true) {
        // key = (old color, sorted multiset of incidence tokens)
        std::vector<std::vector<std::vector<int>>> tokens(static_cast<size_t>(n));
        for (int s = 0; s < a.signature().count(); ++s) {
            for (const auto& t : a.tuples(s)) {
                for (size_t slot = 0; slot < t.size(); ++slot) {
                    int v = t[slot];
                    std::vector<int> tok;
                    tok.reserve(t.size() + 2);
                    tok.push_back(s);
                    tok.push_back(static_cast<int>(slot));
                    for (int w : t)
                        tok.push_back(w == v ? -1 : color[static_cast<size_t>(w)]);
                    tokens[static_cast<size_t>(v)].push_back(std::move(tok));
                }
            }
        }
        std::map<std::pair<int, std::vector<std::vector<int>>>, int> ranks;
        std::vector<std::pair<int, std::vector<std::vector<int>>>> keys;
        keys.reserve(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& tk = tokens[static_cast<size_t>(v)];
            std::sort(tk.begin(), tk.end());
            keys.emplace_back(color[static_cast<size_t>(v)], std::move(tk));
            ranks.emplace(keys.back(), 0);
        }
        int next = 0;
        for (auto& [key, rank] : ranks) rank = next++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            int c = ranks.at(keys[static_cast<size_t>(v)]);
            if (c != color[static_cast<size_t>(v)]) changed = true;
            color[static_cast<size_t>(v)] = c;
        }
        if (!changed) break;
    }
}

int first_non_singleton_cell(const std::vector<int>& color, int n) {
    std::vector<int> count(static_cast<size_t>(n), 0);
    for (int c : color) ++count[static_cast<size_t>(c)];
    int best = -1;
    for (int v = 0; v < n; ++v) {
        int c = color[static_cast<size_t>(v)];
        if (count[static_cast<size_t>(c)] > 1 && (best < 0 || c < best)) best = c;
    }
    return best;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); }
};

struct CanonSearch {
    const Structure& a;
    int n;
    std::optional<Structure> best;
    std::vector<int> best_perm;      // vertex -> canonical index of current best
    Dsu orbits;                      // automorphism orbits discovered at leaves

    explicit CanonSearch(const Structure& s)
        : a(s), n(s.size()), orbits(s.size()) {}

    // color vector is an ordered partition; discrete -> candidate labeling
    void run(std::vector<int> color, int depth) {
        refine(a, color);
        int cell = first_non_singleton_cell(color, n);
        if (cell < 0) {
            std::vector<int> perm(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) perm[static_cast<size_t>(v)] = color[static_cast<size_t>(v)];
            Structure candidate = a.relabeled(perm);
            if (!best || candidate.encoding() < best->encoding()) {
                best = std::move(candidate);
                best_perm = perm;
            } else if (candidate.encoding() == best->encoding()) {
                // perm and best_perm induce an automorphism of a
                std::vector<int> inv(static_cast<size_t>(n));
                for (int v = 0; v < n; ++v)
                    inv[static_cast<size_t>(best_perm[static_cast<size_t>(v)])] = v;
                for (int v = 0; v < n; ++v)
                    orbits.unite(v, inv[static_cast<size_t>(perm[static_cast<size_t>(v)])]);
            }
            return;
        }
        std::vector<int> seen_roots;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<size_t>(v)] != cell) continue;
            if (depth == 0) {
                // orbit pruning is sound at the root: equivalent choices
                // produce the same candidate set
                int rep = orbits.find(v);
                bool skip = false;
                for (int r : seen_roots)
                    if (orbits.find(r) == rep) { skip = true; break; }
                if (skip) continue;
                seen_roots.push_back(v);
            }
            std::vector<int> child = color;
            for (int w = 0; w < n; ++w)
                child[static_cast<size_t>(w)] =
                    2 * child[static_cast<size_t>(w)] + (w == v ? 0 : 1);
            run(std::move(child), depth + 1);
        }
    }
};

} // namespace

Structure canonical_form(const Structure& a) {
    if (a.total_tuples() == 0) return a; // every relabeling is identical
    CanonSearch search(a);
    search.run(std::vector<int>(static_cast<size_t>(a.size()), 0), 0);
    return *search.best;
}

} // namespace ramseykit

#include "ramseykit/embedding.hpp"

#include <algorithm>
#include <set>

#include "ramseykit/errors.hpp"

namespace ramseykit {

namespace {

void require_same_signature(const Structure& a, const Structure& b, const char* op) {
    if (a.signature() != b.signature())
        throw InputError(std::string(op) + ": signature mismatch");
}

// Checks every tuple over the assigned prefix {0..last} that mentions `last`.
// Preserve and reflect: membership must agree between source and target.
bool consistent_at(const Structure& a, const Structure& b,
                   const std::vector<int>& map, int last) {
    for (int s = 0; s < a.signature().count(); ++s) {
        int arity = a.signature().at(s).arity;
        Tuple t(static_cast<size_t>(arity), 0);
        // odometer over {0..last}^arity, skipping tuples not mentioning `last`
        while (true) {
            bool mentions = false;
            for (int v : t)
                if (v == last) { mentions = true; break; }
            if (mentions) {
                if (a.has_tuple(s, t) != b.has_mapped_tuple(s, t, map))
                    return false;
            }
            int i = arity - 1;
            while (i >= 0 && t[static_cast<size_t>(i)] == last) {
                t[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++t[static_cast<size_t>(i)];
        }
    }
    return true;
}

// DFS in ascending value order; visit() on each complete embedding map.
// Returns false if visit() stopped the search.
template <typename Visit>
bool search_embeddings(const Structure& a, const Structure& b, Visit&& visit) {
    const int n = a.size(), m = b.size();
    if (n > m) return true;
    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(m), false);
    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == n) return visit(map);
        for (int v = 0; v < m; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            map[static_cast<size_t>(pos)] = v;
            if (consistent_at(a, b, map, pos)) {
                used[static_cast<size_t>(v)] = true;
                bool keep_going = self(self, pos + 1);
                used[static_cast<size_t>(v)] = false;
                if (!keep_going) return false;
            }
        }
        map[static_cast<size_t>(pos)] = -1;
        return true;
    };
    return rec(rec, 0);
}

} // namespace

Embedding Embedding::make(StructurePtr source, StructurePtr target, std::vector<int> map) {
    if (!source || !target) throw InputError("embedding: null structure");
    require_same_signature(*source, *target, "embedding");
    if (static_cast<int>(map.size()) != source->size())
        throw InputError("embedding: map length must equal source size");
    std::vector<bool> used(static_cast<size_t>(target->size()), false);
    for (int v : map) {
        if (v < 0 || v >= target->size())
            throw InputError("embedding: map value out of range");
        if (used[static_cast<size_t>(v)])
            throw InputError("embedding: map not injective");
        used[static_cast<size_t>(v)] = true;
    }
    for (int s = 0; s < source->signature().count(); ++s) {
        int arity = source->signature().at(s).arity;
        Tuple t(static_cast<size_t>(arity), 0);
        while (true) {
            if (source->has_tuple(s, t) != target->has_mapped_tuple(s, t, map))
                throw InputError("embedding: map does not preserve and reflect '" +
                                 source->signature().at(s).name + "'");
            int i = arity - 1;
            while (i >= 0 && t[static_cast<size_t>(i)] == source->size() - 1) {
                t[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++t[static_cast<size_t>(i)];
        }
    }
    return Embedding{std::move(source), std::move(target), std::move(map)};
}

Embedding Embedding::identity(StructurePtr a) {
    std::vector<int> map(static_cast<size_t>(a->size()));
    for (int i = 0; i < a->size(); ++i) map[static_cast<size_t>(i)] = i;
    return Embedding{a, a, std::move(map)};
}

std::vector<int> Embedding::image_points() const {
    std::vector<int> pts = map;
    std::sort(pts.begin(), pts.end());
    return pts;
}

Embedding Embedding::compose(const Embedding& outer, const Embedding& inner) {
    if (*inner.target != *outer.source)
        throw InputError("compose: inner target differs from outer source");
    std::vector<int> map(inner.map.size());
    for (size_t i = 0; i < inner.map.size(); ++i)
        map[i] = outer.map[static_cast<size_t>(inner.map[i])];
    return Embedding{inner.source, outer.target, std::move(map)};
}

std::vector<Embedding> enumerate_embeddings(StructurePtr a, StructurePtr b) {
    require_same_signature(*a, *b, "enumerate_embeddings");
    std::vector<Embedding> out;
    search_embeddings(*a, *b, [&](const std::vector<int>& map) {
        out.push_back(Embedding{a, b, map});
        return true;
    });
    return out;
}

std::vector<Embedding> enumerate_embeddings(const Structure& a, const Structure& b) {
    return enumerate_embeddings(std::make_shared<Structure>(a),
                                std::make_shared<Structure>(b));
}

bool exists_embedding(const Structure& a, const Structure& b) {
    require_same_signature(a, b, "exists_embedding");
    bool found = false;
    search_embeddings(a, b, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

std::vector<Copy> enumerate_copies(StructurePtr a, StructurePtr b) {
    require_same_signature(*a, *b, "enumerate_copies");
    std::set<std::vector<int>> images;
    search_embeddings(*a, *b, [&](const std::vector<int>& map) {
        std::vector<int> pts = map;
        std::sort(pts.begin(), pts.end());
        images.insert(std::move(pts));
        return true;
    });
    std::vector<Copy> out;
    out.reserve(images.size());
    for (const auto& pts : images) out.push_back(Copy{b, pts});
    return out;
}

std::vector<Copy> enumerate_copies(const Structure& a, const Structure& b) {
    return enumerate_copies(std::make_shared<Structure>(a),
                            std::make_shared<Structure>(b));
}

std::vector<Embedding> automorphisms(const Structure& a) {
    return enumerate_embeddings(a, a);
}

std::size_t automorphism_count(const Structure& a) {
    std::size_t n = 0;
    search_embeddings(a, a, [&](const std::vector<int>&) {
        ++n;
        return true;
    });
    return n;
}

bool is_rigid(const Structure& a) {
    std::size_t n = 0;
    search_embeddings(a, a, [&](const std::vector<int>&) {
        ++n;
        return n < 2;
    });
    return n == 1;
}

bool is_isomorphic(const Structure& a, const Structure& b) {
    require_same_signature(a, b, "is_isomorphic");
    if (a.size() != b.size()) return false;
    if (a.encoding() == b.encoding()) return true;
    return exists_embedding(a, b);
}

} // namespace ramseykit

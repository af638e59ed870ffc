#pragma once

#include <memory>
#include <vector>

#include "ramseykit/structure.hpp"

namespace ramseykit {

using StructurePtr = std::shared_ptr<const Structure>;

// Injective map that preserves and reflects every relation.
struct Embedding {
    StructurePtr source;
    StructurePtr target;
    std::vector<int> map; // map[v] = image of source vertex v

    // validates injectivity and preserve/reflect; throws InputError
    static Embedding make(StructurePtr source, StructurePtr target,
                          std::vector<int> map);

    static Embedding identity(StructurePtr a);

    bool is_bijective() const { return source->size() == target->size(); }
    std::vector<int> image_points() const; // sorted image set

    // outer(inner(x)); inner.target and outer.source must agree
    static Embedding compose(const Embedding& outer, const Embedding& inner);
};

// Subset of a host universe whose induced substructure realizes some pattern.
// Equality of copies is equality of point sets.
struct Copy {
    StructurePtr host;
    std::vector<int> points; // sorted ascending
};

// All embeddings of A into B, ordered lexicographically by map value
// sequence. Throws InputError on signature mismatch.
std::vector<Embedding> enumerate_embeddings(const Structure& a, const Structure& b);
std::vector<Embedding> enumerate_embeddings(StructurePtr a, StructurePtr b);

bool exists_embedding(const Structure& a, const Structure& b);

// Deduplicated sorted images of enumerate_embeddings, in lexicographic order.
std::vector<Copy> enumerate_copies(const Structure& a, const Structure& b);
std::vector<Copy> enumerate_copies(StructurePtr a, StructurePtr b);

// enumerate_embeddings(A, A); injective endomaps of a finite universe are
// automatically bijective.
std::vector<Embedding> automorphisms(const Structure& a);
std::size_t automorphism_count(const Structure& a);
bool is_rigid(const Structure& a);

bool is_isomorphic(const Structure& a, const Structure& b);

} // namespace ramseykit

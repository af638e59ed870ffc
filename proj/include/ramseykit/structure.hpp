#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "ramseykit/signature.hpp"

namespace ramseykit {

using Tuple = std::vector<int>;

// Finite relational structure on universe {0..n-1}. Immutable after
// construction; relation blocks are duplicate-free and kept sorted, so
// equal structures compare bit-equal.
class Structure {
public:
    // limits keep tuple encoding in one word
    static constexpr int kMaxSize = 255;
    static constexpr int kMaxArity = 8;

    Structure(Signature sig, int size,
              std::vector<std::vector<Tuple>> relations);

    // structure with all relation blocks empty
    static Structure empty(Signature sig, int size);

    const Signature& signature() const { return sig_; }
    int size() const { return size_; }

    const std::vector<Tuple>& tuples(int sym) const {
        return relations_[static_cast<size_t>(sym)];
    }
    const std::vector<std::vector<Tuple>>& relations() const { return relations_; }

    bool has_tuple(int sym, const Tuple& t) const;
    // tuple given through a vertex map (avoids building the mapped tuple)
    bool has_mapped_tuple(int sym, const Tuple& t, const std::vector<int>& map) const;

    std::size_t total_tuples() const;

    // comparison key: size then relation blocks in signature order;
    // only meaningful between structures over the same signature
    const std::vector<std::int64_t>& encoding() const { return encoding_; }

    bool operator==(const Structure& other) const;
    bool operator!=(const Structure& other) const { return !(*this == other); }
    // signature-compatible ordering used for deterministic enumeration output
    bool operator<(const Structure& other) const { return encoding_ < other.encoding_; }

    // relabel through a bijection: vertex v becomes perm[v]
    Structure relabeled(const std::vector<int>& perm) const;

private:
    Signature sig_;
    int size_ = 0;
    std::vector<std::vector<Tuple>> relations_;
    std::vector<std::unordered_set<std::uint64_t>> packed_;
    std::vector<std::int64_t> encoding_;

    void build_index();
};

// Substructure induced on a nonempty, strictly ascending point set,
// re-indexed to {0..|points|-1}. points[i] is the host vertex of new index i,
// so `points` doubles as the order-preserving re-indexing map.
Structure induced_substructure(const Structure& host, const std::vector<int>& points);

// Drop every symbol outside L; L must be a sub-signature of A's.
Structure reduct(const Structure& a, const Signature& l);

// Append new symbols (disjoint names) with the given relation blocks.
Structure expand(const Structure& a, const Signature& extra,
                 const std::vector<std::vector<Tuple>>& extra_relations);

// Canonical text serialization: JSON with signature / size / relations,
// tuples sorted lexicographically. Bit-exact for equal structures.
std::string to_document(const Structure& a);
Structure structure_from_document(const std::string& text);

// Strict linear order 0 < 1 < ... < n-1 over the one-symbol signature {"<"}.
Structure linear_order(int n);

} // namespace ramseykit

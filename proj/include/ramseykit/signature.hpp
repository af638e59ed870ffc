#pragma once

#include <string>
#include <vector>

namespace ramseykit {

struct Symbol {
    std::string name;
    int arity = 0;

    bool operator==(const Symbol&) const = default;
};

// Ordered list of relation symbols. The list order is canonical: it fixes
// tuple-block ordering in every serialization and comparison.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<Symbol> symbols);

    const std::vector<Symbol>& symbols() const { return symbols_; }
    int count() const { return static_cast<int>(symbols_.size()); }
    bool empty() const { return symbols_.empty(); }
    const Symbol& at(int i) const { return symbols_.at(static_cast<size_t>(i)); }

    // -1 when absent
    int index_of(const std::string& name) const;
    bool contains(const Symbol& sym) const;

    // every symbol of `sub` present here with the same arity
    bool is_superset_of(const Signature& sub) const;

    // symbols of this signature that are not in `base`
    std::vector<Symbol> minus(const Signature& base) const;

    // this signature followed by `extra` (names must stay unique)
    Signature extended_with(const std::vector<Symbol>& extra) const;

    bool operator==(const Signature&) const = default;

private:
    std::vector<Symbol> symbols_;
};

} // namespace ramseykit

#include "ramseykit/signature.hpp"

#include <unordered_set>

#include "ramseykit/errors.hpp"

namespace ramseykit {

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    std::unordered_set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.name.empty())
            throw InputError("signature: empty symbol name");
        if (s.arity < 1)
            throw InputError("signature: symbol '" + s.name + "' has arity < 1");
        if (!seen.insert(s.name).second)
            throw InputError("signature: duplicate symbol '" + s.name + "'");
    }
}

int Signature::index_of(const std::string& name) const {
    for (size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool Signature::contains(const Symbol& sym) const {
    int i = index_of(sym.name);
    return i >= 0 && symbols_[static_cast<size_t>(i)].arity == sym.arity;
}

bool Signature::is_superset_of(const Signature& sub) const {
    for (const auto& s : sub.symbols())
        if (!contains(s)) return false;
    return true;
}

std::vector<Symbol> Signature::minus(const Signature& base) const {
    std::vector<Symbol> out;
    for (const auto& s : symbols_)
        if (base.index_of(s.name) < 0) out.push_back(s);
    return out;
}

Signature Signature::extended_with(const std::vector<Symbol>& extra) const {
    std::vector<Symbol> all = symbols_;
    all.insert(all.end(), extra.begin(), extra.end());
    return Signature(std::move(all)); // re-validates uniqueness
}

} // namespace ramseykit

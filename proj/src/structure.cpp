#include "ramseykit/structure.hpp"

#include <algorithm>

#include <json.hpp>

#include "ramseykit/errors.hpp"

namespace ramseykit {

namespace {

std::uint64_t pack_tuple(const Tuple& t) {
    std::uint64_t key = 0;
    for (int v : t) key = (key << 8) | static_cast<std::uint64_t>(v);
    return key;
}

std::uint64_t pack_mapped(const Tuple& t, const std::vector<int>& map) {
    std::uint64_t key = 0;
    for (int v : t) key = (key << 8) | static_cast<std::uint64_t>(map[static_cast<size_t>(v)]);
    return key;
}

} // namespace

Structure::Structure(Signature sig, int size,
                     std::vector<std::vector<Tuple>> relations)
    : sig_(std::move(sig)), size_(size), relations_(std::move(relations)) {
    if (size_ < 1)
        throw InputError("structure: size must be >= 1 (got " + std::to_string(size_) + ")");
    if (size_ > kMaxSize)
        throw InputError("structure: size exceeds supported maximum");
    if (static_cast<int>(relations_.size()) != sig_.count())
        throw InputError("structure: one relation block per signature symbol required");
    for (int s = 0; s < sig_.count(); ++s) {
        const auto& sym = sig_.at(s);
        if (sym.arity > kMaxArity)
            throw InputError("structure: arity exceeds supported maximum");
        auto& block = relations_[static_cast<size_t>(s)];
        for (const auto& t : block) {
            if (static_cast<int>(t.size()) != sym.arity)
                throw InputError("structure: tuple arity mismatch for symbol '" + sym.name + "'");
            for (int v : t)
                if (v < 0 || v >= size_)
                    throw InputError("structure: tuple entry out of universe for symbol '" +
                                     sym.name + "'");
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
    }
    build_index();
}

Structure Structure::empty(Signature sig, int size) {
    std::vector<std::vector<Tuple>> rels(static_cast<size_t>(sig.count()));
    return Structure(std::move(sig), size, std::move(rels));
}

void Structure::build_index() {
    packed_.clear();
    packed_.resize(relations_.size());
    encoding_.clear();
    encoding_.push_back(size_);
    for (size_t s = 0; s < relations_.size(); ++s) {
        for (const auto& t : relations_[s]) packed_[s].insert(pack_tuple(t));
        encoding_.push_back(static_cast<std::int64_t>(relations_[s].size()));
        for (const auto& t : relations_[s])
            for (int v : t) encoding_.push_back(v);
    }
}

bool Structure::has_tuple(int sym, const Tuple& t) const {
    return packed_[static_cast<size_t>(sym)].count(pack_tuple(t)) > 0;
}

bool Structure::has_mapped_tuple(int sym, const Tuple& t, const std::vector<int>& map) const {
    return packed_[static_cast<size_t>(sym)].count(pack_mapped(t, map)) > 0;
}

std::size_t Structure::total_tuples() const {
    std::size_t n = 0;
    for (const auto& block : relations_) n += block.size();
    return n;
}

bool Structure::operator==(const Structure& other) const {
    return sig_ == other.sig_ && encoding_ == other.encoding_;
}

Structure Structure::relabeled(const std::vector<int>& perm) const {
    std::vector<std::vector<Tuple>> rels(relations_.size());
    for (size_t s = 0; s < relations_.size(); ++s) {
        rels[s].reserve(relations_[s].size());
        for (const auto& t : relations_[s]) {
            Tuple m(t.size());
            for (size_t i = 0; i < t.size(); ++i)
                m[i] = perm[static_cast<size_t>(t[i])];
            rels[s].push_back(std::move(m));
        }
    }
    return Structure(sig_, size_, std::move(rels));
}

Structure induced_substructure(const Structure& host, const std::vector<int>& points) {
    if (points.empty())
        throw InputError("induced_substructure: empty point set");
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i] < 0 || points[i] >= host.size())
            throw InputError("induced_substructure: point out of range");
        if (i > 0 && points[i] <= points[i - 1])
            throw InputError("induced_substructure: points must be strictly ascending");
    }
    std::vector<int> new_index(static_cast<size_t>(host.size()), -1);
    for (size_t i = 0; i < points.size(); ++i)
        new_index[static_cast<size_t>(points[i])] = static_cast<int>(i);

    std::vector<std::vector<Tuple>> rels(static_cast<size_t>(host.signature().count()));
    for (int s = 0; s < host.signature().count(); ++s) {
        for (const auto& t : host.tuples(s)) {
            Tuple m(t.size());
            bool inside = true;
            for (size_t i = 0; i < t.size(); ++i) {
                int ni = new_index[static_cast<size_t>(t[i])];
                if (ni < 0) { inside = false; break; }
                m[i] = ni;
            }
            if (inside) rels[static_cast<size_t>(s)].push_back(std::move(m));
        }
    }
    return Structure(host.signature(), static_cast<int>(points.size()), std::move(rels));
}

Structure reduct(const Structure& a, const Signature& l) {
    if (!a.signature().is_superset_of(l))
        throw InputError("reduct: target signature is not a sub-signature");
    std::vector<std::vector<Tuple>> rels;
    rels.reserve(static_cast<size_t>(l.count()));
    for (const auto& sym : l.symbols()) {
        int idx = a.signature().index_of(sym.name);
        rels.push_back(a.tuples(idx));
    }
    return Structure(l, a.size(), std::move(rels));
}

Structure expand(const Structure& a, const Signature& extra,
                 const std::vector<std::vector<Tuple>>& extra_relations) {
    if (static_cast<int>(extra_relations.size()) != extra.count())
        throw InputError("expand: one relation block per new symbol required");
    for (const auto& sym : extra.symbols())
        if (a.signature().index_of(sym.name) >= 0)
            throw InputError("expand: symbol '" + sym.name + "' already present");
    Signature sig = a.signature().extended_with(extra.symbols());
    std::vector<std::vector<Tuple>> rels = a.relations();
    rels.insert(rels.end(), extra_relations.begin(), extra_relations.end());
    return Structure(std::move(sig), a.size(), std::move(rels));
}

std::string to_document(const Structure& a) {
    nlohmann::ordered_json doc;
    doc["signature"] = nlohmann::ordered_json::array();
    for (const auto& sym : a.signature().symbols())
        doc["signature"].push_back({{"name", sym.name}, {"arity", sym.arity}});
    doc["size"] = a.size();
    doc["relations"] = nlohmann::ordered_json::object();
    for (int s = 0; s < a.signature().count(); ++s)
        doc["relations"][a.signature().at(s).name] = a.tuples(s); // already sorted
    return doc.dump(2);
}

Structure structure_from_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("structure document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("signature") || !doc.contains("size"))
        throw InputError("structure document: fields 'signature' and 'size' required");
    std::vector<Symbol> syms;
    for (const auto& s : doc.at("signature")) {
        if (!s.contains("name") || !s.contains("arity"))
            throw InputError("structure document: signature entries need 'name' and 'arity'");
        syms.push_back({s.at("name").get<std::string>(), s.at("arity").get<int>()});
    }
    Signature sig{syms};
    int size = doc.at("size").get<int>();
    std::vector<std::vector<Tuple>> rels(static_cast<size_t>(sig.count()));
    if (doc.contains("relations")) {
        for (const auto& [name, tuples] : doc.at("relations").items()) {
            int idx = sig.index_of(name);
            if (idx < 0)
                throw InputError("structure document: relation '" + name +
                                 "' not in signature");
            for (const auto& t : tuples)
                rels[static_cast<size_t>(idx)].push_back(t.get<Tuple>());
        }
    }
    return Structure(std::move(sig), size, std::move(rels));
}

Structure linear_order(int n) {
    if (n < 1) throw InputError("linear_order: size must be >= 1");
    std::vector<Tuple> less;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) less.push_back({i, j});
    return Structure(Signature{{{"<", 2}}}, n, {std::move(less)});
}

} // namespace ramseykit

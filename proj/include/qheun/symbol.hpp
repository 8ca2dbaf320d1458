#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace qheun {

// Interned parameter name. Ids are process-local; anything user-visible
// is ordered by name.
class Symbol {
public:
    Symbol() = default;
    explicit Symbol(std::string_view name);

    std::uint32_t id() const { return id_; }
    const std::string& name() const;

    friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
    friend bool operator!=(Symbol a, Symbol b) { return a.id_ != b.id_; }
    friend bool operator<(Symbol a, Symbol b) { return a.id_ < b.id_; }

    static const std::string& name_of(std::uint32_t id);
    static Symbol from_id(std::uint32_t id) {
        Symbol s;
        s.id_ = id;
        return s;
    }

private:
    std::uint32_t id_ = 0;
};

// Orders symbols by name (for printing and serialization).
struct SymbolNameLess {
    bool operator()(Symbol a, Symbol b) const { return a.name() < b.name(); }
};

bool valid_identifier(std::string_view s);

}  // namespace qheun

template <>
struct std::hash<qheun::Symbol> {
    std::size_t operator()(qheun::Symbol s) const noexcept { return s.id(); }
};

#include "qheun/symbol.hpp"

#include "qheun/errors.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace qheun {

namespace {

struct Registry {
    std::mutex mu;
    std::deque<std::string> names;
    std::unordered_map<std::string, std::uint32_t> ids;

    static Registry& get() {
        static Registry r;
        return r;
    }
};

}  // namespace

Symbol::Symbol(std::string_view name) {
    if (!valid_identifier(name))
        throw InputError("invalid identifier '" + std::string(name) + "'");
    auto& r = Registry::get();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.ids.find(std::string(name));
    if (it != r.ids.end()) {
        id_ = it->second;
        return;
    }
    id_ = static_cast<std::uint32_t>(r.names.size());
    r.names.emplace_back(name);
    r.ids.emplace(std::string(name), id_);
}

const std::string& Symbol::name_of(std::uint32_t id) {
    auto& r = Registry::get();
    std::lock_guard<std::mutex> lock(r.mu);
    return r.names.at(id);
}

const std::string& Symbol::name() const { return name_of(id_); }

bool valid_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

}  // namespace qheun

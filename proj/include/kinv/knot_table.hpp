#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "kinv/error.hpp"
#include "kinv/knots.hpp"

namespace kinv {

inline constexpr std::string_view kDefaultKnotTable = R"(# name: braid word (generators 1-based, negative = inverse)
unknot: strands=1;
3_1: 1 1 1
4_1: 1 -2 1 -2
5_1: 1 1 1 1 1
5_2: 1 1 1 2 -1 2
6_1: 1 1 2 -1 -3 2 -3
)";

/// Named braid words. Iteration order is sorted by name.
class KnotTable {
public:
    static KnotTable parse(std::string_view text) {
        KnotTable t;
        std::istringstream in{std::string(text)};
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            const auto colon = line.find(':');
            if (colon == std::string::npos)
                fail("SyntaxError", "knot table line " + std::to_string(lineno) + ": expected 'name: braid'");
            std::string name = line.substr(0, colon);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            if (name.empty()) fail("SyntaxError", "knot table line " + std::to_string(lineno) + ": empty name");
            if (t.entries_.count(name)) fail("DuplicateName", "knot table repeats '" + name + "'");
            t.entries_.emplace(name, parse_braid(line.substr(colon + 1)));
        }
        return t;
    }

    static KnotTable load(const std::string& path) {
        std::ifstream f(path);
        if (!f) fail("IOError", "cannot read knot table " + path);
        std::stringstream ss;
        ss << f.rdbuf();
        return parse(ss.str());
    }

    static const KnotTable& builtin() {
        static const KnotTable t = parse(kDefaultKnotTable);
        return t;
    }

    const std::map<std::string, BraidWord>& entries() const noexcept { return entries_; }
    bool contains(const std::string& name) const { return entries_.count(name) > 0; }

    const BraidWord& at(const std::string& name) const {
        const auto it = entries_.find(name);
        if (it == entries_.end()) fail("UnknownKnot", "no knot named '" + name + "'");
        return it->second;
    }

    /// A table name, or else a literal braid word.
    BraidWord resolve(const std::string& ref) const {
        if (const auto it = entries_.find(ref); it != entries_.end()) return it->second;
        return parse_braid(ref);
    }

private:
    std::map<std::string, BraidWord> entries_;
};

}  // namespace kinv

#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace residua {

// Ordered list of distinct variable names. The order is fixed at creation
// and is authoritative for exponent vectors, monomial orders, and basis
// enumeration.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw std::invalid_argument("VarSet: at least one variable required");
        for (const std::string& n : names_) {
            if (!valid_identifier(n))
                throw std::invalid_argument("VarSet: invalid variable name '" + n + "'");
        }
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("VarSet: duplicate variable name '" + names_[i] + "'");
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    static bool valid_identifier(const std::string& s) {
        if (s.empty()) return false;
        if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
        for (char c : s)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
        return true;
    }

    friend bool operator==(const VarSet&, const VarSet&) = default;

private:
    std::vector<std::string> names_;
};

}  // namespace residua

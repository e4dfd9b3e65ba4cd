#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "pbred/variable.hpp"

namespace pbred {

// Possibly-partial 0/1 assignment, kept sorted by variable index.
class Assignment {
public:
    Assignment() = default;

    Assignment(std::initializer_list<std::pair<var_index, bool>> values) {
        for (auto& [v, b] : values) set(v, b);
    }

    void set(var_index v, bool value) {
        auto it = std::lower_bound(values_.begin(), values_.end(), v,
                                   [](const auto& p, var_index x) { return p.first < x; });
        if (it != values_.end() && it->first == v)
            it->second = value;
        else
            values_.insert(it, {v, value});
    }

    std::optional<bool> get(var_index v) const {
        auto it = std::lower_bound(values_.begin(), values_.end(), v,
                                   [](const auto& p, var_index x) { return p.first < x; });
        if (it != values_.end() && it->first == v) return it->second;
        return std::nullopt;
    }

    bool covers(var_index v) const { return get(v).has_value(); }

    std::size_t size() const { return values_.size(); }

    bool empty() const { return values_.empty(); }

    const std::vector<std::pair<var_index, bool>>& values() const { return values_; }

    bool operator==(const Assignment&) const = default;

private:
    std::vector<std::pair<var_index, bool>> values_;
};

}  // namespace pbred

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pbred {

using var_index = std::uint32_t;

enum class VariableRole { generic, factor_p, factor_q, carry };

// Role metadata for one variable. Roles never affect arithmetic; they exist so
// encoders and reports can say "bit 3 of p" instead of "x7".
struct VariableInfo {
    VariableRole role = VariableRole::generic;
    // factor_p / factor_q: bit position. carry: source column.
    std::uint32_t position = 0;
    // carry only: weight slot k, meaning the carry lands k columns up with weight 2^k.
    std::uint32_t slot = 0;
};

// Relation between two variables that holds at every admissible state:
// x_b = 1 - x_a when complement is set, else x_b = x_a. Always a < b; the
// convention is that b is the variable a consumer eliminates.
struct VariableEquality {
    var_index a = 0;
    var_index b = 0;
    bool complement = false;

    auto operator<=>(const VariableEquality&) const = default;
};

class VariableRegistry {
public:
    var_index add(VariableInfo info) {
        infos_.push_back(info);
        return static_cast<var_index>(infos_.size() - 1);
    }

    std::size_t size() const { return infos_.size(); }

    VariableInfo info(var_index v) const {
        if (v < infos_.size()) return infos_[v];
        return VariableInfo{};
    }

    // Human-readable name; the wire format always uses x<index>.
    std::string name(var_index v) const {
        VariableInfo i = info(v);
        switch (i.role) {
            case VariableRole::factor_p: return "p" + std::to_string(i.position);
            case VariableRole::factor_q: return "q" + std::to_string(i.position);
            case VariableRole::carry:
                return "c" + std::to_string(i.position) + "_" + std::to_string(i.slot);
            default: return "x" + std::to_string(v);
        }
    }

private:
    std::vector<VariableInfo> infos_;
};

}  // namespace pbred

#include "pbred/enumeration.hpp"

#include <map>

#include "pbred/errors.hpp"

namespace pbred {

DenseEvaluator::DenseEvaluator(const Polynomial& p, const std::vector<var_index>& order) {
    if (order.size() > 64) throw TooManyVariablesError(order.size(), 64);
    std::map<var_index, unsigned> position;
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = static_cast<unsigned>(order.size() - 1 - i);

    fits64_ = p.max_abs_bound() < (Integer(1) << 62);
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t mask = 0;
        for (var_index v : m.variables()) {
            auto it = position.find(v);
            if (it == position.end()) throw UncoveredVariableError(v);
            mask |= std::uint64_t(1) << it->second;
        }
        if (fits64_)
            terms64_.emplace_back(mask, c.convert_to<long long>());
        else
            terms_big_.emplace_back(mask, c);
    }
}

Assignment assignment_from_state(const std::vector<var_index>& order, std::uint64_t state) {
    Assignment a;
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i) a.set(order[i], (state >> (n - 1 - i)) & 1);
    return a;
}

}  // namespace pbred

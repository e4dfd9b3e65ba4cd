#pragma once

#include <cstdint>
#include <vector>

#include "pbred/polynomial.hpp"

namespace pbred {

// Precompiled bitmask form of a polynomial for exhaustive scans over up to
// 64 variables. State k assigns order[0] the most significant bit, matching
// spectrum(): order.back() toggles fastest as k counts up. Variables outside
// `order` must not appear in the polynomial.
class DenseEvaluator {
public:
    DenseEvaluator(const Polynomial& p, const std::vector<var_index>& order);

    // All intermediate sums fit in int64 (checked via the absolute bound).
    bool fits64() const { return fits64_; }

    long long eval64(std::uint64_t state) const {
        long long sum = 0;
        for (const auto& [mask, c] : terms64_)
            if ((state & mask) == mask) sum += c;
        return sum;
    }

    Integer eval_big(std::uint64_t state) const {
        Integer sum = 0;
        for (const auto& [mask, c] : terms_big_)
            if ((state & mask) == mask) sum += c;
        return sum;
    }

    Integer eval(std::uint64_t state) const {
        return fits64_ ? Integer(eval64(state)) : eval_big(state);
    }

    bool is_zero_at(std::uint64_t state) const {
        return fits64_ ? eval64(state) == 0 : eval_big(state).is_zero();
    }

private:
    bool fits64_ = true;
    std::vector<std::pair<std::uint64_t, long long>> terms64_;
    std::vector<std::pair<std::uint64_t, Integer>> terms_big_;
};

// The assignment that DenseEvaluator state k stands for.
Assignment assignment_from_state(const std::vector<var_index>& order, std::uint64_t state);

}  // namespace pbred

#include "pbred/search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pbred/errors.hpp"

namespace pbred {

namespace {

constexpr std::uint32_t kNever = 0xffffffffu;  // variable outside the order

struct PreparedTerm {
    Integer coeff;
    std::vector<std::uint32_t> positions;
};

struct PreparedEquation {
    std::vector<PreparedTerm> lhs;
    std::vector<PreparedTerm> rhs;
};

std::vector<PreparedTerm> prepare_side(const Polynomial& side,
                                       const std::map<var_index, std::uint32_t>& position) {
    std::vector<PreparedTerm> out;
    out.reserve(side.terms().size());
    for (const auto& [m, c] : side.terms()) {
        PreparedTerm t{c, {}};
        t.positions.reserve(m.degree());
        for (var_index v : m.variables()) {
            auto it = position.find(v);
            t.positions.push_back(it == position.end() ? kNever : it->second);
        }
        out.push_back(std::move(t));
    }
    return out;
}

// Value interval of one side given the first `assigned` order positions.
// A term dies when any of its variables is assigned 0; it is certain when
// all are assigned 1; otherwise it only contributes to the maximum.
void side_interval(const std::vector<PreparedTerm>& side, const std::vector<std::uint8_t>& state,
                   std::size_t assigned, Integer& min_out, Integer& max_out) {
    min_out = 0;
    max_out = 0;
    for (const PreparedTerm& t : side) {
        bool dead = false;
        bool certain = true;
        for (std::uint32_t pos : t.positions) {
            if (pos < assigned) {
                if (!state[pos]) {
                    dead = true;
                    break;
                }
            } else {
                certain = false;
            }
        }
        if (dead) continue;
        max_out += t.coeff;
        if (certain) min_out += t.coeff;
    }
}

bool still_plausible(const PreparedEquation& eq, const std::vector<std::uint8_t>& state,
                     std::size_t assigned) {
    Integer lmin, lmax, rmin, rmax;
    side_interval(eq.lhs, state, assigned, lmin, lmax);
    side_interval(eq.rhs, state, assigned, rmin, rmax);
    return lmin <= rmax && rmin <= lmax;
}

}  // namespace

SearchFrontier bfs_plausible(const std::vector<BinaryEquation>& equations, std::uint64_t budget,
                             const std::vector<var_index>& order) {
    if (budget == 0) throw Error("state budget must be at least 1");
    {
        std::set<var_index> seen;
        for (var_index v : order)
            if (!seen.insert(v).second)
                throw Error("search order repeats variable x" + std::to_string(v));
    }

    std::map<var_index, std::uint32_t> position;
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = static_cast<std::uint32_t>(i);

    std::vector<PreparedEquation> prepared;
    std::vector<std::vector<std::size_t>> touched_by(order.size());
    for (const BinaryEquation& raw : equations) {
        BinaryEquation eq = raw.normalized();
        if (eq.is_trivial()) continue;
        PreparedEquation pe{prepare_side(eq.lhs, position), prepare_side(eq.rhs, position)};
        std::set<std::uint32_t> touches;
        for (const auto* side : {&pe.lhs, &pe.rhs})
            for (const PreparedTerm& t : *side)
                for (std::uint32_t pos : t.positions)
                    if (pos != kNever) touches.insert(pos);
        std::size_t idx = prepared.size();
        prepared.push_back(std::move(pe));
        for (std::uint32_t pos : touches) touched_by[pos].push_back(idx);
    }

    std::vector<std::uint8_t> empty_state;
    for (const PreparedEquation& eq : prepared)
        if (!still_plausible(eq, empty_state, 0))
            throw NoPlausibleStatesError("the equations exclude every state");

    SearchFrontier frontier;
    frontier.order = order;
    frontier.states.push_back({});

    for (std::size_t level = 0; level < order.size(); ++level) {
        if (frontier.states.size() > budget) break;
        std::vector<std::vector<std::uint8_t>> next;
        next.reserve(frontier.states.size() * 2);
        for (const std::vector<std::uint8_t>& state : frontier.states) {
            for (std::uint8_t value : {0, 1}) {
                std::vector<std::uint8_t> child = state;
                child.push_back(value);
                bool ok = true;
                for (std::size_t eq_idx : touched_by[level])
                    if (!still_plausible(prepared[eq_idx], child, level + 1)) {
                        ok = false;
                        break;
                    }
                if (ok) next.push_back(std::move(child));
            }
        }
        if (next.empty())
            throw NoPlausibleStatesError("every state is excluded after assigning x" +
                                         std::to_string(order[level]));
        frontier.states = std::move(next);
        frontier.assigned_count = level + 1;
    }
    return frontier;
}

PatternSet extract_patterns(const SearchFrontier& frontier, std::size_t degree_cap) {
    PatternSet out;
    const std::size_t k = frontier.assigned_count;
    const std::size_t s = frontier.states.size();
    if (k == 0 || s == 0) return out;
    if (degree_cap > 3) degree_cap = 3;

    const std::size_t words = (s + 63) / 64;
    std::vector<std::vector<std::uint64_t>> cols(k, std::vector<std::uint64_t>(words, 0));
    std::vector<std::size_t> ones(k, 0);
    for (std::size_t i = 0; i < s; ++i) {
        const auto& state = frontier.states[i];
        for (std::size_t pos = 0; pos < k; ++pos)
            if (state[pos]) {
                cols[pos][i >> 6] |= std::uint64_t(1) << (i & 63);
                ++ones[pos];
            }
    }
    // valid bits of the last word, for complement comparisons
    const std::uint64_t tail =
        (s % 64) == 0 ? ~std::uint64_t(0) : ((std::uint64_t(1) << (s % 64)) - 1);

    for (std::size_t pos = 0; pos < k; ++pos) {
        if (ones[pos] == 0) out.constants.emplace_back(frontier.order[pos], false);
        if (ones[pos] == s) out.constants.emplace_back(frontier.order[pos], true);
    }

    std::set<std::pair<std::size_t, std::size_t>> zero_pairs;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            bool same = true, complement = true, vanishes = true;
            for (std::size_t w = 0; w < words; ++w) {
                const std::uint64_t valid = (w + 1 == words) ? tail : ~std::uint64_t(0);
                const std::uint64_t a = cols[i][w], b = cols[j][w];
                if (a != b) same = false;
                if (((a ^ b) & valid) != valid) complement = false;
                if (a & b) vanishes = false;
            }
            const var_index va = frontier.order[i], vb = frontier.order[j];
            if (same || complement) {
                VariableEquality eq{std::min(va, vb), std::max(va, vb), complement};
                out.equalities.push_back(eq);
            }
            if (vanishes) {
                zero_pairs.insert({i, j});
                out.zero_products.push_back(Monomial{va, vb});
            }
        }
    }

    if (degree_cap >= 3) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                if (zero_pairs.count({i, j})) continue;
                for (std::size_t l = j + 1; l < k; ++l) {
                    if (zero_pairs.count({i, l}) || zero_pairs.count({j, l})) continue;
                    bool vanishes = true;
                    for (std::size_t w = 0; w < words; ++w)
                        if (cols[i][w] & cols[j][w] & cols[l][w]) {
                            vanishes = false;
                            break;
                        }
                    if (vanishes)
                        out.zero_products.push_back(
                            Monomial{frontier.order[i], frontier.order[j], frontier.order[l]});
                }
            }
    }

    std::sort(out.constants.begin(), out.constants.end());
    std::sort(out.equalities.begin(), out.equalities.end());
    std::sort(out.zero_products.begin(), out.zero_products.end());
    return out;
}

}  // namespace pbred

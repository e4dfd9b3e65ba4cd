#include "pbred/pipeline.hpp"

#include <algorithm>
#include <set>

#include "pbred/errors.hpp"
#include "pbred/search.hpp"

namespace pbred {

namespace {

// Chain replacements are only ever 0, 1, x or 1-x, so the image of any
// variable under the chain is affine with both values in {0,1}.
struct Affine {
    int base = 0;
    int sign = 0;  // 0 means constant
    var_index var = 0;
};

std::optional<Affine> as_affine(const Polynomial& p) {
    Affine a;
    for (const auto& [m, c] : p.terms()) {
        if (m.is_unit()) {
            if (c != 0 && c != 1) return std::nullopt;
            a.base = c == 1 ? 1 : 0;
        } else if (m.degree() == 1 && a.sign == 0 && (c == 1 || c == -1)) {
            a.sign = c == 1 ? 1 : -1;
            a.var = m.variables()[0];
        } else {
            return std::nullopt;
        }
    }
    if (a.base + a.sign < 0 || a.base + a.sign > 1 || a.base < 0 || a.base > 1)
        return std::nullopt;
    return a;
}

int affine_at(const Affine& a, int x) { return a.base + a.sign * x; }

// Solves a(x) == value for x; images are injective 0/1-valued affines, so
// the solution is always a bit.
bool affine_solve(const Affine& a, int value) { return affine_at(a, 1) == value; }

struct LiveSystem {
    Polynomial h;
    std::vector<BinaryEquation> equations;
    Substitution chain;

    bool mentions(var_index v) const {
        if (h.mentions(v)) return true;
        for (const BinaryEquation& eq : equations)
            if (eq.lhs.mentions(v) || eq.rhs.mentions(v)) return true;
        return false;
    }

    // Returns whether the variable occurred anywhere, i.e. whether the
    // elimination changed the system rather than just shrinking the space.
    bool fix(var_index v, bool value) {
        chain.fix(v, value);
        return rewrite(v, Polynomial::constant(value ? 1 : 0));
    }

    bool replace(var_index v, const Polynomial& replacement) {
        chain.replace(v, replacement);
        return rewrite(v, replacement);
    }

private:
    bool rewrite(var_index v, const Polynomial& replacement) {
        bool touched = mentions(v);
        h = h.substitute(v, replacement);
        std::vector<BinaryEquation> next;
        next.reserve(equations.size());
        for (const BinaryEquation& eq : equations) {
            BinaryEquation s = BinaryEquation{eq.lhs.substitute(v, replacement),
                                              eq.rhs.substitute(v, replacement)}
                                   .normalized();
            if (!s.is_trivial()) next.push_back(std::move(s));
        }
        equations = std::move(next);
        return touched;
    }
};

bool polynomial_less(const Polynomial& x, const Polynomial& y) {
    const auto& a = x.terms();
    const auto& b = y.terms();
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first;
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

// Deterministic application order: highest f degree first (quartics get
// rewritten before the cubics their error terms may feed), then f, then g.
void sort_deductions(std::vector<Deduction>& deds) {
    std::sort(deds.begin(), deds.end(), [](const Deduction& x, const Deduction& y) {
        if (x.f.degree() != y.f.degree()) return x.f.degree() > y.f.degree();
        if (x.f_monomial() != y.f_monomial()) return x.f_monomial() < y.f_monomial();
        return polynomial_less(x.g, y.g);
    });
    deds.erase(std::unique(deds.begin(), deds.end()), deds.end());
}

// Applies every usable deduction to h. Returns how many deductions produced
// at least one rewrite; records every rewrite in `steps`.
std::size_t apply_deductions(Polynomial& h, std::vector<Deduction> deds, bool global_lambda,
                             std::vector<ReductionStep>& steps) {
    std::erase_if(deds, [](const Deduction& d) { return !d.f_is_monomial(); });
    if (deds.empty()) return 0;
    sort_deductions(deds);
    std::vector<bool> used(deds.size(), false);

    if (global_lambda) {
        for (std::size_t i = 0; i < deds.size(); ++i) {
            try {
                auto [reduced, step] = deduc_reduc(h, deds[i]);
                h = std::move(reduced);
                steps.push_back(std::move(step));
                used[i] = true;
            } catch (const InapplicableDeductionError&) {
            }
        }
        return std::count(used.begin(), used.end(), true);
    }

    // Per-term mode: sweep target degrees downward so rewrites created at one
    // degree are seen at the next, and repeat until a full sweep changes
    // nothing (error terms of one deduction can expose targets for another).
    for (std::size_t pass = 0; pass < h.degree() + 2; ++pass) {
        bool any = false;
        for (std::size_t degree = h.degree(); degree >= 3; --degree) {
            for (std::size_t i = 0; i < deds.size(); ++i) {
                if (deds[i].f.degree() >= degree) continue;
                auto [reduced, new_steps] = split_termwise(h, deds[i], degree);
                if (new_steps.empty()) continue;
                h = std::move(reduced);
                std::move(new_steps.begin(), new_steps.end(), std::back_inserter(steps));
                used[i] = true;
                any = true;
            }
        }
        if (!any) break;
    }

    // What remains of a g = 0 deduction's footprint is the f term itself and
    // any skipped targets; when everything left is negative, dropping it is
    // free off the ground states and exact on them.
    for (std::size_t i = 0; i < deds.size(); ++i) {
        if (!deds[i].g.is_zero()) continue;
        DivisionResult div = divide_by_monomial(h, deds[i].f_monomial());
        if (div.quotient.is_zero()) continue;
        bool all_negative = true;
        for (const auto& [m, c] : div.quotient.terms())
            if (c > 0) all_negative = false;
        if (!all_negative) continue;
        auto [reduced, step] = straight_substitute_nonpositive(h, deds[i]);
        h = std::move(reduced);
        steps.push_back(std::move(step));
        used[i] = true;
    }
    return std::count(used.begin(), used.end(), true);
}

// Turns the frontier relations into eliminations and vanishing-product
// deductions, translating each through the chain as earlier ones land.
std::size_t apply_patterns(LiveSystem& sys, const PatternSet& pats,
                           std::vector<Deduction>& products_out) {
    std::size_t applied = 0;

    for (const auto& [v, value] : pats.constants) {
        if (sys.chain.eliminates(v)) continue;
        if (sys.fix(v, value)) ++applied;
    }

    for (const VariableEquality& rel : pats.equalities) {
        std::optional<Affine> ia = as_affine(sys.chain.image(rel.a));
        std::optional<Affine> ib = as_affine(sys.chain.image(rel.b));
        if (!ia || !ib) continue;
        // The relation promises image(b) == image(a), or its complement;
        // the complement of k + s x is (1-k) + (-s) x.
        Affine target = rel.complement ? Affine{1 - ia->base, -ia->sign, ia->var} : *ia;

        if (ib->sign == 0 && target.sign == 0) {
            if (ib->base != target.base)
                throw InfeasibleError("search relations contradict each other");
            continue;
        }
        if (ib->sign == 0) {
            if (sys.fix(target.var, affine_solve(target, ib->base))) ++applied;
            continue;
        }
        if (target.sign == 0) {
            if (sys.fix(ib->var, affine_solve(*ib, target.base))) ++applied;
            continue;
        }
        if (ib->var == target.var) {
            bool at0 = affine_at(*ib, 0) == affine_at(target, 0);
            bool at1 = affine_at(*ib, 1) == affine_at(target, 1);
            if (at0 && at1) continue;
            if (!at0 && !at1) throw InfeasibleError("search relations contradict each other");
            if (sys.fix(ib->var, at1)) ++applied;
            continue;
        }
        // Two distinct live variables: eliminate the larger one.
        var_index u = target.var, w = ib->var;
        // x_w as a function of x_u: w takes r0 at x_u = 0.
        bool r0 = affine_solve(*ib, affine_at(target, 0));
        var_index keep = std::min(u, w), drop = std::max(u, w);
        // The relation is symmetric: complement iff the values differ at 0.
        bool complement = r0;
        Polynomial replacement = complement
                                     ? Polynomial::constant(1) - Polynomial::variable(keep)
                                     : Polynomial::variable(keep);
        if (sys.replace(drop, replacement)) ++applied;
    }

    std::set<Monomial> seen;
    for (const Monomial& m : pats.zero_products) {
        std::vector<var_index> vars;
        bool usable = true, trivial = false;
        for (var_index v : m.variables()) {
            std::optional<Affine> img = as_affine(sys.chain.image(v));
            if (!img) {
                usable = false;
                break;
            }
            if (img->sign == 0) {
                if (img->base == 0) {
                    trivial = true;  // a factor is 0, the product already vanishes
                    break;
                }
                continue;  // a factor of 1 drops out
            }
            if (img->sign < 0 || img->base != 0) {
                usable = false;  // complemented factors make this a non-monomial fact
                break;
            }
            vars.push_back(img->var);
        }
        if (!usable || trivial) continue;
        Monomial image(std::move(vars));
        if (image.degree() == 0) continue;
        if (image.degree() == 1) {
            if (sys.fix(image.variables()[0], false)) ++applied;
            continue;
        }
        if (seen.insert(image).second)
            products_out.push_back(product_zero_deduction(image, DeductionSource::search_pattern));
    }
    return applied;
}

// Re-runs the cheap inferences after a round and folds their fixes and
// equalities into the live system.
void judgment_cleanup(LiveSystem& sys) {
    JudgmentOutcome cleanup = simple_judgments(sys.equations);
    for (const auto& step : cleanup.substitution.steps()) {
        sys.chain.replace(step.variable, step.replacement);
        sys.h = sys.h.substitute(step.variable, step.replacement);
    }
    sys.equations = std::move(cleanup.simplified);
}

}  // namespace

PipelineResult reduce_pipeline(const std::vector<BinaryEquation>& equations,
                               const PipelineConfig& config) {
    PipelineResult res;
    res.config = config;
    res.h0 = hamiltonian_from_equations(equations);
    res.stages.push_back({"H0 original", res.h0.degree_profile(), std::nullopt});

    res.judgments = simple_judgments(equations);
    LiveSystem sys{hamiltonian_from_equations(res.judgments.simplified),
                   res.judgments.simplified, res.judgments.substitution};
    res.stages.push_back({"H1 judgments", sys.h.degree_profile(), std::nullopt});

    if (!config.user_deductions.empty()) {
        std::vector<Deduction> deds;
        deds.reserve(config.user_deductions.size());
        for (const Deduction& d : config.user_deductions)
            deds.push_back({sys.chain.apply(d.f), sys.chain.apply(d.g), d.source});
        std::size_t count = apply_deductions(sys.h, std::move(deds), config.global_lambda,
                                             res.steps);
        res.stages.push_back({"user deductions", sys.h.degree_profile(), count});
    }

    if (config.states) {
        for (std::size_t round = 1; round <= config.rounds; ++round) {
            std::vector<BinaryEquation> pruning;
            for (const BinaryEquation& pe : config.pruning_equations) {
                BinaryEquation rewritten = sys.chain.apply(pe);
                if (!rewritten.is_trivial()) pruning.push_back(std::move(rewritten));
            }

            std::set<var_index> eq_vars;
            auto absorb = [&eq_vars](const std::vector<BinaryEquation>& eqs) {
                for (const BinaryEquation& eq : eqs)
                    for (const Polynomial* side : {&eq.lhs, &eq.rhs})
                        for (var_index v : side->support()) eq_vars.insert(v);
            };
            absorb(sys.equations);
            absorb(pruning);

            std::vector<var_index> order;
            std::set<var_index> taken;
            for (var_index v : config.search_order)
                if (eq_vars.count(v) && taken.insert(v).second) order.push_back(v);
            for (var_index v : eq_vars)
                if (taken.insert(v).second) order.push_back(v);

            std::vector<BinaryEquation> search_eqs = sys.equations;
            search_eqs.insert(search_eqs.end(), pruning.begin(), pruning.end());
            SearchFrontier frontier = bfs_plausible(search_eqs, *config.states, order);
            PatternSet pats = extract_patterns(frontier, config.pattern_degree_cap);

            std::vector<Deduction> products;
            std::size_t eliminations = apply_patterns(sys, pats, products);
            std::size_t reduced = apply_deductions(sys.h, std::move(products),
                                                   config.global_lambda, res.steps);
            judgment_cleanup(sys);
            res.stages.push_back({"reduction round " + std::to_string(round),
                                  sys.h.degree_profile(), eliminations + reduced});
            if (eliminations == 0 && reduced == 0) break;
        }
    }

    res.h_final = sys.h;
    res.substitution = sys.chain;
    res.final_equations = sys.equations;
    return res;
}

PipelineResult reduce_factorization(const FactorizationInstance& inst, PipelineConfig config) {
    config.pruning_equations.push_back(inst.aggregate_equation());
    if (config.search_order.empty()) config.search_order = inst.search_order_msb_first();
    return reduce_pipeline(inst.equations, config);
}

}  // namespace pbred

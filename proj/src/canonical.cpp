#include "superkl/canonical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace skl {

Laurent TransitionTable::poly(const Weight& g, const Weight& f) const {
    auto it = entries.find({g, f});
    return it == entries.end() ? Laurent() : it->second;
}

std::vector<Weight> box_below(const Weight& f, int d) {
    return box_closure({f}, d);
}

std::vector<Weight> box_closure(const std::vector<Weight>& seeds, int d) {
    std::set<Weight> seen;
    std::vector<Weight> queue;
    for (const Weight& f : seeds) {
        if (f.max_value() > d)
            throw std::domain_error("box_closure: seed exceeds bound: " + f.str());
        if (seen.insert(f).second) queue.push_back(f);
    }
    while (!queue.empty()) {
        Weight f = queue.back();
        queue.pop_back();
        for (const Weight& g : downarrow_successors(f)) {
            if (g.max_value() > d) continue;
            if (seen.insert(g).second) queue.push_back(g);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Weight> linear_extension(std::vector<Weight> box) {
    std::sort(box.begin(), box.end());
    const size_t sz = box.size();
    // Kahn's algorithm over the (sparse) comparability graph.
    std::vector<std::vector<size_t>> above(sz);
    std::vector<size_t> pending(sz, 0);
    for (size_t i = 0; i < sz; ++i) {
        for (size_t j = 0; j < sz; ++j) {
            if (i == j) continue;
            if (bruhat_leq(box[i], box[j])) {
                above[i].push_back(j);
                ++pending[j];
            }
        }
    }
    std::set<size_t> ready;
    for (size_t i = 0; i < sz; ++i)
        if (pending[i] == 0) ready.insert(i);
    std::vector<Weight> out;
    out.reserve(sz);
    while (!ready.empty()) {
        const size_t i = *ready.begin();
        ready.erase(ready.begin());
        out.push_back(box[i]);
        for (size_t j : above[i])
            if (--pending[j] == 0) ready.insert(j);
    }
    if (out.size() != sz)
        throw std::logic_error("linear_extension: order contains a cycle");
    return out;
}

namespace {

// Splits a bar-antisymmetric coefficient into the correction polynomial:
// with bar(c) = -c and c_0 = 0, the positive part p satisfies
// bar(p) - p = -c, so v + p B_g removes the defect at g.
Laurent antisymmetric_positive_part(const Laurent& c, bool positive) {
    if (!c.constant_coeff().is_zero() || c.bar() != -c)
        throw std::logic_error(
            "bar defect coefficient is not antisymmetric: " + c.str());
    return positive ? c.slice(1, c.max_exp()) : c.slice(c.min_exp(), -1);
}

}  // namespace

std::pair<TransitionTable, TransitionTable> solve_bar_invariant_basis(
    const std::vector<Weight>& box, int d) {
    std::set<Weight> members(box.begin(), box.end());
    for (const Weight& f : box) {
        if (f.max_value() > d)
            throw std::domain_error("solver: box member exceeds bound: " + f.str());
        for (const Weight& g : downarrow_successors(f))
            if (g.max_value() <= d && !members.count(g))
                throw std::domain_error(
                    "solver: box not downward closed, missing " + g.str());
    }

    const std::vector<Weight> order = linear_extension(box);
    const Shape sh = box.empty() ? Shape{0, 0} : box.front().shape();
    TransitionTable tt{sh, d, 't', {}};
    TransitionTable lt{sh, d, 'l', {}};
    std::map<Weight, TensorVec> tvec, lvec;

    for (const Weight& f : order) {
        for (bool positive : {true, false}) {
            auto& store = positive ? tvec : lvec;
            TensorVec v = monomial(f, d);
            while (true) {
                TensorVec w = bar_involution(v);
                for (const auto& [g, c] : v.terms) add_term(w, g, -c);
                if (w.terms.empty()) break;
                // Defect at a maximal weight is bar-antisymmetric; correct
                // with the already known basis vector there.
                std::vector<Weight> maxima;
                for (const auto& [g, c] : w.terms) {
                    bool dominated = false;
                    for (const auto& [g2, c2] : w.terms)
                        if (g2 != g && bruhat_leq(g, g2)) {
                            dominated = true;
                            break;
                        }
                    if (!dominated) maxima.push_back(g);
                }
                const Weight g = *std::max_element(maxima.begin(), maxima.end());
                if (g == f || !members.count(g))
                    throw std::logic_error("solver: defect at " + g.str() +
                                           " escapes the box below " + f.str());
                const Laurent p =
                    antisymmetric_positive_part(coeff(w, g), positive);
                auto it = store.find(g);
                if (it == store.end())
                    throw std::logic_error("solver: correction vector at " +
                                           g.str() + " not yet computed");
                for (const auto& [h, c] : it->second.terms)
                    add_term(v, h, p * c);
            }
            if (coeff(v, f) != Laurent(1))
                throw std::logic_error("solver: leading coefficient at " +
                                       f.str() + " is not 1");
            auto& table = positive ? tt : lt;
            for (const auto& [g, c] : v.terms) {
                if (g != f && !(positive ? c.in_q_z_q() : c.in_qinv_z_qinv()))
                    throw std::logic_error("solver: coefficient ring violation at (" +
                                           g.str() + ", " + f.str() + ")");
                table.entries.emplace(std::pair{g, f}, c);
            }
            store.emplace(f, std::move(v));
        }
    }
    return {tt, lt};
}

namespace {

int first_descent(const Weight& f) {
    const Shape sh = f.shape();
    for (int i = -sh.m + 1; i <= -1; ++i)
        if (f.at(i - 1) < f.at(i)) return i;
    for (int i = 1; i <= sh.n - 1; ++i)
        if (f.at(i) > f.at(i + 1)) return i;
    return 0;
}

}  // namespace

TensorVec kl_typical(const Weight& f, int d) {
    if (!typical(f))
        throw std::domain_error("kl_typical: weight is atypical: " + f.str());
    if (f.max_value() > d)
        throw std::domain_error("kl_typical: entry exceeds bound: " + f.str());
    using Key = std::pair<Weight, int>;
    thread_local std::map<Key, TensorVec> cache;
    const Key key{f, d};
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    TensorVec v;
    const int i = first_descent(f);
    if (i == 0) {
        v = monomial(f, d);
    } else {
        const TensorVec below = kl_typical(sym_act(f, sym_gen(f.shape(), i)), d);
        v = hecke_act(below, i);
        for (const auto& [g, c] : below.terms) add_term(v, g, c * Laurent::q(1));
        // Constant terms at lower weights break the q Z[q] normalization;
        // one sweep fixes them all since T_g is unitriangular.
        std::vector<std::pair<Weight, Laurent>> fixes;
        for (const auto& [g, c] : v.terms)
            if (g != f && !c.constant_coeff().is_zero())
                fixes.emplace_back(g, Laurent(c.constant_coeff()));
        for (const auto& [g, c0] : fixes)
            for (const auto& [h, c] : kl_typical(g, d).terms)
                add_term(v, h, -(c0 * c));
        if (coeff(v, f) != Laurent(1))
            throw std::logic_error("kl_typical: leading coefficient at " +
                                   f.str() + " is not 1");
        for (const auto& [g, c] : v.terms)
            if (g != f && !c.in_q_z_q())
                throw std::logic_error("kl_typical: coefficient at " + g.str() +
                                       " not in qZ[q]");
    }
    return cache.emplace(key, std::move(v)).first->second;
}

namespace {

struct PassResult {
    std::vector<int> counts;
    std::vector<size_t> labeled;  // indices into the tuple
};

// One labeling pass over a tuple.  Levels move rightward through
// ascending values when rightward=true (ordinary factors), leftward
// otherwise (dual factors).
PassResult labeling_pass(const std::vector<int>& tuple, int a, bool rightward) {
    PassResult res;
    std::vector<size_t> prev;
    for (int value = a;; ++value) {
        std::vector<size_t> cur;
        for (size_t j = 0; j < tuple.size(); ++j) {
            if (tuple[j] != value) continue;
            if (value == a) {
                cur.push_back(j);
            } else if (rightward) {
                if (j > *std::min_element(prev.begin(), prev.end()))
                    cur.push_back(j);
            } else {
                if (j < *std::max_element(prev.begin(), prev.end()))
                    cur.push_back(j);
            }
        }
        if (cur.empty()) break;
        res.counts.push_back((int)cur.size());
        res.labeled.insert(res.labeled.end(), cur.begin(), cur.end());
        prev = std::move(cur);
    }
    return res;
}

BumpingPlan bumping_plan_onesided(const Weight& f, int d, bool start_negative) {
    BumpingPlan plan;
    plan.target = f;
    plan.from_negative = start_negative;

    std::vector<int> neg = f.neg(), pos = f.pos();
    std::set<int> neg_vals(neg.begin(), neg.end());
    std::set<int> pos_vals(pos.begin(), pos.end());
    int a = f.min_value() - 1;
    for (int v : neg_vals)
        if (pos_vals.count(v)) a = std::max(a, v);

    std::vector<size_t> neg_labeled, pos_labeled;
    bool negative_side = start_negative;
    while (true) {
        auto& tuple = negative_side ? neg : pos;
        PassResult pass = labeling_pass(tuple, a, /*rightward=*/!negative_side);
        if (pass.counts.empty())
            throw std::logic_error("bumping: empty pass at threshold " +
                                   std::to_string(a));
        for (size_t c = 0; c < pass.counts.size(); ++c)
            plan.word.push_back({negative_side ? Gen::F : Gen::E, a + (int)c,
                                 pass.counts[c]});
        plan.counts.push_back(pass.counts);
        auto& marks = negative_side ? neg_labeled : pos_labeled;
        marks.insert(marks.end(), pass.labeled.begin(), pass.labeled.end());
        a += (int)pass.counts.size();
        negative_side = !negative_side;
        const auto& other = negative_side ? neg : pos;
        if (std::find(other.begin(), other.end(), a) == other.end()) break;
    }
    plan.e = std::max(d, a);

    for (size_t j : neg_labeled) ++neg[j];
    for (size_t j : pos_labeled) ++pos[j];
    plan.h = Weight(f.shape(), neg, pos);
    if (atypicality(plan.h) >= atypicality(f))
        throw std::logic_error("bumping: atypicality did not drop at " + f.str());
    return plan;
}

}  // namespace

BumpingPlan bumping_plan(const Weight& f, int d, BumpSide side) {
    if (typical(f))
        throw std::domain_error("bumping_plan: weight is typical: " + f.str());
    if (side == BumpSide::Shortest) {
        BumpingPlan p = bumping_plan_onesided(f, d, false);
        BumpingPlan m = bumping_plan_onesided(f, d, true);
        return m.word.size() < p.word.size() ? m : p;
    }
    return bumping_plan_onesided(f, d, side == BumpSide::Negative);
}

TensorVec t_basis(const Weight& f, int d, BumpSide side) {
    if (f.max_value() > d)
        throw std::domain_error("t_basis: entry exceeds bound: " + f.str());
    if (typical(f)) return kl_typical(f, d);

    using Key = std::tuple<Weight, int, BumpSide>;
    thread_local std::map<Key, TensorVec> cache;
    const Key key{f, d, side};
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    const BumpingPlan plan = bumping_plan(f, d, side);
    TensorVec v = t_basis(plan.h, plan.e, side);
    for (const BumpLetter& x : plan.word)
        v = divided_power_act(x.gen, x.color, x.power, v);
    v = pi_truncate(v, d);
    if (coeff(v, f) != Laurent(1))
        throw std::logic_error("t_basis: first approximation at " + f.str() +
                               " has wrong leading coefficient");

    while (true) {
        std::vector<Weight> offending;
        for (const auto& [g, c] : v.terms)
            if (g != f && !c.in_q_z_q()) offending.push_back(g);
        if (offending.empty()) break;
        // Take a maximal offender, lexicographically largest among the
        // incomparable maxima for determinism.
        std::vector<Weight> maxima;
        for (const Weight& g1 : offending) {
            bool dominated = false;
            for (const Weight& g2 : offending)
                if (g1 != g2 && bruhat_leq(g1, g2)) {
                    dominated = true;
                    break;
                }
            if (!dominated) maxima.push_back(g1);
        }
        const Weight g = *std::max_element(maxima.begin(), maxima.end());
        if (!bruhat_leq(g, f))
            throw std::logic_error("t_basis: correction weight " + g.str() +
                                   " is not below " + f.str());
        const Laurent p = coeff(v, g);
        // Unique bar-invariant lift of p modulo qZ[q].
        Laurent lift(p.constant_coeff());
        for (int k = 1; -k >= p.min_exp(); ++k)
            lift += Laurent(p.coeff(-k)) * (Laurent::q(k) + Laurent::q(-k));
        for (const auto& [h, c] : t_basis(g, d, side).terms)
            add_term(v, h, -(lift * c));
    }
    return cache.emplace(key, std::move(v)).first->second;
}

Laurent t_poly(const Weight& g, const Weight& f, int d, BumpSide side) {
    return coeff(t_basis(f, d, side), g);
}

TensorVec l_basis(const Weight& f, int d) {
    using Key = std::pair<Weight, int>;
    thread_local std::map<Key, TensorVec> cache;
    const Key key{f, d};
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    // The solver needs the whole lower box anyway, so build it once and
    // cache every member's column.
    auto [tt, lt] = solve_bar_invariant_basis(box_below(f, d), d);
    std::map<Weight, TensorVec> cols;
    for (const auto& [gf, c] : lt.entries) {
        auto [it, fresh] = cols.try_emplace(gf.second, tensor_zero(f.shape(), d));
        add_term(it->second, gf.first, c);
    }
    for (auto& [g, v] : cols) cache[{g, d}] = std::move(v);
    auto it = cache.find(key);
    if (it == cache.end())
        throw std::logic_error("l_basis: box did not contain " + f.str());
    return it->second;
}

Laurent l_poly(const Weight& g, const Weight& f, int d) {
    return coeff(l_basis(f, d), g);
}

std::vector<PositivityViolation> positivity_scan(const std::vector<Weight>& box,
                                                 int d) {
    std::vector<PositivityViolation> out;
    for (const Weight& f : box) {
        for (const auto& [g, c] : t_basis(f, d).terms)
            if (!c.nonneg_coeffs()) out.push_back({'t', g, f, c});
        for (const auto& [g, c] : l_basis(f, d).terms)
            if (!c.substitute_neg_inv().nonneg_coeffs())
                out.push_back({'l', g, f, c});
    }
    return out;
}

}  // namespace skl

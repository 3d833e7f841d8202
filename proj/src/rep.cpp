#include "superkl/rep.hpp"

#include "superkl/exterior.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skl {

namespace {

Weight dominant_shift(const GlWeight& lambda, const char* who) {
    if (!lambda.dominant())
        throw std::domain_error(std::string(who) + ": weight " + lambda.str() +
                                " is not dominant");
    return rho_shift(lambda);
}

void check_shapes(const GlWeight& a, const GlWeight& b, const char* who) {
    if (a.shape() != b.shape())
        throw std::domain_error(std::string(who) + ": shape mismatch " +
                                a.shape().str() + " vs " + b.shape().str());
}

void check_depth(int depth, const char* who) {
    if (depth < 0)
        throw std::domain_error(std::string(who) + ": negative depth");
}

using Pairs = std::vector<std::pair<int, int>>;

// f with the pairs selected by mask dropped by their entries of ks.
Weight drop_pairs(const Weight& f, const Pairs& pairs,
                  const std::vector<int>& ks, unsigned mask) {
    Weight w = f;
    for (size_t s = 0; s < ks.size(); ++s)
        if (mask >> s & 1u)
            w = w.shifted(pairs[s].first, -ks[s]).shifted(pairs[s].second, -ks[s]);
    return w;
}

// The lexicographically smallest strictly positive tuple (k_1..k_r) such
// that every 0/1-selection of drops lands on a weight with a dominant
// conjugate.  Greedy per coordinate: a prefix choice survives iff every
// selection touching it is admissible, and any surviving prefix extends by
// taking the remaining entries large and spread out.
std::vector<int> mt_tuple(const Weight& f, const Pairs& pairs) {
    const int r = static_cast<int>(pairs.size());
    const int cap = r == 0 ? 1 : f.max_value() - f.min_value() + r + 1;
    std::vector<int> ks;
    for (int s = 0; s < r; ++s) {
        int chosen = 0;
        for (int k = 1; k <= cap && !chosen; ++k) {
            ks.push_back(k);
            bool ok = true;
            for (unsigned mask = 1u << s; mask < (2u << s) && ok; ++mask)
                ok = dominant_conjugate(drop_pairs(f, pairs, ks, mask)).has_value();
            ks.pop_back();
            if (ok) chosen = k;
        }
        if (!chosen)
            throw std::logic_error("mt_tuple: no admissible shift within bound at " +
                                   f.str());
        ks.push_back(chosen);
    }
    return ks;
}

// The 2^{#f} decomposition-row labels above f, as dominant weights.
std::vector<Weight> mt_images(const Weight& f) {
    const Pairs pairs = atypical_pairs(f);
    const std::vector<int> ks = mt_tuple(f, pairs);
    std::vector<Weight> out;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        const auto dom = dominant_conjugate(drop_pairs(f, pairs, ks, mask));
        if (!dom)
            throw std::logic_error("mt_images: inadmissible selection at " + f.str());
        out.push_back(*dom);
    }
    std::set<Weight> distinct(out.begin(), out.end());
    if (distinct.size() != out.size())
        throw std::logic_error("mt_images: repeated label at " + f.str());
    return out;
}

int unit_multiplicity(const Laurent& p, const char* who) {
    const auto v = p.eval_at_one();
    if (v != 0 && v != 1)
        throw std::logic_error(std::string(who) + ": multiplicity " + p.str() +
                               " outside {0,1}");
    return v.convert_to<int>();
}

// [K(mu):L(lambda)] via the u-coefficient and the beta involution.
int u_route(const Weight& fmu, const Weight& flambda) {
    const Laurent u =
        closed_u_poly(beta_involution(fmu), beta_involution(flambda));
    return unit_multiplicity(u, "kac multiplicity u-route");
}

// Everything reachable from dominant f by at most depth upward shifts of a
// matched pair, kept as dominant conjugates.  A superset of the weights of
// relative length <= depth below f: a single raising step never moves a
// pair by more than one collision-free slot per block per pair, so bcap
// dominates every admissible minimal shift.
std::set<Weight> lower_closure(const Weight& f, int depth) {
    const Shape sh = f.shape();
    const int r = atypicality(f);
    const int bcap = std::max(1, r * (sh.m + sh.n - 2) + 1);
    std::set<Weight> seen{f};
    std::vector<Weight> frontier{f};
    for (int step = 0; step < depth && !frontier.empty(); ++step) {
        std::vector<Weight> next;
        for (const Weight& w : frontier)
            for (const auto& [i, j] : atypical_pairs(w))
                for (int b = 1; b <= bcap; ++b) {
                    const auto cand =
                        dominant_conjugate(w.shifted(i, b).shifted(j, b));
                    if (cand && seen.insert(*cand).second) next.push_back(*cand);
                }
        frontier = std::move(next);
    }
    return seen;
}

// l_{g,f}(-q^{-1}), the Ext-series normalisation.
Laurent l_series(const Weight& g, const Weight& f) {
    return l_poly_recursive(g, f).substitute_neg_inv();
}

}  // namespace

int kac_multiplicity(const GlWeight& mu, const GlWeight& lambda) {
    check_shapes(mu, lambda, "kac_multiplicity");
    const Weight fmu = dominant_shift(mu, "kac_multiplicity");
    const Weight flambda = dominant_shift(lambda, "kac_multiplicity");
    const auto images = mt_images(flambda);
    const int direct =
        std::count(images.begin(), images.end(), fmu) ? 1 : 0;
    const int via_u = u_route(fmu, flambda);
    if (direct != via_u)
        throw std::logic_error("kac_multiplicity: routes disagree at mu = " +
                               mu.str() + ", lambda = " + lambda.str());
    return direct;
}

DecompRow kac_decomposition_row(const GlWeight& lambda) {
    const Weight flambda = dominant_shift(lambda, "kac_decomposition_row");
    DecompRow row{lambda, {}};
    for (const Weight& fmu : mt_images(flambda)) {
        if (u_route(fmu, flambda) != 1)
            throw std::logic_error("kac_decomposition_row: u-route misses " +
                                   fmu.str());
        row.entries[rho_unshift(fmu)] = 1;
    }
    return row;
}

int tilting_multiplicity(const GlWeight& lambda, const GlWeight& mu) {
    check_shapes(mu, lambda, "tilting_multiplicity");
    const Weight fmu = dominant_shift(mu, "tilting_multiplicity");
    const Weight flambda = dominant_shift(lambda, "tilting_multiplicity");
    return unit_multiplicity(closed_u_poly(fmu, flambda),
                             "tilting_multiplicity");
}

std::map<GlWeight, int> character_in_kac_basis(const GlWeight& lambda,
                                               int depth) {
    check_depth(depth, "character_in_kac_basis");
    const Weight flambda = dominant_shift(lambda, "character_in_kac_basis");
    std::map<GlWeight, int> out;
    for (const Weight& g : lower_closure(flambda, depth)) {
        const Laurent series = l_series(g, flambda);
        if (series.is_zero() || series.max_exp() > depth) continue;
        out[rho_unshift(g)] = series.substitute_neg_inv()
                                  .eval_at_one()
                                  .convert_to<int>();
    }
    return out;
}

InfWeight block_of(const GlWeight& lambda) { return wt(rho_shift(lambda)); }

GlWeight dual_simple_highest_weight(const GlWeight& lambda) {
    const Weight f = dominant_shift(lambda, "dual_simple_highest_weight");
    return rho_unshift(beta_involution(rr_map(f)));
}

GlWeight projective_cover_label(const GlWeight& mu) {
    const Weight f = dominant_shift(mu, "projective_cover_label");
    return rho_unshift(rr_map(f));
}

ExtSeries ext_kac_simple(const GlWeight& mu, const GlWeight& lambda) {
    check_shapes(mu, lambda, "ext_kac_simple");
    const Weight fmu = dominant_shift(mu, "ext_kac_simple");
    const Weight flambda = dominant_shift(lambda, "ext_kac_simple");
    return ExtSeries{mu, lambda, l_series(fmu, flambda)};
}

ExtSeries ext_simple_simple(const GlWeight& mu, const GlWeight& lambda,
                            int depth) {
    check_shapes(mu, lambda, "ext_simple_simple");
    check_depth(depth, "ext_simple_simple");
    const Weight fmu = dominant_shift(mu, "ext_simple_simple");
    const Weight flambda = dominant_shift(lambda, "ext_simple_simple");
    Laurent total;
    if (wt(fmu) == wt(flambda)) {
        const auto below = lower_closure(fmu, depth);
        const auto other =
            fmu == flambda ? below : lower_closure(flambda, depth);
        for (const Weight& nu : below) {
            if (!other.count(nu)) continue;
            const Laurent a = l_series(nu, fmu);
            if (a.is_zero()) continue;
            const Laurent b = fmu == flambda ? a : l_series(nu, flambda);
            if (b.is_zero()) continue;
            total += (a * b).slice(0, depth);
        }
    }
    return ExtSeries{mu, lambda, total};
}

}  // namespace skl

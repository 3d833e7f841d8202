#include "superkl/tensor.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "json.hpp"

namespace skl {

namespace {

// Positions of I(m|n) in left-to-right order.
std::vector<int> positions(Shape sh) {
    std::vector<int> out;
    out.reserve(sh.size());
    for (int i = -sh.m; i <= -1; ++i) out.push_back(i);
    for (int i = 1; i <= sh.n; ++i) out.push_back(i);
    return out;
}

bool weight_in_box(const Weight& f, int d) {
    for (int v : f.neg())
        if (v > d) return false;
    for (int v : f.pos())
        if (v > d) return false;
    return true;
}

}  // namespace

TensorVec tensor_zero(Shape sh, int d) { return TensorVec{sh, d, {}}; }

TensorVec monomial(const Weight& f, int d) {
    if (!weight_in_box(f, d))
        throw std::domain_error("monomial: weight entry exceeds bound " +
                                std::to_string(d) + ": " + f.str());
    TensorVec v = tensor_zero(f.shape(), d);
    v.terms.emplace(f, Laurent(1));
    return v;
}

void add_term(TensorVec& v, const Weight& f, const Laurent& c) {
    assert(f.shape() == v.shape);
    if (c.is_zero() || !weight_in_box(f, v.bound)) return;
    auto it = v.terms.find(f);
    if (it == v.terms.end()) {
        v.terms.emplace(f, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) v.terms.erase(it);
}

Laurent coeff(const TensorVec& v, const Weight& f) {
    auto it = v.terms.find(f);
    return it == v.terms.end() ? Laurent() : it->second;
}

int support_max_value(const TensorVec& v) {
    int best = v.bound;
    bool first = true;
    for (const auto& [f, c] : v.terms) {
        int mv = f.max_value();
        if (first || mv > best) best = mv;
        first = false;
    }
    return best;
}

TensorVec pi_truncate(const TensorVec& v, int d) {
    TensorVec out = tensor_zero(v.shape, d);
    for (const auto& [f, c] : v.terms) add_term(out, f, c);
    return out;
}

TensorVec hecke_act(const TensorVec& v, int i, bool inverse) {
    const Shape sh = v.shape;
    const bool neg_side = i < 0;
    if (neg_side ? (i <= -sh.m || i > -1) : (i < 1 || i >= sh.n))
        throw std::domain_error("hecke_act: generator " + std::to_string(i) +
                                " out of range for " + sh.str());
    const int j1 = neg_side ? i - 1 : i;
    const int j2 = neg_side ? i : i + 1;
    const Laurent qm = Laurent::q(1) - Laurent::q(-1);
    TensorVec out = tensor_zero(sh, v.bound);
    for (const auto& [f, c] : v.terms) {
        const int a = f.at(j1), b = f.at(j2);
        if (a == b) {
            add_term(out, f, c * Laurent::q(inverse ? 1 : -1));
            continue;
        }
        Weight fs = f.with(j1, b).with(j2, a);
        // f.s_i is lower than f when the pair points away from antidominant
        // order: descending on the positive side, ascending on the negative.
        const bool lower = neg_side ? a < b : a > b;
        add_term(out, fs, c);
        if (!inverse && lower) add_term(out, f, -(c * qm));
        if (inverse && !lower) add_term(out, f, c * qm);
    }
    return out;
}

TensorVec hecke_word_act(const TensorVec& v, const std::vector<int>& word,
                         bool inverse) {
    TensorVec out = v;
    if (!inverse) {
        for (int i : word) out = hecke_act(out, i, false);
    } else {
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            out = hecke_act(out, *it, true);
    }
    return out;
}

TensorVec chevalley_act(Gen g, int a, const TensorVec& v) {
    if (a >= v.bound)
        throw std::domain_error("chevalley_act: color " + std::to_string(a) +
                                " needs bound > " + std::to_string(a));
    const auto pos = positions(v.shape);
    TensorVec out = tensor_zero(v.shape, v.bound);
    for (const auto& [f, c] : v.terms) {
        for (size_t k = 0; k < pos.size(); ++k) {
            const int p = pos[k];
            const int fp = f.at(p);
            const bool raises = (g == Gen::E) == (p < 0);
            if (fp != (raises ? a : a + 1)) continue;
            const int moved = raises ? a + 1 : a;
            // K-type twist on the factors to the right of p for E, to the
            // left for F.
            int e = 0;
            if (g == Gen::E) {
                for (size_t r = k + 1; r < pos.size(); ++r) {
                    const int fr = f.at(pos[r]);
                    const int delta = (fr == a ? 1 : 0) - (fr == a + 1 ? 1 : 0);
                    e += (pos[r] < 0) ? delta : -delta;
                }
            } else {
                for (size_t r = 0; r < k; ++r) {
                    const int fr = f.at(pos[r]);
                    const int delta = (fr == a + 1 ? 1 : 0) - (fr == a ? 1 : 0);
                    e += (pos[r] < 0) ? delta : -delta;
                }
            }
            add_term(out, f.with(p, moved), c * Laurent::q(e));
        }
    }
    return out;
}

TensorVec divided_power_act(Gen g, int a, int r, const TensorVec& v) {
    if (r < 0) throw std::domain_error("divided_power_act: negative power");
    TensorVec out = v;
    for (int t = 0; t < r; ++t) out = chevalley_act(g, a, out);
    if (r >= 2) {
        const Laurent fac = quantum_factorial(r);
        for (auto& [f, c] : out.terms) c = exact_div(c, fac);
    }
    return out;
}

namespace {

// Partitions with at most `maxparts` parts, each at most `cap`.
void gen_partitions(int maxparts, int cap, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    if ((int)cur.size() == maxparts) return;
    int hi = cur.empty() ? cap : std::min(cap, cur.back());
    for (int part = hi; part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(maxparts, cap, cur, out);
        cur.pop_back();
    }
}

// Minimal number of inversions over block permutations x with
// src[x[k]] == tgt[k]: match repeated values in order and count inversions.
int stable_inversions(const std::vector<int>& src, const std::vector<int>& tgt) {
    const size_t sz = src.size();
    std::vector<int> pi(sz);
    std::vector<bool> used(sz, false);
    for (size_t k = 0; k < sz; ++k) {
        size_t j = 0;
        while (j < sz && (used[j] || src[j] != tgt[k])) ++j;
        assert(j < sz);
        used[j] = true;
        pi[k] = (int)j;
    }
    int inv = 0;
    for (size_t k = 0; k < sz; ++k)
        for (size_t l = k + 1; l < sz; ++l)
            if (pi[k] > pi[l]) ++inv;
    return inv;
}

// bar of the constant monomial with value a on shape (m|n), inside bound d.
const TensorVec& b1_expansion(int m, int n, int a, int d) {
    using Key = std::tuple<int, int, int, int>;
    thread_local std::map<Key, TensorVec> cache;
    const Key key{m, n, a, d};
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    const Shape sh{m, n};
    TensorVec out = tensor_zero(sh, d);
    const Weight base(sh, std::vector<int>(m, a), std::vector<int>(n, a));
    if (std::min(m, n) == 0) {
        add_term(out, base, Laurent(1));
        return cache.emplace(key, std::move(out)).first->second;
    }

    std::vector<std::vector<int>> lams;
    std::vector<int> cur;
    gen_partitions(std::min(m, n), d - a, cur, lams);
    const Laurent one_minus_q2 = Laurent(1) - Laurent::q(2);
    for (const auto& lam : lams) {
        const int r = (int)lam.size();
        int size = std::accumulate(lam.begin(), lam.end(), 0);
        Laurent p(1);
        for (int t = 0; t < r; ++t) p *= one_minus_q2;
        p *= Laurent::term(size % 2 ? -1 : 1, -size);
        for (int s = 0, t = 0; s < r; s = t) {
            while (t < r && lam[t] == lam[s]) ++t;
            const int mult = t - s;
            p *= Laurent::q(mult * (mult - 1) / 2) * quantum_factorial(mult);
        }
        // Base arrangement: parts decrease outward on both blocks.
        std::vector<int> bneg(m), bpos(n);
        for (int k = 0; k < m; ++k) {
            const int part = m - k;  // |i| for position -m+k
            bneg[k] = a + (part <= r ? lam[part - 1] : 0);
        }
        for (int k = 0; k < n; ++k) bpos[k] = a + (k < r ? lam[k] : 0);

        std::vector<int> tn = bneg, tp = bpos;
        std::sort(tn.begin(), tn.end());
        std::sort(tp.begin(), tp.end());
        do {
            const int ln = stable_inversions(bneg, tn);
            std::vector<int> tp2 = tp;
            do {
                const int lp = stable_inversions(bpos, tp2);
                add_term(out, Weight(sh, tn, tp2), p * Laurent::q(ln + lp));
            } while (std::next_permutation(tp2.begin(), tp2.end()));
        } while (std::next_permutation(tn.begin(), tn.end()));
    }
    return cache.emplace(key, std::move(out)).first->second;
}

const TensorVec& bar_monomial(const Weight& f, int d) {
    using Key = std::pair<Weight, int>;
    thread_local std::map<Key, TensorVec> cache;
    const Key key{f, d};
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    const Shape sh = f.shape();
    TensorVec out;
    auto [fa, x] = antidominant_conjugate(f);
    if (!sym_is_identity(x)) {
        out = hecke_word_act(bar_monomial(fa, d), reduced_word(x), true);
    } else if (sh.size() == 0) {
        out = monomial(f, d);
    } else if (f.max_value() == f.min_value()) {
        out = b1_expansion(sh.m, sh.n, f.max_value(), d);
    } else {
        // Split off the strictly largest entries: they form a constant
        // outer block (leftmost dual factors, rightmost ordinary ones),
        // and the involution acts independently on outer and inner parts.
        const int mu = f.max_value();
        int k = 0, l = 0;
        while (k < sh.m && f.neg()[k] == mu) ++k;
        while (l < sh.n && f.pos()[sh.n - 1 - l] == mu) ++l;
        const Weight fi(Shape{sh.m - k, sh.n - l},
                        {f.neg().begin() + k, f.neg().end()},
                        {f.pos().begin(), f.pos().end() - l});
        const TensorVec& outer = b1_expansion(k, l, mu, d);
        const TensorVec& inner = bar_monomial(fi, d);
        out = tensor_zero(sh, d);
        for (const auto& [go, co] : outer.terms) {
            for (const auto& [gi, ci] : inner.terms) {
                std::vector<int> tn = go.neg();
                tn.insert(tn.end(), gi.neg().begin(), gi.neg().end());
                std::vector<int> tp = gi.pos();
                tp.insert(tp.end(), go.pos().begin(), go.pos().end());
                add_term(out, Weight(sh, tn, tp), co * ci);
            }
        }
    }
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

TensorVec bar_involution(const TensorVec& v) {
    TensorVec out = tensor_zero(v.shape, v.bound);
    for (const auto& [f, c] : v.terms) {
        const Laurent cb = c.bar();
        for (const auto& [g, w] : bar_monomial(f, v.bound).terms)
            add_term(out, g, cb * w);
    }
    return out;
}

TensorVec sigma_map(const TensorVec& v, int new_bound) {
    TensorVec out = tensor_zero(v.shape, new_bound);
    for (const auto& [f, c] : v.terms) add_term(out, neg_weight(f), c.bar());
    return out;
}

TensorVec omega_map(const TensorVec& v) {
    TensorVec out = tensor_zero(Shape{v.shape.n, v.shape.m}, v.bound);
    for (const auto& [f, c] : v.terms) add_term(out, omega_flip(f), c);
    return out;
}

Laurent form_T(const TensorVec& u, const TensorVec& v) {
    Laurent total;
    const auto& small = u.terms.size() <= v.terms.size() ? u : v;
    const auto& large = u.terms.size() <= v.terms.size() ? v : u;
    for (const auto& [f, c] : small.terms) {
        auto it = large.terms.find(f);
        if (it != large.terms.end()) total += c * it->second;
    }
    return total;
}

Laurent form_angle_T(const TensorVec& u, const TensorVec& v) {
    const TensorVec w = bar_involution(v);
    Laurent total;
    for (const auto& [f, c] : u.terms) {
        auto it = w.terms.find(neg_weight(f));
        if (it != w.terms.end()) total += c * it->second.bar();
    }
    return total;
}

std::map<Weight, Laurent> h0_collapse(const TensorVec& v) {
    std::map<Weight, Laurent> out;
    for (const auto& [f, c] : v.terms) {
        auto [fa, x] = antidominant_conjugate(f);
        const Weight dom = times_w0(fa);
        if (!dominant(dom)) continue;
        const int len = sym_length(x);
        out[dom] += Laurent::term(len % 2 ? -1 : 1, len) * c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

TensorVec h0_act(const TensorVec& v) {
    TensorVec out = tensor_zero(v.shape, v.bound);
    for (const auto& [g, c] : h0_collapse(v))
        for (const auto& [f, w] : k_basis(g, v.bound).terms)
            add_term(out, f, c * w);
    return out;
}

TensorVec k_basis(const Weight& f, int d) {
    if (!dominant(f))
        throw std::domain_error("k_basis: label not dominant: " + f.str());
    if (!weight_in_box(f, d))
        throw std::domain_error("k_basis: weight entry exceeds bound " +
                                std::to_string(d) + ": " + f.str());
    const Shape sh = f.shape();
    const Weight base = times_w0(f);
    const int lw0 = sh.m * (sh.m - 1) / 2 + sh.n * (sh.n - 1) / 2;
    TensorVec out = tensor_zero(sh, d);
    std::vector<int> pn(sh.m);
    std::iota(pn.begin(), pn.end(), 0);
    do {
        std::vector<int> pp(sh.n);
        std::iota(pp.begin(), pp.end(), 0);
        do {
            const SymElem x{pn, pp};
            const int e = sym_length(x) - lw0;
            add_term(out, sym_act(base, x), Laurent::term(e % 2 ? -1 : 1, e));
        } while (std::next_permutation(pp.begin(), pp.end()));
    } while (std::next_permutation(pn.begin(), pn.end()));
    return out;
}

std::string tensor_json(const TensorVec& v) {
    nlohmann::json j;
    j["shape"] = {v.shape.m, v.shape.n};
    j["bound"] = v.bound;
    j["terms"] = nlohmann::json::array();
    for (const auto& [f, c] : v.terms)
        j["terms"].push_back({{"f", f.str()}, {"coeff", c.str()}});
    return j.dump();
}

TensorVec tensor_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const Shape sh{j.at("shape").at(0).get<int>(), j.at("shape").at(1).get<int>()};
    TensorVec v = tensor_zero(sh, j.at("bound").get<int>());
    for (const auto& t : j.at("terms")) {
        const Weight f = Weight::parse(t.at("f").get<std::string>());
        if (f.shape() != sh || !weight_in_box(f, v.bound))
            throw std::domain_error("tensor_from_json: term out of range: " +
                                    f.str());
        add_term(v, f, Laurent::parse(t.at("coeff").get<std::string>()));
    }
    return v;
}

}  // namespace skl

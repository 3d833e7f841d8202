#include "superkl/exterior.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace skl {

namespace {

std::vector<int> ipositions(Shape sh) {
    std::vector<int> out;
    out.reserve(sh.size());
    for (int i = -sh.m; i < 0; ++i) out.push_back(i);
    for (int j = 1; j <= sh.n; ++j) out.push_back(j);
    return out;
}

bool conj_dom(const Weight& w) { return dominant_conjugate(w).has_value(); }

Weight require_dominant(const Weight& f, const char* who) {
    if (!dominant(f)) throw std::domain_error(std::string(who) + ": weight " + f.str() + " is not dominant");
    return f;
}

int total(const std::vector<int>& theta) {
    int s = 0;
    for (int t : theta) s += t;
    return s;
}

}  // namespace

ExtVec ext_zero(Shape sh) { return ExtVec{sh, {}}; }

ExtVec ext_monomial(const Weight& f) {
    require_dominant(f, "ext_monomial");
    ExtVec v{f.shape(), {}};
    v.terms.emplace(f, Laurent::term(1, 0));
    return v;
}

void ext_add_term(ExtVec& v, const Weight& f, const Laurent& c) {
    if (f.shape() != v.shape) throw std::domain_error("ext_add_term: shape mismatch");
    require_dominant(f, "ext_add_term");
    auto it = v.terms.find(f);
    if (it == v.terms.end()) {
        if (!c.is_zero()) v.terms.emplace(f, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) v.terms.erase(it);
}

Laurent ext_coeff(const ExtVec& v, const Weight& f) {
    auto it = v.terms.find(f);
    return it == v.terms.end() ? Laurent() : it->second;
}

ExtVec ext_gen_act(Gen g, int a, const ExtVec& v) {
    ExtVec out{v.shape, {}};
    for (const auto& [f, c] : v.terms) {
        const int e = std::max(f.max_value(), a + 1) + 1;
        TensorVec lift = chevalley_act(g, a, monomial(times_w0(f), e));
        for (const auto& [k, kc] : h0_collapse(lift)) ext_add_term(out, k, c * kc);
    }
    return out;
}

Signature a_signature(const Weight& f, int a) {
    Signature sig;
    sig.reserve(f.shape().size());
    for (int i : ipositions(f.shape())) {
        const int v = f.at(i);
        if (v == (i > 0 ? a : a + 1))
            sig.push_back(1);
        else if (v == (i > 0 ? a + 1 : a))
            sig.push_back(-1);
        else
            sig.push_back(0);
    }
    return sig;
}

Signature reduced_signature(Signature sig, bool dual) {
    const int open = dual ? -1 : 1;
    std::vector<std::size_t> stack;
    for (std::size_t p = 0; p < sig.size(); ++p) {
        if (sig[p] == open) {
            stack.push_back(p);
        } else if (sig[p] == -open && !stack.empty()) {
            sig[stack.back()] = 0;
            sig[p] = 0;
            stack.pop_back();
        }
    }
    return sig;
}

namespace {

// f -/+ d_j at the I-position p.
Weight minus_d(const Weight& f, int p) { return f.shifted(p, p > 0 ? -1 : 1); }
Weight plus_d(const Weight& f, int p) { return f.shifted(p, p > 0 ? 1 : -1); }

CrystalOps ops_from_signature(const Weight& f, int a, bool dual) {
    const Signature red = reduced_signature(a_signature(f, a), dual);
    const auto pos = ipositions(f.shape());
    CrystalOps ops;
    int e_at = -1, f_at = -1;
    for (std::size_t p = 0; p < red.size(); ++p) {
        if (red[p] == -1) {
            ++ops.eps;
            if (dual ? e_at < 0 : true) e_at = static_cast<int>(p);
        } else if (red[p] == 1) {
            ++ops.phi;
            if (dual ? true : f_at < 0) f_at = static_cast<int>(p);
        }
    }
    if (e_at >= 0) ops.e_image = minus_d(f, pos[e_at]);
    if (f_at >= 0) ops.f_image = plus_d(f, pos[f_at]);
    return ops;
}

}  // namespace

CrystalOps crystal_tensor(const Weight& f, int a) { return ops_from_signature(f, a, false); }
CrystalOps crystal_dual(const Weight& f, int a) { return ops_from_signature(f, a, true); }

CrystalOps crystal_dominant(const Weight& f, int a) {
    require_dominant(f, "crystal_dominant");
    CrystalOps ops = crystal_tensor(times_w0(f), a);
    for (auto* img : {&ops.e_image, &ops.f_image}) {
        if (!*img) continue;
        **img = times_w0(**img);
        if (!dominant(**img)) throw std::logic_error("crystal_dominant: image not dominant");
    }
    return ops;
}

CrystalOps crystal_dominant_dual(const Weight& f, int a) {
    require_dominant(f, "crystal_dominant_dual");
    CrystalOps ops = crystal_dual(f, a);
    for (const auto* img : {&ops.e_image, &ops.f_image})
        if (*img && !dominant(**img))
            throw std::logic_error("crystal_dominant_dual: image not dominant");
    return ops;
}

namespace {

bool pos_match(const Weight& f, int v, int* out) {
    for (int j = 1; j <= f.shape().n; ++j)
        if (f.at(j) == v) {
            *out = j;
            return true;
        }
    return false;
}

bool neg_match(const Weight& f, int v, int* out) {
    for (int i = -f.shape().m; i < 0; ++i)
        if (f.at(i) == v) {
            *out = i;
            return true;
        }
    return false;
}

}  // namespace

ProcStep procedure_A(const Weight& f) {
    require_dominant(f, "procedure_A");
    if (typical(f)) throw std::domain_error("procedure_A: typical weight");
    int i = 0, j = 0;
    for (int k = -1; k >= -f.shape().m; --k)
        if (pos_match(f, f.at(k), &j)) {
            i = k;
            break;
        }
    bool at_neg = true;
    for (;;) {
        if (at_neg) {
            while (i < -1 && f.at(i + 1) == f.at(i) + 1) ++i;
            if (!pos_match(f, f.at(i) + 1, &j))
                return ProcStep{f.shifted(i, 1), Gen::F, f.at(i)};
            at_neg = false;
        } else {
            while (j > 1 && f.at(j - 1) == f.at(j) + 1) --j;
            if (!neg_match(f, f.at(j) + 1, &i))
                return ProcStep{f.shifted(j, 1), Gen::E, f.at(j)};
            at_neg = true;
        }
    }
}

ProcStep procedure_B(const Weight& g) {
    require_dominant(g, "procedure_B");
    if (typical(g)) throw std::domain_error("procedure_B: typical weight");
    int i = 0, j = 0;
    for (int k = -g.shape().m; k < 0; ++k)
        if (pos_match(g, g.at(k), &j)) {
            i = k;
            break;
        }
    bool at_neg = true;
    for (;;) {
        if (at_neg) {
            while (i > -g.shape().m && g.at(i - 1) == g.at(i) - 1) --i;
            if (!pos_match(g, g.at(i) - 1, &j))
                return ProcStep{g.shifted(i, -1), Gen::E, g.at(i) - 1};
            at_neg = false;
        } else {
            while (j < g.shape().n && g.at(j + 1) == g.at(j) - 1) ++j;
            if (!neg_match(g, g.at(j) - 1, &i))
                return ProcStep{g.shifted(j, -1), Gen::F, g.at(j) - 1};
            at_neg = true;
        }
    }
}

ExtVec u_basis(const Weight& f) {
    require_dominant(f, "u_basis");
    thread_local std::map<Weight, ExtVec> cache;
    auto hit = cache.find(f);
    if (hit != cache.end()) return hit->second;
    ExtVec v;
    if (typical(f)) {
        v = ext_monomial(f);
    } else {
        const ProcStep step = procedure_A(f);
        v = ext_gen_act(step.xgen, step.color, u_basis(step.h));
        if (ext_coeff(v, f) != Laurent::term(1, 0))
            throw std::logic_error("u_basis: leading coefficient not 1 at " + f.str());
        for (const auto& [g, c] : v.terms)
            if (g != f && !c.in_q_z_q())
                throw std::logic_error("u_basis: coefficient outside qZ[q] at " + g.str());
    }
    cache.emplace(f, v);
    return v;
}

Laurent u_poly(const Weight& g, const Weight& f) {
    require_dominant(g, "u_poly");
    return ext_coeff(u_basis(f), g);
}

std::vector<std::pair<int, int>> atypical_pairs(const Weight& f) {
    require_dominant(f, "atypical_pairs");
    std::vector<std::pair<int, int>> pairs;
    for (int i = -f.shape().m; i < 0; ++i) {
        int j = 0;
        if (pos_match(f, f.at(i), &j)) pairs.emplace_back(i, j);
    }
    return pairs;
}

namespace {

Weight pair_shift(const Weight& f, int i, int j, int delta) {
    return f.shifted(i, delta).shifted(j, delta);
}

Weight transport(const Weight& f, int i, int j, bool lower) {
    const Shape sh = f.shape();
    if (i < -sh.m || i >= 0 || j <= 0 || j > sh.n || f.at(i) != f.at(j))
        throw std::domain_error("lowering/raising: not a matched pair");
    std::vector<Weight> companions;
    for (int k = -sh.m; k < 0; ++k) {
        const bool inside = lower ? (k > i) : (k < i);
        if (!inside) continue;
        for (int l = 1; l <= sh.n; ++l) {
            if ((lower ? l < j : l > j) && f.at(k) == f.at(l))
                companions.push_back(transport(f, k, l, lower));
        }
    }
    int hi = f.max_value(), lo = f.min_value();
    for (const auto& g : companions) {
        hi = std::max(hi, g.max_value());
        lo = std::min(lo, g.min_value());
    }
    const int delta = lower ? 1 : -1;
    for (int a = 1; a <= hi - lo + sh.size() + 2; ++a) {
        bool ok = conj_dom(pair_shift(f, i, j, a * delta));
        for (const auto& g : companions) {
            if (!ok) break;
            ok = conj_dom(pair_shift(g, i, j, a * delta));
        }
        if (ok) return pair_shift(f, i, j, a * delta);
    }
    throw std::logic_error("lowering/raising: no admissible shift");
}

}  // namespace

Weight lowering(const Weight& f, int i, int j) { return transport(f, i, j, true); }
Weight raising(const Weight& f, int i, int j) { return transport(f, i, j, false); }

namespace {

Weight theta_apply(const Weight& f, const std::vector<int>& theta, bool pair_one_first,
                   bool lower) {
    const auto pairs = atypical_pairs(f);
    const int r = static_cast<int>(pairs.size());
    if (theta.size() != pairs.size())
        throw std::domain_error("theta composition: length differs from atypicality");
    Weight w = f;
    for (int t = 0; t < r; ++t) {
        const int s = pair_one_first ? t : r - 1 - t;
        if (theta[s] < 0) throw std::domain_error("theta composition: negative entry");
        for (int rep = 0; rep < theta[s]; ++rep)
            w = transport(w, pairs[s].first, pairs[s].second, lower);
    }
    const auto dom = dominant_conjugate(w);
    if (!dom) throw std::logic_error("theta composition: result has a repeated value");
    return *dom;
}

}  // namespace

Weight theta_lower(const Weight& f, const std::vector<int>& theta, bool primed) {
    return theta_apply(f, theta, !primed, true);
}

Weight theta_raise(const Weight& f, const std::vector<int>& theta, bool primed) {
    return theta_apply(f, theta, primed, false);
}

Weight ll_map(const Weight& f) {
    return theta_lower(f, std::vector<int>(atypical_pairs(f).size(), 1));
}

Weight rr_map(const Weight& f) {
    return theta_raise(f, std::vector<int>(atypical_pairs(f).size(), 1));
}

Laurent closed_u_poly(const Weight& g, const Weight& f) {
    require_dominant(g, "closed_u_poly");
    require_dominant(f, "closed_u_poly");
    const int r = atypicality(f);
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> theta(r);
        int w = 0;
        for (int s = 0; s < r; ++s)
            if (mask & (1u << s)) {
                theta[s] = 1;
                ++w;
            }
        if (theta_lower(f, theta) == g) return Laurent::q(w);
    }
    return {};
}

Laurent closed_l_poly(const Weight& g, const Weight& f) {
    require_dominant(g, "closed_l_poly");
    require_dominant(f, "closed_l_poly");
    if (!bruhat_leq(g, f)) return {};
    const auto pairs = atypical_pairs(g);
    const int r = static_cast<int>(pairs.size());
    if (r == 0) return g == f ? Laurent::term(1, 0) : Laurent();
    const int budget = total(theta_of(g, f));
    const int floor = f.at(atypical_pairs(f).front().first);
    Laurent acc;
    std::function<void(int, const Weight&, int)> dfs = [&](int s, const Weight& w, int used) {
        if (s == r) {
            const auto dom = dominant_conjugate(w);
            if (dom && *dom == f) acc += Laurent::q(used);
            return;
        }
        dfs(s + 1, w, used);
        Weight cur = w;
        for (int steps = 1; used + steps <= budget; ++steps) {
            cur = raising(cur, pairs[s].first, pairs[s].second);
            if (cur.at(pairs[s].first) < floor) break;
            dfs(s + 1, cur, used + steps);
        }
    };
    dfs(0, g, 0);
    return acc.substitute_neg_inv();
}

namespace {

// l_{g,f}(-q^{-1}), driven by procedure B.
Laurent l_shifted(const Weight& g, const Weight& f) {
    if (typical(g)) return g == f ? Laurent::term(1, 0) : Laurent();
    if (!bruhat_leq(g, f)) return {};
    thread_local std::map<std::pair<Weight, Weight>, Laurent> cache;
    const auto key = std::make_pair(g, f);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    const ProcStep step = procedure_B(g);
    const Gen ygen = step.xgen == Gen::E ? Gen::F : Gen::E;
    const CrystalOps dual = crystal_dominant_dual(f, step.color);
    const auto& yimg = ygen == Gen::E ? dual.e_image : dual.f_image;
    Laurent res;
    if (yimg) res = l_shifted(step.h, *yimg);
    const int drop = atypicality(g) - atypicality(step.h);
    if (drop == 1) {
        const CrystalOps dom = crystal_dominant(step.h, step.color);
        const auto& ximg = step.xgen == Gen::E ? dom.e_image : dom.f_image;
        if (!ximg) throw std::logic_error("l recursion: missing crystal image above " + step.h.str());
        res += Laurent::q(1) * l_shifted(*ximg, f);
    } else if (drop != 0) {
        throw std::logic_error("l recursion: atypicality dropped by " + std::to_string(drop));
    }
    cache.emplace(key, res);
    return res;
}

}  // namespace

Laurent l_poly_recursive(const Weight& g, const Weight& f) {
    require_dominant(g, "l_poly_recursive");
    require_dominant(f, "l_poly_recursive");
    return l_shifted(g, f).substitute_neg_inv();
}

std::vector<int> theta_of(const Weight& g, const Weight& f) {
    require_dominant(g, "theta_of");
    require_dominant(f, "theta_of");
    if (!bruhat_leq(g, f)) throw std::domain_error("theta_of: " + g.str() + " is not below " + f.str());
    const auto gp = atypical_pairs(g);
    const auto fp = atypical_pairs(f);
    if (gp.size() != fp.size()) throw std::logic_error("theta_of: atypicality mismatch");
    Weight w = g;
    std::vector<int> theta;
    for (std::size_t s = 0; s < gp.size(); ++s) {
        const int target = f.at(fp[s].first);
        int steps = 0;
        while (w.at(gp[s].first) > target) {
            w = raising(w, gp[s].first, gp[s].second);
            ++steps;
        }
        if (w.at(gp[s].first) != target)
            throw std::logic_error("theta_of: pair " + std::to_string(s + 1) + " missed its target value");
        theta.push_back(steps);
    }
    const auto dom = dominant_conjugate(w);
    if (!dom || *dom != f) throw std::logic_error("theta_of: transported weight differs from target");
    return theta;
}

int rel_length(const Weight& g, const Weight& f) {
    require_dominant(g, "rel_length");
    require_dominant(f, "rel_length");
    if (wt(g) != wt(f)) throw std::domain_error("rel_length: weights lie in different blocks");
    if (bruhat_leq(g, f)) return total(theta_of(g, f));
    if (bruhat_leq(f, g)) return -total(theta_of(f, g));
    Weight hg = g, hf = f;
    for (int k = 0; k < 24; ++k) {
        hg = ll_map(hg);
        if (bruhat_leq(hg, f)) return total(theta_of(hg, f)) - total(theta_of(hg, g));
        hf = ll_map(hf);
        if (bruhat_leq(hf, g)) return total(theta_of(hf, f)) - total(theta_of(hf, g));
    }
    throw std::logic_error("rel_length: no common lower bound within search depth");
}

CrystalIsoReport crystal_iso_check(const std::vector<Weight>& box) {
    CrystalIsoReport rep;
    const auto fail = [&rep](const Weight& f, int a, const std::string& what) {
        rep.ok = false;
        rep.detail = f.str() + " a=" + std::to_string(a) + ": " + what;
    };
    for (const auto& f : box) {
        if (!dominant(f)) {
            fail(f, 0, "not dominant");
            return rep;
        }
        const Weight lf = ll_map(f);
        ++rep.weights;
        if (typical(f) && lf != f) {
            fail(f, 0, "L moved a typical weight");
            return rep;
        }
        if (wt(lf) != wt(f)) {
            fail(f, 0, "L changed the weight");
            return rep;
        }
        const int lo = std::min(f.min_value(), lf.min_value()) - 1;
        const int hi = std::max(f.max_value(), lf.max_value()) + 1;
        for (int a = lo; a <= hi; ++a) {
            const CrystalOps dom = crystal_dominant(f, a);
            const CrystalOps dual = crystal_dominant_dual(lf, a);
            const auto push = [&](const std::optional<Weight>& img) {
                return img ? std::optional<Weight>(ll_map(*img)) : std::nullopt;
            };
            if (push(dom.e_image) != dual.e_image) {
                fail(f, a, "E images disagree");
                return rep;
            }
            if (push(dom.f_image) != dual.f_image) {
                fail(f, a, "F images disagree");
                return rep;
            }
            rep.edges += (dom.e_image ? 1 : 0) + (dom.f_image ? 1 : 0);
        }
    }
    return rep;
}

std::string crystal_dot(const std::vector<Weight>& box, int amin, int amax, CrystalKind kind) {
    std::vector<Weight> nodes = box;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    const bool dominant_kind = kind == CrystalKind::Dominant || kind == CrystalKind::DominantDual;
    if (dominant_kind)
        for (const auto& f : nodes) require_dominant(f, "crystal_dot");
    const auto ops = [kind](const Weight& f, int a) {
        switch (kind) {
            case CrystalKind::Tensor: return crystal_tensor(f, a);
            case CrystalKind::TensorDual: return crystal_dual(f, a);
            case CrystalKind::Dominant: return crystal_dominant(f, a);
            default: return crystal_dominant_dual(f, a);
        }
    };
    std::ostringstream out;
    out << "digraph crystal {\n";
    for (const auto& f : nodes) out << "  \"" << f.str() << "\";\n";
    for (const auto& f : nodes)
        for (int a = amin; a <= amax; ++a) {
            const auto img = ops(f, a).f_image;
            if (!img || !std::binary_search(nodes.begin(), nodes.end(), *img)) continue;
            out << "  \"" << f.str() << "\" -> \"" << img->str() << "\" [label=\"a=" << a << "\"];\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace skl

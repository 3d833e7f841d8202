#include "superkl/weights.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace skl {

std::string Shape::str() const {
    return "(" + std::to_string(m) + "|" + std::to_string(n) + ")";
}

Weight::Weight(Shape s, std::vector<int> neg, std::vector<int> pos)
    : sh_(s), neg_(std::move(neg)), pos_(std::move(pos)) {
    assert((int)neg_.size() == sh_.m && (int)pos_.size() == sh_.n);
}

int Weight::at(int i) const {
    assert(i != 0);
    if (i < 0) {
        assert(i >= -sh_.m);
        return neg_[i + sh_.m];
    }
    assert(i <= sh_.n);
    return pos_[i - 1];
}

Weight Weight::with(int i, int v) const {
    Weight g = *this;
    if (i < 0)
        g.neg_[i + sh_.m] = v;
    else
        g.pos_[i - 1] = v;
    return g;
}

int Weight::max_value() const {
    assert(sh_.size() > 0);
    int v = neg_.empty() ? pos_.front() : neg_.front();
    for (int x : neg_) v = std::max(v, x);
    for (int x : pos_) v = std::max(v, x);
    return v;
}

int Weight::min_value() const {
    assert(sh_.size() > 0);
    int v = neg_.empty() ? pos_.front() : neg_.front();
    for (int x : neg_) v = std::min(v, x);
    for (int x : pos_) v = std::min(v, x);
    return v;
}

namespace {

std::string block_str(const std::vector<int>& b) {
    std::string s;
    for (size_t k = 0; k < b.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(b[k]);
    }
    return s;
}

[[noreturn]] void weight_fail(const std::string& s) {
    throw std::invalid_argument("bad weight literal: " + s);
}

std::pair<std::vector<int>, std::vector<int>> parse_blocks(const std::string& s) {
    size_t i = 0, end = s.size();
    while (i < end && std::isspace((unsigned char)s[i])) ++i;
    while (end > i && std::isspace((unsigned char)s[end - 1])) --end;
    if (i >= end || s[i] != '(' || s[end - 1] != ')') weight_fail(s);
    ++i;
    --end;
    auto parse_block = [&](char stop) {
        std::vector<int> out;
        bool expect_value = false;
        while (i < end && s[i] != stop) {
            size_t j = i;
            if (j < end && (s[j] == '-' || s[j] == '+')) ++j;
            size_t k = j;
            while (k < end && std::isdigit((unsigned char)s[k])) ++k;
            if (k == j) weight_fail(s);
            out.push_back(std::stoi(s.substr(i, k - i)));
            i = k;
            expect_value = false;
            if (i < end && s[i] == ',') {
                ++i;
                expect_value = true;
            } else if (i < end && s[i] != stop) {
                weight_fail(s);
            }
        }
        if (expect_value) weight_fail(s);
        return out;
    };
    auto negb = parse_block('|');
    if (i >= end || s[i] != '|') weight_fail(s);
    ++i;
    auto posb = parse_block(')');
    if (i != end) weight_fail(s);
    return {std::move(negb), std::move(posb)};
}

}  // namespace

std::string Weight::str() const {
    return "(" + block_str(neg_) + "|" + block_str(pos_) + ")";
}

Weight Weight::parse(const std::string& s) {
    auto [negb, posb] = parse_blocks(s);
    Shape sh{(int)negb.size(), (int)posb.size()};
    return Weight(sh, std::move(negb), std::move(posb));
}

InfWeight wt(const Weight& f) {
    InfWeight w;
    for (int v : f.neg())
        if (--w[v] == 0) w.erase(v);
    for (int v : f.pos())
        if (++w[v] == 0) w.erase(v);
    return w;
}

std::string infweight_str(const InfWeight& w) {
    std::string s = "{";
    bool first = true;
    for (const auto& [a, c] : w) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(a) + ":" + std::to_string(c);
    }
    return s + "}";
}

int hash_count(const Weight& f, int a, int j) {
    int s = 0;
    const Shape& sh = f.shape();
    for (int i = j; i <= sh.n; ++i) {
        if (i == 0) continue;
        if (i < -sh.m) continue;
        if (f.at(i) <= a) s += sgn(i);
    }
    return s;
}

int atypicality(const Weight& f) {
    std::map<int, int> cn, cp;
    for (int v : f.neg()) ++cn[v];
    for (int v : f.pos()) ++cp[v];
    int r = 0;
    for (const auto& [v, c] : cn) {
        auto it = cp.find(v);
        if (it != cp.end()) r += std::min(c, it->second);
    }
    return r;
}

bool typical(const Weight& f) { return atypicality(f) == 0; }

bool antidominant(const Weight& f) {
    return std::is_sorted(f.neg().begin(), f.neg().end(), std::greater<int>()) &&
           std::is_sorted(f.pos().begin(), f.pos().end());
}

bool dominant(const Weight& f) {
    auto strict = [](const std::vector<int>& b, auto cmp) {
        for (size_t k = 1; k < b.size(); ++k)
            if (!cmp(b[k - 1], b[k])) return false;
        return true;
    };
    return strict(f.neg(), std::less<int>()) && strict(f.pos(), std::greater<int>());
}

bool bruhat_leq(const Weight& g, const Weight& f) {
    if (g.shape() != f.shape()) return false;
    if (g == f) return true;
    if (wt(g) != wt(f)) return false;
    std::set<int> values(g.neg().begin(), g.neg().end());
    values.insert(g.pos().begin(), g.pos().end());
    values.insert(f.neg().begin(), f.neg().end());
    values.insert(f.pos().begin(), f.pos().end());
    const Shape& sh = f.shape();
    for (int j = -sh.m; j <= sh.n; ++j) {
        if (j == 0) continue;
        for (int a : values)
            if (hash_count(g, a, j) > hash_count(f, a, j)) return false;
    }
    return true;
}

std::vector<Weight> downarrow_successors(const Weight& f) {
    std::set<Weight> out;
    const Shape& sh = f.shape();
    for (int i = -sh.m; i <= -1; ++i)
        for (int j = 1; j <= sh.n; ++j)
            if (f.at(i) == f.at(j)) out.insert(f.shifted(i, 1).shifted(j, 1));
    for (int i = 1; i < sh.n; ++i)
        for (int j = i + 1; j <= sh.n; ++j)
            if (f.at(i) > f.at(j)) out.insert(f.with(i, f.at(j)).with(j, f.at(i)));
    for (int i = -sh.m; i < -1; ++i)
        for (int j = i + 1; j <= -1; ++j)
            if (f.at(i) < f.at(j)) out.insert(f.with(i, f.at(j)).with(j, f.at(i)));
    return {out.begin(), out.end()};
}

SymElem sym_identity(Shape s) {
    SymElem x;
    x.neg.resize(s.m);
    x.pos.resize(s.n);
    std::iota(x.neg.begin(), x.neg.end(), 0);
    std::iota(x.pos.begin(), x.pos.end(), 0);
    return x;
}

SymElem sym_w0(Shape s) {
    SymElem x = sym_identity(s);
    std::reverse(x.neg.begin(), x.neg.end());
    std::reverse(x.pos.begin(), x.pos.end());
    return x;
}

SymElem sym_mul(const SymElem& x, const SymElem& y) {
    SymElem z;
    z.neg.resize(y.neg.size());
    z.pos.resize(y.pos.size());
    for (size_t k = 0; k < y.neg.size(); ++k) z.neg[k] = x.neg[y.neg[k]];
    for (size_t k = 0; k < y.pos.size(); ++k) z.pos[k] = x.pos[y.pos[k]];
    return z;
}

SymElem sym_inverse(const SymElem& x) {
    SymElem z;
    z.neg.resize(x.neg.size());
    z.pos.resize(x.pos.size());
    for (size_t k = 0; k < x.neg.size(); ++k) z.neg[x.neg[k]] = (int)k;
    for (size_t k = 0; k < x.pos.size(); ++k) z.pos[x.pos[k]] = (int)k;
    return z;
}

bool sym_is_identity(const SymElem& x) {
    for (size_t k = 0; k < x.neg.size(); ++k)
        if (x.neg[k] != (int)k) return false;
    for (size_t k = 0; k < x.pos.size(); ++k)
        if (x.pos[k] != (int)k) return false;
    return true;
}

namespace {

int inversions(const std::vector<int>& a) {
    int r = 0;
    for (size_t k = 0; k < a.size(); ++k)
        for (size_t l = k + 1; l < a.size(); ++l)
            if (a[k] > a[l]) ++r;
    return r;
}

}  // namespace

int sym_length(const SymElem& x) { return inversions(x.neg) + inversions(x.pos); }

SymElem sym_gen(Shape s, int i) {
    SymElem x = sym_identity(s);
    if (i < 0) {
        assert(i >= -s.m + 1 && i <= -1);
        std::swap(x.neg[i - 1 + s.m], x.neg[i + s.m]);
    } else {
        assert(i >= 1 && i <= s.n - 1);
        std::swap(x.pos[i - 1], x.pos[i]);
    }
    return x;
}

std::vector<int> reduced_word(const SymElem& x) {
    // Peel descents off the right; the collected letters reversed give x.
    std::vector<int> word;
    SymElem y = x;
    const int m = (int)y.neg.size(), n = (int)y.pos.size();
    for (;;) {
        int gen = 0;
        for (int k = 0; k + 1 < m && gen == 0; ++k)
            if (y.neg[k] > y.neg[k + 1]) gen = k + 1 - m;  // generator -m+k+1
        for (int k = 0; k + 1 < n && gen == 0; ++k)
            if (y.pos[k] > y.pos[k + 1]) gen = k + 1;
        if (gen == 0) break;
        if (gen < 0)
            std::swap(y.neg[gen - 1 + m], y.neg[gen + m]);
        else
            std::swap(y.pos[gen - 1], y.pos[gen]);
        word.push_back(gen);
    }
    assert(sym_is_identity(y));
    std::reverse(word.begin(), word.end());
    return word;
}

Weight sym_act(const Weight& f, const SymElem& x) {
    std::vector<int> negb(f.neg().size()), posb(f.pos().size());
    for (size_t k = 0; k < negb.size(); ++k) negb[k] = f.neg()[x.neg[k]];
    for (size_t k = 0; k < posb.size(); ++k) posb[k] = f.pos()[x.pos[k]];
    return Weight(f.shape(), std::move(negb), std::move(posb));
}

Weight times_w0(const Weight& f) {
    std::vector<int> negb(f.neg().rbegin(), f.neg().rend());
    std::vector<int> posb(f.pos().rbegin(), f.pos().rend());
    return Weight(f.shape(), std::move(negb), std::move(posb));
}

std::pair<Weight, SymElem> antidominant_conjugate(const Weight& f) {
    SymElem x;
    x.neg.resize(f.neg().size());
    x.pos.resize(f.pos().size());
    std::iota(x.neg.begin(), x.neg.end(), 0);
    std::iota(x.pos.begin(), x.pos.end(), 0);
    // Stable rearrangements give the minimal-length conjugating element.
    std::stable_sort(x.neg.begin(), x.neg.end(),
                     [&](int a, int b) { return f.neg()[a] > f.neg()[b]; });
    std::stable_sort(x.pos.begin(), x.pos.end(),
                     [&](int a, int b) { return f.pos()[a] < f.pos()[b]; });
    return {sym_act(f, x), x};
}

std::optional<Weight> dominant_conjugate(const Weight& f) {
    std::vector<int> negb = f.neg(), posb = f.pos();
    std::sort(negb.begin(), negb.end());
    std::sort(posb.begin(), posb.end(), std::greater<int>());
    if (std::adjacent_find(negb.begin(), negb.end()) != negb.end()) return std::nullopt;
    if (std::adjacent_find(posb.begin(), posb.end()) != posb.end()) return std::nullopt;
    return Weight(f.shape(), std::move(negb), std::move(posb));
}

Weight neg_weight(const Weight& f) {
    std::vector<int> negb = f.neg(), posb = f.pos();
    for (int& v : negb) v = -v;
    for (int& v : posb) v = -v;
    return Weight(f.shape(), std::move(negb), std::move(posb));
}

Weight omega_flip(const Weight& f) {
    // Value at i is f(-i); blocks swap and reverse.
    std::vector<int> negb(f.pos().rbegin(), f.pos().rend());
    std::vector<int> posb(f.neg().rbegin(), f.neg().rend());
    return Weight(Shape{f.shape().n, f.shape().m}, std::move(negb), std::move(posb));
}

GlWeight::GlWeight(Shape s, std::vector<int> neg, std::vector<int> pos)
    : sh_(s), neg_(std::move(neg)), pos_(std::move(pos)) {
    assert((int)neg_.size() == sh_.m && (int)pos_.size() == sh_.n);
}

int GlWeight::at(int i) const {
    assert(i != 0);
    return i < 0 ? neg_[i + sh_.m] : pos_[i - 1];
}

bool GlWeight::dominant() const {
    auto weakly_decreasing = [](const std::vector<int>& b) {
        for (size_t k = 1; k < b.size(); ++k)
            if (b[k - 1] < b[k]) return false;
        return true;
    };
    return weakly_decreasing(neg_) && weakly_decreasing(pos_);
}

std::string GlWeight::str() const {
    return "X:(" + block_str(neg_) + "|" + block_str(pos_) + ")";
}

GlWeight GlWeight::parse(const std::string& s) {
    size_t i = 0;
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    if (s.compare(i, 2, "X:") != 0) weight_fail(s);
    auto [negb, posb] = parse_blocks(s.substr(i + 2));
    Shape sh{(int)negb.size(), (int)posb.size()};
    return GlWeight(sh, std::move(negb), std::move(posb));
}

Weight rho_shift(const GlWeight& lambda) {
    const Shape& sh = lambda.shape();
    std::vector<int> negb(sh.m), posb(sh.n);
    for (int k = 0; k < sh.m; ++k) negb[k] = -lambda.neg()[k] + (k - sh.m);
    for (int k = 0; k < sh.n; ++k) posb[k] = lambda.pos()[k] - (k + 1);
    return Weight(sh, std::move(negb), std::move(posb));
}

GlWeight rho_unshift(const Weight& f) {
    const Shape& sh = f.shape();
    std::vector<int> negb(sh.m), posb(sh.n);
    for (int k = 0; k < sh.m; ++k) negb[k] = -f.neg()[k] + (k - sh.m);
    for (int k = 0; k < sh.n; ++k) posb[k] = f.pos()[k] + (k + 1);
    return GlWeight(sh, std::move(negb), std::move(posb));
}

Weight neg_involution(const Weight& f) { return neg_weight(f); }

Weight beta_involution(const Weight& f) {
    Weight g = neg_weight(times_w0(f));
    const int c = f.shape().m + f.shape().n + 1;
    std::vector<int> negb = g.neg(), posb = g.pos();
    for (int& v : negb) v -= c;
    for (int& v : posb) v -= c;
    return Weight(f.shape(), std::move(negb), std::move(posb));
}

}  // namespace skl

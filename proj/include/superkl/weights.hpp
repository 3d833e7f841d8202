#pragma once

// Integer-valued weight functions on the index set
//   I(m|n) = {-m, ..., -1} cup {1, ..., n},
// with sgn(i) = -1 for i < 0 and +1 for i > 0.  Literal syntax is
// "(a,...|b,...)" listing values at -m..-1, then 1..n; one side may be
// empty, e.g. "(|1,2)".  Weights compare lexicographically on
// (negative block, positive block), which fixes all deterministic
// orderings used elsewhere.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skl {

struct Shape {
    int m = 0;
    int n = 0;
    auto operator<=>(const Shape&) const = default;
    int size() const { return m + n; }
    std::string str() const;
};

inline int sgn(int i) { return i > 0 ? 1 : -1; }

class Weight {
public:
    Weight() = default;
    Weight(Shape s, std::vector<int> neg, std::vector<int> pos);

    const Shape& shape() const { return sh_; }
    const std::vector<int>& neg() const { return neg_; }
    const std::vector<int>& pos() const { return pos_; }

    // Value at i in I(m|n).
    int at(int i) const;
    // Copy with the value at i replaced.
    Weight with(int i, int v) const;
    // Copy with the value at i shifted by delta.
    Weight shifted(int i, int delta) const { return with(i, at(i) + delta); }

    int max_value() const;
    int min_value() const;

    std::strong_ordering operator<=>(const Weight&) const = default;

    std::string str() const;
    static Weight parse(const std::string& s);  // throws std::invalid_argument

private:
    Shape sh_;
    std::vector<int> neg_, pos_;
};

// Finitely supported coefficient vector on basis eps_a, a in Z.
using InfWeight = std::map<int, int>;

InfWeight wt(const Weight& f);
std::string infweight_str(const InfWeight& w);

// #(f,a,j) = sum of sgn(i) over i >= j (in I-order) with f(i) <= a.
int hash_count(const Weight& f, int a, int j);

// Number of values taken on both sides of the bar.
int atypicality(const Weight& f);
bool typical(const Weight& f);

bool antidominant(const Weight& f);  // neg weakly decreasing, pos weakly increasing
bool dominant(const Weight& f);      // neg strictly increasing, pos strictly decreasing

// Partial order: g <= f iff wt(g) = wt(f) and #(g,a,j) <= #(f,a,j) for all a,j.
bool bruhat_leq(const Weight& g, const Weight& f);

// All weights reachable from f by one lowering move:
//   raise a matched pair by 1, or swap an out-of-order pair within a block.
std::vector<Weight> downarrow_successors(const Weight& f);

// Element of S_{m|n} = S_m x S_n.  neg[k] and pos[k] give the images as
// 0-based offsets into the respective block: x(-m+k) = -m + neg[k],
// x(1+k) = 1 + pos[k].  Multiplication is composition, (xy)(i) = x(y(i)),
// so that the right action f.x = f o x satisfies (f.x).y = f.(xy).
struct SymElem {
    std::vector<int> neg, pos;
    bool operator==(const SymElem&) const = default;
};

SymElem sym_identity(Shape s);
SymElem sym_w0(Shape s);  // reverses each block
SymElem sym_mul(const SymElem& x, const SymElem& y);
SymElem sym_inverse(const SymElem& x);
bool sym_is_identity(const SymElem& x);
int sym_length(const SymElem& x);  // inversions per block, summed

// Generator index convention: i in {-m+1..-1} names the transposition of
// positions (i-1, i); i in {1..n-1} names (i, i+1).
SymElem sym_gen(Shape s, int i);
// Word [i_1..i_k] with x = s_{i_1} ... s_{i_k}; right action applies
// letters left to right.  Length of the word equals sym_length(x).
std::vector<int> reduced_word(const SymElem& x);

Weight sym_act(const Weight& f, const SymElem& x);  // f.x
Weight times_w0(const Weight& f);                   // f.w0

// Minimal-length x with f.x antidominant; returns (f.x, x).
std::pair<Weight, SymElem> antidominant_conjugate(const Weight& f);
// The dominant rearrangement, or nullopt when a block repeats a value.
std::optional<Weight> dominant_conjugate(const Weight& f);

Weight neg_weight(const Weight& f);   // values negated in place
Weight omega_flip(const Weight& f);   // Z^{m|n} -> Z^{n|m}, value at i = f(-i)

// Integral gl(m|n) weight in the standard coordinates, literal "X:(...|...)".
class GlWeight {
public:
    GlWeight() = default;
    GlWeight(Shape s, std::vector<int> neg, std::vector<int> pos);
    const Shape& shape() const { return sh_; }
    const std::vector<int>& neg() const { return neg_; }
    const std::vector<int>& pos() const { return pos_; }
    int at(int i) const;
    bool dominant() const;  // both blocks weakly decreasing
    std::strong_ordering operator<=>(const GlWeight&) const = default;
    std::string str() const;
    static GlWeight parse(const std::string& s);

private:
    Shape sh_;
    std::vector<int> neg_, pos_;
};

// f_lambda(i) = sgn(i) * (lambda(i) - i); lambda dominant iff f_lambda dominant.
Weight rho_shift(const GlWeight& lambda);
GlWeight rho_unshift(const Weight& f);

// f_{-lambda - 2rho} = -f_lambda.
Weight neg_involution(const Weight& f);
// f_{beta - w0.lambda} = -f_lambda.w0 - (m+n+1).
Weight beta_involution(const Weight& f);

}  // namespace skl

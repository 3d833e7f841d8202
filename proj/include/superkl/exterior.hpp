#pragma once

// The exterior quotient: vectors are finite Laurent combinations of K_f for
// dominant f (neg strictly increasing, pos strictly decreasing).  Generator
// actions are computed by lifting K_f = M_{f.w0} H_0 to the tensor module,
// acting there, and collapsing with h0_collapse; no truncation is involved
// because a single Chevalley step only ever reaches value a+1.
//
// Crystal operators come in four flavours: the tensor ones (primed, cancel
// +- in the a-signature), their duals (cancel -+), and the dominant pair
// obtained by conjugating with w0.  Lowering/raising operators transport an
// atypical pair by the minimal shift keeping the stated family of weights
// conjugate to dominant ones; theta-compositions of these give closed
// formulas for both the u- and l-coefficients.

#include "superkl/laurent.hpp"
#include "superkl/tensor.hpp"
#include "superkl/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skl {

struct ExtVec {
    Shape shape;
    std::map<Weight, Laurent> terms;
    bool operator==(const ExtVec&) const = default;
};

ExtVec ext_zero(Shape sh);
// K_f; throws std::domain_error unless f is dominant.
ExtVec ext_monomial(const Weight& f);
void ext_add_term(ExtVec& v, const Weight& f, const Laurent& c);
Laurent ext_coeff(const ExtVec& v, const Weight& f);

// Left action of E_a / F_a through the tensor lift.
ExtVec ext_gen_act(Gen g, int a, const ExtVec& v);

// Entries +1/-1/0 in I-order, length m+n.
using Signature = std::vector<int>;

Signature a_signature(const Weight& f, int a);
// Cancels +- pairs (or -+ pairs when dual is set), possibly separated by
// zeros, until none remain.
Signature reduced_signature(Signature sig, bool dual = false);

struct CrystalOps {
    std::optional<Weight> e_image, f_image;
    int eps = 0;
    int phi = 0;
};

// Tensor crystal: E at the rightmost -, F at the leftmost + of the reduced
// signature.
CrystalOps crystal_tensor(const Weight& f, int a);
// Dual crystal: E at the leftmost -, F at the rightmost + of the dual
// reduced signature.
CrystalOps crystal_dual(const Weight& f, int a);
// Conjugates of the tensor operators by w0; f must be dominant and the
// images are again dominant.
CrystalOps crystal_dominant(const Weight& f, int a);
// Restriction of the dual operators to dominant weights.
CrystalOps crystal_dominant_dual(const Weight& f, int a);

// One step of the reduction walk: the weight h one step closer to typical,
// plus the generator X_a with X_a U_h = U_f (procedure A, anchored at the
// innermost matched pair) or the twisted variant anchored at the outermost
// pair (procedure B).  Y_a is the opposite generator of the same color.
// Throws std::domain_error on typical input.
struct ProcStep {
    Weight h;
    Gen xgen = Gen::E;
    int color = 0;
    bool operator==(const ProcStep&) const = default;
};

ProcStep procedure_A(const Weight& f);
ProcStep procedure_B(const Weight& g);

// U_f: K_f for typical f, else X_a U_h along procedure A.  Memoized.
ExtVec u_basis(const Weight& f);
Laurent u_poly(const Weight& g, const Weight& f);

// Matched pairs (i_s, j_s) of a dominant weight, s = 1..#f ordered with
// i_1 < ... < i_r < 0 < j_r < ... < j_1, so pair 1 carries the smallest
// common value.
std::vector<std::pair<int, int>> atypical_pairs(const Weight& f);

// L_{i,j}(f) = f - a(d_i - d_j), a minimal positive such that the result
// and every L_{k,l}(f) - a(d_i - d_j) for a matched pair strictly inside
// (i, j) are conjugate to dominant weights; raising is dual, with the
// matched pairs strictly outside (i, j).
Weight lowering(const Weight& f, int i, int j);
Weight raising(const Weight& f, int i, int j);

// One entry per atypical pair, outermost pair first.
using ThetaTuple = std::vector<int>;

// Compositions along the pairs of f, dominant-conjugated at the end.
// Unprimed L applies pair 1 first, primed L pair r first; unprimed R pair r
// first, primed R pair 1 first.  theta must have length #f.
Weight theta_lower(const Weight& f, const ThetaTuple& theta,
                   bool primed = false);
Weight theta_raise(const Weight& f, const ThetaTuple& theta,
                   bool primed = false);

// The mutually inverse bijections L = L_{(1,..,1)} and R = R_{(1,..,1)}.
Weight ll_map(const Weight& f);
Weight rr_map(const Weight& f);

// u_{g,f} = q^{|theta|} when g = L_theta(f) for the unique theta in
// {0,1}^{#f}, else 0.
Laurent closed_u_poly(const Weight& g, const Weight& f);
// l_{g,f}(-q^{-1}) = sum of q^{|theta|} over theta in N^{#g} with
// R'_theta(g) = f, substituted back into the q variable.
Laurent closed_l_poly(const Weight& g, const Weight& f);
// Same polynomial through the procedure-B recursion.  Memoized.
Laurent l_poly_recursive(const Weight& g, const Weight& f);

// The unique maximal theta with R'_theta(g) = f, built by transporting the
// pairs of g onto the pairs of f one at a time; requires g <= f.
ThetaTuple theta_of(const Weight& g, const Weight& f);
// |theta(g,f)| extended to same-weight incomparable pairs through a common
// lower bound.
int rel_length(const Weight& g, const Weight& f);

struct CrystalIsoReport {
    std::size_t weights = 0;
    std::size_t edges = 0;
    bool ok = true;
    std::string detail;
};

// Checks that L fixes typicals, preserves wt, and intertwines the dominant
// crystal with its dual on every element of the box.
CrystalIsoReport crystal_iso_check(const std::vector<Weight>& box);

enum class CrystalKind { Tensor, TensorDual, Dominant, DominantDual };

// DOT graph of the F-edges over the box for colors amin..amax, nodes in
// weight order.
std::string crystal_dot(const std::vector<Weight>& box, int amin, int amax,
                        CrystalKind kind);

}  // namespace skl

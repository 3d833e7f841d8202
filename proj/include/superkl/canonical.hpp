#pragma once

// Canonical basis T_f^{(d)} and dual canonical basis L_f^{(d)} of the
// truncated tensor module.  Three routes are provided:
//   - solve_bar_invariant_basis: brute-force unitriangular solver over a
//     downward-closed box, used as the independent oracle;
//   - kl_typical: the parabolic Kazhdan-Lusztig recursion along the weak
//     order, valid for typical weights;
//   - t_basis: the general algorithm, reducing atypicality by a bumping
//     pass and correcting with bar-invariant lifts.
// All routes produce identical vectors; the fast paths assert the
// structural facts they rely on and throw std::logic_error on mismatch.

#include "superkl/tensor.hpp"

#include <utility>
#include <vector>

namespace skl {

struct TransitionTable {
    Shape shape;
    int bound = 0;
    char family = 't';  // 't', 'l' or 'u'
    std::map<std::pair<Weight, Weight>, Laurent> entries;  // (g, f)
    Laurent poly(const Weight& g, const Weight& f) const;
};

// All g with g ⪯ f and entries ≤ d, via closure under lowering moves.
std::vector<Weight> box_below(const Weight& f, int d);
std::vector<Weight> box_closure(const std::vector<Weight>& seeds, int d);
// Orders a box so that g precedes f whenever g ≺ f; lexicographic
// tie-break for determinism.
std::vector<Weight> linear_extension(std::vector<Weight> box);

// Unitriangular bar-invariant bases over a downward-closed box; returns
// the t- and l-tables.  Throws std::domain_error when the box is not
// closed under lowering moves within the bound.
std::pair<TransitionTable, TransitionTable> solve_bar_invariant_basis(
    const std::vector<Weight>& box, int d);

// T_f for typical f by the parabolic Kazhdan-Lusztig recursion.
TensorVec kl_typical(const Weight& f, int d);

enum class BumpSide { Positive, Negative, Shortest };

struct BumpLetter {
    Gen gen;
    int color;
    int power;
    bool operator==(const BumpLetter&) const = default;
};

struct BumpingPlan {
    Weight target;
    Weight h;        // target with all labeled entries raised by one
    int e = 0;       // working bound for the recursive step
    bool from_negative = false;
    std::vector<BumpLetter> word;           // applied left to right
    std::vector<std::vector<int>> counts;   // counts[s] = (n_{s,1}, ...)
};

// Throws std::domain_error for typical f.
BumpingPlan bumping_plan(const Weight& f, int d,
                         BumpSide side = BumpSide::Positive);

TensorVec t_basis(const Weight& f, int d, BumpSide side = BumpSide::Positive);
Laurent t_poly(const Weight& g, const Weight& f, int d,
               BumpSide side = BumpSide::Positive);

// Dual canonical basis, computed through the solver on box_below(f, d).
TensorVec l_basis(const Weight& f, int d);
Laurent l_poly(const Weight& g, const Weight& f, int d);

struct PositivityViolation {
    char family;  // 't' or 'l'
    Weight g, f;
    Laurent poly;
};

// Checks t-coefficients against N[q] and l-coefficients against
// N[-q^{-1}] over the box; the expected result is an empty list.
std::vector<PositivityViolation> positivity_scan(const std::vector<Weight>& box,
                                                 int d);

}  // namespace skl

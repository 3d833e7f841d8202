#pragma once

// Representation-theoretic outputs for gl(m|n), all phrased through the
// combinatorics of dominant weight functions: composition multiplicities of
// Kac modules, tilting multiplicities, irreducible characters in the Kac
// basis, block membership, duality on highest weights, and Ext Poincare
// series.  Every answer is computed in shifted coordinates and converted at
// the boundary.

#include "superkl/laurent.hpp"
#include "superkl/weights.hpp"

#include <map>

namespace skl {

// The Kac modules containing a fixed simple: entries mu -> [K(mu):L(lambda)]
// restricted to the nonzero ones, of which there are exactly 2^{#lambda}.
struct DecompRow {
    GlWeight lambda;
    std::map<GlWeight, int> entries;
};

// Poincare polynomial sum_i dim Ext^i q^i for the labelled pair of modules.
struct ExtSeries {
    GlWeight mu, lambda;
    Laurent series;
};

// [K(mu):L(lambda)] in {0,1}.  Computed twice: from the shift-tuple
// description of the decomposition row, and from the u-coefficient through
// the beta involution; throws std::logic_error if the two disagree.
int kac_multiplicity(const GlWeight& mu, const GlWeight& lambda);

// The full row: all 2^{#lambda} Kac modules containing L(lambda).
DecompRow kac_decomposition_row(const GlWeight& lambda);

// (U(lambda):K(mu)) = u_{mu,lambda}(1), always 0 or 1.
int tilting_multiplicity(const GlWeight& lambda, const GlWeight& mu);

// Coefficients of ch L(lambda) in the Kac basis: mu -> l_{mu,lambda}(1),
// restricted to pairs of relative length <= depth.  For atypical lambda the
// full support is infinite, so the cutoff is part of the contract; every
// retained coefficient is exact.
std::map<GlWeight, int> character_in_kac_basis(const GlWeight& lambda,
                                               int depth);

// Central character data: two weights are linked iff their images agree.
InfWeight block_of(const GlWeight& lambda);

// Highest weight of the dual of the simple module with highest weight
// lambda; an involution on dominant weights.
GlWeight dual_simple_highest_weight(const GlWeight& lambda);

// The lambda whose tilting module is the projective cover of L(mu).
GlWeight projective_cover_label(const GlWeight& mu);

// sum_i dim Ext^i(K(mu), L(lambda)) q^i; a genuine polynomial, nonzero iff
// mu is below lambda in the Bruhat order.
ExtSeries ext_kac_simple(const GlWeight& mu, const GlWeight& lambda);

// sum_i dim Ext^i(L(mu), L(lambda)) q^i, exact in every degree <= depth.
// The full series is an infinite power series whenever the weights are
// atypical, so the cutoff is part of the contract.
ExtSeries ext_simple_simple(const GlWeight& mu, const GlWeight& lambda,
                            int depth);

}  // namespace skl

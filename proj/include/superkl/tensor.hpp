#pragma once

// Vectors in the truncated tensor module: finite Laurent combinations of
// monomials M_f, where every entry of f is at most `bound`.  Truncation is
// built into term insertion, so module operations silently discard
// monomials that leave the box.  Conventions:
//   - negative positions carry the dual factors (value a raised by E_a,
//     lowered by F_a), positive positions the ordinary ones (a+1 lowered
//     by E_a, a raised by F_a);
//   - the Hecke algebra acts on the right, H_i^2 = 1 - (q - q^-1) H_i;
//   - E_a, F_a require a < bound so that they commute with truncation.

#include "superkl/laurent.hpp"
#include "superkl/weights.hpp"

#include <map>
#include <string>
#include <vector>

namespace skl {

struct TensorVec {
    Shape shape;
    int bound = 0;
    std::map<Weight, Laurent> terms;
    bool operator==(const TensorVec&) const = default;
};

TensorVec tensor_zero(Shape sh, int d);
// M_f; throws std::domain_error when an entry of f exceeds d.
TensorVec monomial(const Weight& f, int d);
// Adds c * M_f, dropping it when f leaves the box.
void add_term(TensorVec& v, const Weight& f, const Laurent& c);
Laurent coeff(const TensorVec& v, const Weight& f);
int support_max_value(const TensorVec& v);  // bound when empty
// Restriction to entries <= d.
TensorVec pi_truncate(const TensorVec& v, int d);

// Right action of H_i (or H_i^{-1}).
TensorVec hecke_act(const TensorVec& v, int i, bool inverse = false);
// Right action of H_{x} for x = s_{i_1}...s_{i_k} given as word; with
// inverse set, acts by the inverse of that product.
TensorVec hecke_word_act(const TensorVec& v, const std::vector<int>& word,
                         bool inverse = false);

enum class Gen { E, F };

TensorVec chevalley_act(Gen g, int a, const TensorVec& v);
// Divided power: g_a^r / [r]!.
TensorVec divided_power_act(Gen g, int a, int r, const TensorVec& v);

// The antilinear bar involution on the truncated module.
TensorVec bar_involution(const TensorVec& v);
// Antilinear map M_f -> M_{-f}; the caller chooses the bound of the image.
TensorVec sigma_map(const TensorVec& v, int new_bound);
// Linear isomorphism to the flipped shape, M_f -> M_{omega(f)}.
TensorVec omega_map(const TensorVec& v);

// Symmetric bilinear form with orthonormal monomials.
Laurent form_T(const TensorVec& u, const TensorVec& v);
// <u, v> = (u, sigma(bar v)); symmetric, antilinear in q on the right slot.
Laurent form_angle_T(const TensorVec& u, const TensorVec& v);

// Right action of H_0 = sum_x (-q)^{l(x)-l(w0)} H_x, collapsed to the
// K-labels it produces: M_f H_0 = (-q)^{l(x)} K_{f.x.w0} when f.x.w0 is
// dominant (x minimal with f.x antidominant), else 0.
std::map<Weight, Laurent> h0_collapse(const TensorVec& v);
// Same action expanded back into monomials.
TensorVec h0_act(const TensorVec& v);
// K_f = M_{f.w0} H_0 = sum_x (-q)^{l(x)-l(w0)} M_{f.w0.x}; f dominant.
TensorVec k_basis(const Weight& f, int d);

std::string tensor_json(const TensorVec& v);
TensorVec tensor_from_json(const std::string& text);

}  // namespace skl

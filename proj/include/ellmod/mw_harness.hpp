#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ellmod/closure.hpp"
#include "ellmod/mat2.hpp"

namespace ellmod {

// Verification harness for the two-factor fiber-product lemma: a subgroup
// H <= D = {(b, b') in B x B' : det b = det b'} with surjective projections
// is either all of D, or admits an isomorphism f and a character chi with
// chi^2 = 1 such that b' = chi(h) f b f^{-1} on all of H.
//
// B is parametrized by the subgroup of allowed determinants (all units for
// e = 1, or a prescribed subgroup such as <p> for the det-restricted
// variant).

struct MWWitness {
    Mat2 f;
    // chi(h) per element of H, keyed by the element code; values +1 / -1
    std::unordered_map<std::uint64_t, int> chi; // key: low 64 bits of code
    bool chi_nontrivial = false;
};

struct MWResult {
    bool full = false;          // H = D
    MWWitness witness;          // set when full == false
};

// det_subgroup: sorted list of the allowed determinant residues (must form
// a subgroup of (Z/ell)^*). Throws PreconditionFailed if either projection
// of H fails to cover B, and NoWitnessFound if H is proper yet no (f, chi)
// exists -- the latter would contradict the lemma and is treated as a test
// failure, not a recoverable state.
MWResult verify_mw_instance(const SubgroupClosure& H,
                            const std::vector<std::uint32_t>& det_subgroup);

// Allowed-determinant helpers.
std::vector<std::uint32_t> all_units(std::uint32_t ell);
std::vector<std::uint32_t> cyclic_subgroup(std::uint32_t ell, std::uint32_t gen);

} // namespace ellmod

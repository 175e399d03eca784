#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "ellmod/mat2.hpp"

namespace ellmod {

// Subgroup of the determinant locus generated by breadth-first closure
// under multiplication (the groups are finite, so inverses come for free).
// Enumeration order is deterministic: FIFO over elements, generators in
// the given order.
struct SubgroupClosure {
    std::uint32_t ell = 0;
    std::size_t n = 0;
    std::vector<DetLocusElement> generators;
    std::vector<unsigned __int128> elements; // discovery order
    std::unordered_set<unsigned __int128, U128Hash> element_set;
    bool complete = false;

    bool contains(const DetLocusElement& x) const {
        return element_set.count(x.code()) != 0;
    }
    std::size_t size() const { return elements.size(); }
    DetLocusElement element(std::size_t i) const {
        return DetLocusElement::from_code(elements[i], ell, n);
    }
};

// Closure under product; complete = false with the partial set returned if
// the cap is exceeded.
SubgroupClosure closure(const std::vector<DetLocusElement>& generators,
                        std::uint64_t cap = 10'000'000);

// --- standard subgroups of GL2(F_ell), as explicit element lists ---

std::vector<Mat2> all_gl2(std::uint32_t ell);
std::vector<Mat2> all_sl2(std::uint32_t ell);
// upper-triangular invertible matrices
std::vector<Mat2> borel_subgroup(std::uint32_t ell);
// diagonal torus together with its antidiagonal coset
std::vector<Mat2> split_cartan_normalizer(std::uint32_t ell);
// {[[a, eps b], [b, a]]} for a fixed nonsquare eps, plus its normalizing coset
std::vector<Mat2> nonsplit_cartan_normalizer(std::uint32_t ell);

// Smallest quadratic nonresidue mod ell.
std::uint32_t least_nonresidue(std::uint32_t ell);

// Generators of SL2(Z/ell): the two elementary transvections.
std::vector<Mat2> sl2_generators(std::uint32_t ell);
// Generators of GL2(Z/ell): transvections plus diag(r, 1) for r a
// generator of the unit group.
std::vector<Mat2> gl2_generators(std::uint32_t ell);
std::uint32_t unit_group_generator(std::uint32_t ell);

// Graph subgroups of D used by the fiber-product lemma harness tests:
// {(b, f0 b f0^{-1})} and {(b, chi(det b) f0 b f0^{-1})} over b in GL2.
std::vector<DetLocusElement> graph_subgroup(const Mat2& f0);
std::vector<DetLocusElement> twisted_graph_subgroup(const Mat2& f0);

// Preimage in GL2(F_ell) of a projectively exceptional subgroup (A4, S4 or
// A5), found by generator search; empty if no subgroup of that projective
// type exists. order12 = A4, order24 = S4, order60 = A5.
std::vector<Mat2> exceptional_preimage(std::uint32_t ell, unsigned projective_order);

} // namespace ellmod

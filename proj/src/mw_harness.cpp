#include "ellmod/mw_harness.hpp"

#include <algorithm>
#include <unordered_set>

#include "ellmod/errors.hpp"

namespace ellmod {

std::vector<std::uint32_t> all_units(std::uint32_t ell) {
    std::vector<std::uint32_t> out;
    out.reserve(ell - 1);
    for (std::uint32_t d = 1; d < ell; ++d) out.push_back(d);
    return out;
}

std::vector<std::uint32_t> cyclic_subgroup(std::uint32_t ell, std::uint32_t gen) {
    gen %= ell;
    if (gen == 0) throw InvalidInput("generator must be a unit");
    std::vector<std::uint32_t> out;
    std::uint64_t x = 1;
    do {
        out.push_back(static_cast<std::uint32_t>(x));
        x = x * gen % ell;
    } while (x != 1);
    std::sort(out.begin(), out.end());
    return out;
}

MWResult verify_mw_instance(const SubgroupClosure& H,
                            const std::vector<std::uint32_t>& det_subgroup) {
    if (!H.complete) throw PreconditionFailed("closure must be complete");
    if (H.n != 2) throw PreconditionFailed("harness handles two factors only");
    const std::uint32_t ell = H.ell;
    if (ell < 5) throw InvalidLevel("lemma requires ell >= 5");

    std::unordered_set<std::uint32_t> allowed(det_subgroup.begin(), det_subgroup.end());
    const std::uint64_t sl2 = static_cast<std::uint64_t>(ell) * (ell * ell - 1);
    const std::uint64_t b_size = sl2 * allowed.size();

    // Surjectivity of both projections onto B.
    std::unordered_set<std::uint64_t> proj1, proj2;
    std::vector<std::pair<Mat2, Mat2>> pairs;
    pairs.reserve(H.size());
    for (std::size_t i = 0; i < H.size(); ++i) {
        DetLocusElement h = H.element(i);
        if (!allowed.count(h.mats[0].det()))
            throw PreconditionFailed("element determinant outside the prescribed subgroup");
        proj1.insert(h.mats[0].code());
        proj2.insert(h.mats[1].code());
        pairs.push_back({h.mats[0], h.mats[1]});
    }
    if (proj1.size() != b_size || proj2.size() != b_size)
        throw PreconditionFailed("projections of H do not cover B");

    MWResult result;
    const std::uint64_t d_size = sl2 * sl2 * allowed.size();
    if (H.size() == d_size) {
        result.full = true;
        return result;
    }

    // Proper subgroup: the lemma guarantees a conjugating f with signs.
    for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(ell) * ell * ell * ell;
         ++code) {
        const Mat2 f = Mat2::from_code(code, ell);
        if (!f.invertible()) continue;
        const Mat2 fi = f.inverse();
        MWWitness w;
        w.f = f;
        bool ok = true;
        for (const auto& [b, bp] : pairs) {
            const Mat2 conj = f * b * fi;
            if (bp == conj) {
                w.chi[static_cast<std::uint64_t>(DetLocusElement{{b, bp}}.code())] = 1;
            } else if (bp == conj.negated()) {
                w.chi[static_cast<std::uint64_t>(DetLocusElement{{b, bp}}.code())] = -1;
                w.chi_nontrivial = true;
            } else {
                ok = false;
                break;
            }
        }
        if (ok) {
            result.full = false;
            result.witness = std::move(w);
            return result;
        }
    }
    throw NoWitnessFound("proper subgroup with surjective projections but no (f, chi) witness");
}

} // namespace ellmod

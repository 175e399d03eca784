#include "ellmod/closure.hpp"

#include <deque>

#include "ellmod/errors.hpp"

namespace ellmod {

SubgroupClosure closure(const std::vector<DetLocusElement>& generators, std::uint64_t cap) {
    if (generators.empty()) throw InvalidInput("closure needs at least one generator");
    SubgroupClosure H;
    H.ell = generators.front().ell();
    H.n = generators.front().n();
    H.generators = generators;
    for (const auto& g : generators) {
        if (!g.valid()) throw InvalidInput("generator violates the determinant-locus invariants");
        if (g.ell() != H.ell || g.n() != H.n) throw InvalidInput("generators must share ell and n");
    }

    DetLocusElement id;
    for (std::size_t i = 0; i < H.n; ++i) id.mats.push_back(Mat2::identity(H.ell));

    std::deque<DetLocusElement> queue;
    const auto push = [&](const DetLocusElement& x) {
        const auto code = x.code();
        if (H.element_set.insert(code).second) {
            H.elements.push_back(code);
            queue.push_back(x);
            return true;
        }
        return false;
    };
    push(id);
    H.complete = true;
    while (!queue.empty()) {
        const DetLocusElement x = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            if (H.elements.size() >= cap) {
                H.complete = false;
                return H;
            }
            push(x * g);
        }
    }
    return H;
}

std::vector<Mat2> all_gl2(std::uint32_t ell) {
    std::vector<Mat2> out;
    const std::uint64_t total = static_cast<std::uint64_t>(ell) * ell * ell * ell;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        Mat2 m = Mat2::from_code(code, ell);
        if (m.invertible()) out.push_back(m);
    }
    return out;
}

std::vector<Mat2> all_sl2(std::uint32_t ell) {
    std::vector<Mat2> out;
    for (const auto& m : all_gl2(ell))
        if (m.det() == 1) out.push_back(m);
    return out;
}

std::vector<Mat2> borel_subgroup(std::uint32_t ell) {
    std::vector<Mat2> out;
    for (std::uint32_t a = 1; a < ell; ++a)
        for (std::uint32_t d = 1; d < ell; ++d)
            for (std::uint32_t b = 0; b < ell; ++b) out.push_back(Mat2{a, b, 0, d, ell});
    return out;
}

std::vector<Mat2> split_cartan_normalizer(std::uint32_t ell) {
    std::vector<Mat2> out;
    for (std::uint32_t a = 1; a < ell; ++a)
        for (std::uint32_t d = 1; d < ell; ++d) {
            out.push_back(Mat2{a, 0, 0, d, ell});
            out.push_back(Mat2{0, a, d, 0, ell});
        }
    return out;
}

std::uint32_t least_nonresidue(std::uint32_t ell) {
    for (std::uint32_t z = 2; z < ell; ++z)
        if (legendre_unchecked(z, ell) == -1) return z;
    throw InvalidModulus("no nonresidue found; modulus not an odd prime?");
}

std::vector<Mat2> nonsplit_cartan_normalizer(std::uint32_t ell) {
    const std::uint32_t eps = least_nonresidue(ell);
    std::vector<Mat2> out;
    for (std::uint32_t a = 0; a < ell; ++a)
        for (std::uint32_t b = 0; b < ell; ++b) {
            if (a == 0 && b == 0) continue;
            const std::uint32_t eb = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(eps) * b % ell);
            // [[a, eps b], [b, a]] is F_{ell^2}^* acting on the basis {1, sqrt(eps)};
            // the second family is its coset under conjugation by diag(1, -1).
            out.push_back(Mat2{a, eb, b, a, ell});
            out.push_back(Mat2{a, (ell - eb) % ell, b, (ell - a) % ell, ell});
        }
    return out;
}

std::uint32_t unit_group_generator(std::uint32_t ell) {
    for (std::uint32_t r = 2; r < ell; ++r) {
        std::uint64_t x = r;
        std::uint32_t ord = 1;
        while (x != 1) {
            x = x * r % ell;
            ++ord;
        }
        if (ord == ell - 1) return r;
    }
    throw InvalidModulus("no primitive root; modulus not prime?");
}

std::vector<Mat2> sl2_generators(std::uint32_t ell) {
    return {Mat2{1, 1, 0, 1, ell}, Mat2{1, 0, 1, 1, ell}};
}

std::vector<Mat2> gl2_generators(std::uint32_t ell) {
    auto gens = sl2_generators(ell);
    gens.push_back(Mat2{unit_group_generator(ell), 0, 0, 1, ell});
    return gens;
}

std::vector<DetLocusElement> graph_subgroup(const Mat2& f0) {
    if (!f0.invertible()) throw InvalidInput("conjugator must be invertible");
    const Mat2 fi = f0.inverse();
    std::vector<DetLocusElement> out;
    for (const auto& b : all_gl2(f0.ell)) out.push_back(DetLocusElement{{b, f0 * b * fi}});
    return out;
}

std::vector<DetLocusElement> twisted_graph_subgroup(const Mat2& f0) {
    if (!f0.invertible()) throw InvalidInput("conjugator must be invertible");
    const Mat2 fi = f0.inverse();
    std::vector<DetLocusElement> out;
    for (const auto& b : all_gl2(f0.ell)) {
        Mat2 image = f0 * b * fi;
        if (legendre_unchecked(b.det(), f0.ell) == -1) image = image.negated();
        out.push_back(DetLocusElement{{b, image}});
    }
    return out;
}

namespace {

// Projective representative: scale so the first nonzero entry is 1.
std::uint64_t proj_code(const Mat2& m) {
    std::uint32_t lead = m.a ? m.a : (m.b ? m.b : (m.c ? m.c : m.d));
    const std::uint64_t inv = powmod_u64(lead, m.ell - 2, m.ell);
    const auto scale = [&](std::uint32_t v) {
        return static_cast<std::uint32_t>(inv * v % m.ell);
    };
    return Mat2{scale(m.a), scale(m.b), scale(m.c), scale(m.d), m.ell}.code();
}

// Size of the projective group generated by two matrices, capped.
std::size_t projective_span_size(const Mat2& x, const Mat2& y, std::size_t cap) {
    std::unordered_set<std::uint64_t> seen;
    std::deque<Mat2> queue;
    const auto push = [&](const Mat2& m) {
        if (seen.insert(proj_code(m)).second) queue.push_back(m);
    };
    push(Mat2::identity(x.ell));
    while (!queue.empty() && seen.size() <= cap) {
        const Mat2 m = queue.front();
        queue.pop_front();
        push(m * x);
        push(m * y);
    }
    return seen.size();
}

} // namespace

std::vector<Mat2> exceptional_preimage(std::uint32_t ell, unsigned projective_order) {
    if (projective_order != 12 && projective_order != 24 && projective_order != 60)
        throw InvalidInput("projective order must be 12, 24 or 60");
    // Every exceptional projective subgroup contains an element of order 3,
    // and all projective order-3 elements are conjugate, so a fixed
    // order-3 companion matrix plus a scan over trace-zero (projective
    // order 2) partners finds each type whenever it exists.
    const Mat2 b0{0, ell - 1, 1, ell - 1, ell}; // companion of x^2 + x + 1
    for (std::uint32_t a12 = 0; a12 < ell; ++a12)
        for (std::uint32_t a21 = 0; a21 < ell; ++a21)
            for (std::uint32_t a11 = 0; a11 < ell; ++a11) {
                const Mat2 cand{a11, a12, a21, (ell - a11) % ell, ell};
                if (!cand.invertible()) continue;
                if (projective_span_size(cand, b0, projective_order + 1) != projective_order)
                    continue;
                // Expand to the full preimage: every scalar multiple of
                // every element of the projective span.
                std::unordered_set<std::uint64_t> seen;
                std::deque<Mat2> queue;
                std::vector<Mat2> reps;
                const auto push = [&](const Mat2& m) {
                    if (seen.insert(proj_code(m)).second) {
                        queue.push_back(m);
                        reps.push_back(m);
                    }
                };
                push(Mat2::identity(ell));
                while (!queue.empty()) {
                    const Mat2 m = queue.front();
                    queue.pop_front();
                    push(m * cand);
                    push(m * b0);
                }
                std::vector<Mat2> out;
                out.reserve(reps.size() * (ell - 1));
                for (const auto& r : reps)
                    for (std::uint32_t s = 1; s < ell; ++s) out.push_back(Mat2::scalar(s, ell) * r);
                return out;
            }
    return {};
}

} // namespace ellmod

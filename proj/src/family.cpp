#include "ellmod/family.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ellmod/point_count.hpp"
#include "ellmod/primes.hpp"
#include "ellmod/trace_sampling.hpp"

namespace ellmod {

Poly<BigInt> FamilySpec::discriminant_poly(std::size_t i) const {
    const Poly<BigInt>& a = A.at(i);
    const Poly<BigInt>& b = B.at(i);
    const Poly<BigInt> four_a3 = Poly<BigInt>::constant(BigInt(4)) * a * a * a;
    const Poly<BigInt> t27_b2 = Poly<BigInt>::constant(BigInt(27)) * b * b;
    return Poly<BigInt>::constant(BigInt(-16)) * (four_a3 + t27_b2);
}

CurveQt FamilySpec::curve_over_Qt(std::size_t i) const {
    const Rational model(0);
    return CurveQt{
        RationalFunction<Rational>::from_poly(to_rational_poly(A.at(i)), model),
        RationalFunction<Rational>::from_poly(to_rational_poly(B.at(i)), model)};
}

CurveQ FamilySpec::specialize_at(std::size_t i, const Rational& t0) const {
    return CurveQ{poly_eval(A.at(i), t0), poly_eval(B.at(i), t0)};
}

void validate_family(const FamilySpec& family) {
    if (family.A.size() != family.B.size())
        throw InvalidInput("family needs matching A and B lists");
    if (family.n() < 2) throw InvalidInput("family needs at least two factors");
    for (std::size_t i = 0; i < family.n(); ++i) {
        if (family.discriminant_poly(i).is_zero())
            throw SingularCurve("factor " + std::to_string(i) +
                                " has identically vanishing discriminant");
        if (is_isotrivial(family.curve_over_Qt(i)))
            throw InvalidInput("factor " + std::to_string(i) + " is isotrivial over Q(t)");
    }
}

namespace {

std::vector<BigInt> parse_int_list(const std::string& text) {
    std::string trimmed;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed.size() < 2 || trimmed.front() != '[' || trimmed.back() != ']')
        throw InvalidInput("coefficient list must look like [c0,c1,...]");
    std::vector<BigInt> out;
    std::string body = trimmed.substr(1, trimmed.size() - 2);
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789+-") != std::string::npos)
            throw InvalidInput("bad integer coefficient '" + item + "'");
        out.push_back(BigInt(item));
    }
    return out;
}

} // namespace

std::pair<Poly<BigInt>, Poly<BigInt>> parse_curve_line(const std::string& line) {
    const auto sep = line.find(';');
    if (sep == std::string::npos)
        throw InvalidInput("curve format is [A-coeffs];[B-coeffs]");
    return {Poly<BigInt>(parse_int_list(line.substr(0, sep))),
            Poly<BigInt>(parse_int_list(line.substr(sep + 1)))};
}

FamilySpec parse_family_lines(const std::vector<std::string>& lines) {
    FamilySpec fam;
    for (const auto& raw : lines) {
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        auto [a, b] = parse_curve_line(line);
        fam.A.push_back(std::move(a));
        fam.B.push_back(std::move(b));
    }
    return fam;
}

const std::array<BigInt, 13>& rational_cm_j_invariants() {
    // Class-number-one discriminants -3, -4, -7, -8, -11, -12, -16, -19,
    // -27, -28, -43, -67, -163 in that order.
    static const std::array<BigInt, 13> values = {
        BigInt(0),
        BigInt(1728),
        BigInt(-3375),
        BigInt(8000),
        BigInt(-32768),
        BigInt(54000),
        BigInt(287496),
        BigInt(-884736),
        BigInt(-12288000),
        BigInt(16581375),
        BigInt("-884736000"),
        BigInt("-147197952000"),
        BigInt("-262537412640768000")};
    return values;
}

std::string BadSetEntry::str() const {
    switch (kind) {
        case BadReason::BadReduction:
            return "BadReduction(" + std::to_string(i) + ")";
        case BadReason::CMFactor:
            return "CMFactor(" + std::to_string(i) + ")";
        case BadReason::IsogenousPair:
            return "IsogenousPair(" + std::to_string(i) + "," + std::to_string(j) +
                   ")[heuristic]";
    }
    return "?";
}

std::optional<BadSetReason> s_membership(const FamilySpec& family, const Rational& t0,
                                         std::uint64_t isogeny_prime_bound) {
    BadSetReason bad;
    bad.t0 = t0;

    std::vector<CurveQ> curves;
    for (std::size_t i = 0; i < family.n(); ++i) {
        const CurveQ c = family.specialize_at(i, t0);
        if (!is_nonsingular(c))
            bad.reasons.push_back({BadReason::BadReduction, static_cast<int>(i), -1, false});
        curves.push_back(c);
    }
    if (!bad.reasons.empty()) return bad;

    for (std::size_t i = 0; i < family.n(); ++i) {
        const Rational j = j_invariant(curves[i]);
        if (j.is_integer()) {
            const auto& cm = rational_cm_j_invariants();
            if (std::find(cm.begin(), cm.end(), j.num()) != cm.end())
                bad.reasons.push_back({BadReason::CMFactor, static_cast<int>(i), -1, false});
        }
    }

    // Heuristic isogeny detection: a_p^2 agreement at every common good
    // prime up to the bound. Twist-insensitive necessary condition only.
    const auto raw = sample_traces_Q(curves, isogeny_prime_bound, nullptr, 1);
    if (!raw.empty()) {
        for (std::size_t i = 0; i < family.n(); ++i)
            for (std::size_t j = i + 1; j < family.n(); ++j) {
                bool all_equal = true;
                for (const auto& r : raw) {
                    if (r.traces[i] * r.traces[i] != r.traces[j] * r.traces[j]) {
                        all_equal = false;
                        break;
                    }
                }
                if (all_equal)
                    bad.reasons.push_back({BadReason::IsogenousPair, static_cast<int>(i),
                                           static_cast<int>(j), true});
            }
    }

    if (bad.reasons.empty()) return std::nullopt;
    return bad;
}

std::vector<Rational> enumerate_rationals(long T) {
    if (T < 1) throw InvalidInput("T must be >= 1");
    std::vector<Rational> out;
    for (long den = 1; den <= T; ++den) {
        for (long num = -T; num <= T; ++num) {
            if (std::gcd(std::abs(num), den) != 1) continue;
            out.emplace_back(num, den);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> enumerate_F(long T, const FamilySpec& family,
                                  std::uint64_t isogeny_prime_bound,
                                  std::vector<BadSetReason>* excluded) {
    std::vector<Rational> out;
    for (const Rational& t0 : enumerate_rationals(T)) {
        auto bad = s_membership(family, t0, isogeny_prime_bound);
        if (!bad) out.push_back(t0);
        else if (excluded) excluded->push_back(std::move(*bad));
    }
    return out;
}

} // namespace ellmod

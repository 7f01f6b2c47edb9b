// ideals.hpp -- the ideal taxonomy for subsets of a Gamma-semigroup and the
// shared primality condition. Every kind is a conjunction of containments
// over Gamma-products; chained products are evaluated left-associated (the
// set-lifted associativity of the product makes the bracketing immaterial).

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grs/core.hpp"

namespace grs {

enum class IdealKind {
    SubGammaSemigroup,
    LeftIdeal,
    RightIdeal,
    TwoSidedIdeal,
    BiIdeal,
    QuasiIdeal,
    InteriorIdeal,
    LeftBiQuasi,
    RightBiQuasi,
    BiQuasi,
    BiInterior,
    LeftQuasiInterior,
    RightQuasiInterior,
    QuasiInterior,
    BiQuasiInterior,
};

inline constexpr std::array<IdealKind, 15> all_ideal_kinds = {
    IdealKind::SubGammaSemigroup, IdealKind::LeftIdeal,         IdealKind::RightIdeal,
    IdealKind::TwoSidedIdeal,     IdealKind::BiIdeal,           IdealKind::QuasiIdeal,
    IdealKind::InteriorIdeal,     IdealKind::LeftBiQuasi,       IdealKind::RightBiQuasi,
    IdealKind::BiQuasi,           IdealKind::BiInterior,        IdealKind::LeftQuasiInterior,
    IdealKind::RightQuasiInterior, IdealKind::QuasiInterior,    IdealKind::BiQuasiInterior,
};

inline std::string_view to_string(IdealKind k) {
    switch (k) {
        case IdealKind::SubGammaSemigroup: return "SubGammaSemigroup";
        case IdealKind::LeftIdeal: return "LeftIdeal";
        case IdealKind::RightIdeal: return "RightIdeal";
        case IdealKind::TwoSidedIdeal: return "TwoSidedIdeal";
        case IdealKind::BiIdeal: return "BiIdeal";
        case IdealKind::QuasiIdeal: return "QuasiIdeal";
        case IdealKind::InteriorIdeal: return "InteriorIdeal";
        case IdealKind::LeftBiQuasi: return "LeftBiQuasi";
        case IdealKind::RightBiQuasi: return "RightBiQuasi";
        case IdealKind::BiQuasi: return "BiQuasi";
        case IdealKind::BiInterior: return "BiInterior";
        case IdealKind::LeftQuasiInterior: return "LeftQuasiInterior";
        case IdealKind::RightQuasiInterior: return "RightQuasiInterior";
        case IdealKind::QuasiInterior: return "QuasiInterior";
        case IdealKind::BiQuasiInterior: return "BiQuasiInterior";
    }
    return "?";
}

inline std::optional<IdealKind> ideal_kind_from_string(std::string_view name) {
    for (IdealKind k : all_ideal_kinds)
        if (to_string(k) == name) return k;
    return std::nullopt;
}

/// Why a kind verdict is false: which conjunct broke and an element of the
/// offending left-hand side that escapes the subset.
struct IdealWitness {
    enum class Condition { Closure, Containment };
    Condition condition;
    std::string element;

    std::string to_string() const {
        return std::string(condition == Condition::Closure ? "closure" : "containment") + ":" +
               element;
    }
};

struct IdealVerdict {
    bool holds = true;
    /// The defining containment alone, ignoring the sub-Gamma-semigroup
    /// conjunct for the kinds that carry one. Equals `holds` for the rest.
    bool bare_holds = true;
    std::optional<IdealWitness> witness;
};

namespace detail {

inline std::optional<IdealWitness> escape_witness(const ElementSet& lhs, const ElementSet& a,
                                                  IdealWitness::Condition cond) {
    ElementSet out = lhs.minus(a);
    if (auto i = out.first()) {
        return IdealWitness{cond, lhs.carrier().name_of(*i)};
    }
    return std::nullopt;
}

// The defining left-hand side of each kind's containment, with A the subset
// and M the full carrier.
inline ElementSet kind_lhs(const GammaSemigroup& s, const ElementSet& a, IdealKind kind) {
    const ElementSet m = ElementSet::full(s.elements());
    auto chain = [&](std::initializer_list<const ElementSet*> parts) {
        std::vector<ElementSet> v;
        for (const ElementSet* p : parts) v.push_back(*p);
        return gamma_product_chain(s, v);
    };
    switch (kind) {
        case IdealKind::SubGammaSemigroup: return gamma_product(s, a, a);
        case IdealKind::LeftIdeal: return gamma_product(s, m, a);
        case IdealKind::RightIdeal: return gamma_product(s, a, m);
        case IdealKind::BiIdeal: return chain({&a, &m, &a});
        case IdealKind::QuasiIdeal:
            return gamma_product(s, a, m).intersected(gamma_product(s, m, a));
        case IdealKind::InteriorIdeal: return chain({&m, &a, &m});
        case IdealKind::LeftBiQuasi:
            return gamma_product(s, m, a).intersected(chain({&a, &m, &a}));
        case IdealKind::RightBiQuasi:
            return gamma_product(s, a, m).intersected(chain({&a, &m, &a}));
        case IdealKind::BiInterior: return chain({&m, &a, &m}).intersected(chain({&a, &m, &a}));
        case IdealKind::LeftQuasiInterior: return chain({&m, &a, &m, &a});
        case IdealKind::RightQuasiInterior: return chain({&a, &m, &a, &m});
        case IdealKind::BiQuasiInterior: return chain({&a, &m, &a, &m, &a});
        default: throw DomainError("kind has no single defining containment");
    }
}

// Kinds whose definition conjoins the sub-Gamma-semigroup requirement with
// the containment. The right-handed variants are defined by the containment
// alone, exactly as the definitions read.
inline bool requires_closure(IdealKind kind) {
    switch (kind) {
        case IdealKind::BiIdeal:
        case IdealKind::QuasiIdeal:
        case IdealKind::InteriorIdeal:
        case IdealKind::LeftBiQuasi:
        case IdealKind::BiInterior:
        case IdealKind::LeftQuasiInterior:
        case IdealKind::BiQuasiInterior: return true;
        default: return false;
    }
}

} // namespace detail

/// Decide one ideal kind for a non-empty subset. The witness, when the
/// verdict is false, is the first element (canonical order) of the broken
/// conjunct's left side that is not in A.
inline IdealVerdict is_ideal_of_kind(const GammaSemigroup& s, const ElementSet& a,
                                     IdealKind kind) {
    require_owned_by(s, a);
    if (a.empty()) throw DomainError("ideal kinds are defined for non-empty subsets only");

    auto conjunction = [](const IdealVerdict& l, const IdealVerdict& r) {
        IdealVerdict out;
        out.holds = l.holds && r.holds;
        out.bare_holds = l.bare_holds && r.bare_holds;
        out.witness = l.holds ? r.witness : l.witness;
        return out;
    };
    switch (kind) {
        case IdealKind::TwoSidedIdeal:
            return conjunction(is_ideal_of_kind(s, a, IdealKind::LeftIdeal),
                               is_ideal_of_kind(s, a, IdealKind::RightIdeal));
        case IdealKind::BiQuasi:
            return conjunction(is_ideal_of_kind(s, a, IdealKind::LeftBiQuasi),
                               is_ideal_of_kind(s, a, IdealKind::RightBiQuasi));
        case IdealKind::QuasiInterior:
            return conjunction(is_ideal_of_kind(s, a, IdealKind::LeftQuasiInterior),
                               is_ideal_of_kind(s, a, IdealKind::RightQuasiInterior));
        default: break;
    }

    IdealVerdict verdict;
    ElementSet lhs = detail::kind_lhs(s, a, kind);
    if (!lhs.subset_of(a)) {
        verdict.bare_holds = false;
        verdict.holds = false;
        verdict.witness =
            detail::escape_witness(lhs, a, IdealWitness::Condition::Containment);
    }
    if (detail::requires_closure(kind)) {
        ElementSet sq = gamma_product(s, a, a);
        if (!sq.subset_of(a)) {
            verdict.holds = false;
            if (!verdict.witness) {
                verdict.witness = detail::escape_witness(sq, a, IdealWitness::Condition::Closure);
            }
        }
    }
    return verdict;
}

/// First (x, gamma, y) with x gamma y in A but neither x nor y in A.
struct PrimeWitness {
    std::string x, gamma, y;

    std::string to_string() const { return "(" + x + "," + gamma + "," + y + ")"; }
};

struct PrimeVerdict {
    bool prime = true;
    std::optional<PrimeWitness> witness;
};

/// The primality condition shared by every prime-<kind> definition:
/// x gamma y in A implies x in A or y in A.
inline PrimeVerdict is_prime_for(const GammaSemigroup& s, const ElementSet& a) {
    require_owned_by(s, a);
    if (a.empty()) throw DomainError("primality is defined for non-empty subsets only");
    const std::size_t n = s.elements().size();
    const std::size_t m = s.gammas().size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t g = 0; g < m; ++g)
            for (std::size_t y = 0; y < n; ++y) {
                if (a.contains(s.apply(x, g, y)) && !a.contains(x) && !a.contains(y)) {
                    return {false, PrimeWitness{s.elements().name_of(x), s.gammas().name_of(g),
                                                s.elements().name_of(y)}};
                }
            }
    return {};
}

/// Verdicts for all fifteen kinds plus the shared primality flag. A "prime
/// K-ideal" claim reads off as verdicts[K].holds && prime.prime.
struct ClassificationReport {
    ElementSet subset;
    std::map<IdealKind, IdealVerdict> verdicts;
    PrimeVerdict prime;
};

inline ClassificationReport classify_subset(const GammaSemigroup& s, const ElementSet& a) {
    ClassificationReport report{a, {}, is_prime_for(s, a)};
    for (IdealKind k : all_ideal_kinds) report.verdicts[k] = is_ideal_of_kind(s, a, k);
    return report;
}

} // namespace grs

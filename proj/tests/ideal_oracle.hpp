// Test-only oracle for the ideal taxonomy: evaluates every defining
// containment by direct element loops over the Cayley table, with plain
// std::set machinery and no gamma_product / membership-word abstraction.
// Kept deliberately naive; it is the independent reference the library's
// classifier is checked against.

#pragma once

#include <set>
#include <string>

#include "grs/core.hpp"
#include "grs/ideals.hpp"

namespace grs_test_oracle {

using grs::GammaSemigroup;
using grs::IdealKind;

using Names = std::set<std::string>;

inline Names carrier_names(const GammaSemigroup& s) {
    Names out;
    for (const std::string& n : s.elements().names()) out.insert(n);
    return out;
}

inline Names product(const GammaSemigroup& s, const Names& a, const Names& b) {
    Names out;
    for (const std::string& x : a)
        for (const std::string& g : s.gammas().names())
            for (const std::string& y : b) out.insert(s.apply(x, g, y));
    return out;
}

inline Names chain(const GammaSemigroup& s, const std::vector<Names>& parts) {
    Names acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = product(s, acc, parts[i]);
    return acc;
}

inline Names intersect(const Names& a, const Names& b) {
    Names out;
    for (const std::string& x : a)
        if (b.count(x)) out.insert(x);
    return out;
}

inline bool contained(const Names& a, const Names& b) {
    for (const std::string& x : a)
        if (!b.count(x)) return false;
    return true;
}

inline bool oracle_kind(const GammaSemigroup& s, const Names& a, IdealKind kind) {
    const Names m = carrier_names(s);
    const bool closed = contained(product(s, a, a), a);
    switch (kind) {
        case IdealKind::SubGammaSemigroup: return closed;
        case IdealKind::LeftIdeal: return contained(product(s, m, a), a);
        case IdealKind::RightIdeal: return contained(product(s, a, m), a);
        case IdealKind::TwoSidedIdeal:
            return oracle_kind(s, a, IdealKind::LeftIdeal) &&
                   oracle_kind(s, a, IdealKind::RightIdeal);
        case IdealKind::BiIdeal: return closed && contained(chain(s, {a, m, a}), a);
        case IdealKind::QuasiIdeal:
            return closed && contained(intersect(product(s, a, m), product(s, m, a)), a);
        case IdealKind::InteriorIdeal: return closed && contained(chain(s, {m, a, m}), a);
        case IdealKind::LeftBiQuasi:
            return closed && contained(intersect(product(s, m, a), chain(s, {a, m, a})), a);
        case IdealKind::RightBiQuasi:
            return contained(intersect(product(s, a, m), chain(s, {a, m, a})), a);
        case IdealKind::BiQuasi:
            return oracle_kind(s, a, IdealKind::LeftBiQuasi) &&
                   oracle_kind(s, a, IdealKind::RightBiQuasi);
        case IdealKind::BiInterior:
            return closed && contained(intersect(chain(s, {m, a, m}), chain(s, {a, m, a})), a);
        case IdealKind::LeftQuasiInterior:
            return closed && contained(chain(s, {m, a, m, a}), a);
        case IdealKind::RightQuasiInterior: return contained(chain(s, {a, m, a, m}), a);
        case IdealKind::QuasiInterior:
            return oracle_kind(s, a, IdealKind::LeftQuasiInterior) &&
                   oracle_kind(s, a, IdealKind::RightQuasiInterior);
        case IdealKind::BiQuasiInterior:
            return closed && contained(chain(s, {a, m, a, m, a}), a);
    }
    return false;
}

inline bool oracle_prime(const GammaSemigroup& s, const Names& a) {
    for (const std::string& x : carrier_names(s))
        for (const std::string& g : s.gammas().names())
            for (const std::string& y : carrier_names(s))
                if (a.count(s.apply(x, g, y)) && !a.count(x) && !a.count(y)) return false;
    return true;
}

/// Subset for a membership word, as plain names.
inline Names subset_names(const GammaSemigroup& s, grs::Word w) {
    Names out;
    for (std::size_t i = 0; i < s.elements().size(); ++i)
        if ((w >> i) & 1) out.insert(s.elements().name_of(i));
    return out;
}

} // namespace grs_test_oracle

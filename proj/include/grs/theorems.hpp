// theorems.hpp -- executable checkers for the section-5 statements: a
// registry of theorem/corollary ids, per-instance audits, whole-space audits
// with vacuity accounting, and counterexample search over the catalog.
//
// An audit never hard-fails on a refuted statement; refutation is a reported
// outcome with a witness that replays through the module predicates.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grs/antihom.hpp"
#include "grs/approx.hpp"
#include "grs/catalog.hpp"
#include "grs/core.hpp"
#include "grs/ideals.hpp"
#include "grs/quotient.hpp"

namespace grs {

enum class ApproxSide { Upper, Lower };

struct TheoremSpec {
    std::string id;
    int slots = 1;                        // subset parameters over M2
    AntiHomLevel level = AntiHomLevel::Plain; // map hypothesis
    ApproxSide side = ApproxSide::Upper;
    bool guard_nonempty = true;           // the statement includes "approx != empty"
    bool quotient = false;                // conclusion lives in M1/T
    std::optional<IdealKind> kind;        // kind-shaped hypothesis and conclusion
    bool prime = false;                   // prime-<kind> variant
    bool inclusion = false;               // the T5.1 product-inclusion shape
    bool bundled_ideal = false;           // Q5.18: left/right/two-sided bundled
    std::string note;
};

/// Stable registry, in statement order. The duplicated "5.17" numbering is
/// split into T5.17prime (prime bi-quasi-interior) and Q5.17 (quotient
/// sub-Gamma-semigroup); T5.1.ii is registered twice because its statement
/// asks for a plain map while its proof uses equality.
inline const std::vector<TheoremSpec>& theorem_registry() {
    static const std::vector<TheoremSpec> registry = [] {
        std::vector<TheoremSpec> out;
        auto incl = [&](std::string id, AntiHomLevel lvl, ApproxSide side, std::string note = "") {
            TheoremSpec s;
            s.id = std::move(id);
            s.slots = 2;
            s.level = lvl;
            s.side = side;
            s.guard_nonempty = false;
            s.inclusion = true;
            s.note = std::move(note);
            out.push_back(std::move(s));
        };
        auto kind_pair = [&](const std::string& base, IdealKind k, bool prime,
                             bool lower_guard = true, std::string note = "") {
            TheoremSpec i;
            i.id = base + ".i";
            i.level = AntiHomLevel::Plain;
            i.side = ApproxSide::Upper;
            i.kind = k;
            i.prime = prime;
            i.note = note;
            out.push_back(i);
            TheoremSpec ii;
            ii.id = base + ".ii";
            ii.level = AntiHomLevel::Strong;
            ii.side = ApproxSide::Lower;
            ii.guard_nonempty = lower_guard;
            ii.kind = k;
            ii.prime = prime;
            ii.note = std::move(note);
            out.push_back(std::move(ii));
        };
        auto quotient_pair = [&](const std::string& base, std::optional<IdealKind> k,
                                 bool bundled) {
            for (ApproxSide side : {ApproxSide::Upper, ApproxSide::Lower}) {
                TheoremSpec s;
                s.id = base + (side == ApproxSide::Upper ? ".i" : ".ii");
                s.level = side == ApproxSide::Upper ? AntiHomLevel::Plain : AntiHomLevel::Strong;
                s.side = side;
                s.guard_nonempty = false;
                s.quotient = true;
                s.kind = k;
                s.bundled_ideal = bundled;
                out.push_back(std::move(s));
            }
        };

        incl("T5.1.i", AntiHomLevel::Plain, ApproxSide::Upper);
        incl("T5.1.ii", AntiHomLevel::Plain, ApproxSide::Lower,
             "statement asks for a plain anti-homomorphism; the proof uses equality, see "
             "T5.1.ii.strong for the strengthened hypothesis");
        incl("T5.1.ii.strong", AntiHomLevel::Strong, ApproxSide::Lower,
             "T5.1.ii under the strong hypothesis its proof actually uses");

        kind_pair("T5.2", IdealKind::SubGammaSemigroup, false,
                  /*lower_guard=*/false); // part (ii) states no non-emptiness condition
        kind_pair("T5.3", IdealKind::LeftIdeal, false);
        kind_pair("C1", IdealKind::RightIdeal, false);
        kind_pair("C2", IdealKind::TwoSidedIdeal, false);
        kind_pair("T5.4", IdealKind::BiIdeal, false);
        kind_pair("T5.5", IdealKind::InteriorIdeal, false);
        kind_pair("T5.6", IdealKind::QuasiIdeal, false);
        kind_pair("T5.7", IdealKind::BiInterior, false);
        kind_pair("T5.8", IdealKind::LeftBiQuasi, false);
        kind_pair("C3", IdealKind::RightBiQuasi, false);
        kind_pair("C4", IdealKind::BiQuasi, false);
        kind_pair("T5.9", IdealKind::LeftQuasiInterior, false);
        kind_pair("C5", IdealKind::RightQuasiInterior, false);
        kind_pair("C6", IdealKind::QuasiInterior, false);
        kind_pair("T5.10", IdealKind::BiQuasiInterior, false);

        kind_pair("T5.11", IdealKind::BiIdeal, true);
        kind_pair("T5.12", IdealKind::InteriorIdeal, true);
        kind_pair("T5.13", IdealKind::QuasiIdeal, true);
        kind_pair("T5.14", IdealKind::BiInterior, true);
        kind_pair("T5.15", IdealKind::LeftBiQuasi, true, true,
                  "statement hypothesis line is garbled in the source; audited as prime left "
                  "bi-quasi ideal, matching the proof's dependency on T5.8.i");
        kind_pair("T5.16", IdealKind::LeftQuasiInterior, true);
        kind_pair("T5.17prime", IdealKind::BiQuasiInterior, true);

        quotient_pair("Q5.17", IdealKind::SubGammaSemigroup, false);
        quotient_pair("Q5.18", std::nullopt, true);
        quotient_pair("C7", IdealKind::BiIdeal, false);
        quotient_pair("C8", IdealKind::InteriorIdeal, false);
        quotient_pair("C9", IdealKind::QuasiIdeal, false);
        quotient_pair("C10", IdealKind::BiInterior, false);
        quotient_pair("C11", IdealKind::BiQuasi, false);
        quotient_pair("C12", IdealKind::QuasiInterior, false);
        quotient_pair("C13", IdealKind::BiQuasiInterior, false);
        return out;
    }();
    return registry;
}

inline const TheoremSpec& theorem_spec(const std::string& id) {
    for (const TheoremSpec& s : theorem_registry())
        if (s.id == id) return s;
    throw DomainError("unknown theorem id '" + id + "'");
}

inline std::vector<std::string> theorem_ids() {
    std::vector<std::string> out;
    for (const TheoremSpec& s : theorem_registry()) out.push_back(s.id);
    return out;
}

struct AuditWitness {
    std::string source, target; // structure names
    std::string map_images;     // canonical image listing of the map
    std::vector<std::string> params;
    std::string detail;

    std::string to_string() const {
        std::string out = source + "->" + target + " map[" + map_images + "] params[";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) out += '|';
            out += params[i];
        }
        out += "] " + detail;
        return out;
    }
};

enum class AuditStatus { Pass, Fail, Vacuous, NotApplicable };

inline std::string_view to_string(AuditStatus s) {
    switch (s) {
        case AuditStatus::Pass: return "PASS";
        case AuditStatus::Fail: return "FAIL";
        case AuditStatus::Vacuous: return "VACUOUS";
        case AuditStatus::NotApplicable: return "NOT-APPLICABLE";
    }
    return "?";
}

struct InstanceCounts {
    std::uint64_t satisfied = 0; // instances whose hypothesis held
    std::uint64_t total = 0;     // instances enumerated
};

struct AuditResult {
    std::string id;
    bool hypothesis_met = false;
    std::optional<bool> conclusion_holds; // absent when nothing satisfied the hypothesis
    std::optional<AuditWitness> witness;  // present iff a satisfied instance refuted it
    InstanceCounts counts;
    bool applicable = true; // false: quotient operation not well-defined
    std::string note;

    AuditStatus status() const {
        if (!applicable) return AuditStatus::NotApplicable;
        if (!hypothesis_met) return AuditStatus::Vacuous;
        return *conclusion_holds ? AuditStatus::Pass : AuditStatus::Fail;
    }
};

/// Shared per-map state for a batch of audits; computes the map level once
/// and the quotient lazily.
class AuditContext {
public:
    explicit AuditContext(const SetValuedMap& t) : t_(&t) {
        require_structured(t);
        level_ = check_anti_hom(t).level;
    }

    const SetValuedMap& map() const { return *t_; }
    const GammaSemigroup& m1() const { return *t_->source_structure(); }
    const GammaSemigroup& m2() const { return *t_->target_structure(); }
    AntiHomLevel level() const { return level_; }

    const QuotientStructure& quotient() const {
        if (!quotient_) quotient_.emplace(build_quotient(*t_));
        return *quotient_;
    }

private:
    const SetValuedMap* t_;
    AntiHomLevel level_ = AntiHomLevel::None;
    mutable std::optional<QuotientStructure> quotient_;
};

namespace detail {

inline ElementSet approx_of(const AuditContext& ctx, ApproxSide side, const ElementSet& s) {
    return side == ApproxSide::Upper ? upper_approx(ctx.map(), s) : lower_approx(ctx.map(), s);
}

inline const char* side_name(ApproxSide side) {
    return side == ApproxSide::Upper ? "upper" : "lower";
}

inline bool kind_with_prime_holds(const GammaSemigroup& g, const ElementSet& a, IdealKind k,
                                  bool prime, std::string& detail) {
    IdealVerdict v = is_ideal_of_kind(g, a, k);
    if (!v.holds) {
        detail = std::string(to_string(k)) + " fails on " + a.to_string() + " (" +
                 v.witness->to_string() + ")";
        return false;
    }
    if (prime) {
        PrimeVerdict p = is_prime_for(g, a);
        if (!p.prime) {
            detail = "primality fails on " + a.to_string() + " at " + p.witness->to_string();
            return false;
        }
    }
    return true;
}

inline bool hypothesis_met(const TheoremSpec& spec, const AuditContext& ctx,
                           const std::vector<ElementSet>& params) {
    if (static_cast<int>(ctx.level()) < static_cast<int>(spec.level)) return false;
    if (spec.inclusion) return true; // only the map-level and subset shape
    const ElementSet& s = params.front();
    const GammaSemigroup& m2 = ctx.m2();
    if (spec.bundled_ideal) {
        if (!is_ideal_of_kind(m2, s, IdealKind::LeftIdeal).holds &&
            !is_ideal_of_kind(m2, s, IdealKind::RightIdeal).holds) {
            return false;
        }
    } else {
        if (!is_ideal_of_kind(m2, s, *spec.kind).holds) return false;
        if (spec.prime && !is_prime_for(m2, s).prime) return false;
    }
    if (spec.guard_nonempty && approx_of(ctx, spec.side, s).empty()) return false;
    return true;
}

inline bool conclusion_holds(const TheoremSpec& spec, const AuditContext& ctx,
                             const std::vector<ElementSet>& params, std::string& detail) {
    if (spec.inclusion) {
        const ElementSet& a1 = params[0];
        const ElementSet& a2 = params[1];
        ElementSet product = gamma_product(ctx.m1(), approx_of(ctx, spec.side, a2),
                                           approx_of(ctx, spec.side, a1));
        ElementSet goal = approx_of(ctx, spec.side, gamma_product(ctx.m2(), a1, a2));
        if (product.subset_of(goal)) return true;
        ElementSet escape = product.minus(goal);
        detail = std::string(side_name(spec.side)) + "(A2) G " + side_name(spec.side) +
                 "(A1) = " + product.to_string() + " escapes " + side_name(spec.side) +
                 "(A1 G A2) = " + goal.to_string() + " at " +
                 goal.carrier().name_of(*escape.first());
        return false;
    }

    const ElementSet& s = params.front();
    if (spec.quotient) {
        const QuotientStructure& q = ctx.quotient();
        Word w = spec.side == ApproxSide::Upper ? quotient_upper(q.classes, s)
                                                : quotient_lower(q.classes, s);
        if (w == 0) {
            detail = std::string(side_name(spec.side)) + "(S)/T is empty";
            return false;
        }
        ElementSet classes = q.class_set(w);
        const GammaSemigroup& induced = *q.induced;
        if (spec.bundled_ideal) {
            for (IdealKind k :
                 {IdealKind::LeftIdeal, IdealKind::RightIdeal, IdealKind::TwoSidedIdeal}) {
                if (!is_ideal_of_kind(ctx.m2(), s, k).holds) continue;
                if (!kind_with_prime_holds(induced, classes, k, false, detail)) return false;
            }
            return true;
        }
        return kind_with_prime_holds(induced, classes, *spec.kind, false, detail);
    }

    ElementSet approx = approx_of(ctx, spec.side, s);
    if (approx.empty()) {
        detail = std::string(side_name(spec.side)) + "(S) is empty";
        return false;
    }
    return kind_with_prime_holds(ctx.m1(), approx, *spec.kind, spec.prime, detail);
}

inline AuditWitness make_witness(const AuditContext& ctx, const std::vector<ElementSet>& params,
                                 std::string detail) {
    AuditWitness w;
    w.source = ctx.m1().name();
    w.target = ctx.m2().name();
    w.map_images = ctx.map().describe_images();
    for (const ElementSet& p : params) w.params.push_back(p.to_string());
    w.detail = std::move(detail);
    return w;
}

} // namespace detail

/// Audit one theorem instance. Params are non-empty subsets of the target,
/// one per slot of the id's hypothesis shape.
inline AuditResult audit_instance(const TheoremSpec& spec, const AuditContext& ctx,
                                  const std::vector<ElementSet>& params) {
    if (static_cast<int>(params.size()) != spec.slots) {
        throw DomainError("theorem '" + spec.id + "' takes " + std::to_string(spec.slots) +
                          " subset parameter(s)");
    }
    for (const ElementSet& p : params) {
        require_over_target(ctx.map(), p);
        if (p.empty()) throw DomainError("theorem parameters must be non-empty subsets");
    }

    AuditResult result;
    result.id = spec.id;
    result.note = spec.note;
    result.counts = {0, 1};

    if (spec.quotient && !ctx.quotient().well_defined) {
        result.applicable = false;
        result.note = "quotient operation is not well-defined, witness " +
                      ctx.quotient().failure_witness->to_string();
        return result;
    }
    if (!detail::hypothesis_met(spec, ctx, params)) return result;

    result.hypothesis_met = true;
    result.counts.satisfied = 1;
    std::string why;
    const bool ok = detail::conclusion_holds(spec, ctx, params, why);
    result.conclusion_holds = ok;
    if (!ok) result.witness = detail::make_witness(ctx, params, std::move(why));
    return result;
}

inline AuditResult audit_theorem(const std::string& id, const SetValuedMap& t,
                                 const std::vector<ElementSet>& params) {
    AuditContext ctx(t);
    return audit_instance(theorem_spec(id), ctx, params);
}

struct AuditScope {
    bool sampled = false;
    std::uint64_t samples = 0; // tuples per id when sampled
    std::uint64_t seed = 0;
};

/// Run every registered id over all non-empty subset tuples of the target
/// (or `scope.samples` seeded draws per id), aggregating per-id counts.
/// Deterministic given the scope. The exhaustive mode refuses parameter
/// spaces larger than `budget` tuples per id.
inline std::vector<AuditResult> audit_all(const SetValuedMap& t, const AuditScope& scope = {},
                                          std::uint64_t budget = std::uint64_t{1} << 22) {
    AuditContext ctx(t);
    const Word full = ctx.m2().elements().full_word();
    std::mt19937_64 rng(scope.seed);
    std::vector<AuditResult> out;

    for (const TheoremSpec& spec : theorem_registry()) {
        AuditResult agg;
        agg.id = spec.id;
        agg.note = spec.note;

        if (spec.quotient && !ctx.quotient().well_defined) {
            agg.applicable = false;
            agg.note = "quotient operation is not well-defined, witness " +
                       ctx.quotient().failure_witness->to_string();
            out.push_back(std::move(agg));
            continue;
        }

        std::vector<std::vector<ElementSet>> tuples;
        if (scope.sampled) {
            for (std::uint64_t i = 0; i < scope.samples; ++i) {
                std::vector<ElementSet> params;
                for (int s = 0; s < spec.slots; ++s)
                    params.emplace_back(ctx.m2().elements(), draw_nonzero_word(rng, full));
                tuples.push_back(std::move(params));
            }
        } else {
            const std::uint64_t per_slot = full;
            std::uint64_t need = 1;
            for (int s = 0; s < spec.slots; ++s) need *= per_slot;
            if (need > budget) {
                throw DomainError("exhaustive audit of '" + spec.id + "' needs " +
                                  std::to_string(need) + " instances, over the budget of " +
                                  std::to_string(budget));
            }
            if (spec.slots == 1) {
                for (Word w = 1; w <= full; ++w)
                    tuples.push_back({ElementSet(ctx.m2().elements(), w)});
            } else {
                for (Word w1 = 1; w1 <= full; ++w1)
                    for (Word w2 = 1; w2 <= full; ++w2)
                        tuples.push_back({ElementSet(ctx.m2().elements(), w1),
                                          ElementSet(ctx.m2().elements(), w2)});
            }
        }

        for (const std::vector<ElementSet>& params : tuples) {
            ++agg.counts.total;
            if (!detail::hypothesis_met(spec, ctx, params)) continue;
            ++agg.counts.satisfied;
            agg.hypothesis_met = true;
            std::string why;
            const bool ok = detail::conclusion_holds(spec, ctx, params, why);
            if (!agg.conclusion_holds) {
                agg.conclusion_holds = ok;
            } else {
                agg.conclusion_holds = *agg.conclusion_holds && ok;
            }
            if (!ok && !agg.witness) {
                agg.witness = detail::make_witness(ctx, params, std::move(why));
            }
        }
        out.push_back(std::move(agg));
    }
    return out;
}

/// Quotient-id audits under the contract shared with the rest of the
/// registry; the id must be one of Q5.17/Q5.18/C7..C13.
inline AuditResult audit_quotient_theorem(const std::string& id, const SetValuedMap& t,
                                          const std::vector<ElementSet>& params) {
    const TheoremSpec& spec = theorem_spec(id);
    if (!spec.quotient) throw DomainError("'" + id + "' is not a quotient statement");
    AuditContext ctx(t);
    return audit_instance(spec, ctx, params);
}

struct SearchOutcome {
    std::optional<AuditResult> failure; // first refuted instance, with witness
    std::optional<SetValuedMap> map;    // replay payload for the failure
    std::vector<ElementSet> params;
    std::uint64_t instances_satisfied = 0;
    std::uint64_t instances_total = 0;
    std::uint64_t maps_tried = 0;
    bool maps_exhaustive = true; // every stream enumerated its full space
};

/// Probe one statement across the catalog: every validated structure pair of
/// order <= max_order with matching gamma lists, every map passing the
/// hypothesis level (up to map_budget per pair, sampled beyond), every
/// non-empty subset tuple. Returns on the first refuted instance.
inline SearchOutcome search_counterexample(const std::string& id, std::size_t max_order,
                                           std::uint64_t map_budget, std::uint64_t seed = 0) {
    const TheoremSpec& spec = theorem_spec(id);
    SearchOutcome outcome;
    const auto structures = catalog::validated_structures(max_order);
    for (const GammaSemigroup* s1 : structures) {
        for (const GammaSemigroup* s2 : structures) {
            if (s1->gammas().names() != s2->gammas().names()) continue;
            MapEnumerator stream(*s1, *s2, spec.level, map_budget, seed);
            outcome.maps_exhaustive = outcome.maps_exhaustive && stream.exhaustive();
            while (auto map = stream.next()) {
                ++outcome.maps_tried;
                AuditContext ctx(*map);
                const Word full = s2->elements().full_word();
                std::vector<Word> slots(static_cast<std::size_t>(spec.slots), 1);
                for (;;) {
                    std::vector<ElementSet> params;
                    for (Word w : slots) params.emplace_back(s2->elements(), w);
                    ++outcome.instances_total;
                    bool applicable = !spec.quotient || ctx.quotient().well_defined;
                    if (applicable && detail::hypothesis_met(spec, ctx, params)) {
                        ++outcome.instances_satisfied;
                        std::string why;
                        if (!detail::conclusion_holds(spec, ctx, params, why)) {
                            AuditResult fail;
                            fail.id = spec.id;
                            fail.note = spec.note;
                            fail.hypothesis_met = true;
                            fail.conclusion_holds = false;
                            fail.counts = {outcome.instances_satisfied, outcome.instances_total};
                            fail.witness = detail::make_witness(ctx, params, std::move(why));
                            outcome.failure = std::move(fail);
                            outcome.map = std::move(*map);
                            outcome.params = std::move(params);
                            return outcome;
                        }
                    }
                    // next tuple, rightmost slot fastest
                    std::size_t k = slots.size();
                    while (k > 0) {
                        if (slots[k - 1] < full) {
                            ++slots[k - 1];
                            break;
                        }
                        slots[k - 1] = 1;
                        --k;
                    }
                    if (k == 0) break;
                }
            }
        }
    }
    return outcome;
}

} // namespace grs

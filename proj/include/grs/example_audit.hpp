// example_audit.hpp -- replays every checkable claim of the published worked
// examples (1-26) against the toolkit and reports PASS/FAIL per claim with
// the tool-computed value printed beside the claimed one. Claims are encoded
// verbatim: when a printed set uses names outside the carrier it belongs to,
// the claim simply fails against the computed value, with no guessed fix.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "grs/antihom.hpp"
#include "grs/approx.hpp"
#include "grs/catalog.hpp"
#include "grs/core.hpp"
#include "grs/ideals.hpp"

namespace grs::example_audit {

enum class Side { Source, Target };

/// Tiny expression tree for the set-valued left/right sides the examples
/// print: literals, a full carrier, Gamma-products (left-associated),
/// intersections, and the approximation operators (which move a target-side
/// value to the source side).
struct SetExpr {
    enum class Kind { Literal, FullCarrier, Product, Intersect, Upper, Lower };
    Kind kind;
    Side side;
    std::vector<std::string> literal;
    std::vector<SetExpr> args;

    static SetExpr lit(Side s, std::vector<std::string> names) {
        return {Kind::Literal, s, std::move(names), {}};
    }
    static SetExpr carrier(Side s) { return {Kind::FullCarrier, s, {}, {}}; }
    static SetExpr prod(std::vector<SetExpr> parts) {
        Side s = parts.front().side;
        return {Kind::Product, s, {}, std::move(parts)};
    }
    static SetExpr inter(SetExpr a, SetExpr b) {
        Side s = a.side;
        return {Kind::Intersect, s, {}, {std::move(a), std::move(b)}};
    }
    static SetExpr upper(SetExpr of) { return {Kind::Upper, Side::Source, {}, {std::move(of)}}; }
    static SetExpr lower(SetExpr of) { return {Kind::Lower, Side::Source, {}, {std::move(of)}}; }
};

/// The structures/universes/map one example block talks about.
struct BlockContext {
    const GammaSemigroup* m1 = nullptr; // null when the side is a plain universe
    const GammaSemigroup* m2 = nullptr;
    const Carrier* source = nullptr;
    const Carrier* target = nullptr;
    const SetValuedMap* map = nullptr;
};

struct StructureClaim {
    const GammaSemigroup* structure;
    std::string shown_as; // the name the block uses
};
struct MapLevelClaim {
    AntiHomLevel claimed;
};
struct MapTotalClaim {
    std::vector<std::string> printed; // source elements the block assigns images to
};
struct SetValueClaim {
    SetExpr expr;
    std::vector<std::string> claimed; // verbatim, possibly outside the carrier
};
struct InclusionClaim {
    SetExpr contained;
    SetExpr container;
};
struct KindClaim {
    SetExpr subject;
    IdealKind kind;
    bool prime = false;
    bool claimed = true;
};

using Claim =
    std::variant<StructureClaim, MapLevelClaim, MapTotalClaim, SetValueClaim, InclusionClaim,
                 KindClaim>;

struct ExampleBlock {
    std::string id;
    BlockContext ctx;
    std::vector<std::string> notes;
    std::vector<Claim> claims;
};

struct ClaimResult {
    std::string example;
    std::string label;    // the claim, rendered
    std::string computed; // tool value / verdict
    bool pass;
};

struct Report {
    std::vector<ExampleBlock> blocks; // for notes and grouping
    std::vector<ClaimResult> claims;

    int fail_count() const {
        int n = 0;
        for (const ClaimResult& c : claims) n += c.pass ? 0 : 1;
        return n;
    }
    std::vector<const ClaimResult*> claims_of(const std::string& example) const {
        std::vector<const ClaimResult*> out;
        for (const ClaimResult& c : claims)
            if (c.example == example) out.push_back(&c);
        return out;
    }
};

namespace detail {

inline std::string join_names(const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ',';
        out += names[i];
    }
    out += '}';
    return out;
}

inline const GammaSemigroup& structure_of(const BlockContext& ctx, Side side) {
    const GammaSemigroup* s = side == Side::Source ? ctx.m1 : ctx.m2;
    if (!s) throw DomainError("example block has no structure on that side");
    return *s;
}

inline const Carrier& carrier_of(const BlockContext& ctx, Side side) {
    return side == Side::Source ? *ctx.source : *ctx.target;
}

inline ElementSet eval(const SetExpr& e, const BlockContext& ctx) {
    switch (e.kind) {
        case SetExpr::Kind::Literal: {
            std::vector<std::string> names = e.literal;
            return ElementSet::of(carrier_of(ctx, e.side), names);
        }
        case SetExpr::Kind::FullCarrier: return ElementSet::full(carrier_of(ctx, e.side));
        case SetExpr::Kind::Product: {
            const GammaSemigroup& s = structure_of(ctx, e.side);
            std::vector<ElementSet> parts;
            for (const SetExpr& a : e.args) parts.push_back(eval(a, ctx));
            return gamma_product_chain(s, parts);
        }
        case SetExpr::Kind::Intersect:
            return eval(e.args[0], ctx).intersected(eval(e.args[1], ctx));
        case SetExpr::Kind::Upper: return upper_approx(*ctx.map, eval(e.args[0], ctx));
        case SetExpr::Kind::Lower: return lower_approx(*ctx.map, eval(e.args[0], ctx));
    }
    throw DomainError("unreachable expression kind");
}

inline std::string label(const SetExpr& e, const BlockContext& ctx) {
    switch (e.kind) {
        case SetExpr::Kind::Literal: return join_names(e.literal);
        case SetExpr::Kind::FullCarrier:
            return e.side == Side::Source ? "M1" : "M2";
        case SetExpr::Kind::Product: {
            std::string out;
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (i) out += " G ";
                const bool wrap = e.args[i].kind == SetExpr::Kind::Intersect;
                out += wrap ? "(" + label(e.args[i], ctx) + ")" : label(e.args[i], ctx);
            }
            return out;
        }
        case SetExpr::Kind::Intersect:
            return "(" + label(e.args[0], ctx) + ") n (" + label(e.args[1], ctx) + ")";
        case SetExpr::Kind::Upper: return "upper(" + label(e.args[0], ctx) + ")";
        case SetExpr::Kind::Lower: return "lower(" + label(e.args[0], ctx) + ")";
    }
    return "?";
}

struct ClaimEvaluator {
    const ExampleBlock& block;
    std::vector<ClaimResult>& out;

    void push(std::string lab, std::string computed, bool pass) {
        out.push_back({block.id, std::move(lab), std::move(computed), pass});
    }

    void operator()(const StructureClaim& c) {
        ValidationReport r = c.structure->validate();
        std::string computed =
            r.valid ? "associative"
                    : "not associative, witness " + r.witnesses.front().to_string();
        push(c.shown_as + " is a Gamma-semigroup", std::move(computed), r.valid);
    }

    void operator()(const MapLevelClaim& c) {
        AntiHomVerdict v = check_anti_hom(*block.ctx.map);
        std::string computed = "level=" + std::string(to_string(v.level));
        if (v.plain_witness) computed += " witness " + v.plain_witness->to_string();
        const char* what = c.claimed == AntiHomLevel::Strong
                               ? "T is a strong set-valued anti-homomorphism"
                               : "T is a set-valued anti-homomorphism";
        push(what, std::move(computed), static_cast<int>(v.level) >= static_cast<int>(c.claimed));
    }

    void operator()(const MapTotalClaim& c) {
        std::vector<std::string> missing;
        for (const std::string& name : block.ctx.source->names()) {
            bool found = false;
            for (const std::string& p : c.printed) found = found || p == name;
            if (!found) missing.push_back(name);
        }
        std::string computed = missing.empty()
                                   ? "total"
                                   : "no image printed for " + join_names(missing);
        push("the printed map assigns an image to every element", std::move(computed),
             missing.empty());
    }

    void operator()(const SetValueClaim& c) {
        ElementSet value = eval(c.expr, block.ctx);
        bool pass = false;
        const Carrier& carrier = value.carrier();
        bool resolvable = true;
        for (const std::string& n : c.claimed) resolvable = resolvable && carrier.find(n).has_value();
        if (resolvable) {
            pass = value == ElementSet::of(carrier, c.claimed);
        }
        push(label(c.expr, block.ctx) + " = " + join_names(c.claimed), value.to_string(), pass);
    }

    void operator()(const InclusionClaim& c) {
        ElementSet sub = eval(c.contained, block.ctx);
        ElementSet sup = eval(c.container, block.ctx);
        const bool pass = sub.subset_of(sup);
        push(label(c.contained, block.ctx) + " is contained in " + label(c.container, block.ctx),
             sub.to_string() + " vs " + sup.to_string(), pass);
    }

    void operator()(const KindClaim& c) {
        ElementSet subject = eval(c.subject, block.ctx);
        const GammaSemigroup& s = structure_of(block.ctx, c.subject.side);
        bool verdict = false;
        std::string computed;
        if (subject.empty()) {
            computed = subject.to_string() + " (empty subset)";
        } else {
            IdealVerdict kv = is_ideal_of_kind(s, subject, c.kind);
            verdict = kv.holds;
            computed = subject.to_string() + (kv.holds ? " holds" : " fails");
            if (!kv.holds) computed += " (" + kv.witness->to_string() + ")";
            if (c.prime && kv.holds) {
                PrimeVerdict pv = is_prime_for(s, subject);
                verdict = verdict && pv.prime;
                if (!pv.prime) computed += ", not prime at " + pv.witness->to_string();
            }
        }
        std::string lab = label(c.subject, block.ctx) + " is a " +
                          (c.claimed ? "" : "non-") + (c.prime ? "prime " : "") +
                          std::string(to_string(c.kind));
        push(std::move(lab), std::move(computed), verdict == c.claimed);
    }
};

inline std::vector<ExampleBlock> blocks() {
    using E = SetExpr;
    std::vector<ExampleBlock> out;

    const GammaSemigroup& ex2 = catalog::example2_m();
    const GammaSemigroup& ex3 = catalog::example3_m();
    const GammaSemigroup& ex4 = catalog::example4_m();
    const GammaSemigroup& ex5m1 = catalog::example5_m1();
    const GammaSemigroup& ex6m1 = catalog::example6_m1();
    const GammaSemigroup& ex6m2 = catalog::example6_m2();

    BlockContext cx1{nullptr, nullptr, &catalog::example1_x(), &catalog::example1_y(),
                     &catalog::example1_t()};
    BlockContext cx3{&ex3, &ex3, &ex3.elements(), &ex3.elements(), &catalog::example3_t()};
    BlockContext cx4{&ex4, &ex4, &ex4.elements(), &ex4.elements(), &catalog::example4_t()};
    BlockContext cx5{&ex5m1, &ex3, &ex5m1.elements(), &ex3.elements(), &catalog::example5_t()};
    BlockContext cx6{&ex6m1, &ex6m2, &ex6m1.elements(), &ex6m2.elements(),
                     &catalog::example6_t()};

    auto lits = [](Side s, std::vector<std::string> v) { return E::lit(s, std::move(v)); };
    auto T = Side::Target;
    auto S = Side::Source;

    // example 1: the fourteen printed approximation values.
    {
        ExampleBlock b{"example1", cx1, {}, {}};
        auto value = [&](bool upper, std::vector<std::string> set,
                         std::vector<std::string> claimed) {
            E arg = lits(T, std::move(set));
            b.claims.push_back(SetValueClaim{upper ? E::upper(arg) : E::lower(arg),
                                             std::move(claimed)});
        };
        value(true, {"a"}, {"2", "4"});
        value(false, {"a"}, {});
        value(true, {"b"}, {"1", "3"});
        value(false, {"b"}, {"1", "3"});
        value(true, {"c"}, {"2", "4"});
        value(false, {"c"}, {});
        value(true, {"a", "b"}, {"1", "2", "3", "4"});
        value(false, {"a", "b"}, {"1", "3"});
        value(true, {"a", "c"}, {"2", "4"});
        value(false, {"a", "c"}, {"2"});
        value(true, {"b", "c"}, {"1", "2", "3", "4"});
        value(false, {"b", "c"}, {"1", "3"});
        value(true, {"a", "b", "c"}, {"1", "2", "3", "4"});
        value(false, {"a", "b", "c"}, {"1", "2", "3", "4"});
        out.push_back(std::move(b));
    }

    out.push_back({"example2",
                   BlockContext{&ex2, nullptr, &ex2.elements(), nullptr, nullptr},
                   {},
                   {StructureClaim{&ex2, "M"}}});

    out.push_back({"example3",
                   cx3,
                   {},
                   {StructureClaim{&ex3, "M"}, MapLevelClaim{AntiHomLevel::Plain}}});

    out.push_back({"example4",
                   cx4,
                   {},
                   {StructureClaim{&ex4, "M"}, MapLevelClaim{AntiHomLevel::Plain}}});

    out.push_back({"example5",
                   cx5,
                   {},
                   {StructureClaim{&ex5m1, "M1"}, StructureClaim{&ex3, "M2"},
                    MapLevelClaim{AntiHomLevel::Strong}}});

    out.push_back({"example6",
                   cx6,
                   {"the printed block assigns no image to z; the fixture uses {c}, the image "
                    "every later block reusing this map gives it"},
                   {StructureClaim{&ex6m1, "M1"}, StructureClaim{&ex6m2, "M2"},
                    MapTotalClaim{{"x", "y"}}, MapLevelClaim{AntiHomLevel::Strong}}});

    // example 7: upper-approximation instance of the product inclusion.
    {
        ExampleBlock b{"example7", cx3, {}, {}};
        E a1 = lits(T, {"a"});
        E a2 = lits(T, {"b"});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Plain});
        b.claims.push_back(SetValueClaim{E::upper(a1), {"a", "b", "c"}});
        b.claims.push_back(SetValueClaim{E::upper(a2), {"a", "b", "c"}});
        b.claims.push_back(SetValueClaim{E::prod({E::upper(a2), E::upper(a1)}), {"a", "b", "c"}});
        b.claims.push_back(SetValueClaim{E::prod({a1, a2}), {"b"}});
        b.claims.push_back(SetValueClaim{E::upper(E::prod({a1, a2})), {"a", "b", "c"}});
        b.claims.push_back(
            InclusionClaim{E::prod({E::upper(a2), E::upper(a1)}), E::upper(E::prod({a1, a2}))});
        out.push_back(std::move(b));
    }

    // example 8: lower-approximation instance over the example-6 pair.
    {
        ExampleBlock b{"example8", cx6, {}, {}};
        E a1 = lits(T, {"a", "b", "c"});
        E a2 = lits(T, {"b", "c"});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Strong});
        b.claims.push_back(SetValueClaim{E::lower(a1), {"a", "b", "c"}});
        b.claims.push_back(SetValueClaim{E::lower(a2), {"b", "c"}});
        b.claims.push_back(SetValueClaim{E::prod({E::lower(a2), E::lower(a1)}), {"a", "c"}});
        b.claims.push_back(SetValueClaim{E::prod({a1, a2}), {"a", "c"}});
        b.claims.push_back(SetValueClaim{E::lower(E::prod({a1, a2})), {"a", "c"}});
        b.claims.push_back(
            InclusionClaim{E::prod({E::lower(a2), E::lower(a1)}), E::lower(E::prod({a1, a2}))});
        out.push_back(std::move(b));
    }

    // example 9: upper approximation of a sub-Gamma-semigroup.
    {
        ExampleBlock b{"example9", cx4,
                       {"the block names the structure of example3 while its map and subsets use "
                        "the carrier of example4; audited against example4"},
                       {}};
        E s = lits(T, {"x1", "x2", "x3"});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Plain});
        b.claims.push_back(KindClaim{s, IdealKind::SubGammaSemigroup});
        b.claims.push_back(SetValueClaim{E::upper(s), {"a", "b", "c", "d"}});
        b.claims.push_back(SetValueClaim{E::prod({s, s}), {"a", "c"}});
        b.claims.push_back(SetValueClaim{E::upper(E::prod({s, s})), {"a", "c"}});
        b.claims.push_back(InclusionClaim{E::upper(E::prod({s, s})), E::upper(s)});
        b.claims.push_back(KindClaim{E::upper(s), IdealKind::SubGammaSemigroup});
        out.push_back(std::move(b));
    }

    // example 10: lower approximation of a sub-Gamma-semigroup.
    {
        ExampleBlock b{"example10", cx5, {}, {}};
        E s = lits(T, {"b", "c"});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Strong});
        b.claims.push_back(KindClaim{s, IdealKind::SubGammaSemigroup});
        b.claims.push_back(SetValueClaim{E::lower(s), {"b", "c"}});
        b.claims.push_back(SetValueClaim{E::prod({s, s}), {"b"}});
        b.claims.push_back(SetValueClaim{E::lower(E::prod({s, s})), {"b"}});
        b.claims.push_back(InclusionClaim{E::lower(E::prod({s, s})), E::lower(s)});
        b.claims.push_back(KindClaim{E::lower(s), IdealKind::SubGammaSemigroup});
        out.push_back(std::move(b));
    }

    // example 11: upper approximation of a left ideal.
    {
        ExampleBlock b{"example11", cx4,
                       {"the block says structures M1 and M2 of example4; example4 defines one "
                        "structure, so this is audited as a self-map"},
                       {}};
        E j = lits(T, {"x1", "x3", "x4"});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Plain});
        b.claims.push_back(KindClaim{j, IdealKind::LeftIdeal});
        b.claims.push_back(SetValueClaim{E::upper(j), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(SetValueClaim{E::prod({E::carrier(T), j}), {"x1", "x3"}});
        b.claims.push_back(
            SetValueClaim{E::upper(E::prod({E::carrier(T), j})), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(InclusionClaim{E::upper(E::prod({E::carrier(T), j})), E::upper(j)});
        b.claims.push_back(KindClaim{E::upper(j), IdealKind::LeftIdeal});
        out.push_back(std::move(b));
    }

    // example 12: lower approximation of a left ideal.
    {
        ExampleBlock b{"example12", cx5, {}, {}};
        E j = lits(T, {"b", "c"});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Strong});
        b.claims.push_back(KindClaim{j, IdealKind::LeftIdeal});
        b.claims.push_back(SetValueClaim{E::lower(j), {"c"}});
        b.claims.push_back(SetValueClaim{E::prod({E::carrier(T), j}), {"b", "c"}});
        b.claims.push_back(SetValueClaim{E::lower(E::prod({E::carrier(T), j})), {"c"}});
        b.claims.push_back(InclusionClaim{E::lower(E::prod({E::carrier(T), j})), E::lower(j)});
        b.claims.push_back(KindClaim{E::lower(j), IdealKind::LeftIdeal});
        out.push_back(std::move(b));
    }

    // example 13: prime bi-ideal, upper side.
    {
        ExampleBlock b{"example13", cx4, {}, {}};
        E bi = lits(T, {"x1", "x2", "x3"});
        E bmb = E::prod({bi, E::carrier(T), bi});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Plain});
        b.claims.push_back(KindClaim{bi, IdealKind::BiIdeal});
        b.claims.push_back(SetValueClaim{E::upper(bi), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(SetValueClaim{bmb, {"x1", "x3"}});
        b.claims.push_back(SetValueClaim{E::upper(bmb), {"x1", "x3", "x4"}});
        b.claims.push_back(InclusionClaim{E::upper(bmb), E::upper(bi)});
        b.claims.push_back(KindClaim{E::upper(bi), IdealKind::BiIdeal});
        b.claims.push_back(KindClaim{bi, IdealKind::BiIdeal, true});
        b.claims.push_back(KindClaim{E::upper(bi), IdealKind::BiIdeal, true});
        out.push_back(std::move(b));
    }

    // example 14: prime bi-ideal, lower side.
    {
        ExampleBlock b{"example14", cx5, {}, {}};
        E bi = lits(T, {"b", "c"});
        E bmb = E::prod({bi, E::carrier(T), bi});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Strong});
        b.claims.push_back(KindClaim{bi, IdealKind::BiIdeal});
        b.claims.push_back(SetValueClaim{E::lower(bi), {"b", "c"}});
        b.claims.push_back(SetValueClaim{bmb, {"b"}});
        b.claims.push_back(SetValueClaim{E::lower(bmb), {"b"}});
        b.claims.push_back(InclusionClaim{E::lower(bmb), E::lower(bi)});
        b.claims.push_back(KindClaim{E::lower(bi), IdealKind::BiIdeal});
        b.claims.push_back(KindClaim{bi, IdealKind::BiIdeal, true});
        b.claims.push_back(KindClaim{E::lower(bi), IdealKind::BiIdeal, true});
        out.push_back(std::move(b));
    }

    // example 15: prime interior ideal, upper side.
    {
        ExampleBlock b{"example15", cx4, {}, {}};
        E j = lits(T, {"x1", "x3", "x4"});
        E mjm = E::prod({E::carrier(T), j, E::carrier(T)});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Plain});
        b.claims.push_back(KindClaim{j, IdealKind::InteriorIdeal});
        b.claims.push_back(SetValueClaim{E::upper(j), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(SetValueClaim{mjm, {"x1", "x3"}});
        b.claims.push_back(SetValueClaim{E::upper(mjm), {"x1", "x2", "x3"}});
        b.claims.push_back(InclusionClaim{E::upper(mjm), E::upper(j)});
        b.claims.push_back(KindClaim{E::upper(j), IdealKind::InteriorIdeal});
        b.claims.push_back(KindClaim{j, IdealKind::InteriorIdeal, true});
        b.claims.push_back(KindClaim{E::upper(j), IdealKind::InteriorIdeal, true});
        out.push_back(std::move(b));
    }

    // example 16: prime interior ideal, lower side.
    {
        ExampleBlock b{"example16", cx5, {}, {}};
        E j = lits(T, {"b", "c"});
        E mjm = E::prod({E::carrier(T), j, E::carrier(T)});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Strong});
        b.claims.push_back(KindClaim{j, IdealKind::InteriorIdeal});
        b.claims.push_back(SetValueClaim{E::lower(j), {"b", "c"}});
        b.claims.push_back(SetValueClaim{mjm, {"b", "c"}});
        b.claims.push_back(SetValueClaim{E::lower(mjm), {"b", "c"}});
        b.claims.push_back(InclusionClaim{E::lower(mjm), E::lower(j)});
        b.claims.push_back(KindClaim{E::lower(j), IdealKind::InteriorIdeal});
        b.claims.push_back(KindClaim{j, IdealKind::InteriorIdeal, true});
        b.claims.push_back(KindClaim{E::lower(j), IdealKind::InteriorIdeal, true});
        out.push_back(std::move(b));
    }

    // example 17: prime quasi-ideal, upper side.
    {
        ExampleBlock b{"example17", cx4, {}, {}};
        E q = lits(T, {"x1", "x3", "x4"});
        E mix = E::inter(E::prod({q, E::carrier(T)}), E::prod({E::carrier(T), q}));
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Plain});
        b.claims.push_back(KindClaim{q, IdealKind::QuasiIdeal});
        b.claims.push_back(SetValueClaim{E::upper(q), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(SetValueClaim{mix, {"x1", "x3"}});
        b.claims.push_back(SetValueClaim{E::upper(mix), {"x1", "x2", "x3"}});
        b.claims.push_back(InclusionClaim{E::upper(mix), E::upper(q)});
        b.claims.push_back(KindClaim{E::upper(q), IdealKind::QuasiIdeal});
        b.claims.push_back(KindClaim{q, IdealKind::QuasiIdeal, true});
        b.claims.push_back(KindClaim{E::upper(q), IdealKind::QuasiIdeal, true});
        out.push_back(std::move(b));
    }

    // example 18: prime quasi-ideal, lower side; the block itself concludes
    // the lower approximation is not prime.
    {
        ExampleBlock b{"example18", cx6, {}, {}};
        E q = lits(T, {"a", "b", "c"});
        E mix = E::inter(E::prod({q, E::carrier(T)}), E::prod({E::carrier(T), q}));
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Strong});
        b.claims.push_back(KindClaim{q, IdealKind::QuasiIdeal});
        b.claims.push_back(SetValueClaim{E::lower(q), {"b", "c"}});
        b.claims.push_back(SetValueClaim{mix, {"a", "c"}});
        b.claims.push_back(SetValueClaim{E::lower(mix), {"c"}});
        b.claims.push_back(InclusionClaim{E::lower(mix), E::lower(q)});
        b.claims.push_back(KindClaim{E::lower(q), IdealKind::QuasiIdeal});
        b.claims.push_back(KindClaim{q, IdealKind::QuasiIdeal, true});
        b.claims.push_back(KindClaim{E::lower(q), IdealKind::QuasiIdeal, true, false});
        out.push_back(std::move(b));
    }

    // example 19: prime bi-interior ideal, upper side.
    {
        ExampleBlock b{"example19", cx4, {}, {}};
        E bi = lits(T, {"x1", "x3"});
        E mix = E::inter(E::prod({E::carrier(T), bi, E::carrier(T)}),
                         E::prod({bi, E::carrier(T), bi}));
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Plain});
        b.claims.push_back(KindClaim{bi, IdealKind::BiInterior});
        b.claims.push_back(SetValueClaim{E::upper(bi), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(SetValueClaim{E::lower(bi), {"x1", "x3"}});
        b.claims.push_back(SetValueClaim{mix, {"x1", "x3"}});
        b.claims.push_back(SetValueClaim{E::upper(mix), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(InclusionClaim{E::upper(mix), E::upper(bi)});
        b.claims.push_back(KindClaim{E::upper(bi), IdealKind::BiInterior});
        b.claims.push_back(KindClaim{bi, IdealKind::BiInterior, true});
        b.claims.push_back(KindClaim{E::upper(bi), IdealKind::BiInterior, true});
        out.push_back(std::move(b));
    }

    // example 20: prime bi-interior ideal, lower side.
    {
        ExampleBlock b{"example20", cx6, {}, {}};
        E bi = lits(T, {"a", "b", "c"});
        E mix = E::inter(E::prod({E::carrier(T), bi, E::carrier(T)}),
                         E::prod({bi, E::carrier(T), bi}));
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Strong});
        b.claims.push_back(KindClaim{bi, IdealKind::BiInterior});
        b.claims.push_back(SetValueClaim{E::lower(bi), {"a", "b", "c"}});
        b.claims.push_back(SetValueClaim{mix, {"a", "c"}});
        b.claims.push_back(SetValueClaim{E::lower(mix), {"a", "c"}});
        b.claims.push_back(InclusionClaim{E::lower(mix), E::lower(bi)});
        b.claims.push_back(KindClaim{E::lower(bi), IdealKind::BiInterior});
        b.claims.push_back(KindClaim{bi, IdealKind::BiInterior, true});
        b.claims.push_back(KindClaim{E::lower(bi), IdealKind::BiInterior, true});
        out.push_back(std::move(b));
    }

    // example 21: prime left bi-quasi ideal, upper side.
    {
        ExampleBlock b{"example21", cx4, {}, {}};
        E bi = lits(T, {"x1", "x3"});
        E mix = E::inter(E::prod({E::carrier(T), bi}), E::prod({bi, E::carrier(T), bi}));
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Plain});
        b.claims.push_back(KindClaim{bi, IdealKind::LeftBiQuasi});
        b.claims.push_back(SetValueClaim{E::upper(bi), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(SetValueClaim{mix, {"x1", "x3"}});
        b.claims.push_back(SetValueClaim{E::upper(mix), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(InclusionClaim{E::upper(mix), E::upper(bi)});
        b.claims.push_back(KindClaim{E::upper(bi), IdealKind::LeftBiQuasi});
        b.claims.push_back(KindClaim{bi, IdealKind::LeftBiQuasi, true});
        b.claims.push_back(KindClaim{E::upper(bi), IdealKind::LeftBiQuasi, true});
        out.push_back(std::move(b));
    }

    // example 22: prime bi-quasi ideal, lower side.
    {
        ExampleBlock b{"example22", cx6, {}, {}};
        E bi = lits(T, {"a", "c"});
        E mix = E::inter(E::prod({E::carrier(T), bi}), E::prod({bi, E::carrier(T), bi}));
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Strong});
        b.claims.push_back(KindClaim{bi, IdealKind::BiQuasi});
        b.claims.push_back(SetValueClaim{E::lower(bi), {"a", "c"}});
        b.claims.push_back(SetValueClaim{mix, {"a", "c"}});
        b.claims.push_back(SetValueClaim{E::lower(mix), {"a", "c"}});
        b.claims.push_back(InclusionClaim{E::lower(mix), E::lower(bi)});
        b.claims.push_back(KindClaim{E::lower(bi), IdealKind::BiQuasi});
        b.claims.push_back(KindClaim{bi, IdealKind::BiQuasi, true});
        b.claims.push_back(KindClaim{E::lower(bi), IdealKind::BiQuasi, true});
        out.push_back(std::move(b));
    }

    // example 23: prime left quasi-interior ideal, upper side. The printed
    // witness expression follows the left bi-quasi shape; audited as printed.
    {
        ExampleBlock b{"example23", cx4, {}, {}};
        E q = lits(T, {"x1", "x2", "x3", "x4"});
        E mix = E::inter(E::prod({E::carrier(T), q}), E::prod({q, E::carrier(T), q}));
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Plain});
        b.claims.push_back(KindClaim{q, IdealKind::LeftQuasiInterior});
        b.claims.push_back(SetValueClaim{E::upper(q), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(SetValueClaim{mix, {"x1", "x3"}});
        b.claims.push_back(SetValueClaim{E::upper(mix), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(InclusionClaim{E::upper(mix), E::upper(q)});
        b.claims.push_back(KindClaim{E::upper(q), IdealKind::LeftQuasiInterior});
        b.claims.push_back(KindClaim{q, IdealKind::LeftQuasiInterior, true});
        b.claims.push_back(KindClaim{E::upper(q), IdealKind::LeftQuasiInterior, true});
        out.push_back(std::move(b));
    }

    // example 24: prime quasi-interior ideal, lower side.
    {
        ExampleBlock b{"example24", cx5, {}, {}};
        E q = lits(T, {"a", "b", "c"});
        E chain = E::prod({E::carrier(T), q, E::carrier(T), q});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Strong});
        b.claims.push_back(KindClaim{q, IdealKind::QuasiInterior});
        b.claims.push_back(SetValueClaim{E::lower(q), {"a", "b", "c"}});
        b.claims.push_back(SetValueClaim{chain, {"a", "b", "c"}});
        b.claims.push_back(SetValueClaim{E::lower(chain), {"a", "b", "c"}});
        b.claims.push_back(InclusionClaim{E::lower(chain), E::lower(q)});
        b.claims.push_back(KindClaim{E::lower(q), IdealKind::QuasiInterior});
        b.claims.push_back(KindClaim{q, IdealKind::QuasiInterior, true});
        b.claims.push_back(KindClaim{E::lower(q), IdealKind::QuasiInterior, true});
        out.push_back(std::move(b));
    }

    // example 25: prime bi-quasi-interior ideal, upper side.
    {
        ExampleBlock b{"example25", cx4, {}, {}};
        E bi = lits(T, {"x1", "x2", "x3"});
        E chain = E::prod({bi, E::carrier(T), bi, E::carrier(T), bi});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Plain});
        b.claims.push_back(KindClaim{bi, IdealKind::BiQuasiInterior});
        b.claims.push_back(SetValueClaim{E::upper(bi), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(SetValueClaim{chain, {"x1", "x3"}});
        b.claims.push_back(SetValueClaim{E::upper(chain), {"x1", "x2", "x3", "x4"}});
        b.claims.push_back(InclusionClaim{E::upper(chain), E::upper(bi)});
        b.claims.push_back(KindClaim{E::upper(bi), IdealKind::BiQuasiInterior});
        b.claims.push_back(KindClaim{bi, IdealKind::BiQuasiInterior, true});
        b.claims.push_back(KindClaim{E::upper(bi), IdealKind::BiQuasiInterior, true});
        out.push_back(std::move(b));
    }

    // example 26: prime bi-quasi-interior ideal, lower side.
    {
        ExampleBlock b{"example26", cx6, {}, {}};
        E bi = lits(T, {"a", "c"});
        E chain = E::prod({bi, E::carrier(T), bi, E::carrier(T), bi});
        b.claims.push_back(MapLevelClaim{AntiHomLevel::Strong});
        b.claims.push_back(KindClaim{bi, IdealKind::BiQuasiInterior});
        b.claims.push_back(SetValueClaim{E::lower(bi), {"a", "c"}});
        b.claims.push_back(SetValueClaim{chain, {"a", "c"}});
        b.claims.push_back(SetValueClaim{E::lower(chain), {"a", "c"}});
        b.claims.push_back(InclusionClaim{E::lower(chain), E::lower(bi)});
        b.claims.push_back(KindClaim{E::lower(bi), IdealKind::BiQuasiInterior});
        b.claims.push_back(KindClaim{bi, IdealKind::BiQuasiInterior, true});
        b.claims.push_back(KindClaim{E::lower(bi), IdealKind::BiQuasiInterior, true});
        out.push_back(std::move(b));
    }

    return out;
}

} // namespace detail

inline Report audit_paper_examples() {
    Report report;
    report.blocks = detail::blocks();
    for (const ExampleBlock& block : report.blocks) {
        detail::ClaimEvaluator eval{block, report.claims};
        for (const Claim& claim : block.claims) std::visit(eval, claim);
    }
    return report;
}

inline std::string render_text(const Report& report) {
    std::string out;
    for (const ExampleBlock& block : report.blocks) {
        out += "== " + block.id + "\n";
        for (const std::string& note : block.notes) out += "   note: " + note + "\n";
        for (const ClaimResult* c : report.claims_of(block.id)) {
            out += std::string(c->pass ? "   PASS  " : "   FAIL  ") + c->label +
                   "  [computed: " + c->computed + "]\n";
        }
    }
    out += "claims=" + std::to_string(report.claims.size()) +
           " failures=" + std::to_string(report.fail_count()) + "\n";
    return out;
}

inline std::string render_machine(const Report& report) {
    std::string out;
    for (const ExampleBlock& block : report.blocks) {
        std::size_t index = 0;
        for (const ClaimResult* c : report.claims_of(block.id)) {
            out += "example=" + block.id + " claim=" + std::to_string(++index) +
                   " verdict=" + (c->pass ? "PASS" : "FAIL") + " claim_text=" + c->label +
                   " computed=" + c->computed + "\n";
        }
    }
    out += "failures=" + std::to_string(report.fail_count()) + "\n";
    return out;
}

} // namespace grs::example_audit

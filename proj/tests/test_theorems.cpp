#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "grs/catalog.hpp"
#include "grs/theorems.hpp"

using namespace grs;

namespace {

SetValuedMap identity_map(const GammaSemigroup& m) {
    std::vector<Word> words;
    for (std::size_t i = 0; i < m.elements().size(); ++i) words.push_back(Word{1} << i);
    return SetValuedMap::from_words("id", m, m, std::move(words));
}

std::string render(const std::vector<AuditResult>& results) {
    std::ostringstream out;
    for (const AuditResult& r : results) {
        out << r.id << " " << to_string(r.status()) << " " << r.counts.satisfied << "/"
            << r.counts.total;
        if (r.witness) out << " " << r.witness->to_string();
        out << "\n";
    }
    return out.str();
}

} // namespace

TEST_CASE("the registry covers every statement with stable ids") {
    CHECK(theorem_registry().size() == 65);
    CHECK_THROWS_AS(theorem_spec("T9.9.i"), DomainError);
    CHECK(theorem_spec("T5.17prime.i").prime);
    CHECK(theorem_spec("Q5.17.i").quotient);
    CHECK_FALSE(theorem_spec("T5.2.ii").guard_nonempty); // stated without the guard
    CHECK(theorem_spec("T5.3.ii").guard_nonempty);
    CHECK(theorem_spec("T5.1.ii").level == AntiHomLevel::Plain);
    CHECK(theorem_spec("T5.1.ii.strong").level == AntiHomLevel::Strong);
    CHECK_FALSE(theorem_spec("T5.15.i").note.empty());
}

TEST_CASE("T5.1.i on the example-3 instance, cross-checked by hand") {
    const SetValuedMap& t = catalog::example3_t();
    const GammaSemigroup& m = catalog::example3_m();
    const Carrier& c = m.elements();
    std::vector<ElementSet> params = {ElementSet::of(c, {"a"}), ElementSet::of(c, {"b"})};

    // oracle: recompute both sides of the conclusion from the definitions
    ElementSet upper_a2 = upper_approx(t, params[1]);
    ElementSet upper_a1 = upper_approx(t, params[0]);
    CHECK(upper_a2.to_string() == "{a,b,c}");
    CHECK(upper_a1.to_string() == "{b}");
    ElementSet product = gamma_product(m, upper_a2, upper_a1);
    CHECK(product.to_string() == "{b}");
    ElementSet goal = upper_approx(t, gamma_product(m, params[0], params[1]));
    CHECK(goal.to_string() == "{a,b,c}");
    CHECK(product.subset_of(goal));

    AuditResult r = audit_theorem("T5.1.i", t, params);
    CHECK(r.status() == AuditStatus::Pass);
    CHECK(r.counts.satisfied == 1);
}

TEST_CASE("unmet hypotheses are vacuous, with the conclusion left unevaluated") {
    const SetValuedMap& t = catalog::example3_t();
    const Carrier& c = catalog::example3_m().elements();
    // {a} is not a left ideal of M
    AuditResult r = audit_theorem("T5.3.i", t, {ElementSet::of(c, {"a"})});
    CHECK(r.status() == AuditStatus::Vacuous);
    CHECK_FALSE(r.hypothesis_met);
    CHECK_FALSE(r.conclusion_holds.has_value());
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("singleton structures satisfy everything trivially") {
    SetValuedMap t = identity_map(catalog::singleton());
    const Carrier& c = catalog::singleton().elements();
    AuditResult r = audit_theorem("T5.2.i", t, {ElementSet::full(c)});
    CHECK(r.status() == AuditStatus::Pass);

    for (const AuditResult& all : audit_all(t)) {
        CAPTURE(all.id);
        CHECK(all.status() == AuditStatus::Pass);
        CHECK(all.counts.total == (theorem_spec(all.id).slots == 2 ? 1u : 1u));
    }
}

TEST_CASE("parameter shapes are enforced") {
    const SetValuedMap& t = catalog::example3_t();
    const Carrier& c = catalog::example3_m().elements();
    CHECK_THROWS_AS(audit_theorem("T5.1.i", t, {ElementSet::full(c)}), DomainError);
    CHECK_THROWS_AS(audit_theorem("T5.3.i", t, {ElementSet::empty(c)}), DomainError);
}

TEST_CASE("audit_all enumerates the full tuple space deterministically") {
    const SetValuedMap& t = catalog::example3_t();
    std::vector<AuditResult> results = audit_all(t);
    REQUIRE(results.size() == theorem_registry().size());
    for (const AuditResult& r : results) {
        const int slots = theorem_spec(r.id).slots;
        CHECK(r.counts.total == (slots == 2 ? 49u : 7u));
        if (r.counts.satisfied == 0) CHECK(r.status() == AuditStatus::Vacuous);
    }
    CHECK(render(results) == render(audit_all(t)));

    AuditScope sampled{true, 100, 1};
    CHECK(render(audit_all(t, sampled)) == render(audit_all(t, sampled)));
}

TEST_CASE("sampled and exhaustive audits agree on refutations they both see") {
    const SetValuedMap& t = catalog::example3_t();
    std::vector<AuditResult> all = audit_all(t);
    for (const AuditResult& r : all) {
        if (r.status() == AuditStatus::Fail) {
            REQUIRE(r.witness.has_value());
            CHECK_FALSE(r.witness->detail.empty());
        }
    }
}

TEST_CASE("strong maps satisfy the part-(i) hypothesis wherever part (ii) applies") {
    SetValuedMap id = identity_map(catalog::example3_m()); // strong on a commutative table
    AuditContext ctx(id);
    REQUIRE(ctx.level() == AntiHomLevel::Strong);
    const Carrier& c = catalog::example3_m().elements();

    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"T5.2.i", "T5.2.ii"},   {"T5.3.i", "T5.3.ii"},   {"C1.i", "C1.ii"},
        {"C2.i", "C2.ii"},       {"T5.4.i", "T5.4.ii"},   {"T5.5.i", "T5.5.ii"},
        {"T5.6.i", "T5.6.ii"},   {"T5.7.i", "T5.7.ii"},   {"T5.8.i", "T5.8.ii"},
        {"C3.i", "C3.ii"},       {"C4.i", "C4.ii"},       {"T5.9.i", "T5.9.ii"},
        {"C5.i", "C5.ii"},       {"C6.i", "C6.ii"},       {"T5.10.i", "T5.10.ii"},
        {"T5.11.i", "T5.11.ii"}, {"T5.12.i", "T5.12.ii"}, {"T5.13.i", "T5.13.ii"},
        {"T5.14.i", "T5.14.ii"}, {"T5.15.i", "T5.15.ii"}, {"T5.16.i", "T5.16.ii"},
        {"T5.17prime.i", "T5.17prime.ii"}};
    for (Word w = 1; w <= c.full_word(); ++w) {
        std::vector<ElementSet> params = {ElementSet(c, w)};
        for (const auto& [i_id, ii_id] : pairs) {
            AuditResult ii = audit_instance(theorem_spec(ii_id), ctx, params);
            if (ii.hypothesis_met) {
                AuditResult i = audit_instance(theorem_spec(i_id), ctx, params);
                CAPTURE(i_id, w);
                CHECK(i.hypothesis_met);
            }
        }
    }
}

TEST_CASE("quotient audits on a well-defined quotient") {
    SetValuedMap id = identity_map(catalog::example3_m());
    const Carrier& c = catalog::example3_m().elements();
    // {b} is a two-sided ideal; the quotient is the relabeled base structure
    AuditResult r = audit_quotient_theorem("Q5.18.i", id, {ElementSet::of(c, {"b"})});
    CHECK(r.status() == AuditStatus::Pass);

    AuditResult sub = audit_quotient_theorem("Q5.17.i", id, {ElementSet::of(c, {"b"})});
    CHECK(sub.status() == AuditStatus::Pass);

    CHECK_THROWS_AS(audit_quotient_theorem("T5.1.i", id, {ElementSet::of(c, {"b"})}),
                    DomainError);
}

TEST_CASE("ill-defined quotients report NOT-APPLICABLE, other audits still run") {
    const GammaSemigroup& m = catalog::example3_m();
    SetValuedMap bad = SetValuedMap::from_words("bad", m, m, {1, 1, 2});
    const Carrier& c = m.elements();

    AuditResult q = audit_quotient_theorem("Q5.17.i", bad, {ElementSet::of(c, {"a"})});
    CHECK(q.status() == AuditStatus::NotApplicable);
    CHECK(q.note.find("(a,b,c,alpha,left-arg)") != std::string::npos);

    std::vector<AuditResult> all = audit_all(bad);
    for (const AuditResult& r : all) {
        if (theorem_spec(r.id).quotient) {
            CHECK(r.status() == AuditStatus::NotApplicable);
        } else {
            CHECK(r.status() != AuditStatus::NotApplicable);
        }
    }
}

TEST_CASE("counterexample search replays its witnesses") {
    // The lower-approximation half of the product inclusion, as stated (plain
    // hypothesis), is the prime suspect; whatever the search returns must
    // replay to the same verdict through audit_theorem.
    for (const std::string& id : {std::string("T5.1.ii"), std::string("T5.3.i")}) {
        SearchOutcome outcome = search_counterexample(id, 2, 4000, 7);
        CAPTURE(id, outcome.instances_satisfied, outcome.instances_total);
        CHECK(outcome.maps_exhaustive);
        CHECK(outcome.instances_total > 0);
        if (outcome.failure) {
            REQUIRE(outcome.map.has_value());
            AuditResult replay = audit_theorem(id, *outcome.map, outcome.params);
            CHECK(replay.status() == AuditStatus::Fail);
            CHECK(replay.witness->detail == outcome.failure->witness->detail);
        }
    }

    // determinism under a fixed seed
    SearchOutcome a = search_counterexample("T5.1.ii", 2, 256, 3);
    SearchOutcome b = search_counterexample("T5.1.ii", 2, 256, 3);
    CHECK(a.instances_total == b.instances_total);
    CHECK(a.failure.has_value() == b.failure.has_value());
    if (a.failure) CHECK(a.failure->witness->to_string() == b.failure->witness->to_string());
}

TEST_CASE("T5.1.i holds across every plain map between tiny catalog structures") {
    SearchOutcome outcome = search_counterexample("T5.1.i", 2, 10000, 0);
    CHECK(outcome.maps_exhaustive);
    CHECK_FALSE(outcome.failure.has_value());
    CHECK(outcome.instances_satisfied > 0);
}

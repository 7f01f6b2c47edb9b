#include <catch2/catch_amalgamated.hpp>

#include "grs/catalog.hpp"
#include "grs/ideals.hpp"
#include "ideal_oracle.hpp"

using namespace grs;
using namespace grs_test_oracle;

TEST_CASE("published subset verdicts on the example-3 structure") {
    const GammaSemigroup& m = catalog::example3_m();
    const Carrier& c = m.elements();

    ElementSet b = ElementSet::of(c, {"b"});
    CHECK(is_ideal_of_kind(m, b, IdealKind::TwoSidedIdeal).holds);

    IdealVerdict left_a = is_ideal_of_kind(m, ElementSet::of(c, {"a"}), IdealKind::LeftIdeal);
    REQUIRE_FALSE(left_a.holds);
    CHECK(left_a.witness->condition == IdealWitness::Condition::Containment);
    CHECK(left_a.witness->element == "b"); // first escapee of M G {a} in canonical order

    PrimeVerdict prime_b = is_prime_for(m, b);
    REQUIRE_FALSE(prime_b.prime);
    CHECK(prime_b.witness->to_string() == "(c,alpha,c)");
    CHECK(m.apply("c", "alpha", "c") == "b"); // the witness replays

    CHECK(is_prime_for(m, ElementSet::of(c, {"b", "c"})).prime);
    CHECK(is_prime_for(m, ElementSet::full(c)).prime);
}

TEST_CASE("the full carrier satisfies every kind and primality") {
    for (const GammaSemigroup* s : catalog::validated_structures()) {
        ClassificationReport report = classify_subset(*s, ElementSet::full(s->elements()));
        for (IdealKind k : all_ideal_kinds) {
            CAPTURE(s->name(), to_string(k));
            CHECK(report.verdicts.at(k).holds);
        }
        CHECK(report.prime.prime);
    }
}

TEST_CASE("single-element structures satisfy everything") {
    const GammaSemigroup& s = catalog::singleton();
    ClassificationReport report = classify_subset(s, ElementSet::full(s.elements()));
    for (IdealKind k : all_ideal_kinds) CHECK(report.verdicts.at(k).holds);
    CHECK(report.prime.prime);
}

TEST_CASE("empty subsets are a domain error") {
    const GammaSemigroup& m = catalog::example3_m();
    ElementSet empty = ElementSet::empty(m.elements());
    CHECK_THROWS_AS(is_ideal_of_kind(m, empty, IdealKind::LeftIdeal), DomainError);
    CHECK_THROWS_AS(is_prime_for(m, empty), DomainError);
    CHECK_THROWS_AS(classify_subset(m, empty), DomainError);
}

TEST_CASE("classifier verdicts equal the brute-force oracle on every catalog subset") {
    for (const GammaSemigroup* s : catalog::validated_structures(4)) {
        const Word full = s->elements().full_word();
        for (Word w = 1; w <= full; ++w) {
            ElementSet subset(s->elements(), w);
            Names names = subset_names(*s, w);
            ClassificationReport report = classify_subset(*s, subset);
            for (IdealKind k : all_ideal_kinds) {
                CAPTURE(s->name(), subset.to_string(), to_string(k));
                CHECK(report.verdicts.at(k).holds == oracle_kind(*s, names, k));
            }
            CHECK(report.prime.prime == oracle_prime(*s, names));
        }
    }
}

TEST_CASE("kind witnesses replay against the defining containment") {
    for (const GammaSemigroup* s : catalog::validated_structures(4)) {
        const Word full = s->elements().full_word();
        for (Word w = 1; w <= full; ++w) {
            ElementSet subset(s->elements(), w);
            ClassificationReport report = classify_subset(*s, subset);
            for (IdealKind k : all_ideal_kinds) {
                const IdealVerdict& v = report.verdicts.at(k);
                if (v.holds) continue;
                REQUIRE(v.witness.has_value());
                // the witness element escapes the subset
                CHECK_FALSE(subset.contains(v.witness->element));
            }
            if (!report.prime.prime) {
                const PrimeWitness& w2 = *report.prime.witness;
                CHECK(subset.contains(s->apply(w2.x, w2.gamma, w2.y)));
                CHECK_FALSE(subset.contains(w2.x));
                CHECK_FALSE(subset.contains(w2.y));
            }
        }
    }
}

TEST_CASE("the taxonomy hierarchy holds across the exhaustive sweep") {
    for (const GammaSemigroup* s : catalog::validated_structures(4)) {
        const Word full = s->elements().full_word();
        for (Word w = 1; w <= full; ++w) {
            ElementSet a(s->elements(), w);
            ClassificationReport r = classify_subset(*s, a);
            auto holds = [&](IdealKind k) { return r.verdicts.at(k).holds; };
            CAPTURE(s->name(), a.to_string());

            CHECK(holds(IdealKind::TwoSidedIdeal) ==
                  (holds(IdealKind::LeftIdeal) && holds(IdealKind::RightIdeal)));
            if (holds(IdealKind::LeftIdeal)) CHECK(holds(IdealKind::QuasiIdeal));
            if (holds(IdealKind::TwoSidedIdeal)) {
                CHECK(holds(IdealKind::BiIdeal));
                CHECK(holds(IdealKind::InteriorIdeal));
            }
            CHECK(holds(IdealKind::BiQuasi) ==
                  (holds(IdealKind::LeftBiQuasi) && holds(IdealKind::RightBiQuasi)));
            CHECK(holds(IdealKind::QuasiInterior) == (holds(IdealKind::LeftQuasiInterior) &&
                                                      holds(IdealKind::RightQuasiInterior)));
        }
    }
}

TEST_CASE("bare verdicts drop only the closure conjunct") {
    for (const GammaSemigroup* s : catalog::validated_structures(4)) {
        const Word full = s->elements().full_word();
        for (Word w = 1; w <= full; ++w) {
            ElementSet a(s->elements(), w);
            const bool closed = gamma_product(*s, a, a).subset_of(a);
            ClassificationReport r = classify_subset(*s, a);
            for (IdealKind k : all_ideal_kinds) {
                const IdealVerdict& v = r.verdicts.at(k);
                if (v.bare_holds && closed) CHECK(v.holds);
                if (v.holds) CHECK(v.bare_holds);
            }
        }
    }
}

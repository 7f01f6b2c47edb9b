#include <catch2/catch_amalgamated.hpp>

#include "grs/catalog.hpp"
#include "grs/quotient.hpp"

using namespace grs;

namespace {

SetValuedMap identity_map(const GammaSemigroup& m) {
    std::vector<Word> words;
    for (std::size_t i = 0; i < m.elements().size(); ++i) words.push_back(Word{1} << i);
    return SetValuedMap::from_words("id", m, m, std::move(words));
}

} // namespace

TEST_CASE("classes of the example-1 map") {
    QuotientClasses q(catalog::example1_t());
    REQUIRE(q.size() == 3);
    CHECK(q.classes()[0].image.to_string() == "{b}");
    CHECK(q.classes()[0].preimages.to_string() == "{1,3}");
    CHECK(q.classes()[1].image.to_string() == "{a,c}");
    CHECK(q.classes()[1].preimages.to_string() == "{2}");
    CHECK(q.classes()[2].image.to_string() == "{a,b,c}");
    CHECK(q.classes()[2].preimages.to_string() == "{4}");

    const Carrier& y = catalog::example1_t().target();
    CHECK(quotient_lower(q, ElementSet::of(y, {"b"})) == Word{1}); // just the class {b}
    CHECK(quotient_lower(q, ElementSet::full(y)) == Word{0b111});
    CHECK(quotient_upper(q, ElementSet::full(y)) == Word{0b111});
    CHECK(quotient_lower(q, ElementSet::empty(y)) == 0);
    CHECK(quotient_upper(q, ElementSet::empty(y)) == 0);
    CHECK(q.render_class_word(Word{1}) == "{{b}}");
}

TEST_CASE("preimage/class duality") {
    for (const SetValuedMap* t : catalog::fixture_maps()) {
        QuotientClasses q(*t);
        for (std::size_t x = 0; x < t->source().size(); ++x)
            for (std::size_t y = 0; y < t->source().size(); ++y) {
                CAPTURE(t->name(), x, y);
                CHECK((q.class_of(x) == q.class_of(y)) ==
                      (t->image_word(x) == t->image_word(y)));
            }
    }
}

TEST_CASE("an injective-image map yields the relabeled source structure") {
    const GammaSemigroup& m = catalog::example3_m();
    SetValuedMap id = identity_map(m);
    QuotientStructure q = build_quotient(id);
    REQUIRE(q.well_defined);
    REQUIRE(q.induced.has_value());
    REQUIRE(q.induced->elements().size() == 3);
    CHECK(q.induced->validated());
    // the induced table replays the source table under the class relabeling
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            CHECK(q.induced->apply(a, 0, b) == m.apply(a, 0, b));
}

TEST_CASE("a constant map collapses to one class") {
    const GammaSemigroup& m = catalog::example4_m();
    std::vector<Word> words(m.elements().size(), 0b0011);
    SetValuedMap t = SetValuedMap::from_words("const", m, m, std::move(words));
    QuotientStructure q = build_quotient(t);
    CHECK(q.well_defined);
    CHECK(q.classes.size() == 1);
    CHECK(q.induced->elements().size() == 1);
}

TEST_CASE("the first ill-defined quotient over example 3, found by brute force") {
    const GammaSemigroup& m = catalog::example3_m();
    const std::size_t n = m.elements().size();
    const Word full = m.elements().full_word();

    // independent search: canonical map order, direct definition of the
    // well-definedness condition
    std::optional<std::vector<Word>> first_bad;
    std::size_t bad_count = 0;
    std::vector<Word> words(n);
    for (Word w0 = 1; w0 <= full; ++w0)
        for (Word w1 = 1; w1 <= full; ++w1)
            for (Word w2 = 1; w2 <= full; ++w2) {
                words = {w0, w1, w2};
                bool ok = true;
                for (std::size_t x = 0; x < n && ok; ++x)
                    for (std::size_t xr = 0; xr < n && ok; ++xr) {
                        if (words[x] != words[xr]) continue;
                        for (std::size_t y = 0; y < n && ok; ++y) {
                            ok = ok && words[m.apply(x, 0, y)] == words[m.apply(xr, 0, y)];
                            ok = ok && words[m.apply(y, 0, x)] == words[m.apply(y, 0, xr)];
                        }
                    }
                if (!ok) {
                    ++bad_count;
                    if (!first_bad) first_bad = words;
                }
            }

    CHECK(bad_count == 84); // of the 343 maps
    REQUIRE(first_bad.has_value());
    CHECK(*first_bad == std::vector<Word>{1, 1, 2}); // T(a)={a}, T(b)={a}, T(c)={b}

    SetValuedMap t = SetValuedMap::from_words("bad", m, m, std::vector<Word>(*first_bad));
    QuotientStructure q = build_quotient(t);
    REQUIRE_FALSE(q.well_defined);
    REQUIRE(q.failure_witness.has_value());
    CHECK(q.failure_witness->to_string() == "(a,b,c,alpha,left-arg)");
    CHECK_FALSE(q.induced.has_value());
    // replay: T(a)=T(b) but T(a.c) != T(b.c)
    CHECK(t.image_word(m.elements().index_of("a")) == t.image_word(m.elements().index_of("b")));
    CHECK(t.image_of(m.apply("a", "alpha", "c")).word() !=
          t.image_of(m.apply("b", "alpha", "c")).word());
}

TEST_CASE("quotient approximations factor through the element operators") {
    for (const SetValuedMap* t : catalog::fixture_maps()) {
        QuotientClasses q(*t);
        const Carrier& target = t->target();
        for (Word h = 0; h <= target.full_word(); ++h) {
            ElementSet hs(target, h);
            CAPTURE(t->name(), hs.to_string());
            CHECK(quotient_lower(q, hs) == q.classes_of(lower_approx(*t, hs)));
            CHECK(quotient_upper(q, hs) == q.classes_of(upper_approx(*t, hs)));
        }
    }
}

TEST_CASE("well-defined quotients make the projection operation-compatible") {
    const GammaSemigroup& m = catalog::example3_m();
    std::vector<SetValuedMap> maps;
    maps.push_back(identity_map(m));
    maps.push_back(SetValuedMap::from_words("const", m, m, {0b111, 0b111, 0b111}));
    for (const SetValuedMap& t : maps) {
        QuotientStructure q = build_quotient(t);
        REQUIRE(q.well_defined);
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = 0; y < 3; ++y)
                CHECK(q.classes.class_of(m.apply(x, 0, y)) ==
                      q.induced->apply(q.classes.class_of(x), 0, q.classes.class_of(y)));
    }
}

TEST_CASE("plain-universe sources have classes but no induced operation") {
    const SetValuedMap& t = catalog::example1_t();
    CHECK_THROWS_AS(build_quotient(t), StructureMismatchError);
    CHECK(QuotientClasses(t).size() == 3);
}

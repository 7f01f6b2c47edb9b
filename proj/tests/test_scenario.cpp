#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "grs/scenario.hpp"

using namespace grs;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const std::vector<std::string> fixture_files = {
    "example1.grs", "example2.grs", "example3.grs",    "example4.grs",
    "example5.grs", "example6.grs", "singleton.grs",   "smallcatalog.grs",
};

std::string fixture_path(const std::string& name) {
    return std::string(GRS_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("the example-3 fixture parses into one structure and one map") {
    Scenario s = parse_scenario(slurp(fixture_path("example3.grs")));
    REQUIRE(s.structures().size() == 1);
    REQUIRE(s.maps().size() == 1);
    CHECK(s.universes().empty());

    const GammaSemigroup& m = s.structures().front().structure;
    CHECK(m.name() == "M");
    CHECK(m.validated());
    CHECK(m.apply("c", "alpha", "c") == "b");

    const SetValuedMap& t = *s.find_map("T");
    CHECK(t.image_of("a").to_string() == "{b,c}");
    CHECK(t.image_of("b").to_string() == "{a,b,c}");
    CHECK(t.image_of("c").to_string() == "{b}");
    CHECK(t.source_structure() == &m);
}

TEST_CASE("round trip: parse-serialize-parse is the identity on every fixture") {
    for (const std::string& name : fixture_files) {
        CAPTURE(name);
        Scenario first = parse_scenario(slurp(fixture_path(name)));
        std::string canon = serialize_scenario(first);
        Scenario second = parse_scenario(canon);
        CHECK(serialize_scenario(second) == canon); // idempotent canonical form
    }
}

TEST_CASE("serialization canonicalizes image order") {
    const std::string text =
        "format grs1\n\nuniverse U\nelements: a b c\n\nmap T from U to U\nb -> a\na -> c b a\nc -> b\n";
    Scenario s = parse_scenario(text);
    std::string canon = serialize_scenario(s);
    CHECK(canon.find("a -> a b c\n") != std::string::npos);
    CHECK(canon.find("map T from U to U\na -> a b c\nb -> a\nc -> b\n") != std::string::npos);
}

TEST_CASE("an empty scenario is just the header") {
    Scenario s = parse_scenario("format grs1\n");
    CHECK(serialize_scenario(s) == "format grs1\n");
}

TEST_CASE("diagnostics carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_scenario(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };

    CHECK(line_of("universe U\nelements: a\n") == 1); // missing header
    CHECK(line_of("format grs1\nuniverse U\nelements: a\nuniverse U\nelements: b\n") == 4);
    CHECK(line_of("format grs1\nuniverse U\nelements: a b\nmap T from U to U\na -> b\nb ->\n") ==
          6); // empty image
    CHECK(line_of("format grs1\nmap T from M1 to M3\n") == 2); // dangling reference
    CHECK(line_of("format grs1\nstructure M\nelements: a b\ngammas: g\ntable g:\na b\na\n") ==
          7); // ragged row
    CHECK(line_of("format grs1\nstructure M\nelements: a b\ngammas: g\ntable g:\na z\nb a\n") ==
          6); // unknown element in cell
    CHECK(line_of("format grs1\nstructure M\nelements: a b\ngammas: g h\ntable g:\na b\nb a\n") ==
          7); // missing gamma table
    CHECK(line_of("format grs1\nuniverse U\nelements: a\nmap T from U to U\na -> zz\n") == 5);
}

TEST_CASE("oversized structures are rejected at parse time") {
    std::string text = "format grs1\nstructure BIG\nelements:";
    for (int i = 0; i < 33; ++i) text += " e" + std::to_string(i);
    text += "\ngammas: g h\n";
    CHECK_THROWS_AS(parse_scenario(text), ParseError); // 33 x 2 > 64
}

TEST_CASE("invalid tables fail the load-time gate unless marked unchecked") {
    const std::string invalid =
        "format grs1\nstructure M\nelements: x y z\ngammas: g\ntable g:\nx x x\nz z z\nx x z\n";
    CHECK_THROWS_WITH(parse_scenario(invalid),
                      Catch::Matchers::ContainsSubstring("associativity"));

    const std::string unchecked =
        "format grs1\nstructure M unchecked\nelements: x y z\ngammas: g\ntable g:\nx x x\nz z z\nx "
        "x z\n";
    Scenario s = parse_scenario(unchecked);
    CHECK(s.structures().front().unchecked);
    CHECK_FALSE(s.structures().front().structure.validated());
    CHECK_FALSE(s.structures().front().structure.validate().valid);

    // the deferred mode loads it too, so the validate command can report it
    Scenario deferred = parse_scenario(invalid, ParseOptions{.defer_validation = true});
    CHECK_FALSE(deferred.structures().front().structure.validate().valid);
}

TEST_CASE("comments and blank lines are ignored, names resolve across kinds") {
    const std::string text = "format grs1\n"
                             "# a structure and a universe share the namespace\n"
                             "structure M   # trailing comment\n"
                             "elements: a b\n"
                             "gammas: g\n"
                             "table g:\n"
                             "a a\n"
                             "a b\n"
                             "\n"
                             "universe U\n"
                             "elements: 1 2 3\n"
                             "\n"
                             "map T from M to U\n"
                             "a -> 1\n"
                             "b -> 2 3\n";
    Scenario s = parse_scenario(text);
    CHECK(s.structures().size() == 1);
    CHECK(s.universes().size() == 1);
    const SetValuedMap& t = *s.find_map("T");
    CHECK(t.source_structure() != nullptr);
    CHECK(t.target_structure() == nullptr);
    CHECK(t.image_of("b").to_string() == "{2,3}");

    const std::string dup = "format grs1\nuniverse M\nelements: 1\nstructure M\nelements: a\n"
                            "gammas: g\ntable g:\na\n";
    CHECK_THROWS_AS(parse_scenario(dup), ParseError);
}

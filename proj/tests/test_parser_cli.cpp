#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tor3/commands.hpp"
#include "tor3/corpus.hpp"
#include "tor3/parser.hpp"

using namespace tor3;

namespace {

const std::vector<std::string> kNames{"x", "y", "z"};

Polynomial parse(const std::string& text, long long characteristic = 32003) {
    PrimeField F(characteristic);
    MonomialOrder ord(OrderKind::degrevlex, 3);
    return parse_polynomial(F, ord, kNames, text);
}

std::string data_file(const std::string& name) {
    std::ifstream in(std::string(TOR3_DATA_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("polynomial grammar accepts the notational shortcuts") {
    CHECK(parse("x^2*y") == parse("x^2 y"));
    CHECK(parse("x^3z") == parse("x^3 * z"));
    CHECK(parse("2x") == parse("2 * x"));
    CHECK(parse("x y z") == parse("x*y*z"));
    CHECK(parse("(x + y)*(x - y)") == parse("x^2 - y^2"));
    CHECK(parse("-x - y") == parse("- (x + y)"));
    CHECK(parse("x - 2*y + y") == parse("x - y"));
    CHECK(parse("3(x + y)") == parse("3x + 3y"));
    CHECK(parse("x^1") == parse("x"));
    // Constants reduce modulo the characteristic.
    CHECK(parse("7", 5) == parse("2", 5));
    CHECK(parse("5 * x", 5).is_zero());
}

TEST_CASE("parser failures carry the offending position") {
    auto position_of = [](const std::string& text) -> std::size_t {
        try {
            parse(text);
        } catch (const SyntaxError& e) {
            return e.position;
        }
        FAIL("expected a syntax error for: " << text);
        return static_cast<std::size_t>(-1);
    };
    CHECK(position_of("x^2 + q*y") == 6);
    CHECK(position_of("x^") == 2);
    CHECK(position_of("x + ") == 4);
    // An unclosed group reports the position of the '(' left hanging.
    CHECK(position_of("(x + y") == 0);
    CHECK(position_of("x + + y") == 4);
    CHECK(position_of("x ^ 2 @") == 6);
    CHECK_THROWS_AS(parse("w^2"), UnknownVariable);
    CHECK_THROWS_AS(parse("x^9999999"), SyntaxError);
}

TEST_CASE("generator lists split at top-level commas only") {
    CHECK(split_generators("").empty());
    CHECK(split_generators("   ").empty());
    CHECK(split_generators("x^2") == std::vector<std::string>{"x^2"});
    CHECK(split_generators("x^2, y^2,z^2").size() == 3);
    // One wrapping pair of parentheses is stripped.
    CHECK(split_generators("(x^2, y^2)").size() == 2);
    // But only when it wraps the whole list.
    CHECK(split_generators("(x + y)*(y + z), z^2").size() == 2);
    std::vector<std::string> mixed = split_generators("(x+y, z), w");
    CHECK(mixed.size() == 2);

    PrimeField F(32003);
    MonomialOrder ord(OrderKind::degrevlex, 3);
    CHECK(parse_generators(F, ord, kNames, "(x^2, y^2, z^2)").size() == 3);
    CHECK_THROWS_AS(parse_generators(F, ord, kNames, "x + y^2"), NotHomogeneous);
    try {
        parse_generators(F, ord, kNames, "x^2, x + y^2");
    } catch (const NotHomogeneous& e) {
        CHECK(std::string(e.what()).find("not homogeneous") != std::string::npos);
    }
}

TEST_CASE("ideal files parse with defaults, comments, and overrides") {
    IdealSpec plain = parse_ideal_file("ideal: x^2, y^2, z^2\n");
    CHECK(plain.variables == kNames);
    CHECK(plain.characteristic == 32003);
    CHECK(plain.generator_text.size() == 3);

    IdealSpec full = parse_ideal_file(
        "# a complete intersection\n"
        "ring: a, b, c\n"
        "char: 101\n"
        "ideal: a^2, b^2, c^2  # trailing comment\n");
    CHECK(full.variables == std::vector<std::string>{"a", "b", "c"});
    CHECK(full.characteristic == 101);
    CHECK(full.generator_text == std::vector<std::string>{"a^2", "b^2", "c^2"});

    CHECK_THROWS_AS(parse_ideal_file("char: 91\nideal: x^2\n"), BadCharacteristic);
    CHECK_THROWS_AS(parse_ideal_file("ring: x, y\nideal: x^2\n"), SyntaxError);
    CHECK_THROWS_AS(parse_ideal_file("ideal: x^2\nideal: y^2\n"), SyntaxError);
    CHECK_THROWS_AS(parse_ideal_file("ring: x, y, z\n"), SyntaxError);
    CHECK_THROWS_AS(parse_ideal_file("flavor: mint\nideal: x^2\n"), SyntaxError);
}

TEST_CASE("the data files agree with the embedded corpus") {
    PrimeField F(32003);
    MonomialOrder ord(OrderKind::degrevlex, 3);
    for (const CorpusExpectation& expected : corpus()) {
        IdealSpec spec = parse_ideal_file(data_file(expected.name + ".ideal"));
        CHECK(spec.characteristic == 32003);
        CHECK(spec.variables == kNames);
        std::vector<Polynomial> from_file =
            parse_generator_list(F, ord, spec.variables, spec.generator_text);
        std::vector<Polynomial> embedded = parse_generators(F, ord, kNames, expected.ideal_text);
        REQUIRE(from_file.size() == embedded.size());
        for (std::size_t k = 0; k < from_file.size(); ++k) CHECK(from_file[k] == embedded[k]);
    }
}

TEST_CASE("classify command reports through streams with exit codes") {
    CliOptions options;
    std::ostringstream out, err;

    SUBCASE("classified ring") {
        int code = cmd_classify(std::nullopt, std::string("x^2, y^2, z^2"), options, out, err);
        CHECK(code == 0);
        CHECK(out.str().find("C(3)") != std::string::npos);
        CHECK(err.str().empty());
    }
    SUBCASE("gate rejection") {
        int code = cmd_classify(std::nullopt, std::string("x^2, y^2"), options, out, err);
        CHECK(code == 2);
        CHECK(out.str().find("rejected") != std::string::npos);
    }
    SUBCASE("parse error") {
        int code = cmd_classify(std::nullopt, std::string("x^2 + q"), options, out, err);
        CHECK(code == 1);
        CHECK(err.str().find("error:") != std::string::npos);
    }
    SUBCASE("missing input") {
        int code = cmd_classify(std::nullopt, std::nullopt, options, out, err);
        CHECK(code == 1);
        CHECK_FALSE(err.str().empty());
    }
    SUBCASE("file and inline are mutually exclusive") {
        int code = cmd_classify(std::string("whatever.ideal"), std::string("x^2"), options, out,
                                err);
        CHECK(code == 1);
    }
    SUBCASE("missing file") {
        int code = cmd_classify(std::string("/nonexistent/path.ideal"), std::nullopt, options, out,
                                err);
        CHECK(code == 1);
        CHECK(err.str().find("error:") != std::string::npos);
    }
    SUBCASE("json mode emits a parseable document") {
        options.json = true;
        int code = cmd_classify(std::nullopt, std::string("x^2, y^2, z^2"), options, out, err);
        CHECK(code == 0);
        nlohmann::json doc = nlohmann::json::parse(out.str());
        CHECK(doc["class"]["name"] == "C");
        CHECK(doc["class"]["param"] == 3);
        CHECK(doc["mu"] == 3);
        CHECK(doc["gate"] == "Eligible");
        CHECK(doc["ranks"] == nlohmann::json({3, 3, 1}));
    }
    SUBCASE("json mode on a rejected ring keeps the gate and nulls the rest") {
        options.json = true;
        int code = cmd_classify(std::nullopt, std::string("x^2, y^2"), options, out, err);
        CHECK(code == 2);
        nlohmann::json doc = nlohmann::json::parse(out.str());
        CHECK(doc["gate"] == "PositiveDepth");
        CHECK(doc["class"].is_null());
        CHECK(doc["mu"].is_null());
    }
    SUBCASE("quiet suppresses stdout but keeps the exit code") {
        options.quiet = true;
        int code = cmd_classify(std::nullopt, std::string("x^2, y^2, z^2"), options, out, err);
        CHECK(code == 0);
        CHECK(out.str().empty());
    }
    SUBCASE("characteristic override applies to files") {
        options.characteristic = 101;
        std::string path = std::string(TOR3_DATA_DIR) + "/b1.ideal";
        int code = cmd_classify(path, std::nullopt, options, out, err);
        CHECK(code == 0);
        CHECK(out.str().find("char     101") != std::string::npos);
    }
    SUBCASE("tables render in text mode") {
        options.tables = true;
        int code = cmd_classify(std::nullopt, std::string("x^2, y^2, z^2"), options, out, err);
        CHECK(code == 0);
        CHECK(out.str().find("representatives:") != std::string::npos);
        CHECK(out.str().find("e1*e2") != std::string::npos);
    }
}

TEST_CASE("corpus and verify commands run clean") {
    CliOptions options;
    std::ostringstream out, err;
    CHECK(cmd_corpus(options, out, err) == 0);
    CHECK(out.str().find("corpus: 8/8 passed") != std::string::npos);

    std::ostringstream vout, verr;
    CHECK(cmd_verify(std::nullopt, std::string("x^2, y^2, z^2"), options, vout, verr) == 0);
    CHECK(vout.str().find("verify: 9/9 passed") != std::string::npos);

    std::ostringstream rout, rerr;
    CHECK(cmd_verify(std::nullopt, std::string("x^2, y^2"), options, rout, rerr) == 2);

    CliOptions json_options;
    json_options.json = true;
    std::ostringstream jout, jerr;
    CHECK(cmd_corpus(json_options, jout, jerr) == 0);
    nlohmann::json doc = nlohmann::json::parse(jout.str());
    CHECK(doc["pass"] == true);
    CHECK(doc["corpus"].size() == 8);
    CHECK(doc["corpus"][0]["name"] == "g1");
    CHECK(doc["corpus"][0]["report"]["class"]["name"] == "G");
}

TEST_CASE("a truncated homology scan degrades loudly, not silently") {
    // Capping the scan below the true bounds changes ranks, so the audit's
    // Euler check must fail while the pipeline itself still completes.
    CliOptions options;
    options.max_degree = 3;
    std::ostringstream out, err;
    int code = cmd_verify(std::nullopt,
                          std::string("x*y^2, x*y*z, y*z^2, x^4 - y^3*z, x*z^3 - y^4"), options,
                          out, err);
    CHECK(code == 1);
    CHECK(out.str().find("euler_characteristic") != std::string::npos);
}

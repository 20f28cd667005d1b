#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "specdom/digest.hpp"
#include "specdom/domain_file.hpp"
#include "specdom/kohn.hpp"
#include "specdom/output.hpp"
#include "test_util.hpp"

using namespace specdom;

namespace {

/// Expect a positioned failure and hand the error back for inspection.
parse_error capture_error(const std::string& text) {
    try {
        parse_domain(text);
    } catch (const parse_error& e) {
        return e;
    }
    FAIL("expected parse_error");
    return parse_error(0, 0, "unreachable");
}

}  // namespace

TEST_CASE("parsing a minimal file") {
    DomainFile f = parse_domain("vars z1 z2;\nh1 = z1;\nh2 = z2;\n");
    REQUIRE(f.variables.size() == 2);
    CHECK(f.variables[0] == "z1");
    CHECK(f.variables[1] == "z2");
    REQUIRE(f.h.size() == 2);
    CHECK(f.h[0] == Polynomial::variable(2, 0));
    CHECK(f.h[1] == Polynomial::variable(2, 1));
    CHECK_FALSE(f.config.max_level.has_value());
}

TEST_CASE("parsing a config block") {
    DomainFile f = parse_domain(
        "vars x y;\n"
        "h1 = x^2 - y^3;\n"
        "config {\n"
        "    max_level = 5;\n"
        "    seed = 18446744073709551615;\n"
        "    degree_cap = 100;\n"
        "}\n");
    CHECK(f.config.max_level == 5);
    CHECK(f.config.seed == 18446744073709551615ULL);
    CHECK(f.config.degree_cap == 100);
    CHECK_FALSE(f.config.m_max.has_value());
}

TEST_CASE("expression grammar") {
    std::vector<std::string> vars = {"z1", "z2"};
    CHECK(parse_polynomial("(z1 + z2)^2", vars) ==
          testutil::P("z1^2 + 2*z1*z2 + z2^2"));
    CHECK(parse_polynomial("1/2*z1 - 3*z2", vars) ==
          Rational(1, 2) * Polynomial::variable(2, 0) -
              Rational(3) * Polynomial::variable(2, 1));
    CHECK(parse_polynomial("2^3", vars) == Polynomial::constant(2, Rational(8)));
    // Unary minus binds looser than the power.
    CHECK(parse_polynomial("-z1^2", vars) == -parse_polynomial("z1^2", vars));
    CHECK(parse_polynomial("3 - - 2", vars) == Polynomial::constant(2, Rational(5)));
    CHECK_THROWS_AS(parse_polynomial("w", vars), parse_error);
    CHECK_THROWS_AS(parse_polynomial("z1 +", vars), parse_error);
    CHECK_THROWS_AS(parse_polynomial("1/0", vars), parse_error);
}

TEST_CASE("parse errors carry positions") {
    parse_error missing = capture_error("h1 = z1;\n");
    CHECK(missing.line == 1);
    CHECK(missing.column >= 1);
    CHECK(std::string(missing.what()).find("line 1") != std::string::npos);

    parse_error bad_char = capture_error("vars z1;\nh1 = z1 @ 2;\n");
    CHECK(bad_char.line == 2);

    parse_error vanish = capture_error("vars z1;\nh1 = z1 + 1;\n");
    CHECK(vanish.line == 2);
    CHECK(std::string(vanish.what()).find("vanish") != std::string::npos);
}

TEST_CASE("malformed files are rejected") {
    // Duplicate variable names.
    CHECK_THROWS_AS(parse_domain("vars z1 z1;\nh1 = z1;\n"), parse_error);
    // Reserved words cannot be variables.
    CHECK_THROWS_AS(parse_domain("vars config;\nh1 = config;\n"), parse_error);
    CHECK_THROWS_AS(parse_domain("vars h1;\nh1 = h1;\n"), parse_error);
    // Numbering must start at h1 and be consecutive.
    CHECK_THROWS_AS(parse_domain("vars z1;\nh2 = z1;\n"), parse_error);
    CHECK_THROWS_AS(parse_domain("vars z1;\nh1 = z1;\nh3 = z1;\n"), parse_error);
    // A file with no boundary functions parses (the h list is grammatically
    // optional) but cannot become a domain, which needs at least one h.
    DomainFile empty = parse_domain("vars z1;\n");
    CHECK(empty.h.empty());
    CHECK_THROWS_AS(to_special_domain(empty), std::invalid_argument);
    // Unknown and duplicate config keys.
    CHECK_THROWS_AS(
        parse_domain("vars z1;\nh1 = z1;\nconfig {\n    colour = 3;\n}\n"),
        parse_error);
    CHECK_THROWS_AS(parse_domain("vars z1;\nh1 = z1;\nconfig {\n    m_max = 3;\n"
                                 "    m_max = 4;\n}\n"),
                    parse_error);
    // Out-of-range config values.
    CHECK_THROWS_AS(
        parse_domain("vars z1;\nh1 = z1;\nconfig {\n    m_max = 0;\n}\n"),
        parse_error);
    CHECK_THROWS_AS(parse_domain("vars z1;\nh1 = z1;\nconfig {\n"
                                 "    max_level = 99999999999999999999;\n}\n"),
                    parse_error);
    // Trailing junk.
    CHECK_THROWS_AS(parse_domain("vars z1;\nh1 = z1;\nextra\n"), parse_error);
}

TEST_CASE("printing is canonical and reparses to the same file") {
    DomainFile f = parse_domain(
        "vars z1 z2;\n"
        "h1 = z1^2;\n"
        "h2 = 3*z1*z2 - z2^3;\n"
        "config {\n"
        "    seed = 7;\n"
        "    max_level = 4;\n"
        "}\n");
    std::string printed = print_domain(f);
    // Keys come out in the fixed canonical order regardless of input order.
    CHECK(printed.find("max_level = 4;") < printed.find("seed = 7;"));
    // The second polynomial is printed in canonical descending form.
    CHECK(printed.find("-z2^3 + 3*z1*z2") != std::string::npos);
    DomainFile g = parse_domain(printed);
    CHECK(f == g);
    // A canonical file is a fixed point of parse-then-print.
    CHECK(print_domain(g) == printed);
}

TEST_CASE("randomized canonical round trips") {
    auto eng = testutil::make_rng(424242);
    const std::vector<std::string> pool = {"z1", "z2", "z3"};
    for (int trial = 0; trial < 50; ++trial) {
        DomainFile f;
        int nvars = testutil::rand_int(eng, 1, 3);
        for (int i = 0; i < nvars; ++i) f.variables.push_back(pool[i]);
        int count = testutil::rand_int(eng, 1, 3);
        for (int i = 0; i < count; ++i) {
            // Build a random polynomial vanishing at the origin: every
            // term carries a monomial of positive degree.
            std::vector<Polynomial::Term> terms;
            int tcount = testutil::rand_int(eng, 1, 4);
            for (int t = 0; t < tcount; ++t) {
                Monomial m = testutil::random_monomial(eng, nvars, 4);
                if (m.is_one()) m.e[0] = 1;
                int num = testutil::rand_int(eng, -6, 6);
                if (num == 0) num = 2;
                int den = testutil::rand_int(eng, 1, 5);
                terms.emplace_back(m, rat(num, den));
            }
            Polynomial p = Polynomial::from_terms(nvars, std::move(terms));
            if (p.is_zero()) p = Polynomial::variable(nvars, 0);
            f.h.push_back(p);
        }
        if (eng() % 2) f.config.max_level = testutil::rand_int(eng, 1, 9);
        if (eng() % 2) f.config.seed = eng();
        if (eng() % 2) f.config.p_cap = testutil::rand_int(eng, 1, 20);

        std::string printed = print_domain(f);
        DomainFile back = parse_domain(printed);
        CHECK(back == f);
        CHECK(print_domain(back) == printed);
    }
}

TEST_CASE("conversion to a special domain") {
    DomainFile f = parse_domain("vars z1 z2;\nh1 = z1^2;\nh2 = z2^2;\n");
    SpecialDomain D = to_special_domain(f);
    CHECK(D.n == 2);
    REQUIRE(D.count() == 2);
    CHECK(D.h[0] == testutil::P("z1^2"));
    CHECK(D.h[1] == testutil::P("z2^2"));
}

TEST_CASE("digest hex round trip") {
    CHECK(digest_hex(0) == "0x0000000000000000");
    CHECK(digest_hex(0xdeadbeefcafef00dULL) == "0xdeadbeefcafef00d");
    auto eng = testutil::make_rng(31337);
    for (int i = 0; i < 50; ++i) {
        std::uint64_t v = eng();
        CHECK(digest_parse(digest_hex(v)) == v);
    }
    CHECK_THROWS_AS(digest_parse("deadbeefcafef00d"), std::invalid_argument);
    CHECK_THROWS_AS(digest_parse("0xDEADBEEFCAFEF00D"), std::invalid_argument);
    CHECK_THROWS_AS(digest_parse("0x123"), std::invalid_argument);
    CHECK_THROWS_AS(digest_parse("0x123456789abcdefg"), std::invalid_argument);
}

TEST_CASE("run config json round trip") {
    RunConfig c;
    c.max_level = 6;
    c.m_max = 32;
    c.generator_cap = 12;
    c.random_combos = 2;
    c.seed = 18446744073709551615ULL;
    Json j = run_config_json(c);
    // Seeds travel as decimal strings so 64-bit values survive JSON.
    CHECK(j.at("seed").is_string());
    CHECK(j.at("seed").get<std::string>() == "18446744073709551615");
    RunConfig back = run_config_from_json(j);
    CHECK(back == c);
}

TEST_CASE("certificate json round trip") {
    const std::vector<std::string> names = {"z1", "z2"};
    SpecialDomain D(2, {testutil::P("z1^2"), testutil::P("z2^2")});
    Certificate c = run(D);
    Json j = certificate_json(c, names);
    CHECK(j.at("outcome") == "subelliptic");
    CHECK(j.at("epsilon") == "1/64");
    Certificate back = certificate_from_json(j, names);
    CHECK(back.outcome == c.outcome);
    CHECK(back.epsilon == c.epsilon);
    CHECK(back.witness_level == c.witness_level);
    CHECK(back.witness_index == c.witness_index);
    CHECK(back.history == c.history);
    CHECK(back.warnings == c.warnings);
    CHECK(back.input_digest == c.input_digest);
    CHECK(back.history_digest == c.history_digest);
    CHECK(back.config == c.config);
    REQUIRE(back.witness.has_value());
    CHECK(*back.witness == *c.witness);
    // The reconstruction replays cleanly.
    CHECK(replay(back, D));
}

TEST_CASE("type report json shape") {
    SpecialDomain D(2, {testutil::P("z1^2"), testutil::P("z2^2")});
    TypeReport r = analyze_type(D);
    Json j = type_report_json(r);
    CHECK(j.at("p") == 3);
    CHECK(j.at("zero_dim") == true);
    CHECK(j.at("q_hat") == 3);
    CHECK(j.at("t_hat").at("infinite") == false);
    CHECK(j.at("t_hat").at("value") == "4");
    REQUIRE(j.at("checks").size() == 3);
    for (const auto& chk : j.at("checks")) CHECK(chk.at("pass") == true);

    TypeReport inf = analyze_type(SpecialDomain(2, {testutil::P("z1*z2")}));
    Json ji = type_report_json(inf);
    CHECK(ji.at("p").is_null());
    CHECK(ji.at("t_hat").at("infinite") == true);
}

TEST_CASE("json documents are schema-stamped and stable") {
    Json doc = run_document("kohn", Json{{"x", 1}});
    CHECK(doc.at("schema") == "specdom-run/1");
    CHECK(doc.at("command") == "kohn");
    std::string once = dump_json(doc);
    CHECK(once == dump_json(doc));
    CHECK(once.back() == '\n');
}

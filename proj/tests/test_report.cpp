#include <string>

#include "doctest.h"
#include "json.hpp"
#include "polytoep/criteria.hpp"
#include "polytoep/report.hpp"

using namespace polytoep;

namespace {
GaussRational q(long n, long d = 1) { return GaussRational{Rational(n, d), Rational(0)}; }
}

TEST_CASE("shortest round-trip double formatting") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-3.0) == "-3");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("complex formatting") {
    CHECK(format_complex({2.0, 0.0}) == "2");
    CHECK(format_complex({0.0, 1.0}) == "1i");
    CHECK(format_complex({0.0, -2.5}) == "-2.5i");
    CHECK(format_complex({1.0, -1.0}) == "1-1i");
    CHECK(format_complex({-0.5, 0.25}) == "-0.5+0.25i");
}

TEST_CASE("symbol JSON: all coefficient encodings") {
    std::vector<std::string> warnings;
    SymbolQ s = parse_symbol_exact(
        R"({"n": 1, "coeffs": [[["-1/2", "1/3"], [0, 1]], [{"re": "2", "im": "-1/5"}]]})",
        &warnings);
    CHECK(warnings.empty());
    CHECK(s.order == 1);
    CHECK(s.a(0).coeff(0) == GaussRational{Rational(-1, 2), Rational(1, 3)});
    CHECK(s.a(0).coeff(1) == GaussRational{Rational(0), Rational(1)});
    CHECK(s.a(1).coeff(0) == GaussRational{Rational(2), Rational(-1, 5)});

    // "order" is accepted as an alias for "n"
    SymbolQ s2 = parse_symbol_exact(R"({"order": 0, "coeffs": [["7/3"]]})", nullptr);
    CHECK(s2.a(0).coeff(0) == q(7, 3));
}

TEST_CASE("symbol JSON: non-integer numbers convert exactly from binary, with a warning") {
    std::vector<std::string> warnings;
    SymbolQ s = parse_symbol_exact(R"({"n": 0, "coeffs": [[0.1]]})", &warnings);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("binary") != std::string::npos);
    CHECK(s.a(0).coeff(0) != q(1, 10));  // 0.1 is not representable in binary64

    SymbolQ s2 = parse_symbol_exact(R"({"n": 0, "coeffs": [["0.1"]]})", nullptr);
    CHECK(s2.a(0).coeff(0) == q(1, 10));  // decimal strings are exact
}

TEST_CASE("symbol JSON: malformed inputs raise ParseError with a location") {
    auto bad = [](const std::string& text) {
        CHECK_THROWS_AS(parse_symbol_exact(text, nullptr), ParseError);
    };
    bad("not json at all");
    bad("[1, 2]");                                     // not an object
    bad(R"({"coeffs": [[1]]})");                       // missing n
    bad(R"({"n": -1, "coeffs": []})");                 // order out of range
    bad(R"({"n": 70, "coeffs": []})");                 // order out of range
    bad(R"({"n": 1, "coeffs": [[1]]})");               // wrong row count
    bad(R"({"n": 0, "coeffs": [1]})");                 // row not an array
    bad(R"({"n": 0, "coeffs": [[true]]})");            // unsupported entry
    bad(R"({"n": 0, "coeffs": [[[1, 2, 3]]]})");       // malformed complex pair

    try {
        parse_symbol_exact(R"({"n": 0, "coeffs": [["one/two"]]})", nullptr);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("coeffs[0][0]") != std::string::npos);
    }
}

TEST_CASE("symbol JSON round-trips exactly") {
    SymbolQ s(2, {PolyQ({q(1, 3), GaussRational{Rational(0), Rational(-2, 7)}}),
                  PolyQ(),
                  PolyQ::constant(q(5))});
    SymbolQ back = parse_symbol_exact(symbol_to_json(s), nullptr);
    REQUIRE(back.order == 2);
    for (int i = 0; i <= 2; ++i) CHECK(back.a(i) == s.a(i));
}

TEST_CASE("report JSON carries the analysis fields under stable keys") {
    SymbolQ s(1, {PolyQ::constant(q(-2)), PolyQ::constant(q(1))});
    AnalysisReport rep = analyze(s);
    nlohmann::json j = nlohmann::json::parse(report_to_json(rep));
    CHECK(j.at("schema") == "polytoep-report/1");
    CHECK(j.at("backend") == "exact");
    CHECK(j.at("order") == 1);
    CHECK(j.at("verdict") == "Invertible");
    CHECK(j.at("kernelDimExact") == 0);
    CHECK(j.at("cokernelDim") == 0);
    CHECK(j.at("indexData").at("winding") == 0);
    CHECK(j.at("indexData").at("fredholmIndex") == 0);
    REQUIRE(j.at("indexData").at("tildeZerosInDisc").size() == 1);
    CHECK(j.at("indexData").at("tildeZerosInDisc")[0].at("multiplicity") == 1);
    CHECK(j.at("oracle").is_null());
    REQUIRE(j.at("provenance").is_array());
    for (const auto& c : j.at("provenance")) {
        CHECK(c.contains("claim"));
        CHECK(c.contains("rule"));
        CHECK_FALSE(c.at("anchor").get<std::string>().empty());
    }
}

TEST_CASE("report JSON: undecided winding serializes as null") {
    SymbolQ s(1, {PolyQ::constant(q(-1)), PolyQ::constant(q(1))});  // boundary zero
    nlohmann::json j = nlohmann::json::parse(report_to_json(analyze(s)));
    CHECK(j.at("verdict") == "NotFredholm");
    CHECK(j.at("indexData").at("winding").is_null());
    CHECK(j.at("indexData").at("boundaryStatus") == "on-circle");
}

TEST_CASE("report text block names the essentials") {
    SymbolQ s(1, {PolyQ({q(-7, 2), q(3)}), PolyQ::constant(q(1))});
    std::string text = report_to_text(analyze(s));
    CHECK(text.find("verdict: NotInvertible") != std::string::npos);
    CHECK(text.find("winding: 1   index: -1") != std::string::npos);
    CHECK(text.find("kernel dim: 0 (exact)") != std::string::npos);
    CHECK(text.find("cokernel dim: 1") != std::string::npos);
    CHECK(text.find("claims:") != std::string::npos);
}

TEST_CASE("probe CSV pads missing columns") {
    OracleSummary o;
    o.sizes = {8, 16};
    o.sigmas = {{1.0, 2.0, 3.0, 4.0}, {0.5}};
    CHECK(probe_csv(o) == "N,sigma_1,sigma_2,sigma_3,sigma_4\n8,1,2,3,4\n16,0.5,,,\n");
}

TEST_CASE("spectrum CSV ends with a verdict census") {
    std::vector<SpectrumPoint> pts{{{0.5, 0.0}, "Invertible", ""},
                                   {{1.0, 0.0}, "NotFredholm", ""},
                                   {{-0.25, 0.5}, "Invertible", ""}};
    std::string csv = spectrum_to_csv(pts);
    CHECK(csv.find("re,im,verdict\n") == 0);
    CHECK(csv.find("0.5,0,Invertible\n") != std::string::npos);
    CHECK(csv.find("# summary: Invertible=2 NotFredholm=1\n") != std::string::npos);

    nlohmann::json j = nlohmann::json::parse(spectrum_to_json(pts));
    CHECK(j.at("points").size() == 3);
    CHECK(j.at("counts").at("Invertible") == 2);
}

TEST_CASE("truncation dumps: constant symbol gives a scalar matrix") {
    SymbolQ s(0, {PolyQ::constant(q(2))});
    TruncatedToeplitz t = truncate(s, 2);
    CHECK(truncation_to_csv(t, {2.0, 2.0}) == "2,0\n0,2\n# singular values: 2 2\n");
    nlohmann::json j = nlohmann::json::parse(truncation_to_json(t, {2.0, 2.0}));
    CHECK(j.at("N") == 2);
    CHECK(j.at("band") == 0);
    CHECK(j.at("entries")[0][0] == nlohmann::json::array({2.0, 0.0}));
    CHECK(j.at("singularValues") == nlohmann::json::array({2.0, 2.0}));
}

TEST_CASE("rule anchors are self-contained sentences for known tags only") {
    CHECK_FALSE(rule_anchor("winding-index").empty());
    CHECK_FALSE(rule_anchor("simple-zero-residue").empty());
    CHECK(rule_anchor("no-such-rule").empty());
}

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include "sextic/cli/cli.hpp"
#include "sextic/exact/big_rational.hpp"

using json = nlohmann::ordered_json;
using sextic::exact::BigRational;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = sextic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    const auto r = run(std::move(args));
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

std::vector<json> json_lines(const std::string& text) {
    std::vector<json> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(json::parse(line));
    return lines;
}

std::vector<std::string> keys(const json& doc) {
    std::vector<std::string> out;
    for (const auto& [k, v] : doc.items()) out.push_back(k);
    return out;
}

void for_each_string(const json& doc, const std::function<void(const std::string&)>& visit) {
    if (doc.is_string()) visit(doc.get<std::string>());
    if (doc.is_structured())
        for (const auto& v : doc) for_each_string(v, visit);
}

}  // namespace

TEST_CASE("classify: 36x^6 + 36x^2 + 18x + 5") {
    const auto doc = run_json({"classify", "--coeffs", "36,0,0,0,36,18,5"});
    CHECK(keys(doc) == std::vector<std::string>{"input", "irreducible", "f_roots", "g_roots", "discriminant",
                                                "sqrt_discriminant", "bound", "solvable", "notes"});
    CHECK(doc["irreducible"] == true);
    CHECK(doc["f_roots"] == json::array({"0"}));
    CHECK(doc["bound"] == "SubgroupOfJ");
    CHECK(doc["solvable"] == "Yes");
    CHECK(doc["sqrt_discriminant"].is_null());
}

TEST_CASE("classify: degenerate and malformed input") {
    const auto degenerate = run({"classify", "--d", "0", "--e", "0"});
    CHECK(degenerate.code == 2);
    CHECK(degenerate.out.empty());
    CHECK(degenerate.err.find("repeated root") != std::string::npos);
    CHECK(run({"classify", "--coeffs", "1,2,3"}).code == 1);
    CHECK(run({"classify", "--coeffs", "0,0,0,0,1,2,3"}).code == 1);
    CHECK(run({"classify", "--coeffs", "1,0,0,0,0,0,x"}).code == 1);
    CHECK(run({"classify", "--coeffs", "1,0,0,0,0,0,1/0"}).code == 1);
    CHECK(run({"classify", "--d", "1"}).code == 1);
    CHECK(run({"classify", "--coeffs", "1,0,0,0,1,1,1", "--d", "1", "--e", "1"}).code == 1);
    CHECK(run({"classify"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("classify: Smith family member t = 1 lies in K") {
    // x^6 + (t-6)x^4 + (2t-2)x^3 + (t+9)x^2 + 6x + 1 at t = 1.
    const auto doc = run_json({"classify", "--coeffs", "1,0,-5,0,10,6,1"});
    CHECK(doc["bound"] == "SubgroupOfK");
    CHECK(doc["g_roots"] == json::array({"0"}));
}

TEST_CASE("classify: negative rational shorthand") {
    const auto doc = run_json({"classify", "--d", "-1/2", "--e", "3"});
    CHECK(doc["input"] == json::array({"1", "0", "0", "0", "1", "-1/2", "3"}));
}

TEST_CASE("resolvent: printed theta form against the numeric resolvent") {
    const auto doc = run_json({"resolvent", "--d", "1", "--e", "1", "--kind", "j", "--method", "both"});
    std::set<int> powers;
    for (const auto& item : doc["diff"]) powers.insert(item["x_power"].get<int>());
    CHECK(powers == std::set<int>{12, 9, 0});
    CHECK(doc["closed"]["coefficients"].size() == 16);

    const auto fitted =
        run_json({"resolvent", "--d", "1", "--e", "1", "--kind", "j", "--method", "both", "--form", "fitted"});
    CHECK(fitted["diff"].empty());
    // The missing e^8 factor at x^7 only shows when e != 1.
    const auto at_two = run_json({"resolvent", "--d", "1", "--e", "2", "--kind", "j", "--method", "both"});
    bool has_seven = false;
    for (const auto& item : at_two["diff"]) has_seven = has_seven || item["x_power"] == 7;
    CHECK(has_seven);
}

TEST_CASE("resolvent: closed phi form at (2, 1)") {
    const auto doc = run_json({"resolvent", "--d", "2", "--e", "1", "--kind", "k", "--method", "closed"});
    const auto& c = doc["closed"]["coefficients"];
    REQUIRE(c.size() == 11);
    CHECK(c.back() == "0");
    CHECK_FALSE(doc.contains("numeric"));
    CHECK_FALSE(doc.contains("diff"));
}

TEST_CASE("resolvent: usage errors") {
    CHECK(run({"resolvent", "--kind", "j", "--method", "closed"}).code == 1);
    CHECK(run({"resolvent", "--coeffs", "1,0,0,0,0,0,-2", "--kind", "j", "--method", "closed"}).code == 1);
    CHECK(run({"resolvent", "--d", "1", "--e", "1"}).code == 1);
    CHECK(run({"resolvent", "--d", "1", "--e", "1", "--kind", "q"}).code == 1);
}

TEST_CASE("discriminant") {
    const auto doc = run_json({"discriminant", "--d", "3", "--e", "-2"});
    CHECK(BigRational::parse(doc["reduced_form"].get<std::string>()) ==
          -BigRational::parse(doc["discriminant"].get<std::string>()));
    const auto square = run_json({"discriminant", "--coeffs", "1,0,0,0,0,0,-2"});
    CHECK(square["sqrt_discriminant"].is_null());
    CHECK_FALSE(square.contains("reduced_form"));
}

TEST_CASE("audit: the phi form matches as printed") {
    const auto doc = run_json({"audit", "--kind", "k"});
    CHECK(keys(doc) == std::vector<std::string>{"phi"});
    CHECK(doc["phi"]["matches_printed"] == true);
    CHECK(doc["phi"]["discrepancies"].empty());
    CHECK(doc["phi"]["holdout_points"] == 20);
}

TEST_CASE("search: sextic grid") {
    const auto r = run({"search", "--d-range", "0:2", "--e-range", "0:1"});
    REQUIRE(r.code == 0);
    const auto lines = json_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1]["d"] == "2");
    CHECK(lines[1]["bound"] == "SubgroupOfK");
    CHECK(r.err.find("d=0 e=0") != std::string::npos);
    CHECK(run({"search", "--d-range", "0:2"}).code == 1);
    CHECK(run({"search", "--d-range", "2:0", "--e-range", "0:1"}).code == 1);
}

TEST_CASE("search: quintics") {
    const auto r = run({"search", "--quintic", "--box", "12"});
    REQUIRE(r.code == 0);
    const auto lines = json_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0]["a"] == "-5");
    CHECK(lines[0]["b"] == "-12");
    CHECK(lines[1]["b"] == "12");
    CHECK(run({"search", "--quintic"}).code == 1);
    CHECK(run({"--jobs", "2", "search", "--quintic", "--box", "12"}).out == r.out);
}

TEST_CASE("quintic") {
    const auto doc = run_json({"quintic", "--a", "20", "--b", "32"});
    CHECK(doc["params"] == json{{"epsilon", -1}, {"c", "1/2"}, {"e", "1"}});
    CHECK(doc["roots"].size() == 5);
    CHECK(std::stod(doc["residual"].get<std::string>()) < 1e-30);

    const auto from_params = run_json({"quintic", "--params", "-1,1/2,1"});
    CHECK(from_params["a"] == "20");
    CHECK(from_params["b"] == "32");
    CHECK(from_params["roots"] == doc["roots"]);

    const auto none = run_json({"quintic", "--a", "1", "--b", "1"});
    CHECK(none["params"].is_null());
    CHECK(none["irreducible"] == false);

    CHECK(run({"quintic", "--a", "0", "--b", "1"}).code == 1);
    CHECK(run({"quintic", "--params", "2,1,1"}).code == 1);
    CHECK(run({"quintic", "--params", "1,-1,1"}).code == 1);
    CHECK(run({"quintic", "--params", "1,1"}).code == 1);
    CHECK(run({"quintic", "--a", "1"}).code == 1);
}

TEST_CASE("precision flag and environment fallback") {
    const std::vector<std::string> args{"resolvent", "--coeffs", "1,0,0,0,0,0,-2", "--kind", "k"};
    CHECK(run_json(args)["numeric"]["precision_bits"] == 256);
    setenv("SEXTIC_PRECISION_BITS", "512", 1);
    CHECK(run_json(args)["numeric"]["precision_bits"] == 512);
    auto flagged = args;
    flagged.insert(flagged.begin(), {"--precision-bits", "1024"});
    CHECK(run_json(flagged)["numeric"]["precision_bits"] == 1024);
    unsetenv("SEXTIC_PRECISION_BITS");
    CHECK(run({"--precision-bits", "8", "classify", "--d", "1", "--e", "1"}).code == 1);
    // Global flags are also accepted after the subcommand.
    auto trailing = args;
    trailing.insert(trailing.end(), {"--precision-bits", "384"});
    CHECK(run_json(trailing)["numeric"]["precision_bits"] == 384);
}

TEST_CASE("text format is aligned") {
    const auto r = run({"--format", "text", "classify", "--coeffs", "36,0,0,0,36,18,5"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::set<std::size_t> columns;
    std::size_t count = 0;
    for (std::string line; std::getline(in, line); ++count) {
        const auto gap = line.find("  ");
        REQUIRE(gap != std::string::npos);
        columns.insert(line.find_first_not_of(' ', gap));
    }
    CHECK(count == 9);
    CHECK(columns.size() == 1);
    CHECK(r.out.find("bound              SubgroupOfJ\n") != std::string::npos);
}

TEST_CASE("property: rationals in JSON round-trip and output is deterministic") {
    const std::vector<std::vector<std::string>> invocations{
        {"classify", "--coeffs", "36,0,0,0,36,18,5"},
        {"classify", "--coeffs", "7/2,0,-1/3,0,10,6,1"},
        {"classify", "--d", "-3/5", "--e", "11/7"},
        {"discriminant", "--coeffs", "2,1/2,0,-3,5/9,6,1"},
        {"resolvent", "--d", "-1/2", "--e", "1/3", "--kind", "k", "--method", "both"},
        {"quintic", "--a", "15", "--b", "-12"},
    };
    for (const auto& args : invocations) {
        const auto first = run(args);
        REQUIRE(first.code == 0);
        CHECK(run(args).out == first.out);
        std::size_t rationals = 0;
        for_each_string(json::parse(first.out), [&](const std::string& s) {
            if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos) return;
            ++rationals;
            CHECK(BigRational::parse(s).to_string() == s);
        });
        CHECK(rationals > 0);
    }
}

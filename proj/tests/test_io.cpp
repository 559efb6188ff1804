#include "cli.hpp"
#include "oracles.hpp"

#include "perfectforms/catalog.hpp"
#include "perfectforms/perfection.hpp"
#include "perfectforms/reduction.hpp"
#include "perfectforms/serialization.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace perfectforms;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("perfectforms_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string form_file(const std::string& name, const QuadForm& q) { return write_temp(name, to_json(q).dump()); }

}  // namespace

TEST_CASE("catalog entries") {
    auto a2 = catalog::get("A2");
    CHECK(a2.form == QuadForm(IntMatrix{{2, 1}, {1, 2}}));
    CHECK(a2.expected_lambda1 == 2);
    CHECK(a2.expected_min_count == 3);
    auto d4 = catalog::get("D4");
    CHECK(d4.expected_min_count == 12);
    auto e8 = catalog::get("E8");
    CHECK(e8.form.dim() == 8);
    CHECK(e8.expected_min_count == 120);
    CHECK(catalog::get("A12").form.dim() == 12);
    CHECK_THROWS_AS(catalog::get("Z9"), catalog::UnknownEntryError);
    CHECK_THROWS_AS(catalog::get("A"), catalog::UnknownEntryError);
    CHECK(catalog::version() == 1);
}

TEST_CASE("catalog expectations are re-derived") {
    for (const auto& name : catalog::names()) {
        CAPTURE(name);
        auto e = catalog::get(name);
        CHECK(e.form.is_integral());
        CHECK(is_perfect(e.form));
        auto m = arithmetical_minimum(e.form);
        CHECK(m.form_min == Rational(e.expected_lambda1));
        CHECK(m.count() == e.expected_min_count);
        if (e.form.dim() <= 4) {
            CHECK(m.form_min == oracle::minimum(e.form));
            CHECK(oracle::minimal_vectors(e.form).size() == e.expected_min_count);
        }
    }
}

TEST_CASE("catalog forms survive adversarial conjugation") {
    oracle::Rng rng(61);
    for (const auto& name : catalog::names()) {
        CAPTURE(name);
        QuadForm q = catalog::get(name).form;
        QuadForm bad = oracle::conjugate(q, oracle::random_unimodular(rng, q.dim(), 3 * static_cast<int>(q.dim()), 4));
        auto rep = small_minvec_representative(bad);
        CHECK(rep.within_bound());
        CHECK(apply_unimodular(bad, rep.result.transform) == rep.result.reduced);
    }
}

TEST_CASE("serialization round trips") {
    QuadForm q(RatMatrix{{Rational(1, 3), Rational(-2)}, {Rational(-2), Rational(50)}});
    Json j = to_json(q);
    CHECK(j.dump() == R"({"dim":2,"entries":[[1,3],[-2,1],[-2,1],[50,1]]})");
    CHECK(quad_form_from_json(j) == q);

    Integer big("123456789012345678901234567890");
    CHECK(to_json(big) == Json("123456789012345678901234567890"));
    CHECK(integer_from_json(to_json(big)) == big);
    CHECK(integer_from_json(Json(-5)) == -5);
    CHECK(rational_from_json(Json::array({2, -4})) == Rational(-1, 2));

    auto m = arithmetical_minimum(QuadForm(IntMatrix{{2, 1}, {1, 2}}));
    CHECK(to_json(m).dump() == R"({"lambda1":[2,1],"vectors":[[0,1],[1,-1],[1,0]]})");
}

TEST_CASE("serialization rejects bad documents") {
    CHECK_THROWS_AS(quad_form_from_text("{"), ParseError);
    CHECK_THROWS_AS(quad_form_from_text(R"({"dim":2})"), ParseError);
    CHECK_THROWS_AS(quad_form_from_text(R"({"dim":2,"entries":[1,2,3]})"), ParseError);
    CHECK_THROWS_AS(quad_form_from_text(R"({"dim":2,"entries":[1,2,3,1]})"), ParseError);
    CHECK_THROWS_AS(quad_form_from_text(R"({"dim":1,"entries":[[1,0]]})"), ParseError);
    CHECK_THROWS_AS(quad_form_from_text(R"({"dim":1,"entries":["x"]})"), ParseError);
    CHECK(quad_form_from_text(R"({"dim":1,"entries":[7]})") == QuadForm(IntMatrix{{7}}));
}

TEST_CASE("cli certify") {
    auto a2 = form_file("a2.json", catalog::get("A2").form);
    Run r = run({"certify", a2});
    CHECK(r.code == cli::kOk);
    Json j = Json::parse(r.out);
    CHECK(j["rank"] == 3);
    CHECK(j["perfect"] == true);
    CHECK(j["volume_check"]["holds"] == true);
    CHECK(j["certificate"]["det_w"]["text"].get<std::string>().find("sqrt(2)") != std::string::npos);

    r = run({"certify", form_file("i2.json", QuadForm::identity(2))});
    CHECK(r.code == cli::kNotPerfect);
    CHECK(r.err.find("not perfect") != std::string::npos);

    CHECK(run({"certify", write_temp("bad.json", "{\"dim\": 2,")}).code == cli::kUsage);
    CHECK(run({"certify", form_file("np.json", QuadForm(IntMatrix{{1, 2}, {2, 1}}))}).code == cli::kNotPositiveDefinite);
    CHECK(run({"certify", "/nonexistent/form.json"}).code == cli::kUsage);
}

TEST_CASE("cli reduce") {
    QuadForm bad = oracle::conjugate(catalog::get("A2").form, IntMatrix{{1, 10}, {0, 1}});
    Run r = run({"reduce", form_file("a2c.json", bad), "--mode", "smallrep"});
    CHECK(r.code == cli::kOk);
    Json j = Json::parse(r.out);
    for (const auto& v : j["minimal_vectors"]["vectors"]) {
        long n = 0;
        for (const auto& c : v) n += c.get<long>() * c.get<long>();
        CHECK(n <= 9);
    }
    r = run({"reduce", form_file("i3.json", QuadForm::identity(3)), "--mode", "hkz"});
    CHECK(r.code == cli::kOk);
    CHECK(quad_form_from_json(Json::parse(r.out)["result"]["reduced"]) == QuadForm::identity(3));
    CHECK(run({"reduce", form_file("np.json", QuadForm(IntMatrix{{1, 2}, {2, 1}})), "--mode", "lll"}).code ==
          cli::kNotPositiveDefinite);
    CHECK(run({"reduce", form_file("i3.json", QuadForm::identity(3)), "--mode", "bkz"}).code == cli::kUsage);
}

TEST_CASE("cli bound") {
    Run r = run({"bound", "--dim", "2", "--json"});
    CHECK(r.code == cli::kOk);
    Json j = Json::parse(r.out);
    CHECK(j["pd_upper_bound"]["value"].get<std::string>().rfind("1.145110", 0) == 0);
    CHECK(run({"bound", "--dim", "2"}).out.find("log10") != std::string::npos);
    j = Json::parse(run({"bound", "--dim", "8", "--json"}).out);
    CHECK(std::stod(j["pd_upper_bound"]["log10"].get<std::string>()) > std::log10(10916.0));
    CHECK(run({"bound", "--dim", "1"}).code == cli::kUsage);
}

TEST_CASE("cli enumerate") {
    Run r = run({"enumerate", "--dim", "4"});
    CHECK(r.code == cli::kOk);
    std::istringstream lines(r.out);
    std::string line, last;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        if (!last.empty()) ++count;
        last = line;
    }
    CHECK(count == 2);
    CHECK(Json::parse(last)["classes"] == 2);
    std::string five = run({"enumerate", "--dim", "5"}).out;
    five.pop_back();
    CHECK(Json::parse(five.substr(five.rfind('\n') + 1))["classes"] == 3);
    CHECK(run({"enumerate", "--dim", "7"}).code == cli::kCapExceeded);
    CHECK(run({"enumerate", "--dim", "7", "--cap-override"}).code == cli::kCapExceeded);
    CHECK(run({"enumerate", "--dim", "6"}).code == cli::kCapExceeded);
}

TEST_CASE("cli plot2d") {
    Run r = run({"plot2d"});
    CHECK(r.code == cli::kOk);
    Json j = Json::parse(r.out);
    bool found_plus = false, found_minus = false, ray_11 = false, ray_m11 = false;
    for (const auto& c : j["cells"]) {
        if (c["label"] == Json::parse("[[2,1],[1,2]]")) found_plus = true;
        if (c["label"] == Json::parse("[[2,-1],[-1,2]]")) found_minus = true;
    }
    for (const auto& ray : j["rays"]) {
        if (ray["x"] == Json::parse("[1,1]")) ray_11 = true;
        if (ray["x"] == Json::parse("[-1,1]")) ray_m11 = true;
    }
    CHECK(found_plus);
    CHECK(found_minus);
    CHECK(ray_11);
    CHECK(ray_m11);
    Run csv = run({"plot2d", "--csv"});
    CHECK(csv.out.rfind("record,", 0) == 0);
}

TEST_CASE("cli output is deterministic") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"plot2d"}, {"bound", "--dim", "5", "--json"}, {"enumerate", "--dim", "4"}, {"--pretty", "plot2d"}}) {
        CHECK(run(args).out == run(args).out);
    }
    CHECK(run({"plot2d", "--pretty"}).out == run({"--pretty", "plot2d"}).out);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
}

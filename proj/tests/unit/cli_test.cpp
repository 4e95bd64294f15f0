#include "oracles.hpp"

#include "sbarlab/expr.hpp"
#include "sbarlab/report.hpp"
#include "sbarlab/suites.hpp"

#include <sbar/halgebra.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace sbarlab;
using sbar::Letter;

namespace {

TEST(Parse, AtomWithIndex)
{
    const ExprPtr e = parse_element("L(1,-1)");
    ASSERT_EQ(e->kind, Expr::Kind::Atom);
    EXPECT_EQ(e->atom, "L");
    EXPECT_EQ(e->index, (MultiIndex{1, -1}));
}

TEST(Parse, TwoTermExpression)
{
    const ExprPtr e = parse_element("3/2*d1*p1^2 - Y(0,1)");
    ASSERT_EQ(e->kind, Expr::Kind::Sub);
    EXPECT_EQ(e->lhs->kind, Expr::Kind::Mul);
    EXPECT_EQ(e->rhs->kind, Expr::Kind::Atom);
    EXPECT_EQ(e->rhs->atom, "Y");
}

TEST(Parse, RangeErrors)
{
    EXPECT_THROW(parse_element("L(-1,-1)"), RangeError);
    EXPECT_THROW(parse_element("L(-2,3)"), RangeError);
    EXPECT_THROW(parse_element("t(-1,0)"), RangeError);
    EXPECT_THROW(parse_element("Y(0,0)"), RangeError);
    EXPECT_THROW(parse_element("d1^-1"), RangeError);
    EXPECT_THROW(parse_element("1/0"), RangeError);
    EXPECT_NO_THROW(parse_element("p2^-3"));
}

TEST(Parse, SyntaxErrorsArePositioned)
{
    try {
        parse_element("L(1,0) +\n  * d2");
        FAIL() << "expected a syntax error";
    } catch (const RangeError&) {
        FAIL() << "not a range error";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line, 2);
        EXPECT_EQ(e.column, 3);
    }
    EXPECT_THROW(parse_element("L(1"), SyntaxError);
    EXPECT_THROW(parse_element("foo"), SyntaxError);
    EXPECT_THROW(parse_element(""), SyntaxError);
    EXPECT_THROW(parse_element("d1 d2"), SyntaxError);
}

TEST(Eval, NormalForms)
{
    using namespace sbar;
    EXPECT_EQ(eval_loc(*parse_element("p1^-1*p1")), loc_one());
    EXPECT_EQ(eval_loc(*parse_element("d1 - L(0,0) - d2")), LocElement());
    EXPECT_EQ(eval_loc(*parse_element("d")), to_loc(u_from_sbar(sbar_d())));
    EXPECT_EQ(eval_loc(*parse_element("p2")), to_loc(u_partial(2)));
    EXPECT_EQ(eval_loc(*parse_element("Y(1,-1)")), y_element({1, -1}));
    EXPECT_THROW(eval_loc(*parse_element("t1")), EvalError);
    EXPECT_THROW(eval_phi(*parse_element("Y(1,0)")), EvalError);
    EXPECT_THROW(eval_phi(*parse_element("p1^-1")), EvalError);
    EXPECT_EQ(eval_phi(*parse_element("d2")), phi(Letter::d2()));
    EXPECT_EQ(eval_phi(*parse_element("t(2,1)")), phi(SmashGenerator::t({2, 1})));
}

ExprPtr random_expr(oracle::Gen& g, int depth)
{
    auto e = std::make_shared<Expr>();
    const int pick = depth <= 0 ? g.integer(0, 1) : g.integer(0, 6);
    if (pick == 0) {
        e->kind = Expr::Kind::Number;
        e->number = sbar::make_scalar(g.integer(0, 9), g.integer(1, 4));
        return e;
    }
    if (pick == 1) {
        static const std::vector<std::string> names{"L", "t", "Y", "d1", "d2", "d", "p1", "p2", "t1", "t2"};
        e->kind = Expr::Kind::Atom;
        e->atom = names[static_cast<std::size_t>(g.integer(0, 9))];
        if (e->atom == "L")
            e->index = {g.integer(-1, 2), g.integer(0, 2)};
        if (e->atom == "t")
            e->index = {g.integer(0, 3), g.integer(0, 3)};
        if (e->atom == "Y")
            e->index = {g.integer(0, 2), g.integer(-1, 2)};
        if (e->atom == "Y" && !sbar::is_y_index(e->index))
            e->index = {1, -1};
        return e;
    }
    if (pick == 6) {
        auto base = std::make_shared<Expr>();
        base->kind = Expr::Kind::Atom;
        base->atom = g.integer(0, 1) ? "p1" : "d2";
        e->kind = Expr::Kind::Pow;
        e->lhs = base;
        e->exponent = base->atom == "p1" ? g.integer(-3, 3) : g.integer(0, 3);
        return e;
    }
    static const Expr::Kind kinds[] = {Expr::Kind::Add, Expr::Kind::Sub, Expr::Kind::Mul, Expr::Kind::Neg};
    e->kind = kinds[pick - 2];
    e->lhs = random_expr(g, depth - 1);
    if (e->kind != Expr::Kind::Neg)
        e->rhs = random_expr(g, depth - 1);
    return e;
}

TEST(Property, ParsePrintRoundTrip)
{
    oracle::Gen g(51);
    for (int i = 0; i < 500; ++i) {
        const ExprPtr e = random_expr(g, 4);
        const std::string text = print(*e);
        const ExprPtr back = parse_element(text);
        ASSERT_TRUE(*back == *e) << text;
        EXPECT_EQ(print(*back), text);
    }
}

TEST(Suites, UnknownNameThrows)
{
    EXPECT_THROW(run_suite("unknown"), std::invalid_argument);
    EXPECT_THROW(default_max_degree("unknown"), std::invalid_argument);
    EXPECT_EQ(suite_names().size(), 15u);
}

TEST(Suites, PhiHomAllPass)
{
    SuiteOptions o;
    o.max_degree = 3;
    const SuiteReport r = run_suite("phi-hom", o);
    EXPECT_EQ(r.failures(), 0);
    EXPECT_GT(r.summary().pass, 0);
    EXPECT_EQ(to_json(r)["failures"], 0);
}

TEST(Suites, YCentralizerAllPass)
{
    SuiteOptions o;
    o.max_degree = 4;
    EXPECT_EQ(run_suite("y-centralizer", o).failures(), 0);
}

TEST(Suites, EveryKnownSuiteRunsAtSmallDegree)
{
    for (const auto& name : suite_names()) {
        SuiteOptions o;
        o.max_degree = std::min(default_max_degree(name), 2);
        const SuiteReport r = run_suite(name, o);
        EXPECT_EQ(r.failures(), 0) << name << "\n" << emit_report(r, Format::Text);
        const Summary s = r.summary();
        EXPECT_EQ(static_cast<std::size_t>(s.pass + s.fail + s.inconclusive), r.cases.size());
        EXPECT_TRUE(std::is_sorted(r.cases.begin(), r.cases.end(),
                                   [](const CaseRecord& a, const CaseRecord& b) { return a.name < b.name; }));
    }
}

nlohmann::ordered_json strip_time(nlohmann::ordered_json j)
{
    j.erase("wall_time_ms");
    return j;
}

TEST(Report, DeterministicAcrossRunsAndWorkerCounts)
{
    SuiteOptions a;
    a.seed = 99;
    a.workers = 1;
    SuiteOptions b = a;
    b.workers = 4;
    const auto r1 = to_json(run_suite("twist", a));
    const auto r2 = to_json(run_suite("twist", b));
    EXPECT_EQ(strip_time(r1).dump(), strip_time(r2).dump());
    SuiteOptions c = a;
    c.seed = 100;
    EXPECT_NE(strip_time(r1).dump(), strip_time(to_json(run_suite("twist", c))).dump());
}

TEST(Report, SchemaFieldOrder)
{
    SuiteReport r;
    r.suite = "demo";
    r.seed = 7;
    r.cases.push_back({"a", "statement", "identity", Status::Pass, nullptr});
    r.cases.push_back({"b", "statement", "measurement", Status::Inconclusive, {{"why", "bound"}}});
    const auto j = to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "suite", "seed", "engine_version", "failures", "cases",
                                              "summary", "wall_time_ms"}));
    EXPECT_EQ(j["failures"], 0);
    EXPECT_EQ(j["summary"]["inconclusive"], 1);
    EXPECT_EQ(j["cases"][1]["status"], "inconclusive");
    std::vector<std::string> case_keys;
    for (const auto& [k, v] : j["cases"][0].items())
        case_keys.push_back(k);
    EXPECT_EQ(case_keys, (std::vector<std::string>{"name", "paper_anchor", "provenance", "status", "witness"}));
}

TEST(Report, FailingCasesCarryWitnessAndCount)
{
    SuiteReport r;
    r.cases.push_back({"x", "s", "identity", Status::Fail, {{"residual", "L(1,0)"}}});
    EXPECT_EQ(r.failures(), 1);
    EXPECT_NE(emit_report(r, Format::Text).find("L(1,0)"), std::string::npos);
}

TEST(Report, UnwritableDestination)
{
    SuiteReport r;
    EXPECT_THROW(write_report(r, Format::Json, "/nonexistent-dir/report.json"), std::runtime_error);
    const auto path = std::filesystem::temp_directory_path() / "sbarlab_report_test.json";
    write_report(r, Format::Json, path.string());
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
    std::filesystem::remove(path);
}

TEST(Suites, WorkerCountFromEnvironment)
{
    EXPECT_EQ(worker_count(3), 3);
    setenv("SBAR_WORKERS", "5", 1);
    EXPECT_EQ(worker_count(0), 5);
    unsetenv("SBAR_WORKERS");
    EXPECT_GE(worker_count(0), 1);
}

} // namespace

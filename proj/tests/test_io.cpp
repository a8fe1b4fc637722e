#include <gtest/gtest.h>

#include <clocale>
#include <cmath>
#include <filesystem>

#include "heatfk/error.hpp"
#include "heatfk/families.hpp"
#include "heatfk/io.hpp"

using namespace heatfk;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const SchemaError& e) {
        return e.what();
    }
    return {};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

} // namespace

TEST(GraphJson, TwoVertexRoundTrip) {
    const WeightedGraph g = generate(complete_spec(2, MeasureKind::counting));
    const auto path = (std::filesystem::temp_directory_path() / "heatfk_io_k2.json").string();
    save_graph(g, path);
    EXPECT_TRUE(load_graph(path) == g);
    std::filesystem::remove(path);
}

TEST(GraphJson, CatalogueRoundTrip) {
    for (const auto& s : catalogue()) {
        const WeightedGraph g = generate(s.spec);
        const std::string text = dump_graph(g);
        const WeightedGraph back = parse_graph(text);
        EXPECT_TRUE(back == g) << s.name;
        EXPECT_EQ(dump_graph(back), text) << s.name;
    }
}

TEST(GraphJson, ExplicitMeasureRoundTrip) {
    const WeightedGraph g =
        with_measure(generate(path_spec(4, MeasureKind::counting)), std::vector<double>{0.5, 1.5, 2.0, 0.1});
    const WeightedGraph back = parse_graph(dump_graph(g));
    EXPECT_TRUE(back == g);
    EXPECT_EQ(back.m(3), 0.1);
}

TEST(GraphJson, AsymmetricPairNamed) {
    const std::string text = R"({"measure_kind": "counting",
        "vertices": [{"id": "a"}, {"id": "b"}],
        "edges": [{"u": "a", "v": "b", "b": 1.0}, {"u": "b", "v": "a", "b": 2.0}]})";
    const std::string err = error_of(text);
    EXPECT_TRUE(contains(err, "asymmetric")) << err;
    EXPECT_TRUE(contains(err, "(b, a)")) << err;
}

TEST(GraphJson, DuplicatePair) {
    const std::string text = R"({"measure_kind": "counting",
        "vertices": [{"id": "a"}, {"id": "b"}],
        "edges": [{"u": "a", "v": "b", "b": 1.0}, {"u": "a", "v": "b", "b": 1.0}]})";
    EXPECT_TRUE(contains(error_of(text), "listed twice"));
}

TEST(GraphJson, ExplicitMeasureCountMismatch) {
    const std::string text = R"({"measure_kind": "explicit",
        "vertices": [{"id": "a", "m": 1.0}, {"id": "b"}],
        "edges": [{"u": "a", "v": "b", "b": 1.0}]})";
    const std::string err = error_of(text);
    EXPECT_TRUE(contains(err, "1 values of 'm' for 2 vertices")) << err;
    const std::string stray = R"({"measure_kind": "counting",
        "vertices": [{"id": "a", "m": 1.0}, {"id": "b"}],
        "edges": [{"u": "a", "v": "b", "b": 1.0}]})";
    EXPECT_TRUE(contains(error_of(stray), "$.vertices[0].m"));
}

TEST(GraphJson, FieldDiagnostics) {
    EXPECT_TRUE(contains(error_of(R"({"vertices": [], "edges": []})"), "$.measure_kind"));
    EXPECT_TRUE(contains(error_of(R"({"measure_kind": "counting", "vertices": [{"id": "a"}, {"id": "b"}],
        "edges": [{"u": "a", "v": "b"}]})"),
                         "$.edges[0].b"));
    EXPECT_TRUE(contains(error_of(R"({"measure_kind": "counting", "vertices": [{"id": "a"}],
        "edges": [{"u": "a", "v": "z", "b": 1}]})"),
                         "unknown vertex 'z'"));
    EXPECT_TRUE(contains(error_of(R"({"measure_kind": "counting", "vertices": [{"id": "a"}, {"id": "a"}],
        "edges": []})"),
                         "duplicate id"));
    EXPECT_TRUE(contains(error_of(R"({"measure_kind": "counting", "vertices": [{"id": "a"}],
        "edges": [{"u": "a", "v": "a", "b": 1}]})"),
                         "self-loop"));
    EXPECT_TRUE(contains(error_of(R"({"measure_kind": "weird", "vertices": [], "edges": []})"), "weird"));
}

TEST(GraphJson, SyntaxErrorLine) {
    const std::string text = "{\n  \"measure_kind\": \"counting\",\n  \"vertices\": [,]\n}";
    const std::string err = error_of(text);
    EXPECT_TRUE(contains(err, "line 3")) << err;
}

TEST(GraphJson, MissingFile) { EXPECT_THROW(load_graph("/nonexistent/graph.json"), SchemaError); }

TEST(Numbers, FormatAndNonFinite) {
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(1e-300), "1e-300");
    EXPECT_EQ(format_number(INFINITY), "inf");
    EXPECT_EQ(format_number(-INFINITY), "-inf");
    EXPECT_EQ(format_number(NAN), "nan");
    EXPECT_EQ(number_json(INFINITY), Json("inf"));
    EXPECT_EQ(number_json(2.5), Json(2.5));
    const double v = 0.1 + 0.2;
    EXPECT_EQ(std::stod(format_number(v)), v);
}

TEST(Numbers, LocaleIndependent) {
    const char* prev = std::setlocale(LC_NUMERIC, nullptr);
    const std::string saved = prev ? prev : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8")) {
        EXPECT_EQ(format_number(1.5), "1.5");
        std::setlocale(LC_NUMERIC, saved.c_str());
    } else {
        EXPECT_EQ(format_number(1.5), "1.5");
    }
}

TEST(Report, JsonKeys) {
    PropertyReport rep;
    rep.check = "demo";
    rep.add_param("n", 2.0);
    rep.add_param("profile", std::string("uniform"));
    rep.add_point({{"x", 0}, {"r", 1.5}}, 1.0, 2.0);
    rep.add_point({{"x", 1}, {"r", 1.5}}, 1.0, 0.0);
    rep.audit("R >= S", true);
    rep.log_constant = 0.5;
    const Json doc = report_to_json(rep, "abc123");
    for (const char* k : {"check", "params", "grid", "margins", "min_margin", "min_log_margin", "witness", "verdict",
                          "certified", "vacuous", "hypothesis_audit", "log_constant", "log_empirical_constant",
                          "tolerance", "config_hash"})
        EXPECT_TRUE(doc.contains(k)) << k;
    EXPECT_EQ(doc["config_hash"], "abc123");
    EXPECT_EQ(doc["tolerance"], 1e-9);
    EXPECT_EQ(doc["verdict"], false);
    EXPECT_EQ(doc["witness"]["index"], 1);
    EXPECT_EQ(doc["grid"][1]["log_margin"], "-inf");
    EXPECT_EQ(doc["min_log_margin"], "-inf");
    EXPECT_EQ(doc["params"]["profile"], "uniform");
    EXPECT_EQ(doc["margins"][0], 2.0);
}

TEST(Report, EmptyWitnessIsNull) {
    PropertyReport rep;
    rep.check = "empty";
    EXPECT_TRUE(report_to_json(rep, "h")["witness"].is_null());
}

TEST(Csv, RowsAndHeader) {
    PropertyReport rep;
    rep.check = "G";
    rep.add_point({{"x", 0}, {"t", 0.5}}, 1.0, 4.0);
    rep.add_point_log({{"x", 1}, {"t", 2}}, -1.0, 0.0, false);
    EXPECT_EQ(csv_header(), "graph,check,point,lhs,rhs,log_sides,log_margin,certified");
    const auto rows = csv_rows("P_5/counting", rep);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "P_5/counting,G,x=0;t=0.5,1,4,0," + format_number(std::log(4.0)) + ",1");
    EXPECT_EQ(rows[1], "P_5/counting,G,x=1;t=2,-1,0,1,1,0");
}

#include "heatfk/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "heatfk/error.hpp"

namespace heatfk {

namespace {

std::string where(const std::string& field) { return "field '" + field + "'"; }

const Json& require(const Json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError("missing " + where(path + "." + key));
    return *it;
}

double require_number(const Json& obj, const char* key, const std::string& path) {
    const Json& v = require(obj, key, path);
    if (!v.is_number()) throw SchemaError(where(path + "." + key) + " must be a number");
    return v.get<double>();
}

std::string require_string(const Json& obj, const char* key, const std::string& path) {
    const Json& v = require(obj, key, path);
    if (!v.is_string()) throw SchemaError(where(path + "." + key) + " must be a string");
    return v.get<std::string>();
}

std::string pair_name(const std::string& u, const std::string& v) { return "(" + u + ", " + v + ")"; }

} // namespace

Json graph_to_json(const WeightedGraph& g) {
    Json doc;
    doc["measure_kind"] = to_string(g.measure_kind());
    Json vs = Json::array();
    for (Vertex x = 0; x < g.size(); ++x) {
        Json v;
        v["id"] = g.id(x);
        if (g.measure_kind() == MeasureKind::explicit_measure) v["m"] = g.m(x);
        vs.push_back(std::move(v));
    }
    doc["vertices"] = std::move(vs);
    Json es = Json::array();
    for (const Edge& e : g.edges()) {
        Json j;
        j["u"] = g.id(e.u);
        j["v"] = g.id(e.v);
        j["b"] = e.b;
        es.push_back(std::move(j));
    }
    doc["edges"] = std::move(es);
    return doc;
}

WeightedGraph graph_from_json(const Json& doc) {
    if (!doc.is_object()) throw SchemaError("graph document must be an object");
    const std::string kind_name = require_string(doc, "measure_kind", "$");
    MeasureKind kind;
    try {
        kind = measure_kind_from_string(kind_name);
    } catch (const DomainError&) {
        throw SchemaError(where("$.measure_kind") + ": unknown measure kind '" + kind_name + "'");
    }
    const Json& vs = require(doc, "vertices", "$");
    if (!vs.is_array()) throw SchemaError(where("$.vertices") + " must be an array");
    std::vector<std::string> ids;
    std::vector<double> m;
    std::map<std::string, Vertex> index;
    std::size_t with_m = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string path = "$.vertices[" + std::to_string(i) + "]";
        if (!vs[i].is_object()) throw SchemaError(where(path) + " must be an object");
        const std::string id = require_string(vs[i], "id", path);
        if (!index.emplace(id, ids.size()).second) throw SchemaError(where(path + ".id") + ": duplicate id '" + id + "'");
        ids.push_back(id);
        if (vs[i].contains("m")) {
            if (kind != MeasureKind::explicit_measure)
                throw SchemaError(where(path + ".m") + " is only allowed for the explicit measure");
            const double v = require_number(vs[i], "m", path);
            if (!(v > 0) || !std::isfinite(v)) throw SchemaError(where(path + ".m") + " must be positive");
            m.push_back(v);
            ++with_m;
        }
    }
    if (kind == MeasureKind::explicit_measure && with_m != ids.size())
        throw SchemaError("explicit measure: " + std::to_string(with_m) + " values of 'm' for " +
                          std::to_string(ids.size()) + " vertices");
    const Json& es = require(doc, "edges", "$");
    if (!es.is_array()) throw SchemaError(where("$.edges") + " must be an array");
    std::vector<Edge> edges;
    std::map<std::pair<Vertex, Vertex>, std::pair<std::size_t, double>> seen;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string path = "$.edges[" + std::to_string(i) + "]";
        if (!es[i].is_object()) throw SchemaError(where(path) + " must be an object");
        const std::string u = require_string(es[i], "u", path), v = require_string(es[i], "v", path);
        const double b = require_number(es[i], "b", path);
        auto iu = index.find(u), iv = index.find(v);
        if (iu == index.end()) throw SchemaError(where(path + ".u") + ": unknown vertex '" + u + "'");
        if (iv == index.end()) throw SchemaError(where(path + ".v") + ": unknown vertex '" + v + "'");
        if (u == v) throw SchemaError(where(path) + ": self-loop at '" + u + "'");
        if (!(b > 0) || !std::isfinite(b)) throw SchemaError(where(path + ".b") + " must be positive and finite");
        const auto key = std::minmax(iu->second, iv->second);
        auto [it, fresh] = seen.emplace(key, std::make_pair(i, b));
        if (!fresh) {
            const std::string first = "$.edges[" + std::to_string(it->second.first) + "]";
            if (it->second.second != b)
                throw SchemaError("asymmetric edge weights for pair " + pair_name(u, v) + " at " + first + " and " +
                                  path + ": " + format_number(it->second.second) + " vs " + format_number(b));
            throw SchemaError("pair " + pair_name(u, v) + " listed twice at " + first + " and " + path);
        }
        edges.push_back({iu->second, iv->second, b});
    }
    try {
        return make_graph(std::move(ids), edges, kind, std::move(m));
    } catch (const DomainError& e) {
        throw SchemaError(e.what());
    }
}

std::string dump_graph(const WeightedGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

WeightedGraph parse_graph(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SchemaError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
    return graph_from_json(doc);
}

WeightedGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void save_graph(const WeightedGraph& g, const std::string& path) { write_file(path, dump_graph(g)); }

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Json number_json(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

namespace {

Json coords_json(const GridPoint& p) {
    Json c = Json::object();
    for (const auto& [k, v] : p.coords) c[k] = number_json(v);
    return c;
}

} // namespace

Json report_to_json(const PropertyReport& rep, const std::string& config_hash) {
    Json doc;
    doc["check"] = rep.check;
    Json params = Json::object();
    for (const auto& p : rep.params) {
        if (const double* d = std::get_if<double>(&p.value))
            params[p.key] = number_json(*d);
        else
            params[p.key] = std::get<std::string>(p.value);
    }
    doc["params"] = std::move(params);
    Json grid = Json::array(), margins = Json::array();
    for (const auto& p : rep.grid) {
        Json g;
        g["coords"] = coords_json(p);
        g["lhs"] = number_json(p.lhs);
        g["rhs"] = number_json(p.rhs);
        g["log_sides"] = p.log_sides;
        g["log_margin"] = number_json(p.log_margin);
        g["certified"] = p.certified;
        grid.push_back(std::move(g));
        margins.push_back(number_json(std::exp(p.log_margin)));
    }
    doc["grid"] = std::move(grid);
    doc["margins"] = std::move(margins);
    doc["min_margin"] = number_json(rep.min_margin());
    doc["min_log_margin"] = number_json(rep.min_log_margin());
    const std::size_t w = rep.witness();
    if (w < rep.grid.size()) {
        Json wit;
        wit["index"] = w;
        wit["coords"] = coords_json(rep.grid[w]);
        wit["lhs"] = number_json(rep.grid[w].lhs);
        wit["rhs"] = number_json(rep.grid[w].rhs);
        doc["witness"] = std::move(wit);
    } else {
        doc["witness"] = nullptr;
    }
    doc["verdict"] = rep.verdict();
    doc["certified"] = rep.certified();
    doc["vacuous"] = rep.vacuous;
    Json audit = Json::array();
    for (const auto& c : rep.hypothesis_audit) {
        Json a;
        a["clause"] = c.clause;
        a["passed"] = c.passed;
        if (!c.detail.empty()) a["detail"] = c.detail;
        audit.push_back(std::move(a));
    }
    doc["hypothesis_audit"] = std::move(audit);
    if (auto lc = rep.log_empirical_constant()) {
        doc["log_constant"] = number_json(*rep.log_constant);
        doc["log_empirical_constant"] = number_json(*lc);
    }
    doc["tolerance"] = number_json(rep.tol);
    doc["config_hash"] = config_hash;
    return doc;
}

std::string dump_report(const PropertyReport& rep, const std::string& config_hash) {
    return report_to_json(rep, config_hash).dump(2) + "\n";
}

const std::string& csv_header() {
    static const std::string h = "graph,check,point,lhs,rhs,log_sides,log_margin,certified";
    return h;
}

std::vector<std::string> csv_rows(const std::string& graph_name, const PropertyReport& rep) {
    std::vector<std::string> rows;
    rows.reserve(rep.grid.size());
    for (const auto& p : rep.grid) {
        std::string point;
        for (const auto& [k, v] : p.coords) {
            if (!point.empty()) point += ';';
            point += k + "=" + format_number(v);
        }
        rows.push_back(graph_name + "," + rep.check + "," + point + "," + format_number(p.lhs) + "," +
                       format_number(p.rhs) + "," + (p.log_sides ? "1" : "0") + "," + format_number(p.log_margin) +
                       "," + (p.certified ? "1" : "0"));
    }
    return rows;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out << data;
    if (!out) throw Error("write failed for '" + path + "'");
}

} // namespace heatfk

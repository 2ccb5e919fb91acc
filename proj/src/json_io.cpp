#include "immkit/json_io.hpp"

#include <stdexcept>
#include <string>

namespace immkit {
namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) fail(std::string("missing field: ") + name);
    return j.at(name);
}

int int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) fail(std::string("field must be an integer: ") + name);
    return v.get<int>();
}

int index_from_json(const Json& j, int n) {
    if (!j.is_number_integer()) fail("indices must be integers");
    const int i = j.get<int>();
    if (i < 1 || i > n) fail("index out of range: " + std::to_string(i));
    return i - 1;
}

std::vector<Rational> coeffs_from_json(const Json& j, int n) {
    std::vector<Rational> coeffs(partitions_of(n).size());
    const Json& list = field(j, "coeffs");
    if (!list.is_array()) fail("coeffs must be an array");
    for (const auto& entry : list) {
        if (!entry.is_array() || entry.size() != 2) fail("coefficient entries are [partition, value] pairs");
        Partition lambda = partition_from_json(entry[0]);
        if (lambda.size() != n) fail("partition size differs from n");
        coeffs[partition_index(lambda)] = rational_from_json(entry[1]);
    }
    return coeffs;
}

Json coeffs_to_json(int n, const std::vector<Rational>& coeffs) {
    Json list = Json::array();
    const auto& parts = partitions_of(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (coeffs[i] != 0) list.push_back(Json::array({to_json(parts[i]), to_json(coeffs[i])}));
    return list;
}

}  // namespace

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Partition partition_from_json(const Json& j) {
    if (j.is_string()) return parse_partition(j.get<std::string>());
    if (!j.is_array()) fail("partition must be an array of positive integers");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail("partition parts must be integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail("rational values must be strings or integers");
}

Json to_json(const TraceVector& theta) {
    return Json{{"basis", "class_function"}, {"n", theta.degree()}, {"coeffs", coeffs_to_json(theta.degree(), theta.values())}};
}

TraceVector trace_from_json(const Json& j) {
    const int n = int_field(j, "n");
    if (j.contains("basis") && j.at("basis") != "class_function") fail("trace basis must be class_function");
    return TraceVector(n, coeffs_from_json(j, n));
}

Json to_json(const SymmetricFunction& sf) {
    return Json{{"basis", std::string(basis_name(sf.basis()))}, {"n", sf.degree()}, {"coeffs", coeffs_to_json(sf.degree(), sf.coeffs())}};
}

SymmetricFunction symmetric_function_from_json(const Json& j) {
    const int n = int_field(j, "n");
    const Json& b = field(j, "basis");
    if (!b.is_string()) fail("basis must be a string");
    return SymmetricFunction(n, parse_basis(b.get<std::string>()), coeffs_from_json(j, n));
}

Json to_json(const ExactMatrix& a) {
    Json rows = Json::array();
    for (int i = 0; i < a.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.size(); ++j) row.push_back(to_json(a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const Json& j) {
    const Json& rows = j.is_object() ? field(j, "matrix") : j;
    if (!rows.is_array()) fail("matrix must be an array of rows");
    std::vector<std::vector<Rational>> data;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != rows.size()) fail("matrix must be square");
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rational_from_json(v));
        data.push_back(std::move(r));
    }
    return ExactMatrix::from_rows(data);
}

Json to_json(const Poset& p) {
    Json rel = Json::array();
    for (auto [i, j] : p.relations()) rel.push_back(Json::array({i + 1, j + 1}));
    return Json{{"n", p.size()}, {"relations", rel}};
}

Poset poset_from_json(const Json& j) {
    const int n = int_field(j, "n");
    std::vector<std::pair<int, int>> rel;
    for (const auto& r : field(j, "relations")) {
        if (!r.is_array() || r.size() != 2) fail("relations are [i, j] pairs");
        rel.emplace_back(index_from_json(r[0], n), index_from_json(r[1], n));
    }
    return Poset::from_relations(n, rel);
}

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u + 1, v + 1}));
    return Json{{"n", g.size()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    const int n = int_field(j, "n");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) fail("edges are [i, j] pairs");
        edges.emplace_back(index_from_json(e[0], n), index_from_json(e[1], n));
    }
    return Graph::from_edges(n, edges);
}

Json to_json(const PlanarNetwork& f) {
    if (!f.chips().empty() || f.vertex_count() == 2 * f.order()) {
        Json chips = Json::array();
        for (const auto& c : f.chips())
            chips.push_back(Json{{"kind", std::string(chip_name(c.kind))}, {"row", c.row + 1}, {"weight", to_json(c.weight)}});
        return Json{{"n", f.order()}, {"chips", chips}};
    }
    Json edges = Json::array();
    for (const auto& e : f.edges()) edges.push_back(Json::array({e.from + 1, e.to + 1, to_json(e.weight)}));
    Json sources = Json::array(), sinks = Json::array();
    for (int v : f.sources()) sources.push_back(v + 1);
    for (int v : f.sinks()) sinks.push_back(v + 1);
    return Json{{"n", f.order()}, {"vertices", f.vertex_count()}, {"edges", edges}, {"sources", sources}, {"sinks", sinks}};
}

PlanarNetwork network_from_json(const Json& j) {
    const int n = int_field(j, "n");
    if (j.contains("chips")) {
        std::vector<Chip> chips;
        for (const auto& c : j.at("chips")) {
            const Json& kind = field(c, "kind");
            if (!kind.is_string()) fail("chip kind must be a string");
            Chip chip;
            chip.kind = parse_chip(kind.get<std::string>());
            chip.row = int_field(c, "row") - 1;
            chip.weight = rational_from_json(field(c, "weight"));
            chips.push_back(chip);
        }
        return PlanarNetwork::from_chips(n, std::move(chips));
    }
    const int nv = int_field(j, "vertices");
    std::vector<NetworkEdge> edges;
    for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 3) fail("network edges are [u, v, weight] triples");
        edges.push_back({index_from_json(e[0], nv), index_from_json(e[1], nv), rational_from_json(e[2])});
    }
    std::vector<int> sources, sinks;
    for (const auto& v : field(j, "sources")) sources.push_back(index_from_json(v, nv));
    for (const auto& v : field(j, "sinks")) sinks.push_back(index_from_json(v, nv));
    if (static_cast<int>(sources.size()) != n) fail("expected n sources");
    return PlanarNetwork(nv, std::move(edges), std::move(sources), std::move(sinks));
}

TraceVector parse_trace_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) fail("trace spec must look like family:partition");
    return named_trace(parse_family(spec.substr(0, colon)), parse_partition(spec.substr(colon + 1)));
}

}  // namespace immkit

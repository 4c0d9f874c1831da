#include "setfn/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "setfn/error.hpp"

namespace setfn {

namespace {

void require_fields(const Json& doc, const std::set<std::string>& required,
                    const std::set<std::string>& optional, const std::string& context) {
    for (const auto& item : doc.items()) {
        if (!required.count(item.key()) && !optional.count(item.key()))
            throw Error(context + ": unknown field '" + item.key() + "'");
    }
    for (const auto& name : required)
        if (!doc.contains(name)) throw Error(context + ": missing field '" + name + "'");
}

long long integer_field(const Json& value, const std::string& context) {
    if (!value.is_number_integer())
        throw Error(context + ": expected an integer, got " + value.dump());
    return value.get<long long>();
}

Rational rational_field(const Json& value, const std::string& context) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long long>());
    throw Error(context + ": expected \"p/q\" or an integer, got " + value.dump());
}

int element_field(const Json& value, GroundSet ground, const std::string& context) {
    long long e = integer_field(value, context);
    if (!ground.contains_element(static_cast<int>(e)))
        throw Error(context + ": element " + std::to_string(e) + " outside ground set of size " +
                    std::to_string(ground.size()));
    return static_cast<int>(e);
}

} // namespace

SetFunction parse_function(const Json& doc) {
    if (!doc.is_object()) throw Error("function document must be a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw Error("function document needs a string field 'kind'");
    if (!doc.contains("m")) throw Error("function document needs an integer field 'm'");
    const std::string kind = doc["kind"].get<std::string>();
    const long long m = integer_field(doc["m"], "m");
    if (m < 1 || m > 63)
        throw Error("m must be in [1,63], got " + std::to_string(m));
    const GroundSet ground(static_cast<int>(m));

    if (kind == "table") {
        require_fields(doc, {"kind", "m", "values"}, {"normalize"}, "table");
        const Json& raw = doc["values"];
        if (!raw.is_array()) throw Error("table: 'values' must be an array");
        std::vector<Rational> values;
        values.reserve(raw.size());
        for (const Json& v : raw) values.push_back(rational_field(v, "table value"));
        if (doc.value("normalize", false)) {
            if (values.empty()) throw Error("table: 'values' must not be empty");
            const Rational offset = values.front();
            for (Rational& v : values) v -= offset;
        }
        return SetFunction::dense_table(ground, std::move(values));
    }
    if (kind == "iou" || kind == "neg_iou") {
        require_fields(doc, {"kind", "m", "y"}, {}, kind);
        const Json& raw = doc["y"];
        if (!raw.is_array()) throw Error(kind + ": 'y' must be an array of elements");
        SubsetMask y = mask_from_elements(ground, raw);
        return kind == "iou" ? SetFunction::iou(ground, y) : SetFunction::neg_iou(ground, y);
    }
    if (kind == "cardinality") {
        require_fields(doc, {"kind", "m"}, {}, kind);
        return SetFunction::cardinality(ground);
    }
    if (kind == "truncation") {
        require_fields(doc, {"kind", "m", "cap"}, {}, kind);
        return SetFunction::truncation(ground, integer_field(doc["cap"], "cap"));
    }
    if (kind == "coverage") {
        require_fields(doc, {"kind", "m", "covers"}, {}, kind);
        const Json& raw = doc["covers"];
        if (!raw.is_array()) throw Error("coverage: 'covers' must be an array of arrays");
        std::vector<std::vector<long long>> covers;
        covers.reserve(raw.size());
        for (const Json& list : raw) {
            if (!list.is_array()) throw Error("coverage: each cover must be an array of item ids");
            std::vector<long long> items;
            items.reserve(list.size());
            for (const Json& item : list) items.push_back(integer_field(item, "covered item"));
            covers.push_back(std::move(items));
        }
        return SetFunction::coverage(ground, std::move(covers));
    }
    if (kind == "graph_cut") {
        require_fields(doc, {"kind", "m", "edges"}, {}, kind);
        const Json& raw = doc["edges"];
        if (!raw.is_array()) throw Error("graph_cut: 'edges' must be an array of [u,v] pairs");
        std::vector<std::pair<int, int>> edges;
        edges.reserve(raw.size());
        for (const Json& edge : raw) {
            if (!edge.is_array() || edge.size() != 2)
                throw Error("graph_cut: each edge must be a [u,v] pair");
            edges.emplace_back(element_field(edge[0], ground, "edge endpoint"),
                               element_field(edge[1], ground, "edge endpoint"));
        }
        return SetFunction::graph_cut(ground, std::move(edges));
    }
    if (kind == "negated") {
        require_fields(doc, {"kind", "m", "inner"}, {}, kind);
        SetFunction inner = parse_function(doc["inner"]);
        if (inner.ground().size() != m) throw Error("negated: inner function has a different m");
        return SetFunction::negated(std::move(inner));
    }
    if (kind == "scaled") {
        require_fields(doc, {"kind", "m", "factor", "inner"}, {}, kind);
        SetFunction inner = parse_function(doc["inner"]);
        if (inner.ground().size() != m) throw Error("scaled: inner function has a different m");
        return SetFunction::scaled(std::move(inner), rational_field(doc["factor"], "factor"));
    }
    throw Error("unknown function kind '" + kind + "'");
}

SetFunction parse_function(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(std::string("function document is not valid JSON: ") + e.what());
    }
    return parse_function(doc);
}

SetFunction load_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read function file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_function(std::string_view(buffer.str()));
}

OrderedJson function_descriptor(const SetFunction& f) {
    OrderedJson doc;
    doc["kind"] = f.kind_name();
    doc["m"] = f.ground().size();
    struct Emit {
        OrderedJson& doc;
        void operator()(const DenseTable& t) const {
            OrderedJson values = OrderedJson::array();
            for (const Rational& v : t.values) values.push_back(render_rational(v));
            doc["values"] = std::move(values);
        }
        void operator()(const IouFamily& f) const { doc["y"] = elements_json(f.y); }
        void operator()(const NegIouFamily& f) const { doc["y"] = elements_json(f.y); }
        void operator()(const CardinalityFamily&) const {}
        void operator()(const TruncationFamily& f) const { doc["cap"] = f.cap; }
        void operator()(const CoverageFamily& f) const { doc["covers"] = f.covers; }
        void operator()(const GraphCutFamily& f) const {
            OrderedJson edges = OrderedJson::array();
            for (auto [u, v] : f.edges) edges.push_back(OrderedJson::array({u, v}));
            doc["edges"] = std::move(edges);
        }
        void operator()(const ScaledFamily& f) const {
            doc["factor"] = render_rational(f.factor);
            doc["inner"] = function_descriptor(*f.inner);
        }
        void operator()(const NegatedFamily& f) const { doc["inner"] = function_descriptor(*f.inner); }
    };
    std::visit(Emit{doc}, f.family());
    return doc;
}

const char* check_mode_name(CheckMode mode) {
    switch (mode) {
        case CheckMode::Standard: return "standard";
        case CheckMode::PaperLiteral: return "paper-literal";
        case CheckMode::Lattice: return "lattice";
    }
    throw Error("unreachable check mode");
}

CheckMode parse_check_mode(std::string_view name) {
    if (name == "standard") return CheckMode::Standard;
    if (name == "paper-literal") return CheckMode::PaperLiteral;
    if (name == "lattice") return CheckMode::Lattice;
    throw Error("unknown check mode '" + std::string(name) +
                "' (expected standard, paper-literal, or lattice)");
}

const char* witness_source_name(WitnessSource source) {
    switch (source) {
        case WitnessSource::Random: return "random";
        case WitnessSource::IndicatorSweep: return "indicator-sweep";
        case WitnessSource::LatticeBridge: return "lattice-bridge";
    }
    throw Error("unreachable witness source");
}

const char* case_name(CounterexampleCase kind) {
    return kind == CounterexampleCase::OutsideYB ? "outside-yb" : "inside-y";
}

OrderedJson elements_json(const SubsetMask& s) {
    return OrderedJson(s.elements());
}

SubsetMask mask_from_elements(GroundSet ground, const Json& elements) {
    if (!elements.is_array()) throw Error("element list must be an array");
    std::uint64_t bits = 0;
    for (const Json& value : elements) {
        const int e = element_field(value, ground, "element list");
        if (bits & element_bit(e))
            throw Error("element list repeats element " + std::to_string(e));
        bits |= element_bit(e);
    }
    return SubsetMask(ground, bits);
}

OrderedJson certificate_report(const SetFunction& f, const ViolationCertificate& cert) {
    OrderedJson doc;
    doc["mode"] = check_mode_name(cert.mode);
    doc["m"] = f.ground().size();
    doc["function"] = function_descriptor(f);
    doc["A"] = elements_json(cert.a);
    doc["B"] = elements_json(cert.b);
    doc["x"] = cert.x ? OrderedJson(*cert.x) : OrderedJson(nullptr);
    doc["lhs"] = render_rational(cert.lhs);
    doc["rhs"] = render_rational(cert.rhs);
    doc["gap"] = render_rational(cert.gap);
    return doc;
}

std::pair<SetFunction, ViolationCertificate> parse_certificate_report(const Json& doc) {
    if (!doc.is_object()) throw Error("certificate must be a JSON object");
    require_fields(doc, {"mode", "m", "function", "A", "B", "x", "lhs", "rhs", "gap"}, {},
                   "certificate");
    SetFunction f = parse_function(doc["function"]);
    const GroundSet ground = f.ground();
    if (integer_field(doc["m"], "certificate m") != ground.size())
        throw Error("certificate m does not match its function descriptor");
    std::optional<int> x;
    if (!doc["x"].is_null()) x = element_field(doc["x"], ground, "certificate x");
    ViolationCertificate cert{parse_check_mode(doc["mode"].get<std::string>()),
                              mask_from_elements(ground, doc["A"]),
                              mask_from_elements(ground, doc["B"]),
                              x,
                              rational_field(doc["lhs"], "lhs"),
                              rational_field(doc["rhs"], "rhs"),
                              rational_field(doc["gap"], "gap")};
    return {std::move(f), std::move(cert)};
}

OrderedJson witness_report(const ConvexityWitness& witness) {
    OrderedJson doc;
    doc["u"] = witness.u;
    doc["v"] = witness.v;
    doc["le_u"] = format_double(witness.le_u);
    doc["le_v"] = format_double(witness.le_v);
    doc["le_mid"] = format_double(witness.le_mid);
    doc["deficit"] = format_double(witness.deficit);
    doc["source"] = witness_source_name(witness.source);
    return doc;
}

OrderedJson config_report(const CounterexampleConfig& config) {
    OrderedJson doc;
    doc["case"] = case_name(config.kind);
    doc["m"] = config.y.ground().size();
    doc["Y"] = elements_json(config.y);
    doc["A"] = elements_json(config.a);
    doc["B"] = elements_json(config.b);
    doc["x"] = config.x;
    doc["r"] = render_rational(config.r);
    return doc;
}

std::string format_double(double value) {
    return Json(value).dump();
}

} // namespace setfn

#include "sflow/io.hpp"

#include <fstream>

#include "sflow/errors.hpp"

namespace sflow {

namespace {

constexpr int kFormatVersion = 1;

Rational rational_from_json(const Json& value, const std::string& what) {
    if (!value.is_string()) {
        throw ParseError(what + " must be an exact rational string, not a JSON number");
    }
    return parse_rational(value.get<std::string>());
}

int int_from_json(const Json& value, const std::string& what) {
    if (!value.is_number_integer()) throw ParseError(what + " must be an integer");
    return value.get<int>();
}

std::vector<int> int_vector(const Json& value, const std::string& what) {
    if (!value.is_array()) throw ParseError(what + " must be an array");
    std::vector<int> out;
    for (const auto& item : value) out.push_back(int_from_json(item, what + " entry"));
    return out;
}

Json simplicial_to_json(const SimplicialComplex& cx) {
    Json out;
    out["kind"] = "simplicial";
    out["vertex_count"] = cx.vertex_count();
    Json simplices = Json::object();
    for (int dim = 1; dim <= cx.dimension(); ++dim) {
        Json list = Json::array();
        for (const auto& s : cx.simplices(dim)) list.push_back(s);
        simplices[std::to_string(dim)] = std::move(list);
    }
    out["simplices"] = std::move(simplices);
    Json orientations = Json::array();
    for (const auto& [key, sign] : cx.orientation_overrides()) {
        orientations.push_back(Json{{"dim", key.first}, {"index", key.second}, {"sign", sign}});
    }
    out["orientations"] = std::move(orientations);
    return out;
}

SimplicialComplex simplicial_from_json(const Json& doc) {
    const int vertex_count = int_from_json(doc.at("vertex_count"), "vertex_count");
    std::vector<std::vector<std::vector<int>>> by_dim;
    by_dim.resize(1);
    for (int v = 0; v < vertex_count; ++v) by_dim[0].push_back({v});
    if (doc.contains("simplices")) {
        for (const auto& [key, list] : doc.at("simplices").items()) {
            int dim = 0;
            try {
                dim = std::stoi(key);
            } catch (const std::exception&) {
                throw ParseError("simplex dimension key '" + key + "' is not a number");
            }
            if (dim < 1) throw ParseError("simplex dimension keys start at 1");
            if (dim >= static_cast<int>(by_dim.size())) by_dim.resize(dim + 1);
            for (const auto& item : list) {
                by_dim[dim].push_back(int_vector(item, "simplex"));
            }
        }
    }
    SimplicialComplex cx(vertex_count, std::move(by_dim));
    if (doc.contains("orientations")) {
        for (const auto& item : doc.at("orientations")) {
            cx.set_orientation(int_from_json(item.at("dim"), "orientation dim"),
                               int_from_json(item.at("index"), "orientation index"),
                               int_from_json(item.at("sign"), "orientation sign"));
        }
    }
    return cx;
}

Json matrix_to_json(const SparseMatrix& m) {
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    Json entries = Json::array();
    for (const auto& e : m.entries()) {
        entries.push_back(Json::array({e.row, e.col, to_string(e.value)}));
    }
    out["entries"] = std::move(entries);
    return out;
}

SparseMatrix matrix_from_json(const Json& doc) {
    const int rows = int_from_json(doc.at("rows"), "rows");
    const int cols = int_from_json(doc.at("cols"), "cols");
    std::vector<SparseMatrix::Entry> entries;
    for (const auto& item : doc.at("entries")) {
        if (!item.is_array() || item.size() != 3) throw ParseError("matrix entry must be [r,c,value]");
        entries.push_back({int_from_json(item[0], "entry row"), int_from_json(item[1], "entry col"),
                           rational_from_json(item[2], "entry value")});
    }
    return SparseMatrix(rows, cols, std::move(entries));
}

Json chain_data_to_json(const ChainComplexData& cx) {
    Json out;
    out["kind"] = "chain";
    out["top_dim"] = cx.top_dim;
    out["sizes"] = cx.sizes;
    Json boundaries = Json::array();
    for (int k = 1; k <= cx.top_dim; ++k) boundaries.push_back(matrix_to_json(cx.boundary(k)));
    out["boundaries"] = std::move(boundaries);
    if (!cx.labels.empty()) out["labels"] = cx.labels;
    return out;
}

ChainComplexData chain_data_from_json(const Json& doc) {
    const int top_dim = int_from_json(doc.at("top_dim"), "top_dim");
    std::vector<int> sizes = int_vector(doc.at("sizes"), "sizes");
    std::vector<SparseMatrix> boundaries;
    for (const auto& item : doc.at("boundaries")) boundaries.push_back(matrix_from_json(item));
    std::vector<std::vector<std::string>> labels;
    if (doc.contains("labels")) {
        labels = doc.at("labels").get<std::vector<std::vector<std::string>>>();
    }
    return make_chain_complex(top_dim, std::move(sizes), std::move(boundaries), std::move(labels));
}

}  // namespace

Json instance_to_json(const InstanceBundle& bundle) {
    Json out;
    out["format_version"] = kFormatVersion;
    out["name"] = bundle.name;
    if (!bundle.description.empty()) out["description"] = bundle.description;
    const bool simplicial = std::holds_alternative<SimplicialComplex>(bundle.source);
    out["complex"] = simplicial ? simplicial_to_json(std::get<SimplicialComplex>(bundle.source))
                                : chain_data_to_json(std::get<ChainComplexData>(bundle.source));
    out["capacities"] = format_rational_vector(bundle.capacities);

    Json gamma = Json::array();
    const auto support = bundle.gamma.support();
    for (int idx : support) {
        Json term;
        term["coef"] = to_string(bundle.gamma.coefficients[idx]);
        if (simplicial) {
            term["simplex"] =
                std::get<SimplicialComplex>(bundle.source).simplices(bundle.gamma.dimension)[idx];
        } else {
            term["index"] = idx;
        }
        gamma.push_back(std::move(term));
    }
    out["gamma"] = std::move(gamma);

    if (bundle.voids) {
        Json v;
        v["count"] = bundle.voids->void_count;
        v["unbounded"] = bundle.voids->unbounded_index;
        v["source"] = bundle.voids->source_void;
        Json sides = Json::array();
        for (const auto& [pos, neg] : bundle.voids->sides) sides.push_back(Json::array({pos, neg}));
        v["sides"] = std::move(sides);
        v["gamma1"] = bundle.voids->gamma1_support;
        v["gamma2"] = bundle.voids->gamma2_support;
        out["voids"] = std::move(v);
    }
    if (!bundle.expected.empty()) {
        Json expected = Json::object();
        for (const auto& [key, entry] : bundle.expected) {
            expected[key] = Json{{"value", to_string(entry.value)}, {"provenance", entry.provenance}};
        }
        out["expected"] = std::move(expected);
    }
    if (!bundle.index_sets.empty()) {
        Json sets = Json::object();
        for (const auto& [key, indices] : bundle.index_sets) sets[key] = indices;
        out["index_sets"] = std::move(sets);
    }
    return out;
}

InstanceBundle instance_from_json(const Json& doc) {
    if (!doc.is_object()) throw ParseError("instance file must be a JSON object");
    if (!doc.contains("format_version") ||
        int_from_json(doc.at("format_version"), "format_version") != kFormatVersion) {
        throw ParseError("unsupported or missing format_version");
    }
    InstanceBundle bundle;
    bundle.name = doc.contains("name") ? doc.at("name").get<std::string>() : "instance";
    if (doc.contains("description")) bundle.description = doc.at("description").get<std::string>();

    const Json& complex = doc.at("complex");
    const std::string kind = complex.at("kind").get<std::string>();
    int gamma_size = 0;
    int top_dim = 0;
    if (kind == "simplicial") {
        SimplicialComplex cx = simplicial_from_json(complex);
        top_dim = cx.dimension();
        if (top_dim < 1) throw ValidationError("complex has no top-dimensional simplices");
        gamma_size = cx.count(top_dim - 1);
        bundle.source = std::move(cx);
    } else if (kind == "chain") {
        ChainComplexData cx = chain_data_from_json(complex);
        top_dim = cx.top_dim;
        if (top_dim < 1) throw ValidationError("complex has no top-dimensional cells");
        gamma_size = cx.sizes[top_dim - 1];
        bundle.source = std::move(cx);
    } else {
        throw ParseError("complex kind must be 'simplicial' or 'chain'");
    }

    if (!doc.contains("capacities")) throw ParseError("missing capacities");
    for (const auto& item : doc.at("capacities")) {
        bundle.capacities.push_back(rational_from_json(item, "capacity"));
    }

    bundle.gamma = Chain::zero(top_dim - 1, gamma_size);
    if (!doc.contains("gamma")) throw ParseError("missing gamma");
    for (const auto& term : doc.at("gamma")) {
        const Rational coef = rational_from_json(term.at("coef"), "gamma coefficient");
        int idx = -1;
        if (term.contains("simplex")) {
            if (!std::holds_alternative<SimplicialComplex>(bundle.source)) {
                throw ParseError("gamma by simplex requires a simplicial complex");
            }
            idx = std::get<SimplicialComplex>(bundle.source)
                      .index_of(top_dim - 1, int_vector(term.at("simplex"), "gamma simplex"));
            if (idx < 0) throw ValidationError("gamma names a missing simplex");
        } else if (term.contains("index")) {
            idx = int_from_json(term.at("index"), "gamma index");
        } else {
            throw ParseError("gamma term needs 'simplex' or 'index'");
        }
        if (idx < 0 || idx >= gamma_size) throw ValidationError("gamma index out of range");
        bundle.gamma.coefficients[idx] += coef;
    }

    if (doc.contains("voids")) {
        const Json& v = doc.at("voids");
        VoidData voids;
        voids.void_count = int_from_json(v.at("count"), "void count");
        voids.unbounded_index = int_from_json(v.at("unbounded"), "unbounded void");
        voids.source_void = int_from_json(v.at("source"), "source void");
        for (const auto& item : v.at("sides")) {
            if (!item.is_array() || item.size() != 2) throw ParseError("void side must be [pos,neg]");
            voids.sides.push_back({int_from_json(item[0], "positive side"),
                                   int_from_json(item[1], "negative side")});
        }
        voids.gamma1_support = int_vector(v.at("gamma1"), "gamma1 support");
        voids.gamma2_support = int_vector(v.at("gamma2"), "gamma2 support");
        bundle.voids = std::move(voids);
    }
    if (doc.contains("expected")) {
        for (const auto& [key, entry] : doc.at("expected").items()) {
            bundle.expected[key] = {rational_from_json(entry.at("value"), "expected value"),
                                    entry.contains("provenance")
                                        ? entry.at("provenance").get<std::string>()
                                        : ""};
        }
    }
    if (doc.contains("index_sets")) {
        for (const auto& [key, list] : doc.at("index_sets").items()) {
            bundle.index_sets[key] = int_vector(list, "index set");
        }
    }
    return finish_bundle(std::move(bundle));
}

std::string write_instance(const InstanceBundle& bundle) {
    return instance_to_json(bundle).dump(2) + "\n";
}

InstanceBundle read_instance(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("invalid JSON: ") + err.what());
    }
    return instance_from_json(doc);
}

InstanceBundle load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return read_instance(text);
}

void save_instance_file(const InstanceBundle& bundle, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << write_instance(bundle);
}

Json flow_certificate(const FlowResult& flow) {
    Json out;
    out["kind"] = "flow";
    out["value"] = to_string(flow.value);
    out["coefficients"] = format_rational_vector(flow.flow.coefficients);
    return out;
}

Json cut_certificate(const Cochain& cochain) {
    Json out;
    out["kind"] = "cut";
    out["cochain"] = format_rational_vector(cochain.coefficients);
    return out;
}

}  // namespace sflow

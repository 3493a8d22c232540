#include "crsym/json_io.hpp"

#include <fstream>

namespace crsym {

Json to_json(const Rational& q) { return rational_str(q); }

Json to_json(const GaussianRational& z, bool with_float) {
    Json j;
    j["re"] = rational_str(z.re());
    j["im"] = rational_str(z.im());
    if (with_float) {
        auto c = z.to_complex_double();
        j["approx"] = Json::array({c.real(), c.imag()});
    }
    return j;
}

Json to_json(const ExactMatrix& m, bool with_float) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j), with_float));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const SymbolSpec& spec) {
    Json blocks = Json::array();
    for (const auto& b : spec.blocks) {
        Json jb;
        jb["lambda"] = to_json(b.lambda);
        jb["m"] = b.m;
        jb["epsilon"] = b.epsilon;
        blocks.push_back(std::move(jb));
    }
    Json j;
    j["blocks"] = std::move(blocks);
    return j;
}

Json to_json(const ReducedDatum& datum, bool with_float) {
    Json j;
    j["omega"] = to_json(datum.omega, with_float);
    Json a0 = Json::array();
    for (const auto& b : datum.a0.basis()) a0.push_back(to_json(b, with_float));
    j["a0"] = std::move(a0);
    Json eta = Json::array();
    for (const auto& e : datum.eta) eta.push_back(to_json(e, with_float));
    j["eta"] = std::move(eta);
    j["mu"] = to_json(datum.mu, with_float);
    return j;
}

Json to_json(const ProlongationReport& rep) {
    Json j;
    j["dims"] = rep.dims;
    if (rep.universal_dim)
        j["universal_dim"] = *rep.universal_dim;
    else
        j["universal_dim"] = "not reached";
    if (rep.first_zero)
        j["first_zero"] = *rep.first_zero;
    else
        j["first_zero"] = "not reached";
    return j;
}

GaussianRational complex_from_json(const Json& j) {
    if (j.is_string()) return GaussianRational(parse_rational(j.get<std::string>()));
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw SpecError("complex literal must be {\"re\":\"p/q\",\"im\":\"p/q\"}");
    return {parse_rational(j.at("re").get<std::string>()),
            parse_rational(j.at("im").get<std::string>())};
}

ExactMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw SpecError("matrix literal must be a nonempty array");
    size_t rows = j.size();
    size_t cols = j.at(0).size();
    ExactMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || row.size() != cols) throw SpecError("ragged matrix literal");
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = complex_from_json(row.at(c));
    }
    return m;
}

SymbolSpec spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("blocks"))
        throw SpecError("spec JSON must be {\"blocks\": [...]}");
    SymbolSpec spec;
    for (const Json& jb : j.at("blocks")) {
        BlockSpec b;
        b.lambda = complex_from_json(jb.at("lambda"));
        if (!jb.contains("m") || !jb.at("m").is_number_integer() || jb.at("m").get<long>() < 1)
            throw SpecError("block field \"m\" must be a positive integer");
        b.m = jb.at("m").get<size_t>();
        if (!jb.contains("epsilon")) throw SpecError("block field \"epsilon\" missing");
        b.epsilon = jb.at("epsilon").get<int>();
        spec.blocks.push_back(std::move(b));
    }
    spec.validate();
    return spec;
}

ReducedDatum datum_from_json(const Json& j) {
    ReducedDatum d;
    d.omega = matrix_from_json(j.at("omega"));
    std::vector<ExactMatrix> a0;
    for (const Json& jm : j.at("a0")) a0.push_back(matrix_from_json(jm));
    size_t n1 = d.omega.rows();
    d.a0 = MatrixSubspace::span(n1, n1, a0);
    for (const Json& je : j.at("eta")) d.eta.push_back(complex_from_json(je));
    d.mu = complex_from_json(j.at("mu"));
    return d;
}

SymbolSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SpecError("JSON parse error in " + path + ": " + e.what());
    }
    return spec_from_json(j);
}

namespace {

bool type_matches(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

}  // namespace

bool validate_schema(const Json& value, const Json& schema, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (schema.contains("oneOf")) {
        for (const Json& sub : schema.at("oneOf"))
            if (validate_schema(value, sub, nullptr)) return true;
        return fail("value matches no alternative of oneOf");
    }
    if (schema.contains("type")) {
        const Json& t = schema.at("type");
        if (t.is_string()) {
            if (!type_matches(value, t.get<std::string>()))
                return fail("expected type " + t.get<std::string>());
        } else {
            bool any = false;
            for (const Json& tt : t)
                if (type_matches(value, tt.get<std::string>())) any = true;
            if (!any) return fail("value matches none of the allowed types");
        }
    }
    if (schema.contains("enum")) {
        bool any = false;
        for (const Json& e : schema.at("enum"))
            if (value == e) any = true;
        if (!any) return fail("value not in enum");
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const Json& k : schema.at("required"))
                if (!value.contains(k.get<std::string>()))
                    return fail("missing required key " + k.get<std::string>());
        if (schema.contains("properties")) {
            const Json& props = schema.at("properties");
            for (auto it = value.begin(); it != value.end(); ++it) {
                if (props.contains(it.key())) {
                    std::string sub;
                    if (!validate_schema(it.value(), props.at(it.key()), &sub))
                        return fail(it.key() + ": " + sub);
                } else if (schema.contains("additionalProperties") &&
                           schema.at("additionalProperties") == false) {
                    return fail("unexpected key " + it.key());
                }
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (const Json& item : value) {
            std::string sub;
            if (!validate_schema(item, schema.at("items"), &sub))
                return fail("array item: " + sub);
        }
    }
    return true;
}

}  // namespace crsym

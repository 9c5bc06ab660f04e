#include "ado/catalog.hpp"

#include <fstream>
#include <sstream>

namespace ado {

KnotRecord record_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "record is not a JSON object");
    KnotRecord r;
    try {
        r.name = j.at("name").get<std::string>();
        const int strands = j.at("strands").get<int>();
        r.braid = BraidWord(strands, j.at("braid").get<std::vector<int>>());
        r.components = j.value("components", 1);
        if (j.contains("genus") && !j["genus"].is_null()) r.genus = j["genus"].get<int>();
        if (j.contains("fibered") && !j["fibered"].is_null()) r.fibered = j["fibered"].get<bool>();
        if (j.contains("crossings") && !j["crossings"].is_null()) r.crossings = j["crossings"].get<int>();
        r.source = j.value("source", std::string());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    } catch (const Error& e) {
        throw Error(ErrorKind::RecordInvalid, e.what());
    }
    const int cycles = r.braid.components();
    if (cycles != r.components)
        throw Error(ErrorKind::RecordInvalid, r.name + ": declared " + std::to_string(r.components) +
                                                  " components, closure has " + std::to_string(cycles));
    if (r.genus && *r.genus < 0) throw Error(ErrorKind::RecordInvalid, r.name + ": negative genus");
    return r;
}

json record_to_json(const KnotRecord& r) {
    json j{{"name", r.name}, {"braid", r.braid.letters}, {"strands", r.braid.strands}, {"components", r.components}};
    if (r.genus) j["genus"] = *r.genus;
    if (r.fibered) j["fibered"] = *r.fibered;
    if (r.crossings) j["crossings"] = *r.crossings;
    if (!r.source.empty()) j["source"] = r.source;
    return j;
}

std::vector<KnotRecord> parse_catalog(const std::string& text) {
    std::vector<KnotRecord> out;
    std::istringstream is(text);
    std::string line;
    for (int lineno = 1; std::getline(is, line); ++lineno) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(record_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
        } catch (const Error& e) {
            throw Error(e.kind(), "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<KnotRecord> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open catalog " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

const KnotRecord& find_record(const std::vector<KnotRecord>& cat, const std::string& name) {
    for (const auto& r : cat)
        if (r.name == name) return r;
    throw Error(ErrorKind::InvalidArgument, "no catalog record named " + name);
}

json to_json(const CycloNum& x) {
    json a = json::array();
    for (const auto& c : x.coords()) a.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
    return a;
}

CycloNum cyclo_from_json(const json& j, const RingCtx& ring) {
    if (!j.is_array() || static_cast<int>(j.size()) != ring.dim())
        throw Error(ErrorKind::ParseError, "coefficient must be an array of " + std::to_string(ring.dim()) + " rationals");
    std::vector<mpq_class> c;
    for (const auto& s : j) {
        try {
            mpq_class v(s.get<std::string>());
            v.canonicalize();
            c.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad rational " + s.dump());
        }
    }
    return CycloNum(ring, std::move(c));
}

json to_json(const AdoPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"exp2", e}, {"coeff", to_json(c)}});
    return {{"p", f.p()}, {"components", f.components()}, {"terms", terms}};
}

AdoPoly poly_from_json(const json& j) {
    try {
        const RingCtx& ring = RingCtx::get(j.at("p").get<int>());
        AdoPoly f(ring, j.at("components").get<int>());
        for (const auto& t : j.at("terms")) f.add_term(t.at("exp2").get<int>(), cyclo_from_json(t.at("coeff"), ring));
        return f;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

json to_json(const AdoResult& r) {
    json j = to_json(r.poly);
    j["braid"] = r.braid.letters;
    j["strands"] = r.braid.strands;
    j["writhe"] = r.writhe;
    j["checks"] = {{"symmetric", r.checks.symmetric}, {"integral", r.checks.integral}, {"scalar_matrix", r.checks.scalar_matrix}};
    return j;
}

AdoResult result_from_json(const json& j) {
    try {
        AdoPoly f = poly_from_json(j);
        BraidWord b(j.at("strands").get<int>(), j.at("braid").get<std::vector<int>>());
        AdoResult r{f, f.p(), b, j.at("writhe").get<int>(), f.components(), {}};
        const json& c = j.at("checks");
        r.checks.symmetric = c.at("symmetric").get<bool>();
        r.checks.integral = c.at("integral").get<bool>();
        r.checks.scalar_matrix = c.at("scalar_matrix").get<bool>();
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

json to_json(const LaurentA& x) {
    json a = json::array();
    for (const auto& [e, c] : x.terms()) a.push_back({{"exp", e}, {"coeff", to_json(c)}});
    return a;
}

json to_json(const LMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

}  // namespace ado

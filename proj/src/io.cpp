#include "siegel/io.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "siegel/error.hpp"

namespace siegel {

namespace {

Json smat_json(const SymMat& t) {
    Json rows = Json::array();
    for (int i = 0; i < t.degree; ++i) {
        Json row = Json::array();
        for (int j = 0; j < t.degree; ++j)
            row.push_back(t.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json cyclotomic_json(const Cyclotomic& v) {
    Json j;
    j["order"] = v.order();
    Json coeffs = Json::array();
    for (const auto& c : v.coeffs())
        coeffs.push_back(rational_str(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json value_json(const Rational& v) { return rational_str(v); }
Json value_json(const Cyclotomic& v) { return cyclotomic_json(v); }

template <class K>
Json expansion_json_impl(const SiegelExpansion<K>& f) {
    Json j;
    j["kind"] = "siegel";
    j["degree"] = f.degree;
    j["weight"] = f.weight;
    j["truncation"] = f.truncation;
    j["complete"] = f.complete;
    j["denominator"] = f.denominator;
    if constexpr (std::is_same_v<K, Rational>)
        j["scalar_ring"] = "rational";
    else
        j["scalar_ring"] = Json{{"cyclotomic", f.cyclotomic_order}};
    Json coeffs = Json::array();
    for (const auto& [t, v] : f.coefficients) {
        Json entry;
        entry["S"] = smat_json(t);
        entry["value"] = value_json(v);
        coeffs.push_back(std::move(entry));
    }
    j["coefficients"] = std::move(coeffs);
    return j;
}

const Json& require_field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw Error("ParseError", std::string("missing field '") + name + "'");
    return *it;
}

int64_t require_int(const Json& j, const char* name) {
    const Json& v = require_field(j, name);
    if (!v.is_number_integer())
        throw Error("ParseError", std::string("field '") + name + "' must be an integer");
    return v.get<int64_t>();
}

bool require_bool(const Json& j, const char* name) {
    const Json& v = require_field(j, name);
    if (!v.is_boolean())
        throw Error("ParseError", std::string("field '") + name + "' must be a boolean");
    return v.get<bool>();
}

SymMat smat_from_json(const Json& j) {
    if (!j.is_array())
        throw Error("ParseError", "'S' must be an array of rows");
    std::vector<std::vector<int64_t>> rows;
    for (const Json& r : j) {
        if (!r.is_array())
            throw Error("ParseError", "'S' rows must be arrays");
        std::vector<int64_t> row;
        for (const Json& e : r) {
            if (!e.is_number_integer())
                throw Error("ParseError", "'S' entries must be integers");
            row.push_back(e.get<int64_t>());
        }
        rows.push_back(std::move(row));
    }
    return SymMat::from_rows(rows);
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string())
        throw Error("ParseError", "rational values must be strings");
    return parse_rational(j.get<std::string>());
}

Cyclotomic cyclotomic_from_json(const Json& j, int64_t expected_order) {
    if (!j.is_object())
        throw Error("ParseError", "cyclotomic values must be objects");
    int64_t order = require_int(j, "order");
    if (order != expected_order)
        throw Error("ScalarRingMismatch", "coefficient order does not match the expansion");
    const Json& coeffs = require_field(j, "coeffs");
    if (!coeffs.is_array())
        throw Error("ParseError", "'coeffs' must be an array");
    std::vector<Rational> c;
    for (const Json& e : coeffs)
        c.push_back(rational_from_json(e));
    return Cyclotomic::from_coeffs(std::move(c), order);
}

template <class K>
void read_header(const Json& j, SiegelExpansion<K>& f) {
    f.degree = static_cast<int>(require_int(j, "degree"));
    f.weight = require_int(j, "weight");
    f.truncation = require_int(j, "truncation");
    f.complete = require_bool(j, "complete");
    f.denominator = require_int(j, "denominator");
    if (f.degree < 1)
        throw Error("ParseError", "degree must be at least 1");
    if (f.truncation < 0)
        throw Error("ParseError", "truncation must be nonnegative");
    if (f.denominator < 1)
        throw Error("ParseError", "denominator must be positive");
}

} // namespace

Json expansion_to_json(const RationalSiegel& f) { return expansion_json_impl(f); }
Json expansion_to_json(const CyclotomicSiegel& f) { return expansion_json_impl(f); }

Json jacobi_to_json(const JacobiExpansion& f) {
    Json j;
    j["kind"] = "jacobi";
    j["degree"] = f.degree;
    j["weight"] = f.weight;
    j["index"] = f.index;
    j["truncation"] = f.truncation;
    j["complete"] = f.complete;
    j["denominator"] = 1;
    j["scalar_ring"] = "rational";
    Json coeffs = Json::array();
    for (const auto& [key, v] : f.coefficients) {
        Json entry;
        entry["S"] = smat_json(key.t);
        entry["R"] = key.r;
        entry["value"] = rational_str(v);
        coeffs.push_back(std::move(entry));
    }
    j["coefficients"] = std::move(coeffs);
    return j;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["verdict"] = verdict_str(c.verdict);
    j["theorem"] = c.theorem;
    j["bound"] = rational_str(c.bound);
    j["cutoff"] = c.cutoff;
    j["indices_checked"] = c.indices_checked;
    j["witness"] = c.witness ? smat_json(*c.witness) : Json(nullptr);
    Json inputs;
    for (const auto& [label, digest] : c.inputs)
        inputs[label] = digest;
    j["inputs"] = std::move(inputs);
    return j;
}

Json order_to_json(const OrderResult& r) {
    Json j;
    switch (r.kind) {
    case OrderResult::Kind::not_vanishing:
        j["result"] = "not_vanishing";
        break;
    case OrderResult::Kind::exact:
        j["result"] = "exact";
        j["order"] = r.value;
        break;
    case OrderResult::Kind::at_least:
        j["result"] = "at_least";
        j["bound"] = r.value;
        break;
    }
    if (r.witness) {
        Json w;
        w["S"] = smat_json(*r.witness);
        if (r.witness_r)
            w["R"] = *r.witness_r;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

AnyExpansion expansion_from_json(const Json& j) {
    if (!j.is_object())
        throw Error("ParseError", "expansion files hold a JSON object");
    const Json& kind = require_field(j, "kind");
    if (kind != "siegel")
        throw Error("ParseError", "expected kind 'siegel'");
    const Json& ring = require_field(j, "scalar_ring");
    const Json& coeffs = require_field(j, "coefficients");
    if (!coeffs.is_array())
        throw Error("ParseError", "'coefficients' must be an array");

    if (ring.is_string() && ring == "rational") {
        RationalSiegel f;
        read_header(j, f);
        for (const Json& entry : coeffs)
            f.insert(smat_from_json(require_field(entry, "S")),
                     rational_from_json(require_field(entry, "value")));
        return f;
    }
    if (ring.is_object() && ring.contains("cyclotomic")) {
        CyclotomicSiegel f;
        read_header(j, f);
        f.cyclotomic_order = require_int(ring, "cyclotomic");
        if (f.cyclotomic_order < 1)
            throw Error("ParseError", "cyclotomic order must be positive");
        for (const Json& entry : coeffs)
            f.insert(smat_from_json(require_field(entry, "S")),
                     cyclotomic_from_json(require_field(entry, "value"), f.cyclotomic_order));
        return f;
    }
    throw Error("ParseError", "unknown scalar_ring");
}

JacobiExpansion jacobi_from_json(const Json& j) {
    if (!j.is_object())
        throw Error("ParseError", "expansion files hold a JSON object");
    const Json& kind = require_field(j, "kind");
    if (kind != "jacobi")
        throw Error("ParseError", "expected kind 'jacobi'");
    JacobiExpansion f;
    f.degree = static_cast<int>(require_int(j, "degree"));
    f.weight = require_int(j, "weight");
    f.index = require_int(j, "index");
    f.truncation = require_int(j, "truncation");
    f.complete = require_bool(j, "complete");
    if (f.degree < 1)
        throw Error("ParseError", "degree must be at least 1");
    if (f.index < 0)
        throw Error("ParseError", "index must be nonnegative");
    if (f.truncation < 0)
        throw Error("ParseError", "truncation must be nonnegative");
    const Json& coeffs = require_field(j, "coefficients");
    if (!coeffs.is_array())
        throw Error("ParseError", "'coefficients' must be an array");
    for (const Json& entry : coeffs) {
        JacobiKey key;
        key.t = smat_from_json(require_field(entry, "S"));
        const Json& r = require_field(entry, "R");
        if (!r.is_array())
            throw Error("ParseError", "'R' must be an array of integers");
        for (const Json& e : r) {
            if (!e.is_number_integer())
                throw Error("ParseError", "'R' entries must be integers");
            key.r.push_back(e.get<int64_t>());
        }
        f.insert(std::move(key), rational_from_json(require_field(entry, "value")));
    }
    return f;
}

EvenLattice lattice_from_json(const Json& j) {
    if (!j.is_object())
        throw Error("ParseError", "lattice files hold a JSON object");
    const Json& name = require_field(j, "name");
    if (!name.is_string())
        throw Error("ParseError", "'name' must be a string");
    int rank = static_cast<int>(require_int(j, "rank"));
    const Json& gram = require_field(j, "gram");
    if (!gram.is_array() || static_cast<int>(gram.size()) != rank)
        throw Error("ParseError", "'gram' must be a rank x rank array");
    std::vector<int64_t> m;
    for (const Json& row : gram) {
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
            throw Error("ParseError", "'gram' must be a rank x rank array");
        for (const Json& e : row) {
            if (!e.is_number_integer())
                throw Error("ParseError", "'gram' entries must be integers");
            m.push_back(e.get<int64_t>());
        }
    }
    return make_even_lattice(name.get<std::string>(), rank, std::move(m));
}

std::string canonical_text(const Json& j) {
    return j.dump(2) + "\n";
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error("IoError", "digest computation failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("IoError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("IoError", "cannot write " + path);
    out << data;
    if (!out)
        throw Error("IoError", "write failed for " + path);
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("ParseError", std::string("invalid JSON: ") + e.what());
    }
}

} // namespace siegel

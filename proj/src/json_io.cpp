#include "towers/json_io.hpp"

#include <fstream>
#include <sstream>

#include "towers/errors.hpp"

namespace towers {

BigInt bigint_from_json(const Json& j) {
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<unsigned long long>()));
    throw InputError("expected an integer or decimal string, got " + j.dump());
}

std::string_view to_string(BoundKind kind) { return kind == BoundKind::ByArea ? "area" : "pieces"; }

namespace {

Json bigint_array(const std::vector<BigInt>& values) {
    Json a = Json::array();
    for (const auto& v : values) a.push_back(to_decimal(v));
    return a;
}

std::vector<BigInt> bigint_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<BigInt> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(bigint_from_json(v));
    return out;
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
    return j.at(name);
}

long long integer_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) throw InputError(std::string("field '") + name + "' must be an integer");
    return v.get<long long>();
}

Json query_header(const EnumerationQuery& query) {
    Json j;
    j["sizes"] = query.pieces.sizes();
    j["rule"] = to_string(query.pieces.rule());
    j["shape"] = to_string(query.shape);
    j["bound_kind"] = to_string(query.bound_kind);
    return j;
}

}  // namespace

Json tower_to_json(const Tower& tower) {
    Json floors = Json::array();
    for (const auto& floor : tower.floors()) {
        Json row = Json::array();
        for (const auto& p : floor) row.push_back(Json::array({p.left, p.right()}));
        floors.push_back(std::move(row));
    }
    return floors;
}

RawFloors raw_floors_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("tower must be an array of floors");
    RawFloors raw;
    for (const auto& floor : j) {
        if (!floor.is_array()) throw InputError("floor must be an array of intervals");
        auto& row = raw.emplace_back();
        for (const auto& iv : floor) {
            if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number_integer() || !iv[1].is_number_integer())
                throw InputError("interval must be a pair of integers, got " + iv.dump());
            row.push_back({iv[0].get<std::int64_t>(), iv[1].get<std::int64_t>()});
        }
    }
    return raw;
}

Json counts_to_json(const EnumerationQuery& query, const std::map<int, BigInt>& counts) {
    Json j = query_header(query);
    Json c = Json::object();
    for (const auto& [n, v] : counts) c[std::to_string(n)] = to_decimal(v);
    j["counts"] = std::move(c);
    return j;
}

Json weights_to_json(const EnumerationQuery& query, const std::map<int, ZPolynomial>& weights) {
    Json j = query_header(query);
    Json w = Json::object();
    for (const auto& [n, p] : weights) w[std::to_string(n)] = zpolynomial_to_json(p, query.pieces.sizes().size());
    j["weights"] = std::move(w);
    return j;
}

Json zpolynomial_to_json(const ZPolynomial& p, std::size_t slots) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[ZPolynomial::exponent_key(e, slots)] = to_decimal(c);
    return j;
}

ZPolynomial zpolynomial_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("weighted coefficient must be an object");
    ZPolynomial p;
    for (const auto& [key, value] : j.items()) {
        ZPolynomial::Exponents e;
        std::stringstream ss(key);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                throw InputError("bad exponent key '" + key + "'");
            e.push_back(static_cast<std::uint32_t>(std::stoul(part)));
        }
        p.add_term(std::move(e), bigint_from_json(value));
    }
    return p;
}

Json series_to_json(const IntegerSeries& s) {
    Json j;
    j["variable"] = "t";
    j["order"] = s.order();
    j["coeffs"] = bigint_array(s.coeffs());
    return j;
}

IntegerSeries series_from_json(const Json& j) {
    const long long order = integer_field(j, "order");
    if (order < 0) throw InputError("series order must be non-negative");
    auto coeffs = bigint_vector(field(j, "coeffs"), "coeffs");
    if (coeffs.size() != static_cast<std::size_t>(order) + 1)
        throw InputError("series has " + std::to_string(coeffs.size()) + " coefficients for order " +
                         std::to_string(order));
    return IntegerSeries(static_cast<std::size_t>(order), std::move(coeffs));
}

Json weighted_series_to_json(const WeightedSeries& s, const std::vector<int>& marker_labels) {
    Json j;
    j["variable"] = "t";
    j["order"] = s.order();
    j["markers"] = marker_labels;
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(zpolynomial_to_json(c, marker_labels.size()));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json sequence_to_json(const Sequence& s) {
    Json j;
    j["offset"] = s.offset;
    j["label"] = s.label;
    j["terms"] = bigint_array(s.terms);
    return j;
}

Sequence sequence_from_json(const Json& j) {
    Sequence s;
    s.offset = j.is_object() && j.contains("offset") ? integer_field(j, "offset") : 0;
    s.terms = bigint_vector(field(j, "terms"), "terms");
    if (j.contains("label") && j.at("label").is_string()) s.label = j.at("label").get<std::string>();
    if (s.terms.empty()) throw InputError("sequence has no terms");
    return s;
}

Json recurrence_to_json(const Recurrence& rec) {
    Json j;
    j["order"] = rec.order;
    j["degree"] = rec.degree;
    Json coeffs = Json::array();
    for (const auto& p : rec.coeffs) coeffs.push_back(bigint_array(p));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Recurrence recurrence_from_json(const Json& j) {
    Recurrence rec;
    rec.order = static_cast<int>(integer_field(j, "order"));
    rec.degree = static_cast<int>(integer_field(j, "degree"));
    const Json& coeffs = field(j, "coeffs");
    if (rec.order < 1 || rec.degree < 0) throw InputError("recurrence order must be >= 1 and degree >= 0");
    if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(rec.order) + 1)
        throw InputError("recurrence needs order + 1 coefficient polynomials");
    for (const auto& p : coeffs) {
        auto v = bigint_vector(p, "coefficient polynomial");
        if (v.size() > static_cast<std::size_t>(rec.degree) + 1)
            throw InputError("coefficient polynomial exceeds the stated degree");
        v.resize(static_cast<std::size_t>(rec.degree) + 1, BigInt(0));
        rec.coeffs.push_back(std::move(v));
    }
    bool top = false;
    for (const auto& c : rec.coeffs.back()) top = top || sgn(c) != 0;
    if (!top) throw InputError("leading coefficient polynomial is zero");
    return rec;
}

Json polynomial_to_json(const BivariatePolynomial& q) {
    Json j;
    j["y_degree"] = q.degree();
    Json coeffs = Json::array();
    for (const auto& c : q.coeffs()) coeffs.push_back(bigint_array(c.coeffs()));
    j["coeffs_in_t"] = std::move(coeffs);
    return j;
}

BivariatePolynomial polynomial_from_json(const Json& j) {
    const Json& coeffs = field(j, "coeffs_in_t");
    if (!coeffs.is_array()) throw InputError("coeffs_in_t must be an array");
    std::vector<IntPoly> ys;
    for (const auto& c : coeffs) ys.emplace_back(bigint_vector(c, "t-coefficients"));
    BivariatePolynomial q(std::move(ys));
    if (j.contains("y_degree") && integer_field(j, "y_degree") != q.degree())
        throw InputError("y_degree does not match coeffs_in_t");
    return q;
}

Json asymptotics_to_json(const AsymptoticEstimate& est) {
    Json j;
    j["model"] = "a(n) ~ C * mu^n * n^theta";
    j["empirical"] = true;
    j["mu"] = to_decimal_string(est.mu, est.digits);
    j["theta"] = to_decimal_string(est.theta, est.digits);
    j["stability"] = {{"mu", to_decimal_string(est.mu_stability, 6)},
                      {"theta", to_decimal_string(est.theta_stability, 6)}};
    if (est.amplitude) {
        std::ostringstream c;
        c.precision(12);
        c << *est.amplitude;
        j["c_amplitude"] = c.str();
    } else {
        j["c_amplitude"] = nullptr;
    }
    j["depth"] = est.depth;
    j["anchor_index"] = est.index;
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

SequenceWriter::SequenceWriter(std::ostream& out, long long offset, std::string label)
    : out_(out), label_(std::move(label)) {
    out_ << "{\n  \"offset\": " << offset << ",\n  \"label\": " << Json(label_).dump() << ",\n  \"terms\": [";
}

void SequenceWriter::push(const BigInt& value) {
    out_ << (first_ ? "\n    \"" : ",\n    \"") << value << '"';
    first_ = false;
}

void SequenceWriter::finish() {
    if (finished_) return;
    finished_ = true;
    out_ << (first_ ? "]\n}\n" : "\n  ]\n}\n");
}

}  // namespace towers

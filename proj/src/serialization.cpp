#include "perfectforms/serialization.hpp"

#include <limits>

namespace perfectforms {

Json to_json(const Integer& v) {
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Json to_json(const Rational& v) { return Json::array({to_json(v.get_num()), to_json(v.get_den())}); }

Json to_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(to_json(c));
    return out;
}

Json to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

Json to_json(const QSqrt2& v) {
    return Json{{"rational", to_json(v.rational_part())}, {"sqrt2", to_json(v.sqrt2_part())}, {"text", v.to_string()}};
}

Json to_json(const QuadForm& q) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j < q.dim(); ++j) entries.push_back(to_json(q(i, j)));
    return Json{{"dim", q.dim()}, {"entries", std::move(entries)}};
}

Json to_json(const MinimalVectorSet& s) {
    Json vectors = Json::array();
    for (const auto& v : s.vectors) vectors.push_back(to_json(v));
    return Json{{"lambda1", to_json(s.form_min)}, {"vectors", std::move(vectors)}};
}

Json to_json(const ReductionResult& r, const Rational& scale) {
    return Json{{"reduced", to_json(r.reduced)}, {"transform", to_json(r.transform.matrix())}, {"scale", to_json(scale)}};
}

Json to_json(const VoronoiDomain& domain) {
    Json gens = Json::array();
    for (const auto& g : domain.generators) gens.push_back(to_json(g));
    Json out{{"dim", domain.source.dim()},
             {"rank", domain.rank},
             {"full_rank", domain.full_rank()},
             {"lambda1", to_json(domain.minimal_vectors.form_min)},
             {"generators", std::move(gens)}};
    if (domain.facets) {
        Json facets = Json::array();
        for (const auto& f : *domain.facets) {
            Json incident = Json::array();
            for (auto i : f.incident) incident.push_back(i);
            facets.push_back(Json{{"functional", to_json(f.functional)}, {"incident", std::move(incident)}});
        }
        out["facets"] = std::move(facets);
    }
    return out;
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_unsigned()) {
        auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) return Integer(std::to_string(u));
        return Integer(static_cast<long>(u));
    }
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("invalid integer string: " + j.get<std::string>());
        return v;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw ParseError("rational must be [numerator, denominator]");
        Integer den = integer_from_json(j[1]);
        if (den == 0) throw ParseError("zero denominator");
        Rational r(integer_from_json(j[0]), den);
        r.canonicalize();
        return r;
    }
    return Rational(integer_from_json(j));
}

IntVector int_vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an integer array");
    IntVector v;
    for (const auto& c : j) v.push_back(integer_from_json(c));
    return v;
}

QuadForm quad_form_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw ParseError("quadratic form must be an object with \"dim\" and \"entries\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1) throw ParseError("\"dim\" must be a positive integer");
    const auto d = static_cast<std::size_t>(j["dim"].get<std::int64_t>());
    const Json& e = j["entries"];
    if (!e.is_array() || e.size() != d * d) throw ParseError("\"entries\" must hold dim*dim values");
    RatMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = r; c < d; ++c) m(r, c) = m(c, r) = rational_from_json(e[r * d + c]);
    for (std::size_t r = 1; r < d; ++r)
        for (std::size_t c = 0; c < r; ++c)
            if (rational_from_json(e[r * d + c]) != m(r, c)) throw ParseError("matrix is not symmetric");
    return QuadForm(m);
}

QuadForm quad_form_from_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return quad_form_from_json(j);
}

}  // namespace perfectforms

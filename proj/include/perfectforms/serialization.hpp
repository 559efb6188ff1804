#pragma once

// JSON encodings of the library's exact data. Integers that fit in 64 bits
// are JSON numbers, larger ones are decimal strings; rationals are
// [numerator, denominator] pairs.

#include "perfectforms/enumeration.hpp"
#include "perfectforms/forms.hpp"
#include "perfectforms/perfection.hpp"
#include "perfectforms/reduction.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace perfectforms {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const QSqrt2& v);

/// {"dim": d, "entries": [[num, den], ...]} row-major.
Json to_json(const QuadForm& q);
/// {"lambda1": [num, den], "vectors": [...]}.
Json to_json(const MinimalVectorSet& s);
/// {"reduced": <form>, "transform": [[...]], "scale": [num, den]}.
Json to_json(const ReductionResult& r, const Rational& scale = 1);
/// {"dim", "rank", "full_rank", "generators", "facets"?}.
Json to_json(const VoronoiDomain& domain);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);

/// Reads the upper triangle and mirrors it; throws ParseError on a
/// malformed document or on disagreeing lower-triangle entries.
QuadForm quad_form_from_json(const Json& j);
QuadForm quad_form_from_text(const std::string& text);

}  // namespace perfectforms

#include "perfectforms/catalog.hpp"

#include "perfectforms/serialization.hpp"
#include "perfectforms/voronoi_walk.hpp"

#include <charconv>

namespace perfectforms {
namespace detail {
extern const char* const kCatalogJson;
}

namespace catalog {
namespace {

const Json& document() {
    static const Json doc = [] {
        Json j = Json::parse(detail::kCatalogJson);
        if (j.value("format", "") != "perfectforms-catalog") throw ParseError("catalog: unexpected format tag");
        return j;
    }();
    return doc;
}

CatalogEntry from_json(const Json& e) {
    return {e.at("name").get<std::string>(), quad_form_from_json(e.at("form")), integer_from_json(e.at("expected_lambda1")),
            e.at("expected_min_count").get<std::size_t>()};
}

}  // namespace

CatalogEntry get(const std::string& name) {
    for (const auto& e : document().at("entries"))
        if (e.at("name") == name) return from_json(e);
    if (name.size() > 1 && name[0] == 'A') {
        std::size_t d = 0;
        auto [end, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), d);
        if (ec == std::errc() && end == name.data() + name.size() && d >= 1)
            return {name, root_form_a(d), 2, d * (d + 1) / 2};
    }
    throw UnknownEntryError("catalog: unknown entry \"" + name + "\"");
}

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& e : document().at("entries")) out.push_back(e.at("name").get<std::string>());
    return out;
}

int version() { return document().at("version").get<int>(); }

}  // namespace catalog
}  // namespace perfectforms

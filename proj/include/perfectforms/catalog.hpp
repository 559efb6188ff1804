#pragma once

// Gram matrices of classical perfect forms and the d = 2 picture fixtures,
// loaded from the bundled JSON data. Expectations are data, not facts:
// tests re-derive them.

#include "perfectforms/forms.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfectforms::catalog {

struct CatalogEntry {
    std::string name;
    QuadForm form;
    Integer expected_lambda1;
    std::size_t expected_min_count = 0;  ///< up to sign
};

class UnknownEntryError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Bundled entries, plus "A<d>" for any d >= 1 synthesized on demand.
/// Throws UnknownEntryError.
CatalogEntry get(const std::string& name);

/// Names of the bundled entries in file order.
std::vector<std::string> names();

/// Data file version.
int version();

}  // namespace perfectforms::catalog

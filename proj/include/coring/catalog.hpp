#pragma once

// Built-in instance documents: "main" holds every law-abiding instance,
// "faults/..." each hold one injected fault.

#include <string>
#include <vector>

namespace coring {

std::vector<std::string> catalog_names();
/// Throws std::out_of_range for an unknown name.
const std::string& catalog_document(const std::string& name);

}  // namespace coring

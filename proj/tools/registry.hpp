#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitorder/conditions.hpp"

namespace splitorder::cli {

struct RegistryEntry {
  ConcreteScheme scheme;
  int declared_order;
};

// lie-trotter (order 1), strang (order 2, written A B A with a trailing
// zero B stage), paper-order3 (the rational s = 3 order-3 scheme).
const std::vector<RegistryEntry>& registry();

std::optional<RegistryEntry> find_scheme(std::string_view name);

// {"name": ..., "a": ["7/24", ...], "b": [...]}; coefficients must be
// rational strings. Throws ParseError / InvalidArgument.
ConcreteScheme parse_scheme_json(const std::string& text);
std::string scheme_to_json(const ConcreteScheme& scheme);

// Throws Error when the file cannot be read, ParseError when malformed.
ConcreteScheme load_scheme_file(const std::string& path);

}  // namespace splitorder::cli

#pragma once

#include <string>

#include "fairmatch/model.hpp"

namespace fairmatch {

// JSON round-trip for instances and matchings.  Parsers reject unknown keys
// and throw std::invalid_argument on malformed input.  Writers emit a fixed
// key order so output is byte-stable.
Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

Matching matching_from_json(const std::string& text);
std::string matching_to_json(const Matching& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fairmatch

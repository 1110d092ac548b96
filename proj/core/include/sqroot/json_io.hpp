#pragma once

#include <map>
#include <string>
#include <string_view>

#include "sqroot/coloring.hpp"
#include "sqroot/gadget.hpp"
#include "sqroot/setsplit.hpp"

namespace sqroot {

// JSON documents exchanged by the CLI. Malformed documents raise
// ParseError; structural rules (duplicates) raise the same errors as the
// in-memory constructors.
//
//   instance:  {"ground_set": ["a", ...], "collection": [["a","b","c"], ...]}
//   witness:   {"parts": [["a"], ["b"], ["c","d"]]}
//   roles:     {"x:a": {"role": "Element", "args": ["a"]},
//               "xc:2:0": {"role": "SetTail", "args": [0, 2]}, ...}
//   origins:   {"x": {"origin": "vertex"},
//               "z_x_y": {"origin": "subdivision", "edge": ["x", "y"]}}

SetSplitInstance parse_instance_json(std::string_view text);
std::string instance_to_json(const SetSplitInstance& inst);

Partition3 parse_partition_json(std::string_view text);
std::string partition_to_json(const Partition3& p);

std::map<std::string, VertexRole> parse_roles_json(std::string_view text);
std::string roles_to_json(const std::map<std::string, VertexRole>& roles);

std::string origins_to_json(const ColoringReduction& red);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

} // namespace sqroot

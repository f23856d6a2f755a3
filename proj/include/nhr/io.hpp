#pragma once

#include "nhr/graph.hpp"
#include "nhr/pattern.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace nhr {

/// "n <count>" then one "e <i> <j>" line per edge.
std::string write_graph(const SimpleGraph& g);
SimpleGraph parse_graph(std::string_view text);

/// "n <count>" then the lower triangle row by row as 'R'/'B', 80 per line.
std::string write_colouring(const TwoColouring& col);
TwoColouring parse_colouring(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// K<n>, P<n>, C<n>, E<n> (edgeless), Hk<l>, or @file in graph format.
PatternGraph parse_pattern(std::string_view spec);

}  // namespace nhr

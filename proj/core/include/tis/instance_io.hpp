#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tis/instance.hpp"

namespace tis {

/// Parses the line-oriented `tis 1` instance format.
///
///   tis 1
///   mode model|edges
///   n <int>  tau <int>  delta <int>  k <int>  [unit true|false]
///   vertex <name> [weight]
///   layer <t>
///   interval <name> <left> <right>     (model mode)
///   edge <u> <v>                       (edges mode)
///
/// '#' starts a comment. Throws ParseError carrying the 1-based line and column.
TemporalInstance parse_instance(std::string_view text);

/// Canonical text: header, vertices in declaration order, layers ascending,
/// interval/edge lines sorted lexicographically by vertex name.
std::string serialize_instance(const TemporalInstance& inst);

TemporalInstance read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const TemporalInstance& inst);

} // namespace tis

#pragma once

#include <string>

#include "surfbasis/embedding.hpp"

namespace surfbasis {

// Line-oriented instance format:
//
//   v <count>
//   e <id> <u> <v> <weight> <sig>
//   rot <vertex> <dart>...      dart = <id>+ (end at v) or <id>- (end at u)
//   bnd <dart>
//
// '#' starts a comment. Edge ids are tokens of [A-Za-z0-9_] and are
// numbered internally in file order.

/// Parses an instance. Throws InputError naming the offending line.
EmbeddingDescription parse_instance(const std::string& text);

EmbeddingDescription read_instance_file(const std::string& path);

/// Writes a description in the same format; edges without a label get
/// their index as id.
std::string format_instance(const EmbeddingDescription& desc);

std::string format_weight(Weight w);

}  // namespace surfbasis

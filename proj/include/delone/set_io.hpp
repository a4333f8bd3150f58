#pragma once

#include <stdexcept>
#include <string>

#include "delone/periodic_set.hpp"

namespace delone {

// Malformed or inconsistent set file; the message carries the position or the
// JSON path of the offending element.
class set_parse_error : public std::runtime_error {
 public:
  explicit set_parse_error(const std::string& what) : std::runtime_error(what) {}
};

// One JSON document per set: dimension, gram (rational strings), motif,
// optional declared_R_sq and name.
PeriodicSet parse_set_json(const std::string& text, const std::string& origin);
PeriodicSet load_set_file(const std::string& path);
std::string emit_set_json(const PeriodicSet& x, const std::string& name = "");

// Stable content fingerprint of the mathematical data, for report headers.
std::string set_digest(const PeriodicSet& x);

}  // namespace delone

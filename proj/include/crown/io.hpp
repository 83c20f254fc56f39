#ifndef CROWN_IO_HPP
#define CROWN_IO_HPP

#include "crown/model.hpp"

#include <string>

namespace crown {

/// Reads the JSON instance format. Throws Error("parse-error") with
/// line/column for malformed JSON and Error("semantic-error") for
/// well-formed JSON that breaks instance invariants.
Instance readInstance(const std::string& text);
std::string writeInstance(const Instance& instance);

std::string writeReport(const SolveReport& report);
SolveReport readReport(const std::string& text);

}  // namespace crown

#endif

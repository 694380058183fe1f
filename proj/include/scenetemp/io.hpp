#pragma once

#include <string>

namespace scenetemp {

// Shortest decimal string that round-trips the double exactly. Every CSV
// and JSON writer in the project goes through this so that file output is
// byte-stable across runs and matches in-process serialization.
std::string format_double(double value);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace scenetemp

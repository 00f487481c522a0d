#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "turan/core.hpp"

namespace turan {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph file: optional '#' comment lines, a header "n m", then m lines of
// three 1-based vertex labels.
std::string write_graph_file(const TripleSystem& g);
TripleSystem parse_graph_file(std::string_view text);

// "h3:<n>:<hex>" with the colex triple bitset as a big-endian hex number
// zero-padded to ceil(C(n,3)/4) digits.
std::string to_hex_code(const TripleSystem& g);
TripleSystem parse_hex_code(std::string_view text);

// Either format; a leading "h3:" selects the hex code.
TripleSystem parse_graph(std::string_view text);
TripleSystem read_graph(const std::filesystem::path& path);

}  // namespace turan

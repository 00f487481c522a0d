#include "turan/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace turan {

std::string write_graph_file(const TripleSystem& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& t : g.edges()) out << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  return out.str();
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

TripleSystem parse_graph_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<std::array<int, 3>> edges;
  std::set<std::array<int, 3>> seen;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::istringstream fields(s);
    if (!have_header) {
      if (!(fields >> n >> m) || n < 0 || m < 0) fail("expected header 'n m'");
      if (n > kMaxVertices) fail("n exceeds " + std::to_string(kMaxVertices));
      have_header = true;
    } else {
      std::array<long long, 3> v{};
      if (!(fields >> v[0] >> v[1] >> v[2])) fail("expected three vertex labels");
      for (auto x : v)
        if (x < 1 || x > n) fail("vertex label " + std::to_string(x) + " outside 1.." + std::to_string(n));
      if (v[0] == v[1] || v[0] == v[2] || v[1] == v[2]) fail("repeated vertex in edge");
      std::array<int, 3> e{static_cast<int>(v[0] - 1), static_cast<int>(v[1] - 1), static_cast<int>(v[2] - 1)};
      std::sort(e.begin(), e.end());
      if (!seen.insert(e).second) fail("duplicate edge");
      edges.push_back(e);
    }
    std::string extra;
    if (fields >> extra) fail("unexpected trailing token '" + extra + "'");
  }
  if (!have_header) throw ParseError("missing header 'n m'");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return make_system(static_cast<int>(n), edges);
}

std::string to_hex_code(const TripleSystem& g) {
  static constexpr char digits[] = "0123456789abcdef";
  const std::size_t nbits = binom(g.order(), 3);
  const std::size_t ndigits = (nbits + 3) / 4;
  std::string hex(ndigits, '0');
  const auto& bits = g.bits();
  for (std::size_t d = 0; d < ndigits; ++d) {
    unsigned nibble = 0;
    for (int b = 0; b < 4; ++b) {
      std::size_t i = d * 4 + b;
      if (i < nbits && ((bits[i / 64] >> (i % 64)) & 1)) nibble |= 1u << b;
    }
    hex[ndigits - 1 - d] = digits[nibble];
  }
  return "h3:" + std::to_string(g.order()) + ":" + hex;
}

TripleSystem parse_hex_code(std::string_view text) {
  std::string s = trim(text);
  if (s.rfind("h3:", 0) != 0) throw ParseError("hex code must start with 'h3:'");
  auto colon = s.find(':', 3);
  if (colon == std::string::npos) throw ParseError("hex code needs 'h3:<n>:<hex>'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(3, colon - 3), &used);
    if (used != colon - 3) throw ParseError("bad vertex count");
  } catch (const std::logic_error&) {
    throw ParseError("bad vertex count in hex code");
  }
  if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range in hex code");
  const std::string hex = s.substr(colon + 1);
  const std::size_t nbits = binom(n, 3);
  if (hex.size() != (nbits + 3) / 4)
    throw ParseError("hex code for n = " + std::to_string(n) + " needs " +
                     std::to_string((nbits + 3) / 4) + " digits");
  std::vector<Triple> edges;
  for (std::size_t d = 0; d < hex.size(); ++d) {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[hex.size() - 1 - d])));
    int nibble;
    if (c >= '0' && c <= '9') nibble = c - '0';
    else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
    else throw ParseError(std::string("bad hex digit '") + c + "'");
    for (int b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1)) continue;
      std::size_t i = d * 4 + b;
      if (i >= nbits) throw ParseError("hex code sets a bit beyond C(n,3)");
      edges.push_back(triple_at(i));
    }
  }
  return TripleSystem(n, std::move(edges));
}

TripleSystem parse_graph(std::string_view text) {
  std::string s = trim(text);
  if (s.rfind("h3:", 0) == 0) return parse_hex_code(s);
  return parse_graph_file(text);
}

TripleSystem read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace turan

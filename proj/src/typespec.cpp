#include "apkit/typespec.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace apkit {

namespace {

long long parse_number(const std::string& tok, std::size_t& pos) {
  if (pos >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[pos])))
    throw std::invalid_argument("type spec: expected a number in '" + tok + "'");
  long long value = 0;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
    value = value * 10 + (tok[pos] - '0');
    if (value > 1'000'000'000LL) throw std::invalid_argument("type spec: number too large");
    ++pos;
  }
  return value;
}

}  // namespace

PartitionType parse_type_spec(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t') {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.empty()) throw std::invalid_argument("type spec: empty");

  std::vector<long long> counts;
  std::vector<bool> seen;
  for (const std::string& tok : tokens) {
    std::size_t pos = 0;
    const long long base = parse_number(tok, pos);
    long long exp = 1;
    if (pos < tok.size()) {
      if (tok[pos] != '^')
        throw std::invalid_argument("type spec: unexpected '" + tok.substr(pos) + "' in '" + tok + "'");
      ++pos;
      exp = parse_number(tok, pos);
      if (pos != tok.size())
        throw std::invalid_argument("type spec: trailing characters in '" + tok + "'");
    }
    if (base < 1) throw std::invalid_argument("type spec: base must be >= 1");
    if (base > 100'000) throw std::invalid_argument("type spec: base too large");
    if (static_cast<std::size_t>(base) > counts.size()) {
      counts.resize(static_cast<std::size_t>(base), 0);
      seen.resize(static_cast<std::size_t>(base), false);
    }
    if (seen[static_cast<std::size_t>(base - 1)])
      throw std::invalid_argument("type spec: duplicate base " + std::to_string(base));
    seen[static_cast<std::size_t>(base - 1)] = true;
    counts[static_cast<std::size_t>(base - 1)] = exp;
  }
  return PartitionType(std::move(counts));
}

std::string format_type_spec(const PartitionType& t) {
  std::string out;
  for (long long i = 1; i <= t.max_part(); ++i) {
    if (t.k(i) == 0) continue;
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(i) + "^" + std::to_string(t.k(i));
  }
  return out;
}

}  // namespace apkit

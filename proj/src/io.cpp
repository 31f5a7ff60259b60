#include "taureg/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace taureg {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string parent_directory(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string() : path.substr(0, slash);
}

Rational json_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("matrix entries must be integers or rational strings, got " + v.dump());
}

std::vector<ModuleTerm> parse_module_expression(std::string_view text) {
  std::vector<ModuleTerm> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("module expression, column " + std::to_string(i + 1) + ": " + what);
  };
  skip();
  if (i < text.size() && text[i] == '0') {
    ++i;
    skip();
    if (i != text.size()) fail("unexpected text after 0");
    return out;
  }
  while (true) {
    skip();
    ModuleTerm t;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      int k = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) k = 10 * k + (text[i++] - '0');
      skip();
      if (i >= text.size() || text[i] != '*') fail("expected '*' after a multiplicity");
      ++i;
      skip();
      t.multiplicity = k;
    }
    if (i >= text.size() || (text[i] != 'P' && text[i] != 'I' && text[i] != 'S')) fail("expected P, I or S");
    t.kind = text[i++];
    skip();
    if (i >= text.size() || text[i] != '(') fail("expected '('");
    ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ')') ++i;
    if (i >= text.size()) fail("missing ')'");
    std::string v(text.substr(start, i - start));
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.erase(v.begin());
    if (v.empty()) fail("empty vertex");
    t.vertex = v;
    ++i;
    out.push_back(t);
    skip();
    if (i == text.size()) break;
    if (text[i] != '+') fail("expected '+'");
    ++i;
  }
  return out;
}

std::vector<RelationPoly> parse_ideal_file(const Quiver& q, std::string_view text) {
  std::vector<RelationPoly> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back(parse_combination(q, line, 0, line_no));
    if (end == text.size()) break;
  }
  return out;
}

}  // namespace taureg

#include "taureg/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace taureg {

std::optional<int> Quiver::vertex_index(std::string_view label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Quiver::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<Path> concatenate(const Path& x, const Path& y) {
  if (y.target != x.source) return std::nullopt;
  Path p{y.source, x.target, x.arrows};
  p.arrows.insert(p.arrows.end(), y.arrows.begin(), y.arrows.end());
  return p;
}

Path reversed(const Path& p) {
  Path r{p.target, p.source, p.arrows};
  std::reverse(r.arrows.begin(), r.arrows.end());
  return r;
}

std::string path_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e(" + q.vertices[static_cast<std::size_t>(p.source)] + ")";
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[static_cast<std::size_t>(p.arrows[i])].name;
  }
  return s;
}

std::string relation_string(const Quiver& q, const RelationPoly& r) {
  std::string s;
  bool first = true;
  for (const auto& t : r.terms) {
    Rational c = t.coefficient;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1) s += c.str() + " ";
    s += path_string(q, t.path);
    first = false;
  }
  return s.empty() ? "0" : s;
}

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Cursor over a single line; columns are 1-based and refer to the original line.
class Cursor {
 public:
  Cursor(std::string_view text, int line, int column_offset = 0)
      : text_(text), line_(line), offset_(column_offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  /// Column of the next token.
  int column() {
    skip_space();
    return offset_ + static_cast<int>(pos_) + 1;
  }
  int line() const { return line_; }

  std::string identifier() {
    skip_space();
    const int col = column();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail(ParseError::Kind::Syntax, col, "expected identifier");
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Token made of non-space characters excluding the given delimiters.
  std::string word(std::string_view delims = "") {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           delims.find(text_[pos_]) == std::string_view::npos)
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::optional<std::string> rational_literal() {
    skip_space();
    std::size_t p = pos_;
    if (p >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[p]))) return std::nullopt;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    if (p < text_.size() && text_[p] == '/') {
      ++p;
      if (p >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[p])))
        fail(ParseError::Kind::Syntax, offset_ + static_cast<int>(p) + 1, "expected denominator");
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    }
    std::string lit(text_.substr(pos_, p - pos_));
    pos_ = p;
    return lit;
  }

  [[noreturn]] void fail(ParseError::Kind kind, int col, const std::string& msg) const {
    throw ParseError(kind, line_, col, msg);
  }

 private:
  std::string_view text_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

RelationPoly parse_terms(const Quiver& q, Cursor& cur, int min_length, bool before) {
  RelationPoly rel;
  bool first = true;
  int first_col = cur.column();
  while (!cur.done()) {
    Rational sign = 1;
    const int term_col = cur.column();
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      sign = -1;
    } else if (!first) {
      cur.fail(ParseError::Kind::Syntax, cur.column(), "expected '+' or '-' between terms");
    }
    Rational coeff = 1;
    if (auto lit = cur.rational_literal()) {
      coeff = parse_rational(*lit);
      cur.accept('*');
    }
    Path path;
    const int path_col = cur.column();
    std::vector<int> written;
    std::vector<int> cols;
    bool idempotent = false;
    for (;;) {
      const int col = cur.column();
      std::string name = cur.identifier();
      if (name == "e" && cur.peek() == '(') {
        cur.accept('(');
        std::string label = cur.word(")");
        if (!cur.accept(')')) cur.fail(ParseError::Kind::Syntax, cur.column(), "expected ')'");
        auto v = q.vertex_index(label);
        if (!v) cur.fail(ParseError::Kind::UnknownVertex, col, "unknown vertex '" + label + "'");
        if (!written.empty()) cur.fail(ParseError::Kind::Syntax, col, "trivial path inside a product");
        path = Path::trivial(*v);
        idempotent = true;
        break;
      }
      auto a = q.arrow_index(name);
      if (!a) cur.fail(ParseError::Kind::UnknownArrow, col, "unknown arrow '" + name + "'");
      written.push_back(*a);
      cols.push_back(col);
      if (!cur.accept('*')) break;
    }
    if (!idempotent) {
      if (before) {
        std::reverse(written.begin(), written.end());
        std::reverse(cols.begin(), cols.end());
      }
      for (std::size_t i = 0; i + 1 < written.size(); ++i) {
        const Arrow& outer = q.arrows[static_cast<std::size_t>(written[i])];
        const Arrow& inner = q.arrows[static_cast<std::size_t>(written[i + 1])];
        if (inner.target != outer.source) {
          cur.fail(ParseError::Kind::NonComposable, cols[i],
                   "path not composable: '" + outer.name + "' cannot follow '" + inner.name + "'");
        }
      }
      path.arrows = written;
      path.source = q.arrows[static_cast<std::size_t>(written.back())].source;
      path.target = q.arrows[static_cast<std::size_t>(written.front())].target;
    }
    if (path.length() < min_length) {
      cur.fail(ParseError::Kind::TooShort, path_col,
               "path of length " + std::to_string(path.length()) + " is shorter than " + std::to_string(min_length));
    }
    if (!rel.terms.empty() && (path.source != rel.source() || path.target != rel.target())) {
      cur.fail(ParseError::Kind::NonParallel, term_col, "terms are not parallel (different source or target)");
    }
    rel.terms.push_back({sign * coeff, path});
    first = false;
  }
  if (rel.terms.empty()) cur.fail(ParseError::Kind::Syntax, first_col, "empty combination");
  // Merge repeated paths.
  RelationPoly merged;
  for (const auto& t : rel.terms) {
    auto it = std::find_if(merged.terms.begin(), merged.terms.end(),
                           [&](const RelationTerm& m) { return m.path == t.path; });
    if (it == merged.terms.end()) merged.terms.push_back(t);
    else it->coefficient += t.coefficient;
  }
  std::erase_if(merged.terms, [](const RelationTerm& t) { return t.coefficient.is_zero(); });
  return merged;
}

}  // namespace

RelationPoly parse_combination(const Quiver& q, std::string_view text, int min_length, int line,
                               bool before_convention) {
  Cursor cur(strip_comment(text), line);
  return parse_terms(q, cur, min_length, before_convention);
}

QuiverPresentation parse_quiver(std::string_view text) {
  QuiverPresentation qp;
  bool have_vertices = false;
  bool in_relations = false;
  bool before = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;
    start = end + 1;
    const std::string_view line = strip_comment(raw);
    if (blank(line)) {
      if (end == text.size()) break;
      continue;
    }
    Cursor cur(line, line_no);
    if (in_relations) {
      RelationPoly r = parse_terms(qp.quiver, cur, 2, before);
      if (!r.terms.empty()) qp.relations.push_back(std::move(r));
      if (end == text.size()) break;
      continue;
    }
    if (cur.accept("vertices")) {
      if (!cur.accept(':')) cur.fail(ParseError::Kind::Syntax, cur.column(), "expected ':' after 'vertices'");
      if (have_vertices) cur.fail(ParseError::Kind::Duplicate, 1, "vertices declared twice");
      std::set<std::string> seen;
      while (!cur.done()) {
        const int col = cur.column();
        std::string label = cur.word(",");
        cur.accept(',');
        if (label.empty()) continue;
        if (!seen.insert(label).second) cur.fail(ParseError::Kind::Duplicate, col, "duplicate vertex '" + label + "'");
        qp.quiver.vertices.push_back(label);
      }
      have_vertices = true;
    } else if (cur.accept("convention")) {
      if (!cur.accept(':')) cur.fail(ParseError::Kind::Syntax, cur.column(), "expected ':' after 'convention'");
      const int col = cur.column();
      std::string v = cur.word();
      if (v == "after") before = false;
      else if (v == "before") before = true;
      else cur.fail(ParseError::Kind::Syntax, col, "convention must be 'after' or 'before'");
    } else if (cur.accept("arrow")) {
      if (!have_vertices) cur.fail(ParseError::Kind::Syntax, 1, "arrow declared before 'vertices:'");
      const int name_col = cur.column();
      std::string name = cur.identifier();
      if (name == "e") cur.fail(ParseError::Kind::Syntax, name_col, "'e' is reserved for trivial paths");
      if (qp.quiver.arrow_index(name)) cur.fail(ParseError::Kind::Duplicate, name_col, "duplicate arrow '" + name + "'");
      if (!cur.accept(':')) cur.fail(ParseError::Kind::Syntax, cur.column(), "expected ':' after arrow name");
      const int s_col = cur.column();
      std::string s = cur.word("-");
      if (!cur.accept("->")) cur.fail(ParseError::Kind::Syntax, cur.column(), "expected '->'");
      const int t_col = cur.column();
      std::string t = cur.word();
      auto sv = qp.quiver.vertex_index(s);
      if (!sv) cur.fail(ParseError::Kind::UnknownVertex, s_col, "unknown vertex '" + s + "'");
      auto tv = qp.quiver.vertex_index(t);
      if (!tv) cur.fail(ParseError::Kind::UnknownVertex, t_col, "unknown vertex '" + t + "'");
      if (!cur.done()) cur.fail(ParseError::Kind::Syntax, cur.column(), "unexpected text after arrow");
      qp.quiver.arrows.push_back({name, *sv, *tv});
    } else if (cur.accept("relations")) {
      if (!cur.accept(':')) cur.fail(ParseError::Kind::Syntax, cur.column(), "expected ':' after 'relations'");
      in_relations = true;
      if (!cur.done()) {
        RelationPoly r = parse_terms(qp.quiver, cur, 2, before);
        if (!r.terms.empty()) qp.relations.push_back(std::move(r));
      }
    } else {
      cur.fail(ParseError::Kind::Syntax, cur.column(), "expected 'vertices:', 'arrow', 'convention:' or 'relations:'");
    }
    if (end == text.size()) break;
  }
  if (!have_vertices) throw ParseError(ParseError::Kind::Syntax, line_no, 1, "missing 'vertices:' line");
  return qp;
}

QuiverPresentation load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open quiver file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_quiver(ss.str());
}

std::string format_quiver(const QuiverPresentation& qp) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : qp.quiver.vertices) os << " " << v;
  os << "\n";
  for (const auto& a : qp.quiver.arrows) {
    os << "arrow " << a.name << ": " << qp.quiver.vertices[static_cast<std::size_t>(a.source)] << " -> "
       << qp.quiver.vertices[static_cast<std::size_t>(a.target)] << "\n";
  }
  os << "relations:\n";
  for (const auto& r : qp.relations) os << relation_string(qp.quiver, r) << "\n";
  return os.str();
}

}  // namespace taureg

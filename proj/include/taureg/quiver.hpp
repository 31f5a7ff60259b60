#pragma once

// Quivers, paths and relations, and the line-oriented .qa quiver DSL.
//
//   # comment
//   vertices: 1 2 3
//   arrow a1: 2 -> 1
//   arrow b1: 3 -> 2
//   relations:
//   a1*b1
//   a1*b2 - a2*b1
//   -1/2 a1*b3 + a3*b1
//
// `x*y` is composition "x after y": first y, then x. It is a path from
// source(y) to target(x). An optional `convention: before` line flips this
// for files written in the other order; paths are always stored "after".

#include "taureg/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taureg {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;  ///< labels; the vertex id is the position
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  std::optional<int> vertex_index(std::string_view label) const;
  std::optional<int> arrow_index(std::string_view name) const;
};

/// A path in written order: arrows.front() is applied last. Length-0 paths
/// are the trivial paths e_v (source == target == v).
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  static Path trivial(int v) { return Path{v, v, {}}; }
  static Path of_arrow(const Quiver& q, int a) { return Path{q.arrows[static_cast<std::size_t>(a)].source, q.arrows[static_cast<std::size_t>(a)].target, {a}}; }

  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.target == b.target && a.arrows == b.arrows;
  }
  friend bool operator<(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
  }
};

/// x * y ("x after y"), or nullopt when target(y) != source(x).
std::optional<Path> concatenate(const Path& x, const Path& y);

/// Reversal used by the opposite quiver (arrow ids are kept).
Path reversed(const Path& p);

std::string path_string(const Quiver& q, const Path& p);

struct RelationTerm {
  Rational coefficient;
  Path path;
};

/// Linear combination of parallel paths.
struct RelationPoly {
  std::vector<RelationTerm> terms;
  int source() const { return terms.empty() ? 0 : terms.front().path.source; }
  int target() const { return terms.empty() ? 0 : terms.front().path.target; }
};

std::string relation_string(const Quiver& q, const RelationPoly& r);

struct QuiverPresentation {
  Quiver quiver;
  std::vector<RelationPoly> relations;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownVertex, UnknownArrow, NonComposable, NonParallel, TooShort, Duplicate };

  ParseError(Kind kind, int line, int column, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

QuiverPresentation parse_quiver(std::string_view text);
QuiverPresentation load_quiver_file(const std::string& path);

/// Writes a presentation back in the DSL (always in the "after" convention).
std::string format_quiver(const QuiverPresentation& qp);

/// Parses one linear combination of parallel paths, e.g. "a*b - 2 c*d" or
/// "e(2)" for the trivial path at vertex 2. `min_length` is the shortest
/// allowed path (2 for relations, 0 for ideal generators).
RelationPoly parse_combination(const Quiver& q, std::string_view text, int min_length, int line = 1,
                               bool before_convention = false);

}  // namespace taureg

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hochdef/scalar.hpp"

namespace hochdef {

struct Arrow {
  std::string label;
  std::size_t source;  // 0-based vertex
  std::size_t target;
};

// Finite quiver without oriented cycles. Vertices are 0-based internally and 1-based in files.
class Quiver {
 public:
  // Throws DanglingVertex, DuplicateLabel or CyclicQuiver.
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<std::size_t> find_arrow(std::string_view label) const;

 private:
  std::size_t vertex_count_;
  std::vector<Arrow> arrows_;
};

// Trivial path at `source` when `arrows` is empty.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

// Path from a sequence of arrow indices; throws NonAdmissible when not composable.
Path make_path(const Quiver& q, std::vector<std::size_t> arrows);
// "p3" for the trivial path at vertex 3 (1-based), otherwise labels joined by '*'.
std::string path_label(const Quiver& q, const Path& p);
// Deglex: shorter first, then lexicographic on arrow indices, then endpoints.
bool path_less(const Path& a, const Path& b);

struct RelationTerm {
  Scalar coefficient;
  Path path;
};

// Linear combination of parallel paths of length >= 2.
struct Relation {
  std::vector<RelationTerm> terms;
};

// Throws NonAdmissible unless all terms are parallel paths of length >= 2.
void validate_relation(const Relation& r);

struct QuiverPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
};

// Line-oriented text format:
//   vertices <n>
//   arrow <label> <src> <tgt>
//   rel <term> (+|- <term>)*     term = [coef*]label*label*...
// '#' starts a comment. Errors carry line and column.
QuiverPresentation parse_quiver(std::string_view text);
QuiverPresentation read_quiver_file(const std::string& path);

}  // namespace hochdef

#include "hochdef/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hochdef/error.hpp"

namespace hochdef {
namespace {

bool is_reserved_label(std::string_view label) {
  return label.size() >= 2 && label[0] == 'p' &&
         std::all_of(label.begin() + 1, label.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool has_cycle(std::size_t n, const std::vector<Arrow>& arrows) {
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& a : arrows) {
    out[a.source].push_back(a.target);
    ++indegree[a.target];
  }
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    ++seen;
    for (std::size_t w : out[v])
      if (--indegree[w] == 0) stack.push_back(w);
  }
  return seen != n;
}

bool is_label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Cursor over one line; columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_ws() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= line_.size();
  }
  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }
  void advance() { ++pos_; }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& message, ErrorKind kind = ErrorKind::Syntax) const {
    throw ParseError(kind, line_no_, column(), message);
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    if (start == pos_) fail("unexpected end of line");
    return std::string(line_.substr(start, pos_ - start));
  }

  std::string label() {
    skip_ws();
    if (!is_label_start(peek())) fail("expected an arrow label");
    const std::size_t start = pos_;
    while (pos_ < line_.size() && is_label_char(line_[pos_])) ++pos_;
    return std::string(line_.substr(start, pos_ - start));
  }

  Scalar rational() {
    skip_ws();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed rational coefficient");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return Scalar::parse(line_.substr(start, pos_ - start));
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  std::size_t count(const std::string& what) {
    const std::size_t col = column() + 1;
    const std::string w = word();
    if (!std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        w.size() > 9) {
      throw ParseError(ErrorKind::Syntax, line_no_, col, "expected a positive integer for " + what);
    }
    return static_cast<std::size_t>(std::stoul(w));
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  std::set<std::string> labels;
  for (const auto& a : arrows_) {
    if (a.source >= vertex_count_ || a.target >= vertex_count_) {
      throw Error(ErrorKind::DanglingVertex, "arrow " + a.label + " refers to a missing vertex");
    }
    if (is_reserved_label(a.label)) {
      throw Error(ErrorKind::DuplicateLabel, "arrow label " + a.label + " clashes with an idempotent label");
    }
    if (!labels.insert(a.label).second) throw Error(ErrorKind::DuplicateLabel, "duplicate arrow label " + a.label);
  }
  if (has_cycle(vertex_count_, arrows_)) throw Error(ErrorKind::CyclicQuiver, "quiver has an oriented cycle");
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return i;
  return std::nullopt;
}

Path make_path(const Quiver& q, std::vector<std::size_t> arrows) {
  if (arrows.empty()) throw Error(ErrorKind::NonAdmissible, "empty arrow sequence");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (q.arrows()[arrows[i]].target != q.arrows()[arrows[i + 1]].source) {
      throw Error(ErrorKind::NonAdmissible, "arrows " + q.arrows()[arrows[i]].label + " and " +
                                                q.arrows()[arrows[i + 1]].label + " are not composable");
    }
  }
  Path p;
  p.source = q.arrows()[arrows.front()].source;
  p.target = q.arrows()[arrows.back()].target;
  p.arrows = std::move(arrows);
  return p;
}

std::string path_label(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "p" + std::to_string(p.source + 1);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i > 0) out += '*';
    out += q.arrows()[p.arrows[i]].label;
  }
  return out;
}

bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return std::pair(a.source, a.target) < std::pair(b.source, b.target);
}

void validate_relation(const Relation& r) {
  for (const auto& t : r.terms) {
    if (t.path.length() < 2) throw Error(ErrorKind::NonAdmissible, "relation term of length < 2");
    if (t.path.source != r.terms.front().path.source || t.path.target != r.terms.front().path.target) {
      throw Error(ErrorKind::NonAdmissible, "relation terms are not parallel");
    }
  }
}

QuiverPresentation parse_quiver(std::string_view text) {
  std::optional<std::size_t> vertices;
  std::vector<Arrow> arrows;
  std::map<std::string, std::size_t> arrow_index;
  struct PendingRelation {
    std::size_t line;
    Relation relation;
  };
  std::vector<PendingRelation> relations;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineCursor cur(line, line_no);
    if (cur.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t keyword_col = cur.column();
    const std::string keyword = cur.word();
    if (keyword == "vertices") {
      if (vertices) throw ParseError(ErrorKind::Syntax, line_no, keyword_col, "vertex count given twice");
      vertices = cur.count("vertex count");
    } else if (keyword == "arrow") {
      if (!vertices) throw ParseError(ErrorKind::Syntax, line_no, keyword_col, "arrow before vertices line");
      const std::size_t label_col = cur.column() + 1;
      const std::string label = cur.label();
      if (cur.peek() != '\0' && !std::isspace(static_cast<unsigned char>(cur.peek()))) {
        cur.fail("invalid character in arrow label");
      }
      if (is_reserved_label(label)) {
        throw ParseError(ErrorKind::DuplicateLabel, line_no, label_col, "label " + label + " is reserved for idempotents");
      }
      if (arrow_index.count(label)) {
        throw ParseError(ErrorKind::DuplicateLabel, line_no, label_col, "duplicate arrow label " + label);
      }
      cur.skip_ws();
      const std::size_t src_col = cur.column();
      const std::size_t src = cur.count("source vertex");
      cur.skip_ws();
      const std::size_t tgt_col = cur.column();
      const std::size_t tgt = cur.count("target vertex");
      if (src == 0 || src > *vertices) {
        throw ParseError(ErrorKind::DanglingVertex, line_no, src_col, "vertex " + std::to_string(src) + " does not exist");
      }
      if (tgt == 0 || tgt > *vertices) {
        throw ParseError(ErrorKind::DanglingVertex, line_no, tgt_col, "vertex " + std::to_string(tgt) + " does not exist");
      }
      if (!cur.at_end()) cur.fail("trailing input after arrow");
      arrow_index.emplace(label, arrows.size());
      arrows.push_back({label, src - 1, tgt - 1});
    } else if (keyword == "rel") {
      if (!vertices) throw ParseError(ErrorKind::Syntax, line_no, keyword_col, "rel before vertices line");
      std::map<std::vector<std::size_t>, Scalar> terms;
      bool first = true;
      while (true) {
        cur.skip_ws();
        Scalar sign(1);
        if (cur.peek() == '+' || cur.peek() == '-') {
          if (cur.peek() == '-') sign = Scalar(-1);
          cur.advance();
        } else if (!first) {
          cur.fail("expected '+' or '-' between terms");
        }
        first = false;
        cur.skip_ws();
        const std::size_t term_col = cur.column();
        Scalar coef(1);
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
          coef = cur.rational();
          cur.skip_ws();
          if (cur.peek() != '*') cur.fail("expected '*' after coefficient");
          cur.advance();
        }
        std::vector<std::size_t> seq;
        while (true) {
          cur.skip_ws();
          const std::size_t col = cur.column();
          const std::string label = cur.label();
          auto it = arrow_index.find(label);
          if (it == arrow_index.end()) throw ParseError(ErrorKind::Syntax, line_no, col, "unknown arrow " + label);
          seq.push_back(it->second);
          cur.skip_ws();
          if (cur.peek() != '*') break;
          cur.advance();
        }
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
          if (arrows[seq[i]].target != arrows[seq[i + 1]].source) {
            throw ParseError(ErrorKind::NonAdmissible, line_no, term_col, "term is not a composable path");
          }
        }
        if (seq.size() < 2) {
          throw ParseError(ErrorKind::NonAdmissible, line_no, term_col, "relation terms must have length >= 2");
        }
        terms[seq] += sign * coef;
        if (cur.at_end()) break;
      }
      Relation rel;
      for (auto& [seq, c] : terms) {
        if (c.is_zero()) continue;
        Path p;
        p.source = arrows[seq.front()].source;
        p.target = arrows[seq.back()].target;
        p.arrows = seq;
        rel.terms.push_back({c, std::move(p)});
      }
      try {
        validate_relation(rel);
      } catch (const Error& e) {
        throw ParseError(e.kind(), line_no, keyword_col, e.what());
      }
      if (!rel.terms.empty()) relations.push_back({line_no, std::move(rel)});
    } else {
      throw ParseError(ErrorKind::Syntax, line_no, keyword_col, "unknown keyword '" + keyword + "'");
    }
    if (end == text.size()) break;
  }
  if (!vertices) throw ParseError(ErrorKind::Syntax, line_no, 1, "missing vertices line");

  QuiverPresentation pres{Quiver(*vertices, std::move(arrows)), {}};
  for (auto& r : relations) pres.relations.push_back(std::move(r.relation));
  return pres;
}

QuiverPresentation read_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open quiver file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

}  // namespace hochdef

#include "fmell/literal.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "fmell/errors.hpp"

namespace fmell {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'" + found());
    }
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer" + found());
    }
    std::string_view token = text_.substr(start, pos_ - start);
    if (token.front() == '+') {
      token.remove_prefix(1);
    }
    return Integer(std::string(token));
  }

  std::string label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) {
      fail("expected a label" + found());
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void finish() {
    if (!at_end()) {
      fail("unexpected trailing input" + found());
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(1, pos_ + 1, what); }

  std::size_t position() const { return pos_; }

 private:
  std::string found() const {
    if (pos_ >= text_.size()) {
      return ", found end of input";
    }
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t to_degree(const Integer& x, const Cursor& cur) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    cur.fail("degree out of range");
  }
  return static_cast<std::int64_t>(x);
}

// Parses one term and adds it to `out`. Domain errors from atom validation are
// re-raised as parse errors at the term's position.
void parse_term(Cursor& cur, GradedObject& out) {
  cur.skip_space();
  const std::size_t start = cur.position();
  Integer count = 1;
  if (cur.peek() != '(') {
    count = cur.integer();
    if (count < 1) {
      cur.fail("count must be >= 1");
    }
    cur.expect('*');
  }
  cur.expect('(');
  Integer r = cur.integer();
  cur.expect(',');
  Integer d = cur.integer();
  std::string label;
  if (cur.accept(',')) {
    label = cur.label();
  }
  cur.expect(')');
  std::int64_t degree = 0;
  if (cur.accept('[')) {
    degree = to_degree(cur.integer(), cur);
    cur.expect(']');
  }
  try {
    out.add(StableAtom(CurveClass{std::move(r), std::move(d)}, std::move(label)), degree,
            count);
  } catch (const DomainError& e) {
    throw ParseError(1, start + 1, e.what());
  }
}

std::vector<Integer> integer_list(Cursor& cur, char sep) {
  std::vector<Integer> out;
  out.push_back(cur.integer());
  while (cur.accept(sep)) {
    out.push_back(cur.integer());
  }
  return out;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  Cursor cur(text);
  Integer x = cur.integer();
  cur.finish();
  return x;
}

GradedObject parse_object(std::string_view text) {
  Cursor cur(text);
  GradedObject out;
  if (cur.peek() == '0') {
    cur.integer();
    cur.finish();
    return out;
  }
  parse_term(cur, out);
  while (cur.accept('+')) {
    parse_term(cur, out);
  }
  cur.finish();
  return out;
}

std::string render_atom(const StableAtom& x) {
  std::string s = "(" + to_string(x.rank()) + "," + to_string(x.degree());
  if (!x.label().empty()) {
    s += "," + x.label();
  }
  return s + ")";
}

std::string render_object(const GradedObject& x) {
  if (x.empty()) {
    return "0";
  }
  std::string s;
  for (const auto& [degree, piece] : x.pieces()) {
    for (const auto& [atom, count] : piece) {
      if (!s.empty()) {
        s += " + ";
      }
      if (count != 1) {
        s += to_string(count) + "*";
      }
      s += render_atom(atom) + "[" + std::to_string(degree) + "]";
    }
  }
  return s;
}

StableAtom parse_atom(std::string_view text) {
  const GradedObject x = parse_object(text);
  if (x.pieces().size() != 1 || x.pieces().begin()->first != 0) {
    throw ParseError(1, 1, "expected a single atom in degree 0");
  }
  const auto& piece = x.pieces().begin()->second;
  if (piece.size() != 1 || piece.begin()->second != 1) {
    throw ParseError(1, 1, "expected a single atom with multiplicity 1");
  }
  return piece.begin()->first;
}

FMMatrix parse_matrix(std::string_view text, std::optional<Integer> lambda) {
  Cursor cur(text);
  std::vector<Integer> v = integer_list(cur, ',');
  cur.finish();
  if (v.size() != 4) {
    throw ParseError(1, 1, "matrix needs 4 entries c,a,d,b, got " + std::to_string(v.size()));
  }
  return FMMatrix(v[0], v[1], v[2], v[3], std::move(lambda));
}

std::string render_matrix(const FMMatrix& m) {
  return to_string(m.c()) + "," + to_string(m.a()) + "," + to_string(m.d()) + "," +
         to_string(m.b());
}

VectorZ parse_vector(std::string_view text) {
  Cursor cur(text);
  std::vector<Integer> v = integer_list(cur, ',');
  cur.finish();
  VectorZ out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = v[i];
  }
  return out;
}

std::string render_vector(const VectorZ& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) {
      s += ",";
    }
    s += to_string(v(i));
  }
  return s;
}

SurfaceClass parse_surface_class(std::string_view text) {
  Cursor cur(text);
  SurfaceClass out;
  out.r = cur.integer();
  cur.expect(';');
  std::vector<Integer> c1 = integer_list(cur, ',');
  cur.expect(';');
  out.c2 = cur.integer();
  cur.finish();
  out.c1.resize(static_cast<Eigen::Index>(c1.size()));
  for (std::size_t i = 0; i < c1.size(); ++i) {
    out.c1(static_cast<Eigen::Index>(i)) = c1[i];
  }
  return out;
}

std::string render_surface_class(const SurfaceClass& x) {
  return to_string(x.r) + ";" + render_vector(x.c1) + ";" + to_string(x.c2);
}

std::string render_profile(const ExtProfile& p) {
  std::string s = "{";
  bool first = true;
  for (const auto& [i, dim] : p) {
    if (!first) {
      s += ",";
    }
    first = false;
    s += std::to_string(i) + ":" + to_string(dim);
  }
  return s + "}";
}

}  // namespace fmell

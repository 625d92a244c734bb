#include "fmell/geometry_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "fmell/errors.hpp"

namespace fmell {

namespace {

constexpr std::string_view kRational = R"(# Rational elliptic surface with a section, basis (sigma, f).
rank = 2
gram = [[-1, 1], [1, 0]]
f = [0, 1]
K = [0, -1]
chiO = 1
q = 0
)";

constexpr std::string_view kK3Bisection = R"(# Elliptic K3 surface with a rational bisection and no section, basis (D, f).
rank = 2
gram = [[-2, 2], [2, 0]]
f = [0, 1]
K = [0, 0]
chiO = 2
q = 0
)";

// A parsed value: an integer leaf or a list.
struct Value {
  std::optional<Integer> leaf;
  std::vector<Value> items;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::map<std::string, Value> document() {
    std::map<std::string, Value> out;
    while (true) {
      skip_blank_lines();
      if (pos_ >= text_.size()) {
        break;
      }
      const std::size_t key_line = line_, key_col = col_;
      std::string key = identifier();
      skip_inline_space();
      expect('=');
      Value v = value();
      skip_inline_space();
      if (pos_ < text_.size() && text_[pos_] == '#') {
        skip_comment();
      }
      if (pos_ < text_.size() && text_[pos_] != '\n') {
        fail("expected end of line");
      }
      if (out.count(key) != 0) {
        throw ParseError(key_line, key_col, "duplicate key '" + key + "'");
      }
      out.emplace(std::move(key), std::move(v));
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, col_, what);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_comment() {
    while (pos_ < text_.size() && text_[pos_] != '\n') {
      advance();
    }
  }

  void skip_inline_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      advance();
    }
  }

  // Whitespace, newlines and comments.
  void skip_blank_lines() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        skip_comment();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    advance();
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      advance();
    }
    if (pos_ == start) {
      fail("expected a key");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Value value() {
    skip_inline_space();
    Value v;
    v.line = line_;
    v.column = col_;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      advance();
      skip_blank_lines();
      if (pos_ < text_.size() && text_[pos_] == ']') {
        advance();
        return v;
      }
      while (true) {
        v.items.push_back(value());
        skip_blank_lines();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          advance();
          skip_blank_lines();
          if (pos_ < text_.size() && text_[pos_] == ']') {  // trailing comma
            advance();
            return v;
          }
          continue;
        }
        expect(']');
        return v;
      }
    }
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      advance();
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
    if (pos_ == digits) {
      fail("expected an integer or '['");
    }
    std::string token(text_.substr(start, pos_ - start));
    if (token.front() == '+') {
      token.erase(0, 1);
    }
    v.leaf = Integer(token);
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

const Value& require(const std::map<std::string, Value>& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(1, 1, "missing key '" + key + "'");
  }
  return it->second;
}

Integer as_integer(const Value& v, const std::string& key) {
  if (!v.leaf) {
    throw ParseError(v.line, v.column, "'" + key + "' must be an integer");
  }
  return *v.leaf;
}

VectorZ as_vector(const Value& v, const std::string& key) {
  if (v.leaf) {
    throw ParseError(v.line, v.column, "'" + key + "' must be an array of integers");
  }
  VectorZ out(static_cast<Eigen::Index>(v.items.size()));
  for (std::size_t i = 0; i < v.items.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = as_integer(v.items[i], key);
  }
  return out;
}

MatrixZ as_matrix(const Value& v, const std::string& key) {
  if (v.leaf || v.items.empty()) {
    throw ParseError(v.line, v.column, "'" + key + "' must be a nonempty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(v.items.size());
  MatrixZ out;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const VectorZ row = as_vector(v.items[static_cast<std::size_t>(i)], key);
    if (i == 0) {
      out.resize(rows, row.size());
    } else if (row.size() != out.cols()) {
      const Value& bad = v.items[static_cast<std::size_t>(i)];
      throw ParseError(bad.line, bad.column, "'" + key + "' rows have unequal lengths");
    }
    out.row(i) = row.transpose();
  }
  return out;
}

}  // namespace

SurfaceGeometry parse_geometry(std::string_view text) {
  const std::map<std::string, Value> doc = Reader(text).document();
  static const char* const kKeys[] = {"rank", "gram", "f", "K", "chiO", "q"};
  for (const auto& [key, v] : doc) {
    if (key == "lambdaX") {
      throw ParseError(v.line, v.column, "'lambdaX' is derived from gram and f, not stored");
    }
    bool known = false;
    for (const char* k : kKeys) {
      known = known || key == k;
    }
    if (!known) {
      throw ParseError(v.line, v.column, "unknown key '" + key + "'");
    }
  }
  const Integer rank = as_integer(require(doc, "rank"), "rank");
  MatrixZ gram = as_matrix(require(doc, "gram"), "gram");
  if (rank <= 0 || rank != gram.rows()) {
    throw DomainError("rank matches gram", "rank = " + to_string(rank) + ", gram has " +
                                               std::to_string(gram.rows()) + " rows");
  }
  return SurfaceGeometry(std::move(gram), as_vector(require(doc, "f"), "f"),
                         as_vector(require(doc, "K"), "K"),
                         as_integer(require(doc, "chiO"), "chiO"),
                         as_integer(require(doc, "q"), "q"));
}

SurfaceGeometry read_geometry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("geometry file readable", "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_geometry(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.detail(), path);
  }
}

std::vector<std::string> geometry_preset_names() { return {"rational", "k3-bisection"}; }

std::string_view geometry_preset_text(std::string_view name) {
  if (name == "rational") {
    return kRational;
  }
  if (name == "k3-bisection") {
    return kK3Bisection;
  }
  throw DomainError("known geometry preset", "no preset named '" + std::string(name) + "'");
}

SurfaceGeometry load_geometry(const std::string& source) {
  constexpr std::string_view prefix = "preset:";
  if (source.rfind(prefix, 0) == 0) {
    return parse_geometry(geometry_preset_text(std::string_view(source).substr(prefix.size())));
  }
  return read_geometry_file(source);
}

}  // namespace fmell

#include "cohn/io.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "cohn/error.hpp"

namespace cohn {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& message, json detail = json::object()) {
  detail["message"] = message;
  fail(ErrorCode::ParseError, message, std::move(detail));
}

[[noreturn]] void validation_fail(const Error& cause) {
  json detail = cause.detail();
  detail["cause"] = std::string(error_code_name(cause.code()));
  detail["message"] = cause.what();
  fail(ErrorCode::ValidationError, std::string("document does not describe a valid module: ") + cause.what(),
       std::move(detail));
}

[[noreturn]] void shape_fail(ErrorCode cause, const std::string& message) {
  validation_fail(Error(cause, message));
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Scalar parse_scalar_value(Field f, const json& v, const std::string& where) {
  if (!v.is_string()) parse_fail(where + ": scalars must be JSON strings", {{"at", where}});
  try {
    return Scalar::parse(f, v.get<std::string>());
  } catch (const Error& e) {
    parse_fail(where + ": " + e.what(), {{"at", where}});
  }
}

std::size_t parse_size(const json& v, const char* key) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    parse_fail(std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

Vector parse_vector(Field f, const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) parse_fail(where + " must be an array", {{"at", where}});
  if (v.size() != n) shape_fail(ErrorCode::SizeMismatch, where + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  Vector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_scalar_value(f, v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::string scalar_row(const std::vector<Scalar>& row) {
  std::string s = "[";
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) s += ", ";
    s += json(row[j].to_string()).dump();
  }
  return s + "]";
}

std::string matrix_line(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ", ";
    s += scalar_row(std::vector<Scalar>(m.row(i).begin(), m.row(i).end()));
  }
  return s + "]";
}

}  // namespace

ModuleDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    parse_fail(std::string("malformed JSON: ") + e.what(), {{"line", line}, {"column", col}, {"byte", e.byte}});
  }
  if (!root.is_object()) parse_fail("a module document must be a JSON object");
  static const std::set<std::string> known{"field", "n", "d", "matrices", "frame", "name", "description"};
  for (const auto& [key, _] : root.items())
    if (!known.contains(key)) parse_fail("unknown key \"" + key + "\"", {{"key", key}});
  for (const char* key : {"field", "n", "d", "matrices"})
    if (!root.contains(key)) parse_fail(std::string("missing key \"") + key + "\"", {{"key", key}});

  ModuleDocument doc;
  if (!root["field"].is_string()) parse_fail("\"field\" must be a string");
  try {
    doc.field = Field::parse(root["field"].get<std::string>());
  } catch (const Error& e) {
    parse_fail(e.what(), {{"key", "field"}});
  }
  doc.n = parse_size(root["n"], "n");
  doc.d = parse_size(root["d"], "d");
  if (doc.d == 0) shape_fail(ErrorCode::ArityMismatch, "d must be at least 1");
  const json& mats = root["matrices"];
  if (!mats.is_array()) parse_fail("\"matrices\" must be an array");
  if (mats.size() != doc.d)
    shape_fail(ErrorCode::ArityMismatch, "expected " + std::to_string(doc.d) + " matrices, found " + std::to_string(mats.size()));
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const std::string where = "matrices[" + std::to_string(k) + "]";
    if (!mats[k].is_array()) parse_fail(where + " must be an array of rows", {{"at", where}});
    if (mats[k].size() != doc.n)
      shape_fail(ErrorCode::SizeMismatch, where + " has " + std::to_string(mats[k].size()) + " rows, expected " + std::to_string(doc.n));
    Matrix m(doc.field, doc.n, doc.n);
    for (std::size_t i = 0; i < doc.n; ++i) {
      Vector row = parse_vector(doc.field, mats[k][i], doc.n, where + "[" + std::to_string(i) + "]");
      for (std::size_t j = 0; j < doc.n; ++j) m(i, j) = std::move(row[j]);
    }
    doc.matrices.push_back(std::move(m));
  }
  if (root.contains("frame")) {
    const json& fr = root["frame"];
    if (!fr.is_array()) parse_fail("\"frame\" must be an array of vectors");
    std::vector<Vector> frame;
    for (std::size_t j = 0; j < fr.size(); ++j) frame.push_back(parse_vector(doc.field, fr[j], doc.n, "frame[" + std::to_string(j) + "]"));
    doc.frame = std::move(frame);
  }
  for (const char* key : {"name", "description"}) {
    if (!root.contains(key)) continue;
    if (!root[key].is_string()) parse_fail(std::string("\"") + key + "\" must be a string");
    (std::string_view(key) == "name" ? doc.name : doc.description) = root[key].get<std::string>();
  }
  return doc;
}

std::string emit_document(const ModuleDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"field\": " << json(doc.field.name()).dump() << ",\n";
  os << "  \"n\": " << doc.n << ",\n";
  os << "  \"d\": " << doc.d << ",\n";
  os << "  \"matrices\": [\n";
  for (std::size_t k = 0; k < doc.matrices.size(); ++k)
    os << "    " << matrix_line(doc.matrices[k]) << (k + 1 < doc.matrices.size() ? ",\n" : "\n");
  os << "  ]";
  if (doc.frame) {
    os << ",\n  \"frame\": [";
    for (std::size_t j = 0; j < doc.frame->size(); ++j) os << (j ? ", " : "") << scalar_row((*doc.frame)[j]);
    os << "]";
  }
  if (doc.name) os << ",\n  \"name\": " << json(*doc.name).dump();
  if (doc.description) os << ",\n  \"description\": " << json(*doc.description).dump();
  os << "\n}\n";
  return os.str();
}

CommutingTuple document_tuple(const ModuleDocument& doc) {
  try {
    return CommutingTuple::validate(doc.field, doc.n, doc.matrices);
  } catch (const Error& e) {
    validation_fail(e);
  }
}

FramedModule document_framed(const ModuleDocument& doc) {
  if (!doc.frame) shape_fail(ErrorCode::WrongFrameCount, "document has no frame");
  return FramedModule{document_tuple(doc), *doc.frame};
}

ModuleDocument make_document(const CommutingTuple& t) {
  ModuleDocument doc;
  doc.field = t.field();
  doc.n = t.n();
  doc.d = t.d();
  doc.matrices = t.mats();
  return doc;
}

ModuleDocument make_document(const FramedModule& f) {
  ModuleDocument doc = make_document(f.module);
  doc.frame = f.frame;
  return doc;
}

RunConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    parse_fail(std::string("malformed config: ") + e.what(), {{"line", line}, {"column", col}});
  }
  if (!root.is_object()) parse_fail("config must be a JSON object");
  RunConfig cfg;
  auto positive = [&](const char* key) -> std::uint64_t {
    const json& v = root[key];
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
      parse_fail(std::string("config \"") + key + "\" must be a positive integer");
    return v.get<std::uint64_t>();
  };
  for (const auto& [key, value] : root.items()) {
    if (key == "seed") {
      if (!value.is_number_unsigned()) parse_fail("config \"seed\" must be a nonnegative integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "genericity_budget") {
      cfg.genericity_budget = positive("genericity_budget");
    } else if (key == "grid_budget") {
      cfg.grid_budget = positive("grid_budget");
    } else if (key == "census_budget") {
      if (value.is_string()) {
        const std::string s = value.get<std::string>();
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s == std::string(s.size(), '0'))
          parse_fail("config \"census_budget\" must be a positive integer");
        cfg.census_budget = mpz_class(s, 10);
      } else {
        cfg.census_budget = mpz_class(std::to_string(positive("census_budget")), 10);
      }
    } else {
      parse_fail("unknown config key \"" + key + "\"", {{"key", key}});
    }
  }
  return cfg;
}

json config_json(const RunConfig& cfg) {
  return {{"seed", cfg.seed},
          {"genericity_budget", cfg.genericity_budget},
          {"grid_budget", cfg.grid_budget},
          {"census_budget", cfg.census_budget.get_str()}};
}

namespace {

class PolyParser {
 public:
  PolyParser(Field f, std::size_t vars, std::string_view text) : f_(f), vars_(vars), s_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) {
    parse_fail("polynomial '" + std::string(s_) + "': " + what + " at position " + std::to_string(pos_),
               {{"position", pos_}});
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  std::uint32_t exponent() {
    const std::string e = digits();
    if (e.size() > 6) error("exponent too large");
    return static_cast<std::uint32_t>(std::stoul(e));
  }
  MultiPoly power(MultiPoly base, std::uint32_t e) {
    MultiPoly out = MultiPoly::constant(f_, vars_, Scalar::one(f_));
    for (std::uint32_t i = 0; i < e; ++i) out = out * base;
    return out;
  }
  MultiPoly expr() {
    MultiPoly acc(f_, vars_);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    MultiPoly t = term();
    acc = negate ? acc - t : acc + t;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }
  MultiPoly term() {
    MultiPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }
  MultiPoly factor() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    MultiPoly base(f_, vars_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!eat(')')) error("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      if (eat('/')) lit += "/" + digits();
      try {
        base = MultiPoly::constant(f_, vars_, Scalar::parse(f_, lit));
      } catch (const Error& e) {
        error(e.what());
      }
    } else if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      std::size_t index = 0;
      if (c == 'x' && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        const std::string idx = digits();
        index = std::stoul(idx);
        if (index == 0) error("variables are numbered from x1");
        --index;
      } else {
        index = static_cast<std::size_t>(c - 'x');
      }
      if (index >= vars_) error("variable out of range for d = " + std::to_string(vars_));
      base = MultiPoly::variable(f_, vars_, index);
    } else {
      error(std::string("unexpected '") + c + "'");
    }
    if (eat('^')) return power(std::move(base), exponent());
    return base;
  }

  Field f_;
  std::size_t vars_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_multipoly(Field f, std::size_t variables, std::string_view text) {
  return PolyParser(f, variables, text).parse();
}

std::vector<Scalar> parse_scalar_list(Field f, std::string_view text) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(Scalar::parse(f, item));
    start = comma + 1;
  }
  return out;
}

}  // namespace cohn

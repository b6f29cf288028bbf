#include "alexpoly/io.hpp"

#include <fstream>
#include <sstream>

namespace alexpoly {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : s_(text) {}

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }

  void advance() {
    if (eof()) return;
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                      peek() == '\r')) {
      advance();
    }
    if (peek() == '#') {  // comment to end of line
      while (!eof() && peek() != '\n') advance();
      skip_ws();
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, col_, what);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      fail(std::string("expected '") + c + "', found " +
           (eof() ? std::string("end of input")
                  : "'" + std::string(1, peek()) + "'"));
    }
    advance();
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    advance();
    return true;
  }

  std::string ident() {
    skip_ws();
    std::string out;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_' || peek() == '-')) {
      out.push_back(peek());
      advance();
    }
    if (out.empty()) fail("expected an identifier");
    return out;
  }

  Int integer() {
    skip_ws();
    std::string out;
    if (peek() == '-' || peek() == '+') {
      out.push_back(peek());
      advance();
    }
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out.push_back(peek());
      advance();
    }
    if (out.empty() || out == "-" || out == "+") fail("expected an integer");
    return Int(out);
  }

  Rat rational() {
    Int num = integer();
    skip_ws();
    if (peek() == '/') {
      advance();
      Int den = integer();
      if (den == 0) fail("zero denominator");
      Rat r(num);
      r /= Rat(den);
      return r;
    }
    return Rat(num);
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

LaurentPoly parse_poly(Cursor& c) {
  c.expect('[');
  Int lo = c.integer();
  c.expect(';');
  std::vector<Rat> coeffs;
  coeffs.push_back(c.rational());
  while (c.accept(',')) coeffs.push_back(c.rational());
  c.expect(']');
  return LaurentPoly::from_coeffs(lo.get_si(), coeffs);
}

PrimitivePoly canonicalize(Cursor& c, const LaurentPoly& p, const char* field,
                           std::vector<std::string>* warnings) {
  if (p.is_zero()) c.fail(std::string(field) + ": zero polynomial entry");
  auto [prim, unit] = normalize_primitive(p);
  if ((unit.scale != 1 || unit.shift != 0) && warnings) {
    warnings->push_back(std::string(field) + ": normalized " + p.to_literal() +
                        " to " + prim.to_literal());
  }
  return prim;
}

std::vector<std::optional<PrimitivePoly>> parse_poly_list(
    Cursor& c, const char* field, std::vector<std::string>* warnings,
    bool allow_unknown) {
  std::vector<std::optional<PrimitivePoly>> out;
  c.expect('[');
  if (c.accept(']')) return out;
  while (true) {
    c.skip_ws();
    if (c.peek() == '_') {
      if (!allow_unknown) c.fail("unknown entry '_' not allowed here");
      c.advance();
      out.push_back(std::nullopt);
    } else {
      out.push_back(canonicalize(c, parse_poly(c), field, warnings));
    }
    if (c.accept(']')) break;
    c.expect(',');
  }
  return out;
}

std::vector<int> parse_int_list(Cursor& c) {
  std::vector<int> out;
  c.expect('[');
  if (c.accept(']')) return out;
  while (true) {
    out.push_back(static_cast<int>(c.integer().get_si()));
    if (c.accept(']')) break;
    c.expect(',');
  }
  return out;
}

std::vector<std::vector<PrimitivePoly>> parse_module_list(
    Cursor& c, const char* field, std::vector<std::string>* warnings) {
  std::vector<std::vector<PrimitivePoly>> out;
  c.expect('[');
  if (c.accept(']')) return out;
  while (true) {
    c.expect('{');
    std::vector<PrimitivePoly> inv;
    while (true) {
      std::string key = c.ident();
      c.expect(':');
      if (key == "free") {
        Int f = c.integer();
        if (f != 0) c.fail("invariant attachments must be torsion (free: 0)");
      } else if (key == "inv") {
        for (auto& p : parse_poly_list(c, field, warnings, false)) {
          inv.push_back(*p);
        }
      } else {
        c.fail("unknown module field '" + key + "'");
      }
      if (c.accept('}')) break;
      c.expect(',');
    }
    out.push_back(std::move(inv));
    if (c.accept(']')) break;
    c.expect(',');
  }
  return out;
}

struct RawDatum {
  PartialKnotDatum partial;
  std::optional<std::vector<std::vector<PrimitivePoly>>> nu_inv, lambda_inv,
      mu_inv;
  std::optional<std::vector<std::optional<PrimitivePoly>>> sub_a, sub_b, sub_c;
};

RawDatum parse_raw(const std::string& text,
                   std::vector<std::string>* warnings) {
  Cursor c(text);
  RawDatum raw;
  bool have_n = false, have_kind = false, have_lambda = false, have_mu = false,
       have_nu = false;
  while (true) {
    c.skip_ws();
    if (c.eof()) break;
    std::string key = c.ident();
    c.expect(':');
    if (key == "n") {
      raw.partial.n = static_cast<int>(c.integer().get_si());
      have_n = true;
    } else if (key == "kind") {
      std::string k = c.ident();
      auto kind = kind_from_name(k);
      if (!kind) c.fail("unknown kind '" + k + "'");
      raw.partial.kind = *kind;
      have_kind = true;
    } else if (key == "sigma_reduced_betti") {
      raw.partial.sigma_reduced_betti = parse_int_list(c);
    } else if (key == "nu") {
      raw.partial.nu = parse_poly_list(c, "nu", warnings, true);
      have_nu = true;
    } else if (key == "lambda") {
      raw.partial.lambda = parse_poly_list(c, "lambda", warnings, true);
      have_lambda = true;
    } else if (key == "mu") {
      raw.partial.mu = parse_poly_list(c, "mu", warnings, true);
      have_mu = true;
    } else if (key == "sub_a") {
      raw.sub_a = parse_poly_list(c, "sub_a", warnings, false);
    } else if (key == "sub_b") {
      raw.sub_b = parse_poly_list(c, "sub_b", warnings, false);
    } else if (key == "sub_c") {
      raw.sub_c = parse_poly_list(c, "sub_c", warnings, false);
    } else if (key == "nu_inv") {
      raw.nu_inv = parse_module_list(c, "nu_inv", warnings);
    } else if (key == "lambda_inv") {
      raw.lambda_inv = parse_module_list(c, "lambda_inv", warnings);
    } else if (key == "mu_inv") {
      raw.mu_inv = parse_module_list(c, "mu_inv", warnings);
    } else {
      c.fail("unknown field '" + key + "'");
    }
  }
  Cursor tail(text);
  if (!have_n) tail.fail("missing field 'n'");
  if (!have_kind) tail.fail("missing field 'kind'");
  if (!have_lambda) tail.fail("missing field 'lambda'");
  if (!have_mu) tail.fail("missing field 'mu'");
  if (raw.partial.n > 3 && !have_nu) tail.fail("missing field 'nu'");
  return raw;
}

std::vector<PrimitivePoly> require_full(
    const std::vector<std::optional<PrimitivePoly>>& v, const char* field) {
  std::vector<PrimitivePoly> out;
  for (const auto& p : v) {
    if (!p) {
      throw Error(std::string(field) +
                  " contains an unknown entry; run `complete` first");
    }
    out.push_back(*p);
  }
  return out;
}

}  // namespace

KnotDatum parse_datum(const std::string& text,
                      std::vector<std::string>* warnings) {
  RawDatum raw = parse_raw(text, warnings);
  KnotDatum d;
  d.n = raw.partial.n;
  d.kind = raw.partial.kind;
  d.sigma_reduced_betti = raw.partial.sigma_reduced_betti;
  d.nu = require_full(raw.partial.nu, "nu");
  d.lambda = require_full(raw.partial.lambda, "lambda");
  d.mu = require_full(raw.partial.mu, "mu");
  if (raw.sub_a) d.sub_a = require_full(*raw.sub_a, "sub_a");
  if (raw.sub_b) d.sub_b = require_full(*raw.sub_b, "sub_b");
  if (raw.sub_c) d.sub_c = require_full(*raw.sub_c, "sub_c");
  d.nu_inv = raw.nu_inv;
  d.lambda_inv = raw.lambda_inv;
  d.mu_inv = raw.mu_inv;
  d.check_shape();
  return d;
}

PartialKnotDatum parse_partial_datum(const std::string& text,
                                     std::vector<std::string>* warnings) {
  return parse_raw(text, warnings).partial;
}

namespace {

void write_poly_list(std::ostream& os, const char* field,
                     const std::vector<PrimitivePoly>& v) {
  os << field << ": [";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].to_literal();
  }
  os << "]\n";
}

void write_module_list(std::ostream& os, const char* field,
                       const std::vector<std::vector<PrimitivePoly>>& v) {
  os << field << ": [";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << "{free: 0, inv: [";
    for (size_t j = 0; j < v[i].size(); ++j) {
      if (j) os << ", ";
      os << v[i][j].to_literal();
    }
    os << "]}";
  }
  os << "]\n";
}

}  // namespace

std::string serialize_datum(const KnotDatum& d) {
  std::ostringstream os;
  os << "n: " << d.n << "\n";
  os << "kind: " << kind_name(d.kind) << "\n";
  os << "sigma_reduced_betti: [";
  for (size_t i = 0; i < d.sigma_reduced_betti.size(); ++i) {
    if (i) os << ", ";
    os << d.sigma_reduced_betti[i];
  }
  os << "]\n";
  write_poly_list(os, "nu", d.nu);
  write_poly_list(os, "lambda", d.lambda);
  write_poly_list(os, "mu", d.mu);
  if (d.sub_a) write_poly_list(os, "sub_a", *d.sub_a);
  if (d.sub_b) write_poly_list(os, "sub_b", *d.sub_b);
  if (d.sub_c) write_poly_list(os, "sub_c", *d.sub_c);
  if (d.nu_inv) write_module_list(os, "nu_inv", *d.nu_inv);
  if (d.lambda_inv) write_module_list(os, "lambda_inv", *d.lambda_inv);
  if (d.mu_inv) write_module_list(os, "mu_inv", *d.mu_inv);
  return os.str();
}

SphereKnotPolys parse_sphere_polys(const std::string& text,
                                   std::vector<std::string>* warnings) {
  Cursor c(text);
  SphereKnotPolys s;
  bool have_n = false, have_p = false;
  while (true) {
    c.skip_ws();
    if (c.eof()) break;
    std::string key = c.ident();
    c.expect(':');
    if (key == "n") {
      s.n = static_cast<int>(c.integer().get_si());
      have_n = true;
    } else if (key == "p") {
      for (auto& p : parse_poly_list(c, "p", warnings, false)) {
        s.p.push_back(*p);
      }
      have_p = true;
    } else {
      c.fail("unknown field '" + key + "'");
    }
  }
  Cursor tail(text);
  if (!have_n) tail.fail("missing field 'n'");
  if (!have_p) tail.fail("missing field 'p'");
  return s;
}

PrimitivePoly parse_poly_literal(const std::string& text,
                                 std::vector<std::string>* warnings) {
  Cursor c(text);
  PrimitivePoly p = canonicalize(c, parse_poly(c), "poly", warnings);
  c.skip_ws();
  if (!c.eof()) c.fail("trailing input after polynomial literal");
  return p;
}

LaurentPoly parse_laurent_literal(const std::string& text) {
  Cursor c(text);
  LaurentPoly p = parse_poly(c);
  c.skip_ws();
  if (!c.eof()) c.fail("trailing input after polynomial literal");
  return p;
}

IntMatrix parse_int_matrix(const std::string& text) {
  if (text.empty()) return IntMatrix();
  Cursor c(text);
  std::vector<std::vector<Int>> rows;
  std::vector<Int> row;
  row.push_back(c.integer());
  while (true) {
    if (c.accept(',')) {
      row.push_back(c.integer());
    } else if (c.accept(';')) {
      rows.push_back(std::move(row));
      row.clear();
      row.push_back(c.integer());
    } else {
      break;
    }
  }
  rows.push_back(std::move(row));
  c.skip_ws();
  if (!c.eof()) c.fail("trailing input after matrix literal");
  size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw Error("matrix literal is not square");
    }
  }
  IntMatrix m(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return m;
}

GammaMatrix parse_gamma_matrix(const std::string& text) {
  Cursor c(text);
  std::vector<std::vector<LaurentPoly>> rows;
  std::vector<LaurentPoly> row;
  auto entry = [&]() {
    c.skip_ws();
    if (c.peek() == '[') return parse_poly(c);
    return LaurentPoly::constant(c.rational());
  };
  row.push_back(entry());
  while (true) {
    if (c.accept(',')) {
      row.push_back(entry());
    } else if (c.accept(';')) {
      rows.push_back(std::move(row));
      row.clear();
      row.push_back(entry());
    } else {
      break;
    }
  }
  rows.push_back(std::move(row));
  c.skip_ws();
  if (!c.eof()) c.fail("trailing input after matrix literal");
  size_t cols = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error("ragged matrix literal");
  }
  GammaMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < cols; ++j) {
      m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace alexpoly

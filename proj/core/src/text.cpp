#include "ietflip/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ietflip {

std::string scalar_text(const Scalar& s) { return s.str(); }

std::string map_text(const MapClass& f) {
  std::string out;
  bool first = true;
  for (const Branch& b : f.branches()) {
    if (!first) out += " ; ";
    first = false;
    out += '[';
    if (b.dom.is_full()) {
      out += "0,1";
    } else {
      out += scalar_text(b.dom.lo().value());
      out += ',';
      // an arc ending at the wrap point reads better as "1"
      out += b.dom.hi().is_zero() ? "1" : scalar_text(b.dom.hi().value());
    }
    out += ") -> ";
    out += b.eps > 0 ? "+x" : "-x";
    if (!b.t.is_zero()) {
      out += '+';
      out += scalar_text(b.t.value());
    }
  }
  return out;
}

std::string lift_text(const Lift& L) {
  std::string out = map_text(L.map_class());
  for (const auto& [x, y] : L.table()) {
    out += "\n@ ";
    out += scalar_text(x.value());
    out += " -> ";
    out += scalar_text(y.value());
  }
  return out;
}

std::string sided_text(const SidedPoint& p) {
  return scalar_text(p.base.value()) + "^" + (p.side == Side::plus ? "+" : "-");
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  std::pair<std::size_t, std::size_t> line_col(std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    auto [line, col] = line_col(at);
    throw SyntaxError(line, col, what);
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos); }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool try_consume(std::string_view s) {
    skip_ws();
    if (text.substr(pos, s.size()) == s) {
      pos += s.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected an integer", start);
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  }

  mpq_class rational() {
    std::size_t start = pos;
    mpz_class num = integer();
    if (try_consume('/')) {
      std::size_t dpos = pos;
      mpz_class den = integer();
      if (sgn(den) <= 0) fail("denominator must be a positive integer", dpos);
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    (void)start;
    return mpq_class(num);
  }

  Scalar scalar(const FieldSpec& field) {
    mpq_class a = rational();
    std::size_t save = pos;
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      int s = text[pos] == '+' ? 1 : -1;
      std::size_t sign_at = pos;
      ++pos;
      // try `<rat>*sqrt(<m>)`; rewind if it is not there
      skip_ws();
      if (pos < text.size() &&
          (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-' ||
           text[pos] == '+')) {
        mpq_class b;
        bool ok = true;
        std::size_t save2 = pos;
        try {
          b = rational();
        } catch (const SyntaxError&) {
          ok = false;
          pos = save2;
        }
        if (ok && try_consume('*') && try_consume("sqrt(")) {
          std::size_t mpos = pos;
          mpz_class m = integer();
          expect(')');
          if (!m.fits_slong_p() || !is_valid_field_radicand(m.get_si()) || m == 0) {
            fail("sqrt radicand must be a squarefree integer >= 2", mpos);
          }
          long ml = m.get_si();
          if (field.m != ml) {
            throw DomainError(Errc::field_mismatch,
                              "sqrt(" + std::to_string(ml) + ") literal outside the document field");
          }
          return Scalar(a, s > 0 ? b : mpq_class(-b), ml);
        }
      }
      pos = save;
      (void)sign_at;
    }
    return Scalar(a);
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  Cursor c{text};
  Scalar s = c.scalar(field);
  if (!c.at_end()) c.fail("trailing input after scalar");
  return s;
}

CirclePoint parse_point(std::string_view text, const FieldSpec& field) {
  return CirclePoint(parse_scalar(text, field));
}

namespace {

Branch parse_piece(Cursor& c, const FieldSpec& field) {
  c.expect('[');
  CirclePoint lo(c.scalar(field));
  c.expect(',');
  CirclePoint hi(c.scalar(field));
  c.expect(')');
  if (!c.try_consume("->")) c.fail("expected '->'");
  int eps;
  if (c.try_consume('+')) {
    eps = +1;
  } else if (c.try_consume('-')) {
    eps = -1;
  } else {
    c.fail("expected '+x' or '-x'");
  }
  c.expect('x');
  CirclePoint t;
  c.skip_ws();
  if (c.pos < c.text.size() && (c.text[c.pos] == '+' || c.text[c.pos] == '-')) {
    int s = c.text[c.pos] == '+' ? 1 : -1;
    ++c.pos;
    Scalar v = c.scalar(field);
    t = CirclePoint(s > 0 ? v : -v);
  }
  Interval dom = lo == hi ? Interval::full_circle() : Interval::arc(lo, hi);
  return Branch{dom, eps, t};
}

}  // namespace

MapClass parse_map(std::string_view text, const FieldSpec& field) {
  Cursor c{text};
  std::vector<Branch> bs;
  bs.push_back(parse_piece(c, field));
  while (c.try_consume(';')) bs.push_back(parse_piece(c, field));
  if (!c.at_end()) c.fail("trailing input after map");
  return MapClass::from_branches(std::move(bs));
}

namespace {

// splits off "@ x -> y" table lines
std::pair<std::string_view, std::vector<std::string_view>> split_lift_lines(
    std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  std::string_view map_line;
  std::vector<std::string_view> at_lines;
  for (std::string_view line : lines) {
    std::size_t i = line.find_first_not_of(" \t");
    if (i == std::string_view::npos) continue;
    if (line[i] == '@') {
      at_lines.push_back(line.substr(i + 1));
    } else if (map_line.empty()) {
      map_line = line;
    } else {
      throw SyntaxError(1, 1, "a lift has one map line followed by '@' lines");
    }
  }
  return {map_line, at_lines};
}

std::pair<CirclePoint, CirclePoint> parse_table_entry(std::string_view text,
                                                      const FieldSpec& field) {
  Cursor c{text};
  CirclePoint x(c.scalar(field));
  if (!c.try_consume("->")) c.fail("expected '->' in table line");
  CirclePoint y(c.scalar(field));
  if (!c.at_end()) c.fail("trailing input after table line");
  return {x, y};
}

}  // namespace

Lift parse_lift(std::string_view text, const FieldSpec& field) {
  auto [map_line, at_lines] = split_lift_lines(text);
  if (map_line.empty()) throw SyntaxError(1, 1, "empty lift text");
  MapClass cls = parse_map(map_line, field);
  std::map<CirclePoint, CirclePoint> table;
  for (std::string_view line : at_lines) {
    auto [x, y] = parse_table_entry(line, field);
    if (!table.emplace(x, y).second) {
      throw DomainError(Errc::not_bijective, "duplicate table point " + scalar_text(x.value()));
    }
  }
  return Lift::make(std::move(cls), std::move(table));
}

SidedPoint parse_sided(std::string_view text, const FieldSpec& field) {
  Cursor c{text};
  CirclePoint base(c.scalar(field));
  c.expect('^');
  Side side;
  if (c.try_consume('+')) {
    side = Side::plus;
  } else if (c.try_consume('-')) {
    side = Side::minus;
  } else {
    c.fail("expected '^+' or '^-'");
  }
  if (!c.at_end()) c.fail("trailing input after sided point");
  return {base, side};
}

const std::variant<MapClass, Lift>* Document::find(std::string_view name) const {
  for (const auto& [n, v] : bindings) {
    if (n == name) return &v;
  }
  return nullptr;
}

MapClass Document::class_of(std::string_view name) const {
  const auto* v = find(name);
  if (!v) throw DomainError(Errc::bad_parameters, "no binding named '" + std::string(name) + "'");
  if (std::holds_alternative<MapClass>(*v)) return std::get<MapClass>(*v);
  return std::get<Lift>(*v).map_class();
}

Lift Document::lift_of(std::string_view name) const {
  const auto* v = find(name);
  if (!v) throw DomainError(Errc::bad_parameters, "no binding named '" + std::string(name) + "'");
  if (std::holds_alternative<Lift>(*v)) return std::get<Lift>(*v);
  const MapClass& cls = std::get<MapClass>(*v);
  if (!singularities(cls).empty()) {
    throw DomainError(Errc::precondition,
                      "binding '" + std::string(name) +
                          "' has singular points; give its value table with '@' lines");
  }
  return Lift::make(cls, {});
}

Document parse_document(std::string_view text, const FieldSpec& default_field) {
  Document doc;
  doc.field = default_field;
  bool field_seen = false;

  struct Pending {
    std::string name;
    MapClass cls;
    std::map<CirclePoint, CirclePoint> table;
    bool has_table = false;
  };
  std::vector<Pending> items;

  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    ++line_no;

    std::size_t i = line.find_first_not_of(" \t");
    if (i != std::string_view::npos && line[i] != '#') {
      std::string_view body = line.substr(i);
      if (body.substr(0, 6) == "field ") {
        if (!items.empty() || field_seen) {
          throw SyntaxError(line_no, i + 1, "'field' must appear once, before any binding");
        }
        Cursor c{body.substr(6)};
        mpz_class m = c.integer();
        if (!c.at_end()) c.fail("trailing input after field radicand");
        if (!m.fits_slong_p()) throw SyntaxError(line_no, i + 7, "field radicand out of range");
        doc.field = FieldSpec(m.get_si());
        field_seen = true;
      } else if (body[0] == '@') {
        if (items.empty()) {
          throw SyntaxError(line_no, i + 1, "'@' line with no preceding binding");
        }
        auto [x, y] = parse_table_entry(body.substr(1), doc.field);
        if (!items.back().table.emplace(x, y).second) {
          throw DomainError(Errc::not_bijective,
                            "duplicate table point " + scalar_text(x.value()));
        }
        items.back().has_table = true;
      } else {
        std::size_t eq = body.find('=');
        if (eq == std::string_view::npos) {
          throw SyntaxError(line_no, i + 1, "expected 'name = <map>'");
        }
        std::string name(body.substr(0, eq));
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        if (name.empty() ||
            !std::all_of(name.begin(), name.end(), [](unsigned char ch) {
              return std::isalnum(ch) || ch == '_';
            }) ||
            std::isdigit(static_cast<unsigned char>(name[0]))) {
          throw SyntaxError(line_no, i + 1, "binding names are identifiers");
        }
        for (const Pending& p : items) {
          if (p.name == name) {
            throw SyntaxError(line_no, i + 1, "duplicate binding '" + name + "'");
          }
        }
        items.push_back(Pending{name, parse_map(body.substr(eq + 1), doc.field), {}, false});
      }
    }

    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  for (Pending& p : items) {
    if (p.has_table) {
      doc.bindings.emplace_back(p.name, Lift::make(std::move(p.cls), std::move(p.table)));
    } else {
      doc.bindings.emplace_back(p.name, std::move(p.cls));
    }
  }
  return doc;
}

std::string document_text(const Document& doc) {
  std::ostringstream out;
  out << "field " << doc.field.m << "\n";
  for (const auto& [name, v] : doc.bindings) {
    if (std::holds_alternative<MapClass>(v)) {
      out << name << " = " << map_text(std::get<MapClass>(v)) << "\n";
    } else {
      const Lift& L = std::get<Lift>(v);
      out << name << " = " << map_text(L.map_class()) << "\n";
      for (const auto& [x, y] : L.table()) {
        out << "@ " << scalar_text(x.value()) << " -> " << scalar_text(y.value()) << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace ietflip

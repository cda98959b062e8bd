#include "rankcalc/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "rankcalc/error.hpp"

namespace rankcalc {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      const std::size_t t0 = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({std::string(raw.substr(t0, i - t0)), t0 + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, std::size_t column, const std::string& what) {
  throw Error(Errc::parse_error,
              "line " + std::to_string(line.number) + ", column " + std::to_string(column) + ": " + what);
}

[[noreturn]] void fail(const Line& line, const Token& tok, const std::string& expected) {
  fail(line, tok.column, "expected " + expected + ", found '" + tok.text + "'");
}

const Token& arg(const Line& line, std::size_t k, const std::string& expected) {
  if (k >= line.tokens.size()) {
    const auto& last = line.tokens.back();
    fail(line, last.column + last.text.size(), "expected " + expected + " at end of line");
  }
  return line.tokens[k];
}

void expect_count(const Line& line, std::size_t n) {
  if (line.tokens.size() > n) fail(line, line.tokens[n], "end of line");
  if (line.tokens.size() < n) arg(line, n - 1, "more fields");
}

std::size_t parse_count(const Line& line, const Token& tok, const std::string& what) {
  const auto& s = tok.text;
  if (s.empty() || s.size() > 12 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail(line, tok, what);
  return std::stoull(s);
}

Rational parse_scalar(const Line& line, const Token& tok, std::size_t column, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    (void)tok;
    fail(line, column, "expected an exact rational, found '" + text + "'");
  }
}

bool valid_object_name(const std::string& s) {
  if (s.empty() || s == "0") return false;
  return std::none_of(s.begin(), s.end(), [](char c) { return c == '+' || c == '(' || c == ')' || c == ','; });
}

ObjectId object_arg(const CategoryPresentation& p, const Line& line, std::size_t k) {
  const auto& tok = arg(line, k, "an object name");
  if (auto x = p.find(tok.text)) return *x;
  fail(line, tok.column, "unknown object '" + tok.text + "'");
}

ObjectExpr object_expr_arg(const CategoryPresentation& p, const Line& line, std::size_t k) {
  const auto& tok = arg(line, k, "an object expression");
  try {
    return p.parse_object(tok.text);
  } catch (const Error& e) {
    fail(line, tok.column, e.what());
  }
}

// "(a,b,...)" with `n` fields; returns the raw field strings and their columns.
std::vector<std::pair<std::string, std::size_t>> tuple_fields(const Line& line, const Token& tok, std::size_t n) {
  const auto& s = tok.text;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    fail(line, tok, "a tuple of " + std::to_string(n) + " fields in parentheses");
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t start = 1;
  while (true) {
    const auto comma = s.find(',', start);
    const auto stop = comma == std::string::npos ? s.size() - 1 : comma;
    out.emplace_back(s.substr(start, stop - start), tok.column + start);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != n) fail(line, tok, "a tuple of " + std::to_string(n) + " fields");
  return out;
}

std::size_t index_field(const Line& line, const std::pair<std::string, std::size_t>& f, std::size_t bound,
                        const std::string& what) {
  const auto& s = f.first;
  if (s.empty() || s.size() > 12 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail(line, f.second, "expected " + what + ", found '" + s + "'");
  const auto v = std::stoull(s);
  if (v < 1 || v > bound)
    fail(line, f.second, what + " " + s + " out of range 1.." + std::to_string(bound));
  return v - 1;
}

void expect_header(const std::vector<Line>& lines, const std::string& kind) {
  if (lines.empty()) throw Error(Errc::parse_error, "line 1, column 1: expected 'format " + kind + " 1'");
  const auto& l = lines.front();
  if (l.tokens[0].text != "format") fail(l, l.tokens[0], "'format'");
  const auto& k = arg(l, 1, "a format name");
  if (k.text != kind) fail(l, k, "'" + kind + "'");
  const auto& v = arg(l, 2, "a format version");
  if (v.text != "1") fail(l, v, "version 1");
  expect_count(l, 3);
}

}  // namespace

CategoryPresentation parse_presentation(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "rankcalc-presentation");

  std::vector<std::string> names;
  const Line* objects_line = nullptr;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l.tokens[0].text != "objects") continue;
    if (objects_line) fail(l, l.tokens[0], "a single 'objects' line");
    objects_line = &l;
    std::map<std::string, std::size_t> seen;
    for (std::size_t t = 1; t < l.tokens.size(); ++t) {
      const auto& tok = l.tokens[t];
      if (!valid_object_name(tok.text)) fail(l, tok, "an object name (not '0', without '+', '(', ')' or ',')");
      if (seen.count(tok.text)) fail(l, tok.column, "duplicate object name '" + tok.text + "'");
      seen[tok.text] = t;
      names.push_back(tok.text);
    }
  }
  if (!objects_line) throw Error(Errc::parse_error, "line " + std::to_string(lines.back().number + 1) + ", column 1: missing 'objects' line");

  const std::size_t n = names.size();
  std::vector<std::size_t> dims(n * n, 0);
  // Provisional presentation for name lookup while reading hom lines.
  const CategoryPresentation lookup(names, std::vector<std::size_t>(n * n, 0));
  for (const auto& l : lines) {
    if (l.tokens[0].text != "hom") continue;
    expect_count(l, 4);
    const auto x = object_arg(lookup, l, 1);
    const auto y = object_arg(lookup, l, 2);
    dims[x * n + y] = parse_count(l, l.tokens[3], "a dimension");
  }

  CategoryPresentation p(names, dims);
  bool sigma_seen = false;
  std::vector<ObjectId> sigma(n, n);
  std::vector<const Line*> sigmamaps;
  bool period_seen = false, field_seen = false, generators_seen = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    const auto& key = l.tokens[0];
    if (key.text == "objects" || key.text == "hom") {
      continue;
    } else if (key.text == "field") {
      if (field_seen) fail(l, key, "a single 'field' line");
      field_seen = true;
      expect_count(l, 2);
      if (l.tokens[1].text != "QQ") fail(l, l.tokens[1], "'QQ' (only rational presentations are supported)");
      p.set_field(l.tokens[1].text);
    } else if (key.text == "period") {
      if (period_seen) fail(l, key, "a single 'period' line");
      period_seen = true;
      expect_count(l, 2);
      const auto d = parse_count(l, l.tokens[1], "a positive period");
      if (d == 0) fail(l, l.tokens[1], "a positive period");
      p.set_period(d);
    } else if (key.text == "generators") {
      if (generators_seen) fail(l, key, "a single 'generators' line");
      generators_seen = true;
      Generators g;
      if (l.tokens.size() == 2 && l.tokens[1].text == "*") {
        g.every_indecomposable = true;
      } else {
        arg(l, 1, "'*' or object names");
        for (std::size_t t = 1; t < l.tokens.size(); ++t) g.objects.push_back(object_arg(p, l, t));
      }
      p.set_generators(g);
    } else if (key.text == "id") {
      const auto x = object_arg(p, l, 1);
      const std::size_t d = p.hom_dim(x, x);
      expect_count(l, 2 + d);
      Vector v;
      for (std::size_t t = 0; t < d; ++t) v.push_back(parse_scalar(l, l.tokens[2 + t], l.tokens[2 + t].column, l.tokens[2 + t].text));
      p.set_identity(x, std::move(v));
    } else if (key.text == "compose") {
      const auto x = object_arg(p, l, 1);
      const auto y = object_arg(p, l, 2);
      const auto z = object_arg(p, l, 3);
      std::map<std::pair<std::size_t, std::size_t>, Vector> entries;
      for (std::size_t t = 4; t < l.tokens.size(); ++t) {
        const auto f = tuple_fields(l, l.tokens[t], 4);
        const auto i = index_field(l, f[0], p.hom_dim(x, y), "basis index of Hom(X,Y)");
        const auto j = index_field(l, f[1], p.hom_dim(y, z), "basis index of Hom(Y,Z)");
        const auto kk = index_field(l, f[2], p.hom_dim(x, z), "basis index of Hom(X,Z)");
        auto& v = entries.try_emplace({i, j}, p.composition(x, y, z, i, j)).first->second;
        v[kk] = parse_scalar(l, l.tokens[t], f[3].second, f[3].first);
      }
      for (auto& [ij, v] : entries) p.set_composition(x, y, z, ij.first, ij.second, std::move(v));
    } else if (key.text == "sigma") {
      expect_count(l, 3);
      const auto x = object_arg(p, l, 1);
      const auto y = object_arg(p, l, 2);
      if (sigma[x] != n) fail(l, l.tokens[1], "one 'sigma' line per object");
      sigma[x] = y;
      sigma_seen = true;
    } else if (key.text == "sigmamap") {
      sigmamaps.push_back(&l);
    } else if (key.text == "morphism" || key.text == "triangle") {
      continue;
    } else if (key.text == "format") {
      fail(l, key, "a single 'format' line");
    } else {
      fail(l, key, "a keyword (field, objects, period, generators, hom, id, compose, sigma, sigmamap, morphism, triangle)");
    }
  }

  if (sigma_seen) {
    for (ObjectId x = 0; x < n; ++x)
      if (sigma[x] == n)
        throw Error(Errc::parse_error, "line " + std::to_string(objects_line->number) + ", column 1: no 'sigma' line for object '" + names[x] + "'");
    try {
      p.set_sigma(sigma);
    } catch (const Error& e) {
      throw Error(Errc::parse_error, std::string("sigma lines: ") + e.what());
    }
  }
  for (const Line* lp : sigmamaps) {
    const auto& l = *lp;
    const auto x = object_arg(p, l, 1);
    const auto y = object_arg(p, l, 2);
    Matrix m(p.hom_dim(p.sigma(x), p.sigma(y)), p.hom_dim(x, y));
    if (!sigma_seen) m = p.sigma_map(x, y);
    for (std::size_t t = 3; t < l.tokens.size(); ++t) {
      const auto f = tuple_fields(l, l.tokens[t], 3);
      const auto r = index_field(l, f[0], m.rows(), "row index");
      const auto c = index_field(l, f[1], m.cols(), "column index");
      m(r, c) = parse_scalar(l, l.tokens[t], f[2].second, f[2].first);
    }
    p.set_sigma_map(x, y, std::move(m));
  }

  for (const auto& l : lines) {
    if (l.tokens[0].text != "morphism") continue;
    const auto& name = arg(l, 1, "a morphism name");
    MorphismMatrix m = zero_morphism(p, object_expr_arg(p, l, 2), object_expr_arg(p, l, 3));
    for (std::size_t t = 4; t < l.tokens.size(); ++t) {
      const auto& tok = l.tokens[t];
      const auto eq = tok.text.find('=');
      if (eq == std::string::npos || tok.text.compare(0, 1, "b") != 0)
        fail(l, tok, "a block 'b(j,i)=c1,...,cd'");
      const Token head{tok.text.substr(1, eq - 1), tok.column + 1};
      const auto f = tuple_fields(l, head, 2);
      const auto j = index_field(l, f[0], m.target.size(), "target summand index");
      const auto i = index_field(l, f[1], m.source.size(), "source summand index");
      Vector& block = m.block(j, i);
      std::size_t start = eq + 1;
      std::size_t entry = 0;
      while (true) {
        const auto comma = tok.text.find(',', start);
        const auto stop = comma == std::string::npos ? tok.text.size() : comma;
        if (entry >= block.size()) fail(l, tok.column + start, "more entries than dim Hom = " + std::to_string(block.size()));
        block[entry++] = parse_scalar(l, tok, tok.column + start, tok.text.substr(start, stop - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (entry != block.size())
        fail(l, tok.column, "block needs " + std::to_string(block.size()) + " entries, found " + std::to_string(entry));
    }
    try {
      p.add_morphism(name.text, std::move(m));
    } catch (const Error& e) {
      fail(l, name.column, e.what());
    }
  }

  for (const auto& l : lines) {
    if (l.tokens[0].text != "triangle") continue;
    expect_count(l, 5);
    Triangle t;
    t.name = l.tokens[1].text;
    std::string* slots[3] = {&t.f_name, &t.g_name, &t.h_name};
    MorphismMatrix* maps[3] = {&t.f, &t.g, &t.h};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& tok = l.tokens[2 + k];
      const auto* m = p.find_morphism(tok.text);
      if (!m) fail(l, tok.column, "unknown morphism '" + tok.text + "'");
      *slots[k] = tok.text;
      *maps[k] = *m;
    }
    p.add_triangle(std::move(t));
  }
  return p;
}

std::string serialize_presentation(const CategoryPresentation& p) {
  std::ostringstream os;
  const std::size_t n = p.size();
  os << "format rankcalc-presentation 1\n";
  os << "field " << p.field() << "\n";
  os << "objects";
  for (const auto& name : p.object_names()) os << ' ' << name;
  os << "\n";
  if (p.period()) os << "period " << *p.period() << "\n";
  const auto& g = p.generators();
  if (g.every_indecomposable) {
    os << "generators *\n";
  } else if (!g.objects.empty()) {
    os << "generators";
    for (auto x : g.objects) os << ' ' << p.name(x);
    os << "\n";
  }
  for (ObjectId x = 0; x < n; ++x)
    for (ObjectId y = 0; y < n; ++y)
      if (p.hom_dim(x, y) != 0) os << "hom " << p.name(x) << ' ' << p.name(y) << ' ' << p.hom_dim(x, y) << "\n";
  for (ObjectId x = 0; x < n; ++x) {
    if (p.hom_dim(x, x) == 0) continue;
    os << "id " << p.name(x);
    for (const auto& c : p.identity(x)) os << ' ' << to_string(c);
    os << "\n";
  }
  for (ObjectId x = 0; x < n; ++x)
    for (ObjectId y = 0; y < n; ++y)
      for (ObjectId z = 0; z < n; ++z) {
        std::ostringstream entries;
        for (std::size_t i = 0; i < p.hom_dim(x, y); ++i)
          for (std::size_t j = 0; j < p.hom_dim(y, z); ++j) {
            const auto& v = p.composition(x, y, z, i, j);
            for (std::size_t k = 0; k < v.size(); ++k)
              if (v[k] != 0) entries << " (" << i + 1 << ',' << j + 1 << ',' << k + 1 << ',' << to_string(v[k]) << ')';
          }
        if (!entries.str().empty())
          os << "compose " << p.name(x) << ' ' << p.name(y) << ' ' << p.name(z) << entries.str() << "\n";
      }
  for (ObjectId x = 0; x < n; ++x) os << "sigma " << p.name(x) << ' ' << p.name(p.sigma(x)) << "\n";
  for (ObjectId x = 0; x < n; ++x)
    for (ObjectId y = 0; y < n; ++y) {
      const Matrix& m = p.sigma_map(x, y);
      if (m.is_zero()) continue;
      os << "sigmamap " << p.name(x) << ' ' << p.name(y);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (m(r, c) != 0) os << " (" << r + 1 << ',' << c + 1 << ',' << to_string(m(r, c)) << ')';
      os << "\n";
    }
  for (const auto& nm : p.morphisms()) {
    const auto& m = nm.morphism;
    os << "morphism " << nm.name << ' ' << p.format_object(m.source) << ' ' << p.format_object(m.target);
    for (std::size_t j = 0; j < m.target.size(); ++j)
      for (std::size_t i = 0; i < m.source.size(); ++i) {
        const auto& b = m.block(j, i);
        if (is_zero(b)) continue;
        os << " b(" << j + 1 << ',' << i + 1 << ")=";
        for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << to_string(b[k]);
      }
    os << "\n";
  }
  for (const auto& t : p.triangles())
    os << "triangle " << t.name << ' ' << t.f_name << ' ' << t.g_name << ' ' << t.h_name << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

template <class Value, class ParseValue>
void read_entries(const std::vector<Line>& lines, std::optional<std::string>& category_path, RankFile::Kind& kind,
                  std::vector<std::pair<std::string, Value>>& entries, std::string* instance, ParseValue parse_value) {
  bool kind_seen = false;
  std::map<std::string, bool> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    const auto& key = l.tokens[0];
    if (key.text == "category") {
      expect_count(l, 2);
      if (category_path) fail(l, key, "a single 'category' line");
      category_path = l.tokens[1].text;
    } else if (instance && key.text == "instance") {
      expect_count(l, 2);
      if (!instance->empty()) fail(l, key, "a single 'instance' line");
      *instance = l.tokens[1].text;
    } else if (key.text == "coef" || key.text == "value") {
      expect_count(l, 3);
      const auto this_kind = key.text == "coef" ? RankFile::Kind::coefficients : RankFile::Kind::object_values;
      if (kind_seen && this_kind != kind) fail(l, key, "'coef' and 'value' lines not to be mixed");
      kind_seen = true;
      kind = this_kind;
      const auto& name = l.tokens[1].text;
      if (seen[name]) fail(l, l.tokens[1].column, "object '" + name + "' listed twice");
      seen[name] = true;
      entries.emplace_back(name, parse_value(l, l.tokens[2]));
    } else {
      fail(l, key, instance ? "'category', 'instance', 'coef' or 'value'" : "'category', 'coef' or 'value'");
    }
  }
}

}  // namespace

RankFile parse_rank_file(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "rankcalc-rank");
  RankFile file;
  read_entries<Rational>(lines, file.category_path, file.kind, file.entries, nullptr,
                         [](const Line& l, const Token& t) { return parse_scalar(l, t, t.column, t.text); });
  return file;
}

std::string serialize_rank_function(const RankFunction& rho, const std::optional<std::string>& category_path) {
  std::ostringstream os;
  os << "format rankcalc-rank 1\n";
  if (category_path) os << "category " << *category_path << "\n";
  const auto& p = rho.category();
  for (ObjectId z = 0; z < p.size(); ++z) os << "coef " << p.name(z) << ' ' << to_string(rho.coefficient(z)) << "\n";
  return os.str();
}

QValuesFile parse_qvalues_file(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "rankcalc-qvalues");
  QValuesFile file;
  read_entries<ModuleElement>(lines, file.category_path, file.kind, file.entries, &file.instance,
                              [](const Line& l, const Token& t) {
                                try {
                                  return parse_polynomial(t.text);
                                } catch (const Error& e) {
                                  fail(l, t.column, e.what());
                                }
                              });
  return file;
}

}  // namespace rankcalc

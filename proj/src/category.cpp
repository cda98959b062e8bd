#include "rankcalc/category.hpp"

#include <algorithm>

#include "rankcalc/error.hpp"

namespace rankcalc {

namespace {

const Vector& empty_vector() {
  static const Vector v;
  return v;
}

}  // namespace

ObjectExpr ObjectExpr::operator+(const ObjectExpr& other) const {
  auto s = summands_;
  s.insert(s.end(), other.summands_.begin(), other.summands_.end());
  return ObjectExpr(std::move(s));
}

bool operator==(const ObjectExpr& a, const ObjectExpr& b) {
  if (a.size() != b.size()) return false;
  auto x = a.summands_, y = b.summands_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// ---------------------------------------------------------------------------

CategoryPresentation::CategoryPresentation(std::vector<std::string> names, std::vector<std::size_t> hom_dims)
    : names_(std::move(names)), hom_dims_(std::move(hom_dims)) {
  const std::size_t n = names_.size();
  if (hom_dims_.size() != n * n)
    throw Error(Errc::dimension_mismatch, "hom dimension table must be n x n");
  {
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw Error(Errc::invalid_argument, "duplicate object name '" + *dup + "'");
  }
  composition_.resize(n * n * n);
  for (ObjectId x = 0; x < n; ++x)
    for (ObjectId y = 0; y < n; ++y)
      for (ObjectId z = 0; z < n; ++z)
        composition_[triple(x, y, z)].assign(hom_dim(x, y) * hom_dim(y, z), Vector(hom_dim(x, z)));
  identities_.resize(n);
  for (ObjectId x = 0; x < n; ++x) identities_[x] = Vector(hom_dim(x, x));
  std::vector<ObjectId> id(n);
  for (ObjectId x = 0; x < n; ++x) id[x] = x;
  sigma_ = id;
  sigma_maps_.resize(n * n);
  for (ObjectId x = 0; x < n; ++x)
    for (ObjectId y = 0; y < n; ++y) sigma_maps_[x * n + y] = Matrix::identity(hom_dim(x, y));
}

std::optional<ObjectId> CategoryPresentation::find(std::string_view name) const {
  for (ObjectId x = 0; x < names_.size(); ++x)
    if (names_[x] == name) return x;
  return std::nullopt;
}

ObjectId CategoryPresentation::id(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw Error(Errc::unknown_object, "unknown object '" + std::string(name) + "'");
}

ObjectExpr CategoryPresentation::parse_object(std::string_view text) const {
  if (text == "0") return {};
  std::vector<ObjectId> ids;
  std::size_t start = 0;
  while (true) {
    const auto plus = text.find('+', start);
    ids.push_back(id(text.substr(start, plus == std::string_view::npos ? plus : plus - start)));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return ObjectExpr(std::move(ids));
}

std::string CategoryPresentation::format_object(const ObjectExpr& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "+" : "") + name(x[i]);
  return s;
}

std::size_t CategoryPresentation::hom_dim(ObjectId z, const ObjectExpr& x) const {
  std::size_t d = 0;
  for (auto xi : x.summands()) d += hom_dim(z, xi);
  return d;
}

const Vector& CategoryPresentation::composition(ObjectId x, ObjectId y, ObjectId z, std::size_t i,
                                                std::size_t j) const {
  const auto& t = composition_[triple(x, y, z)];
  if (t.empty()) return empty_vector();
  return t.at(i * hom_dim(y, z) + j);
}

void CategoryPresentation::set_composition(ObjectId x, ObjectId y, ObjectId z, std::size_t i, std::size_t j,
                                           Vector v) {
  if (i >= hom_dim(x, y) || j >= hom_dim(y, z) || v.size() != hom_dim(x, z))
    throw Error(Errc::dimension_mismatch, "composition entry out of range for (" + names_[x] + "," +
                                              names_[y] + "," + names_[z] + ")");
  composition_[triple(x, y, z)][i * hom_dim(y, z) + j] = std::move(v);
}

void CategoryPresentation::set_identity(ObjectId x, Vector v) {
  if (v.size() != hom_dim(x, x)) throw Error(Errc::dimension_mismatch, "identity vector has wrong length for " + names_.at(x));
  identities_[x] = std::move(v);
}

void CategoryPresentation::set_sigma(std::vector<ObjectId> permutation) {
  const std::size_t n = size();
  if (permutation.size() != n) throw Error(Errc::dimension_mismatch, "sigma must map every object");
  std::vector<bool> hit(n, false);
  for (auto y : permutation) {
    if (y >= n || hit[y]) throw Error(Errc::invalid_argument, "sigma is not a permutation of the objects");
    hit[y] = true;
  }
  sigma_ = std::move(permutation);
  for (ObjectId x = 0; x < n; ++x)
    for (ObjectId y = 0; y < n; ++y)
      sigma_maps_[x * n + y] = Matrix(hom_dim(sigma_[x], sigma_[y]), hom_dim(x, y));
}

void CategoryPresentation::set_sigma_map(ObjectId x, ObjectId y, Matrix m) {
  if (m.rows() != hom_dim(sigma_[x], sigma_[y]) || m.cols() != hom_dim(x, y))
    throw Error(Errc::dimension_mismatch, "sigma map has wrong shape for (" + names_[x] + "," + names_[y] + ")");
  sigma_maps_[x * size() + y] = std::move(m);
}

const MorphismMatrix* CategoryPresentation::find_morphism(std::string_view name) const {
  for (const auto& m : morphisms_)
    if (m.name == name) return &m.morphism;
  return nullptr;
}

void CategoryPresentation::add_morphism(std::string name, MorphismMatrix m) {
  if (find_morphism(name)) throw Error(Errc::invalid_argument, "duplicate morphism name '" + name + "'");
  check_shape(*this, m);
  morphisms_.push_back({std::move(name), std::move(m)});
}

void CategoryPresentation::add_triangle(Triangle t) {
  auto ensure = [&](const std::string& name, const MorphismMatrix& m) {
    if (name.empty()) return;
    if (const auto* existing = find_morphism(name)) {
      if (!(*existing == m)) throw Error(Errc::invalid_argument, "morphism '" + name + "' redefined by triangle");
    } else {
      add_morphism(name, m);
    }
  };
  ensure(t.f_name, t.f);
  ensure(t.g_name, t.g);
  ensure(t.h_name, t.h);
  triangles_.push_back(std::move(t));
}

bool operator==(const CategoryPresentation& a, const CategoryPresentation& b) {
  if (a.names_ != b.names_ || a.hom_dims_ != b.hom_dims_ || a.composition_ != b.composition_ ||
      a.identities_ != b.identities_ || a.sigma_ != b.sigma_ || a.sigma_maps_ != b.sigma_maps_ ||
      a.period_ != b.period_ || a.field_ != b.field_)
    return false;
  if (a.generators_.every_indecomposable != b.generators_.every_indecomposable ||
      a.generators_.objects != b.generators_.objects)
    return false;
  if (a.morphisms_.size() != b.morphisms_.size() || a.triangles_.size() != b.triangles_.size()) return false;
  for (std::size_t i = 0; i < a.morphisms_.size(); ++i)
    if (a.morphisms_[i].name != b.morphisms_[i].name || !(a.morphisms_[i].morphism == b.morphisms_[i].morphism))
      return false;
  for (std::size_t i = 0; i < a.triangles_.size(); ++i) {
    const auto &s = a.triangles_[i], &t = b.triangles_[i];
    if (s.name != t.name || s.f_name != t.f_name || s.g_name != t.g_name || s.h_name != t.h_name ||
        !(s.f == t.f) || !(s.g == t.g) || !(s.h == t.h))
      return false;
  }
  return true;
}

CategoryPresentation reorder_objects(const CategoryPresentation& p, const std::vector<ObjectId>& order,
                                     const std::vector<std::string>& names) {
  const std::size_t n = p.size();
  if (order.size() != n || names.size() != n) throw Error(Errc::dimension_mismatch, "reorder: wrong length");
  std::vector<ObjectId> new_id(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || new_id[order[k]] != n) throw Error(Errc::invalid_argument, "reorder: not a permutation");
    new_id[order[k]] = k;
  }
  std::vector<std::size_t> dims(n * n);
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b) dims[a * n + b] = p.hom_dim(order[a], order[b]);
  CategoryPresentation q(names, std::move(dims));
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b)
      for (ObjectId c = 0; c < n; ++c)
        for (std::size_t i = 0; i < q.hom_dim(a, b); ++i)
          for (std::size_t j = 0; j < q.hom_dim(b, c); ++j)
            q.set_composition(a, b, c, i, j, p.composition(order[a], order[b], order[c], i, j));
  std::vector<ObjectId> sigma(n);
  for (ObjectId a = 0; a < n; ++a) {
    q.set_identity(a, p.identity(order[a]));
    sigma[a] = new_id[p.sigma(order[a])];
  }
  q.set_sigma(sigma);
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b) q.set_sigma_map(a, b, p.sigma_map(order[a], order[b]));
  auto remap = [&](const ObjectExpr& x) {
    std::vector<ObjectId> s;
    for (auto v : x.summands()) s.push_back(new_id[v]);
    return ObjectExpr(std::move(s));
  };
  auto remap_m = [&](const MorphismMatrix& m) {
    return MorphismMatrix{remap(m.source), remap(m.target), m.blocks};
  };
  Generators g = p.generators();
  for (auto& x : g.objects) x = new_id[x];
  q.set_generators(g);
  q.set_period(p.period());
  q.set_field(p.field());
  for (const auto& m : p.morphisms()) q.add_morphism(m.name, remap_m(m.morphism));
  for (const auto& t : p.triangles())
    q.add_triangle({t.name, t.f_name, t.g_name, t.h_name, remap_m(t.f), remap_m(t.g), remap_m(t.h)});
  return q;
}

// ---------------------------------------------------------------------------
// Morphism calculus

MorphismMatrix zero_morphism(const CategoryPresentation& p, const ObjectExpr& source, const ObjectExpr& target) {
  MorphismMatrix m{source, target, {}};
  m.blocks.reserve(source.size() * target.size());
  for (std::size_t j = 0; j < target.size(); ++j)
    for (std::size_t i = 0; i < source.size(); ++i) m.blocks.emplace_back(p.hom_dim(source[i], target[j]));
  return m;
}

MorphismMatrix identity_morphism(const CategoryPresentation& p, const ObjectExpr& x) {
  auto m = zero_morphism(p, x, x);
  for (std::size_t i = 0; i < x.size(); ++i) m.block(i, i) = p.identity(x[i]);
  return m;
}

MorphismMatrix basis_morphism(const CategoryPresentation& p, ObjectId x, ObjectId y, std::size_t k) {
  return component_morphism(p, x, y, unit_vector(p.hom_dim(x, y), k));
}

MorphismMatrix component_morphism(const CategoryPresentation& p, ObjectId x, ObjectId y, Vector coeffs) {
  if (coeffs.size() != p.hom_dim(x, y)) throw Error(Errc::dimension_mismatch, "coefficient vector has wrong length");
  return MorphismMatrix{ObjectExpr::single(x), ObjectExpr::single(y), {std::move(coeffs)}};
}

void check_shape(const CategoryPresentation& p, const MorphismMatrix& f) {
  const auto in_range = [&](const ObjectExpr& x) {
    return std::all_of(x.summands().begin(), x.summands().end(), [&](ObjectId v) { return v < p.size(); });
  };
  if (!in_range(f.source) || !in_range(f.target) || f.blocks.size() != f.source.size() * f.target.size())
    throw Error(Errc::category_mismatch, "morphism does not live in this category");
  for (std::size_t j = 0; j < f.target.size(); ++j)
    for (std::size_t i = 0; i < f.source.size(); ++i)
      if (f.block(j, i).size() != p.hom_dim(f.source[i], f.target[j]))
        throw Error(Errc::category_mismatch, "morphism block shape does not match the hom dimensions");
}

Vector compose_vectors(const CategoryPresentation& p, ObjectId x, ObjectId y, ObjectId z, const Vector& f,
                       const Vector& g) {
  Vector out(p.hom_dim(x, z));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] == 0) continue;
      const Rational c = f[i] * g[j];
      const auto& e = p.composition(x, y, z, i, j);
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0) out[k] += c * e[k];
    }
  }
  return out;
}

MorphismMatrix compose(const CategoryPresentation& p, const MorphismMatrix& g, const MorphismMatrix& f) {
  if (!(f.target == g.source))
    throw Error(Errc::endpoint_mismatch, "compose: target " + p.format_object(f.target) + " differs from source " +
                                             p.format_object(g.source));
  // match[a] = position in g.source of the a-th summand of f.target.
  const std::size_t mid = f.target.size();
  std::vector<std::size_t> match(mid);
  std::vector<bool> used(mid, false);
  for (std::size_t a = 0; a < mid; ++a) {
    for (std::size_t b = 0; b < mid; ++b) {
      if (!used[b] && g.source[b] == f.target[a]) {
        match[a] = b;
        used[b] = true;
        break;
      }
    }
  }
  auto out = zero_morphism(p, f.source, g.target);
  for (std::size_t k = 0; k < g.target.size(); ++k) {
    for (std::size_t i = 0; i < f.source.size(); ++i) {
      Vector& acc = out.block(k, i);
      for (std::size_t a = 0; a < mid; ++a) {
        const auto c = compose_vectors(p, f.source[i], f.target[a], g.target[k], f.block(a, i), g.block(k, match[a]));
        for (std::size_t e = 0; e < c.size(); ++e) acc[e] += c[e];
      }
    }
  }
  return out;
}

MorphismMatrix direct_sum(const CategoryPresentation& p, const MorphismMatrix& f, const MorphismMatrix& g) {
  auto out = zero_morphism(p, f.source + g.source, f.target + g.target);
  for (std::size_t j = 0; j < f.target.size(); ++j)
    for (std::size_t i = 0; i < f.source.size(); ++i) out.block(j, i) = f.block(j, i);
  for (std::size_t j = 0; j < g.target.size(); ++j)
    for (std::size_t i = 0; i < g.source.size(); ++i)
      out.block(f.target.size() + j, f.source.size() + i) = g.block(j, i);
  return out;
}

MorphismMatrix add(const MorphismMatrix& f, const MorphismMatrix& g) {
  if (!f.source.same_sequence(g.source) || !f.target.same_sequence(g.target))
    throw Error(Errc::endpoint_mismatch, "add: endpoints differ");
  MorphismMatrix out = f;
  for (std::size_t b = 0; b < out.blocks.size(); ++b)
    for (std::size_t e = 0; e < out.blocks[b].size(); ++e) out.blocks[b][e] += g.blocks[b][e];
  return out;
}

bool is_zero(const MorphismMatrix& f) {
  return std::all_of(f.blocks.begin(), f.blocks.end(), [](const Vector& v) { return rankcalc::is_zero(v); });
}

Matrix post_composition(const CategoryPresentation& p, ObjectId z, ObjectId x, ObjectId y, const Vector& u) {
  Matrix m(p.hom_dim(z, y), p.hom_dim(z, x));
  for (std::size_t k = 0; k < m.cols(); ++k) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      const auto& e = p.composition(z, x, y, k, i);
      for (std::size_t r = 0; r < e.size(); ++r)
        if (e[r] != 0) m(r, k) += u[i] * e[r];
    }
  }
  return m;
}

Matrix hom_map(const CategoryPresentation& p, ObjectId z, const MorphismMatrix& f) {
  if (z >= p.size()) throw Error(Errc::unknown_object, "hom_map: unknown object index");
  check_shape(p, f);
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (auto t : f.target.summands()) row_off.push_back(row_off.back() + p.hom_dim(z, t));
  for (auto s : f.source.summands()) col_off.push_back(col_off.back() + p.hom_dim(z, s));
  Matrix m(row_off.back(), col_off.back());
  for (std::size_t j = 0; j < f.target.size(); ++j) {
    for (std::size_t i = 0; i < f.source.size(); ++i) {
      if (rankcalc::is_zero(f.block(j, i))) continue;
      const Matrix b = post_composition(p, z, f.source[i], f.target[j], f.block(j, i));
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(row_off[j] + r, col_off[i] + c) = b(r, c);
    }
  }
  return m;
}

ObjectExpr apply_sigma(const CategoryPresentation& p, const ObjectExpr& x) {
  std::vector<ObjectId> s;
  for (auto v : x.summands()) s.push_back(p.sigma(v));
  return ObjectExpr(std::move(s));
}

MorphismMatrix apply_sigma(const CategoryPresentation& p, const MorphismMatrix& f) {
  check_shape(p, f);
  MorphismMatrix out{apply_sigma(p, f.source), apply_sigma(p, f.target), {}};
  out.blocks.reserve(f.blocks.size());
  for (std::size_t j = 0; j < f.target.size(); ++j)
    for (std::size_t i = 0; i < f.source.size(); ++i)
      out.blocks.push_back(p.sigma_map(f.source[i], f.target[j]) * f.block(j, i));
  return out;
}

MorphismMatrix negate(MorphismMatrix f) {
  for (auto& b : f.blocks)
    for (auto& e : b) e = -e;
  return f;
}

Triangle rotate(const CategoryPresentation& p, const Triangle& t) {
  Triangle r;
  r.name = t.name.empty() ? std::string() : t.name + "'";
  r.f = t.g;
  r.g = t.h;
  r.h = negate(apply_sigma(p, t.f));
  return r;
}

TriangleReport check_triangle(const CategoryPresentation& p, const Triangle& t) {
  TriangleReport report;
  auto fail = [&](ViolationKind k, std::string detail, std::vector<std::size_t> where) {
    report.violations.push_back({k, std::move(detail), std::move(where)});
  };
  try {
    check_shape(p, t.f);
    check_shape(p, t.g);
    check_shape(p, t.h);
  } catch (const Error& e) {
    fail(ViolationKind::non_composable_chain, e.what(), {});
    return report;
  }
  const ObjectExpr sigma_x = apply_sigma(p, t.f.source);
  if (!(t.f.target == t.g.source) || !(t.g.target == t.h.source) || !(t.h.target == sigma_x)) {
    fail(ViolationKind::non_composable_chain,
         "chain " + p.format_object(t.f.source) + " -> " + p.format_object(t.f.target) + " | " +
             p.format_object(t.g.source) + " -> " + p.format_object(t.g.target) + " | " +
             p.format_object(t.h.source) + " -> " + p.format_object(t.h.target) + " does not close up",
         {});
    return report;
  }
  const MorphismMatrix sigma_f = apply_sigma(p, t.f);
  const MorphismMatrix* maps[4] = {&t.f, &t.g, &t.h, &sigma_f};
  const char* composite_names[3] = {"g o f", "h o g", "Sigma f o h"};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!is_zero(compose(p, *maps[k + 1], *maps[k])))
      fail(ViolationKind::composite_nonzero, std::string(composite_names[k]) + " is nonzero", {k});
  }
  if (!report.ok()) return report;
  const ObjectExpr* middle[3] = {&t.f.target, &t.g.target, &t.h.target};
  const char* position_names[3] = {"Y", "Z", "Sigma X"};
  for (ObjectId w = 0; w < p.size(); ++w) {
    std::size_t ranks[4];
    for (std::size_t k = 0; k < 4; ++k) ranks[k] = rank(hom_map(p, w, *maps[k]));
    for (std::size_t k = 0; k < 3; ++k) {
      if (ranks[k] + ranks[k + 1] != p.hom_dim(w, *middle[k]))
        fail(ViolationKind::hom_exactness_fails,
             "Hom(" + p.name(w) + ", -) not exact at " + position_names[k], {w, k});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Validation

const char* violation_name(ViolationKind k) noexcept {
  switch (k) {
    case ViolationKind::malformed: return "Malformed";
    case ViolationKind::associativity: return "AssociativityViolation";
    case ViolationKind::unit: return "UnitViolation";
    case ViolationKind::sigma_not_functorial: return "SigmaNotFunctorial";
    case ViolationKind::not_k_split: return "NotKSplit";
    case ViolationKind::period_mismatch: return "PeriodMismatch";
    case ViolationKind::bad_triangle: return "BadTriangle";
    case ViolationKind::non_composable_chain: return "NonComposableChain";
    case ViolationKind::composite_nonzero: return "CompositeNonzero";
    case ViolationKind::hom_exactness_fails: return "HomExactnessFails";
  }
  return "?";
}

Subspace endomorphism_radical(const CategoryPresentation& p, ObjectId x) {
  const std::size_t d = p.hom_dim(x, x);
  // trace(left multiplication by e_k) = sum_m coefficient of e_m in e_k o e_m.
  Vector trace(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t m = 0; m < d; ++m) trace[k] += p.composition(x, x, x, m, k)[m];
  // form(a, b) = trace(L_{a o b}); the radical is the left kernel.
  Matrix form(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const auto& prod = p.composition(x, x, x, b, a);
      Rational s;
      for (std::size_t k = 0; k < d; ++k) s += prod[k] * trace[k];
      form(a, b) = s;
    }
  return Subspace::row_space(nullspace(form.transpose()));
}

namespace {

std::vector<Violation> check_associativity_from(const CategoryPresentation& p, ObjectId w) {
  std::vector<Violation> out;
  const std::size_t n = p.size();
  for (ObjectId x = 0; x < n; ++x) {
    if (p.hom_dim(w, x) == 0) continue;
    for (ObjectId y = 0; y < n; ++y) {
      if (p.hom_dim(x, y) == 0) continue;
      for (ObjectId z = 0; z < n; ++z) {
        if (p.hom_dim(y, z) == 0) continue;
        for (std::size_t a = 0; a < p.hom_dim(w, x); ++a)
          for (std::size_t b = 0; b < p.hom_dim(x, y); ++b)
            for (std::size_t c = 0; c < p.hom_dim(y, z); ++c) {
              // (c o b) o a versus c o (b o a)
              const Vector cb = p.composition(x, y, z, b, c);
              const Vector ba = p.composition(w, x, y, a, b);
              const Vector left = compose_vectors(p, w, x, z, unit_vector(p.hom_dim(w, x), a), cb);
              const Vector right = compose_vectors(p, w, y, z, ba, unit_vector(p.hom_dim(y, z), c));
              if (left != right)
                out.push_back({ViolationKind::associativity,
                               "(c o b) o a != c o (b o a) on " + p.name(w) + "->" + p.name(x) + "->" +
                                   p.name(y) + "->" + p.name(z),
                               {w, x, y, z, a, b, c}});
            }
      }
    }
  }
  return out;
}

}  // namespace

ValidationReport validate(const CategoryPresentation& p, Execution exec) {
  ValidationReport report;
  const std::size_t n = p.size();
  auto add = [&](ViolationKind k, std::string detail, std::vector<std::size_t> where) {
    report.violations.push_back({k, std::move(detail), std::move(where)});
  };

  // Units.
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < p.hom_dim(x, y); ++i) {
        const Vector e = unit_vector(p.hom_dim(x, y), i);
        if (compose_vectors(p, x, y, y, e, p.identity(y)) != e)
          add(ViolationKind::unit, "1_" + p.name(y) + " o e is not e in Hom(" + p.name(x) + "," + p.name(y) + ")",
              {x, y, i});
        if (compose_vectors(p, x, x, y, p.identity(x), e) != e)
          add(ViolationKind::unit, "e o 1_" + p.name(x) + " is not e in Hom(" + p.name(x) + "," + p.name(y) + ")",
              {x, y, i});
      }
    }
  }

  // Associativity, fanned out over the first object.
  auto per_w = map_indices<std::vector<Violation>>(
      n, [&](std::size_t w) { return check_associativity_from(p, w); }, exec);
  for (auto& vs : per_w)
    for (auto& v : vs) report.violations.push_back(std::move(v));

  // Sigma is a functor.
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const Matrix& s = p.sigma_map(x, y);
      if (p.hom_dim(p.sigma(x), p.sigma(y)) != p.hom_dim(x, y) || rank(s) != p.hom_dim(x, y))
        add(ViolationKind::sigma_not_functorial,
            "Sigma on Hom(" + p.name(x) + "," + p.name(y) + ") is not invertible", {x, y});
    }
    if (p.sigma_map(x, x) * p.identity(x) != p.identity(p.sigma(x)))
      add(ViolationKind::sigma_not_functorial, "Sigma(1_" + p.name(x) + ") is not the identity", {x});
  }
  for (ObjectId x = 0; x < n; ++x)
    for (ObjectId y = 0; y < n; ++y)
      for (ObjectId z = 0; z < n; ++z)
        for (std::size_t i = 0; i < p.hom_dim(x, y); ++i)
          for (std::size_t j = 0; j < p.hom_dim(y, z); ++j) {
            const Vector lhs = p.sigma_map(x, z) * p.composition(x, y, z, i, j);
            const Vector rhs = compose_vectors(p, p.sigma(x), p.sigma(y), p.sigma(z),
                                               p.sigma_map(x, y).column_vector(i),
                                               p.sigma_map(y, z).column_vector(j));
            if (lhs != rhs)
              add(ViolationKind::sigma_not_functorial, "Sigma(g o f) != Sigma g o Sigma f on " + p.name(x) +
                                                           "->" + p.name(y) + "->" + p.name(z),
                  {x, y, z, i, j});
          }

  // Period.
  if (auto d = p.period()) {
    for (ObjectId x = 0; x < n; ++x) {
      ObjectId y = x;
      for (std::size_t k = 0; k < *d; ++k) y = p.sigma(y);
      if (y != x) {
        add(ViolationKind::period_mismatch, "sigma^" + std::to_string(*d) + " moves " + p.name(x), {x});
        break;
      }
    }
  }

  // Local endomorphism rings with one-dimensional top.
  report.radicals.reserve(n);
  for (ObjectId x = 0; x < n; ++x) {
    report.radicals.push_back(endomorphism_radical(p, x));
    const std::size_t top = p.hom_dim(x, x) - report.radicals.back().dim();
    if (top != 1)
      add(ViolationKind::not_k_split,
          "End(" + p.name(x) + ") has top of dimension " + std::to_string(top), {x});
  }

  for (std::size_t k = 0; k < p.triangles().size(); ++k) {
    const auto tr = check_triangle(p, p.triangles()[k]);
    for (const auto& v : tr.violations) {
      auto where = v.location;
      where.insert(where.begin(), k);
      add(ViolationKind::bad_triangle,
          "triangle " + std::to_string(k) + " (" + p.triangles()[k].name + "): " + violation_name(v.kind) + ": " +
              v.detail,
          std::move(where));
    }
  }
  return report;
}

std::vector<std::size_t> irreducible_counts(const CategoryPresentation& p, const ValidationReport& v,
                                            Execution exec) {
  const std::size_t n = p.size();
  auto radical = [&](ObjectId x, ObjectId y) {
    return x == y ? v.radicals.at(x) : Subspace::full(p.hom_dim(x, y));
  };
  return map_indices<std::size_t>(
      n * n,
      [&](std::size_t idx) -> std::size_t {
        const ObjectId x = idx / n, y = idx % n;
        const Subspace rad = radical(x, y);
        std::vector<Vector> composites;
        for (ObjectId w = 0; w < n; ++w) {
          const auto left = radical(x, w).basis_vectors();
          const auto right = radical(w, y).basis_vectors();
          for (const auto& a : left)
            for (const auto& b : right) composites.push_back(compose_vectors(p, x, w, y, a, b));
        }
        const Subspace rad2 = Subspace::span(p.hom_dim(x, y), composites);
        return rad.dim() - rad2.dim();
      },
      exec);
}

}  // namespace rankcalc

#include "rankcalc/mesh.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rankcalc/error.hpp"

namespace rankcalc {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<MeshVertex> vertices_at_level(int n, long t) {
  std::vector<MeshVertex> out;
  for (int l = 1; l <= n; ++l) {
    if ((t - l) % 2 == 0) out.push_back({(t - l) / 2, l});
  }
  return out;
}

// Inverse of a square invertible matrix via reduced echelon form of [A | I].
Matrix inverse(const Matrix& a) {
  const std::size_t d = a.rows();
  Matrix aug(d, 2 * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) aug(r, c) = a(r, c);
    aug(r, d + r) = 1;
  }
  const auto ech = row_echelon(aug);
  Matrix inv(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) inv(r, c) = ech.reduced(r, d + c);
  return inv;
}

// phi = tau^(-a) Sigma^b on ZA_n and the orbit bookkeeping around it.
class Identification {
 public:
  Identification(int n, long a, long b) : n_(n), a_(a), b_(b) {
    shift_ = 2 * a_ + b_ * (n_ + 1);
    if (shift_ < 0) {
      a_ = -a_;
      b_ = -b_;
      shift_ = -shift_;
    }
  }

  long shift() const noexcept { return shift_; }

  MeshVertex apply(MeshVertex v, long k) const {
    for (; k > 0; --k) v = forward(v);
    for (; k < 0; ++k) v = backward(v);
    return v;
  }

  MeshPath apply(const MeshPath& path, long k) const {
    MeshPath out;
    out.reserve(path.size());
    for (const auto& v : path) out.push_back(apply(v, k));
    return out;
  }

  /// v = phi^s(r) with 0 <= level(r) < shift.
  std::pair<MeshVertex, long> reduce(const MeshVertex& v) const {
    const long s = floor_div(v.level(), shift_);
    return {apply(v, -s), s};
  }

 private:
  MeshVertex forward(MeshVertex v) const {
    for (long i = 0; i < a_; ++i) v = tau_inverse(v);
    for (long i = a_; i < 0; ++i) v = tau(v);
    for (long i = 0; i < b_; ++i) v = sigma_shift(n_, v);
    for (long i = b_; i < 0; ++i) v = sigma_shift_inverse(n_, v);
    return v;
  }
  MeshVertex backward(MeshVertex v) const {
    for (long i = 0; i < b_; ++i) v = sigma_shift_inverse(n_, v);
    for (long i = b_; i < 0; ++i) v = sigma_shift(n_, v);
    for (long i = 0; i < a_; ++i) v = tau(v);
    for (long i = a_; i < 0; ++i) v = tau_inverse(v);
    return v;
  }

  int n_;
  long a_, b_;
  long shift_;
};

struct HomBlock {
  long shift;
  std::size_t offset;
  std::size_t dim;
};

std::string object_name(long k, int j) {
  if (k == 0) return "T" + std::to_string(j);
  if (k == 1) return "ST" + std::to_string(j);
  return "S" + std::to_string(k) + "T" + std::to_string(j);
}

}  // namespace

// ---------------------------------------------------------------------------

std::size_t MeshHomTable::dim(const MeshVertex& v) const {
  const auto it = basis.find(v);
  return it == basis.end() ? 0 : it->second.size();
}

Vector MeshHomTable::walk(const MeshPath& path, Vector value) const {
  for (std::size_t k = 1; k < path.size(); ++k) {
    const auto it = arrow_maps.find({path[k - 1], path[k]});
    if (it == arrow_maps.end()) return Vector(dim(path.back()));
    value = it->second * value;
  }
  return value;
}

bool is_vertex(int n, const MeshVertex& v) noexcept { return v.l >= 1 && v.l <= n; }
MeshVertex tau(const MeshVertex& v) noexcept { return {v.p - 1, v.l}; }
MeshVertex tau_inverse(const MeshVertex& v) noexcept { return {v.p + 1, v.l}; }
MeshVertex sigma_shift(int n, const MeshVertex& v) noexcept { return {v.p + v.l, n + 1 - v.l}; }
MeshVertex sigma_shift_inverse(int n, const MeshVertex& v) noexcept {
  const int l = n + 1 - v.l;
  return {v.p - l, l};
}

std::vector<MeshVertex> predecessors(int n, const MeshVertex& v) {
  std::vector<MeshVertex> out;
  if (v.l > 1) out.push_back({v.p, v.l - 1});
  if (v.l < n) out.push_back({v.p - 1, v.l + 1});
  return out;
}

MeshHomTable covering_hom(int n, const MeshVertex& x, std::size_t tau_steps) {
  if (n < 1 || !is_vertex(n, x)) throw Error(Errc::invalid_argument, "not a vertex of the covering quiver");
  MeshHomTable table;
  table.source = x;
  table.basis[x] = {MeshPath{x}};
  const long first = x.level();
  const long last = first + 2 * static_cast<long>(tau_steps);
  bool previous_zero = false;  // level t-1 vanished
  bool died = false;
  for (long t = first + 1; t <= last; ++t) {
    bool level_zero = true;
    for (const MeshVertex& z : vertices_at_level(n, t)) {
      const auto preds = predecessors(n, z);
      std::vector<std::size_t> offset{0};
      for (const auto& w : preds) offset.push_back(offset.back() + table.dim(w));
      const std::size_t total = offset.back();
      if (total == 0) continue;

      // The mesh ending at z kills the image of Hom(x, tau z).
      std::vector<Vector> image;
      const MeshVertex tz = tau(z);
      for (std::size_t k = 0; k < table.dim(tz); ++k) {
        Vector v(total);
        for (std::size_t i = 0; i < preds.size(); ++i) {
          const auto it = table.arrow_maps.find({tz, preds[i]});
          if (it == table.arrow_maps.end()) continue;
          for (std::size_t r = 0; r < it->second.rows(); ++r) v[offset[i] + r] = it->second(r, k);
        }
        image.push_back(std::move(v));
      }
      const Subspace relations = Subspace::span(total, image);

      struct Candidate {
        MeshPath path;
        std::size_t index;
      };
      std::vector<Candidate> candidates;
      for (std::size_t i = 0; i < preds.size(); ++i) {
        const auto it = table.basis.find(preds[i]);
        if (it == table.basis.end()) continue;
        for (std::size_t b = 0; b < it->second.size(); ++b) {
          MeshPath p = it->second[b];
          p.push_back(z);
          candidates.push_back({std::move(p), offset[i] + b});
        }
      }
      std::sort(candidates.begin(), candidates.end(),
                [](const Candidate& a, const Candidate& b) { return a.path < b.path; });

      std::vector<Vector> spanning = relations.basis_vectors();
      Subspace current = relations;
      std::vector<const Candidate*> chosen;
      for (const auto& c : candidates) {
        const Vector e = unit_vector(total, c.index);
        if (current.contains(e)) continue;
        chosen.push_back(&c);
        spanning.push_back(e);
        current = Subspace::span(total, spanning);
      }
      if (chosen.empty()) continue;
      level_zero = false;

      // Coordinates modulo the relations: rows of the inverse belonging to
      // the chosen residual paths.
      const Matrix change = inverse(Matrix::from_column_vectors(total, spanning));
      const std::size_t skip = relations.dim();
      std::vector<MeshPath> basis;
      for (const auto* c : chosen) basis.push_back(c->path);
      table.basis[z] = std::move(basis);
      for (std::size_t i = 0; i < preds.size(); ++i) {
        const std::size_t dw = table.dim(preds[i]);
        if (dw == 0) continue;
        Matrix m(chosen.size(), dw);
        for (std::size_t r = 0; r < chosen.size(); ++r)
          for (std::size_t c = 0; c < dw; ++c) m(r, c) = change(skip + r, offset[i] + c);
        table.arrow_maps.emplace(std::make_pair(preds[i], z), std::move(m));
      }
    }
    if (level_zero && previous_zero) {
      died = true;
      break;
    }
    previous_zero = level_zero;
  }
  if (!died && n > 0) {
    bool tail_zero = true;
    for (long t = std::max(first, last - 1); t <= last; ++t)
      for (const auto& v : vertices_at_level(n, t)) tail_zero = tail_zero && table.dim(v) == 0;
    if (!tail_zero)
      throw Error(Errc::window_overflow, "Hom(" + std::to_string(x.p) + "," + std::to_string(x.l) +
                                             ", -) does not vanish within " + std::to_string(tau_steps) +
                                             " tau-steps");
  }
  return table;
}

// ---------------------------------------------------------------------------

CategoryPresentation build_mesh_category(const TranslationQuiverSpec& spec, Execution exec) {
  const int n = spec.n;
  if (n < 1) throw Error(Errc::invalid_argument, "n must be at least 1");
  const Identification phi(n, spec.tau_inverse_power, spec.sigma_power);
  if (phi.shift() == 0)
    throw Error(Errc::infinite_orbit_quiver, "the identification does not move levels; the orbit quiver is infinite");

  std::vector<MeshVertex> reps;
  for (long t = 0; t < phi.shift(); ++t)
    for (const auto& v : vertices_at_level(n, t)) reps.push_back(v);
  std::map<MeshVertex, std::size_t> rep_index;
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = i;
  const std::size_t m = reps.size();
  const std::size_t steps = spec.window.value_or(4 * m);

  const auto tables =
      map_indices<MeshHomTable>(m, [&](std::size_t i) { return covering_hom(n, reps[i], steps); }, exec);

  auto class_of = [&](const MeshVertex& v) {
    const auto [r, s] = phi.reduce(v);
    return std::make_pair(rep_index.at(r), s);
  };

  // sigma on orbits, and object names from the Sigma-orbits of (0, j).
  std::vector<std::size_t> sigma(m);
  for (std::size_t i = 0; i < m; ++i) sigma[i] = class_of(sigma_shift(n, reps[i])).first;

  struct NameKey {
    long abs_k = 0;
    bool negative = false;
    int j = 0;
    long k = 0;
    bool named = false;
  };
  std::vector<NameKey> keys(m);
  for (int j = 1; j <= n; ++j) {
    const std::size_t base = class_of({0, j}).first;
    std::vector<std::size_t> orbit{base};
    for (std::size_t y = sigma[base]; y != base; y = sigma[y]) orbit.push_back(y);
    const long size = static_cast<long>(orbit.size());
    for (long pos = 0; pos < size; ++pos) {
      for (long k : {pos, pos - size}) {
        NameKey key{std::labs(k), k < 0, j, k, true};
        auto& cur = keys[orbit[static_cast<std::size_t>(pos)]];
        if (!cur.named || std::tie(key.abs_k, key.j, key.negative) < std::tie(cur.abs_k, cur.j, cur.negative))
          cur = key;
      }
    }
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ka = keys[a];
    const auto& kb = keys[b];
    if (ka.named != kb.named) return ka.named;
    if (!ka.named) return false;  // fall back to level order
    return std::tie(ka.abs_k, ka.negative, ka.j) < std::tie(kb.abs_k, kb.negative, kb.j);
  });
  std::vector<std::size_t> position(m);
  std::vector<std::string> names(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t r = order[k];
    position[r] = k;
    names[k] = keys[r].named ? object_name(keys[r].k, keys[r].j)
                             : "V" + std::to_string(reps[r].p) + "_" + std::to_string(reps[r].l);
  }

  // Hom_C(x, y) = sum over s of Hom(x, phi^s y), blocks ordered by s.
  std::vector<std::vector<std::vector<HomBlock>>> layout(m, std::vector<std::vector<HomBlock>>(m));
  std::vector<std::size_t> dims(m * m, 0);
  for (std::size_t x = 0; x < m; ++x) {
    std::map<std::pair<std::size_t, long>, std::size_t> found;
    for (const auto& [v, basis] : tables[x].basis)
      if (!basis.empty()) found[class_of(v)] = basis.size();
    for (const auto& [ys, d] : found) {
      auto& blocks = layout[x][ys.first];
      const std::size_t offset = blocks.empty() ? 0 : blocks.back().offset + blocks.back().dim;
      blocks.push_back({ys.second, offset, d});
    }
    for (std::size_t y = 0; y < m; ++y) {
      const auto& blocks = layout[x][y];
      dims[position[x] * m + position[y]] = blocks.empty() ? 0 : blocks.back().offset + blocks.back().dim;
    }
  }
  auto hom_dim = [&](std::size_t x, std::size_t y) { return dims[position[x] * m + position[y]]; };

  // Element of Hom(x, v) in the covering, as a morphism x -> [v] of C.
  auto to_c = [&](std::size_t x, const MeshVertex& v, const Vector& value) {
    const auto [y, s] = class_of(v);
    Vector out(hom_dim(x, y));
    for (const auto& b : layout[x][y])
      if (b.shift == s)
        for (std::size_t k = 0; k < b.dim; ++k) out[b.offset + k] = value[k];
    return std::make_pair(y, out);
  };
  // Arbitrary covering path as a morphism between the orbits of its ends.
  auto path_morphism = [&](const MeshPath& path) {
    const auto [x, s] = class_of(path.front());
    const MeshPath moved = phi.apply(path, -s);
    const Vector value = tables[x].walk(moved, Vector{Rational(1)});
    return std::make_pair(x, to_c(x, moved.back(), value));
  };
  auto basis_element = [&](std::size_t x, std::size_t y, std::size_t i) {
    for (const auto& b : layout[x][y])
      if (i < b.offset + b.dim) return std::make_pair(b.shift, i - b.offset);
    throw Error(Errc::invalid_argument, "basis index out of range");
  };

  CategoryPresentation p(names, dims);
  for (std::size_t x = 0; x < m; ++x) {
    p.set_identity(position[x], to_c(x, reps[x], Vector{Rational(1)}).second);
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = 0; z < m; ++z) {
        for (std::size_t i = 0; i < hom_dim(x, y); ++i) {
          const auto [s, bi] = basis_element(x, y, i);
          const MeshVertex mid = phi.apply(reps[y], s);
          for (std::size_t j = 0; j < hom_dim(y, z); ++j) {
            const auto [s2, bj] = basis_element(y, z, j);
            const MeshPath& q = tables[y].basis.at(phi.apply(reps[z], s2))[bj];
            const MeshPath moved = phi.apply(q, s);
            const Vector value = tables[x].walk(moved, unit_vector(tables[x].dim(mid), bi));
            p.set_composition(position[x], position[y], position[z], i, j, to_c(x, moved.back(), value).second);
          }
        }
      }
    }
  }

  std::vector<ObjectId> perm(m);
  for (std::size_t x = 0; x < m; ++x) perm[position[x]] = position[sigma[x]];
  p.set_sigma(perm);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      Matrix s(hom_dim(sigma[x], sigma[y]), hom_dim(x, y));
      for (std::size_t i = 0; i < hom_dim(x, y); ++i) {
        const auto [sh, bi] = basis_element(x, y, i);
        MeshPath path = tables[x].basis.at(phi.apply(reps[y], sh))[bi];
        for (auto& v : path) v = sigma_shift(n, v);
        const auto [sx, image] = path_morphism(path);
        for (std::size_t r = 0; r < image.second.size(); ++r) s(r, i) = image.second[r];
        (void)sx;
      }
      p.set_sigma_map(position[x], position[y], std::move(s));
    }
  }

  std::size_t period = 1;
  for (std::size_t x = 0; x < m; ++x) {
    std::size_t len = 1;
    for (std::size_t y = sigma[x]; y != x; y = sigma[y]) ++len;
    period = std::lcm(period, len);
  }
  p.set_period(period);
  if (n == 3 && spec.tau_inverse_power == 1 && spec.sigma_power == 1) p.set_generators({true, {}});

  // One Auslander-Reiten triangle tau z -> E -> z -> Sigma tau z per orbit.
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t zr = order[k];
    const MeshVertex z = reps[zr];
    const MeshVertex tz = tau(z);
    const auto middle = predecessors(n, z);
    std::vector<ObjectId> mids;
    for (const auto& w : middle) mids.push_back(position[class_of(w).first]);
    const ObjectExpr source = ObjectExpr::single(position[class_of(tz).first]);
    const ObjectExpr end = ObjectExpr::single(k);
    Triangle t;
    t.name = "ar." + names[k];
    t.f_name = t.name + ".f";
    t.g_name = t.name + ".g";
    t.h_name = t.name + ".h";
    t.f = {source, ObjectExpr(mids), {}};
    t.g = {ObjectExpr(mids), end, {}};
    for (const auto& w : middle) {
      t.f.blocks.push_back(path_morphism({tz, w}).second.second);
      t.g.blocks.push_back(path_morphism({w, z}).second.second);
    }
    const MeshVertex sz = tau(sigma_shift(n, z));
    if (tables[zr].dim(sz) != 1)
      throw Error(Errc::invalid_presentation, "Hom(z, tau Sigma z) is not one-dimensional in the covering");
    const auto [target, h] = to_c(zr, sz, Vector{Rational(1)});
    t.h = {end, ObjectExpr::single(position[target]), {h}};
    p.add_triangle(std::move(t));
  }

  const auto report = validate(p, exec);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(Errc::invalid_presentation,
                std::string("orbit category fails validation: ") + violation_name(v.kind) + ": " + v.detail);
  }
  return p;
}

CategoryPresentation cluster_category_an(int n, std::optional<std::size_t> window, Execution exec) {
  return build_mesh_category({n, 1, 1, window}, exec);
}

}  // namespace rankcalc

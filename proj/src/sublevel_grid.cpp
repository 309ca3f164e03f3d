#include "qflat/sublevel_grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "qflat/profiles.hpp"

namespace qflat {

double GridField::spacing() const {
  return std::max(1.0 / nq, 2.0 / (np - 1));
}

GridField annulus_field(const std::vector<double>& a, double delta, int nq, int np, double eps,
                        std::uint64_t seed) {
  if (nq < 8 || np < 8) throw std::invalid_argument("annulus_field: resolution below 8x8");
  if (eps < 0.0) throw std::invalid_argument("annulus_field: negative perturbation amplitude");
  ProfileSum sum{build_bump(delta), a};

  GridField f;
  f.nq = nq;
  f.np = np;
  f.values.resize(static_cast<std::size_t>(nq) * np);
  for (int i = 0; i < nq; ++i) {
    double q = static_cast<double>(i) / nq;
    double eta_q = std::cos(2.0 * std::numbers::pi * q);
    for (int j = 0; j < np; ++j) {
      double p = -1.0 + 2.0 * j / (np - 1);
      double g = sum.eval(2.0 * std::abs(p) - 0.5) + eps * eta_q * (1.0 - p * p);
      f.values[static_cast<std::size_t>(i) * np + j] = -g;
    }
  }
  f.metadata = {{"model", "annulus"}, {"coeffs", a}, {"delta", delta},
                {"eps", eps},         {"seed", seed}};
  return f;
}

namespace {

// Cell ids: vertices [0, V), q-edges [V, V+E), p-edges [V+E, V+E+F),
// squares [V+E+F, total). q wraps; p does not.
struct Cells {
  int nq, np;
  std::size_t V, E, F, total;

  explicit Cells(const GridField& f)
      : nq(f.nq), np(f.np),
        V(static_cast<std::size_t>(f.nq) * f.np),
        E(static_cast<std::size_t>(f.nq) * f.np),
        F(static_cast<std::size_t>(f.nq) * (f.np - 1)),
        total(V + E + 2 * F) {}

  int dim(std::size_t id) const { return id < V ? 0 : id < V + E + F ? 1 : 2; }

  std::size_t vert(int i, int j) const { return static_cast<std::size_t>(i) * np + j; }
  std::size_t qedge(int i, int j) const { return V + static_cast<std::size_t>(i) * np + j; }
  std::size_t pedge(int i, int j) const { return V + E + static_cast<std::size_t>(i) * (np - 1) + j; }
  std::size_t square(int i, int j) const { return V + E + F + static_cast<std::size_t>(i) * (np - 1) + j; }

  std::string name(std::size_t id) const {
    char kind;
    std::size_t rel;
    int cols;
    if (id < V) { kind = 'v'; rel = id; cols = np; }
    else if (id < V + E) { kind = 'q'; rel = id - V; cols = np; }
    else if (id < V + E + F) { kind = 'p'; rel = id - V - E; cols = np - 1; }
    else { kind = 's'; rel = id - V - E - F; cols = np - 1; }
    return std::string(1, kind) + ":" + std::to_string(rel / cols) + "," +
           std::to_string(rel % cols);
  }
};

void xor_merge(std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  a = std::move(out);
}

}  // namespace

Barcode cubical_barcode(const GridField& field) {
  Cells c(field);
  if (c.total > 4'000'000)
    throw std::runtime_error("cubical_barcode: cell count exceeds the 4e6 guard");

  std::vector<double> val(c.total);
  for (int i = 0; i < c.nq; ++i) {
    int inext = (i + 1) % c.nq;
    for (int j = 0; j < c.np; ++j) {
      double v00 = field.at(i, j);
      val[c.vert(i, j)] = v00;
      val[c.qedge(i, j)] = std::max(v00, field.at(inext, j));
      if (j + 1 < c.np) {
        double v01 = field.at(i, j + 1);
        val[c.pedge(i, j)] = std::max(v00, v01);
        val[c.square(i, j)] = std::max(std::max(v00, v01),
                                       std::max(field.at(inext, j), field.at(inext, j + 1)));
      }
    }
  }

  std::vector<std::size_t> order(c.total);
  for (std::size_t id = 0; id < c.total; ++id) order[id] = id;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (val[x] != val[y]) return val[x] < val[y];
    int dx = c.dim(x), dy = c.dim(y);
    if (dx != dy) return dx < dy;
    return x < y;
  });
  std::vector<std::size_t> pos(c.total);
  for (std::size_t k = 0; k < c.total; ++k) pos[order[k]] = k;

  Barcode bc;
  auto emit = [&](int degree, std::size_t creator, std::size_t destroyer, bool infinite) {
    Bar b;
    b.degree = degree;
    b.low = val[creator];
    b.creator_id = c.name(creator);
    if (!infinite) {
      b.high = val[destroyer];
      b.destroyer_id = c.name(destroyer);
      if (!(b.high > b.low)) return;  // zero-length
    }
    bc.bars.push_back(std::move(b));
  };

  // Squares first (clearing): pivots are edges that create the paired 1-cycles.
  std::vector<std::vector<std::size_t>> stored(c.total);
  std::vector<char> is_pivot_row(c.total, 0);
  for (std::size_t k = 0; k < c.total; ++k) {
    std::size_t id = order[k];
    if (c.dim(id) != 2) continue;
    std::size_t rel = id - c.V - c.E - c.F;
    int i = static_cast<int>(rel / (c.np - 1));
    int j = static_cast<int>(rel % (c.np - 1));
    std::vector<std::size_t> col{pos[c.qedge(i, j)], pos[c.qedge(i, j + 1)],
                                 pos[c.pedge(i, j)], pos[c.pedge((i + 1) % c.nq, j)]};
    std::sort(col.begin(), col.end());
    while (!col.empty() && !stored[col.back()].empty()) xor_merge(col, stored[col.back()]);
    if (col.empty()) {
      emit(2, id, 0, true);
    } else {
      std::size_t piv = col.back();
      is_pivot_row[order[piv]] = 1;
      emit(1, order[piv], id, false);
      stored[piv] = std::move(col);
    }
  }

  // Vertex-edge pairing by elder-rule union-find; roots carry the oldest
  // vertex position. Cycle-creating edges not cleared above are infinite.
  std::vector<std::size_t> parent(c.total);
  for (std::size_t k = 0; k < c.total; ++k) parent[k] = k;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t k = 0; k < c.total; ++k) {
    std::size_t id = order[k];
    if (c.dim(id) != 1) continue;
    std::size_t u, v;
    if (id < c.V + c.E) {
      std::size_t rel = id - c.V;
      int i = static_cast<int>(rel / c.np), j = static_cast<int>(rel % c.np);
      u = c.vert(i, j);
      v = c.vert((i + 1) % c.nq, j);
    } else {
      std::size_t rel = id - c.V - c.E;
      int i = static_cast<int>(rel / (c.np - 1)), j = static_cast<int>(rel % (c.np - 1));
      u = c.vert(i, j);
      v = c.vert(i, j + 1);
    }
    std::size_t ru = find(pos[u]), rv = find(pos[v]);
    if (ru == rv) {
      if (!is_pivot_row[id]) emit(1, id, 0, true);
      continue;
    }
    std::size_t young = std::max(ru, rv), old = std::min(ru, rv);
    parent[young] = old;
    emit(0, order[young], id, false);
  }
  for (std::size_t k = 0; k < c.total; ++k) {
    std::size_t id = order[k];
    if (c.dim(id) == 0 && find(k) == k) emit(0, id, 0, true);
  }

  std::sort(bc.bars.begin(), bc.bars.end(), [](const Bar& x, const Bar& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    if (x.low != y.low) return x.low < y.low;
    if (x.high != y.high) return x.high < y.high;
    return x.creator_id < y.creator_id;
  });
  return bc;
}

MorseBetaResult morse_beta_estimate(const std::vector<double>& a, double delta, int nq, int np,
                                    double eps, std::uint64_t seed) {
  GridField field = annulus_field(a, delta, nq, np, eps, seed);
  MorseBetaResult r;
  r.bc = cubical_barcode(field);
  r.beta_hat = longest_finite_bar(r.bc);
  double min_a = 0.0, max_abs = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    min_a = std::min(min_a, a[i]);
    max_abs = std::max(max_abs, std::abs(a[i]) * std::ldexp(1.0, static_cast<int>(i) + 1));
  }
  r.target = -min_a;
  // |dF/dp| <= 2 max|f_a'| + 2 eps, |dF/dq| <= 2 pi eps.
  double lipschitz = 2.0 * max_abs * build_bump(delta).max_abs_deriv() +
                     eps * (2.0 * std::numbers::pi + 2.0);
  r.tol = 2.0 * lipschitz * field.spacing() + 3.0 * eps;
  r.pass = r.beta_hat >= r.target - r.tol;
  return r;
}

void write_field(const GridField& field, const std::string& path) {
  json header = {{"schema", "grid-field/1"},
                 {"nq", field.nq},
                 {"np", field.np},
                 {"metadata", field.metadata}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_field: cannot open " + path);
  out << header.dump() << '\n';
  out.write(reinterpret_cast<const char*>(field.values.data()),
            static_cast<std::streamsize>(field.values.size() * sizeof(double)));
  if (!out) throw std::runtime_error("write_field: write failed for " + path);
}

GridField read_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_field: cannot open " + path);
  std::string line;
  std::getline(in, line);
  json header = json::parse(line);
  if (header.value("schema", "") != "grid-field/1")
    throw std::runtime_error("read_field: unrecognized header in " + path);
  GridField f;
  f.nq = header.at("nq").get<int>();
  f.np = header.at("np").get<int>();
  f.metadata = header.value("metadata", json::object());
  f.values.resize(static_cast<std::size_t>(f.nq) * f.np);
  in.read(reinterpret_cast<char*>(f.values.data()),
          static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  if (!in) throw std::runtime_error("read_field: truncated payload in " + path);
  return f;
}

}  // namespace qflat

#include "wavelab/trace.hpp"

#include <cmath>

namespace wavelab {

std::vector<std::size_t> inner_boundary_nodes(const GridSpec& g) {
  std::vector<std::size_t> nodes;
  const int klo = g.dim > 2 ? g.inner_lo[2] : 0;
  const int khi = g.dim > 2 ? g.inner_hi[2] : 0;
  const int jlo = g.dim > 1 ? g.inner_lo[1] : 0;
  const int jhi = g.dim > 1 ? g.inner_hi[1] : 0;
  for (int k = klo; k <= khi; ++k)
    for (int j = jlo; j <= jhi; ++j)
      for (int i = g.inner_lo[0]; i <= g.inner_hi[0]; ++i) {
        bool on_face = (i == g.inner_lo[0] || i == g.inner_hi[0]);
        if (g.dim > 1)
          on_face = on_face || j == g.inner_lo[1] || j == g.inner_hi[1];
        if (g.dim > 2)
          on_face = on_face || k == g.inner_lo[2] || k == g.inner_hi[2];
        if (on_face) nodes.push_back(g.index(i, j, k));
      }
  return nodes;
}

BoundaryTrace trace(const WaveField& u, const GridSpec& g) {
  BoundaryTrace tr;
  tr.nodes = inner_boundary_nodes(g);
  tr.coords.reserve(tr.nodes.size());
  for (auto p : tr.nodes) tr.coords.push_back(g.coords(p));
  tr.weight = std::pow(g.h, g.dim - 1);
  tr.dt = g.dt;
  tr.n_steps = g.n_steps;
  tr.samples.resize(u.snapshots.size());
  for (std::size_t n = 0; n < u.snapshots.size(); ++n) {
    auto& row = tr.samples[n];
    row.resize(tr.nodes.size() * 3);
    for (std::size_t q = 0; q < tr.nodes.size(); ++q)
      for (int c = 0; c < 3; ++c)
        row[q * 3 + c] = u.snapshots[n].comp[c][tr.nodes[q]];
  }
  return tr;
}

double trace_l2_at(const BoundaryTrace& tr, int step) {
  if (step < 0 || static_cast<std::size_t>(step) >= tr.samples.size())
    throw Error("trace step out of range");
  double s = 0.0;
  for (double v : tr.samples[step]) s += v * v;
  return std::sqrt(s * tr.weight);
}

double trace_norm(const BoundaryTrace& tr) {
  double acc = 0.0;
  const int last = static_cast<int>(tr.samples.size()) - 1;
  for (int n = 0; n <= last; ++n) {
    double s = 0.0;
    for (double v : tr.samples[n]) s += v * v;
    const double w = (n == 0 || n == last) ? 0.5 : 1.0;
    acc += w * s;
  }
  return std::sqrt(acc * tr.weight * tr.dt);
}

namespace {

void check_compatible(const BoundaryTrace& a, const BoundaryTrace& b) {
  if (a.nodes != b.nodes || a.samples.size() != b.samples.size())
    throw Error("traces live on different node sets or step counts");
}

}  // namespace

double trace_diff(const BoundaryTrace& a, const BoundaryTrace& b) {
  check_compatible(a, b);
  double acc = 0.0;
  const int last = static_cast<int>(a.samples.size()) - 1;
  for (int n = 0; n <= last; ++n) {
    double s = 0.0;
    for (std::size_t q = 0; q < a.samples[n].size(); ++q) {
      const double v = a.samples[n][q] - b.samples[n][q];
      s += v * v;
    }
    const double w = (n == 0 || n == last) ? 0.5 : 1.0;
    acc += w * s;
  }
  return std::sqrt(acc * a.weight * a.dt);
}

BoundaryTrace trace_axpby(double a, const BoundaryTrace& A, double b,
                          const BoundaryTrace& B) {
  check_compatible(A, B);
  BoundaryTrace out = A;
  for (std::size_t n = 0; n < out.samples.size(); ++n)
    for (std::size_t q = 0; q < out.samples[n].size(); ++q)
      out.samples[n][q] = a * A.samples[n][q] + b * B.samples[n][q];
  return out;
}

BoundaryTrace lambda_map(const SpeedSystem& sys, const SourceData& f,
                         const GridSpec& g, double coupling_scale) {
  NonlinearProblem prob;
  prob.sys = sys;
  prob.source = f;
  prob.grid = g;
  prob.coupling_scale = coupling_scale;
  const WaveField u = solve_coupled(prob);
  return trace(u, g);
}

BoundaryTrace lambda_lin_map(const SpeedSystem& sys, const SourceData& f1,
                             const GridSpec& g) {
  const WaveField u = solve_system_linear(sys, f1, g);
  return trace(u, g);
}

}  // namespace wavelab

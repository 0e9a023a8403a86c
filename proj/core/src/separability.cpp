#include "spinpair/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spinpair/entanglement.hpp"
#include "spinpair/error.hpp"
#include "spinpair/parallel.hpp"

namespace spinpair {

namespace {

BlochState checked_point(const StatePath& path, double u) {
  BlochState b = path(u);
  if (!validity(b).valid) {
    throw InvalidState("boundary_bisect: path leaves the physical domain at u = " +
                       std::to_string(u));
  }
  return b;
}

double ppt_at(const StatePath& path, double u) {
  return ppt_min_eig(to_matrix(checked_point(path, u)));
}

// Entangled side is "negative".
bool entangled(double ppt) { return ppt < -kSeparableTol; }

}  // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw InvalidArgument("partial_transpose: expected a 4x4 matrix");
  ComplexMatrix out(4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) out(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
  return out;
}

double ppt_min_eig(const DensityMatrix& rho) {
  return hermitian_eigenvalues(partial_transpose(rho.m)).min();
}

double boundary_bisect(const StatePath& path, double u_lo, double u_hi, double tol) {
  if (!(u_lo < u_hi) || !(tol > 0.0)) {
    throw InvalidArgument("boundary_bisect: need u_lo < u_hi and tol > 0");
  }
  const bool lo_side = entangled(ppt_at(path, u_lo));
  const bool hi_side = entangled(ppt_at(path, u_hi));
  if (lo_side == hi_side) {
    throw InvalidArgument("boundary_bisect: no separability change between u = " +
                          std::to_string(u_lo) + " and u = " + std::to_string(u_hi));
  }
  double lo = u_lo, hi = u_hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (entangled(ppt_at(path, mid)) == lo_side) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double AxisRange::at(int i) const noexcept {
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void validate(const ScanConfig& cfg) {
  for (const AxisRange* r : {&cfg.range1, &cfg.range2}) {
    if (r->steps < 2) throw InvalidArgument("scan: steps must be >= 2");
    if (!(r->lo < r->hi)) throw InvalidArgument("scan: range needs lo < hi");
  }
  const auto i1 = bloch_field_index(cfg.axis1, cfg.family);
  const auto i2 = bloch_field_index(cfg.axis2, cfg.family);
  if (!i1) throw InvalidArgument("scan: unknown axis '" + cfg.axis1 + "'");
  if (!i2) throw InvalidArgument("scan: unknown axis '" + cfg.axis2 + "'");
  if (*i1 == *i2) throw InvalidArgument("scan: axes must be distinct");
}

ScanCell evaluate_point(const BlochState& b, ScanMethod method) {
  ScanCell cell;
  cell.in_domain = validity(b).valid;
  if (!cell.in_domain) {
    cell.concurrence = std::numeric_limits<double>::quiet_NaN();
    cell.ppt_min_eig = std::numeric_limits<double>::quiet_NaN();
    cell.lambdas.fill(std::numeric_limits<double>::quiet_NaN());
    return cell;
  }
  const DensityMatrix rho = to_matrix(b);
  const EntanglementReport r =
      method == ScanMethod::ClosedForm ? closed_form(b) : wootters_oracle(rho);
  cell.concurrence = r.concurrence;
  cell.lambdas = r.lambdas;
  cell.ppt_min_eig = ppt_min_eig(rho);
  return cell;
}

ScanGrid scan_grid(const ScanConfig& cfg, unsigned jobs, ScanMethod method) {
  validate(cfg);
  BlochState base = cfg.fixed;
  base.family = cfg.family;
  const std::size_t i1 = *bloch_field_index(cfg.axis1, cfg.family);
  const std::size_t i2 = *bloch_field_index(cfg.axis2, cfg.family);
  const std::size_t n1 = static_cast<std::size_t>(cfg.range1.steps);
  const std::size_t n2 = static_cast<std::size_t>(cfg.range2.steps);

  ScanGrid grid{cfg, std::vector<ScanCell>(n1 * n2)};
  parallel_for(grid.cells.size(), jobs, [&](std::size_t idx) {
    const std::size_t i = idx % n1, j = idx / n1;
    auto p = base.params();
    p[i1] = cfg.range1.at(static_cast<int>(i));
    p[i2] = cfg.range2.at(static_cast<int>(j));
    ScanCell cell = evaluate_point(BlochState::from_params(cfg.family, p), method);
    cell.u1 = p[i1];
    cell.u2 = p[i2];
    grid.cells[idx] = cell;
  });

  const bool any = std::any_of(grid.cells.begin(), grid.cells.end(),
                               [](const ScanCell& c) { return c.in_domain; });
  if (!any) throw EmptyResult("scan: no grid cell lies inside the physical domain");
  return grid;
}

}  // namespace spinpair

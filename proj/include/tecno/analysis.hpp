#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tecno/grid.hpp"
#include "tecno/reconstruction.hpp"

namespace tecno {

enum class Norm { l1, linf };

/// L1_h = sum |e_i| h, Linf_h = max |e_i|.
inline double discrete_norm(std::span<const double> values, double h, Norm p) {
  double acc = 0.0;
  for (double e : values) {
    if (p == Norm::l1) acc += std::abs(e) * h;
    else acc = std::max(acc, std::abs(e));
  }
  return acc;
}

struct ErrorPair {
  double l1 = 0.0;
  double linf = 0.0;
};

/// Interface reconstruction error ||u^- - u(x)|| + ||u^+ - u(x)|| over
/// interfaces 0..n_cells. Ghosts must be filled.
inline ErrorPair recon_error(const CellField& field, const std::function<double(double)>& exact,
                             Scheme scheme) {
  const Grid& grid = field.grid();
  const auto traces = reconstruct_field(field, scheme);
  std::vector<double> err_minus(traces.size()), err_plus(traces.size());
  for (std::size_t k = 0; k < traces.size(); ++k) {
    const double u = exact(grid.interface_position(static_cast<int>(k)));
    err_minus[k] = traces[k].v_minus - u;
    err_plus[k] = traces[k].v_plus - u;
  }
  return {discrete_norm(err_minus, grid.h, Norm::l1) + discrete_norm(err_plus, grid.h, Norm::l1),
          discrete_norm(err_minus, grid.h, Norm::linf) +
              discrete_norm(err_plus, grid.h, Norm::linf)};
}

/// ln(e_coarse/e_fine) / ln(n_fine/n_coarse); absent for non-positive errors.
inline std::optional<double> convergence_rate(double e_coarse, double e_fine, int n_coarse,
                                              int n_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0) || n_fine <= n_coarse) return std::nullopt;
  return std::log(e_coarse / e_fine) / std::log(static_cast<double>(n_fine) / n_coarse);
}

struct ErrorReport {
  int n_cells = 0;
  double l1 = 0.0;
  double linf = 0.0;
  std::optional<double> rate_l1;
  std::optional<double> rate_linf;
};

/// Fills rates between consecutive rows (rows sorted by n_cells).
inline std::vector<ErrorReport> with_rates(std::vector<ErrorReport> rows) {
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto& c = rows[k - 1];
    auto& f = rows[k];
    f.rate_l1 = convergence_rate(c.l1, f.l1, c.n_cells, f.n_cells);
    f.rate_linf = convergence_rate(c.linf, f.linf, c.n_cells, f.n_cells);
  }
  return rows;
}

/// E = sum u_i^2/2 h over interior cells.
inline double total_entropy(const CellField& field) {
  double e = 0.0;
  for (double u : field.interior()) e += 0.5 * u * u;
  return e * field.grid().h;
}

struct EntropySample {
  double t = 0.0;
  double entropy = 0.0;
  double relative_change = 0.0;
};

class EntropyHistory {
 public:
  void record(double t, double entropy) {
    if (!samples_.empty() && !(t > samples_.back().t)) {
      throw std::invalid_argument("EntropyHistory: times must increase");
    }
    if (samples_.empty()) e0_ = entropy;
    const double rel = e0_ != 0.0 ? (entropy - e0_) / e0_ : 0.0;
    samples_.push_back({t, entropy, rel});
  }
  void record(double t, const CellField& field) { record(t, total_entropy(field)); }

  const std::vector<EntropySample>& samples() const { return samples_; }
  double initial() const { return e0_; }

  /// Largest |relative change| over samples with t <= t_max.
  double max_abs_change_until(double t_max) const {
    double m = 0.0;
    for (const auto& s : samples_)
      if (s.t <= t_max) m = std::max(m, std::abs(s.relative_change));
    return m;
  }

 private:
  std::vector<EntropySample> samples_;
  double e0_ = 0.0;
};

}  // namespace tecno

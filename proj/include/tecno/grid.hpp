#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tecno {

/// Uniform 1-D grid on [a, b] with n_ghost padding cells on each side.
///
/// Interface k (0..n_cells) sits at a + k*h, between padded cells
/// (n_ghost + k - 1) and (n_ghost + k).
struct Grid {
  double a = 0.0;
  double b = 1.0;
  int n_cells = 0;
  int n_ghost = 2;
  double h = 0.0;

  double cell_center(int i) const { return a + (i + 0.5) * h; }
  double interface_position(int k) const { return a + k * h; }
  double length() const { return b - a; }
  int padded_size() const { return n_cells + 2 * n_ghost; }
};

inline constexpr int kMinCells = 5;
inline constexpr int kDefaultGhosts = 2;

inline Grid build_grid(double a, double b, int n_cells, int n_ghost = kDefaultGhosts) {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("build_grid: need finite a < b");
  }
  if (n_cells < kMinCells) {
    throw std::invalid_argument("build_grid: n_cells must be at least " +
                                std::to_string(kMinCells) + ", got " +
                                std::to_string(n_cells));
  }
  if (n_ghost < 1 || n_ghost > n_cells) {
    throw std::invalid_argument("build_grid: n_ghost out of range");
  }
  return Grid{a, b, n_cells, n_ghost, (b - a) / n_cells};
}

enum class BoundaryCondition { periodic, neumann };

inline std::string_view to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::periodic ? "periodic" : "neumann";
}

inline BoundaryCondition parse_boundary(std::string_view name) {
  if (name == "periodic") return BoundaryCondition::periodic;
  if (name == "neumann") return BoundaryCondition::neumann;
  throw std::invalid_argument("unknown boundary condition '" + std::string(name) +
                              "' (available: periodic, neumann)");
}

/// Cell-centered point values on a padded grid. Interior index i runs over
/// 0..n_cells-1; negative indices and indices >= n_cells address ghosts.
class CellField {
 public:
  CellField() = default;
  explicit CellField(const Grid& grid, double fill = 0.0)
      : grid_(grid), values_(static_cast<std::size_t>(grid.padded_size()), fill) {}

  template <class Fn>
  static CellField sample(const Grid& grid, Fn&& fn) {
    CellField field(grid);
    for (int i = 0; i < grid.n_cells; ++i) field[i] = fn(grid.cell_center(i));
    return field;
  }

  const Grid& grid() const { return grid_; }
  int size() const { return grid_.n_cells; }

  double& operator[](int i) { return values_[static_cast<std::size_t>(i + grid_.n_ghost)]; }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i + grid_.n_ghost)]; }

  std::span<double> padded() { return values_; }
  std::span<const double> padded() const { return values_; }
  std::span<double> interior() {
    return std::span<double>(values_).subspan(static_cast<std::size_t>(grid_.n_ghost),
                                              static_cast<std::size_t>(grid_.n_cells));
  }
  std::span<const double> interior() const {
    return std::span<const double>(values_).subspan(static_cast<std::size_t>(grid_.n_ghost),
                                                    static_cast<std::size_t>(grid_.n_cells));
  }

  bool all_finite() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
  }

 private:
  Grid grid_{};
  std::vector<double> values_;
};

/// Overwrites the ghost cells from the interior. Periodic wraps around;
/// Neumann copies the nearest interior value.
inline void fill_ghosts(CellField& field, BoundaryCondition bc) {
  const int n = field.size();
  const int g = field.grid().n_ghost;
  for (int k = 0; k < g; ++k) {
    if (bc == BoundaryCondition::periodic) {
      field[-g + k] = field[n - g + k];
      field[n + k] = field[k];
    } else {
      field[-g + k] = field[0];
      field[n + k] = field[n - 1];
    }
  }
}

}  // namespace tecno

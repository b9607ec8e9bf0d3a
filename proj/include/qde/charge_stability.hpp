#pragma once

#include <array>
#include <vector>

#include "qde/errors.hpp"

namespace qde {

// Classical charge occupation of a triple-dot column (n1, n2, n3). For the
// center system the middle entry is the total mediator occupation n_c.
struct ChargeConfig {
    std::array<int, 3> n{0, 0, 0};

    bool operator==(const ChargeConfig& o) const { return n == o.n; }
    bool operator!=(const ChargeConfig& o) const { return n != o.n; }
    bool operator<(const ChargeConfig& o) const { return n < o.n; }  // lexicographic
    int total() const { return n[0] + n[1] + n[2]; }
};

struct GroundResult {
    ChargeConfig config;
    double energy;  // units of U
    bool tie;       // another config matched the minimum (lexicographic winner kept)
};

// Fixed Hubbard parameters for one RX triple dot, all in units of U.
struct RxStabilityParams {
    double v = 0.33;
    double eps2 = 0.90;
};

// Fixed parameters for the center (a3, c, b1) triple dot, units of U.
// Follows K_c = U_c and K1 = K2 = V_c; the kappa term is excluded.
struct CenterStabilityParams {
    double u_c = 0.91;
    double v_c = 0.28;
    double eps_m = 2.1;
};

// Classical energy of a configuration, units of U.
double rx_config_energy(const ChargeConfig& c, double eps, double v_m, const RxStabilityParams& p);
double center_config_energy(const ChargeConfig& c, double eps_c, double v_mc,
                            const CenterStabilityParams& p);

// Ground configuration over (n1,n2,n3) in {0..2}^3; ties broken by the
// lexicographically smallest config.
GroundResult rx_ground_config(double eps, double v_m, const RxStabilityParams& p);

// Ground configuration over {0..2} x {0..4} x {0..2} for (n_a3, n_c, n_b1).
GroundResult center_ground_config(double eps_c, double v_mc, const CenterStabilityParams& p);

struct GridSpec {
    double x_min, x_max;
    int nx;
    double y_min, y_max;
    int ny;
    double x(int i) const { return nx > 1 ? x_min + (x_max - x_min) * i / (nx - 1) : x_min; }
    double y(int j) const { return ny > 1 ? y_min + (y_max - y_min) * j / (ny - 1) : y_min; }
};

enum class DiagramKind { rx, center };

// Row-major map of ground configs; cells[j*nx + i] belongs to (x_i, y_j).
struct StabilityMap {
    DiagramKind kind;
    GridSpec grid;
    std::vector<GroundResult> cells;
    const GroundResult& at(int i, int j) const { return cells[static_cast<std::size_t>(j) * grid.nx + i]; }
};

StabilityMap stability_diagram(DiagramKind kind, const GridSpec& grid,
                               const RxStabilityParams& rx, const CenterStabilityParams& center);

// Midpoints of grid edges where the ground config changes, with the two
// configs on either side. Ordered row-major, horizontal edges first per row.
struct BoundaryPoint {
    double x, y;
    ChargeConfig a, b;
};
std::vector<BoundaryPoint> boundaries(const StabilityMap& map);

// Simultaneous-operation-point constraint residual
// (V_mc + eps_m) - (V_m + eps2); zero at valid operation points.
double operation_point_constraint(double v_mc, double eps_m, double v_m, double eps2);

}  // namespace qde

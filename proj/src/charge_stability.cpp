#include "qde/charge_stability.hpp"

namespace qde {

double rx_config_energy(const ChargeConfig& c, double eps, double v_m,
                        const RxStabilityParams& p) {
    // eps = -(eps1 - eps3)/2 and v_m = -eps2 + (eps1 + eps3)/2 at fixed eps2
    const double eps1 = v_m + p.eps2 - eps;
    const double eps3 = v_m + p.eps2 + eps;
    const double n1 = c.n[0], n2 = c.n[1], n3 = c.n[2];
    double e = -eps1 * n1 - p.eps2 * n2 - eps3 * n3;
    e += 0.5 * (n1 * (n1 - 1.0) + n2 * (n2 - 1.0) + n3 * (n3 - 1.0));  // U = 1
    e += p.v * (n1 * n2 + n2 * n3);
    return e;
}

double center_config_energy(const ChargeConfig& c, double eps_c, double v_mc,
                            const CenterStabilityParams& p) {
    const double eps_a3 = v_mc + p.eps_m + eps_c;
    const double eps_b1 = v_mc + p.eps_m - eps_c;
    const double na = c.n[0], nc = c.n[1], nb = c.n[2];
    double e = -eps_a3 * na - p.eps_m * nc - eps_b1 * nb;
    e += 0.5 * (na * (na - 1.0) + nb * (nb - 1.0));  // U_a = U_b = U = 1
    e += 0.5 * p.u_c * nc * (nc - 1.0);
    e += p.v_c * (na * nc + nc * nb);
    return e;
}

namespace {

template <typename EnergyFn>
GroundResult argmin_config(int max_outer, int max_center, EnergyFn&& energy) {
    GroundResult best{};
    bool first = true;
    for (int n1 = 0; n1 <= max_outer; ++n1)
        for (int n2 = 0; n2 <= max_center; ++n2)
            for (int n3 = 0; n3 <= max_outer; ++n3) {
                const ChargeConfig c{{n1, n2, n3}};
                const double e = energy(c);
                if (first || e < best.energy) {
                    best = {c, e, false};
                    first = false;
                } else if (e == best.energy) {
                    best.tie = true;
                    if (c < best.config) best.config = c;
                }
            }
    return best;
}

}  // namespace

GroundResult rx_ground_config(double eps, double v_m, const RxStabilityParams& p) {
    return argmin_config(2, 2, [&](const ChargeConfig& c) { return rx_config_energy(c, eps, v_m, p); });
}

GroundResult center_ground_config(double eps_c, double v_mc, const CenterStabilityParams& p) {
    return argmin_config(2, 4,
                         [&](const ChargeConfig& c) { return center_config_energy(c, eps_c, v_mc, p); });
}

StabilityMap stability_diagram(DiagramKind kind, const GridSpec& grid,
                               const RxStabilityParams& rx, const CenterStabilityParams& center) {
    if (grid.nx < 1 || grid.ny < 1)
        throw ConfigError("stability_diagram: grid must have at least one cell");
    StabilityMap map{kind, grid, {}};
    map.cells.resize(static_cast<std::size_t>(grid.nx) * grid.ny);
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.y(j);
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i);
            map.cells[static_cast<std::size_t>(j) * grid.nx + i] =
                (kind == DiagramKind::rx) ? rx_ground_config(x, y, rx)
                                          : center_ground_config(x, y, center);
        }
    }
    return map;
}

std::vector<BoundaryPoint> boundaries(const StabilityMap& map) {
    std::vector<BoundaryPoint> pts;
    const auto& g = map.grid;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const auto& c = map.at(i, j).config;
            if (i + 1 < g.nx && map.at(i + 1, j).config != c)
                pts.push_back({0.5 * (g.x(i) + g.x(i + 1)), g.y(j), c, map.at(i + 1, j).config});
            if (j + 1 < g.ny && map.at(i, j + 1).config != c)
                pts.push_back({g.x(i), 0.5 * (g.y(j) + g.y(j + 1)), c, map.at(i, j + 1).config});
        }
    return pts;
}

double operation_point_constraint(double v_mc, double eps_m, double v_m, double eps2) {
    return (v_mc + eps_m) - (v_m + eps2);
}

}  // namespace qde

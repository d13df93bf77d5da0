#include "icrf/placement.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "icrf/errors.hpp"

namespace icrf {

std::string to_string(CellClass c) {
    switch (c) {
        case CellClass::Neither: return "neither";
        case CellClass::SINotVSI: return "si_not_vsi";
        case CellClass::VSI: return "vsi";
        case CellClass::Degenerate: return "degenerate";
    }
    return "?";
}

BBox default_bbox(const Layout& layout) {
    const Point2 pts[4] = {layout.tx1, layout.tx2, layout.rx1, layout.rx2};
    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const Point2& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    const double hx = std::max(0.5 * (xmax - xmin), 1e-3) * 3;
    const double hy = std::max(0.5 * (ymax - ymin), 1e-3) * 3;
    return {cx - hx, cx + hx, cy - hy, cy + hy};
}

double PlacementGrid::cell_x(int col) const {
    return bbox.xmin + (bbox.xmax - bbox.xmin) * (col + 0.5) / resolution;
}

double PlacementGrid::cell_y(int row) const {
    return bbox.ymin + (bbox.ymax - bbox.ymin) * (row + 0.5) / resolution;
}

CellClass PlacementGrid::at(int config_idx, int row, int col) const {
    return cells[static_cast<size_t>(config_idx) * resolution * resolution +
                 static_cast<size_t>(row) * resolution + col];
}

PlacementGrid scan_placement(const Layout& layout, double p1, double p2, double p3,
                             FadingModel model, const std::vector<FeedbackConfig>& configs,
                             RegimeKind kind, BBox bbox, int resolution,
                             const PlacementSettings& settings) {
    layout.validate();
    if (configs.empty()) throw std::invalid_argument("configs must be nonempty");
    if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
    if (!(bbox.xmax > bbox.xmin) || !(bbox.ymax > bbox.ymin))
        throw std::invalid_argument("bbox must have positive extent");

    PlacementGrid grid;
    grid.bbox = bbox;
    grid.resolution = resolution;
    grid.configs = configs;
    grid.kind = kind;
    grid.cells.assign(configs.size() * static_cast<size_t>(resolution) * resolution,
                      CellClass::Neither);

    auto classify_cell = [&](int row, int col) {
        const Point2 relay{grid.cell_x(col), grid.cell_y(row)};
        NetworkParams params;
        bool degenerate = false;
        try {
            params = attenuation_from_geometry(layout, relay, p1, p2, p3);
        } catch (const DegenerateGeometryError&) {
            degenerate = true;
        }
        for (size_t ci = 0; ci < configs.size(); ++ci) {
            CellClass cls;
            if (degenerate) {
                cls = CellClass::Degenerate;
            } else if (kind == RegimeKind::VSI) {
                cls = check_vsi(condition_config(configs[ci]), model, params, settings.regime)
                              .satisfied()
                          ? CellClass::VSI
                          : CellClass::Neither;
            } else {
                switch (classify(configs[ci], model, params, settings.regime)) {
                    case Regime::VSI: cls = CellClass::VSI; break;
                    case Regime::SINotVSI: cls = CellClass::SINotVSI; break;
                    default: cls = CellClass::Neither;
                }
            }
            grid.cells[ci * static_cast<size_t>(resolution) * resolution +
                       static_cast<size_t>(row) * resolution + col] = cls;
        }
    };

    int nthreads = settings.threads > 0 ? settings.threads
                                        : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min(nthreads, resolution);
    if (model == FadingModel::Phase && resolution < 64) nthreads = 1;
    if (nthreads == 1) {
        for (int row = 0; row < resolution; ++row)
            for (int col = 0; col < resolution; ++col) classify_cell(row, col);
    } else {
        // cells write disjoint slots, so visitation order cannot matter
        std::atomic<int> next_row{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                int row;
                while ((row = next_row.fetch_add(1)) < resolution)
                    for (int col = 0; col < resolution; ++col) classify_cell(row, col);
            });
        for (auto& t : pool) t.join();
    }
    return grid;
}

std::string export_map_csv(const PlacementGrid& grid) {
    std::ostringstream os;
    os << "x,y,config,regime\n";
    char buf[64];
    for (size_t ci = 0; ci < grid.configs.size(); ++ci) {
        const std::string cfg = to_string(grid.configs[ci]);
        for (int row = 0; row < grid.resolution; ++row) {
            for (int col = 0; col < grid.resolution; ++col) {
                std::snprintf(buf, sizeof buf, "%.12g,%.12g,", grid.cell_x(col),
                              grid.cell_y(row));
                os << buf << cfg << ',' << to_string(grid.at(static_cast<int>(ci), row, col))
                   << '\n';
            }
        }
    }
    return os.str();
}

std::vector<std::uint8_t> export_map_pgm(const PlacementGrid& grid, FeedbackConfig config) {
    size_t ci = grid.configs.size();
    for (size_t i = 0; i < grid.configs.size(); ++i)
        if (grid.configs[i] == config) ci = i;
    if (ci == grid.configs.size())
        throw std::invalid_argument("config " + to_string(config) + " not present in grid");
    const int n = grid.resolution;
    std::string header = "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + static_cast<size_t>(n) * n);
    for (int row = n - 1; row >= 0; --row) {  // top of the image = ymax
        for (int col = 0; col < n; ++col) {
            std::uint8_t v = 0;
            switch (grid.at(static_cast<int>(ci), row, col)) {
                case CellClass::VSI: v = 255; break;
                case CellClass::SINotVSI: v = 128; break;
                default: v = 0;
            }
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace icrf

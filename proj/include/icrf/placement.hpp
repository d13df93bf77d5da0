#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icrf/channel.hpp"
#include "icrf/regimes.hpp"

// Relay-placement feasibility maps: classify every cell of a bounding box
// by the regime achieved when the relay sits at the cell center.

namespace icrf {

struct BBox {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
};

// Axis-aligned box around the four fixed nodes, grown to three times the
// node extent about its center.
BBox default_bbox(const Layout& layout);

enum class CellClass : std::uint8_t { Neither = 0, SINotVSI = 1, VSI = 2, Degenerate = 3 };
std::string to_string(CellClass c);

enum class RegimeKind { VSI, SI };

struct PlacementGrid {
    BBox bbox;
    int resolution = 0;  // cells per axis
    std::vector<FeedbackConfig> configs;
    RegimeKind kind = RegimeKind::VSI;
    // cells[c * resolution^2 + row * resolution + col]; row 0 is ymin
    std::vector<CellClass> cells;

    double cell_x(int col) const;
    double cell_y(int row) const;
    CellClass at(int config_idx, int row, int col) const;
};

struct PlacementSettings {
    RegimeSettings regime;
    int threads = 0;
};

// Per cell: attenuations from geometry, then the regime classification for
// every requested configuration. kind = VSI stops after the VSI check
// (cells come out VSI or Neither); kind = SI classifies fully. Cells that
// coincide with a node are marked Degenerate rather than failing the scan.
PlacementGrid scan_placement(const Layout& layout, double p1, double p2, double p3,
                             FadingModel model, const std::vector<FeedbackConfig>& configs,
                             RegimeKind kind, BBox bbox, int resolution,
                             const PlacementSettings& settings = {});

// Rows "x,y,config,regime" after a header line.
std::string export_map_csv(const PlacementGrid& grid);

// Binary PGM (P5), one image per configuration. Gray levels: 0 Neither,
// 128 SI-not-VSI, 255 VSI; degenerate cells render as 0. Rows run from
// ymax down to ymin so the image is oriented like a plot.
std::vector<std::uint8_t> export_map_pgm(const PlacementGrid& grid, FeedbackConfig config);

}  // namespace icrf

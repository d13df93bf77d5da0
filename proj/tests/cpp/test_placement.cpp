#include <doctest.h>

#include <algorithm>
#include <string>

#include "../common/test_support.hpp"
#include "icrf/placement.hpp"

using namespace icrf;

namespace {

const std::vector<FeedbackConfig> kThreeConfigs = {
    FeedbackConfig::NoFeedback, FeedbackConfig::PartialRx1ToRelay, FeedbackConfig::FullToRelay};

PlacementGrid reference_scan(int res, RegimeKind kind = RegimeKind::VSI) {
    const Layout l = Layout::reference();
    return scan_placement(l, 10, 10, 3, FadingModel::Phase, kThreeConfigs, kind,
                          default_bbox(l), res);
}

bool feasible(CellClass c, RegimeKind kind) {
    if (kind == RegimeKind::VSI) return c == CellClass::VSI;
    return c == CellClass::VSI || c == CellClass::SINotVSI;
}

}  // namespace

TEST_CASE("smallest grid classifies every cell for every configuration") {
    const PlacementGrid g = reference_scan(2);
    CHECK(g.cells.size() == 3u * 2 * 2);
    for (CellClass c : g.cells) CHECK(c != CellClass::Degenerate);
}

TEST_CASE("feasibility sets nest across feedback configurations") {
    const PlacementGrid g = reference_scan(24);
    int nofb = 0, partial = 0, full = 0;
    for (int row = 0; row < g.resolution; ++row) {
        for (int col = 0; col < g.resolution; ++col) {
            const bool c0 = feasible(g.at(0, row, col), g.kind);
            const bool c1 = feasible(g.at(1, row, col), g.kind);
            const bool c2 = feasible(g.at(2, row, col), g.kind);
            if (c0) CHECK(c1);
            if (c1) CHECK(c2);
            nofb += c0;
            partial += c1;
            full += c2;
        }
    }
    CHECK(nofb < partial);
    CHECK(partial < full);
    CHECK(full > 0);
}

TEST_CASE("far cells keep feedback feasibility but lose the no-feedback one") {
    const Layout l = Layout::reference();
    const BBox far{80, 120, 80, 120};
    const PlacementGrid g = scan_placement(l, 10, 10, 3, FadingModel::Phase, kThreeConfigs,
                                           RegimeKind::VSI, far, 4);
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col) {
            CHECK(g.at(2, row, col) == CellClass::VSI);
            CHECK(g.at(0, row, col) == CellClass::Neither);
        }
}

TEST_CASE("mirror-symmetric layouts give mirror-symmetric maps") {
    // pair-symmetric configurations map onto themselves under reflection;
    // partial feedback from Rx1 maps onto its pair-swapped counterpart
    const PlacementGrid g = reference_scan(21, RegimeKind::SI);
    for (int ci : {0, 2}) {
        for (int row = 0; row < g.resolution; ++row)
            for (int col = 0; col < g.resolution; ++col)
                CHECK(g.at(ci, row, col) == g.at(ci, g.resolution - 1 - row, col));
    }
    const Layout l = Layout::reference();
    for (int row = 0; row < g.resolution; ++row) {
        for (int col = 0; col < g.resolution; ++col) {
            const NetworkParams p = attenuation_from_geometry(
                l, {g.cell_x(col), g.cell_y(row)}, 10, 10, 3);
            const Regime mirrored = classify(FeedbackConfig::PartialRx1ToRelay,
                                             FadingModel::Phase, p.swapped());
            const CellClass cell = g.at(1, g.resolution - 1 - row, col);
            const CellClass want = mirrored == Regime::VSI      ? CellClass::VSI
                                   : mirrored == Regime::SINotVSI ? CellClass::SINotVSI
                                                                  : CellClass::Neither;
            CHECK(cell == want);
        }
    }
}

TEST_CASE("scan does not depend on the worker count") {
    const Layout l = Layout::reference();
    PlacementSettings one, many;
    one.threads = 1;
    many.threads = 8;
    const PlacementGrid a = scan_placement(l, 10, 10, 3, FadingModel::Phase, kThreeConfigs,
                                           RegimeKind::SI, default_bbox(l), 16, one);
    const PlacementGrid b = scan_placement(l, 10, 10, 3, FadingModel::Phase, kThreeConfigs,
                                           RegimeKind::SI, default_bbox(l), 16, many);
    CHECK(a.cells == b.cells);
}

TEST_CASE("cells that land on a node are marked degenerate") {
    Layout l;
    l.tx1 = {0.25, 0.25};  // exactly the (0,0) cell center of a 2x2 unit grid
    l.tx2 = {0, -1};
    l.rx1 = {1, 0};
    l.rx2 = {2, 1};
    const PlacementGrid g =
        scan_placement(l, 1, 1, 1, FadingModel::Phase, {FeedbackConfig::FullToRelay},
                       RegimeKind::VSI, BBox{0, 1, 0, 1}, 2);
    CHECK(g.at(0, 0, 0) == CellClass::Degenerate);
    CHECK(g.at(0, 1, 1) != CellClass::Degenerate);
}

TEST_CASE("an all-infeasible grid renders as black pixels") {
    const Layout l = Layout::reference();
    // far from the nodes, the no-feedback relay-decoding set is empty
    const PlacementGrid g =
        scan_placement(l, 10, 10, 3, FadingModel::Phase, {FeedbackConfig::NoFeedback},
                       RegimeKind::VSI, BBox{80, 120, 80, 120}, 2);
    const auto pgm = export_map_pgm(g, FeedbackConfig::NoFeedback);
    REQUIRE(pgm.size() == 11 + 4);
    for (size_t i = 11; i < pgm.size(); ++i) CHECK(pgm[i] == 0);
}

TEST_CASE("csv export has one row per cell and configuration") {
    const PlacementGrid g = reference_scan(5);
    const std::string csv = export_map_csv(g);
    const long rows = std::count(csv.begin(), csv.end(), '\n');
    CHECK(rows == 3 * 5 * 5 + 1);
    CHECK(csv.rfind("x,y,config,regime\n", 0) == 0);
    CHECK(export_map_csv(g) == csv);  // byte-identical re-export
}

TEST_CASE("pgm export carries the three gray levels in a fixed header") {
    const PlacementGrid g = reference_scan(8, RegimeKind::SI);
    const auto pgm = export_map_pgm(g, FeedbackConfig::FullToRelay);
    const std::string header(pgm.begin(), pgm.begin() + 9);
    CHECK(header == "P5\n8 8\n25");  // full header "P5\n8 8\n255\n" is 11 bytes
    CHECK(pgm.size() == 11 + 8 * 8);
    for (size_t i = 11; i < pgm.size(); ++i)
        CHECK((pgm[i] == 0 || pgm[i] == 128 || pgm[i] == 255));
    CHECK(export_map_pgm(g, FeedbackConfig::FullToRelay) == pgm);
    CHECK_THROWS_AS(export_map_pgm(g, FeedbackConfig::PartialRx1ToRelayPlusTx1),
                    std::invalid_argument);
}

TEST_CASE("scan input validation") {
    const Layout l = Layout::reference();
    CHECK_THROWS_AS(scan_placement(l, 1, 1, 1, FadingModel::Phase, {}, RegimeKind::VSI,
                                   default_bbox(l), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(scan_placement(l, 1, 1, 1, FadingModel::Phase,
                                   {FeedbackConfig::FullToRelay}, RegimeKind::VSI,
                                   default_bbox(l), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(scan_placement(l, 1, 1, 1, FadingModel::Phase,
                                   {FeedbackConfig::FullToRelay}, RegimeKind::VSI,
                                   BBox{1, 1, 0, 1}, 4),
                    std::invalid_argument);
}

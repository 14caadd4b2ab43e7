#pragma once

#include <array>
#include <string>
#include <vector>

#include "rdts/heat.hpp"

namespace rdts {

struct HeaterState {
    bool on = false;
    double delta_t_k = 0.0;
};

struct Heater {
    std::string id;
    HeaterGeometry geometry;
    HeaterState state;
};

/// The sensed board: extent, ambient temperature and heating elements.
struct BoardModel {
    double width_m = 0.15;
    double height_m = 0.06;
    double ambient_k = 296.0;
    std::vector<Heater> heaters;

    void validate() const;
    const Heater* find(const std::string& id) const;
};

/// Fiber routing: straight lead-in, polyline on the board plane, then spare
/// fiber up to total_length. Arc length is measured from the launch end.
struct FiberLayout {
    double lead_in_m = 2.0;
    double total_length_m = 10.0;
    std::vector<std::array<double, 2>> path_m;

    void validate(const BoardModel& board) const;
    double path_length() const;
};

/// Arc-length walker over the layout polyline.
class PolylineWalker {
  public:
    explicit PolylineWalker(const FiberLayout& layout);

    double length() const { return cumulative_.back(); }

    /// Board coordinates of the point at the given on-board arc length,
    /// clamped to [0, length].
    std::array<double, 2> point_at(double arc_on_board_m) const;

  private:
    std::vector<std::array<double, 2>> vertices_;
    std::vector<double> cumulative_;
};

/// Fiber temperature as a function of global arc length: ambient everywhere
/// except inside active heater footprints (closed boundaries count as
/// inside). Arc values off the board see ambient.
class TemperatureField {
  public:
    TemperatureField(const BoardModel& board, const FiberLayout& layout);

    double operator()(double arc_m) const;

  private:
    BoardModel board_;
    double lead_in_m_;
    double board_end_m_;
    PolylineWalker walker_;
};

struct ArcInterval {
    double start_m = 0.0;
    double end_m = 0.0;
    double mid() const { return 0.5 * (start_m + end_m); }
};

/// Global-arc intervals where the fiber path lies inside the heater
/// footprint, in increasing order. Touching intervals are merged.
std::vector<ArcInterval> heater_crossings(const FiberLayout& layout,
                                          const Heater& heater);

/// The production board: 15 heaters on a 5 x 3 grid across 15 cm x 6 cm.
BoardModel standard_board(double ambient_k = 296.0);

/// Nine-pass serpentine that crosses every heater row three times.
FiberLayout serpentine_layout();

}  // namespace rdts

#include "rdts/board.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rdts/errors.hpp"

namespace rdts {

void BoardModel::validate() const {
    if (!(width_m > 0.0) || !(height_m > 0.0))
        throw ValidationError("board dimensions must be positive");
    if (!(ambient_k > 0.0))
        throw ValidationError("ambient temperature must be positive");
    std::set<std::string> ids;
    for (const auto& h : heaters) {
        if (!ids.insert(h.id).second)
            throw ValidationError("duplicate heater id: " + h.id);
        const double half = h.geometry.footprint_m / 2.0;
        if (!(half > 0.0))
            throw ValidationError("heater footprint must be positive: " + h.id);
        if (h.geometry.center_x_m - half < 0.0 || h.geometry.center_x_m + half > width_m ||
            h.geometry.center_y_m - half < 0.0 || h.geometry.center_y_m + half > height_m)
            throw ValidationError("heater footprint outside board bounds: " + h.id);
    }
}

const Heater* BoardModel::find(const std::string& id) const {
    for (const auto& h : heaters)
        if (h.id == id) return &h;
    return nullptr;
}

void FiberLayout::validate(const BoardModel& board) const {
    if (path_m.size() < 2)
        throw ValidationError("fiber path needs at least two vertices");
    if (!(lead_in_m >= 0.0))
        throw ValidationError("lead-in length must be non-negative");
    for (const auto& [x, y] : path_m)
        if (x < 0.0 || x > board.width_m || y < 0.0 || y > board.height_m)
            throw ValidationError("fiber path vertex outside board bounds");
    if (total_length_m < lead_in_m + path_length() - 1e-12)
        throw ValidationError("total fiber length shorter than lead-in plus board path");
}

double FiberLayout::path_length() const {
    double len = 0.0;
    for (std::size_t i = 1; i < path_m.size(); ++i)
        len += std::hypot(path_m[i][0] - path_m[i - 1][0],
                          path_m[i][1] - path_m[i - 1][1]);
    return len;
}

PolylineWalker::PolylineWalker(const FiberLayout& layout)
    : vertices_(layout.path_m) {
    if (vertices_.size() < 2)
        throw ValidationError("fiber path needs at least two vertices");
    cumulative_.resize(vertices_.size());
    cumulative_[0] = 0.0;
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const double seg = std::hypot(vertices_[i][0] - vertices_[i - 1][0],
                                      vertices_[i][1] - vertices_[i - 1][1]);
        if (!(seg > 0.0))
            throw ValidationError("degenerate zero-length path segment");
        cumulative_[i] = cumulative_[i - 1] + seg;
    }
}

std::array<double, 2> PolylineWalker::point_at(double arc_on_board_m) const {
    const double s = std::clamp(arc_on_board_m, 0.0, cumulative_.back());
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
    const std::size_t i = std::min<std::size_t>(
        static_cast<std::size_t>(std::distance(cumulative_.begin(), it)),
        cumulative_.size() - 1);
    const double t = (s - cumulative_[i - 1]) / (cumulative_[i] - cumulative_[i - 1]);
    return {vertices_[i - 1][0] + t * (vertices_[i][0] - vertices_[i - 1][0]),
            vertices_[i - 1][1] + t * (vertices_[i][1] - vertices_[i - 1][1])};
}

TemperatureField::TemperatureField(const BoardModel& board, const FiberLayout& layout)
    : board_(board),
      lead_in_m_(layout.lead_in_m),
      board_end_m_(layout.lead_in_m + layout.path_length()),
      walker_(layout) {}

double TemperatureField::operator()(double arc_m) const {
    if (arc_m < lead_in_m_ || arc_m > board_end_m_) return board_.ambient_k;
    const auto [x, y] = walker_.point_at(arc_m - lead_in_m_);
    double t = board_.ambient_k;
    for (const auto& h : board_.heaters) {
        if (!h.state.on) continue;
        const double half = h.geometry.footprint_m / 2.0;
        if (std::abs(x - h.geometry.center_x_m) <= half &&
            std::abs(y - h.geometry.center_y_m) <= half)
            t = std::max(t, board_.ambient_k + h.state.delta_t_k);
    }
    return t;
}

namespace {

// Parameter range of one segment inside an axis-aligned box (Liang-Barsky).
bool clip_segment(const std::array<double, 2>& p0, const std::array<double, 2>& p1,
                  double xmin, double xmax, double ymin, double ymax,
                  double& t0, double& t1) {
    const double dx = p1[0] - p0[0];
    const double dy = p1[1] - p0[1];
    t0 = 0.0;
    t1 = 1.0;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {p0[0] - xmin, xmax - p0[0], p0[1] - ymin, ymax - p0[1]};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return false;
            continue;
        }
        const double r = q[i] / p[i];
        if (p[i] < 0.0) {
            if (r > t1) return false;
            if (r > t0) t0 = r;
        } else {
            if (r < t0) return false;
            if (r < t1) t1 = r;
        }
    }
    return t1 >= t0;
}

}  // namespace

std::vector<ArcInterval> heater_crossings(const FiberLayout& layout,
                                          const Heater& heater) {
    const double half = heater.geometry.footprint_m / 2.0;
    const double xmin = heater.geometry.center_x_m - half;
    const double xmax = heater.geometry.center_x_m + half;
    const double ymin = heater.geometry.center_y_m - half;
    const double ymax = heater.geometry.center_y_m + half;

    std::vector<ArcInterval> raw;
    double arc = layout.lead_in_m;
    for (std::size_t i = 1; i < layout.path_m.size(); ++i) {
        const auto& a = layout.path_m[i - 1];
        const auto& b = layout.path_m[i];
        const double seg = std::hypot(b[0] - a[0], b[1] - a[1]);
        double t0 = 0.0, t1 = 0.0;
        if (clip_segment(a, b, xmin, xmax, ymin, ymax, t0, t1) && t1 > t0)
            raw.push_back({arc + t0 * seg, arc + t1 * seg});
        arc += seg;
    }

    std::vector<ArcInterval> merged;
    for (const auto& iv : raw) {
        if (!merged.empty() && iv.start_m <= merged.back().end_m + 1e-9)
            merged.back().end_m = std::max(merged.back().end_m, iv.end_m);
        else
            merged.push_back(iv);
    }
    return merged;
}

BoardModel standard_board(double ambient_k) {
    BoardModel board;
    board.ambient_k = ambient_k;
    const double xs[5] = {0.015, 0.045, 0.075, 0.105, 0.135};
    const double ys[3] = {0.010, 0.030, 0.050};
    int n = 1;
    for (double y : ys)
        for (double x : xs) {
            Heater h;
            h.id = "R" + std::to_string(n++);
            h.geometry.center_x_m = x;
            h.geometry.center_y_m = y;
            board.heaters.push_back(h);
        }
    return board;
}

FiberLayout serpentine_layout() {
    // Three passes through each heater row, offset a third of the footprint.
    const double rows[9] = {0.0067, 0.0100, 0.0133, 0.0267, 0.0300,
                            0.0333, 0.0467, 0.0500, 0.0533};
    FiberLayout layout;
    for (int i = 0; i < 9; ++i) {
        const double y = rows[i];
        if (i % 2 == 0) {
            layout.path_m.push_back({0.0, y});
            layout.path_m.push_back({0.15, y});
        } else {
            layout.path_m.push_back({0.15, y});
            layout.path_m.push_back({0.0, y});
        }
    }
    // Drop the duplicated corner vertices introduced by the pass endpoints.
    std::vector<std::array<double, 2>> cleaned;
    for (const auto& v : layout.path_m)
        if (cleaned.empty() || v != cleaned.back()) cleaned.push_back(v);
    layout.path_m = std::move(cleaned);
    return layout;
}

}  // namespace rdts

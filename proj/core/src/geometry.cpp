#include "teamfuse/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "teamfuse/errors.hpp"

namespace teamfuse {

namespace {

// Sign of the cross product (q - p) x (r - p).
int orientation(Position p, Position q, Position r) {
    const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

// r is known to be collinear with p-q; check it lies inside the bounding box.
bool on_segment(Position p, Position q, Position r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

}  // namespace

double distance(Position a, Position b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool Environment::contains(Position p) const {
    return std::isfinite(p.x) && std::isfinite(p.y) && p.x >= 0.0 && p.x <= width &&
           p.y >= 0.0 && p.y <= height;
}

double Environment::diagonal() const { return std::hypot(width, height); }

void Environment::validate() const {
    if (!(std::isfinite(width) && width > 0.0) || !(std::isfinite(height) && height > 0.0)) {
        throw ValidationError("environment width and height must be positive and finite");
    }
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        if (!contains(obstacles[i].a) || !contains(obstacles[i].b)) {
            throw ValidationError("wall " + std::to_string(i) + " leaves the environment bounds");
        }
    }
}

bool segments_intersect(Position p1, Position p2, Position q1, Position q2) {
    const int o1 = orientation(p1, p2, q1);
    const int o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1);
    const int o4 = orientation(q1, q2, p2);

    if (o1 != o2 && o3 != o4) return true;

    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

double distance_to_segment(Position p, const Wall& w) {
    const double dx = w.b.x - w.a.x;
    const double dy = w.b.y - w.a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return distance(p, w.a);
    double t = ((p.x - w.a.x) * dx + (p.y - w.a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, Position{w.a.x + t * dx, w.a.y + t * dy});
}

bool line_of_sight(Position a, Position b, const Environment& env) {
    return std::none_of(env.obstacles.begin(), env.obstacles.end(), [&](const Wall& w) {
        return segments_intersect(a, b, w.a, w.b);
    });
}

}  // namespace teamfuse

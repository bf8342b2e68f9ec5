#pragma once

#include <vector>

namespace teamfuse {

struct Position {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position&, const Position&) = default;
};

double distance(Position a, Position b);

/// Wall obstacle as a closed line segment.
struct Wall {
    Position a;
    Position b;

    friend bool operator==(const Wall&, const Wall&) = default;
};

/// Axis-aligned workspace [0, width] x [0, height] with wall obstacles.
struct Environment {
    double width = 1.0;
    double height = 1.0;
    std::vector<Wall> obstacles;

    bool contains(Position p) const;
    double diagonal() const;

    /// Throws ValidationError on non-positive extents or walls leaving the box.
    void validate() const;

    friend bool operator==(const Environment&, const Environment&) = default;
};

/// Closed segment-segment intersection, collinear overlap and endpoint
/// contact included.
bool segments_intersect(Position p1, Position p2, Position q1, Position q2);

/// Euclidean distance from p to the closed segment w.
double distance_to_segment(Position p, const Wall& w);

/// True iff segment a-b crosses no wall. Touching a wall anywhere, including
/// its endpoints, blocks the line.
bool line_of_sight(Position a, Position b, const Environment& env);

}  // namespace teamfuse

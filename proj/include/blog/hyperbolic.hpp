#pragma once
// Hyperbolic length/distance bounds in polyline tubes via the standard estimate
// 1/(2 dist) <= density <= 2/dist.

#include <complex>
#include <span>
#include <variant>
#include <vector>

namespace blog {

using cplx = std::complex<double>;

// distance from p to the segment [a, b]
double point_segment_distance(cplx p, cplx a, cplx b);
double segment_segment_distance(cplx a, cplx b, cplx c, cplx d);

class TubeDomain {
public:
    TubeDomain(std::vector<cplx> centerline, double halfwidth);

    std::span<const cplx> centerline() const { return pts_; }
    double halfwidth() const { return hw_; }
    double length() const { return cum_.back(); }
    std::size_t segments() const { return pts_.size() - 1; }

    struct Projection {
        std::size_t segment = 0;
        double s = 0.0;       // arclength of the nearest centerline point
        double offset = 0.0;  // signed, positive to the left of the direction of travel
        double dist = 0.0;
    };
    Projection project(cplx z) const;
    double centerline_distance(cplx z) const;
    // halfwidth minus distance to the centerline; a lower bound for dist(z, boundary)
    double clearance(cplx z) const;
    bool contains(cplx z) const { return clearance(z) > 0.0; }

    cplx point_at(double s) const;
    // unit tangent of the segment containing arclength s
    cplx tangent_at(double s) const;
    double segment_start(std::size_t i) const { return cum_[i]; }
    // turning angle at interior vertex i (0 at the two ends)
    double turn_angle(std::size_t vertex) const;
    // upper bound for dist(z, boundary) over the whole tube
    double inscribed_radius_bound() const;
    // no two centerline points further apart than pi*halfwidth along the curve
    // come closer than 2*halfwidth
    bool embedded() const;

private:
    std::vector<cplx> pts_;
    std::vector<double> cum_;
    double hw_;
};

struct VerticalSection {
    double x;
    double y_min;
    double y_max;
};
struct PolylineTarget {
    std::vector<cplx> points;
};
using Target = std::variant<VerticalSection, PolylineTarget>;

double hyp_length_upper(const TubeDomain& domain, std::span<const cplx> path);
double hyp_dist_lower(const TubeDomain& domain, cplx z0, const Target& target);

// Euclidean distance from z to the target set
double target_distance(const Target& target, cplx z);

}  // namespace blog

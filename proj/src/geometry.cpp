#include "ladderplan/geometry.hpp"

#include <algorithm>

namespace ladder {

namespace {

using Wide = __int128;

int sign(Wide v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

}  // namespace

int orientation(Point a, Point b, Point c) {
    // Subtract after widening: for |coordinates| < 2^62 the differences stay
    // below 2^63, each product below 2^126, and their difference below 2^127,
    // so nothing here can overflow the 128-bit accumulator.
    const Wide d1 = (Wide(b.x) - Wide(a.x)) * (Wide(c.y) - Wide(a.y));
    const Wide d2 = (Wide(b.y) - Wide(a.y)) * (Wide(c.x) - Wide(a.x));
    return sign(d1 - d2);
}

bool point_on_segment(Point p, Point a, Point b) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

SegmentContact classify_segments(Point a, Point b, Point c, Point d, Point* touch) {
    const int d1 = orientation(c, d, a);
    const int d2 = orientation(c, d, b);
    const int d3 = orientation(a, b, c);
    const int d4 = orientation(a, b, d);

    // Proper crossing: each segment's endpoints lie strictly on opposite
    // sides of the other's line.  The meeting point is interior to both.
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return SegmentContact::other;
    }

    // Everything else that intersects does so through at least one endpoint
    // lying on the other segment.  Collect those touch points.
    Point pts[4];
    int count = 0;
    auto add = [&](Point p) {
        for (int i = 0; i < count; ++i) {
            if (pts[i] == p) return;
        }
        pts[count++] = p;
    };
    if (point_on_segment(a, c, d)) add(a);
    if (point_on_segment(b, c, d)) add(b);
    if (point_on_segment(c, a, b)) add(c);
    if (point_on_segment(d, a, b)) add(d);

    if (count == 0) return SegmentContact::none;
    if (count >= 2) return SegmentContact::other;  // collinear overlap

    // One touch point: acceptable only when it ends both segments.
    const Point p = pts[0];
    if ((p == a || p == b) && (p == c || p == d)) {
        if (touch) *touch = p;
        return SegmentContact::shared_endpoint;
    }
    return SegmentContact::other;  // an endpoint inside the other's interior
}

}  // namespace ladder

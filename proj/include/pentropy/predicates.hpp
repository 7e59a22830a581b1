#pragma once

#include "pentropy/point_cloud.hpp"

namespace pentropy {

// Exact geometric predicates: a filtered double evaluation with a forward
// error bound, falling back to arbitrary-precision rational arithmetic when
// the sign is uncertain. The *_exact variants always take the rational path;
// tests use them as an independent oracle.

/// +1 if a,b,c make a left turn (counterclockwise), -1 for a right turn,
/// 0 if collinear.
int orient2d(const Point2& a, const Point2& b, const Point2& c);
int orient2d_exact(const Point2& a, const Point2& b, const Point2& c);

/// For a counterclockwise triangle a,b,c: +1 if d lies strictly inside the
/// circumcircle, -1 strictly outside, 0 on the circle.
int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);
int incircle_exact(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

}  // namespace pentropy

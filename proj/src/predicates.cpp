#include "pentropy/predicates.hpp"

#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

// Compiled with -ffp-contract=off: the error bounds below assume one IEEE
// rounding per operation, so fused multiply-adds must not be introduced.

namespace pentropy {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// machine epsilon in the 2^-53 sense
constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
const double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
const double kIncErrBound = (10.0 + 96.0 * kEps) * kEps;

inline int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

template <typename T>
int sign_of_exact(const T& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

}  // namespace

int orient2d_exact(const Point2& a, const Point2& b, const Point2& c) {
    // conversion from double to cpp_rational is exact
    Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    Rational det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return sign_of_exact(det);
}

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
    const double detleft = (b.x - a.x) * (c.y - a.y);
    const double detright = (b.y - a.y) * (c.x - a.x);
    const double det = detleft - detright;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return sign_of(det);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return sign_of(det);
        detsum = -detleft - detright;
    } else {
        return sign_of(det);  // detleft == 0: det = -detright exactly
    }
    const double errbound = kCcwErrBound * detsum;
    if (det >= errbound || -det >= errbound) return sign_of(det);
    return orient2d_exact(a, b, c);
}

int incircle_exact(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    Rational adx = Rational(a.x) - Rational(d.x);
    Rational ady = Rational(a.y) - Rational(d.y);
    Rational bdx = Rational(b.x) - Rational(d.x);
    Rational bdy = Rational(b.y) - Rational(d.y);
    Rational cdx = Rational(c.x) - Rational(d.x);
    Rational cdy = Rational(c.y) - Rational(d.y);

    Rational det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) +
                   (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy) +
                   (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
    return sign_of_exact(det);
}

int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const double adx = a.x - d.x;
    const double ady = a.y - d.y;
    const double bdx = b.x - d.x;
    const double bdy = b.y - d.y;
    const double cdx = c.x - d.x;
    const double cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy;
    const double cdxbdy = cdx * bdy;
    const double alift = adx * adx + ady * ady;
    const double cdxady = cdx * ady;
    const double adxcdy = adx * cdy;
    const double blift = bdx * bdx + bdy * bdy;
    const double adxbdy = adx * bdy;
    const double bdxady = bdx * ady;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    const double errbound = kIncErrBound * permanent;
    if (det > errbound || -det > errbound) return sign_of(det);
    return incircle_exact(a, b, c, d);
}

}  // namespace pentropy

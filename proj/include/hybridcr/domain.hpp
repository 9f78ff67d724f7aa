// Parameter intervals with endpoint and periodicity flags.
#pragma once

#include <cmath>

#include "hybridcr/errors.hpp"

namespace hybridcr {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool open_lo = false;
    bool open_hi = false;
    bool periodic = false;  // hi identified with lo; membership wraps

    double length() const { return hi - lo; }

    // Wraps periodic coordinates into [lo, hi); leaves others unchanged.
    double wrap(double v) const {
        if (!periodic) return v;
        const double len = length();
        double t = std::fmod(v - lo, len);
        if (t < 0.0) t += len;
        return lo + t;
    }

    bool contains(double v) const {
        if (periodic) return true;  // any real wraps in
        if (v < lo || v > hi) return false;
        if (open_lo && v == lo) return false;
        if (open_hi && v == hi) return false;
        return true;
    }
};

}  // namespace hybridcr

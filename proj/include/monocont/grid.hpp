#pragma once

#include <string>
#include <vector>

#include "monocont/complex.hpp"

namespace monocont {

struct Exclusion {
    Complex center{};
    double radius = 0.0;
};

/// Rectangular grid over the complex plane. Points are ordered with Re(s)
/// as the outer (slow) index and Im(s) as the inner one.
struct GridSpec {
    double re_min = -5.0;
    double re_max = 5.0;
    double im_min = -5.0;
    double im_max = 5.0;
    long re_steps = 21;
    long im_steps = 21;
    std::vector<Exclusion> exclusions;

    /// Throws std::invalid_argument on an empty or inverted range.
    void validate() const;

    std::size_t size() const { return static_cast<std::size_t>(re_steps * im_steps); }
    Complex point(std::size_t index) const;
    std::vector<Complex> points() const;
    bool excluded(Complex s) const;
};

/// Parses "re_min:re_max,im_min:im_max,RxI".
GridSpec parse_grid(const std::string& text);
std::string format_grid(const GridSpec& grid);

/// Guard disks for generic-series evaluations: |s-1| < 0.05 and
/// |s-m| < 1e-3 for every non-positive integer m with m >= re_min - 1.
std::vector<Exclusion> series_exclusions(const GridSpec& grid);

/// |s-1| < 0.05 only.
std::vector<Exclusion> pole_exclusions();

}  // namespace monocont

#include "monocont/grid.hpp"

#include <cmath>
#include <cstdio>
#include <regex>
#include <stdexcept>

namespace monocont {

namespace {

constexpr double kPoleGuard = 0.05;
constexpr double kIntegerGuard = 1e-3;

double coordinate(double lo, double hi, long steps, long i) {
    if (steps == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

}  // namespace

void GridSpec::validate() const {
    if (!(re_min < re_max) || !(im_min < im_max)) throw std::invalid_argument("grid ranges must satisfy min < max");
    if (re_steps < 1 || im_steps < 1) throw std::invalid_argument("grid steps must be >= 1");
    for (const auto& e : exclusions) {
        if (!(e.radius > 0.0)) throw std::invalid_argument("exclusion radius must be > 0");
    }
}

Complex GridSpec::point(std::size_t index) const {
    const auto i_re = static_cast<long>(index) / im_steps;
    const auto i_im = static_cast<long>(index) % im_steps;
    return {coordinate(re_min, re_max, re_steps, i_re), coordinate(im_min, im_max, im_steps, i_im)};
}

std::vector<Complex> GridSpec::points() const {
    std::vector<Complex> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = point(i);
    return out;
}

bool GridSpec::excluded(Complex s) const {
    for (const auto& e : exclusions) {
        if (std::abs(s - e.center) < e.radius) return true;
    }
    return false;
}

GridSpec parse_grid(const std::string& text) {
    static const std::regex pattern(R"(^([^:,]+):([^:,]+),([^:,]+):([^:,]+),(\d+)x(\d+)$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) {
        throw std::invalid_argument("malformed grid '" + text + "' (expected re_min:re_max,im_min:im_max,RxI)");
    }
    auto number = [&](int i) {
        std::size_t used = 0;
        const std::string part = m[i].str();
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != part.size()) throw std::invalid_argument("malformed grid number '" + part + "'");
        return v;
    };
    GridSpec g;
    g.re_min = number(1);
    g.re_max = number(2);
    g.im_min = number(3);
    g.im_max = number(4);
    g.re_steps = std::stol(m[5].str());
    g.im_steps = std::stol(m[6].str());
    g.validate();
    return g;
}

std::string format_grid(const GridSpec& g) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%.17g:%.17g,%.17g:%.17g,%ldx%ld", g.re_min, g.re_max, g.im_min, g.im_max,
                  g.re_steps, g.im_steps);
    return buf;
}

std::vector<Exclusion> pole_exclusions() { return {{Complex(1.0, 0.0), kPoleGuard}}; }

std::vector<Exclusion> series_exclusions(const GridSpec& grid) {
    auto out = pole_exclusions();
    for (long m = 0; static_cast<double>(m) >= grid.re_min - 1.0; --m) {
        out.push_back({Complex(static_cast<double>(m), 0.0), kIntegerGuard});
    }
    return out;
}

}  // namespace monocont

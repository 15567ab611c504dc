#include "monocont/config.hpp"

#include <stdexcept>

namespace monocont {

void EvalConfig::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(what);
    };
    require(rel_tol > 0.0, "rel_tol must be > 0");
    require(max_terms >= 64, "max_terms must be >= 64");
    require(em_cutoff_N >= 2, "em_cutoff_N must be >= 2");
    require(em_order_M >= 2 && em_order_M % 2 == 0, "em_order_M must be even and >= 2");
    require(integer_snap_radius > 0.0, "integer_snap_radius must be > 0");
    require(pole_exclusion_radius > 0.0, "pole_exclusion_radius must be > 0");
    require(quad_tol > 0.0, "quad_tol must be > 0");
    require(quad_tmax_factor > 0.0, "quad_tmax_factor must be > 0");
}

IdentityReport make_report(std::string id, Complex point, Complex lhs, Complex rhs, double tol,
                           long terms_used, Criterion criterion) {
    IdentityReport r;
    r.identity_id = std::move(id);
    r.point = point;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_error = std::abs(lhs - rhs);
    r.rel_error = relative_error(lhs, rhs);
    r.passed = criterion == Criterion::relative ? r.rel_error <= tol : r.abs_error <= tol;
    r.terms_used = terms_used;
    return r;
}

}  // namespace monocont

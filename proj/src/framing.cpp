#include "paracert/framing.hpp"

#include <stdexcept>

#include "paracert/errors.hpp"

namespace paracert::framing {

TwistState base_twists(std::size_t n) {
    TwistState t(n);
    for (std::size_t i = 0; i < n; ++i) t.set_parity(CurveId::indexed(i), 1);
    t.set_parity(CurveId::infinity(), 0);
    return t;
}

int intersection_parity(CurveId c, SurfaceId s,
                        const gf2::LinkingParity& lp) {
    const std::size_t n = lp.size();
    if (!c.is_infinity() && c.index() >= n)
        throw std::invalid_argument("surgery curve index out of range");
    if (!s.is_infinity() && s.index() >= n)
        throw std::invalid_argument("surface class index out of range");

    if (c.is_infinity()) return s.is_infinity() ? 1 : 0;
    if (s.is_infinity()) return 1;
    // unit diagonal of lp covers #(sigma_i, Sigma_i) = 1
    return lp.at(c.index(), s.index()) ? 1 : 0;
}

TwistState apply_surface_twists(const TwistState& base, const gf2::Gf2Vector& a,
                                int a_inf, const gf2::LinkingParity& lp) {
    const std::size_t n = lp.size();
    if (a.size() != n || base.curve_count() != n)
        throw std::invalid_argument(
            "apply_surface_twists dimension mismatch");

    TwistState out(n);
    auto twisted = [&](CurveId c) {
        int p = base.parity(c);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.get(i))
                p ^= intersection_parity(c, SurfaceId::indexed(i), lp);
        }
        if (a_inf & 1) p ^= intersection_parity(c, SurfaceId::infinity(), lp);
        return p;
    };
    for (std::size_t k = 0; k < n; ++k) {
        const CurveId c = CurveId::indexed(k);
        out.set_parity(c, twisted(c));
    }
    out.set_parity(CurveId::infinity(), twisted(CurveId::infinity()));
    return out;
}

ParallelisationCertificate compute_certificate(const gf2::LinkingParity& lp) {
    const std::size_t n = lp.size();
    ParallelisationCertificate cert{gf2::solve_framing_system(lp), 1,
                                    TwistState(n), false};
    cert.resulting = apply_surface_twists(base_twists(n), cert.a, 1, lp);
    cert.valid = cert.resulting.all_odd();
    if (!cert.valid)
        throw InternalError(
            "certificate twists are not all odd although L a = 1 held");
    return cert;
}

EvenSurgeryReport check_even_surgery(const braids::FramedLink& fl) {
    const braids::LinkComponents lc = braids::closure_components(fl.braid);
    EvenSurgeryReport report;
    report.all_framings_even = true;
    report.overall = true;
    report.components.reserve(lc.count);
    for (std::size_t i = 0; i < lc.count; ++i) {
        ComponentSurgeryCheck check;
        check.framing = fl.framings[i];
        check.self_linking = braids::self_linking(fl.braid, i);
        const std::int64_t diff = check.framing - check.self_linking;
        check.diff_parity = static_cast<int>(((diff % 2) + 2) % 2);
        check.extends = check.diff_parity == 1;
        check.sl_odd = ((check.self_linking % 2) + 2) % 2 == 1;
        report.all_framings_even =
            report.all_framings_even && check.framing % 2 == 0;
        report.overall = report.overall && check.extends;
        report.components.push_back(check);
    }
    return report;
}

}  // namespace paracert::framing

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "paracert/braids.hpp"
#include "paracert/gf2.hpp"

namespace paracert::framing {

/// One of the n+1 surgery curves of a presentation: sigma_i for
/// i in [0, n) or the distinguished curve sigma_inf on the outer torus.
class CurveId {
public:
    static CurveId indexed(std::size_t i) { return CurveId(i); }
    static CurveId infinity() { return CurveId(npos); }

    bool is_infinity() const { return index_ == npos; }
    std::size_t index() const { return index_; }

    bool operator==(const CurveId&) const = default;

private:
    explicit CurveId(std::size_t i) : index_(i) {}
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_;
};

/// One of the n+1 relative homology surface classes: Sigma_i for
/// i in [0, n) or Sigma_inf (the meridian disc class of the outer
/// torus). Surfaces are bookkeeping identities here, not geometry.
class SurfaceId {
public:
    static SurfaceId indexed(std::size_t i) { return SurfaceId(i); }
    static SurfaceId infinity() { return SurfaceId(npos); }

    bool is_infinity() const { return index_ == npos; }
    std::size_t index() const { return index_; }

    bool operator==(const SurfaceId&) const = default;

private:
    explicit SurfaceId(std::size_t i) : index_(i) {}
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_;
};

/// Mod-2 twist counts of the induced boundary framing relative to the
/// Lie group framing, one per surgery curve of an n-component
/// presentation (so n+1 entries including sigma_inf).
class TwistState {
public:
    explicit TwistState(std::size_t n) : sigma_(n, 0), sigma_inf_(0) {}

    std::size_t curve_count() const { return sigma_.size(); }

    int parity(CurveId c) const {
        return c.is_infinity() ? sigma_inf_ : sigma_.at(c.index());
    }
    void set_parity(CurveId c, int p) {
        if (c.is_infinity())
            sigma_inf_ = p & 1;
        else
            sigma_.at(c.index()) = p & 1;
    }

    /// The extension criterion over every glued solid torus.
    bool all_odd() const {
        if (sigma_inf_ != 1) return false;
        for (int p : sigma_) {
            if (p != 1) return false;
        }
        return true;
    }

    bool operator==(const TwistState&) const = default;

private:
    std::vector<int> sigma_;
    int sigma_inf_;
};

/// Twist parities of the product frame on the link complement after
/// the transversality perturbation: one turn along each meridian, none
/// along sigma_inf.
TwistState base_twists(std::size_t n);

/// The mod-2 intersection table of surgery curves with the surface
/// classes:
///   #(sigma_inf, Sigma_inf) = 1   #(sigma_inf, Sigma_i) = 0
///   #(sigma_i,   Sigma_inf) = 1   #(sigma_i,   Sigma_i) = 1
///   #(sigma_i,   Sigma_j)   = l_ij mod 2   (i != j)
int intersection_parity(CurveId c, SurfaceId s, const gf2::LinkingParity& lp);

/// Add one twist per surface crossed: for every curve,
/// parity += sum_i a_i #(curve, Sigma_i) + a_inf #(curve, Sigma_inf).
TwistState apply_surface_twists(const TwistState& base, const gf2::Gf2Vector& a,
                                int a_inf, const gf2::LinkingParity& lp);

/// The coefficient vector (a_1..a_n; a_inf = 1) whose surface twists
/// make every curve parity odd, together with the resulting state.
struct ParallelisationCertificate {
    gf2::Gf2Vector a;
    int a_inf = 1;
    TwistState resulting;
    bool valid = false;
};

/// Solve the framing system and apply the twists. `valid` is always
/// true on return; a failed check raises InternalError since it would
/// contradict the solvability of L a = 1.
ParallelisationCertificate compute_certificate(const gf2::LinkingParity& lp);

/// Per-component verdict of the even-surgery extendability criterion:
/// the adapted frame extends over the surgery torus iff n - sl is odd.
struct ComponentSurgeryCheck {
    std::int64_t framing = 0;
    std::int64_t self_linking = 0;
    int diff_parity = 0;  // (framing - self_linking) mod 2
    bool extends = false;
    bool sl_odd = false;  // diagnostic cross-check
};

struct EvenSurgeryReport {
    std::vector<ComponentSurgeryCheck> components;
    bool all_framings_even = false;  // Kaplan-form diagram
    bool overall = false;
};

EvenSurgeryReport check_even_surgery(const braids::FramedLink& fl);

}  // namespace paracert::framing

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "paracert/gf2.hpp"

namespace paracert::braids {

/// A braid word on `strands` strands. Letter g stands for the Artin
/// generator sigma_|g| crossing strands |g| and |g|+1, with sign(g) the
/// crossing sign (+ = right-handed). Valid letters satisfy
/// 1 <= |g| <= strands - 1.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;
};

/// Validating constructor; throws std::invalid_argument on a bad strand
/// count or out-of-range letter.
BraidWord make_braid(int strands, std::vector<int> letters);

/// Parse the text form "<strands> | <letters...>". Throws ParseError
/// with position info; out-of-range letters name the offender.
BraidWord parse_braid(std::string_view text);

/// Canonical text form; parse_braid(to_text(b)) == b, and canonical
/// inputs round-trip byte-exactly.
std::string to_text(const BraidWord& b);

/// Components of the braid closure: cycles of the strand permutation.
/// Strands are identified with their top positions (0-based);
/// components are numbered by least strand index.
struct LinkComponents {
    std::size_t count = 0;
    std::vector<std::size_t> assignment;  // strand -> component
    std::vector<std::size_t> strands_per_component;
};

LinkComponents closure_components(const BraidWord& b);

/// Signed sum of letters.
std::int64_t writhe(const BraidWord& b);

/// Pairwise linking numbers of the closure components: half the signed
/// count of crossings between strands of distinct components.
/// Symmetric with zero diagonal.
std::vector<std::vector<std::int64_t>> linking_matrix(const BraidWord& b);

/// linking_matrix reduced mod 2 with the diagonal set to 1.
gf2::LinkingParity linking_parity(const BraidWord& b);

/// Self-linking number of one component's transverse closure:
/// (signed self-crossings of the component) - (its strand count).
/// For a knot closure this is the classical e(beta) - n.
std::int64_t self_linking(const BraidWord& b, std::size_t component);

/// Diagrammatic oracle for self_linking: doubles every strand of the
/// component into two parallel strands (each crossing becoming the
/// corresponding block of crossings), inserts one negative full twist
/// per doubled strand to realize the contact-framed parallel copy, and
/// returns lk(K, K') read off the doubled closure.
std::int64_t push_off_linking(const BraidWord& b, std::size_t component);

/// The doubled braid word built by push_off_linking, exposed so tests
/// can inspect the construction. Also reports the two doubled strands
/// that seed copy 1 and copy 2.
struct DoubledBraid {
    BraidWord braid;
    std::size_t copy1_strand = 0;
    std::size_t copy2_strand = 0;
};
DoubledBraid double_component(const BraidWord& b, std::size_t component);

/// A braid closure with one integer surgery coefficient per component,
/// in component order.
struct FramedLink {
    BraidWord braid;
    std::vector<std::int64_t> framings;

    bool operator==(const FramedLink&) const = default;
};

/// Validating constructor; framing count must equal the component count.
FramedLink make_framed_link(BraidWord b, std::vector<std::int64_t> framings);

}  // namespace paracert::braids

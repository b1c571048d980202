#include "paracert/braids.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "paracert/errors.hpp"

namespace paracert::braids {

namespace {

void check_letters(int strands, const std::vector<int>& letters) {
    if (strands < 1)
        throw std::invalid_argument("braid needs at least one strand");
    for (int g : letters) {
        if (g == 0 || std::abs(g) > strands - 1)
            throw std::invalid_argument(
                "braid letter " + std::to_string(g) + " out of range for " +
                std::to_string(strands) + " strands");
    }
}

}  // namespace

BraidWord make_braid(int strands, std::vector<int> letters) {
    check_letters(strands, letters);
    return BraidWord{strands, std::move(letters)};
}

BraidWord parse_braid(std::string_view text) {
    // "<strands> | <letters...>", whitespace separated
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };
    auto parse_int = [&](const char* what) -> int {
        skip_ws();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos,
                                         text.data() + text.size(), value);
        if (ec != std::errc())
            throw ParseError(std::string("expected ") + what, 1, pos + 1);
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    };

    const int strands = parse_int("strand count");
    if (strands < 1)
        throw ParseError("strand count must be at least 1", 1, 1);
    skip_ws();
    if (pos >= text.size() || text[pos] != '|')
        throw ParseError("expected '|' after strand count", 1, pos + 1);
    ++pos;

    std::vector<int> letters;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        const std::size_t at = pos;
        const int g = parse_int("braid letter");
        if (g == 0 || std::abs(g) > strands - 1)
            throw ParseError("letter " + std::to_string(g) +
                                 " out of range for " +
                                 std::to_string(strands) + " strands",
                             1, at + 1);
        letters.push_back(g);
    }
    return BraidWord{strands, std::move(letters)};
}

std::string to_text(const BraidWord& b) {
    std::string out = std::to_string(b.strands) + " |";
    for (int g : b.letters) {
        out += ' ';
        out += std::to_string(g);
    }
    return out;
}

LinkComponents closure_components(const BraidWord& b) {
    const std::size_t n = static_cast<std::size_t>(b.strands);
    // final_pos[s] = bottom position of the strand starting at top
    // position s; the closure arc joins bottom p to top p, so the
    // successor of strand s around its component is final_pos[s].
    std::vector<std::size_t> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    for (int g : b.letters) {
        const std::size_t i = static_cast<std::size_t>(std::abs(g)) - 1;
        std::swap(cur[i], cur[i + 1]);
    }
    std::vector<std::size_t> final_pos(n);
    for (std::size_t p = 0; p < n; ++p) final_pos[cur[p]] = p;

    LinkComponents lc;
    lc.assignment.assign(n, SIZE_MAX);
    for (std::size_t s = 0; s < n; ++s) {
        if (lc.assignment[s] != SIZE_MAX) continue;
        const std::size_t comp = lc.count++;
        lc.strands_per_component.push_back(0);
        std::size_t t = s;
        do {
            lc.assignment[t] = comp;
            ++lc.strands_per_component[comp];
            t = final_pos[t];
        } while (t != s);
    }
    return lc;
}

std::int64_t writhe(const BraidWord& b) {
    std::int64_t e = 0;
    for (int g : b.letters) e += g > 0 ? 1 : -1;
    return e;
}

namespace {

// Signed crossing counts between (and within) components: scan the word
// tracking which strand occupies each position.
std::vector<std::vector<std::int64_t>> crossing_sums(
    const BraidWord& b, const LinkComponents& lc) {
    const std::size_t n = static_cast<std::size_t>(b.strands);
    std::vector<std::vector<std::int64_t>> sums(
        lc.count, std::vector<std::int64_t>(lc.count, 0));
    std::vector<std::size_t> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    for (int g : b.letters) {
        const std::size_t i = static_cast<std::size_t>(std::abs(g)) - 1;
        const std::size_t ca = lc.assignment[cur[i]];
        const std::size_t cb = lc.assignment[cur[i + 1]];
        const std::int64_t sign = g > 0 ? 1 : -1;
        sums[ca][cb] += sign;
        if (ca != cb) sums[cb][ca] += sign;
        std::swap(cur[i], cur[i + 1]);
    }
    return sums;
}

}  // namespace

std::vector<std::vector<std::int64_t>> linking_matrix(const BraidWord& b) {
    const LinkComponents lc = closure_components(b);
    auto sums = crossing_sums(b, lc);
    std::vector<std::vector<std::int64_t>> lk(
        lc.count, std::vector<std::int64_t>(lc.count, 0));
    for (std::size_t i = 0; i < lc.count; ++i) {
        for (std::size_t j = 0; j < lc.count; ++j) {
            if (i == j) continue;
            if (sums[i][j] % 2 != 0)
                throw InternalError(
                    "odd inter-component crossing count; linking numbers "
                    "are half of an even signed count");
            lk[i][j] = sums[i][j] / 2;
        }
    }
    return lk;
}

gf2::LinkingParity linking_parity(const BraidWord& b) {
    const auto lk = linking_matrix(b);
    const std::size_t n = lk.size();
    gf2::Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) m.set(i, j, (lk[i][j] % 2) != 0);
        }
    }
    return gf2::LinkingParity(std::move(m));
}

std::int64_t self_linking(const BraidWord& b, std::size_t component) {
    const LinkComponents lc = closure_components(b);
    if (component >= lc.count)
        throw std::invalid_argument("component index " +
                                    std::to_string(component) +
                                    " out of range");
    const auto sums = crossing_sums(b, lc);
    return sums[component][component] -
           static_cast<std::int64_t>(lc.strands_per_component[component]);
}

DoubledBraid double_component(const BraidWord& b, std::size_t component) {
    const std::size_t n = static_cast<std::size_t>(b.strands);
    const LinkComponents lc = closure_components(b);
    if (component >= lc.count)
        throw std::invalid_argument("component index " +
                                    std::to_string(component) +
                                    " out of range");

    std::vector<std::size_t> width(n);
    for (std::size_t s = 0; s < n; ++s)
        width[s] = lc.assignment[s] == component ? 2 : 1;
    const std::size_t total =
        std::accumulate(width.begin(), width.end(), std::size_t{0});

    std::vector<int> letters;
    letters.reserve(b.letters.size() * 4 + 2 * n);

    std::vector<std::size_t> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    for (int g : b.letters) {
        const std::size_t i = static_cast<std::size_t>(std::abs(g)) - 1;
        std::size_t offset = 0;
        for (std::size_t j = 0; j < i; ++j) offset += width[cur[j]];
        const std::size_t p = width[cur[i]];
        const std::size_t r = width[cur[i + 1]];
        // block transposition: every strand of the left block crosses
        // every strand of the right block once, all with sign(g);
        // within-block order is preserved
        for (std::size_t a = p; a-- > 0;) {
            for (std::size_t bb = 0; bb < r; ++bb) {
                const int gen = static_cast<int>(offset + a + bb + 1);
                letters.push_back(g > 0 ? gen : -gen);
            }
        }
        std::swap(cur[i], cur[i + 1]);
    }

    // Contact framing correction: the push-off along the trivializing
    // vector field differs from the blackboard parallel by one negative
    // meridian twist per strand of the component. Realize each as a
    // negative full twist of the doubled pair at its final position.
    std::size_t offset = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t s = cur[pos];
        if (lc.assignment[s] == component) {
            const int gen = static_cast<int>(offset + 1);
            letters.push_back(-gen);
            letters.push_back(-gen);
        }
        offset += width[s];
    }

    // Copies of the component's least strand seed the two parallel
    // knots: left copy at the block start, right copy next to it.
    std::size_t least = 0;
    while (lc.assignment[least] != component) ++least;
    std::size_t least_offset = 0;
    for (std::size_t s = 0; s < least; ++s) least_offset += width[s];

    return DoubledBraid{
        make_braid(static_cast<int>(total), std::move(letters)),
        least_offset, least_offset + 1};
}

std::int64_t push_off_linking(const BraidWord& b, std::size_t component) {
    const DoubledBraid d = double_component(b, component);
    const LinkComponents dc = closure_components(d.braid);
    const std::size_t c1 = dc.assignment[d.copy1_strand];
    const std::size_t c2 = dc.assignment[d.copy2_strand];
    if (c1 == c2)
        throw InternalError(
            "doubled braid copies merged into a single component");
    return linking_matrix(d.braid)[c1][c2];
}

FramedLink make_framed_link(BraidWord b, std::vector<std::int64_t> framings) {
    const LinkComponents lc = closure_components(b);
    if (framings.size() != lc.count)
        throw std::invalid_argument(
            "framing count " + std::to_string(framings.size()) +
            " does not match component count " + std::to_string(lc.count));
    return FramedLink{std::move(b), std::move(framings)};
}

}  // namespace paracert::braids

#include <cstdlib>
#include <string_view>
#include <vector>

#include "variants.hpp"

namespace paracert::simd {
namespace {

std::vector<const KernelTable*> build_registry() {
    std::vector<const KernelTable*> v;
    v.push_back(&scalar_kernels());
#if defined(PARACERT_HAVE_AVX2)
    if (avx2_supported()) v.push_back(&avx2_kernels());
#endif
#if defined(PARACERT_HAVE_NEON)
    v.push_back(&neon_kernels());
#endif
    return v;
}

const std::vector<const KernelTable*>& registry() {
    static const std::vector<const KernelTable*> r = build_registry();
    return r;
}

const KernelTable& select() {
    if (const char* env = std::getenv("PARACERT_SIMD")) {
        if (const KernelTable* t = kernel_by_name(env)) return *t;
        // unknown or unsupported name: fall back to the scalar reference
        return scalar_kernels();
    }
    // widest available variant; registry is ordered scalar -> vector
    return *registry().back();
}

}  // namespace

std::span<const KernelTable* const> available_kernels() {
    return {registry().data(), registry().size()};
}

const KernelTable* kernel_by_name(std::string_view name) {
    for (const KernelTable* t : registry()) {
        if (name == t->name) return t;
    }
    return nullptr;
}

const KernelTable& active() {
    static const KernelTable& chosen = select();
    return chosen;
}

}  // namespace paracert::simd

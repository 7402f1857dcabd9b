#include "palmcount/kernels.hpp"

#include <cstdlib>

namespace palm::kernels {

namespace {

void threshold_gt_scalar(const std::uint8_t* src, std::uint8_t* dst,
                         std::size_t n, std::uint8_t t) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = src[i] > t ? 1 : 0;
}

// Exact BT.601 rounding: (299 R + 587 G + 114 B + 500) / 1000 equals
// round(0.299 R + 0.587 G + 0.114 B) for all 8-bit inputs.
void luma_scalar(const std::uint8_t* p, std::uint8_t* dst, std::size_t n_px,
                 int channels) {
    for (std::size_t i = 0; i < n_px; ++i) {
        const std::uint8_t* px = p + i * channels;
        std::uint32_t s = 299u * px[0] + 587u * px[1] + 114u * px[2] + 500u;
        dst[i] = static_cast<std::uint8_t>(s / 1000u);
    }
}

void pick_channel_scalar(const std::uint8_t* p, std::uint8_t* dst,
                         std::size_t n_px, int channels, int ch) {
    for (std::size_t i = 0; i < n_px; ++i) dst[i] = p[i * channels + ch];
}

void row_erode3_scalar(const std::uint8_t* src, std::uint8_t* dst,
                       std::size_t n) {
    if (n == 0) return;
    if (n == 1) {
        dst[0] = 0;  // both neighbors out of bounds
        return;
    }
    dst[0] = 0;
    for (std::size_t i = 1; i + 1 < n; ++i)
        dst[i] = src[i - 1] & src[i] & src[i + 1];
    dst[n - 1] = 0;
}

void row_dilate3_scalar(const std::uint8_t* src, std::uint8_t* dst,
                        std::size_t n) {
    if (n == 0) return;
    if (n == 1) {
        dst[0] = src[0];
        return;
    }
    dst[0] = src[0] | src[1];
    for (std::size_t i = 1; i + 1 < n; ++i)
        dst[i] = src[i - 1] | src[i] | src[i + 1];
    dst[n - 1] = src[n - 2] | src[n - 1];
}

void and3_scalar(const std::uint8_t* a, const std::uint8_t* b,
                 const std::uint8_t* c, std::uint8_t* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i] & c[i];
}

void or3_scalar(const std::uint8_t* a, const std::uint8_t* b,
                const std::uint8_t* c, std::uint8_t* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i] | c[i];
}

void and2_scalar(const std::uint8_t* a, const std::uint8_t* b,
                 std::uint8_t* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void or2_scalar(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst,
                std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

const KernelTable kScalar{
    "scalar",          threshold_gt_scalar, luma_scalar, pick_channel_scalar,
    row_erode3_scalar, row_dilate3_scalar,  and3_scalar, or3_scalar,
    and2_scalar,       or2_scalar,
};

const KernelTable& pick_active() {
    const char* force = std::getenv("PALMCOUNT_FORCE_SCALAR");
    if (force && force[0] == '1') return kScalar;
    if (const KernelTable* t = avx2_kernels()) return *t;
    if (const KernelTable* t = neon_kernels()) return *t;
    return kScalar;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable& active_kernels() {
    static const KernelTable& table = pick_active();
    return table;
}

#if !(defined(__x86_64__) || defined(_M_X64))
const KernelTable* avx2_kernels() { return nullptr; }
#endif
#if !(defined(__aarch64__) || defined(_M_ARM64))
const KernelTable* neon_kernels() { return nullptr; }
#endif

}  // namespace palm::kernels

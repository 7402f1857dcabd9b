// NEON variants of the byte kernels, aarch64 only. Semantics are pinned by
// the scalar table; tests/test_kernels.cpp verifies bit-identity.

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include <cstdint>

#include "palmcount/kernels.hpp"

namespace palm::kernels {

namespace {

using std::size_t;
using std::uint8_t;

void threshold_gt_neon(const uint8_t* src, uint8_t* dst, size_t n, uint8_t t) {
    const uint8x16_t vt = vdupq_n_u8(t);
    const uint8x16_t one = vdupq_n_u8(1);
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t v = vld1q_u8(src + i);
        vst1q_u8(dst + i, vandq_u8(vcgtq_u8(v, vt), one));
    }
    for (; i < n; ++i) dst[i] = src[i] > t ? 1 : 0;
}

// (299 R + 587 G + 114 B + 500) / 1000 on four u32 lanes; float division is
// exact here (24-bit sums, quotients >= 1/1000 from any integer unless exact).
inline uint32x4_t luma_div1000(uint16x4_t r, uint16x4_t g, uint16x4_t b) {
    uint32x4_t s = vmull_n_u16(r, 299);
    s = vmlal_n_u16(s, g, 587);
    s = vmlal_n_u16(s, b, 114);
    s = vaddq_u32(s, vdupq_n_u32(500));
    float32x4_t q = vdivq_f32(vcvtq_f32_u32(s), vdupq_n_f32(1000.0f));
    return vcvtq_u32_f32(q);  // truncates toward zero
}

inline uint8x16_t luma16(uint8x16_t r8, uint8x16_t g8, uint8x16_t b8) {
    uint16x8_t rlo = vmovl_u8(vget_low_u8(r8)), rhi = vmovl_u8(vget_high_u8(r8));
    uint16x8_t glo = vmovl_u8(vget_low_u8(g8)), ghi = vmovl_u8(vget_high_u8(g8));
    uint16x8_t blo = vmovl_u8(vget_low_u8(b8)), bhi = vmovl_u8(vget_high_u8(b8));
    uint32x4_t q0 = luma_div1000(vget_low_u16(rlo), vget_low_u16(glo), vget_low_u16(blo));
    uint32x4_t q1 = luma_div1000(vget_high_u16(rlo), vget_high_u16(glo), vget_high_u16(blo));
    uint32x4_t q2 = luma_div1000(vget_low_u16(rhi), vget_low_u16(ghi), vget_low_u16(bhi));
    uint32x4_t q3 = luma_div1000(vget_high_u16(rhi), vget_high_u16(ghi), vget_high_u16(bhi));
    uint16x8_t lo = vcombine_u16(vmovn_u32(q0), vmovn_u32(q1));
    uint16x8_t hi = vcombine_u16(vmovn_u32(q2), vmovn_u32(q3));
    return vcombine_u8(vmovn_u16(lo), vmovn_u16(hi));
}

void luma_neon(const uint8_t* p, uint8_t* dst, size_t n_px, int channels) {
    size_t i = 0;
    if (channels == 3) {
        for (; i + 16 <= n_px; i += 16) {
            uint8x16x3_t v = vld3q_u8(p + i * 3);
            vst1q_u8(dst + i, luma16(v.val[0], v.val[1], v.val[2]));
        }
    } else if (channels == 4) {
        for (; i + 16 <= n_px; i += 16) {
            uint8x16x4_t v = vld4q_u8(p + i * 4);
            vst1q_u8(dst + i, luma16(v.val[0], v.val[1], v.val[2]));
        }
    }
    if (i < n_px)
        scalar_kernels().luma_bt601(p + i * channels, dst + i, n_px - i, channels);
}

void pick_channel_neon(const uint8_t* p, uint8_t* dst, size_t n_px,
                       int channels, int ch) {
    size_t i = 0;
    if (channels == 3) {
        for (; i + 16 <= n_px; i += 16)
            vst1q_u8(dst + i, vld3q_u8(p + i * 3).val[ch]);
    } else if (channels == 4) {
        for (; i + 16 <= n_px; i += 16)
            vst1q_u8(dst + i, vld4q_u8(p + i * 4).val[ch]);
    }
    for (; i < n_px; ++i) dst[i] = p[i * channels + ch];
}

void row_erode3_neon(const uint8_t* src, uint8_t* dst, size_t n) {
    if (n < 18) {
        scalar_kernels().row_erode3(src, dst, n);
        return;
    }
    dst[0] = 0;
    size_t i = 1;
    for (; i + 16 <= n - 1; i += 16) {
        uint8x16_t a = vld1q_u8(src + i - 1);
        uint8x16_t b = vld1q_u8(src + i);
        uint8x16_t c = vld1q_u8(src + i + 1);
        vst1q_u8(dst + i, vandq_u8(vandq_u8(a, b), c));
    }
    for (; i + 1 < n; ++i) dst[i] = src[i - 1] & src[i] & src[i + 1];
    dst[n - 1] = 0;
}

void row_dilate3_neon(const uint8_t* src, uint8_t* dst, size_t n) {
    if (n < 18) {
        scalar_kernels().row_dilate3(src, dst, n);
        return;
    }
    dst[0] = src[0] | src[1];
    size_t i = 1;
    for (; i + 16 <= n - 1; i += 16) {
        uint8x16_t a = vld1q_u8(src + i - 1);
        uint8x16_t b = vld1q_u8(src + i);
        uint8x16_t c = vld1q_u8(src + i + 1);
        vst1q_u8(dst + i, vorrq_u8(vorrq_u8(a, b), c));
    }
    for (; i + 1 < n; ++i) dst[i] = src[i - 1] | src[i] | src[i + 1];
    dst[n - 1] = src[n - 2] | src[n - 1];
}

void and3_neon(const uint8_t* a, const uint8_t* b, const uint8_t* c,
               uint8_t* dst, size_t n) {
    size_t i = 0;
    for (; i + 16 <= n; i += 16)
        vst1q_u8(dst + i, vandq_u8(vandq_u8(vld1q_u8(a + i), vld1q_u8(b + i)),
                                   vld1q_u8(c + i)));
    for (; i < n; ++i) dst[i] = a[i] & b[i] & c[i];
}

void or3_neon(const uint8_t* a, const uint8_t* b, const uint8_t* c,
              uint8_t* dst, size_t n) {
    size_t i = 0;
    for (; i + 16 <= n; i += 16)
        vst1q_u8(dst + i, vorrq_u8(vorrq_u8(vld1q_u8(a + i), vld1q_u8(b + i)),
                                   vld1q_u8(c + i)));
    for (; i < n; ++i) dst[i] = a[i] | b[i] | c[i];
}

void and2_neon(const uint8_t* a, const uint8_t* b, uint8_t* dst, size_t n) {
    size_t i = 0;
    for (; i + 16 <= n; i += 16)
        vst1q_u8(dst + i, vandq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void or2_neon(const uint8_t* a, const uint8_t* b, uint8_t* dst, size_t n) {
    size_t i = 0;
    for (; i + 16 <= n; i += 16)
        vst1q_u8(dst + i, vorrq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    for (; i < n; ++i) dst[i] = a[i] | b[i];
}

const KernelTable kNeon{
    "neon",          threshold_gt_neon, luma_neon, pick_channel_neon,
    row_erode3_neon, row_dilate3_neon,  and3_neon, or3_neon,
    and2_neon,       or2_neon,
};

}  // namespace

const KernelTable* neon_kernels() { return &kNeon; }

}  // namespace palm::kernels

#endif  // aarch64

// AVX2 variants of the byte kernels. Must stay bit-identical to the scalar
// table in kernels.cpp; tests/test_kernels.cpp checks that on random buffers.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstdint>

#include "palmcount/kernels.hpp"

namespace palm::kernels {

namespace {

using std::size_t;
using std::uint8_t;

void threshold_gt_avx2(const uint8_t* src, uint8_t* dst, size_t n, uint8_t t) {
    const __m256i vt = _mm256_set1_epi8(static_cast<char>(t));
    const __m256i zero = _mm256_setzero_si256();
    const __m256i ones = _mm256_set1_epi8(1);
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        // subs_epu8(v, t) is nonzero exactly where v > t
        __m256i gt = _mm256_subs_epu8(v, vt);
        __m256i le = _mm256_cmpeq_epi8(gt, zero);
        __m256i out = _mm256_andnot_si256(le, ones);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), out);
    }
    for (; i < n; ++i) dst[i] = src[i] > t ? 1 : 0;
}

// Shuffle masks that gather channel `ch` of 16 interleaved pixels from the
// `channels` consecutive 16-byte chunks covering them.
struct PlaneMasks {
    __m128i m[4];
};

PlaneMasks plane_masks(int channels, int ch) {
    alignas(16) std::int8_t bytes[4][16];
    for (int chunk = 0; chunk < channels; ++chunk) {
        for (int i = 0; i < 16; ++i) {
            int g = channels * i + ch;
            bytes[chunk][i] =
                (g >= 16 * chunk && g < 16 * (chunk + 1))
                    ? static_cast<std::int8_t>(g - 16 * chunk)
                    : static_cast<std::int8_t>(-1);
        }
    }
    PlaneMasks pm;
    for (int chunk = 0; chunk < channels; ++chunk)
        pm.m[chunk] = _mm_load_si128(reinterpret_cast<const __m128i*>(bytes[chunk]));
    return pm;
}

inline __m128i extract_plane(const uint8_t* p, int channels, const PlaneMasks& pm) {
    __m128i acc = _mm_setzero_si128();
    for (int chunk = 0; chunk < channels; ++chunk) {
        __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p + 16 * chunk));
        acc = _mm_or_si128(acc, _mm_shuffle_epi8(v, pm.m[chunk]));
    }
    return acc;
}

void pick_channel_avx2(const uint8_t* p, uint8_t* dst, size_t n_px,
                       int channels, int ch) {
    if (channels != 3 && channels != 4) {
        for (size_t i = 0; i < n_px; ++i) dst[i] = p[i * channels + ch];
        return;
    }
    const PlaneMasks pm = plane_masks(channels, ch);
    size_t i = 0;
    for (; i + 16 <= n_px; i += 16)
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i),
                         extract_plane(p + i * channels, channels, pm));
    for (; i < n_px; ++i) dst[i] = p[i * channels + ch];
}

// Widen 16 u8 values to two __m256i of 8 u32 lanes each.
inline void widen_u8_to_u32(__m128i v, __m256i& lo, __m256i& hi) {
    lo = _mm256_cvtepu8_epi32(v);
    hi = _mm256_cvtepu8_epi32(_mm_srli_si128(v, 8));
}

// (299 R + 587 G + 114 B + 500) / 1000 on 8 u32 lanes. The sum fits in 24
// bits, so float division is exact: quotients are either exact multiples or
// at least 1/1000 away from an integer, far beyond float rounding error.
inline __m256i luma_div1000(__m256i r, __m256i g, __m256i b) {
    __m256i s = _mm256_mullo_epi32(r, _mm256_set1_epi32(299));
    s = _mm256_add_epi32(s, _mm256_mullo_epi32(g, _mm256_set1_epi32(587)));
    s = _mm256_add_epi32(s, _mm256_mullo_epi32(b, _mm256_set1_epi32(114)));
    s = _mm256_add_epi32(s, _mm256_set1_epi32(500));
    __m256 q = _mm256_div_ps(_mm256_cvtepi32_ps(s), _mm256_set1_ps(1000.0f));
    return _mm256_cvttps_epi32(q);
}

void luma_avx2(const uint8_t* p, uint8_t* dst, size_t n_px, int channels) {
    if (channels != 3 && channels != 4) {
        scalar_kernels().luma_bt601(p, dst, n_px, channels);
        return;
    }
    const PlaneMasks pr = plane_masks(channels, 0);
    const PlaneMasks pg = plane_masks(channels, 1);
    const PlaneMasks pb = plane_masks(channels, 2);
    size_t i = 0;
    for (; i + 16 <= n_px; i += 16) {
        const uint8_t* base = p + i * channels;
        __m128i r8 = extract_plane(base, channels, pr);
        __m128i g8 = extract_plane(base, channels, pg);
        __m128i b8 = extract_plane(base, channels, pb);
        __m256i rlo, rhi, glo, ghi, blo, bhi;
        widen_u8_to_u32(r8, rlo, rhi);
        widen_u8_to_u32(g8, glo, ghi);
        widen_u8_to_u32(b8, blo, bhi);
        __m256i qlo = luma_div1000(rlo, glo, blo);   // pixels 0..7
        __m256i qhi = luma_div1000(rhi, ghi, bhi);   // pixels 8..15
        // u32 -> u16 within lanes, then fix the lane interleave
        __m256i w = _mm256_packus_epi32(qlo, qhi);
        w = _mm256_permute4x64_epi64(w, _MM_SHUFFLE(3, 1, 2, 0));
        __m128i out = _mm_packus_epi16(_mm256_castsi256_si128(w),
                                       _mm256_extracti128_si256(w, 1));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), out);
    }
    if (i < n_px) scalar_kernels().luma_bt601(p + i * channels, dst + i, n_px - i, channels);
}

void row_erode3_avx2(const uint8_t* src, uint8_t* dst, size_t n) {
    if (n < 34) {
        scalar_kernels().row_erode3(src, dst, n);
        return;
    }
    dst[0] = 0;
    size_t i = 1;
    for (; i + 32 <= n - 1; i += 32) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 1));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 1));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_and_si256(_mm256_and_si256(a, b), c));
    }
    for (; i + 1 < n; ++i) dst[i] = src[i - 1] & src[i] & src[i + 1];
    dst[n - 1] = 0;
}

void row_dilate3_avx2(const uint8_t* src, uint8_t* dst, size_t n) {
    if (n < 34) {
        scalar_kernels().row_dilate3(src, dst, n);
        return;
    }
    dst[0] = src[0] | src[1];
    size_t i = 1;
    for (; i + 32 <= n - 1; i += 32) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 1));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 1));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_or_si256(_mm256_or_si256(a, b), c));
    }
    for (; i + 1 < n; ++i) dst[i] = src[i - 1] | src[i] | src[i + 1];
    dst[n - 1] = src[n - 2] | src[n - 1];
}

void and3_avx2(const uint8_t* a, const uint8_t* b, const uint8_t* c,
               uint8_t* dst, size_t n) {
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_and_si256(_mm256_and_si256(va, vb), vc));
    }
    for (; i < n; ++i) dst[i] = a[i] & b[i] & c[i];
}

void or3_avx2(const uint8_t* a, const uint8_t* b, const uint8_t* c,
              uint8_t* dst, size_t n) {
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_or_si256(_mm256_or_si256(va, vb), vc));
    }
    for (; i < n; ++i) dst[i] = a[i] | b[i] | c[i];
}

void and2_avx2(const uint8_t* a, const uint8_t* b, uint8_t* dst, size_t n) {
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_and_si256(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void or2_avx2(const uint8_t* a, const uint8_t* b, uint8_t* dst, size_t n) {
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_or_si256(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] | b[i];
}

const KernelTable kAvx2{
    "avx2",          threshold_gt_avx2, luma_avx2, pick_channel_avx2,
    row_erode3_avx2, row_dilate3_avx2,  and3_avx2, or3_avx2,
    and2_avx2,       or2_avx2,
};

}  // namespace

const KernelTable* avx2_kernels() {
    return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}

}  // namespace palm::kernels

#endif  // x86_64

#pragma once

#include <cstddef>
#include <cstdint>

namespace palm::kernels {

/// Data-parallel byte kernels behind the raster and morphology operations.
///
/// The scalar table defines the semantics; the SIMD tables must be
/// bit-identical to it (the test suite checks every kernel against the scalar
/// reference on randomized buffers). One table is selected at startup: AVX2
/// when the CPU reports it, NEON on aarch64, scalar otherwise. Setting
/// PALMCOUNT_FORCE_SCALAR=1 in the environment pins the scalar table.
///
/// Mask kernels operate on 0/1 bytes. "Zero outside [0,n)" means the
/// neighborhood is clipped with background semantics at row ends.
struct KernelTable {
    const char* name;

    // dst[i] = src[i] > t ? 1 : 0
    void (*threshold_gt)(const std::uint8_t* src, std::uint8_t* dst,
                         std::size_t n, std::uint8_t t);
    // dst[i] = (299 R + 587 G + 114 B + 500) / 1000 over interleaved pixels
    void (*luma_bt601)(const std::uint8_t* interleaved, std::uint8_t* dst,
                       std::size_t n_px, int channels);
    // dst[i] = interleaved[i * channels + ch]
    void (*pick_channel)(const std::uint8_t* interleaved, std::uint8_t* dst,
                         std::size_t n_px, int channels, int ch);
    // dst[i] = src[i-1] & src[i] & src[i+1], zero outside [0,n)
    void (*row_erode3)(const std::uint8_t* src, std::uint8_t* dst,
                       std::size_t n);
    // dst[i] = src[i-1] | src[i] | src[i+1], zero outside [0,n)
    void (*row_dilate3)(const std::uint8_t* src, std::uint8_t* dst,
                        std::size_t n);
    void (*and3)(const std::uint8_t* a, const std::uint8_t* b,
                 const std::uint8_t* c, std::uint8_t* dst, std::size_t n);
    void (*or3)(const std::uint8_t* a, const std::uint8_t* b,
                const std::uint8_t* c, std::uint8_t* dst, std::size_t n);
    void (*and2)(const std::uint8_t* a, const std::uint8_t* b,
                 std::uint8_t* dst, std::size_t n);
    void (*or2)(const std::uint8_t* a, const std::uint8_t* b,
                std::uint8_t* dst, std::size_t n);
};

const KernelTable& scalar_kernels();

/// Null when the variant is not compiled in or the CPU lacks the feature.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

const KernelTable& active_kernels();

}  // namespace palm::kernels

#pragma once

#include <filesystem>
#include <string>

#include "unwrapforge/grid.hpp"

namespace unwrapforge {

// PGRD v1, little-endian.
//   bytes  0..3   magic "PGRD"
//   byte   4      version = 1
//   byte   5      kind (GridKind)
//   byte   6      flags, bit0 = mask block present
//   byte   7      pad = 0
//   bytes  8..15  width u32, height u32
//   bytes 16..31  wavelength f64, pixel_spacing_x f64
//   bytes 32..63  pixel_spacing_y f64, los f64 x 3
//   payload       f32 x (w*h), row-major, top-left origin; masked pixels are
//                 stored as quiet NaN (the mask block is authoritative)
//   mask          ceil(w*h/8) bytes, row-major, LSB-first (present iff bit0)
void write_grid(const PhaseGrid& grid, const std::filesystem::path& path);
PhaseGrid read_grid(const std::filesystem::path& path);

// Raw packed f32 (w*h*4 bytes) with caller-supplied dimensions.
PhaseGrid read_raw_f32(const std::filesystem::path& path, int width, int height);

// 8-bit binary PGM, min-max scaled over valid pixels; invalid pixels map to 0.
void write_pgm(const PhaseGrid& grid, const std::filesystem::path& path);

}  // namespace unwrapforge

#ifndef MRR_IMAGE_IO_H_
#define MRR_IMAGE_IO_H_

#include <filesystem>

#include "mrr/image.h"

namespace mrr {

// 8-bit export: each channel is clamped to [0, 1] and stored as
// round(v * 255). Quantize applies the same mapping in memory.
Image3 Quantize(const Image3& img);
void WritePng(const std::filesystem::path& path, const Image3& img);
void WritePng(const std::filesystem::path& path, const ImageF& gray);
void WritePng(const std::filesystem::path& path, const Mask& mask);
Image3 ReadPng(const std::filesystem::path& path);

// Lossless sidecar: the ASCII header "MRRF\n<width> <height> 3\n" followed by
// width * height * 3 little-endian IEEE-754 doubles in row-major RGB order.
void WriteFloatImage(const std::filesystem::path& path, const Image3& img);
Image3 ReadFloatImage(const std::filesystem::path& path);

}  // namespace mrr

#endif  // MRR_IMAGE_IO_H_

#pragma once

#include <string>

namespace booth {

// Deterministic numeric formatting for structured output. Both are plain
// C printf formats, so the bytes are identical across platforms.

/// 12 significant digits (%.12g), used in JSON and CSV fields.
std::string fmt_sig(double v);

/// 12 decimal places (%.12f), used in the human-readable text format.
std::string fmt_fixed(double v);

}  // namespace booth

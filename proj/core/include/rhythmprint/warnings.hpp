#pragma once

#include <string>
#include <vector>

namespace rhythmprint {

/// Non-fatal diagnostic collected along the pipeline. `measure` is the
/// measure number the warning refers to, 0 when not tied to one.
struct Warning {
    std::string code;
    std::string message;
    int measure = 0;
};

using Warnings = std::vector<Warning>;

namespace warning_code {
inline constexpr const char* kGraceNoteDropped = "grace_note_dropped";
inline constexpr const char* kEventSnapped = "event_snapped";
inline constexpr const char* kDanglingTie = "dangling_tie";
inline constexpr const char* kSubTatumDropped = "sub_tatum_dropped";
inline constexpr const char* kOverCapacityClamped = "over_capacity_clamped";
inline constexpr const char* kMeasureOverfull = "measure_overfull";
inline constexpr const char* kPartMeasureCountMismatch = "part_measure_count_mismatch";
inline constexpr const char* kTimeSignatureConflict = "time_signature_conflict";
inline constexpr const char* kNonNumericMeasureNumber = "non_numeric_measure_number";
inline constexpr const char* kEmptyStrip = "empty_strip";
}  // namespace warning_code

}  // namespace rhythmprint

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rhythmprint/rational.hpp"
#include "rhythmprint/warnings.hpp"

namespace rhythmprint {

/// Tie flag of a written note. kContinue marks a note that both ends one
/// tie and starts the next.
enum class Tie { kNone, kStart, kStop, kContinue };

struct TimeSignature {
    int beats = 4;
    int beat_unit = 4;

    Ql capacity_ql() const { return Ql(static_cast<std::int64_t>(beats) * 4, beat_unit); }

    friend bool operator==(const TimeSignature&, const TimeSignature&) = default;
};

/// One note or rest as written, positioned in exact quarter-lengths from
/// the start of its measure. Pitch content is already discarded.
struct RawEvent {
    Ql onset_ql{0};
    Ql duration_ql{0};
    bool is_rest = false;
    int voice = 1;
    int dots = 0;
    Tie tie = Tie::kNone;
    bool chord_member = false;
    std::optional<std::pair<int, int>> tuplet_ratio;  // actual over normal
    bool continuation = false;  // sound carried over the barline by a tie

    friend bool operator==(const RawEvent&, const RawEvent&) = default;
};

struct RawMeasure {
    int number = 1;
    TimeSignature time_signature;  // effective (inherited when not restated)
    int divisions = 1;             // MusicXML divisions per quarter, effective
    std::vector<RawEvent> events;

    Ql capacity_ql() const { return time_signature.capacity_ql(); }

    friend bool operator==(const RawMeasure&, const RawMeasure&) = default;
};

struct RawPart {
    std::string part_id;
    std::vector<RawMeasure> measures;

    friend bool operator==(const RawPart&, const RawPart&) = default;
};

struct RawScore {
    std::vector<RawPart> parts;
    std::string work_title;
    std::string source_path;

    std::size_t measure_count() const;

    friend bool operator==(const RawScore&, const RawScore&) = default;
};

/// Parses the rhythm-relevant subset of a score-partwise MusicXML document.
/// Honors divisions, time, backup/forward, dot, tie, chord and
/// time-modification; skips pitch, layout and notation content.
///
/// Throws MalformedXml, UnsupportedRoot, CompressedInputUnsupported,
/// MissingDivisions or NegativeCursor.
RawScore parse_musicxml(std::string_view bytes, Warnings& warnings,
                        std::string source_path = {});

/// Reads and parses a .xml/.musicxml file. Compressed .mxl input is
/// rejected with CompressedInputUnsupported.
RawScore parse_musicxml_file(const std::string& path, Warnings& warnings);

/// Merges tie chains that start and end inside the measure into single
/// events with summed durations. A stop arriving from the previous measure
/// stays at onset 0 flagged `continuation`; any other unmatched stop is
/// kept as-is with a dangling_tie warning.
RawMeasure merge_ties_within_measure(const RawMeasure& m, Warnings& warnings);

}  // namespace rhythmprint

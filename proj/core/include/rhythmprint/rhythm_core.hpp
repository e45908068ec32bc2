#pragma once

#include <optional>
#include <vector>

#include "rhythmprint/rational.hpp"
#include "rhythmprint/score_ingest.hpp"
#include "rhythmprint/warnings.hpp"

namespace rhythmprint {

inline constexpr int kDiskMin = -3;  // 32nd-note layer
inline constexpr int kDiskMax = 2;   // whole-note layer

/// Duration of rhythm-tree layer i in quarter-lengths: 2^i.
/// Throws DiskOutOfRange outside [-3, 2].
Ql duration(int disk_index);

/// Duration of an n-dotted note whose base layer is i: sum of 2^(i-k) for
/// k in [0, n]. Throws DiskOutOfRange when a dot refines below the tatum.
Ql dotted_duration(int disk_index, int dots);

/// The quantization grid. Only the 32-slot grid is exercised in this
/// version; the type exists so a finer tatum stays a local change.
struct TatumGrid {
    int slots_per_whole = 32;
    Ql slot_duration_ql{1, 8};
};

/// One quantized note or rest. Dotted events live on the disk above their
/// base duration class; `dots` is the effective dot count used for
/// geometry, not necessarily the written one.
struct RhythmEvent {
    int onset_slot = 0;
    int disk_index = 0;
    bool is_rest = false;
    int dots = 0;
    int voice = 1;
    Ql quantization_error_ql{0};

    /// Angular footprint in quarter-lengths: the dotted duration of the
    /// base layer for dotted events, the plain layer duration otherwise.
    Ql extent_ql() const;

    friend bool operator==(const RhythmEvent&, const RhythmEvent&) = default;
};

struct MeasureRhythm {
    int measure_number = 1;
    TimeSignature time_signature;
    Ql capacity_ql{4};
    double angular_span_deg = 360.0;
    std::vector<RhythmEvent> events;  // aggregated, (disk desc, slot asc)

    int slot_count() const;  // measure length in tatum slots
};

/// Snaps a raw event onto the tatum grid and assigns its disk. Onsets round
/// to the nearest slot (ties to even); durations take the largest layer not
/// exceeding them unless the written dots match a dotted class exactly, in
/// which case the event is promoted one disk. Returns nullopt for events
/// below half a tatum (dropped with a warning).
std::optional<RhythmEvent> classify_event(const RawEvent& e, const TatumGrid& grid,
                                          Warnings& warnings, int measure_number = 0);

/// Aggregates simultaneous events: one event per (disk, slot) key, notes
/// winning over rests. Throws UnsupportedTimeSignature when the measure
/// exceeds one whole note (a fingerprint covers a single traversal).
MeasureRhythm resolve_measure(std::vector<RhythmEvent> events, TimeSignature sig,
                              int measure_number = 0);

/// Full quantization pipeline over all parts and voices: per-measure tie
/// merge, classification and aggregation.
std::vector<MeasureRhythm> quantize_score(const RawScore& score, const TatumGrid& grid,
                                          Warnings& warnings);

}  // namespace rhythmprint

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grpoplan/types.hpp"

namespace grpoplan {

// Token id layout. Ids are dense, 0-based and stable; the vocabulary hash
// in checkpoints guards against accidental re-numbering.
inline constexpr int kThinkOpen = 0;
inline constexpr int kThinkClose = 1;
inline constexpr int kTrajOpen = 2;
inline constexpr int kTrajClose = 3;
inline constexpr int kEos = 4;
inline constexpr int kSlotOpenBase = 5;  // 5..9, one per reasoning domain
inline constexpr int kNumSlots = 5;
inline constexpr int kSlotEnd = 10;
inline constexpr int kLateralBase = 11;       // LEFT, STRAIGHT, RIGHT
inline constexpr int kLongitudinalBase = 14;  // ACCELERATE, KEEP, DECELERATE, STOP
inline constexpr int kXBinBase = 18;
inline constexpr int kNumXBins = 257;  // x in [-2, 62] m, 0.25 m bins
inline constexpr int kYBinBase = kXBinBase + kNumXBins;  // 275
inline constexpr int kNumYBins = 129;  // y in [-16, 16] m, 0.25 m bins
inline constexpr int kFillerBase = kYBinBase + kNumYBins;  // 404
inline constexpr int kNumFillers = 64;
inline constexpr int kVocabSize = kFillerBase + kNumFillers;  // 468

inline constexpr double kGridStep = 0.25;
inline constexpr double kXMin = -2.0;
inline constexpr double kXMax = kXMin + kGridStep * (kNumXBins - 1);  // 62
inline constexpr double kYMin = -16.0;
inline constexpr double kYMax = kYMin + kGridStep * (kNumYBins - 1);  // 16

inline constexpr int kDecisionSlot = 4;  // ego decision-making and planning
inline constexpr int kMaxFillersPerSlot = 4;
inline constexpr int kMaxSeqLen = 64;
inline constexpr int kCoordTokens = 2 * kNumWaypoints;  // 12

inline bool is_slot_open(int t) { return t >= kSlotOpenBase && t < kSlotOpenBase + kNumSlots; }
inline bool is_lateral(int t) { return t >= kLateralBase && t < kLateralBase + 3; }
inline bool is_longitudinal(int t) { return t >= kLongitudinalBase && t < kLongitudinalBase + 4; }
inline bool is_xbin(int t) { return t >= kXBinBase && t < kXBinBase + kNumXBins; }
inline bool is_ybin(int t) { return t >= kYBinBase && t < kYBinBase + kNumYBins; }
inline bool is_coord(int t) { return is_xbin(t) || is_ybin(t); }
inline bool is_filler(int t) { return t >= kFillerBase && t < kFillerBase + kNumFillers; }

class Vocabulary {
  public:
    Vocabulary();

    int size() const { return kVocabSize; }
    const std::string& text(int token) const { return texts_.at(static_cast<size_t>(token)); }
    // -1 when no token carries this surface string.
    int token_of(const std::string& text) const;
    // 64-bit FNV-1a over the ordered token string list.
    uint64_t hash() const { return hash_; }

  private:
    std::vector<std::string> texts_;
    uint64_t hash_ = 0;
};

const Vocabulary& vocabulary();  // process-wide immutable instance

struct DiscretizeResult {
    std::array<int, kCoordTokens> bins{};  // (x,y) bin index pairs, 6 of them
    bool clamped = false;                  // some coordinate fell outside the grid
};

DiscretizeResult discretize(const Trajectory& t);
Trajectory continuize(const std::array<int, kCoordTokens>& bins);
double xbin_center(int bin);
double ybin_center(int bin);

// Grammar automaton. Drives both the sampling mask in the policy and the
// validity check in log_prob. legal_tokens() reports candidate ids as
// [lo, hi) ranges since coordinate and filler blocks are contiguous.
struct TokenRange {
    int lo = 0;
    int hi = 0;  // exclusive
    int count() const { return hi - lo; }
};

class GrammarState {
  public:
    // Ranges are appended to `out`; returns total legal-token count.
    int legal_tokens(std::vector<TokenRange>& out) const;
    bool is_legal(int token) const;
    void step(int token);  // precondition: is_legal(token)
    bool done() const { return phase_ == Phase::Done; }

  private:
    enum class Phase : uint8_t {
        Start,        // expect THINK_OPEN
        ThinkTop,     // slot openers (>= next_slot_) or THINK_CLOSE
        SlotBody,     // fillers, then SLOT_END (or lateral in decision slot)
        DecisionLon,  // longitudinal token after the lateral
        SlotClose,    // SLOT_END after the meta pair
        AfterThink,   // expect TRAJ_OPEN
        Coords,       // alternating X/Y bins, 12 total
        AfterCoords,  // expect TRAJ_CLOSE
        AfterTraj,    // expect EOS
        Done,
    };
    Phase phase_ = Phase::Start;
    uint8_t next_slot_ = 0;
    uint8_t slot_ = 0;
    uint8_t fillers_ = 0;
    uint8_t coords_ = 0;
};

bool grammar_valid(const std::vector<int>& token_ids);

enum class ParseError : uint8_t {
    None,
    MissingSection,  // structural token absent or misordered
    BadArity,        // trajectory section does not hold exactly 12 coordinate tokens
    NoMeta,          // decision slot present but lacks one lateral + one longitudinal
};

std::string_view to_string(ParseError e);

struct Response {
    std::vector<int> think_tokens;  // between THINK_OPEN and THINK_CLOSE
    std::optional<MetaAction> meta;
    Trajectory trajectory;  // bin centers
    std::vector<int> token_ids;

    bool operator==(const Response&) const = default;
};

struct ParseOutcome {
    std::optional<Response> response;
    ParseError error = ParseError::None;
    bool ok() const { return response.has_value(); }
};

ParseOutcome parse(const std::vector<int>& token_ids);

// Builds the full token sequence from parts; trajectory coordinates are
// snapped to bin centers (clamping flagged via discretize if needed).
Response make_response(std::vector<int> think_tokens, const Trajectory& trajectory);
std::vector<int> serialize(const Response& r);

// Log rendering: literal <think>/<trajectory> delimiters, waypoints as
// "(x, y)" with 2 decimals.
std::string render_text(const Response& r);
std::string render_think_text(const std::vector<int>& think_tokens);
std::optional<MetaAction> extract_meta(const std::string& think_text);

}  // namespace grpoplan

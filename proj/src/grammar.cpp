#include "grpoplan/grammar.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "grpoplan/rng.hpp"

namespace grpoplan {

namespace {

const char* kSlotNames[kNumSlots] = {
    "traffic knowledge understanding",
    "general element recognition",
    "traffic graph generation",
    "target attribute comprehension",
    "ego decision-making and planning",
};

// 8x8 cross product of short clause fragments; gives the 64 fixed filler
// phrases without a page of string literals.
const char* kFillerSubjects[8] = {
    "the ego vehicle", "the lead vehicle",    "the crossing agent", "the adjacent lane",
    "the road ahead",  "the traffic context", "the target lane",    "the planned path",
};
const char* kFillerPredicates[8] = {
    "is clear of obstacles",          "keeps a steady pace",
    "requires close attention",       "stays within the lane bounds",
    "shows no conflicting traffic",   "is tracked over the horizon",
    "constrains the feasible speeds", "matches the expected geometry",
};

std::string coord_token_text(const char* axis, double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s=%.2f", axis, value);
    return buf;
}

}  // namespace

Vocabulary::Vocabulary() {
    texts_.resize(kVocabSize);
    texts_[kThinkOpen] = "<think>";
    texts_[kThinkClose] = "</think>";
    texts_[kTrajOpen] = "<trajectory>";
    texts_[kTrajClose] = "</trajectory>";
    texts_[kEos] = "<eos>";
    for (int s = 0; s < kNumSlots; ++s)
        texts_[static_cast<size_t>(kSlotOpenBase + s)] = std::string(kSlotNames[s]) + ":";
    texts_[kSlotEnd] = "</slot>";
    for (int i = 0; i < 3; ++i)
        texts_[static_cast<size_t>(kLateralBase + i)] = std::string(to_string(static_cast<Lateral>(i)));
    for (int i = 0; i < 4; ++i)
        texts_[static_cast<size_t>(kLongitudinalBase + i)] =
            std::string(to_string(static_cast<Longitudinal>(i)));
    for (int b = 0; b < kNumXBins; ++b)
        texts_[static_cast<size_t>(kXBinBase + b)] = coord_token_text("x", xbin_center(b));
    for (int b = 0; b < kNumYBins; ++b)
        texts_[static_cast<size_t>(kYBinBase + b)] = coord_token_text("y", ybin_center(b));
    for (int f = 0; f < kNumFillers; ++f)
        texts_[static_cast<size_t>(kFillerBase + f)] =
            std::string(kFillerSubjects[f / 8]) + " " + kFillerPredicates[f % 8];

    uint64_t h = 0xcbf29ce484222325ull;
    for (const std::string& t : texts_) {
        h = fnv1a64(t, h);
        h = fnv1a64(std::string_view("\n"), h);
    }
    hash_ = h;
}

int Vocabulary::token_of(const std::string& text) const {
    for (int i = 0; i < kVocabSize; ++i)
        if (texts_[static_cast<size_t>(i)] == text) return i;
    return -1;
}

const Vocabulary& vocabulary() {
    static const Vocabulary v;
    return v;
}

double xbin_center(int bin) { return kXMin + kGridStep * bin; }
double ybin_center(int bin) { return kYMin + kGridStep * bin; }

namespace {

int quantize(double value, double lo, int nbins, bool& clamped) {
    const double raw = (value - lo) / kGridStep;
    int b = static_cast<int>(std::lround(raw));
    if (b < 0 || b >= nbins) {
        clamped = true;
        b = std::clamp(b, 0, nbins - 1);
    }
    return b;
}

}  // namespace

DiscretizeResult discretize(const Trajectory& t) {
    DiscretizeResult r;
    for (int k = 0; k < kNumWaypoints; ++k) {
        r.bins[static_cast<size_t>(2 * k)] = quantize(t.waypoints[static_cast<size_t>(k)].x, kXMin, kNumXBins, r.clamped);
        r.bins[static_cast<size_t>(2 * k + 1)] = quantize(t.waypoints[static_cast<size_t>(k)].y, kYMin, kNumYBins, r.clamped);
    }
    return r;
}

Trajectory continuize(const std::array<int, kCoordTokens>& bins) {
    Trajectory t;
    for (int k = 0; k < kNumWaypoints; ++k) {
        t.waypoints[static_cast<size_t>(k)] = {xbin_center(bins[static_cast<size_t>(2 * k)]),
                                               ybin_center(bins[static_cast<size_t>(2 * k + 1)])};
    }
    return t;
}

int GrammarState::legal_tokens(std::vector<TokenRange>& out) const {
    int n = 0;
    auto add = [&](int lo, int hi) {
        out.push_back({lo, hi});
        n += hi - lo;
    };
    switch (phase_) {
        case Phase::Start:
            add(kThinkOpen, kThinkOpen + 1);
            break;
        case Phase::ThinkTop:
            add(kThinkClose, kThinkClose + 1);
            if (next_slot_ < kNumSlots) add(kSlotOpenBase + next_slot_, kSlotOpenBase + kNumSlots);
            break;
        case Phase::SlotBody:
            if (slot_ == kDecisionSlot) {
                add(kLateralBase, kLateralBase + 3);
            } else {
                add(kSlotEnd, kSlotEnd + 1);
            }
            if (fillers_ < kMaxFillersPerSlot) add(kFillerBase, kFillerBase + kNumFillers);
            break;
        case Phase::DecisionLon:
            add(kLongitudinalBase, kLongitudinalBase + 4);
            break;
        case Phase::SlotClose:
            add(kSlotEnd, kSlotEnd + 1);
            break;
        case Phase::AfterThink:
            add(kTrajOpen, kTrajOpen + 1);
            break;
        case Phase::Coords:
            if (coords_ % 2 == 0) add(kXBinBase, kXBinBase + kNumXBins);
            else add(kYBinBase, kYBinBase + kNumYBins);
            break;
        case Phase::AfterCoords:
            add(kTrajClose, kTrajClose + 1);
            break;
        case Phase::AfterTraj:
            add(kEos, kEos + 1);
            break;
        case Phase::Done:
            break;
    }
    return n;
}

bool GrammarState::is_legal(int token) const {
    std::vector<TokenRange> ranges;
    legal_tokens(ranges);
    for (const TokenRange& r : ranges)
        if (token >= r.lo && token < r.hi) return true;
    return false;
}

void GrammarState::step(int token) {
    assert(is_legal(token));
    switch (phase_) {
        case Phase::Start:
            phase_ = Phase::ThinkTop;
            break;
        case Phase::ThinkTop:
            if (token == kThinkClose) {
                phase_ = Phase::AfterThink;
            } else {
                slot_ = static_cast<uint8_t>(token - kSlotOpenBase);
                fillers_ = 0;
                phase_ = Phase::SlotBody;
            }
            break;
        case Phase::SlotBody:
            if (is_filler(token)) {
                ++fillers_;
            } else if (is_lateral(token)) {
                phase_ = Phase::DecisionLon;
            } else {  // SLOT_END
                next_slot_ = static_cast<uint8_t>(slot_ + 1);
                phase_ = Phase::ThinkTop;
            }
            break;
        case Phase::DecisionLon:
            phase_ = Phase::SlotClose;
            break;
        case Phase::SlotClose:
            next_slot_ = static_cast<uint8_t>(slot_ + 1);
            phase_ = Phase::ThinkTop;
            break;
        case Phase::AfterThink:
            phase_ = Phase::Coords;
            coords_ = 0;
            break;
        case Phase::Coords:
            if (++coords_ == kCoordTokens) phase_ = Phase::AfterCoords;
            break;
        case Phase::AfterCoords:
            phase_ = Phase::AfterTraj;
            break;
        case Phase::AfterTraj:
            phase_ = Phase::Done;
            break;
        case Phase::Done:
            break;
    }
}

bool grammar_valid(const std::vector<int>& token_ids) {
    GrammarState st;
    for (int t : token_ids) {
        if (t < 0 || t >= kVocabSize || !st.is_legal(t)) return false;
        st.step(t);
    }
    return st.done();
}

std::string_view to_string(ParseError e) {
    switch (e) {
        case ParseError::None: return "None";
        case ParseError::MissingSection: return "MissingSection";
        case ParseError::BadArity: return "BadArity";
        case ParseError::NoMeta: return "NoMeta";
    }
    return "None";
}

ParseOutcome parse(const std::vector<int>& token_ids) {
    auto fail = [](ParseError e) { return ParseOutcome{std::nullopt, e}; };

    const size_t n = token_ids.size();
    for (int t : token_ids)
        if (t < 0 || t >= kVocabSize) return fail(ParseError::MissingSection);

    // Locate the unique structural tokens and check their order.
    ptrdiff_t think_open = -1, think_close = -1, traj_open = -1, traj_close = -1, eos = -1;
    auto locate_unique = [&](int token, ptrdiff_t& at) {
        for (size_t i = 0; i < n; ++i) {
            if (token_ids[i] == token) {
                if (at >= 0) return false;  // duplicated
                at = static_cast<ptrdiff_t>(i);
            }
        }
        return at >= 0;
    };
    if (!locate_unique(kThinkOpen, think_open) || !locate_unique(kThinkClose, think_close) ||
        !locate_unique(kTrajOpen, traj_open) || !locate_unique(kTrajClose, traj_close) ||
        !locate_unique(kEos, eos)) {
        return fail(ParseError::MissingSection);
    }
    if (think_open != 0 || think_close > traj_open || traj_open != think_close + 1 ||
        traj_close < traj_open || eos != static_cast<ptrdiff_t>(n) - 1 || traj_close != eos - 1) {
        return fail(ParseError::MissingSection);
    }

    // Trajectory section: exactly 12 coordinate tokens, alternating X/Y.
    std::array<int, kCoordTokens> bins{};
    int coord_count = 0;
    for (ptrdiff_t i = traj_open + 1; i < traj_close; ++i) {
        const int t = token_ids[static_cast<size_t>(i)];
        if (!is_coord(t) || coord_count >= kCoordTokens) return fail(ParseError::BadArity);
        if (coord_count % 2 == 0) {
            if (!is_xbin(t)) return fail(ParseError::BadArity);
            bins[static_cast<size_t>(coord_count)] = t - kXBinBase;
        } else {
            if (!is_ybin(t)) return fail(ParseError::BadArity);
            bins[static_cast<size_t>(coord_count)] = t - kYBinBase;
        }
        ++coord_count;
    }
    if (coord_count != kCoordTokens) return fail(ParseError::BadArity);

    Response r;
    r.think_tokens.assign(token_ids.begin() + 1, token_ids.begin() + think_close);
    r.trajectory = continuize(bins);
    r.token_ids = token_ids;

    // Meta comes from the decision slot when it is present. A think section
    // without the slot is valid (direct-trajectory outputs) and carries no meta.
    const auto& think = r.think_tokens;
    auto slot_it = std::find(think.begin(), think.end(), kSlotOpenBase + kDecisionSlot);
    if (slot_it != think.end()) {
        auto slot_end = std::find(slot_it, think.end(), kSlotEnd);
        int lat_count = 0, lon_count = 0;
        MetaAction meta;
        for (auto it = slot_it; it != slot_end; ++it) {
            if (is_lateral(*it)) {
                meta.lateral = static_cast<Lateral>(*it - kLateralBase);
                ++lat_count;
            } else if (is_longitudinal(*it)) {
                meta.longitudinal = static_cast<Longitudinal>(*it - kLongitudinalBase);
                ++lon_count;
            }
        }
        if (lat_count != 1 || lon_count != 1) return fail(ParseError::NoMeta);
        r.meta = meta;
    }
    return ParseOutcome{std::move(r), ParseError::None};
}

Response make_response(std::vector<int> think_tokens, const Trajectory& trajectory) {
    Response r;
    r.think_tokens = std::move(think_tokens);
    r.trajectory = continuize(discretize(trajectory).bins);
    std::optional<Lateral> lat;
    std::optional<Longitudinal> lon;
    for (int t : r.think_tokens) {
        if (is_lateral(t)) lat = static_cast<Lateral>(t - kLateralBase);
        if (is_longitudinal(t)) lon = static_cast<Longitudinal>(t - kLongitudinalBase);
    }
    if (lat && lon) r.meta = MetaAction{*lat, *lon};
    r.token_ids = serialize(r);
    return r;
}

std::vector<int> serialize(const Response& r) {
    std::vector<int> out;
    out.reserve(r.think_tokens.size() + kCoordTokens + 5);
    out.push_back(kThinkOpen);
    out.insert(out.end(), r.think_tokens.begin(), r.think_tokens.end());
    out.push_back(kThinkClose);
    out.push_back(kTrajOpen);
    const DiscretizeResult d = discretize(r.trajectory);
    for (int k = 0; k < kCoordTokens; ++k) {
        const int bin = d.bins[static_cast<size_t>(k)];
        out.push_back(k % 2 == 0 ? kXBinBase + bin : kYBinBase + bin);
    }
    out.push_back(kTrajClose);
    out.push_back(kEos);
    return out;
}

std::string render_think_text(const std::vector<int>& think_tokens) {
    const Vocabulary& v = vocabulary();
    std::string out;
    for (int t : think_tokens) {
        if (is_slot_open(t)) {
            if (!out.empty()) out += "\n";
            out += v.text(t);
        } else if (is_filler(t)) {
            out += " " + v.text(t) + ".";
        } else if (is_lateral(t)) {
            out += " decision: " + v.text(t) + ",";
        } else if (is_longitudinal(t)) {
            out += " " + v.text(t) + ".";
        }
        // SLOT_END and stray tokens render as nothing.
    }
    return out;
}

std::string render_text(const Response& r) {
    std::string out = "<think>";
    out += render_think_text(r.think_tokens);
    out += "</think><trajectory>";
    char buf[48];
    for (int k = 0; k < kNumWaypoints; ++k) {
        const Vec2 w = r.trajectory.waypoints[static_cast<size_t>(k)];
        std::snprintf(buf, sizeof(buf), " (%.2f, %.2f)", w.x, w.y);
        out += buf;
    }
    out += "</trajectory>";
    return out;
}

std::optional<MetaAction> extract_meta(const std::string& think_text) {
    const std::string key = "decision:";
    const size_t at = think_text.find(key);
    if (at == std::string::npos) return std::nullopt;
    size_t i = at + key.size();
    auto next_word = [&]() {
        while (i < think_text.size() && (think_text[i] == ' ' || think_text[i] == ',')) ++i;
        size_t start = i;
        while (i < think_text.size() && std::isupper(static_cast<unsigned char>(think_text[i]))) ++i;
        return think_text.substr(start, i - start);
    };
    MetaAction meta;
    if (!lateral_from_string(next_word(), meta.lateral)) return std::nullopt;
    if (!longitudinal_from_string(next_word(), meta.longitudinal)) return std::nullopt;
    return meta;
}

}  // namespace grpoplan

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "insdel/rs_code.hpp"
#include "insdel/sequence.hpp"

namespace insdel {

// Channel simulation: encode then apply the adversarial script.
std::vector<FieldElement> transmit(const RSCodeSpec& code, const MessagePoly& f,
                                   const EditScript<FieldElement>& script);

enum class DecodeOutcome : std::uint8_t {
    kDecoded,
    kNoCandidate,
    kAmbiguous,  // >= 2 accepted messages: a counterexample to the criterion
    kTooShort,   // fewer than k received symbols, no alignment exists
};

struct DecodeResult {
    DecodeOutcome outcome = DecodeOutcome::kNoCandidate;
    std::optional<MessagePoly> message;
    int edit_dist = -1;  // distance of the decoded codeword from the received string
    std::vector<MessagePoly> ambiguous;  // the accepted messages when ambiguous
    std::uint64_t candidates_examined = 0;
};

struct DecodeOptions {
    int jobs = 0;  // 0 = runtime default, 1 = serial
    // Disable the k = 2 precomputed-inverse interpolation (testing knob).
    bool force_generic_interpolation = false;
};

// Brute-force interpolation decoder. Enumerates every order-preserving
// alignment of k received positions against k evaluation positions within a
// |shift| <= radius window, interpolates, re-encodes, and accepts candidates
// whose codeword lies within `radius` edit operations of the received
// string. The accepted message must be unique; two or more accepted messages
// mean the code does not have the claimed correction property and are
// surfaced as kAmbiguous rather than tie-broken.
DecodeResult decode(const RSCodeSpec& code, std::span<const FieldElement> received, int radius,
                    const DecodeOptions& opts = {});

enum class AdversaryMode : std::uint8_t { kExhaustive, kSampled };

struct AdversaryReport {
    bool pass = false;  // max_lcs <= 2k-2
    int max_lcs = 0;
    std::uint64_t pairs_scanned = 0;
    bool exhaustive = false;  // false when the mode was downgraded to sampling
    std::optional<std::pair<MessagePoly, MessagePoly>> witness;
};

// Worst-case LCS scan over codeword pairs. A pair with LCS >= 2k-1 witnesses
// that the code cannot correct n-2k+1 insdel errors. Exhaustive mode
// enumerates all pairs when their count fits the budget, otherwise the mode
// downgrades to seeded sampling and says so in the report.
AdversaryReport adversary_search(const RSCodeSpec& code, AdversaryMode mode, std::uint64_t budget,
                                 u64 seed);

}  // namespace insdel

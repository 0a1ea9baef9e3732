#pragma once

// Hook configurations on a permutation diagram.
//
// A hook rises from a southwest point (i, p_i) and runs right to a
// northeast point (j, p_j) with i < j and p_i < p_j. A valid hook
// configuration is an ordered tuple of hooks satisfying four criteria:
//   (a) southwest x-coordinates strictly increase along the tuple,
//   (b) every descent point is a southwest endpoint,
//   (c) every northeast point receives a hook from a descent point and a
//       hook from its immediate-left point,
//   (d) hooks with distinct northeast heights nest rather than cross.
// The subclass of interest has every northeast point receiving exactly
// two hooks; such a configuration is determined by the tuple b of
// northeast positions matched to the descents, and induces a coloring of
// the diagram whose surviving class sizes form a composition of n - k.

#include <optional>
#include <span>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

struct DiagramPoint {
    int pos = 0;   // x: position in the permutation, one-indexed
    int value = 0; // y: the entry at that position

    bool operator==(const DiagramPoint&) const = default;
    auto operator<=>(const DiagramPoint&) const = default;
};

struct Hook {
    DiagramPoint sw;
    DiagramPoint ne;

    bool operator==(const Hook&) const = default;
    auto operator<=>(const Hook&) const = default;
};

// A tuple of positive parts. When it represents a valid composition of a
// permutation with k descents, it has k + 1 parts summing to n - k.
struct Composition {
    std::vector<int> parts;

    int size() const { return static_cast<int>(parts.size()); }
    int sum() const;

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;
};

struct ValidHookConfiguration {
    std::vector<Hook> hooks;   // sorted by sw.pos, the tuple order
    std::vector<int> b;        // northeast positions matched to descents, size k
    std::vector<int> coloring; // color index in [0, hooks.size()] per position
    std::vector<int> theta;    // colors unused on northeast points, ascending
    Composition hat_q;         // surviving color-class sizes, k + 1 parts

    bool operator==(const ValidHookConfiguration&) const = default;
};

// The data attached to the canonical configuration: the minimal-choice
// northeast endpoints (as positions and as entry values), the image
// composition mu, the ascending-run index e_i of each canonical endpoint,
// and alpha_j = number of canonical endpoints in run j.
struct CanonicalData {
    std::vector<int> b_positions;
    std::vector<int> b_entries;
    Composition mu;
    std::vector<int> e;     // size k, values in [2, k+1]
    std::vector<int> alpha; // size k+1, alpha[0] is alpha_1 (always 0)
};

struct CanonicalResult {
    std::optional<ValidHookConfiguration> config;
    std::optional<CanonicalData> data;
};

// Checks criteria (a)-(d) for an arbitrary hook tuple. Hooks whose
// endpoints are not points of the diagram, or whose endpoints do not
// rise left-to-right, are malformed input and throw; a well-formed tuple
// that fails a criterion returns false.
bool is_valid_hook_configuration(const Permutation& p, std::span<const Hook> hooks);

// All configurations in which every northeast point receives exactly two
// hooks, enumerated by backtracking over b-tuples (rightmost descent
// first) and returned sorted by b. The identity-like case (no descents)
// yields exactly the empty configuration.
std::vector<ValidHookConfiguration> enumerate_vhc_02(const Permutation& p);

// The m+1-color assignment induced by a hook tuple: each point takes the
// color of the first hook top-part strictly above it (ties broken toward
// the hook with the rightmost southwest endpoint, the hook rooted at the
// point itself ignored), northeast points take the highest-index hook
// ending there, and unreached points take color 0.
std::vector<int> color_diagram(const Permutation& p, std::span<const Hook> hooks);

// Surviving color-class sizes of a configuration (the composition the
// bijection assigns to it).
Composition phi(const ValidHookConfiguration& h);

// The set of compositions arising from enumerate_vhc_02, sorted.
std::vector<Composition> valid_compositions(const Permutation& p);

// Inverts phi: rebuilds the b-tuple right to left by the uncovered-points
// counting rule and validates the result. Returns nullopt when some step
// is impossible or the rebuilt configuration is not valid; throws only
// for a malformed composition (wrong length or sum, nonpositive part).
std::optional<ValidHookConfiguration> reconstruct_vhc(const Permutation& p,
                                                      const Composition& q);

// Builds the configuration that picks each northeast endpoint minimally
// (smallest admissible entry), right to left over descents. Returns an
// empty optional pair exactly when the permutation has no configuration.
CanonicalResult canonical_vhc(const Permutation& p);

// The two prefix-sum conditions, relative to the canonical data, that
// empirically characterize membership in valid_compositions(p). This is
// a conjectured characterization: it is exhaustively cross-validated in
// tests at small n and not used on any counting path.
bool check_composition_conditions(const Permutation& p, const Composition& q);

} // namespace stacksort

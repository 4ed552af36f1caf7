#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamcube {

using Word = std::uint32_t;

// An infeasible or inconsistent construction input.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The seeded search gave up after its attempt cap.
struct SearchExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Transition sequence of a candidate cyclic Gray code on n_bits bits:
// 2^n_bits entries, each in [1, n_bits]. Entry k names the bit flipped
// between codewords k and k+1, counted from the least significant bit
// (index 1 flips the value-1 bit).
struct TransitionSequence {
    int n_bits = 0;
    std::vector<int> seq;
};

// Throws std::invalid_argument unless seq has length 2^n_bits with all
// entries in range.
void validate(const TransitionSequence& s);

// counts[i-1] = number of occurrences of i in s.seq.
std::vector<int> transition_counts(const TransitionSequence& s);

// True iff flipping bits along s from codeword 0 visits all 2^n codewords
// exactly once and returns to 0.
bool is_cyclic_gray(const TransitionSequence& s);

// The codewords visited by the walk, starting at 0; size 2^n.
std::vector<Word> codewords(const TransitionSequence& s);

enum class BalanceClass { TotallyBalanced, Balanced, Unbalanced };

const char* to_string(BalanceClass c);

// Totally balanced: all transition counts equal 2^n/n. Balanced: counts
// pairwise within 2 of each other.
BalanceClass balance_class(const TransitionSequence& s);

// Per-bit transition-count targets for a balanced n-bit code. Every target
// is a or a+2, with a = 2*floor(2^n / 2n); c targets equal a and d equal
// a+2, c + d = n and c*a + d*(a+2) = 2^n. For n in 3..7 the `targets`
// vector is the known explicit table; for n >= 8 it is c copies of a
// followed by d copies of a+2.
struct BalanceTargets {
    int n_bits = 0;
    int a = 0;
    int c = 0;
    int d = 0;
    std::vector<int> targets;
};

BalanceTargets balance_targets(int n); // throws std::domain_error if n < 3

// One doubling step's plan: how the transition counts of the (n-2)-bit code
// split between singleton positions (t) and run positions (z), plus the
// chosen singleton positions themselves (1-based into the previous
// sequence, always containing 1, 2 and 2^(n-2)). l = sum(t) is the count
// both new bit indices n-1 and n will end up with.
struct ExtensionPlan {
    std::vector<int> z;
    std::vector<int> t;
    int l = 0;
    std::vector<int> singleton_positions;
};

// Solves the split z[i] = (target[i] - 2*prev_tc[i]) / 2, t[i] = prev_tc[i]
// - z[i] after assigning the target multiset to bit indices (largest targets
// onto the most-flipped bits), then samples singleton positions realizing t
// with the seeded source. Deterministic given the seed. Throws
// ConstructionError when the split is provably infeasible and
// SearchExhaustedError when no position assignment is found within the
// attempt cap.
ExtensionPlan solve_plan(const TransitionSequence& s_prev,
                         const BalanceTargets& targets,
                         std::uint64_t seed);

// Robinson-Cohn doubling: keeps the plan's singletons, replaces the first
// inter-singleton run with n-1 and each later run u by u,x,reverse(u),y,u
// with (x,y) alternating between (n-1,n) and (n,n-1), then appends the
// one-element block (n) and the previous sequence wrapped in n-1 ... n with
// its leading pair exchanged. The result is the 2^n-long transition
// sequence of an n-bit cyclic Gray code.
TransitionSequence robinson_cohn_extend(const TransitionSequence& s_prev,
                                        const ExtensionPlan& plan);

// Builds a balanced cyclic Gray code on n bits by repeated doubling from
// the 1- or 2-bit base sequence. All transition counts land in {a, a+2}.
// Deterministic given the seed.
TransitionSequence build_balanced_code(int n, std::uint64_t seed);

// Serialization: comma-separated 1-based indices on one line.
std::string to_line(const TransitionSequence& s);
TransitionSequence sequence_from_line(const std::string& line);

} // namespace hamcube

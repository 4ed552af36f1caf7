#include "hamcube/graycode.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hamcube/random.hpp"

namespace hamcube {

void validate(const TransitionSequence& s) {
    if (s.n_bits < 1 || s.n_bits > 30)
        throw std::invalid_argument("TransitionSequence: n_bits out of range");
    if (s.seq.size() != (std::size_t{1} << s.n_bits))
        throw std::invalid_argument("TransitionSequence: length must be 2^n_bits");
    for (int k : s.seq)
        if (k < 1 || k > s.n_bits)
            throw std::invalid_argument("TransitionSequence: entry out of [1, n_bits]");
}

std::vector<int> transition_counts(const TransitionSequence& s) {
    validate(s);
    std::vector<int> counts(s.n_bits, 0);
    for (int k : s.seq) ++counts[k - 1];
    return counts;
}

bool is_cyclic_gray(const TransitionSequence& s) {
    validate(s);
    std::vector<bool> seen(s.seq.size(), false);
    Word x = 0;
    for (int k : s.seq) {
        if (seen[x]) return false;
        seen[x] = true;
        x ^= Word{1} << (k - 1);
    }
    return x == 0;
}

std::vector<Word> codewords(const TransitionSequence& s) {
    validate(s);
    std::vector<Word> words;
    words.reserve(s.seq.size());
    Word x = 0;
    for (int k : s.seq) {
        words.push_back(x);
        x ^= Word{1} << (k - 1);
    }
    return words;
}

const char* to_string(BalanceClass c) {
    switch (c) {
        case BalanceClass::TotallyBalanced: return "totally_balanced";
        case BalanceClass::Balanced: return "balanced";
        default: return "unbalanced";
    }
}

BalanceClass balance_class(const TransitionSequence& s) {
    const auto tc = transition_counts(s);
    const auto [lo, hi] = std::minmax_element(tc.begin(), tc.end());
    if (*hi == *lo) return BalanceClass::TotallyBalanced;
    if (*hi - *lo <= 2) return BalanceClass::Balanced;
    return BalanceClass::Unbalanced;
}

BalanceTargets balance_targets(int n) {
    if (n < 3 || n > 30) throw std::domain_error("balance_targets: n must be in [3, 30]");
    BalanceTargets bt;
    bt.n_bits = n;
    const std::int64_t total = std::int64_t{1} << n;
    bt.a = static_cast<int>(2 * (total / (2 * n)));
    bt.d = static_cast<int>((total - std::int64_t{n} * bt.a) / 2);
    bt.c = n - bt.d;
    switch (n) {
        case 3: bt.targets = {2, 2, 4}; break;
        case 4: bt.targets = {4, 4, 4, 4}; break;
        case 5: bt.targets = {6, 6, 8, 6, 6}; break;
        case 6: bt.targets = {10, 10, 10, 10, 12, 12}; break;
        case 7: bt.targets = {18, 18, 20, 18, 18, 18, 18}; break;
        default:
            bt.targets.assign(static_cast<std::size_t>(bt.c), bt.a);
            bt.targets.resize(static_cast<std::size_t>(n), bt.a + 2);
            break;
    }
    const auto na = std::count(bt.targets.begin(), bt.targets.end(), bt.a);
    const auto nd = std::count(bt.targets.begin(), bt.targets.end(), bt.a + 2);
    if (na != bt.c || nd != bt.d ||
        std::accumulate(bt.targets.begin(), bt.targets.end(), std::int64_t{0}) != total)
        throw std::logic_error("balance_targets: inconsistent table");
    return bt;
}

ExtensionPlan solve_plan(const TransitionSequence& s_prev,
                         const BalanceTargets& targets,
                         std::uint64_t seed) {
    validate(s_prev);
    if (targets.n_bits != s_prev.n_bits + 2)
        throw ConstructionError("solve_plan: targets must be for n_bits + 2");
    const int prev_n = s_prev.n_bits;
    const int len = static_cast<int>(s_prev.seq.size());
    const auto prev_tc = transition_counts(s_prev);

    // The two new bit indices n-1 and n both receive the common count l.
    const int l = targets.c >= 2 ? targets.a : targets.a + 2;

    std::vector<int> remaining = targets.targets;
    for (int rep = 0; rep < 2; ++rep) {
        const auto it = std::find(remaining.begin(), remaining.end(), l);
        if (it == remaining.end())
            throw ConstructionError("solve_plan: target multiset lacks two copies of the common count");
        remaining.erase(it);
    }

    // Pair targets with bit indices: largest target onto the most-flipped bit.
    std::vector<int> order(static_cast<std::size_t>(prev_n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return prev_tc[a] > prev_tc[b]; });
    std::sort(remaining.begin(), remaining.end(), std::greater<>());

    // Positions 1 and 2 are forced by the decomposition rule; the last
    // position is forced because the trailing run stays empty.
    std::vector<int> forced = {1, 2};
    if (len > 2) forced.push_back(len);

    XorShiftSource rng(seed);
    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<int> trial = remaining;
        if (attempt > 0) {
            for (std::size_t k = trial.size(); k > 1; --k)
                std::swap(trial[k - 1], trial[static_cast<std::size_t>(rng.uniform_index(static_cast<int>(k))) - 1]);
        }
        std::vector<int> assigned(static_cast<std::size_t>(prev_n));
        for (int k = 0; k < prev_n; ++k) assigned[static_cast<std::size_t>(order[k])] = trial[k];

        std::vector<int> z(static_cast<std::size_t>(prev_n)), t(static_cast<std::size_t>(prev_n));
        int bad = -1;
        for (int i = 0; i < prev_n; ++i) {
            const int diff = assigned[i] - 2 * prev_tc[i];
            if (diff < 0 || diff % 2 != 0 || diff / 2 > prev_tc[i]) {
                bad = i;
                break;
            }
            z[i] = diff / 2;
            t[i] = prev_tc[i] - z[i];
        }
        if (bad >= 0) {
            // The monotone pairing is optimal for the box constraints; if it
            // fails no reassignment can succeed.
            if (attempt == 0)
                throw ConstructionError("solve_plan: no feasible split for bit index " +
                                        std::to_string(bad + 1));
            continue;
        }
        if (std::accumulate(t.begin(), t.end(), 0) != l)
            throw ConstructionError("solve_plan: singleton counts do not sum to the common count");

        std::vector<int> t_rem = t;
        bool feasible = true;
        for (int p : forced) {
            if (--t_rem[static_cast<std::size_t>(s_prev.seq[p - 1] - 1)] < 0) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        std::vector<std::vector<int>> occurrences(static_cast<std::size_t>(prev_n));
        for (int p = 3; p < len; ++p)
            occurrences[static_cast<std::size_t>(s_prev.seq[p - 1] - 1)].push_back(p);

        std::vector<int> positions = forced;
        for (int e = 0; e < prev_n; ++e) {
            auto& pool = occurrences[static_cast<std::size_t>(e)];
            for (int k = 0; k < t_rem[e]; ++k) {
                const int j = k + rng.uniform_index(static_cast<int>(pool.size()) - k) - 1;
                std::swap(pool[k], pool[j]);
                positions.push_back(pool[k]);
            }
        }
        std::sort(positions.begin(), positions.end());
        return ExtensionPlan{std::move(z), std::move(t), l, std::move(positions)};
    }
    throw SearchExhaustedError("solve_plan: no singleton assignment found within the attempt cap");
}

TransitionSequence robinson_cohn_extend(const TransitionSequence& s_prev,
                                        const ExtensionPlan& plan) {
    validate(s_prev);
    const int n = s_prev.n_bits + 2;
    const int len = static_cast<int>(s_prev.seq.size());
    const auto& pos = plan.singleton_positions;
    const int l = plan.l;

    if (l < 2 || l % 2 != 0)
        throw ConstructionError("robinson_cohn_extend: l must be a positive even integer");
    if (static_cast<int>(pos.size()) != l)
        throw ConstructionError("robinson_cohn_extend: expected l singleton positions");
    if (pos.front() != 1 || pos[1] != 2 || pos.back() != len)
        throw ConstructionError("robinson_cohn_extend: positions 1, 2 and 2^(n-2) are required");
    for (std::size_t k = 1; k < pos.size(); ++k)
        if (pos[k] <= pos[k - 1] || pos[k] > len)
            throw ConstructionError("robinson_cohn_extend: positions must be strictly increasing and in range");
    if (static_cast<int>(plan.z.size()) != s_prev.n_bits ||
        static_cast<int>(plan.t.size()) != s_prev.n_bits)
        throw ConstructionError("robinson_cohn_extend: plan arity mismatch");

    const auto prev_tc = transition_counts(s_prev);
    std::vector<int> singleton_tc(static_cast<std::size_t>(s_prev.n_bits), 0);
    for (int p : pos) ++singleton_tc[static_cast<std::size_t>(s_prev.seq[p - 1] - 1)];
    for (int i = 0; i < s_prev.n_bits; ++i) {
        if (singleton_tc[i] != plan.t[i] || plan.z[i] + plan.t[i] != prev_tc[i])
            throw ConstructionError("robinson_cohn_extend: plan inconsistent with sequence at bit index " +
                                    std::to_string(i + 1));
    }

    std::vector<int> u_block;
    u_block.reserve(3 * static_cast<std::size_t>(len));
    for (int k = 0; k < l; ++k) {
        u_block.push_back(s_prev.seq[pos[k] - 1]);
        if (k + 1 == l) break;
        const auto run_begin = s_prev.seq.begin() + pos[k];
        const auto run_end = s_prev.seq.begin() + (pos[k + 1] - 1);
        if (k == 0) {
            if (run_begin != run_end)
                throw ConstructionError("robinson_cohn_extend: the first run must be empty");
            u_block.push_back(n - 1);
        } else {
            const int x = (k % 2 == 1) ? n - 1 : n;
            const int y = (k % 2 == 1) ? n : n - 1;
            u_block.insert(u_block.end(), run_begin, run_end);
            u_block.push_back(x);
            u_block.insert(u_block.end(), std::make_reverse_iterator(run_end),
                           std::make_reverse_iterator(run_begin));
            u_block.push_back(y);
            u_block.insert(u_block.end(), run_begin, run_end);
        }
    }

    std::vector<int> seq;
    seq.reserve(4 * static_cast<std::size_t>(len));
    seq.insert(seq.end(), u_block.rbegin(), u_block.rend());
    seq.push_back(n); // the middle block; the trailing run is empty
    seq.push_back(s_prev.seq[0]);
    seq.push_back(n - 1);
    seq.insert(seq.end(), s_prev.seq.begin() + 1, s_prev.seq.end());
    seq.push_back(n);

    TransitionSequence out{n, std::move(seq)};
    if (out.seq.size() != 4 * static_cast<std::size_t>(len))
        throw ConstructionError("robinson_cohn_extend: output length mismatch");
    return out;
}

TransitionSequence build_balanced_code(int n, std::uint64_t seed) {
    if (n < 3) throw std::domain_error("build_balanced_code: n must be at least 3");
    if (n > 20) throw std::domain_error("build_balanced_code: n above 20 is unsupported");
    TransitionSequence s =
        (n % 2 == 1) ? TransitionSequence{1, {1, 1}} : TransitionSequence{2, {1, 2, 1, 2}};
    for (int m = s.n_bits + 2; m <= n; m += 2) {
        const auto plan = solve_plan(s, balance_targets(m), derive_seed(seed, static_cast<std::uint64_t>(m)));
        s = robinson_cohn_extend(s, plan);
    }
    if (!is_cyclic_gray(s))
        throw ConstructionError("build_balanced_code: extension produced a non-cyclic sequence");
    return s;
}

std::string to_line(const TransitionSequence& s) {
    std::string line;
    line.reserve(s.seq.size() * 3);
    for (std::size_t k = 0; k < s.seq.size(); ++k) {
        if (k > 0) line += ',';
        line += std::to_string(s.seq[k]);
    }
    return line;
}

TransitionSequence sequence_from_line(const std::string& line) {
    std::string cleaned = line;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::vector<int> seq;
    for (int v; in >> v;) seq.push_back(v);
    if (seq.empty()) throw std::invalid_argument("sequence_from_line: no entries");
    int n = 0;
    while ((std::size_t{1} << n) < seq.size()) ++n;
    TransitionSequence s{n, std::move(seq)};
    validate(s);
    return s;
}

} // namespace hamcube

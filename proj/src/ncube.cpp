#include "hamcube/ncube.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace hamcube {

namespace {

void check_component(int n_bits, int i) {
    if (i < 1 || i > n_bits) throw std::out_of_range("component index out of [1, n_bits]");
}

void check_n_bits(int n_bits) {
    if (n_bits < 1 || n_bits > 24) throw std::invalid_argument("n_bits out of range");
}

} // namespace

Word component_mask(int n_bits, int component) {
    check_component(n_bits, component);
    return Word{1} << (n_bits - component);
}

int component_of_bit_index(int n_bits, int bit_index) {
    check_component(n_bits, bit_index);
    return n_bits - bit_index + 1;
}

std::string to_bit_string(int n_bits, Word x) {
    std::string out(static_cast<std::size_t>(n_bits), '0');
    for (int i = 0; i < n_bits; ++i)
        if (x & (Word{1} << (n_bits - 1 - i))) out[i] = '1';
    return out;
}

Word word_from_bit_string(const std::string& bits) {
    Word x = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit string must be 0/1");
        x = (x << 1) | static_cast<Word>(c - '0');
    }
    return x;
}

BooleanMap::BooleanMap(int n_bits, std::vector<Word> images)
    : n_bits_(n_bits), images_(std::move(images)) {
    check_n_bits(n_bits_);
    if (images_.size() != (std::size_t{1} << n_bits_))
        throw std::invalid_argument("BooleanMap: table must have 2^n_bits entries");
    for (Word y : images_)
        if (y >= images_.size()) throw std::invalid_argument("BooleanMap: image out of range");
}

BooleanMap::BooleanMap(int n_bits, std::vector<Word> images, std::vector<int> h)
    : BooleanMap(n_bits, std::move(images)) {
    if (h.size() != images_.size())
        throw std::invalid_argument("BooleanMap: h must have 2^n_bits entries");
    for (Word x = 0; x < images_.size(); ++x) {
        check_component(n_bits_, h[x]);
        const Word flipped = x ^ image(x);
        const Word keep = component_mask(n_bits_, h[x]);
        // component h(x) stays, every other component switches
        if (flipped != (~keep & (static_cast<Word>(images_.size()) - 1)))
            throw std::invalid_argument("BooleanMap: h inconsistent with table at vertex " +
                                        std::to_string(x));
    }
    h_ = std::move(h);
}

BooleanMap BooleanMap::with_derived_h(int n_bits, std::vector<Word> images) {
    BooleanMap plain(n_bits, std::move(images));
    std::vector<int> h(plain.n_states());
    for (Word x = 0; x < plain.n_states(); ++x) {
        const Word same = ~(x ^ plain.image(x)) & (static_cast<Word>(plain.n_states()) - 1);
        if (std::popcount(same) != 1)
            throw std::invalid_argument(
                "BooleanMap: vertex " + std::to_string(x) +
                " does not have exactly one unswitchable component");
        h[x] = component_of_bit_index(n_bits, std::countr_zero(same) + 1);
    }
    return BooleanMap(n_bits, plain.images(), std::move(h));
}

BooleanMap BooleanMap::negation(int n_bits) {
    check_n_bits(n_bits);
    const Word size = Word{1} << n_bits;
    std::vector<Word> images(size);
    for (Word x = 0; x < size; ++x) images[x] = ~x & (size - 1);
    return BooleanMap(n_bits, std::move(images));
}

int BooleanMap::h(Word x) const {
    if (!has_h()) throw std::logic_error("BooleanMap: h is absent");
    return h_[x];
}

std::string BooleanMap::table_line() const {
    std::string line;
    line.reserve(images_.size() * 4);
    for (std::size_t k = 0; k < images_.size(); ++k) {
        if (k > 0) line += ' ';
        line += std::to_string(images_[k]);
    }
    return line;
}

BooleanMap BooleanMap::from_table_line(const std::string& line) {
    std::string cleaned = line;
    for (char& c : cleaned)
        if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(cleaned);
    std::vector<Word> images;
    for (Word v; in >> v;) images.push_back(v);
    if (images.empty()) throw std::invalid_argument("BooleanMap: no entries in table line");
    int n = 0;
    while ((std::size_t{1} << n) < images.size()) ++n;
    return BooleanMap(n, std::move(images));
}

Word apply_component(const BooleanMap& f, Word x, int i) {
    const Word mask = component_mask(f.n_bits(), i);
    return (x & ~mask) | (f.image(x) & mask);
}

Word compose(const BooleanMap& f, Word x, std::span<const int> strategy) {
    for (int i : strategy) x = apply_component(f, x, i);
    return x;
}

BooleanMap function_from_cycle(const TransitionSequence& s) {
    if (!is_cyclic_gray(s))
        throw std::invalid_argument("function_from_cycle: not a cyclic Gray code");
    const int n = s.n_bits;
    const Word size = Word{1} << n;
    std::vector<Word> images(size);
    std::vector<int> h(size);
    Word x = 0;
    for (int k : s.seq) {
        const int removed = component_of_bit_index(n, k);
        const Word keep = component_mask(n, removed);
        h[x] = removed;
        images[x] = (~x & (size - 1)) ^ keep; // flip everything except the removed direction
        x ^= Word{1} << (k - 1);
    }
    return BooleanMap(n, std::move(images), std::move(h));
}

Word hbar(const BooleanMap& f, Word x) {
    return x ^ component_mask(f.n_bits(), f.h(x));
}

SquareFreeReport square_free_report(const BooleanMap& f) {
    SquareFreeReport report;
    report.square_free = true;
    std::vector<int> hits(f.n_states(), 0);
    for (Word x = 0; x < f.n_states(); ++x) {
        const Word y = hbar(f, x);
        ++hits[y];
        if (hbar(f, y) == x) report.square_free = false;
    }
    report.hbar_bijective = std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; });
    return report;
}

bool is_square_free(const BooleanMap& f) { return square_free_report(f).square_free; }

BitMatrix::BitMatrix(std::size_t n)
    : n_(n), words_per_row_((n + 63) / 64), bits_(n * words_per_row_, 0) {}

void BitMatrix::set(std::size_t row, std::size_t col) {
    bits_[row * words_per_row_ + col / 64] |= std::uint64_t{1} << (col % 64);
}

bool BitMatrix::get(std::size_t row, std::size_t col) const {
    return (bits_[row * words_per_row_ + col / 64] >> (col % 64)) & 1;
}

bool BitMatrix::all() const {
    const std::uint64_t tail =
        (n_ % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n_ % 64)) - 1);
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t w = 0; w < words_per_row_; ++w) {
            const std::uint64_t expect = (w + 1 == words_per_row_) ? tail : ~std::uint64_t{0};
            if (bits_[r * words_per_row_ + w] != expect) return false;
        }
    }
    return true;
}

BitMatrix& BitMatrix::operator|=(const BitMatrix& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("BitMatrix: size mismatch");
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= rhs.bits_[k];
    return *this;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("BitMatrix: size mismatch");
    BitMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        std::uint64_t* dst = &out.bits_[r * words_per_row_];
        for (std::size_t w = 0; w < words_per_row_; ++w) {
            std::uint64_t block = bits_[r * words_per_row_ + w];
            while (block) {
                const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(block));
                block &= block - 1;
                const std::uint64_t* src = &rhs.bits_[k * words_per_row_];
                for (std::size_t j = 0; j < words_per_row_; ++j) dst[j] |= src[j];
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix out(m.n_);
    for (std::size_t r = 0; r < m.n_; ++r)
        for (std::size_t w = 0; w < m.words_per_row_; ++w) {
            std::uint64_t block = m.bits_[r * m.words_per_row_ + w];
            while (block) {
                const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(block));
                block &= block - 1;
                out.set(c, r);
            }
        }
    return out;
}

std::vector<bool> reachable_from(const BitMatrix& m, std::size_t start) {
    std::vector<bool> seen(m.n_, false);
    std::vector<std::size_t> stack = {start};
    seen[start] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < m.words_per_row_; ++w) {
            std::uint64_t block = m.bits_[v * m.words_per_row_ + w];
            while (block) {
                const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(block));
                block &= block - 1;
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
    }
    return seen;
}

IterationGraph gamma(const BooleanMap& f) { return gamma_p(f, {1}); }

IterationGraph gamma_p(const BooleanMap& f, std::vector<int> p_set) {
    if (p_set.empty()) throw std::invalid_argument("gamma_p: empty iteration-count set");
    std::sort(p_set.begin(), p_set.end());
    p_set.erase(std::unique(p_set.begin(), p_set.end()), p_set.end());
    if (p_set.front() < 1) throw std::invalid_argument("gamma_p: counts must be positive");

    const std::size_t size = f.n_states();
    BitMatrix step(size);
    for (Word x = 0; x < size; ++x)
        for (int i = 1; i <= f.n_bits(); ++i) step.set(x, apply_component(f, x, i));

    IterationGraph g{f.n_bits(), p_set, BitMatrix(size)};
    BitMatrix power = BitMatrix::identity(size);
    int reached = 0;
    for (int p : p_set) {
        for (; reached < p; ++reached) power = power * step;
        g.adjacency |= power;
    }
    return g;
}

bool is_strongly_connected(const IterationGraph& g) {
    const auto fwd = reachable_from(g.adjacency, 0);
    if (!std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; })) return false;
    const auto bwd = reachable_from(transpose(g.adjacency), 0);
    return std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

std::optional<int> completeness_b(const BooleanMap& f, int b_max) {
    if (b_max < 0) b_max = 4 * f.n_bits() * f.n_bits();
    const std::size_t size = f.n_states();
    BitMatrix step(size);
    for (Word x = 0; x < size; ++x)
        for (int i = 1; i <= f.n_bits(); ++i) step.set(x, apply_component(f, x, i));

    BitMatrix power = step;
    BitMatrix prev = BitMatrix::identity(size);
    BitMatrix prev2(size);
    for (int b = 1; b <= b_max; ++b) {
        if (power.all()) return b;
        if (b >= 3 && power == prev2) return std::nullopt; // reachability cycles without filling
        prev2 = std::move(prev);
        prev = power;
        power = power * step;
    }
    return std::nullopt;
}

} // namespace hamcube

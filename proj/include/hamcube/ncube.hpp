#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamcube/graycode.hpp"

namespace hamcube {

// Configurations are n-bit words written x_1..x_n left to right, so
// component i carries the value 2^(n-i). Transition-sequence entries count
// bits from the least significant end instead; these two helpers are the
// single place the conventions meet.
Word component_mask(int n_bits, int component);
int component_of_bit_index(int n_bits, int bit_index);

std::string to_bit_string(int n_bits, Word x);
Word word_from_bit_string(const std::string& bits);

// Truth table of f: {0,1}^n -> {0,1}^n, with an optional per-vertex record h
// of the one component that cannot be switched (the direction of the removed
// outgoing edge). When h is present, component h(x) of f(x) equals that of x
// and every other component differs.
class BooleanMap {
public:
    BooleanMap(int n_bits, std::vector<Word> images);
    BooleanMap(int n_bits, std::vector<Word> images, std::vector<int> h);

    // Recovers h from the table; requires exactly one unswitchable component
    // per vertex.
    static BooleanMap with_derived_h(int n_bits, std::vector<Word> images);

    static BooleanMap negation(int n_bits);

    int n_bits() const { return n_bits_; }
    std::size_t n_states() const { return images_.size(); }
    Word image(Word x) const { return images_[x]; }
    const std::vector<Word>& images() const { return images_; }

    bool has_h() const { return !h_.empty(); }
    int h(Word x) const;
    const std::vector<int>& h_table() const { return h_; }

    // One line of 2^n decimal images in input order 0..2^n-1.
    std::string table_line() const;
    static BooleanMap from_table_line(const std::string& line);

private:
    int n_bits_;
    std::vector<Word> images_;
    std::vector<int> h_;
};

// x with component i replaced by f_i(x).
Word apply_component(const BooleanMap& f, Word x, int i);

// Left-to-right fold of apply_component over the strategy prefix.
Word compose(const BooleanMap& f, Word x, std::span<const int> strategy);

// The map obtained by removing the directed Hamiltonian cycle that s walks:
// each vertex keeps its own value in the removed direction (a self-loop) and
// flips every other component. h records the removed direction per vertex.
BooleanMap function_from_cycle(const TransitionSequence& s);

// x with component h(x) flipped, i.e. the endpoint of the removed edge.
Word hbar(const BooleanMap& f, Word x);

struct SquareFreeReport {
    bool square_free = false;
    bool hbar_bijective = false;
};

// square_free: hbar(hbar(x)) != x for every x.
SquareFreeReport square_free_report(const BooleanMap& f);
bool is_square_free(const BooleanMap& f);

// Square bit matrix with row-major 64-bit blocks; used for graph adjacency
// and boolean reachability powers.
class BitMatrix {
public:
    explicit BitMatrix(std::size_t n);

    std::size_t size() const { return n_; }
    void set(std::size_t row, std::size_t col);
    bool get(std::size_t row, std::size_t col) const;
    bool all() const;

    BitMatrix operator*(const BitMatrix& rhs) const; // boolean product
    BitMatrix& operator|=(const BitMatrix& rhs);
    bool operator==(const BitMatrix& rhs) const = default;

    static BitMatrix identity(std::size_t n);

private:
    std::size_t n_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;

    friend BitMatrix transpose(const BitMatrix&);
    friend std::vector<bool> reachable_from(const BitMatrix&, std::size_t);
};

BitMatrix transpose(const BitMatrix& m);
std::vector<bool> reachable_from(const BitMatrix& m, std::size_t start);

// Iteration graph on the 2^n configurations. For p_set = {1} the arcs are
// x -> F_f(x, i) over all components i; for general p_set an arc x -> y
// exists when some strategy tuple of length p in p_set maps x to y.
struct IterationGraph {
    int n_bits = 0;
    std::vector<int> p_set;
    BitMatrix adjacency;
};

IterationGraph gamma(const BooleanMap& f);
IterationGraph gamma_p(const BooleanMap& f, std::vector<int> p_set);

// One strongly connected component covering every vertex.
bool is_strongly_connected(const IterationGraph& g);

// Smallest b <= b_max such that every pair of vertices is joined by a walk
// of length exactly b in the iteration graph; nullopt when there is none.
// b_max defaults to 4*n^2.
std::optional<int> completeness_b(const BooleanMap& f, int b_max = -1);

} // namespace hamcube

#pragma once

#include "thl/cartan.hpp"

#include <string>
#include <vector>

namespace thl {

// Letters are node ids; the word s_{i1} s_{i2} ... s_{ik} acts right to left.
struct WeylWord {
    std::vector<int> letters;

    int length() const { return int(letters.size()); }
    int parity() const { return letters.size() % 2 ? -1 : 1; }
    std::string str() const;  // "w_8w_5w_4", "1" for the identity
    static WeylWord parse(const std::string& s);
    bool operator==(const WeylWord& o) const { return letters == o.letters; }
};

struct ShiftedImage {
    WeylWord word;
    std::vector<long long> image;        // W(Lambda) labels in node order
    long long degree = 0;
    std::vector<long long> root_shift;   // Lambda - W(Lambda) in simple-root coordinates
};

// Labels in node order; every letter must be a bosonic node.
std::vector<long long> reflect(const CartanSpec& spec, int node, const std::vector<long long>& labels);
std::vector<long long> act(const CartanSpec& spec, const WeylWord& w, const std::vector<long long>& labels);
std::vector<long long> shifted_action(const CartanSpec& spec, const WeylWord& w, const std::vector<long long>& lambda);
// Root-coordinate action of w on a root-basis vector.
std::vector<long long> act_on_roots(const CartanSpec& spec, const WeylWord& w, const std::vector<long long>& beta);

// Coefficient of the grading root in Lambda - W(Lambda), tracked along the word
// (works for singular matrices).  offset is added to the result.
long long degree_of_word(const CartanSpec& spec, const WeylWord& w, const std::vector<long long>& lambda,
                         int grading_node, long long offset = 0);
// Same from the two label vectors; needs a non-singular matrix.
long long degree(const CartanSpec& spec, const std::vector<long long>& lambda, const std::vector<long long>& image,
                 int grading_node, long long offset = 0);

// Letter preference for canonical words: farthest from the grading node
// first, ties by node id.  Each element is emitted with its least word in
// this order among words whose right-truncations stay gl-dominant.
std::vector<int> letter_order(const CartanSpec& spec, int grading_node);

std::vector<ShiftedImage> enumerate_gl_dominant(const CartanSpec& spec, const std::vector<long long>& lambda,
                                                int grading_node, long long max_degree);

}  // namespace thl

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permutovol/errors.hpp"

namespace permutovol {

enum class Step : unsigned char { north, east };

// Balanced north/east step sequence from (0,0) to (n,n) staying weakly
// above the diagonal: every prefix has #N >= #E.
class DyckPath {
public:
    DyckPath() = default;  // the empty 0-path
    explicit DyckPath(std::vector<Step> steps);
    static DyckPath parse(std::string_view text);

    int size() const { return static_cast<int>(steps_.size()) / 2; }
    std::span<const Step> steps() const { return steps_; }
    std::string str() const;

    friend bool operator==(const DyckPath& a, const DyckPath& b) {
        return a.steps_ == b.steps_;
    }
    friend bool operator<(const DyckPath& a, const DyckPath& b) {
        return a.steps_ < b.steps_;
    }

private:
    std::vector<Step> steps_;
};

// Label (d, i, u) of a north step: u is the x-coordinate of its initial
// point, and d, i are the extremes of the set K of diagonal returns of the
// translated path suffix.
struct NorthStepLabel {
    int d;
    int i;
    int u;
    friend bool operator==(const NorthStepLabel&, const NorthStepLabel&) = default;
};

inline constexpr int kMaxEnumeration = 14;

std::uint64_t catalan(int n);

// Streams every n-Dyck path exactly once, in lexicographic order with N < E.
// Throws BoundExceeded past kMaxEnumeration.
void for_each_path(int n, const std::function<void(const DyckPath&)>& fn);
std::vector<DyckPath> enumerate_paths(int n);

// One label per north step, in path order.
std::vector<NorthStepLabel> north_step_labels(const DyckPath& path);

// First-return decomposition: D = N . bottom . E . top, where the first
// diagonal touch after the start is at (k,k).
struct Decomposition {
    int k;
    DyckPath bottom;  // (k-1)-path
    DyckPath top;     // (n-k)-path
};
Decomposition decompose(const DyckPath& path);  // throws EmptyPath on the 0-path
DyckPath recompose(const Decomposition& parts);

// Rooted planar binary tree; either a leaf or an internal node with two
// children.
class BinaryTree {
public:
    BinaryTree() = default;  // leaf
    static BinaryTree node(BinaryTree left, BinaryTree right);

    bool is_leaf() const { return left_ == nullptr; }
    const BinaryTree& left() const { return *left_; }
    const BinaryTree& right() const { return *right_; }
    int leaf_count() const;

    friend bool operator==(const BinaryTree& a, const BinaryTree& b);

private:
    std::shared_ptr<const BinaryTree> left_;
    std::shared_ptr<const BinaryTree> right_;
};

// The first-return bijection with binary trees: an n-path maps to a tree
// with n+1 leaves.
BinaryTree to_binary_tree(const DyckPath& path);
DyckPath from_binary_tree(const BinaryTree& tree);

}  // namespace permutovol

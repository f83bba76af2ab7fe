#include "permutovol/dyck.hpp"

#include <algorithm>

namespace permutovol {

namespace {

void validate(const std::vector<Step>& steps) {
    int height = 0;
    for (Step s : steps) {
        height += s == Step::north ? 1 : -1;
        if (height < 0) throw InvalidPath("prefix dips below the diagonal");
    }
    if (height != 0) throw InvalidPath("unbalanced step counts");
}

}  // namespace

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    validate(steps_);
}

DyckPath DyckPath::parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'N' || c == 'n') {
            steps.push_back(Step::north);
        } else if (c == 'E' || c == 'e') {
            steps.push_back(Step::east);
        } else {
            throw InvalidPath(std::string("unexpected step character '") + c + "'");
        }
    }
    return DyckPath(std::move(steps));
}

std::string DyckPath::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out += s == Step::north ? 'N' : 'E';
    return out;
}

std::uint64_t catalan(int n) {
    if (n < 0) throw InvalidArgument("catalan of negative index");
    // C_0..C_33 fit in 64 bits; enumeration never goes near that.
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k) {
        c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
    }
    return c;
}

namespace {

void extend(std::vector<Step>& steps, int norths, int easts, int n,
            const std::function<void(const DyckPath&)>& fn) {
    if (norths == n && easts == n) {
        fn(DyckPath(steps));
        return;
    }
    if (norths < n) {
        steps.push_back(Step::north);
        extend(steps, norths + 1, easts, n, fn);
        steps.pop_back();
    }
    if (easts < norths) {
        steps.push_back(Step::east);
        extend(steps, norths, easts + 1, n, fn);
        steps.pop_back();
    }
}

}  // namespace

void for_each_path(int n, const std::function<void(const DyckPath&)>& fn) {
    if (n < 0) throw InvalidArgument("negative path size");
    if (n > kMaxEnumeration) {
        throw BoundExceeded("enumeration limited to n <= " + std::to_string(kMaxEnumeration));
    }
    std::vector<Step> steps;
    steps.reserve(2 * static_cast<std::size_t>(n));
    extend(steps, 0, 0, n, fn);
}

std::vector<DyckPath> enumerate_paths(int n) {
    std::vector<DyckPath> out;
    out.reserve(catalan(n));
    for_each_path(n, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

std::vector<NorthStepLabel> north_step_labels(const DyckPath& path) {
    auto steps = path.steps();
    int n = path.size();
    std::vector<NorthStepLabel> labels;
    labels.reserve(static_cast<std::size_t>(n));
    int easts_before = 0;
    for (std::size_t t = 0; t < steps.size(); ++t) {
        if (steps[t] == Step::east) {
            ++easts_before;
            continue;
        }
        // Walk the suffix translated to the origin. K collects the k >= 1
        // where the suffix passes through (k,k) with its own prefix
        // dominance intact; a dominance violation ends the collection.
        int dx = 0;
        int dy = 0;
        int min_k = 0;
        int max_k = 0;
        for (std::size_t s = t; s < steps.size(); ++s) {
            if (steps[s] == Step::north) {
                ++dy;
            } else {
                ++dx;
            }
            if (dy < dx) break;
            if (dy == dx) {
                if (min_k == 0) min_k = dx;
                max_k = dx;
            }
        }
        // K is never empty for a valid path: the suffix of a north step must
        // cross its own diagonal on the way to (n,n).
        labels.push_back({max_k, min_k, easts_before});
    }
    return labels;
}

Decomposition decompose(const DyckPath& path) {
    if (path.size() == 0) throw EmptyPath("cannot decompose the empty path");
    auto steps = path.steps();
    int height = 0;
    std::size_t touch = 0;
    for (std::size_t t = 0; t < steps.size(); ++t) {
        height += steps[t] == Step::north ? 1 : -1;
        if (height == 0) {
            touch = t + 1;  // 2k steps consumed
            break;
        }
    }
    int k = static_cast<int>(touch) / 2;
    std::vector<Step> bottom(steps.begin() + 1, steps.begin() + static_cast<long>(touch) - 1);
    std::vector<Step> top(steps.begin() + static_cast<long>(touch), steps.end());
    return {k, DyckPath(std::move(bottom)), DyckPath(std::move(top))};
}

DyckPath recompose(const Decomposition& parts) {
    std::vector<Step> steps;
    steps.reserve(2 + parts.bottom.steps().size() + parts.top.steps().size());
    steps.push_back(Step::north);
    steps.insert(steps.end(), parts.bottom.steps().begin(), parts.bottom.steps().end());
    steps.push_back(Step::east);
    steps.insert(steps.end(), parts.top.steps().begin(), parts.top.steps().end());
    return DyckPath(std::move(steps));
}

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
    BinaryTree t;
    t.left_ = std::make_shared<const BinaryTree>(std::move(left));
    t.right_ = std::make_shared<const BinaryTree>(std::move(right));
    return t;
}

int BinaryTree::leaf_count() const {
    if (is_leaf()) return 1;
    return left_->leaf_count() + right_->leaf_count();
}

bool operator==(const BinaryTree& a, const BinaryTree& b) {
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return true;
    return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

BinaryTree to_binary_tree(const DyckPath& path) {
    if (path.size() == 0) return BinaryTree();
    Decomposition parts = decompose(path);
    return BinaryTree::node(to_binary_tree(parts.bottom), to_binary_tree(parts.top));
}

DyckPath from_binary_tree(const BinaryTree& tree) {
    if (tree.is_leaf()) return DyckPath();
    DyckPath bottom = from_binary_tree(tree.left());
    DyckPath top = from_binary_tree(tree.right());
    return recompose({bottom.size() + 1, std::move(bottom), std::move(top)});
}

}  // namespace permutovol

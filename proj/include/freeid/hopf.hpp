#pragma once

#include "freeid/rational.hpp"
#include "freeid/trees_dyck.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace freeid {

// Binary tree with integer labels. s ∨_k t has left subtree s, right t.
class LabeledTree {
public:
    LabeledTree() = default;
    static LabeledTree vertex(int label) { return graft({}, label, {}); }
    // Raises DomainError if labels collide.
    static LabeledTree graft(const LabeledTree& left, int label, const LabeledTree& right);

    bool empty() const noexcept { return !root_; }
    int size() const noexcept;
    int label() const;
    const LabeledTree& left() const;
    const LabeledTree& right() const;

    BinaryTree shape() const;
    std::vector<int> labels() const;  // inorder
    bool is_anti_increasing() const;

    // Relabel by rank to 1..n.
    LabeledTree canonical() const;
    // Apply an order-preserving map to all labels.
    LabeledTree relabel(const std::function<int(int)>& f) const;

    // [label, left, right] with [] for the empty tree.
    std::string to_json() const;
    static LabeledTree parse_json(std::string_view text);

    const std::string& key() const;
    friend bool operator==(const LabeledTree& a, const LabeledTree& b) { return a.key() == b.key(); }
    friend bool operator<(const LabeledTree& a, const LabeledTree& b);

private:
    struct Node;
    std::shared_ptr<const Node> root_;
};

struct LabeledTree::Node {
    int label;
    LabeledTree left, right;
    int size;
    std::string key;
};

inline int LabeledTree::size() const noexcept { return root_ ? root_->size : 0; }

// Canonical anti-increasingly ordered tree (labels exactly 1..n).
class OrderedTree {
public:
    OrderedTree() = default;
    // Canonicalizes; DomainError if t is not anti-increasing.
    explicit OrderedTree(const LabeledTree& t);
    static OrderedTree parse_json(std::string_view text) { return OrderedTree(LabeledTree::parse_json(text)); }

    const LabeledTree& tree() const noexcept { return t_; }
    int size() const noexcept { return t_.size(); }
    bool empty() const noexcept { return t_.empty(); }
    std::string to_json() const { return t_.to_json(); }

    friend bool operator==(const OrderedTree& a, const OrderedTree& b) { return a.t_ == b.t_; }
    friend bool operator<(const OrderedTree& a, const OrderedTree& b) { return a.t_ < b.t_; }

private:
    LabeledTree t_;
};

using TreeCombination = std::map<OrderedTree, Rational>;
using TensorCombination = std::map<std::pair<OrderedTree, OrderedTree>, Rational>;
using LabeledCombination = std::map<LabeledTree, Rational>;
using LabeledTensor = std::map<std::pair<LabeledTree, LabeledTree>, Rational>;

inline constexpr int kMaxOrderedTrees = 6;

std::vector<OrderedTree> enumerate_ordered_trees(int n);
BigInt hilbert_dimension(int n);

// Labeled product; labels are kept as given.
LabeledCombination lr_product_labeled(const LabeledTree& s, const LabeledTree& t);
// Labeled coproduct; labels are kept.
LabeledTensor lr_coproduct_labeled(const LabeledTree& t);

// Ordered product: s labels are placed below the t labels, terms canonicalized.
TreeCombination lr_product(const OrderedTree& s, const OrderedTree& t);
TreeCombination lr_product(const TreeCombination& a, const TreeCombination& b);
TensorCombination lr_coproduct(const OrderedTree& t);

TreeCombination antipode(const OrderedTree& t);

struct LawCheck {
    bool ok = true;
    std::string counterexample;  // tree (as JSON) on which the law failed
};
LawCheck coassociativity_check(int n);
LawCheck counit_check(int n);
LawCheck antipode_check(int n);
LawCheck associativity_check(int total);

// s / t: s grafted onto the leftmost leaf of t, labels kept.
LabeledTree bf_over_labeled(const LabeledTree& s, const LabeledTree& t);
// Ordered version: labels of t shifted above those of s.
OrderedTree bf_over(const OrderedTree& s, const OrderedTree& t);
LabeledTensor bf_coproduct_labeled(const LabeledTree& t);
TensorCombination bf_coproduct(const OrderedTree& t);
LawCheck bf_coassociativity_check(int n);

// Canonicalize every factor.
TreeCombination canonicalize(const LabeledCombination& c);
TensorCombination canonicalize(const LabeledTensor& c);

std::string to_json(const TreeCombination& c);
std::string to_json(const TensorCombination& c);

}  // namespace freeid

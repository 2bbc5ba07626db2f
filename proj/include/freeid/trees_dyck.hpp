#pragma once

#include "freeid/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace freeid {

// Planar rooted binary tree, immutable and structurally shared.
class BinaryTree {
public:
    BinaryTree() = default;  // empty tree
    static BinaryTree node(BinaryTree left, BinaryTree right);
    static BinaryTree vertex() { return node({}, {}); }
    static BinaryTree left_chain(int n);
    static BinaryTree right_chain(int n);

    bool empty() const noexcept { return !root_; }
    int size() const noexcept;
    const BinaryTree& left() const;
    const BinaryTree& right() const;

    // "" for the empty tree, "(" + left + ")" + right otherwise.
    std::string to_string() const;
    static BinaryTree parse(std::string_view text);

    friend bool operator==(const BinaryTree& a, const BinaryTree& b);
    friend bool operator<(const BinaryTree& a, const BinaryTree& b) { return a.to_string() < b.to_string(); }

private:
    struct Node;
    std::shared_ptr<const Node> root_;
};

struct BinaryTree::Node {
    BinaryTree left, right;
    int size;
};

inline int BinaryTree::size() const noexcept { return root_ ? root_->size : 0; }

inline constexpr int kMaxTreeList = 12;
inline constexpr int kMaxLabelingBruteForce = 9;
inline constexpr int kMaxDycks = 8;

// All trees with n vertices; left subtree size ascending, recursively.
std::vector<BinaryTree> enumerate_trees(int n);

BigInt tree_factorial(const BinaryTree& t);
BigInt s_via_trees(int n);
BigInt count_anti_increasing_labelings(const BinaryTree& t);

// Words over {U, D}.
bool is_dyck_word(std::string_view w);
void require_dyck_word(std::string_view w);

// U sorts before D.
struct DyckLess {
    bool operator()(const std::string& a, const std::string& b) const;
};

using DyckCombination = std::map<std::string, Rational, DyckLess>;

std::vector<std::string> enumerate_dyck_words(int n);

std::string tree_to_dyck(const BinaryTree& t);
BinaryTree dyck_to_tree(std::string_view w);

// (u U v D)! = n * u! * v! with D the last letter and U its matching opener.
BigInt dyck_factorial(std::string_view w);

// a ^ w = a with w inserted before its final letter; 0 ^ w = 0.
DyckCombination owedge(const DyckCombination& a, std::string_view w);
DyckCombination nu_operator(std::string_view w);
DyckCombination mu_operator(std::string_view w);

// Row w holds the coefficients of mu(w); states in DyckLess order.
struct DyckMatrix {
    std::vector<std::string> states;
    std::vector<std::vector<Rational>> rows;
};
DyckMatrix nt_adjacency(int n);

std::string to_json(const DyckCombination& c);

}  // namespace freeid

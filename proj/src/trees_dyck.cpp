#include "freeid/trees_dyck.hpp"

#include "freeid/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace freeid {

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
    BinaryTree t;
    int size = left.size() + right.size() + 1;
    t.root_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), size});
    return t;
}

BinaryTree BinaryTree::left_chain(int n) {
    BinaryTree t;
    for (int i = 0; i < n; ++i) t = node(t, {});
    return t;
}

BinaryTree BinaryTree::right_chain(int n) {
    BinaryTree t;
    for (int i = 0; i < n; ++i) t = node({}, t);
    return t;
}

const BinaryTree& BinaryTree::left() const {
    if (!root_) throw DomainError("empty tree has no left subtree");
    return root_->left;
}

const BinaryTree& BinaryTree::right() const {
    if (!root_) throw DomainError("empty tree has no right subtree");
    return root_->right;
}

std::string BinaryTree::to_string() const {
    if (!root_) return "";
    return "(" + root_->left.to_string() + ")" + root_->right.to_string();
}

bool operator==(const BinaryTree& a, const BinaryTree& b) {
    if (a.root_ == b.root_) return true;
    if (a.size() != b.size() || !a.root_ || !b.root_) return false;
    return a.left() == b.left() && a.right() == b.right();
}

BinaryTree BinaryTree::parse(std::string_view text) {
    std::size_t pos = 0;
    std::function<BinaryTree()> rec = [&]() -> BinaryTree {
        if (pos >= text.size() || text[pos] != '(') return {};
        ++pos;
        BinaryTree l = rec();
        if (pos >= text.size() || text[pos] != ')') throw ParseError("unbalanced tree string '" + std::string(text) + "'");
        ++pos;
        BinaryTree r = rec();
        return node(l, r);
    };
    BinaryTree t = rec();
    if (pos != text.size()) throw ParseError("trailing characters in tree string '" + std::string(text) + "'");
    return t;
}

// ---------------------------------------------------------------- trees

std::vector<BinaryTree> enumerate_trees(int n) {
    if (n < 0) throw DomainError("negative tree size");
    if (n > kMaxTreeList) throw BoundError("tree enumeration for n=" + std::to_string(n), kMaxTreeList);
    std::vector<std::vector<BinaryTree>> by_size(n + 1);
    by_size[0] = {BinaryTree{}};
    for (int m = 1; m <= n; ++m)
        for (int k = 0; k < m; ++k)
            for (const auto& l : by_size[k])
                for (const auto& r : by_size[m - 1 - k]) by_size[m].push_back(BinaryTree::node(l, r));
    return by_size[n];
}

BigInt tree_factorial(const BinaryTree& t) {
    if (t.empty()) return 1;
    return BigInt(t.size()) * tree_factorial(t.left()) * tree_factorial(t.right());
}

BigInt s_via_trees(int n) {
    BigInt sum = 0;
    for (const auto& t : enumerate_trees(n)) sum += tree_factorial(t);
    return sum;
}

namespace {

// Vertices in inorder; for vertex v returns [lo, hi) inorder ranges of its
// left and right subtrees.
struct InorderRanges {
    std::vector<int> left_lo, left_hi, right_hi;
};

int fill_ranges(const BinaryTree& t, int offset, InorderRanges& r) {
    if (t.empty()) return 0;
    int nl = fill_ranges(t.left(), offset, r);
    int v = offset + nl;
    int nr = fill_ranges(t.right(), v + 1, r);
    r.left_lo[v] = offset;
    r.left_hi[v] = v;
    r.right_hi[v] = v + 1 + nr;
    return nl + 1 + nr;
}

}  // namespace

BigInt count_anti_increasing_labelings(const BinaryTree& t) {
    const int n = t.size();
    if (n > kMaxLabelingBruteForce) throw BoundError("labeling brute force for n=" + std::to_string(n), kMaxLabelingBruteForce);
    InorderRanges r{std::vector<int>(n), std::vector<int>(n), std::vector<int>(n)};
    fill_ranges(t, 0, r);
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 1);
    unsigned long count = 0;
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            int max_left = 0, min_right = n + 1;
            for (int i = r.left_lo[v]; i < r.left_hi[v]; ++i) max_left = std::max(max_left, label[i]);
            for (int i = v + 1; i < r.right_hi[v]; ++i) min_right = std::min(min_right, label[i]);
            ok = max_left < min_right;
        }
        if (ok) ++count;
    } while (std::next_permutation(label.begin(), label.end()));
    return BigInt(count);
}

// ----------------------------------------------------------------- Dyck

bool is_dyck_word(std::string_view w) {
    int h = 0;
    for (char ch : w) {
        if (ch == 'U')
            ++h;
        else if (ch == 'D')
            --h;
        else
            return false;
        if (h < 0) return false;
    }
    return h == 0;
}

void require_dyck_word(std::string_view w) {
    if (!is_dyck_word(w)) throw ParseError("not a Dyck word: '" + std::string(w) + "'");
}

bool DyckLess::operator()(const std::string& a, const std::string& b) const {
    // U < D, shorter prefix first
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](char x, char y) { return x == 'U' && y == 'D'; });
}

std::vector<std::string> enumerate_dyck_words(int n) {
    if (n < 0) throw DomainError("negative semilength");
    if (n > kMaxDycks) throw BoundError("Dyck word enumeration for n=" + std::to_string(n), kMaxDycks);
    std::vector<std::string> out;
    std::string w;
    std::function<void(int, int)> rec = [&](int up, int down) {
        if (up == n && down == n) {
            out.push_back(w);
            return;
        }
        if (up < n) {
            w.push_back('U');
            rec(up + 1, down);
            w.pop_back();
        }
        if (down < up) {
            w.push_back('D');
            rec(up, down + 1);
            w.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

namespace {

// w = u U v D: returns the index of the U matching the final D.
std::size_t last_opener(std::string_view w) {
    int h = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
        h += w[i] == 'D' ? 1 : -1;
        if (h == 0) return i;
    }
    throw ParseError("not a Dyck word: '" + std::string(w) + "'");
}

}  // namespace

std::string tree_to_dyck(const BinaryTree& t) {
    if (t.empty()) return "";
    return tree_to_dyck(t.left()) + "U" + tree_to_dyck(t.right()) + "D";
}

BinaryTree dyck_to_tree(std::string_view w) {
    require_dyck_word(w);
    std::function<BinaryTree(std::string_view)> rec = [&](std::string_view x) -> BinaryTree {
        if (x.empty()) return {};
        std::size_t k = last_opener(x);
        return BinaryTree::node(rec(x.substr(0, k)), rec(x.substr(k + 1, x.size() - k - 2)));
    };
    return rec(w);
}

BigInt dyck_factorial(std::string_view w) {
    require_dyck_word(w);
    std::function<BigInt(std::string_view)> rec = [&](std::string_view x) -> BigInt {
        if (x.empty()) return 1;
        std::size_t k = last_opener(x);
        return BigInt(static_cast<unsigned long>(x.size() / 2)) * rec(x.substr(0, k)) * rec(x.substr(k + 1, x.size() - k - 2));
    };
    return rec(w);
}

DyckCombination owedge(const DyckCombination& a, std::string_view w) {
    DyckCombination out;
    for (const auto& [word, coeff] : a) {
        if (word.empty()) throw StructureError("wedge with the empty word is undefined");
        std::string joined = word.substr(0, word.size() - 1);
        joined += w;
        joined += word.back();
        out[joined] += coeff;
    }
    return out;
}

namespace {

void add_into(DyckCombination& acc, const DyckCombination& x) {
    for (const auto& [w, c] : x) {
        auto& slot = acc[w];
        slot += c;
        if (slot == 0) acc.erase(w);
    }
}

}  // namespace

DyckCombination nu_operator(std::string_view w) {
    require_dyck_word(w);
    if (w.empty()) return {};
    std::size_t k = last_opener(w);
    std::string_view u = w.substr(0, k);
    std::string_view v = w.substr(k + 1, w.size() - k - 2);
    std::string xvx = "U" + std::string(v) + "D";
    DyckCombination out = owedge(nu_operator(u), xvx);
    std::string xux = "U" + std::string(u) + "D";
    DyckCombination tail;
    for (const auto& [word, c] : mu_operator(v)) tail[word + xux] += c;
    add_into(out, tail);
    return out;
}

DyckCombination mu_operator(std::string_view w) {
    DyckCombination out = nu_operator(w);
    add_into(out, DyckCombination{{std::string(w), Rational(1)}});
    return out;
}

DyckMatrix nt_adjacency(int n) {
    if (n < 1) throw DomainError("semilength must be positive");
    DyckMatrix m;
    m.states = enumerate_dyck_words(n);
    std::map<std::string, std::size_t, DyckLess> index;
    for (std::size_t i = 0; i < m.states.size(); ++i) index[m.states[i]] = i;
    m.rows.assign(m.states.size(), std::vector<Rational>(m.states.size(), Rational(0)));
    for (std::size_t i = 0; i < m.states.size(); ++i)
        for (const auto& [w, c] : mu_operator(m.states[i])) m.rows[i][index.at(w)] = c;
    return m;
}

std::string to_json(const DyckCombination& c) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [w, coeff] : c) j[w.empty() ? std::string("") : w] = to_string(coeff);
    return j.dump();
}

}  // namespace freeid

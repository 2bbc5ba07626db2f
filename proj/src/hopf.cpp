#include "freeid/hopf.hpp"

#include "freeid/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <tuple>

namespace freeid {

namespace {

void collect_labels(const LabeledTree& t, std::vector<int>& out) {
    if (t.empty()) return;
    collect_labels(t.left(), out);
    out.push_back(t.label());
    collect_labels(t.right(), out);
}

const std::string kEmptyKey = "[]";

}  // namespace

LabeledTree LabeledTree::graft(const LabeledTree& left, int label, const LabeledTree& right) {
    std::vector<int> ls;
    collect_labels(left, ls);
    collect_labels(right, ls);
    ls.push_back(label);
    std::sort(ls.begin(), ls.end());
    if (std::adjacent_find(ls.begin(), ls.end()) != ls.end())
        throw DomainError("label " + std::to_string(*std::adjacent_find(ls.begin(), ls.end())) + " used twice");
    std::string key = "[" + std::to_string(label);
    if (!left.empty() || !right.empty()) key += "," + left.key() + "," + right.key();
    key += "]";
    LabeledTree t;
    t.root_ = std::make_shared<const Node>(Node{label, left, right, left.size() + right.size() + 1, std::move(key)});
    return t;
}

int LabeledTree::label() const {
    if (!root_) throw DomainError("empty tree has no label");
    return root_->label;
}

const LabeledTree& LabeledTree::left() const {
    if (!root_) throw DomainError("empty tree has no left subtree");
    return root_->left;
}

const LabeledTree& LabeledTree::right() const {
    if (!root_) throw DomainError("empty tree has no right subtree");
    return root_->right;
}

const std::string& LabeledTree::key() const { return root_ ? root_->key : kEmptyKey; }

bool operator<(const LabeledTree& a, const LabeledTree& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.key() < b.key();
}

BinaryTree LabeledTree::shape() const {
    if (empty()) return {};
    return BinaryTree::node(left().shape(), right().shape());
}

std::vector<int> LabeledTree::labels() const {
    std::vector<int> out;
    collect_labels(*this, out);
    return out;
}

bool LabeledTree::is_anti_increasing() const {
    if (empty()) return true;
    auto l = left().labels(), r = right().labels();
    if (!l.empty() && !r.empty() && *std::max_element(l.begin(), l.end()) >= *std::min_element(r.begin(), r.end()))
        return false;
    return left().is_anti_increasing() && right().is_anti_increasing();
}

LabeledTree LabeledTree::relabel(const std::function<int(int)>& f) const {
    if (empty()) return {};
    return graft(left().relabel(f), f(label()), right().relabel(f));
}

LabeledTree LabeledTree::canonical() const {
    auto ls = labels();
    std::sort(ls.begin(), ls.end());
    return relabel([&](int x) { return static_cast<int>(std::lower_bound(ls.begin(), ls.end(), x) - ls.begin()) + 1; });
}

std::string LabeledTree::to_json() const { return key(); }

LabeledTree LabeledTree::parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("tree JSON: ") + e.what());
    }
    std::function<LabeledTree(const nlohmann::json&)> rec = [&](const nlohmann::json& x) -> LabeledTree {
        if (!x.is_array()) throw ParseError("tree JSON must be nested arrays");
        if (x.empty()) return {};
        if (!x[0].is_number_integer()) throw ParseError("tree label must be an integer");
        if (x.size() == 1) return vertex(x[0].get<int>());
        if (x.size() != 3) throw ParseError("tree node must be [label] or [label, left, right]");
        return graft(rec(x[1]), x[0].get<int>(), rec(x[2]));
    };
    return rec(j);
}

OrderedTree::OrderedTree(const LabeledTree& t) {
    if (!t.is_anti_increasing()) throw DomainError("tree " + t.to_json() + " is not anti-increasing");
    t_ = t.canonical();
}

// ------------------------------------------------------------ enumeration

namespace {

void check_ordered_bound(int n) {
    if (n < 0) throw DomainError("negative tree size");
    if (n > kMaxOrderedTrees) throw BoundError("ordered tree enumeration for n=" + std::to_string(n), kMaxOrderedTrees);
}

std::vector<LabeledTree> ordered_on(int n, const std::vector<std::vector<LabeledTree>>& smaller) {
    std::vector<LabeledTree> out;
    for (int root = 1; root <= n; ++root) {
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i)
            if (i != root) rest.push_back(i);
        for (int a = 0; a < n; ++a) {
            auto lmap = [&](int x) { return rest[x - 1]; };
            auto rmap = [&](int x) { return rest[a + x - 1]; };
            for (const auto& l : smaller[a])
                for (const auto& r : smaller[n - 1 - a]) out.push_back(LabeledTree::graft(l.relabel(lmap), root, r.relabel(rmap)));
        }
    }
    return out;
}

}  // namespace

std::vector<OrderedTree> enumerate_ordered_trees(int n) {
    check_ordered_bound(n);
    std::vector<std::vector<LabeledTree>> by_size{{LabeledTree{}}};
    for (int m = 1; m <= n; ++m) by_size.push_back(ordered_on(m, by_size));
    std::vector<OrderedTree> out;
    for (const auto& t : by_size[n]) out.emplace_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt hilbert_dimension(int n) { return BigInt(static_cast<unsigned long>(enumerate_ordered_trees(n).size())); }

// ------------------------------------------------------------ combinations

namespace {

template <class Map>
void add_term(Map& m, const typename Map::key_type& k, const Rational& c) {
    if (sgn(c) == 0) return;
    auto& slot = m[k];
    slot += c;
    if (sgn(slot) == 0) m.erase(k);
}

LabeledTree shifted(const LabeledTree& t, int by) {
    return t.relabel([by](int x) { return x + by; });
}

}  // namespace

TreeCombination canonicalize(const LabeledCombination& c) {
    TreeCombination out;
    for (const auto& [t, x] : c) add_term(out, OrderedTree(t), x);
    return out;
}

TensorCombination canonicalize(const LabeledTensor& c) {
    TensorCombination out;
    for (const auto& [p, x] : c) add_term(out, {OrderedTree(p.first), OrderedTree(p.second)}, x);
    return out;
}

// ---------------------------------------------------------- Loday-Ronco

LabeledCombination lr_product_labeled(const LabeledTree& s, const LabeledTree& t) {
    if (s.empty()) return {{t, Rational(1)}};
    if (t.empty()) return {{s, Rational(1)}};
    LabeledCombination out;
    for (const auto& [x, c] : lr_product_labeled(s.right(), t))
        add_term(out, LabeledTree::graft(s.left(), s.label(), x), c);
    for (const auto& [x, c] : lr_product_labeled(s, t.left()))
        add_term(out, LabeledTree::graft(x, t.label(), t.right()), c);
    return out;
}

LabeledTensor lr_coproduct_labeled(const LabeledTree& t) {
    if (t.empty()) return {{{LabeledTree{}, LabeledTree{}}, Rational(1)}};
    LabeledTensor out;
    auto du = lr_coproduct_labeled(t.left());
    auto dv = lr_coproduct_labeled(t.right());
    for (const auto& [u, cu] : du)
        for (const auto& [v, cv] : dv) {
            auto right = LabeledTree::graft(u.second, t.label(), v.second);
            for (const auto& [p, cp] : lr_product_labeled(u.first, v.first)) add_term(out, {p, right}, cu * cv * cp);
        }
    add_term(out, {t, LabeledTree{}}, Rational(1));
    return out;
}

TreeCombination lr_product(const OrderedTree& s, const OrderedTree& t) {
    return canonicalize(lr_product_labeled(s.tree(), shifted(t.tree(), s.size())));
}

TreeCombination lr_product(const TreeCombination& a, const TreeCombination& b) {
    TreeCombination out;
    for (const auto& [s, cs] : a)
        for (const auto& [t, ct] : b)
            for (const auto& [x, c] : lr_product(s, t)) add_term(out, x, cs * ct * c);
    return out;
}

TensorCombination lr_coproduct(const OrderedTree& t) { return canonicalize(lr_coproduct_labeled(t.tree())); }

namespace {

TreeCombination antipode_memo(const OrderedTree& t, std::map<OrderedTree, TreeCombination>& memo) {
    if (t.empty()) return {{t, Rational(1)}};
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    // S(t) = -t - sum' S(t1) * t2 over the terms with both factors nonempty
    TreeCombination out{{t, Rational(-1)}};
    for (const auto& [p, c] : lr_coproduct(t)) {
        if (p.first.empty() || p.second.empty()) continue;
        for (const auto& [x, cx] : lr_product(antipode_memo(p.first, memo), TreeCombination{{p.second, Rational(1)}}))
            add_term(out, x, -c * cx);
    }
    memo.emplace(t, out);
    return out;
}

}  // namespace

TreeCombination antipode(const OrderedTree& t) {
    std::map<OrderedTree, TreeCombination> memo;
    return antipode_memo(t, memo);
}

namespace {

using Triple = std::tuple<OrderedTree, OrderedTree, OrderedTree>;

using Coproduct = TensorCombination (*)(const OrderedTree&);

std::map<Triple, Rational> delta_left(const TensorCombination& d, Coproduct delta) {
    std::map<Triple, Rational> out;
    for (const auto& [p, c] : d)
        for (const auto& [q, cq] : delta(p.first)) add_term(out, {q.first, q.second, p.second}, c * cq);
    return out;
}

std::map<Triple, Rational> delta_right(const TensorCombination& d, Coproduct delta) {
    std::map<Triple, Rational> out;
    for (const auto& [p, c] : d)
        for (const auto& [q, cq] : delta(p.second)) add_term(out, {p.first, q.first, q.second}, c * cq);
    return out;
}

template <class F>
LawCheck for_all_trees(int n, F&& law) {
    for (int m = 0; m <= n; ++m)
        for (const auto& t : enumerate_ordered_trees(m))
            if (!law(t)) return {false, t.to_json()};
    return {};
}

}  // namespace

LawCheck coassociativity_check(int n) {
    return for_all_trees(n, [](const OrderedTree& t) {
        auto d = lr_coproduct(t);
        return delta_left(d, lr_coproduct) == delta_right(d, lr_coproduct);
    });
}

LawCheck counit_check(int n) {
    return for_all_trees(n, [](const OrderedTree& t) {
        TreeCombination left, right;
        for (const auto& [p, c] : lr_coproduct(t)) {
            if (p.first.empty()) add_term(left, p.second, c);
            if (p.second.empty()) add_term(right, p.first, c);
        }
        TreeCombination expect{{t, Rational(1)}};
        return left == expect && right == expect;
    });
}

LawCheck antipode_check(int n) {
    return for_all_trees(n, [](const OrderedTree& t) {
        TreeCombination l, r;
        for (const auto& [p, c] : lr_coproduct(t)) {
            for (const auto& [x, cx] : lr_product(antipode(p.first), TreeCombination{{p.second, Rational(1)}}))
                add_term(l, x, c * cx);
            for (const auto& [x, cx] : lr_product(TreeCombination{{p.first, Rational(1)}}, antipode(p.second)))
                add_term(r, x, c * cx);
        }
        TreeCombination expect;
        if (t.empty()) expect[t] = 1;
        return l == expect && r == expect;
    });
}

LawCheck associativity_check(int total) {
    for (int a = 0; a <= total; ++a)
        for (int b = 0; a + b <= total; ++b)
            for (int c = 0; a + b + c <= total; ++c)
                for (const auto& r : enumerate_ordered_trees(a))
                    for (const auto& s : enumerate_ordered_trees(b))
                        for (const auto& t : enumerate_ordered_trees(c)) {
                            TreeCombination R{{r, Rational(1)}}, S{{s, Rational(1)}}, T{{t, Rational(1)}};
                            if (lr_product(lr_product(R, S), T) != lr_product(R, lr_product(S, T)))
                                return {false, r.to_json() + " * " + s.to_json() + " * " + t.to_json()};
                        }
    return {};
}

// ------------------------------------------------------ Brouder-Frabetti

LabeledTree bf_over_labeled(const LabeledTree& s, const LabeledTree& t) {
    if (s.empty()) return t;
    if (t.empty()) return s;
    return LabeledTree::graft(bf_over_labeled(s, t.left()), t.label(), t.right());
}

OrderedTree bf_over(const OrderedTree& s, const OrderedTree& t) {
    return OrderedTree(bf_over_labeled(s.tree(), shifted(t.tree(), s.size())));
}

namespace {

LabeledTensor tensor_over(const LabeledTensor& a, const LabeledTensor& b) {
    LabeledTensor out;
    for (const auto& [p, cp] : a)
        for (const auto& [q, cq] : b)
            add_term(out, {bf_over_labeled(p.first, q.first), bf_over_labeled(p.second, q.second)}, cp * cq);
    return out;
}

}  // namespace

LabeledTensor bf_coproduct_labeled(const LabeledTree& t) {
    const LabeledTree empty;
    if (t.empty()) return {{{empty, empty}, Rational(1)}};
    if (!t.left().empty()) {
        // s ∨_k u = s / V_k(u)
        return tensor_over(bf_coproduct_labeled(t.left()), bf_coproduct_labeled(LabeledTree::graft(empty, t.label(), t.right())));
    }
    const int k = t.label();
    const LabeledTree& u = t.right();
    if (u.empty()) return {{{t, empty}, Rational(1)}, {{empty, t}, Rational(1)}};
    // t = V_k(s ∨_l w)
    LabeledTree vlw = LabeledTree::graft(empty, u.label(), u.right());
    LabeledTensor reduced = bf_coproduct_labeled(vlw);
    add_term(reduced, {vlw, empty}, Rational(-1));
    LabeledTensor out{{{t, empty}, Rational(1)}};
    for (const auto& [p, c] : tensor_over(bf_coproduct_labeled(u.left()), reduced))
        add_term(out, {p.first, LabeledTree::graft(empty, k, p.second)}, c);
    return out;
}

TensorCombination bf_coproduct(const OrderedTree& t) { return canonicalize(bf_coproduct_labeled(t.tree())); }

LawCheck bf_coassociativity_check(int n) {
    return for_all_trees(n, [](const OrderedTree& t) {
        auto d = bf_coproduct(t);
        return delta_left(d, bf_coproduct) == delta_right(d, bf_coproduct);
    });
}

// ------------------------------------------------------------------ JSON

std::string to_json(const TreeCombination& c) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [t, x] : c) j[t.to_json()] = to_string(x);
    return j.dump();
}

std::string to_json(const TensorCombination& c) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [p, x] : c) j[p.first.to_json() + " (x) " + p.second.to_json()] = to_string(x);
    return j.dump();
}

}  // namespace freeid

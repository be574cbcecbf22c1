#pragma once

// Planar binary trees. A tree in Y_n has n internal vertices and n + 1
// leaves numbered 0..n from the left. It is stored as its bracket word
// [j_1 ... j_n]: j_i labels the vertex between leaves i-1 and i, the root
// carries the largest label, and grafting a in Y_p with b in Y_q gives
//
//   word(a v b) = word(a), p + q + 1, word(b) + p
//
// so every word is a permutation of 1..n. Y_2 = {[1 2], [2 1]} with
// [2 1] = [0] v [1] and [1 2] = [1] v [0].

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dialg/error.hpp"

namespace dialg {

enum class LeafOrientation {
  Left,   // the left product
  Right,  // the right product
};

inline const char* to_string(LeafOrientation o) { return o == LeafOrientation::Left ? "left" : "right"; }

class Tree {
 public:
  /// The 0-tree [0].
  Tree() = default;

  /// Rebuilds a tree from its word; throws unless the word is a valid tree word.
  static Tree from_word(std::vector<int> word) {
    Tree t;
    t.word_ = std::move(word);
    require(valid_word(t.word_), ErrorKind::Parse, "not a planar binary tree word: " + t.to_string());
    return t;
  }

  static Tree leaf() { return Tree(); }

  static Tree graft(const Tree& a, const Tree& b) {
    const int p = static_cast<int>(a.size());
    const int q = static_cast<int>(b.size());
    Tree t;
    t.word_.reserve(a.size() + b.size() + 1);
    t.word_ = a.word_;
    t.word_.push_back(p + q + 1);
    for (int j : b.word_) t.word_.push_back(j + p);
    return t;
  }

  std::size_t size() const noexcept { return word_.size(); }
  bool is_leaf() const noexcept { return word_.empty(); }
  const std::vector<int>& word() const noexcept { return word_; }

  Tree left() const {
    require(!is_leaf(), ErrorKind::InvalidArgument, "the 0-tree has no subtrees");
    Tree t;
    t.word_.assign(word_.begin(), word_.begin() + root_position());
    return t;
  }

  Tree right() const {
    require(!is_leaf(), ErrorKind::InvalidArgument, "the 0-tree has no subtrees");
    const auto p = static_cast<int>(root_position());
    Tree t;
    for (auto it = word_.begin() + p + 1; it != word_.end(); ++it) t.word_.push_back(*it - p);
    return t;
  }

  /// "[j_1 ... j_n]", or "[0]" for the 0-tree.
  std::string to_string() const {
    if (word_.empty()) return "[0]";
    std::string s = "[";
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(word_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Tree&, const Tree&) = default;
  friend auto operator<=>(const Tree& a, const Tree& b) { return a.word_ <=> b.word_; }

 private:
  std::size_t root_position() const {
    return static_cast<std::size_t>(std::max_element(word_.begin(), word_.end()) - word_.begin());
  }

  static bool valid_word(const std::vector<int>& w) {
    if (w.empty()) return true;
    const auto n = static_cast<int>(w.size());
    const auto root = std::max_element(w.begin(), w.end());
    if (*root != n) return false;
    const auto p = static_cast<int>(root - w.begin());
    std::vector<int> left(w.begin(), root);
    std::vector<int> right;
    for (auto it = root + 1; it != w.end(); ++it) right.push_back(*it - p);
    for (int j : left) {
      if (j < 1 || j > p) return false;
    }
    for (int j : right) {
      if (j < 1 || j > n - 1 - p) return false;
    }
    return valid_word(left) && valid_word(right);
  }

  std::vector<int> word_;
};

inline constexpr std::size_t kMaxTreeLevel = 12;

/// Catalan number c_n.
inline std::size_t catalan(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

/// All trees of Y_n in ascending lexicographic word order.
inline std::vector<Tree> enumerate_trees(std::size_t n) {
  if (n > kMaxTreeLevel) {
    throw Error(ErrorKind::Resource, "tree level " + std::to_string(n) + " exceeds " +
                                         std::to_string(kMaxTreeLevel));
  }
  std::vector<std::vector<Tree>> levels(n + 1);
  levels[0] = {Tree::leaf()};
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t p = 0; p < m; ++p) {
      for (const auto& a : levels[p]) {
        for (const auto& b : levels[m - 1 - p]) levels[m].push_back(Tree::graft(a, b));
      }
    }
  }
  auto out = std::move(levels[n]);
  std::sort(out.begin(), out.end());
  return out;
}

/// d_i: removes leaf i together with its parent vertex.
inline Tree face(std::size_t i, const Tree& y) {
  require(!y.is_leaf(), ErrorKind::InvalidArgument, "the 0-tree has no faces");
  require(i <= y.size(), ErrorKind::InvalidArgument,
          "face index " + std::to_string(i) + " out of range for " + y.to_string());
  const Tree l = y.left();
  const Tree r = y.right();
  const std::size_t p = l.size();
  if (i <= p) return l.is_leaf() ? r : Tree::graft(face(i, l), r);
  return r.is_leaf() ? l : Tree::graft(l, face(i - p - 1, r));
}

/// s_i: replaces leaf i by a cherry [0] v [0].
inline Tree degeneracy(std::size_t i, const Tree& y) {
  require(i <= y.size(), ErrorKind::InvalidArgument,
          "degeneracy index " + std::to_string(i) + " out of range for " + y.to_string());
  if (y.is_leaf()) return Tree::graft(Tree::leaf(), Tree::leaf());
  const Tree l = y.left();
  const Tree r = y.right();
  const std::size_t p = l.size();
  if (i <= p) return Tree::graft(degeneracy(i, l), r);
  return Tree::graft(l, degeneracy(i - p - 1, r));
}

/// o^y_i for y in Y_m, 0 <= i <= m. Interior leaves point left when
/// j_i > j_{i+1}; leaf 0 is Left iff y = [0] v y1; leaf m is Right iff
/// y = y1 v [0].
inline LeafOrientation leaf_orientation(std::size_t i, const Tree& y) {
  const std::size_t m = y.size();
  require(m >= 1, ErrorKind::InvalidArgument, "leaf orientation needs a tree with m >= 1");
  require(i <= m, ErrorKind::InvalidArgument,
          "leaf index " + std::to_string(i) + " out of range for " + y.to_string());
  if (i == 0) return y.left().is_leaf() ? LeafOrientation::Left : LeafOrientation::Right;
  if (i == m) return y.right().is_leaf() ? LeafOrientation::Right : LeafOrientation::Left;
  return y.word()[i - 1] > y.word()[i] ? LeafOrientation::Left : LeafOrientation::Right;
}

/// Y_n with precomputed face indices into Y_{n-1} and leaf orientations.
class TreeLevel {
 public:
  explicit TreeLevel(std::size_t n) : n_(n), trees_(enumerate_trees(n)) {
    for (std::size_t t = 0; t < trees_.size(); ++t) index_.emplace(trees_[t].word(), t);
    if (n == 0) return;
    const auto lower = enumerate_trees(n - 1);
    std::map<std::vector<int>, std::size_t> lower_index;
    for (std::size_t t = 0; t < lower.size(); ++t) lower_index.emplace(lower[t].word(), t);
    faces_.resize(trees_.size());
    orientations_.resize(trees_.size());
    for (std::size_t t = 0; t < trees_.size(); ++t) {
      for (std::size_t i = 0; i <= n; ++i) {
        faces_[t].push_back(lower_index.at(face(i, trees_[t]).word()));
        orientations_[t].push_back(leaf_orientation(i, trees_[t]));
      }
    }
  }

  std::size_t level() const noexcept { return n_; }
  std::size_t count() const noexcept { return trees_.size(); }
  const Tree& tree(std::size_t t) const { return trees_[t]; }
  const std::vector<Tree>& trees() const noexcept { return trees_; }

  std::size_t index_of(const Tree& y) const {
    auto it = index_.find(y.word());
    require(it != index_.end(), ErrorKind::InvalidArgument, y.to_string() + " is not in this level");
    return it->second;
  }

  /// Index in Y_{n-1} of d_i of tree t.
  std::size_t face_index(std::size_t t, std::size_t i) const { return faces_[t][i]; }
  LeafOrientation orientation(std::size_t t, std::size_t i) const { return orientations_[t][i]; }

 private:
  std::size_t n_;
  std::vector<Tree> trees_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<std::vector<LeafOrientation>> orientations_;
};

}  // namespace dialg

#ifndef NOVIKOV_TABLEAU_HPP
#define NOVIKOV_TABLEAU_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "novikov/errors.hpp"

namespace novikov {

// Young diagram plus the extra nose box on row 1. rows stores the Young
// row lengths; degree counts the nose. The degree-1 diagram is the lone
// nose box, encoded as rows == {0}.
struct Diagram {
    std::vector<int> rows;

    int young_boxes() const {
        int s = 0;
        for (int r : rows) s += r;
        return s;
    }
    int degree() const { return young_boxes() + 1; }
    int row_count() const { return (int)rows.size(); }
    bool valid() const;

    // Diagrams of the given degree, row-length vectors in decreasing
    // lexicographic order; {0} for degree 1.
    static std::vector<Diagram> all_of_degree(int degree);

    friend bool operator==(const Diagram&, const Diagram&) = default;
};

// A filled Novikov diagram. labels[0] holds rows[0]+1 entries (the last
// one is the nose); labels[i] holds rows[i] entries for i >= 1.
struct Tableau {
    Diagram diagram;
    std::vector<std::vector<int>> labels;

    int degree() const { return diagram.degree(); }
    int max_label() const;
    std::vector<int> multidegree(int n) const;  // occurrence counts of x1..xn
    std::vector<int> first_column() const;
    // Box positions in filling-rule order: bottom row's entries 2..r_k,
    // then upward, ending with row 1's entries 2..r_1+1.
    std::vector<std::pair<int, int>> f2_positions() const;
    int label_at(int row, int col) const { return labels[row - 1][col - 1]; }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    std::string row_major() const;  // "2,3|1" style key used for ordering
};

struct Violation {
    std::string rule;  // "F1" or "F2"
    int row = 0, col = 0;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::optional<Violation> violation;
};

// shape-mismatch error when labels do not fit the diagram.
ValidationReport validate(const Tableau& t);

// Immutable bracketed word: a binary tree with generator leaves.
class Word {
  public:
    static Word leaf(int generator);
    static Word product(const Word& left, const Word& right);

    bool is_leaf() const { return node_->generator != 0; }
    int generator() const;
    Word left() const;
    Word right() const;

    int degree() const;
    int max_generator() const;
    std::vector<int> multidegree(int n) const;
    std::string to_string() const;  // fully parenthesized, "(x1*(x2*x3))"

    friend bool operator==(const Word& a, const Word& b) { return equal(a.node_, b.node_); }

  private:
    struct Node {
        int generator = 0;  // 0 for interior nodes
        std::shared_ptr<const Node> l, r;
    };
    explicit Word(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static bool equal(const std::shared_ptr<const Node>& a, const std::shared_ptr<const Node>& b);
    std::shared_ptr<const Node> node_;
};

// The associated word W_T: left-normed row words combined right to left.
Word word(const Tableau& t);

// All valid tableaux with exactly multidegree[i] occurrences of x_{i+1}.
// Deterministic order: diagrams in decreasing lex row order, fillings by
// row-major label sequence. Errors on an all-zero multidegree.
std::vector<Tableau> enumerate_tableaux(const std::vector<int>& multidegree);

// enumerate_tableaux((1,...,1)) with n ones.
std::vector<Tableau> multilinear_basis(int n);

}  // namespace novikov

#endif

#include "novikov/tableau.hpp"

#include <algorithm>
#include <functional>

namespace novikov {

// ----------------------------------------------------------------- Diagram

bool Diagram::valid() const {
    if (rows.empty()) return false;
    if (rows.size() == 1 && rows[0] == 0) return true;  // the lone nose box
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 1) return false;
        if (i > 0 && rows[i] > rows[i - 1]) return false;
    }
    return true;
}

std::vector<Diagram> Diagram::all_of_degree(int degree) {
    if (degree < 1) throw malformed_input("diagram degree must be >= 1");
    if (degree == 1) return {Diagram{{0}}};
    int boxes = degree - 1;
    std::vector<Diagram> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int maxRow) {
        if (remaining == 0) {
            out.push_back(Diagram{current});
            return;
        }
        for (int r = std::min(remaining, maxRow); r >= 1; --r) {
            current.push_back(r);
            rec(remaining - r, r);
            current.pop_back();
        }
    };
    rec(boxes, boxes);
    return out;  // recursion emits decreasing lexicographic order already
}

// ----------------------------------------------------------------- Tableau

int Tableau::max_label() const {
    int m = 0;
    for (const auto& row : labels)
        for (int a : row) m = std::max(m, a);
    return m;
}

std::vector<int> Tableau::multidegree(int n) const {
    std::vector<int> d(n, 0);
    for (const auto& row : labels)
        for (int a : row) {
            if (a < 1 || a > n) throw malformed_input("generator index out of range");
            ++d[a - 1];
        }
    return d;
}

std::vector<int> Tableau::first_column() const {
    std::vector<int> c;
    c.reserve(labels.size());
    for (const auto& row : labels) c.push_back(row.front());
    return c;
}

std::vector<std::pair<int, int>> Tableau::f2_positions() const {
    std::vector<std::pair<int, int>> seq;
    int k = diagram.row_count();
    for (int i = k; i >= 1; --i) {
        int len = (int)labels[i - 1].size();
        for (int j = 2; j <= len; ++j) seq.emplace_back(i, j);
    }
    return seq;
}

std::string Tableau::row_major() const {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) s += "|";
        for (std::size_t j = 0; j < labels[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(labels[i][j]);
        }
    }
    return s;
}

ValidationReport validate(const Tableau& t) {
    if (!t.diagram.valid()) throw shape_mismatch("invalid Novikov diagram");
    if ((int)t.labels.size() != t.diagram.row_count())
        throw shape_mismatch("label rows do not match the diagram");
    for (int i = 0; i < t.diagram.row_count(); ++i) {
        int expect = t.diagram.rows[i] + (i == 0 ? 1 : 0);
        if ((int)t.labels[i].size() != expect)
            throw shape_mismatch("row " + std::to_string(i + 1) + " holds " +
                                 std::to_string(t.labels[i].size()) + " labels, expected " +
                                 std::to_string(expect));
        for (int a : t.labels[i])
            if (a < 1) throw shape_mismatch("generator indices are 1-based");
    }

    // (F1): within consecutive equal-length rows the first column is non-increasing
    for (int i = 1; i < t.diagram.row_count(); ++i) {
        if (t.diagram.rows[i - 1] == t.diagram.rows[i] &&
            t.label_at(i, 1) < t.label_at(i + 1, 1)) {
            Violation v{"F1", i + 1, 1,
                        "rule F1: rows " + std::to_string(i) + "," + std::to_string(i + 1) +
                            " have equal length but x" + std::to_string(t.label_at(i, 1)) +
                            " < x" + std::to_string(t.label_at(i + 1, 1))};
            return {false, v};
        }
    }

    // (F2): the bottom-up tail sequence is non-decreasing
    auto seq = t.f2_positions();
    for (std::size_t s = 1; s < seq.size(); ++s) {
        auto [pr, pc] = seq[s - 1];
        auto [r, c] = seq[s];
        if (t.label_at(pr, pc) > t.label_at(r, c)) {
            Violation v{"F2", r, c,
                        "rule F2: x" + std::to_string(t.label_at(pr, pc)) + " at (" +
                            std::to_string(pr) + "," + std::to_string(pc) + ") exceeds x" +
                            std::to_string(t.label_at(r, c)) + " at (" + std::to_string(r) +
                            "," + std::to_string(c) + ")"};
            return {false, v};
        }
    }
    return {true, std::nullopt};
}

// -------------------------------------------------------------------- Word

Word Word::leaf(int generator) {
    if (generator < 1) throw malformed_input("generator index must be >= 1");
    auto n = std::make_shared<Node>();
    n->generator = generator;
    return Word(std::move(n));
}

Word Word::product(const Word& left, const Word& right) {
    auto n = std::make_shared<Node>();
    n->l = left.node_;
    n->r = right.node_;
    return Word(std::move(n));
}

int Word::generator() const {
    if (!is_leaf()) throw malformed_input("interior node has no generator");
    return node_->generator;
}

Word Word::left() const { return Word(node_->l); }
Word Word::right() const { return Word(node_->r); }

int Word::degree() const {
    if (is_leaf()) return 1;
    return left().degree() + right().degree();
}

int Word::max_generator() const {
    if (is_leaf()) return node_->generator;
    return std::max(left().max_generator(), right().max_generator());
}

std::vector<int> Word::multidegree(int n) const {
    std::vector<int> d(n, 0);
    std::function<void(const Word&)> rec = [&](const Word& w) {
        if (w.is_leaf()) {
            int g = w.generator();
            if (g > n) throw malformed_input("generator index out of range");
            ++d[g - 1];
            return;
        }
        rec(w.left());
        rec(w.right());
    };
    rec(*this);
    return d;
}

std::string Word::to_string() const {
    if (is_leaf()) return "x" + std::to_string(node_->generator);
    return "(" + left().to_string() + "*" + right().to_string() + ")";
}

bool Word::equal(const std::shared_ptr<const Node>& a, const std::shared_ptr<const Node>& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->generator != b->generator) return false;
    if (a->generator != 0) return true;
    return equal(a->l, b->l) && equal(a->r, b->r);
}

Word word(const Tableau& t) {
    auto report = validate(t);
    if (!report.ok) throw malformed_input("invalid tableau: " + report.violation->message);
    auto row_word = [&](int i) {
        const auto& row = t.labels[i];
        Word w = Word::leaf(row[0]);
        for (std::size_t j = 1; j < row.size(); ++j) w = Word::product(w, Word::leaf(row[j]));
        return w;
    };
    Word acc = row_word(0);  // W_1 (includes the nose)
    for (int i = 1; i < t.diagram.row_count(); ++i) acc = Word::product(row_word(i), acc);
    return acc;
}

// ------------------------------------------------------------- enumeration

namespace {

// All ways to pick first-column labels for a diagram from the available
// multiset, honoring (F1): inside each block of equal row lengths the
// labels must be non-increasing downward.
void fill_first_column(const Diagram& dia, int row, std::vector<int>& avail,
                       std::vector<int>& column, std::vector<std::vector<int>>& out) {
    int k = dia.row_count();
    if (row == k) {
        out.push_back(column);
        return;
    }
    bool same_block = row > 0 && dia.rows[row] == dia.rows[row - 1];
    for (std::size_t i = 0; i < avail.size(); ++i) {
        if (avail[i] == 0) continue;
        int label = (int)i + 1;
        if (same_block && label > column[row - 1]) continue;
        --avail[i];
        column[row] = label;
        fill_first_column(dia, row + 1, avail, column, out);
        ++avail[i];
    }
}

Tableau assemble(const Diagram& dia, const std::vector<int>& column,
                 const std::vector<int>& rest_sorted) {
    Tableau t;
    t.diagram = dia;
    t.labels.resize(dia.row_count());
    for (int i = 0; i < dia.row_count(); ++i) {
        int len = dia.rows[i] + (i == 0 ? 1 : 0);
        t.labels[i].assign(std::max(len, 1), 0);
        t.labels[i][0] = column[i];
    }
    auto seq = t.f2_positions();
    for (std::size_t s = 0; s < seq.size(); ++s)
        t.labels[seq[s].first - 1][seq[s].second - 1] = rest_sorted[s];
    return t;
}

}  // namespace

std::vector<Tableau> enumerate_tableaux(const std::vector<int>& multidegree) {
    int total = 0;
    for (int d : multidegree) {
        if (d < 0) throw malformed_input("multidegree entries must be nonnegative");
        total += d;
    }
    if (total == 0) throw malformed_input("multidegree must have positive total degree");

    std::vector<Tableau> out;
    for (const Diagram& dia : Diagram::all_of_degree(total)) {
        std::vector<std::vector<int>> columns;
        std::vector<int> avail = multidegree;
        std::vector<int> column(dia.row_count(), 0);
        fill_first_column(dia, 0, avail, column, columns);

        std::vector<Tableau> of_diagram;
        for (const auto& col : columns) {
            // remaining labels in non-decreasing order fill the (F2) boxes;
            // that arrangement is forced, so each column choice yields at
            // most one tableau
            std::vector<int> rest;
            std::vector<int> remaining = multidegree;
            for (int label : col) --remaining[label - 1];
            for (std::size_t i = 0; i < remaining.size(); ++i)
                rest.insert(rest.end(), remaining[i], (int)i + 1);
            Tableau t = assemble(dia, col, rest);
            if (validate(t).ok) of_diagram.push_back(std::move(t));
        }
        std::sort(of_diagram.begin(), of_diagram.end(),
                  [](const Tableau& a, const Tableau& b) { return a.labels < b.labels; });
        out.insert(out.end(), of_diagram.begin(), of_diagram.end());
    }
    return out;
}

std::vector<Tableau> multilinear_basis(int n) {
    if (n < 1) throw malformed_input("multilinear basis requires n >= 1");
    return enumerate_tableaux(std::vector<int>(n, 1));
}

}  // namespace novikov

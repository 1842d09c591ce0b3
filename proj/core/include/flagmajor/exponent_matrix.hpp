#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

namespace flagmajor {

// A rows x cols matrix of natural exponents.  Row i (0-based) is tensor
// slot i+1; column j is variable x_{j+1}.  Comparison is lexicographic on
// (rows, cols, entries), which gives a deterministic map-key order.
class ExponentMatrix {
public:
    ExponentMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

    static ExponentMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        ExponentMatrix f(static_cast<int>(rows.size()),
                         rows.empty() ? 0 : static_cast<int>(rows.front().size()));
        for (int i = 0; i < f.rows(); ++i) {
            const auto& row = rows[static_cast<size_t>(i)];
            if (static_cast<int>(row.size()) != f.cols())
                throw std::invalid_argument("ExponentMatrix: ragged rows");
            for (int j = 0; j < f.cols(); ++j) f.at(i, j) = row[static_cast<size_t>(j)];
        }
        return f;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int i, int j) const { return a_[index(i, j)]; }
    int& at(int i, int j) { return a_[index(i, j)]; }

    std::vector<int> column(int j) const {
        std::vector<int> c(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i) c[static_cast<size_t>(i)] = at(i, j);
        return c;
    }

    long long row_sum(int i) const {
        long long s = 0;
        for (int j = 0; j < cols_; ++j) s += at(i, j);
        return s;
    }

    long long total() const {
        long long s = 0;
        for (int v : a_) s += v;
        return s;
    }

    std::vector<long long> row_sums() const {
        std::vector<long long> s(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i) s[static_cast<size_t>(i)] = row_sum(i);
        return s;
    }

    friend auto operator<=>(const ExponentMatrix&, const ExponentMatrix&) = default;

private:
    size_t index(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }

    int rows_;
    int cols_;
    std::vector<int> a_;
};

}  // namespace flagmajor

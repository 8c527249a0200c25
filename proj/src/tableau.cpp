#include "kron/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace kron {

SkewTableau::SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows)
    : outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
    if (!contains(outer_, inner_))
        throw InvalidInput("inner shape " + inner_.to_string() + " not inside " + outer_.to_string());
    while (static_cast<int>(rows_.size()) < outer_.length()) rows_.emplace_back();
    if (static_cast<int>(rows_.size()) > outer_.length()) {
        for (std::size_t i = outer_.length(); i < rows_.size(); ++i)
            if (!rows_[i].empty()) throw InvalidInput("tableau has entries below its shape");
        rows_.resize(outer_.length());
    }
    for (int i = 0; i < outer_.length(); ++i)
        if (static_cast<int>(rows_[i].size()) != outer_[i] - inner_[i])
            throw InvalidInput("row " + std::to_string(i + 1) + " length does not match skew shape");
}

SkewTableau SkewTableau::straight(std::vector<std::vector<int>> rows) {
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    std::vector<int> shape;
    for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
    return SkewTableau(Partition(shape), Partition(), std::move(rows));
}

int SkewTableau::at(int row, int col) const {
    if (row < 0 || row >= outer_.length() || col < inner_[row] || col >= outer_[row])
        throw InvalidInput("tableau cell out of range");
    return rows_[row][col - inner_[row]];
}

Composition SkewTableau::content() const {
    std::vector<int> counts;
    for (const auto& row : rows_)
        for (int v : row) {
            if (v > static_cast<int>(counts.size())) counts.resize(v, 0);
            ++counts[v - 1];
        }
    return Composition(std::move(counts));
}

bool SkewTableau::is_semistandard() const {
    for (int i = 0; i < outer_.length(); ++i) {
        const auto& row = rows_[i];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) return false;
            if (c > 0 && row[c - 1] > row[c]) return false;
        }
        if (i == 0) continue;
        for (int col = inner_[i]; col < outer_[i]; ++col) {
            if (col < inner_[i - 1]) continue;  // no box above inside the skew shape
            if (at(i - 1, col) >= at(i, col)) return false;
        }
    }
    return true;
}

Word SkewTableau::row_word() const {
    Word out;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
    return out;
}

Word SkewTableau::column_word() const {
    Word out;
    const int width = outer_.empty() ? 0 : outer_[0];
    for (int col = 0; col < width; ++col)
        for (int row = outer_.length() - 1; row >= 0; --row)
            if (col >= inner_[row] && col < outer_[row]) out.push_back(at(row, col));
    return out;
}

bool is_reverse_lattice(std::span<const int> word) {
    std::vector<int> counts;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int v = *it;
        if (v < 1) return false;
        if (v > static_cast<int>(counts.size())) counts.resize(v, 0);
        ++counts[v - 1];
        if (v > 1 && counts[v - 1] > counts[v - 2]) return false;
    }
    return true;
}

SkewTableau canonical_tableau(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < shape.length(); ++i) rows.emplace_back(shape[i], i + 1);
    return SkewTableau(shape, Partition(), std::move(rows));
}

bool is_canonical(const SkewTableau& t) {
    if (!t.inner().empty()) return false;
    return t == canonical_tableau(t.outer());
}

int row_insert(TableauRows& rows, int value) {
    for (std::size_t i = 0;; ++i) {
        if (i == rows.size()) {
            rows.push_back({value});
            return static_cast<int>(i);
        }
        auto& row = rows[i];
        auto it = std::upper_bound(row.begin(), row.end(), value);
        if (it == row.end()) {
            row.push_back(value);
            return static_cast<int>(i);
        }
        std::swap(*it, value);
    }
}

std::pair<int, int> column_insert(TableauRows& rows, int value) {
    for (int col = 0;; ++col) {
        int height = 0;
        while (height < static_cast<int>(rows.size()) && static_cast<int>(rows[height].size()) > col) ++height;
        // Smallest entry >= value in this column gets bumped.
        int bump_row = -1;
        for (int i = 0; i < height; ++i)
            if (rows[i][col] >= value) {
                bump_row = i;
                break;
            }
        if (bump_row < 0) {
            if (height == static_cast<int>(rows.size())) rows.emplace_back();
            rows[height].push_back(value);
            return {height, col};
        }
        std::swap(rows[bump_row][col], value);
    }
}

SkewTableau insertion_tableau(std::span<const int> word) {
    TableauRows rows;
    for (int v : word) row_insert(rows, v);
    return SkewTableau::straight(std::move(rows));
}

SkewTableau column_insertion_tableau(std::span<const int> word) {
    TableauRows rows;
    for (auto it = word.rbegin(); it != word.rend(); ++it) column_insert(rows, *it);
    return SkewTableau::straight(std::move(rows));
}

TwoRowArray two_row_array(const IntMatrix& b) {
    TwoRowArray out;
    for (int i = 1; i <= b.rows(); ++i)
        for (int j = 1; j <= b.cols(); ++j) {
            if (b(i, j) < 0) throw InvalidInput("RSK needs a nonnegative matrix");
            for (int t = 0; t < b(i, j); ++t) {
                out.top.push_back(i);
                out.bottom.push_back(j);
            }
        }
    return out;
}

RskPair rsk(const IntMatrix& b) {
    const TwoRowArray arr = two_row_array(b);
    TableauRows p, q;
    for (std::size_t t = 0; t < arr.top.size(); ++t) {
        const int row = row_insert(p, arr.bottom[t]);
        if (row == static_cast<int>(q.size())) q.emplace_back();
        q[row].push_back(arr.top[t]);
    }
    return {SkewTableau::straight(std::move(p)), SkewTableau::straight(std::move(q))};
}

CanonicalConditions main_lemma_conditions(const IntMatrix& b) {
    const int p = b.rows();
    const int q = b.cols();
    const int m = std::min(p, q);
    CanonicalConditions out{true, true};

    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) {
            if (b(i, j) == 0) continue;
            if (i + j > p + 1) out.p_canonical = false;
            if (i + j > q + 1) out.q_canonical = false;
        }

    for (int j = 1; j <= m - 1 && out.p_canonical; ++j)
        for (int i = 2; i <= p + 1 - j; ++i) {
            long lhs = 0, rhs = 0;
            for (int k = i; k <= p + 1 - j; ++k) lhs += b(k, j);
            for (int k = i - 1; k <= p - j; ++k) rhs += b(k, j + 1);
            if (lhs < rhs) {
                out.p_canonical = false;
                break;
            }
        }

    for (int i = 1; i <= m - 1 && out.q_canonical; ++i)
        for (int j = 2; j <= q + 1 - i; ++j) {
            long lhs = 0, rhs = 0;
            for (int l = j; l <= q + 1 - i; ++l) lhs += b(i, l);
            for (int l = j - 1; l <= q - i; ++l) rhs += b(i + 1, l);
            if (lhs < rhs) {
                out.q_canonical = false;
                break;
            }
        }
    return out;
}

bool diagonals_constant(const IntMatrix& b) {
    const int m = std::min(b.rows(), b.cols());
    for (int i = 1; i <= b.rows(); ++i)
        for (int j = 1; j <= b.cols(); ++j) {
            if (i + j > m + 1) {
                if (b(i, j) != 0) return false;
            } else if (b(i, j) != b(1, i + j - 1)) {
                return false;
            }
        }
    return true;
}

namespace {

// Horizontal strips of `size` boxes added to `inner` while staying inside `outer`.
void for_each_horizontal_strip(const Partition& inner, const Partition& outer, int size,
                               const std::function<void(const Partition&)>& visit) {
    const int len = outer.length();
    std::vector<int> shape(len);
    for (int i = 0; i < len; ++i) shape[i] = inner[i];
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row == len) {
            if (remaining == 0) visit(Partition(shape));
            return;
        }
        // A horizontal strip adds at most inner[row-1] - inner[row] boxes to row > 0.
        int cap = outer[row] - inner[row];
        if (row > 0) cap = std::min(cap, inner[row - 1] - inner[row]);
        cap = std::min(cap, remaining);
        for (int add = cap; add >= 0; --add) {
            shape[row] = inner[row] + add;
            rec(row + 1, remaining - add);
        }
        shape[row] = inner[row];
    };
    rec(0, size);
}

} // namespace

Count kostka(const Partition& shape, const Composition& content) {
    if (shape.size() != content.size())
        throw InvalidInput("kostka: |" + shape.to_string() + "| != |" + content.to_string() + "|");
    std::map<std::pair<std::size_t, Partition>, Count> memo;
    std::function<Count(std::size_t, const Partition&)> rec = [&](std::size_t step, const Partition& inner) -> Count {
        if (step == content.parts().size()) return inner == shape ? 1 : 0;
        auto key = std::make_pair(step, inner);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Count total = 0;
        for_each_horizontal_strip(inner, shape, content[step], [&](const Partition& next) {
            total = checked_add(total, rec(step + 1, next));
        });
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(0, Partition());
}

std::vector<SkewTableau> semistandard_tableaux(const Partition& shape, const Composition& content) {
    if (shape.size() != content.size())
        throw InvalidInput("semistandard_tableaux: size mismatch");
    std::vector<SkewTableau> out;
    std::vector<std::vector<int>> rows(shape.length());
    for (int i = 0; i < shape.length(); ++i) rows[i].assign(shape[i], 0);
    std::vector<int> remaining = content.parts();
    const int cells = shape.size();
    // Fill cells row by row, left to right.
    std::function<void(int)> rec = [&](int cell) {
        if (cell == cells) {
            out.emplace_back(shape, Partition(), rows);
            return;
        }
        int row = 0, col = cell;
        while (col >= shape[row]) col -= shape[row++];
        int lo = 1;
        if (col > 0) lo = std::max(lo, rows[row][col - 1]);
        if (row > 0) lo = std::max(lo, rows[row - 1][col] + 1);
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            rows[row][col] = v;
            rec(cell + 1);
            ++remaining[v - 1];
        }
        rows[row][col] = 0;
    };
    rec(0);
    return out;
}

} // namespace kron

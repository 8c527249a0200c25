#include "kron/multitableau.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace kron {

Partition LRMultitableau::shape() const {
    return tableaux.empty() ? Partition() : tableaux.back().outer();
}

Composition LRMultitableau::type() const {
    std::vector<int> sizes;
    for (const auto& t : tableaux) sizes.push_back(t.box_count());
    return Composition(std::move(sizes));
}

std::vector<Partition> LRMultitableau::contents() const {
    std::vector<Partition> out;
    for (const auto& t : tableaux) out.push_back(t.content().sorted());
    return out;
}

bool LRMultitableau::is_valid() const {
    Partition previous;
    for (const auto& t : tableaux) {
        if (t.inner() != previous) return false;
        if (!t.is_semistandard()) return false;
        const Word w = t.row_word();
        if (!is_reverse_lattice(w)) return false;
        previous = t.outer();
    }
    return true;
}

std::vector<SkewTableau> lr_skew_tableaux(const Partition& outer, const Partition& inner) {
    if (!contains(outer, inner))
        throw InvalidInput("lr_skew_tableaux: " + inner.to_string() + " not inside " + outer.to_string());
    const int len = outer.length();
    std::vector<std::vector<int>> rows(len);
    for (int i = 0; i < len; ++i) rows[i].assign(outer[i] - inner[i], 0);

    // Cells in reverse reading order: rows top to bottom, each right to left.
    // The lattice condition is checked on this prefix of the reversed row word.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < len; ++i)
        for (int c = outer[i] - 1; c >= inner[i]; --c) cells.emplace_back(i, c);

    std::vector<int> counts(len + 1, 0);
    std::vector<SkewTableau> out;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == cells.size()) {
            out.emplace_back(outer, inner, rows);
            return;
        }
        const auto [row, col] = cells[pos];
        int lo = 1;
        int hi = len;
        if (col + 1 < outer[row]) hi = std::min(hi, rows[row][col + 1 - inner[row]]);
        if (row > 0 && col >= inner[row - 1]) lo = std::max(lo, rows[row - 1][col - inner[row - 1]] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && counts[v] + 1 > counts[v - 1]) continue;
            ++counts[v];
            rows[row][col - inner[row]] = v;
            rec(pos + 1);
            --counts[v];
        }
        rows[row][col - inner[row]] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Partitions nu with inner <= nu <= outer and |nu| = size, in lexicographic order.
std::vector<Partition> shapes_between(const Partition& inner, const Partition& outer, int size) {
    std::vector<Partition> out;
    const int len = outer.length();
    std::vector<int> shape(len, 0);
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row == len) {
            if (remaining == 0) out.emplace_back(shape);
            return;
        }
        const int lo = inner[row];
        int hi = outer[row];
        if (row > 0) hi = std::min(hi, shape[row - 1]);
        for (int v = lo; v <= hi; ++v) {
            const int added = v - inner[row];
            if (added > remaining) break;
            shape[row] = v;
            rec(row + 1, remaining - added);
        }
        shape[row] = 0;
    };
    rec(0, size - inner.size());
    return out;
}

} // namespace

std::vector<LRMultitableau> lr_multitableaux(const Partition& shape, const Composition& type) {
    if (shape.size() != type.size())
        throw InvalidInput("lr_multitableaux: |" + shape.to_string() + "| != |" + type.to_string() + "|");
    std::vector<LRMultitableau> out;
    LRMultitableau current;
    std::function<void(std::size_t, const Partition&)> rec = [&](std::size_t step, const Partition& inner) {
        if (step == type.parts().size()) {
            out.push_back(current);
            return;
        }
        for (const Partition& next : shapes_between(inner, shape, inner.size() + type[step])) {
            for (auto& t : lr_skew_tableaux(next, inner)) {
                current.tableaux.push_back(std::move(t));
                rec(step + 1, next);
                current.tableaux.pop_back();
            }
        }
    };
    rec(0, Partition());
    return out;
}

Count count_lr_pairs(const Partition& lambda, const Partition& mu, const Composition& tau) {
    if (lambda.size() != mu.size() || lambda.size() != tau.size())
        throw InvalidInput("count_lr_pairs: sizes differ for " + lambda.to_string() + ", " + mu.to_string() +
                           ", " + tau.to_string());
    auto tally = [&](const Partition& shape) {
        std::map<std::vector<Partition>, Count> counts;
        for (const auto& m : lr_multitableaux(shape, tau)) ++counts[m.contents()];
        return counts;
    };
    const auto left = tally(lambda);
    const auto right = tally(mu);
    Count total = 0;
    for (const auto& [key, n] : left)
        if (auto it = right.find(key); it != right.end()) total = checked_add(total, checked_mul(n, it->second));
    return total;
}

namespace {

struct ProductSide {
    SkewTableau product;
    LRMultitableau recording;
};

// Builds P = P_r ... P_1 and the multitableau recording the new boxes.
ProductSide multiply_levels(const std::vector<SkewTableau>& factors) {
    ProductSide out;
    TableauRows rows;
    Partition previous;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const SkewTableau& factor = factors[k];
        const Word v = factor.column_word();
        const Word u = canonical_tableau(factor.outer()).column_word();
        std::map<std::pair<int, int>, int> placed;
        if (k == 0) {
            rows = factor.rows();
            const SkewTableau c = canonical_tableau(factor.outer());
            for (int i = 0; i < factor.outer().length(); ++i)
                for (int col = 0; col < factor.outer()[i]; ++col) placed[{i, col}] = c.at(i, col);
        } else {
            // The column word is v_m ... v_1; v_1 goes in first and u_t marks the box v_t creates.
            const std::size_t m = v.size();
            for (std::size_t t = 1; t <= m; ++t) {
                const auto box = column_insert(rows, v[m - t]);
                placed[box] = u[m - t];
            }
        }
        std::vector<int> shape;
        for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
        Partition next(shape);
        std::vector<std::vector<int>> skew_rows(next.length());
        for (const auto& [box, value] : placed) skew_rows[box.first].push_back(value);
        out.recording.tableaux.emplace_back(next, previous, std::move(skew_rows));
        previous = std::move(next);
    }
    out.product = SkewTableau::straight(std::move(rows));
    return out;
}

} // namespace

TensorImage tensor_image(const Tensor3& a) {
    if (!a.nonnegative()) throw InvalidInput("tensor_image needs a nonnegative tensor");
    std::vector<SkewTableau> ps, qs;
    for (int k = 1; k <= a.r(); ++k) {
        RskPair pair = rsk(a.level(k));
        ps.push_back(std::move(pair.p));
        qs.push_back(std::move(pair.q));
    }
    ProductSide p_side = multiply_levels(ps);
    ProductSide q_side = multiply_levels(qs);
    return TensorImage{std::move(q_side.product), std::move(p_side.product), std::move(q_side.recording),
                       std::move(p_side.recording)};
}

} // namespace kron

#include "kron/points.hpp"

#include <algorithm>

namespace kron {

namespace {

// Depth-first assignment of the free cells in storage order. Each line sum is
// tracked as a residual; the last free cell of a row, column or level is
// forced to its residual, and an inequality is checked as soon as its last
// cell has a value.
class PointSearch {
public:
    explicit PointSearch(const CRSystem& sys) : sys_(sys), point_(sys.p(), sys.q(), sys.r()) {
        const CRCone& cone = sys.cone();
        std::vector<int> position(cone.cell_count(), -1);
        for (std::size_t c = 0; c < cone.cell_count(); ++c) {
            if (sys.forced_zero(c)) continue;
            position[c] = static_cast<int>(free_.size());
            const auto idx = cone.index(c);
            free_.push_back({c, idx.i - 1, idx.j - 1, idx.k - 1, false, false, false, {}});
        }
        std::vector<int> last_row(sys.p(), -1), last_col(sys.q(), -1), last_level(sys.r(), -1);
        for (int pos = 0; pos < static_cast<int>(free_.size()); ++pos) {
            last_row[free_[pos].row] = pos;
            last_col[free_[pos].col] = pos;
            last_level[free_[pos].level] = pos;
        }
        for (int v : last_row) if (v >= 0) free_[v].closes_row = true;
        for (int v : last_col) if (v >= 0) free_[v].closes_col = true;
        for (int v : last_level) if (v >= 0) free_[v].closes_level = true;

        row_res_ = sys.lambda().parts();
        col_res_ = sys.mu().parts();
        level_res_ = sys.tau().parts();
        feasible_ = true;
        for (int i = 0; i < sys.p(); ++i) if (last_row[i] < 0 && row_res_[i] > 0) feasible_ = false;
        for (int j = 0; j < sys.q(); ++j) if (last_col[j] < 0 && col_res_[j] > 0) feasible_ = false;
        for (int k = 0; k < sys.r(); ++k) if (last_level[k] < 0 && level_res_[k] > 0) feasible_ = false;

        if (sys.transport_only()) return;
        for (std::size_t n = 0; n < cone.inequalities().size(); ++n) {
            const auto& ineq = cone.inequalities()[n];
            int last = -1;
            for (std::size_t c : ineq.lhs) last = std::max(last, position[c]);
            for (std::size_t c : ineq.rhs) last = std::max(last, position[c]);
            if (last >= 0) free_[last].checks.push_back(&ineq);
        }
    }

    template <typename Visit>
    void run(Visit&& visit) {
        if (feasible_) search(0, visit);
    }

private:
    struct FreeCell {
        std::size_t cell;
        int row, col, level;
        bool closes_row, closes_col, closes_level;
        std::vector<const CellInequality*> checks;
    };

    template <typename Visit>
    void search(std::size_t pos, Visit& visit) {
        if (pos == free_.size()) {
            visit(static_cast<const Tensor3&>(point_));
            return;
        }
        const FreeCell& fc = free_[pos];
        int& rr = row_res_[fc.row];
        int& cr = col_res_[fc.col];
        int& lr = level_res_[fc.level];
        int lo = 0;
        int hi = std::min({rr, cr, lr});
        auto force = [&](int value) {
            lo = std::max(lo, value);
            hi = std::min(hi, value);
        };
        if (fc.closes_row) force(rr);
        if (fc.closes_col) force(cr);
        if (fc.closes_level) force(lr);

        auto& data = point_.data();
        for (int v = lo; v <= hi; ++v) {
            data[fc.cell] = v;
            rr -= v;
            cr -= v;
            lr -= v;
            if (inequalities_hold(fc)) search(pos + 1, visit);
            rr += v;
            cr += v;
            lr += v;
        }
        data[fc.cell] = 0;
    }

    bool inequalities_hold(const FreeCell& fc) const {
        const auto& data = point_.data();
        for (const CellInequality* ineq : fc.checks) {
            int lhs = 0, rhs = 0;
            for (std::size_t c : ineq->lhs) lhs += data[c];
            for (std::size_t c : ineq->rhs) rhs += data[c];
            if (lhs < rhs) return false;
        }
        return true;
    }

    const CRSystem& sys_;
    Tensor3 point_;
    std::vector<FreeCell> free_;
    std::vector<int> row_res_, col_res_, level_res_;
    bool feasible_ = true;
};

void require_face_dims(const CRSystem& sys, const FacePredicate& filter) {
    filter.validate(sys.p(), sys.q(), sys.r());
    if (sys.transport_only()) throw InvalidInput("face filters need the column-row constraints");
}

} // namespace

void for_each_point(const CRSystem& sys, const std::function<void(const Tensor3&)>& visit) {
    PointSearch(sys).run(visit);
}

Count count_points(const CRSystem& sys) {
    Count total = 0;
    PointSearch(sys).run([&](const Tensor3&) { total = checked_add(total, 1); });
    return total;
}

Count count_points(const CRSystem& sys, const FacePredicate& filter) {
    require_face_dims(sys, filter);
    Count total = 0;
    PointSearch(sys).run([&](const Tensor3& x) {
        if (filter.holds(x)) total = checked_add(total, 1);
    });
    return total;
}

FaceHits count_face_hits(const CRSystem& sys, const FacePredicate& face_union) {
    require_face_dims(sys, face_union);
    const bool is_union = face_union.kind() == FacePredicate::Kind::Union;
    FaceHits out;
    out.per_member.assign(is_union ? face_union.members().size() : 1, 0);
    PointSearch(sys).run([&](const Tensor3& x) {
        bool any = false;
        if (is_union) {
            for (std::size_t m = 0; m < face_union.members().size(); ++m)
                if (face_union.members()[m].holds(x)) {
                    out.per_member[m] = checked_add(out.per_member[m], 1);
                    any = true;
                }
        } else if (face_union.holds(x)) {
            out.per_member[0] = checked_add(out.per_member[0], 1);
            any = true;
        }
        if (any) out.total = checked_add(out.total, 1);
    });
    return out;
}

std::vector<Tensor3> enumerate_points(const CRSystem& sys) {
    std::vector<Tensor3> out;
    PointSearch(sys).run([&](const Tensor3& x) { out.push_back(x); });
    return out;
}

} // namespace kron

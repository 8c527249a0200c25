#include "kron/face.hpp"

#include "kron/inequalities.hpp"

namespace kron {

void FacePredicate::validate(int p, int q, int r) const {
    auto fail = [&] { throw InvalidInput("face " + to_string() + " is not defined for dims (" + std::to_string(p) +
                                         "," + std::to_string(q) + "," + std::to_string(r) + ")"); };
    switch (kind_) {
    case Kind::DiagZero:
        if (first_ < 1 || first_ > p) fail();
        break;
    case Kind::EntryZero:
        if (first_ < 1 || first_ > p || first_ > q || r < 2) fail();
        break;
    case Kind::ColTight:
        try {
            detail::check_col_index(p, q, r, first_, second_);
        } catch (const InvalidInput&) {
            fail();
        }
        break;
    case Kind::RowTight:
        try {
            detail::check_row_index(p, q, r, first_, second_);
        } catch (const InvalidInput&) {
            fail();
        }
        break;
    case Kind::Union:
        for (const auto& m : members_) m.validate(p, q, r);
        break;
    }
}

bool FacePredicate::holds(const Tensor3& x) const {
    switch (kind_) {
    case Kind::DiagZero:
        return x(1, first_, 1) == 0;
    case Kind::EntryZero:
        return x(first_, first_, 2) == 0;
    case Kind::ColTight:
        return col_ineq_slack(x, first_, second_) == 0;
    case Kind::RowTight:
        return row_ineq_slack(x, first_, second_) == 0;
    case Kind::Union:
        for (const auto& m : members_)
            if (m.holds(x)) return true;
        return false;
    }
    return false;
}

std::string FacePredicate::to_string() const {
    auto pair = [&](const char* name) {
        return std::string(name) + "(" + std::to_string(first_) + "," + std::to_string(second_) + ")";
    };
    switch (kind_) {
    case Kind::DiagZero:
        return "P" + std::to_string(first_);
    case Kind::EntryZero:
        return "P2(" + std::to_string(first_) + "," + std::to_string(first_) + ")";
    case Kind::ColTight:
        return pair("C");
    case Kind::RowTight:
        return pair("R");
    case Kind::Union: {
        std::string out = "{";
        for (std::size_t i = 0; i < members_.size(); ++i) out += (i ? ", " : "") + members_[i].to_string();
        return out + "}";
    }
    }
    return {};
}

} // namespace kron

#include "kron/json_io.hpp"

namespace kron {

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Composition& c) { return Json(c.parts()); }

Json to_json(const SkewTableau& t) {
    return Json{{"shape", t.outer().parts()}, {"inner", t.inner().parts()}, {"rows", t.rows()}};
}

Json to_json(const LRMultitableau& m) {
    Json out = Json::array();
    for (const auto& t : m.tableaux) out.push_back(to_json(t));
    return out;
}

Json to_json(const Tensor3& x) {
    Json levels = Json::array();
    for (int k = 1; k <= x.r(); ++k) {
        Json level = Json::array();
        for (int i = 1; i <= x.p(); ++i) {
            Json row = Json::array();
            for (int j = 1; j <= x.q(); ++j) row.push_back(x(i, j, k));
            level.push_back(std::move(row));
        }
        levels.push_back(std::move(level));
    }
    return Json{{"dims", {x.p(), x.q(), x.r()}}, {"levels", std::move(levels)}};
}

Tensor3 tensor_from_json(const Json& j) {
    try {
        const auto dims = j.at("dims").get<std::vector<int>>();
        if (dims.size() != 3) throw InvalidInput("tensor dims must have three entries");
        Tensor3 x(dims[0], dims[1], dims[2]);
        const auto& levels = j.at("levels");
        if (static_cast<int>(levels.size()) != x.r()) throw InvalidInput("tensor has the wrong number of levels");
        for (int k = 1; k <= x.r(); ++k) {
            const auto& level = levels.at(k - 1);
            if (static_cast<int>(level.size()) != x.p()) throw InvalidInput("tensor level has the wrong row count");
            for (int i = 1; i <= x.p(); ++i) {
                const auto row = level.at(i - 1).get<std::vector<int>>();
                if (static_cast<int>(row.size()) != x.q()) throw InvalidInput("tensor row has the wrong length");
                for (int jj = 1; jj <= x.q(); ++jj) x(i, jj, k) = row[jj - 1];
            }
        }
        return x;
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed tensor JSON: ") + e.what());
    }
}

Json to_json(const TensorImage& image) {
    return Json{{"Q", to_json(image.q)}, {"P", to_json(image.p)}, {"T", to_json(image.t)}, {"S", to_json(image.s)}};
}

Json to_json(const CRSystem& sys) {
    const CRCone& cone = sys.cone();
    auto cell_json = [&](std::size_t c) {
        const auto idx = cone.index(c);
        return Json{idx.i, idx.j, idx.k};
    };
    Json vanishing = Json::array();
    Json forced = Json::array();
    for (std::size_t c = 0; c < cone.cell_count(); ++c) {
        if (cone.vanishing(c)) vanishing.push_back(cell_json(c));
        else if (sys.forced_zero(c)) forced.push_back(cell_json(c));
    }
    Json column = Json::array();
    Json row = Json::array();
    if (!sys.transport_only()) {
        for (const auto& ineq : cone.inequalities()) {
            Json lhs = Json::array(), rhs = Json::array();
            for (std::size_t c : ineq.lhs) lhs.push_back(cell_json(c));
            for (std::size_t c : ineq.rhs) rhs.push_back(cell_json(c));
            Json entry{{"i", ineq.i}, {"j", ineq.j}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}};
            (ineq.family == CellInequality::Family::Column ? column : row).push_back(std::move(entry));
        }
    } else {
        vanishing = Json::array();
    }
    return Json{{"lambda", to_json(sys.lambda())},
                {"mu", to_json(sys.mu())},
                {"tau", to_json(sys.tau())},
                {"dims", {sys.p(), sys.q(), sys.r()}},
                {"transportOnly", sys.transport_only()},
                {"marginals", {{"rows", sys.lambda().parts()}, {"cols", sys.mu().parts()}, {"levels", sys.tau().parts()}}},
                {"vanishing", std::move(vanishing)},
                {"zeroLevelCells", std::move(forced)},
                {"columnInequalities", std::move(column)},
                {"rowInequalities", std::move(row)}};
}

Json to_json(const JTTerm& term) { return Json{{"sign", term.sign}, {"gamma", to_json(term.gamma)}}; }

Json to_json(const JTPairTerm& term) {
    return Json{{"sign", term.sign},
                {"a", term.a},
                {"b", term.b},
                {"rho", to_json(term.rho)},
                {"tau", to_json(term.tau())},
                {"tauBar", to_json(term.tau_bar())}};
}

Json to_json(const FaceTerm& term) {
    return Json{{"sign", term.sign},
                {"tau", to_json(term.tau)},
                {"tauBar", to_json(term.tau_bar)},
                {"countPlus", term.count_plus},
                {"countMinus", term.count_minus}};
}

} // namespace kron

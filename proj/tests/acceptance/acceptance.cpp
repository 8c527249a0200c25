// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "kron/characters.hpp"
#include "kron/cli.hpp"
#include "kron/geometry.hpp"
#include "kron/kronecker.hpp"
#include "kron/multitableau.hpp"
#include "kron/points.hpp"
#include "kron/selfcheck.hpp"
#include "kron/tableau.hpp"

using namespace kron;

namespace {

struct Check {
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = describe();
    }
};

std::string str(const Partition& p) { return p.to_string(); }
std::string str(const Composition& c) { return c.to_string(); }

template <typename F>
void for_partition_triples(int min_n, int max_n, F&& f) {
    for (int n = min_n; n <= max_n; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts) f(a, b, c);
    }
}

void criterion_oracle(Check& check) {
    for_partition_triples(2, 6, [&](const Partition& a, const Partition& b, const Partition& c) {
        const Count cr = kron_via_cr(a, b, c);
        const Count oracle = g_oracle(a, b, c);
        check.expect(cr == oracle, [&] {
            return "g" + str(a) + str(b) + str(c) + ": cr=" + std::to_string(cr) + " oracle=" + std::to_string(oracle);
        });
    });
}

void criterion_lr_equality(Check& check) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n))
                for (const auto& tau : compositions_of(n)) {
                    const Count points = count_points(CRSystem(a, b, tau));
                    const Count pairs = count_lr_pairs(a, b, tau);
                    const Count oracle = lr_oracle(a, b, tau);
                    check.expect(points == pairs && pairs == oracle, [&] {
                        return str(a) + str(b) + str(tau) + ": points=" + std::to_string(points) +
                               " pairs=" + std::to_string(pairs) + " oracle=" + std::to_string(oracle);
                    });
                }
}

void criterion_faces(Check& check) {
    for_partition_triples(1, 5, [&](const Partition& a, const Partition& b, const Partition& c) {
        const Count expected = kron_via_cr(a, b, c);
        const NormalizedTriple t = normalize_triple(a, b, c);
        const int ells = t.shortcut ? 1 : t.lambda.length();
        for (int ell = 1; ell <= ells; ++ell) {
            const FaceResult res = kron_via_faces_detailed(a, b, c, ell);
            check.expect(res.value == expected, [&] {
                return "faces" + str(a) + str(b) + str(c) + " l=" + std::to_string(ell) + ": " +
                       std::to_string(res.value) + " vs " + std::to_string(expected);
            });
            for (const auto& term : res.terms) {
                const Count diff = count_points(CRSystem(t.lambda, t.mu, term.tau)) -
                                   count_points(CRSystem(t.lambda, t.mu, term.tau_bar));
                check.expect(diff == term.count_plus - term.count_minus, [&] {
                    return "term " + str(term.tau) + "/" + str(term.tau_bar) + " of " + str(a) + str(b) + str(c) +
                           " l=" + std::to_string(ell);
                });
            }
        }
    });
}

std::vector<int> trimmed(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

bool is_partition_of_length(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 0) return false;
        if (i > 0 && v[i] > v[i - 1]) return false;
    }
    return true;
}

void criterion_main_lemma(Check& check, long& in_hypothesis) {
    for (int rows = 1; rows <= 3; ++rows)
        for (int cols = 1; cols <= 4; ++cols) {
            IntMatrix b(rows, cols);
            std::function<void(int)> fill = [&](int cell) {
                if (cell < rows * cols) {
                    for (int v = 0; v <= 2; ++v) {
                        b(cell / cols + 1, cell % cols + 1) = v;
                        fill(cell + 1);
                    }
                    return;
                }
                const auto rs = b.row_sums();
                const auto cs = b.col_sums();
                if (!is_partition_of_length(rs) || !is_partition_of_length(cs)) return;
                ++in_hypothesis;
                const Partition lambda(rs), mu(cs);
                const RskPair pq = rsk(b);
                const bool p_can = pq.p == canonical_tableau(mu);
                const bool q_can = pq.q == canonical_tableau(lambda);
                const auto cond = main_lemma_conditions(b);
                auto where = [&] {
                    std::ostringstream os;
                    os << rows << "x" << cols << " [";
                    for (int i = 1; i <= rows; ++i)
                        for (int j = 1; j <= cols; ++j) os << b(i, j) << (j == cols ? ";" : ",");
                    os << "]";
                    return os.str();
                };
                check.expect(cond.p_canonical == p_can, [&] { return "P condition at " + where(); });
                check.expect(cond.q_canonical == q_can, [&] { return "Q condition at " + where(); });
                check.expect(diagonals_constant(b) == (p_can && q_can), [&] { return "diagonals at " + where(); });
            };
            fill(0);
        }
}

std::string pair_term_string(const JTPairTerm& t) {
    std::string rho;
    for (int v : t.rho) rho += (rho.empty() ? "" : ",") + std::to_string(v);
    return std::string(t.sign > 0 ? "+" : "-") + "(" + std::to_string(t.a) + "," + std::to_string(t.b) + ",(" + rho +
           "))";
}

void criterion_examples(Check& check) {
    std::string got;
    for (const auto& t : jt_pair_expansion(Partition{7, 4, 2, 1})) got += pair_term_string(t) + " ";
    const std::string want = "+(2,1,(7,4)) -(5,1,(7,1)) -(2,1,(8,3)) +(9,1,(3,1)) +(5,1,(8)) -(9,1,(4)) ";
    check.expect(got == want, [&] { return "pair expansion: " + got; });

    const Tensor3 z1 = z_matrix(1, 2, 3, 2);
    check.expect(z1.level(1) == IntMatrix{{-1, 0, 0}, {0, 0, 0}} && z1.level(2) == IntMatrix{{1, 0, 0}, {0, 0, 0}},
                 [] { return std::string("Z_1 levels"); });
    const Tensor3 z3 = z_matrix(3, 3, 4, 3);
    check.expect(z3.level(1) == IntMatrix{{0, 1, -1, 0}, {1, -1, 0, 0}, {-1, 0, 0, 0}} &&
                     z3.level(2) == IntMatrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}} &&
                     z3.level(3) == IntMatrix(3, 4),
                 [] { return std::string("Z_3 levels"); });
    check.expect(polytope_dim_bound(3, 6, 3) == 26, [] { return std::string("dimension bound (3,6,3)"); });
}

void criterion_dimension(Check& check) {
    const int p = 3, q = 6, r = 2;
    const CRCone cone(p, q, r);
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        check.expect(cone.contains(hypercube_sample(p, q, r, seed)),
                     [&] { return "sample with seed " + std::to_string(seed) + " left the cone"; });

    const int d = cone_dim(p, q, r);
    check.expect(d == 18, [&] { return "cone_dim(3,6,2) = " + std::to_string(d); });
    std::vector<Rational> u(hypercube_free_cells(p, q, r), Rational(1, 2));
    std::vector<RationalTensor3> crafted{hypercube_point(p, q, r, u)};
    for (std::size_t c = 0; c < u.size(); ++c) {
        auto v = u;
        v[c] = Rational(1, 4);
        crafted.push_back(hypercube_point(p, q, r, v));
    }
    for (const auto& x : crafted) check.expect(cone.contains(x), [] { return std::string("crafted sample left the cone"); });
    const int rank = affine_rank(crafted);
    check.expect(crafted.size() == static_cast<std::size_t>(d + 1) && rank == d,
                 [&] { return "affine rank of crafted samples = " + std::to_string(rank); });

    const int bound = polytope_dim_bound(2, 2, 2);
    check.expect(bound == 2, [&] { return "polytope_dim_bound(2,2,2) = " + std::to_string(bound); });
    for (int t = 1; t <= 4; ++t) {
        const Partition l{2 * t, t};
        std::vector<RationalTensor3> pts;
        for (const auto& x : enumerate_points(CRSystem(l, l, Composition{2 * t, t}))) pts.push_back(to_rational(x));
        const int dil = pts.empty() ? -1 : affine_rank(pts);
        check.expect(!pts.empty() && dil <= bound,
                     [&] { return "dilation " + std::to_string(t) + " rank " + std::to_string(dil); });
    }
}

bool is_hook(const Partition& z) {
    for (int i = 1; i < z.length(); ++i)
        if (z[i] != 1) return false;
    return z.length() > 0;
}

void criterion_corollaries(Check& check) {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                const int cap = intersection(a, b).size();
                std::vector<Count> g(parts.size()), cr(parts.size());
                for (std::size_t k = 0; k < parts.size(); ++k) {
                    const Partition& c = parts[k];
                    g[k] = g_oracle(a, b, c);
                    cr[k] = count_points(CRSystem(a, b, c));
                    const std::string tag = str(a) + str(b) + str(c);

                    if (b.length() > a.length() * c.length())
                        check.expect(cr[k] == 0 && g[k] == 0, [&] { return "length bound at " + tag; });
                    if (cr[k] > 0) check.expect(c[0] <= cap, [&] { return "first part bound at " + tag; });
                    if (is_hook(c) && c[0] <= cap) check.expect(cr[k] > 0, [&] { return "hook nonempty at " + tag; });

                    const Count tr = count_points(CRSystem(a, b, c, true));
                    check.expect(g[k] <= cr[k] && cr[k] <= tr, [&] { return "bounds chain at " + tag; });
                }
                for (std::size_t k = 0; k < parts.size(); ++k)
                    for (std::size_t l = 0; l < parts.size(); ++l)
                        if (dominance_geq(parts[k], parts[l]))
                            check.expect(cr[k] <= cr[l], [&] {
                                return "monotonicity " + str(a) + str(b) + " " + str(parts[k]) + " vs " + str(parts[l]);
                            });
                for (std::size_t k = 0; k < parts.size(); ++k) {
                    if (g[k] == 0) continue;
                    bool maximal = true;
                    for (std::size_t l = 0; l < parts.size(); ++l)
                        if (l != k && g[l] > 0 && dominance_geq(parts[l], parts[k])) maximal = false;
                    if (maximal)
                        check.expect(g[k] == cr[k], [&] { return "maximal component " + str(a) + str(b) + str(parts[k]); });
                }
            }
    }
}

void criterion_determinism(Check& check) {
    std::string reference;
    for (int threads : {1, 2, 8}) {
        std::ostringstream out, err;
        const int code = run_cli({"--threads", std::to_string(threads), "selfcheck", "--n", "5"}, out, err);
        check.expect(code == 0, [&] { return "selfcheck exit " + std::to_string(code) + " with " + std::to_string(threads) + " threads"; });
        if (threads == 1) reference = out.str();
        else check.expect(out.str() == reference, [&] { return "report differs with " + std::to_string(threads) + " threads"; });
    }
}

} // namespace

int main() {
    int failed = 0;
    auto run = [&](int id, const std::string& name, const std::function<std::string(Check&)>& body) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        std::string note;
        try {
            note = body(check);
        } catch (const std::exception& e) {
            check.failures++;
            check.first_failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = check.failures == 0;
        if (!ok) ++failed;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << check.cases << " checks"
                  << note << ", " << std::fixed;
        std::cout.precision(1);
        std::cout << secs << "s)";
        if (!ok) std::cout << " first failure: " << check.first_failure << " [" << check.failures << " failures]";
        std::cout << std::endl;
    };

    run(1, "alternating sum equals character oracle, n=2..6", [](Check& c) { criterion_oracle(c); return std::string(); });
    run(2, "point count = LR pairs = character oracle, n<=5", [](Check& c) { criterion_lr_equality(c); return std::string(); });
    run(3, "face formula for every l and per-term identity, n<=5", [](Check& c) { criterion_faces(c); return std::string(); });
    run(4, "canonical-tableau conditions and constant diagonals vs RSK, up to 3x4, entries<=2", [](Check& c) {
        long n = 0;
        criterion_main_lemma(c, n);
        return ", " + std::to_string(n) + " matrices with partition margins";
    });
    run(5, "pair expansion of (7,4,2,1), Z_1 (2x3x2), Z_3 (3x4x3) and dimension bound 26", [](Check& c) { criterion_examples(c); return std::string(); });
    run(6, "hypercube samples, affine rank 18 and dilation rank bound", [](Check& c) { criterion_dimension(c); return std::string(); });
    run(7, "length bound, intersection bounds, bounds chain, monotonicity, maximal components, n<=6",
        [](Check& c) { criterion_corollaries(c); return std::string(); });
    run(8, "selfcheck --n 5 identical for 1, 2 and 8 threads", [](Check& c) { criterion_determinism(c); return std::string(); });

    std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED") << std::endl;
    return failed == 0 ? 0 : 1;
}

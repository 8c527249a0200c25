#include "kron/selfcheck.hpp"

#include <sstream>
#include <tuple>
#include <vector>

#include "kron/characters.hpp"
#include "kron/kronecker.hpp"
#include "kron/parallel.hpp"

namespace kron {

namespace {

struct TripleResult {
    Count oracle = 0;
    Count via_cr = 0;
    std::vector<Count> via_faces;
};

TripleResult check_triple(const Partition& lambda, const Partition& mu, const Partition& nu) {
    TripleResult out;
    out.oracle = g_oracle(lambda, mu, nu);
    out.via_cr = kron_via_cr(lambda, mu, nu);
    const NormalizedTriple t = normalize_triple(lambda, mu, nu);
    const int ells = t.shortcut ? 1 : t.lambda.length();
    for (int ell = 1; ell <= ells; ++ell) out.via_faces.push_back(kron_via_faces(lambda, mu, nu, ell));
    return out;
}

} // namespace

SelfcheckReport run_selfcheck(int max_n, int threads) {
    if (max_n < 1) throw InvalidInput("selfcheck needs n >= 1");
    SelfcheckReport report;
    std::ostringstream text;
    for (int n = 1; n <= max_n; ++n) {
        const auto parts = partitions_of(n);
        std::vector<std::tuple<Partition, Partition, Partition>> triples;
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts) triples.emplace_back(a, b, c);
        const auto results = parallel_map(triples.size(), threads, [&](std::size_t i) {
            const auto& [a, b, c] = triples[i];
            return check_triple(a, b, c);
        });

        int mismatches = 0;
        Count total = 0;
        int nonzero = 0;
        for (std::size_t i = 0; i < triples.size(); ++i) {
            const auto& r = results[i];
            bool ok = r.via_cr == r.oracle;
            for (Count v : r.via_faces) ok = ok && v == r.oracle;
            total = checked_add(total, r.oracle);
            if (r.oracle > 0) ++nonzero;
            if (ok) continue;
            ++mismatches;
            const auto& [a, b, c] = triples[i];
            text << "MISMATCH " << a << " " << b << " " << c << " oracle=" << r.oracle << " cr=" << r.via_cr
                 << " faces=";
            for (std::size_t k = 0; k < r.via_faces.size(); ++k) text << (k ? "," : "") << r.via_faces[k];
            text << "\n";
        }
        text << "n=" << n << " triples=" << triples.size() << " nonzero=" << nonzero << " sum=" << total
             << " mismatches=" << mismatches << "\n";
        report.triples += static_cast<int>(triples.size());
        report.mismatches += mismatches;
    }
    text << (report.mismatches == 0 ? "OK" : "FAILED") << " triples=" << report.triples
         << " mismatches=" << report.mismatches << "\n";
    report.text = text.str();
    return report;
}

} // namespace kron

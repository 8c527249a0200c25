#include "kron/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace kron {

namespace {

std::string join(const std::vector<int>& parts) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
}

std::vector<int> parse_integers(std::string_view text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
        int value = 0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        if (!token.empty() && token.front() == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc() || ptr != last)
            throw PartitionError(PartitionError::Kind::NonInteger,
                                 "not an integer: '" + std::string(token) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int v : parts_)
        if (v < 0) throw PartitionError(PartitionError::Kind::NegativePart, "negative part in " + join(parts_));
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1])
            throw PartitionError(PartitionError::Kind::NotWeaklyDecreasing,
                                 "parts not weakly decreasing: " + join(parts_));
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const { return join(parts_); }

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int v : parts_)
        if (v < 0) throw PartitionError(PartitionError::Kind::NegativePart, "negative part in " + join(parts_));
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::without_zeros() const {
    std::vector<int> out;
    std::copy_if(parts_.begin(), parts_.end(), std::back_inserter(out), [](int v) { return v != 0; });
    return Composition(std::move(out));
}

Partition Composition::sorted() const {
    std::vector<int> out = parts_;
    std::sort(out.begin(), out.end(), std::greater<>());
    return Partition(std::move(out));
}

bool Composition::has_zero_part() const {
    return std::find(parts_.begin(), parts_.end(), 0) != parts_.end();
}

std::string Composition::to_string() const { return join(parts_); }

std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.to_string(); }

Partition parse_partition(std::string_view text) { return Partition(parse_integers(text)); }

Composition parse_composition(std::string_view text) {
    std::vector<int> parts = parse_integers(text);
    for (int v : parts)
        if (v <= 0)
            throw PartitionError(PartitionError::Kind::NegativePart,
                                 "composition parts must be positive: " + join(parts));
    return Composition(std::move(parts));
}

bool dominance_geq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw PartitionError(PartitionError::Kind::SizeMismatch,
                             "dominance needs equal sizes: " + a.to_string() + " vs " + b.to_string());
    int sa = 0, sb = 0;
    const int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

Partition conjugate(const Partition& p) {
    std::vector<int> out(p.empty() ? 0 : p[0], 0);
    for (int part : p)
        for (int c = 0; c < part; ++c) ++out[c];
    return Partition(std::move(out));
}

Partition intersection(const Partition& a, const Partition& b) {
    std::vector<int> out(std::min(a.length(), b.length()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(a[i], b[i]);
    return Partition(std::move(out));
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw InvalidInput("partitions_of: negative size " + std::to_string(n));
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw InvalidInput("compositions_of: negative size " + std::to_string(n));
    std::vector<Composition> out;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            current.push_back(part);
            rec(remaining - part);
            current.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<Composition> reorderings(const Composition& c) {
    std::vector<int> parts = c.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

} // namespace kron

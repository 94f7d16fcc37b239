#include "qpart/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qpart {

long long Partition::weight() const {
    long long w = 0;
    for (const auto& [part, mult] : pairs) w += static_cast<long long>(part) * mult;
    return w;
}

int Partition::num_parts() const {
    int n = 0;
    for (const auto& [part, mult] : pairs) n += mult;
    return n;
}

int Partition::multiplicity(int part) const {
    for (const auto& [p, m] : pairs)
        if (p == part) return m;
    return 0;
}

bool Partition::all_distinct() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const auto& pm) { return pm.second == 1; });
}

Partition Partition::from_parts(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    Partition p;
    for (int v : parts) {
        if (v <= 0) throw std::invalid_argument("parts must be positive");
        if (!p.pairs.empty() && p.pairs.back().first == v)
            ++p.pairs.back().second;
        else
            p.pairs.emplace_back(v, 1);
    }
    return p;
}

std::string Partition::to_string() const {
    if (pairs.empty()) return "()";
    std::ostringstream os;
    bool first = true;
    for (const auto& [part, mult] : pairs) {
        if (!first) os << ',';
        os << part;
        if (mult > 1) os << '^' << mult;
        first = false;
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    if (text == "()" || text.empty()) return Partition{};
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        const auto caret = tok.find('^');
        int part = std::stoi(tok.substr(0, caret));
        int mult = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        if (mult < 1) throw std::invalid_argument("multiplicity must be >= 1");
        for (int i = 0; i < mult; ++i) parts.push_back(part);
    }
    return from_parts(std::move(parts));
}

bool Partition::reverse_lex_before(const Partition& other) const {
    // Compare (part, mult) pairs; on a shared part a higher multiplicity means
    // the flattened list continues with that (larger) value for longer.
    const size_t n = std::min(pairs.size(), other.pairs.size());
    for (size_t i = 0; i < n; ++i) {
        if (pairs[i].first != other.pairs[i].first)
            return pairs[i].first > other.pairs[i].first;
        if (pairs[i].second != other.pairs[i].second)
            return pairs[i].second > other.pairs[i].second;
    }
    return pairs.size() > other.pairs.size();
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                   const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        std::vector<int> parts = acc;
        fn(Partition::from_parts(std::move(parts)));
        return;
    }
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
        acc.push_back(v);
        enumerate_rec(remaining - v, v, acc, fn);
        acc.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    std::vector<int> acc;
    enumerate_rec(n, n == 0 ? 1 : n, acc, fn);
}

std::vector<Partition> enumerate_all(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

bool is_initial_k_repetition(const Partition& p, int k) {
    int largest_repeated = 0;
    for (const auto& [part, mult] : p.pairs)
        if (mult >= k) {
            largest_repeated = part;
            break;  // pairs are descending
        }
    for (int j = 1; j < largest_repeated; ++j)
        if (p.multiplicity(j) < k) return false;
    // Also forbid a part > largest_repeated with multiplicity >= k: impossible
    // by the choice of largest_repeated (descending scan).
    return true;
}

}  // namespace qpart

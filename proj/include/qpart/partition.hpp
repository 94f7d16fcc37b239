#ifndef QPART_PARTITION_HPP
#define QPART_PARTITION_HPP

#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qpart {

/// Integer partition in multiplicity form: (part, multiplicity) pairs with
/// parts strictly decreasing and multiplicities >= 1.
struct Partition {
    std::vector<std::pair<int, int>> pairs;

    long long weight() const;
    int num_parts() const;           // counting multiplicity
    int num_distinct_sizes() const { return static_cast<int>(pairs.size()); }
    int multiplicity(int part) const;
    bool all_distinct() const;

    // From a part list in any order; validates positivity.
    static Partition from_parts(std::vector<int> parts);

    // Text form: descending parts with ^ multiplicities, e.g. "9,5,4^4,2^4,1";
    // the empty partition prints as "()".
    std::string to_string() const;
    static Partition parse(const std::string& text);

    bool operator==(const Partition&) const = default;

    // Reverse-lexicographic order on flattened part lists: (7) before (6,1)
    // before (5,2) before (5,1,1) ...
    bool reverse_lex_before(const Partition& other) const;
};

// Every partition of n exactly once, in reverse-lexicographic order.
// n = 0 yields the single empty partition.
std::vector<Partition> enumerate_all(int n);
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

// True iff every part repeated at least k times forces all smaller positive
// integers to be repeated at least k times.
bool is_initial_k_repetition(const Partition& p, int k);

}  // namespace qpart

#endif

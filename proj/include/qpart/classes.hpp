#ifndef QPART_CLASSES_HPP
#define QPART_CLASSES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpart/partition.hpp"
#include "qpart/series.hpp"

namespace qpart {

enum class ClassKind {
    d_distinct,  // all parts distinct
    init_k,      // initial k-repetitions (k in ClassId::k)
    b_even,      // initial 2-repetitions, largest repeated part even (or none)
    b_odd,       // initial 2-repetitions, largest repeated part odd
    c1, c2, c3, c4, c5, c6, c7, c8,
};

struct ClassId {
    ClassKind kind;
    int k = 0;  // init_k only, k >= 2

    bool operator==(const ClassId&) const = default;
    std::string to_string() const;
    static ClassId parse(const std::string& text);  // "c4", "b-even", "init-2", ...
};

/// Canonical split of a class member: forced block (fixed multiplicities
/// determined by the parameter), free-multiplicity block, unsigned distinct
/// overlay, and the designated sign-carrying distinct block. The blocks sum
/// back to the partition; the signed statistic is the size of the signed block.
struct ClassDecomposition {
    ClassId cls;
    int parameter = 0;
    int signed_statistic = 0;
    Partition forced;
    Partition free_block;
    Partition overlay;       // distinct, not counted by the statistic
    Partition signed_block;  // distinct, counted by the statistic

    Partition reassemble() const;
};

// Membership predicate plus canonical decomposition; absent for non-members.
std::optional<ClassDecomposition> decompose(const Partition& p, ClassId cls);

// All parameters that admit a valid decomposition (uniqueness demands at most
// one; exposed so the test suite can assert that rather than mask it).
std::vector<ClassDecomposition> decompose_all(const Partition& p, ClassId cls);

// Every class member of weight <= max_weight exactly once, parameter-major.
std::vector<std::pair<Partition, ClassDecomposition>> generate_class(ClassId cls,
                                                                     int max_weight);

struct SignedCount {
    long long even_count = 0;
    long long odd_count = 0;
};

SignedCount signed_count(ClassId cls, int n);

// Per-weight counts 0..max_weight in one generator pass.
std::vector<SignedCount> signed_count_table(ClassId cls, int max_weight);

// Coefficient at q^n is even_count - odd_count at weight n.
TruncatedSeries signed_gf(ClassId cls, int order);

// Difference D_e(m,n) - D_o(m,n) over partitions of n with initial
// 2-repetitions, keyed by (m, n) with m the number of different part sizes and
// parity taken of the number of parts with multiplicity exactly one. Only
// nonzero cells are stored.
std::map<std::pair<int, int>, long long> andrews_D_table(int max_n);

// The rejected alternative parity statistic (number of different part sizes),
// kept so tests can document that it does not satisfy the predicted table.
std::map<std::pair<int, int>, long long> andrews_D_table_distinct_sizes_reading(int max_n);

}  // namespace qpart

#endif

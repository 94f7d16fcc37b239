#include "qpart/classes.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <stdexcept>

namespace qpart {

namespace {

constexpr int kUnbounded = INT_MAX;

// Arithmetic-progression part set: first, first+step, ... up to last
// (kUnbounded = no upper limit; last < first = empty set).
struct APSet {
    int first = 1;
    int step = 1;
    int last = kUnbounded;

    bool contains(int v) const {
        return v >= first && (last == kUnbounded || v <= last) && (v - first) % step == 0;
    }
    bool empty() const { return last != kUnbounded && last < first; }
};

// Structural definition of one class at one parameter value: a forced block
// with fixed multiplicities, free-multiplicity sets, unsigned distinct
// overlays, and the sign-carrying distinct sets.
struct ClassShape {
    std::vector<std::pair<int, int>> forced;  // ascending (part, multiplicity)
    std::vector<APSet> free_sets;
    std::vector<APSet> overlay_sets;
    std::vector<APSet> signed_sets;
    // When set, parts drawn from the free sets also flip the sign, one flip
    // per part counted with multiplicity (needed by c7, where the alternating
    // support only emerges once the unrestricted odd tail carries sign too).
    bool free_parts_signed = false;
};

long long forced_weight(const ClassShape& s) {
    long long w = 0;
    for (const auto& [part, mult] : s.forced) w += static_cast<long long>(part) * mult;
    return w;
}

bool shaped_class(ClassId cls) {
    return !(cls.kind == ClassKind::init_k && cls.k != 2);
}

int first_parameter(ClassKind kind) { return kind == ClassKind::b_odd ? 1 : 0; }

bool has_higher_parameters(ClassKind kind) {
    return kind != ClassKind::d_distinct;
}

ClassShape shape_for(ClassId cls, int j) {
    ClassShape s;
    auto run = [&](int lo, int hi, int step, int mult) {
        for (int v = lo; v <= hi; v += step) s.forced.emplace_back(v, mult);
    };
    switch (cls.kind) {
        case ClassKind::d_distinct:
            s.signed_sets.push_back({1, 1, kUnbounded});
            break;
        case ClassKind::init_k:  // k == 2 here
            run(1, j, 1, 2);
            s.free_sets.push_back({1, 1, j});
            s.overlay_sets.push_back({j + 1, 1, kUnbounded});
            break;
        case ClassKind::b_even:
            run(1, 2 * j, 1, 2);
            s.free_sets.push_back({1, 1, 2 * j});
            s.overlay_sets.push_back({2 * j + 1, 1, kUnbounded});
            break;
        case ClassKind::b_odd:
            run(1, 2 * j - 1, 1, 2);
            s.free_sets.push_back({1, 1, 2 * j - 1});
            s.overlay_sets.push_back({2 * j, 1, kUnbounded});
            break;
        case ClassKind::c1:
        case ClassKind::c8:
            run(2, 2 * j, 2, 4);
            s.overlay_sets.push_back({1, 2, 4 * j + 1});
            s.signed_sets.push_back({8 * j + 8, 4, kUnbounded});
            break;
        case ClassKind::c2:
            run(2, 2 * j, 2, 2);
            s.free_sets.push_back({1, 2, 2 * j + 1});
            s.signed_sets.push_back({2 * j + 2, 2, kUnbounded});
            break;
        case ClassKind::c3:
            if (j >= 1) s.forced.emplace_back(2 * j + 1, j);
            s.free_sets.push_back({1, 2, 2 * j + 1});
            s.signed_sets.push_back({2 * j + 2, 2, kUnbounded});
            break;
        case ClassKind::c4:
            run(1, j, 1, 2);
            s.signed_sets.push_back({j + 1, 1, kUnbounded});
            break;
        case ClassKind::c5:
            run(1, j, 1, 2);
            s.overlay_sets.push_back({1, 2, kUnbounded});
            s.signed_sets.push_back({2 * j + 2, 2, kUnbounded});
            break;
        case ClassKind::c6:
            run(1, 2 * j - 1, 2, 4);
            s.overlay_sets.push_back({1, 2, 4 * j - 1});
            s.signed_sets.push_back({8 * j + 4, 4, kUnbounded});
            break;
        case ClassKind::c7:
            if (j >= 1) {
                run(1, j - 1, 1, 2);
                s.forced.emplace_back(j, 3);
            }
            s.overlay_sets.push_back({2, 4, 4 * j - 2});
            s.free_sets.push_back({2 * j + 3, 2, kUnbounded});
            s.signed_sets.push_back({4 * j + 4, 2, kUnbounded});
            s.free_parts_signed = true;
            break;
    }
    return s;
}

Partition partition_from_sorted(std::vector<std::pair<int, int>> ascending_pairs) {
    Partition p;
    for (auto it = ascending_pairs.rbegin(); it != ascending_pairs.rend(); ++it)
        if (it->second > 0) p.pairs.push_back(*it);
    return p;
}

// Predicate side: match a partition against a shape, recovering the blocks.
std::optional<ClassDecomposition> match_shape(const Partition& p, ClassId cls, int param,
                                              const ClassShape& shape) {
    ClassDecomposition d;
    d.cls = cls;
    d.parameter = param;

    std::vector<std::pair<int, int>> forced_asc, free_asc, overlay_asc, signed_asc;

    auto forced_mult = [&](int v) -> int {
        for (const auto& [part, mult] : shape.forced)
            if (part == v) return mult;
        return 0;
    };
    auto in_any = [](const std::vector<APSet>& sets, int v) {
        return std::any_of(sets.begin(), sets.end(), [v](const APSet& s) { return s.contains(v); });
    };

    // Union of part values occurring in the partition or forced by the shape.
    std::vector<int> values;
    for (const auto& [part, mult] : p.pairs) values.push_back(part);
    for (const auto& [part, mult] : shape.forced)
        if (p.multiplicity(part) == 0) values.push_back(part);

    for (int v : values) {
        const int m = p.multiplicity(v);
        const int base = forced_mult(v);
        const int extra = m - base;
        if (extra < 0) return std::nullopt;
        if (base > 0) forced_asc.emplace_back(v, base);
        if (extra == 0) continue;
        if (in_any(shape.free_sets, v)) {
            free_asc.emplace_back(v, extra);
        } else if (in_any(shape.overlay_sets, v)) {
            if (extra > 1) return std::nullopt;
            overlay_asc.emplace_back(v, 1);
        } else if (in_any(shape.signed_sets, v)) {
            if (extra > 1) return std::nullopt;
            signed_asc.emplace_back(v, 1);
        } else {
            return std::nullopt;
        }
    }

    auto asc = [](std::vector<std::pair<int, int>>& v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    d.forced = partition_from_sorted(asc(forced_asc));
    d.free_block = partition_from_sorted(asc(free_asc));
    d.overlay = partition_from_sorted(asc(overlay_asc));
    d.signed_block = partition_from_sorted(asc(signed_asc));
    d.signed_statistic = static_cast<int>(signed_asc.size());
    if (shape.free_parts_signed) d.signed_statistic += d.free_block.num_parts();
    return d;
}

using Emit = std::function<void(const Partition&, const ClassDecomposition&)>;

// Generator side: enumerate all completions of a shape up to the weight budget.
struct ShapeGenerator {
    ClassId cls;
    int param;
    const ClassShape& shape;
    const Emit& emit;

    std::vector<std::pair<int, int>> free_chosen, overlay_chosen, signed_chosen;

    void run(long long budget) {
        recurse_free(0, budget);
    }

    void recurse_free(size_t idx, long long rem) {
        if (idx == shape.free_sets.size()) {
            recurse_distinct(shape.overlay_sets, 0, -1, rem, /*is_signed=*/false);
            return;
        }
        free_multiset(shape.free_sets[idx], shape.free_sets[idx].first, rem, idx);
    }

    void free_multiset(const APSet& s, int v, long long rem, size_t idx) {
        if (s.empty() || v > rem || (s.last != kUnbounded && v > s.last)) {
            recurse_free(idx + 1, rem);
            return;
        }
        // multiplicity 0 for v, then 1, 2, ...
        free_multiset(s, v + s.step, rem, idx);
        long long used = 0;
        for (int mult = 1;; ++mult) {
            used += v;
            if (used > rem) break;
            free_chosen.emplace_back(v, mult);
            free_multiset(s, v + s.step, rem - used, idx);
            free_chosen.pop_back();
        }
    }

    // Walks overlay sets then signed sets; set_idx = -1 means advance to the
    // next set in the current family.
    void recurse_distinct(const std::vector<APSet>& sets, size_t set_idx, long long v,
                          long long rem, bool is_signed) {
        if (set_idx == sets.size()) {
            if (!is_signed) {
                recurse_distinct(shape.signed_sets, 0, -1, rem, /*is_signed=*/true);
            } else {
                finish();
            }
            return;
        }
        const APSet& s = sets[set_idx];
        if (v < 0) v = s.first;
        if (s.empty() || v > rem || (s.last != kUnbounded && v > s.last)) {
            recurse_distinct(sets, set_idx + 1, -1, rem, is_signed);
            return;
        }
        recurse_distinct(sets, set_idx, v + s.step, rem, is_signed);  // skip v
        auto& chosen = is_signed ? signed_chosen : overlay_chosen;
        chosen.emplace_back(static_cast<int>(v), 1);
        recurse_distinct(sets, set_idx, v + s.step, rem - v, is_signed);
        chosen.pop_back();
    }

    void finish() {
        ClassDecomposition d;
        d.cls = cls;
        d.parameter = param;
        d.signed_statistic = static_cast<int>(signed_chosen.size());
        if (shape.free_parts_signed)
            for (const auto& [part, m] : free_chosen) d.signed_statistic += m;

        auto asc = [](std::vector<std::pair<int, int>> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        d.forced = partition_from_sorted(shape.forced);
        d.free_block = partition_from_sorted(asc(free_chosen));
        d.overlay = partition_from_sorted(asc(overlay_chosen));
        d.signed_block = partition_from_sorted(asc(signed_chosen));

        // Merge the blocks into the member partition.
        std::map<int, int> mult;
        for (const auto& [part, m] : shape.forced) mult[part] += m;
        for (const auto& [part, m] : free_chosen) mult[part] += m;
        for (const auto& [part, m] : overlay_chosen) mult[part] += m;
        for (const auto& [part, m] : signed_chosen) mult[part] += m;
        Partition p;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it)
            p.pairs.emplace_back(it->first, it->second);
        emit(p, d);
    }
};

void generate_shaped(ClassId cls, int max_weight, const Emit& emit) {
    for (int param = first_parameter(cls.kind);; ++param) {
        const ClassShape shape = shape_for(cls, param);
        const long long fw = forced_weight(shape);
        if (fw > max_weight) break;
        ShapeGenerator gen{cls, param, shape, emit};
        gen.run(max_weight - fw);
        if (!has_higher_parameters(cls.kind)) break;
    }
}

// init-k for k > 2 has a mixed-multiplicity tail block that the shape
// machinery does not model; membership is checked directly.
std::optional<ClassDecomposition> decompose_init_k(const Partition& p, ClassId cls) {
    if (!is_initial_k_repetition(p, cls.k)) return std::nullopt;
    ClassDecomposition d;
    d.cls = cls;
    for (const auto& [part, mult] : p.pairs)
        if (mult >= cls.k) {
            d.parameter = part;
            break;
        }
    std::vector<std::pair<int, int>> forced_asc, free_asc;
    for (const auto& [part, mult] : p.pairs) {
        if (part <= d.parameter) {
            forced_asc.emplace_back(part, cls.k);
            if (mult > cls.k) free_asc.emplace_back(part, mult - cls.k);
        } else {
            free_asc.emplace_back(part, mult);
        }
    }
    std::sort(forced_asc.begin(), forced_asc.end());
    std::sort(free_asc.begin(), free_asc.end());
    d.forced = partition_from_sorted(forced_asc);
    d.free_block = partition_from_sorted(free_asc);
    return d;
}

}  // namespace

Partition ClassDecomposition::reassemble() const {
    std::map<int, int> mult;
    for (const Partition* block : {&forced, &free_block, &overlay, &signed_block})
        for (const auto& [part, m] : block->pairs) mult[part] += m;
    Partition p;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it)
        p.pairs.emplace_back(it->first, it->second);
    return p;
}

std::vector<ClassDecomposition> decompose_all(const Partition& p, ClassId cls) {
    std::vector<ClassDecomposition> out;
    if (!shaped_class(cls)) {
        if (auto d = decompose_init_k(p, cls)) out.push_back(*d);
        return out;
    }
    const long long w = p.weight();
    for (int param = first_parameter(cls.kind);; ++param) {
        const ClassShape shape = shape_for(cls, param);
        if (forced_weight(shape) > w) break;
        if (auto d = match_shape(p, cls, param, shape)) out.push_back(*d);
        if (!has_higher_parameters(cls.kind)) break;
    }
    return out;
}

std::optional<ClassDecomposition> decompose(const Partition& p, ClassId cls) {
    auto all = decompose_all(p, cls);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::vector<std::pair<Partition, ClassDecomposition>> generate_class(ClassId cls,
                                                                     int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    std::vector<std::pair<Partition, ClassDecomposition>> out;
    if (!shaped_class(cls)) {
        for (int n = 0; n <= max_weight; ++n)
            for_each_partition(n, [&](const Partition& p) {
                if (auto d = decompose_init_k(p, cls)) out.emplace_back(p, *d);
            });
        return out;
    }
    generate_shaped(cls, max_weight, [&](const Partition& p, const ClassDecomposition& d) {
        out.emplace_back(p, d);
    });
    return out;
}

SignedCount signed_count(ClassId cls, int n) {
    SignedCount sc;
    for (const auto& [p, d] : generate_class(cls, n)) {
        if (p.weight() != n) continue;
        if (d.signed_statistic % 2 == 0)
            ++sc.even_count;
        else
            ++sc.odd_count;
    }
    return sc;
}

std::vector<SignedCount> signed_count_table(ClassId cls, int max_weight) {
    std::vector<SignedCount> table(static_cast<size_t>(max_weight) + 1);
    for (const auto& [p, d] : generate_class(cls, max_weight)) {
        auto& sc = table[static_cast<size_t>(p.weight())];
        if (d.signed_statistic % 2 == 0)
            ++sc.even_count;
        else
            ++sc.odd_count;
    }
    return table;
}

TruncatedSeries signed_gf(ClassId cls, int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    auto table = signed_count_table(cls, order - 1);
    std::vector<std::pair<int, Coeff>> terms;
    for (int n = 0; n < order; ++n) {
        const long long diff = table[static_cast<size_t>(n)].even_count -
                               table[static_cast<size_t>(n)].odd_count;
        if (diff != 0) terms.emplace_back(n, Coeff(static_cast<long>(diff)));
    }
    return TruncatedSeries::make(order, terms);
}

namespace {

std::map<std::pair<int, int>, long long> andrews_table_impl(int max_n, bool mult_one_reading) {
    std::map<std::pair<int, int>, long long> table;
    for (int n = 0; n <= max_n; ++n)
        for_each_partition(n, [&](const Partition& p) {
            if (!is_initial_k_repetition(p, 2)) return;
            const int m = p.num_distinct_sizes();
            int stat = 0;
            if (mult_one_reading) {
                for (const auto& [part, mult] : p.pairs)
                    if (mult == 1) ++stat;
            } else {
                stat = m;
            }
            table[{m, n}] += (stat % 2 == 0) ? 1 : -1;
        });
    std::erase_if(table, [](const auto& kv) { return kv.second == 0; });
    return table;
}

}  // namespace

std::map<std::pair<int, int>, long long> andrews_D_table(int max_n) {
    return andrews_table_impl(max_n, /*mult_one_reading=*/true);
}

std::map<std::pair<int, int>, long long> andrews_D_table_distinct_sizes_reading(int max_n) {
    return andrews_table_impl(max_n, /*mult_one_reading=*/false);
}

std::string ClassId::to_string() const {
    switch (kind) {
        case ClassKind::d_distinct: return "d-distinct";
        case ClassKind::init_k: return "init-" + std::to_string(k);
        case ClassKind::b_even: return "b-even";
        case ClassKind::b_odd: return "b-odd";
        case ClassKind::c1: return "c1";
        case ClassKind::c2: return "c2";
        case ClassKind::c3: return "c3";
        case ClassKind::c4: return "c4";
        case ClassKind::c5: return "c5";
        case ClassKind::c6: return "c6";
        case ClassKind::c7: return "c7";
        case ClassKind::c8: return "c8";
    }
    return "?";
}

ClassId ClassId::parse(const std::string& text) {
    if (text == "d-distinct") return {ClassKind::d_distinct};
    if (text == "b-even") return {ClassKind::b_even};
    if (text == "b-odd") return {ClassKind::b_odd};
    if (text.rfind("init-", 0) == 0) {
        int k = std::stoi(text.substr(5));
        if (k < 2) throw std::invalid_argument("init-k requires k >= 2");
        return {ClassKind::init_k, k};
    }
    if (text.size() == 2 && text[0] == 'c' && text[1] >= '1' && text[1] <= '8') {
        static constexpr ClassKind kinds[] = {ClassKind::c1, ClassKind::c2, ClassKind::c3,
                                              ClassKind::c4, ClassKind::c5, ClassKind::c6,
                                              ClassKind::c7, ClassKind::c8};
        return {kinds[text[1] - '1']};
    }
    throw std::invalid_argument("unknown class id '" + text + "'");
}

}  // namespace qpart

#include "dts/known_bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace dts::tables {

namespace {

// Best published upper bounds on m(n, k) with the prior record each one
// improved on (prior records due to Chen). Sorted by (n, k).
constexpr KnownBoundEntry kEntries[] = {
    {2, 8, 100, 102, "Chen"},
    {3, 6, 117, 122, "Chen"},
    {3, 7, 126, 127, "Chen"},
    {3, 8, 163, 166, "Chen"},
    {4, 6, 146, 162, "Chen"},
    {4, 7, 164, 169, "Chen"},
    {5, 5, 110, 111, "Chen"},
    {5, 6, 172, 192, "Chen"},
    {5, 7, 206, 224, "Chen"},
    {5, 8, 346, 353, "Chen"},
    {6, 5, 130, 140, "Chen"},
    {6, 6, 198, 208, "Chen"},
    {6, 7, 249, 263, "Chen"},
    {7, 5, 145, 170, "Chen"},
    {7, 6, 225, 245, "Chen"},
    {7, 7, 327, 360, "Chen"},
    {8, 5, 170, 185, "Chen"},
    {8, 6, 251, 306, "Chen"},
    {8, 7, 368, 376, "Chen"},
    {8, 8, 518, 528, "Chen"},
    {9, 5, 186, 213, "Chen"},
    {9, 6, 277, 312, "Chen"},
    {9, 7, 415, 425, "Chen"},
    {10, 5, 204, 214, "Chen"},
    {10, 6, 314, 356, "Chen"},
    {10, 7, 438, 439, "Chen"},
    {11, 4, 123, 144, "Chen"},
    {11, 5, 222, 254, "Chen"},
    {11, 6, 340, 403, "Chen"},
    {12, 4, 133, 159, "Chen"},
    {12, 5, 234, 258, "Chen"},
    {12, 6, 366, 443, "Chen"},
    {13, 4, 146, 160, "Chen"},
    {13, 5, 259, 288, "Chen"},
    {13, 6, 393, 496, "Chen"},
    {13, 8, 797, 834, "Chen"},
    {13, 9, 1046, 1097, "Chen"},
    {13, 10, 1362, 1435, "Chen"},
    {14, 4, 156, 161, "Chen"},
    {14, 5, 275, 321, "Chen"},
    {14, 6, 432, 535, "Chen"},
    {14, 8, 845, 849, "Chen"},
    {14, 9, 1088, 1121, "Chen"},
    {14, 10, 1415, 1544, "Chen"},
    {15, 12, 2234, 2237, "Chen"},
};

const char* status_text(CompareStatus s) {
    switch (s) {
        case CompareStatus::MatchedPublished: return "matched published";
        case CompareStatus::AbovePublished: return "above published";
        case CompareStatus::ImprovedOnPublished: return "improved on published";
    }
    return "?";
}

}  // namespace

std::span<const KnownBoundEntry> known_upper_bounds() { return kEntries; }

const KnownBoundEntry* find_known_bound(int n, int k) {
    for (const auto& e : kEntries)
        if (e.n == n && e.k == k) return &e;
    return nullptr;
}

std::vector<ComparisonRow> compare_with_known(
    const std::vector<std::pair<std::pair<int, int>, Value>>& local_results) {
    std::vector<ComparisonRow> rows;
    for (const auto& [nk, scope] : local_results) {
        const KnownBoundEntry* e = find_known_bound(nk.first, nk.second);
        if (!e) continue;
        ComparisonRow row;
        row.entry = *e;
        row.local = scope;
        row.status = scope == e->improved ? CompareStatus::MatchedPublished
                     : scope > e->improved ? CompareStatus::AbovePublished
                                           : CompareStatus::ImprovedOnPublished;
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
        return std::pair(a.entry.n, a.entry.k) < std::pair(b.entry.n, b.entry.k);
    });
    return rows;
}

std::string format_comparison(const std::vector<ComparisonRow>& rows) {
    std::ostringstream out;
    out << "  n   k   local  published  prior   status\n";
    for (const auto& r : rows) {
        out << std::setw(3) << r.entry.n << ' ' << std::setw(3) << r.entry.k << ' ' << std::setw(7)
            << r.local << ' ' << std::setw(10) << r.entry.improved << ' ' << std::setw(6)
            << r.entry.previous << "   " << status_text(r.status);
        if (r.local > r.entry.improved) out << " (+" << (r.local - r.entry.improved) << ")";
        out << '\n';
    }
    return out.str();
}

std::string format_catalog() {
    std::ostringstream out;
    out << "  n   k   bound  prior  prior source\n";
    for (const auto& e : kEntries)
        out << std::setw(3) << e.n << ' ' << std::setw(3) << e.k << ' ' << std::setw(7) << e.improved
            << ' ' << std::setw(6) << e.previous << "  " << e.previous_source << '\n';
    return out.str();
}

}  // namespace dts::tables

#pragma once

// Integer-scaled unit-square visibility: coordinates in units of 1/side,
// squares occupy [x, x+side] x [y, y+side]. Same band semantics as the
// Rational engine; used where exact integer arithmetic is faster.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace urv::detail {

struct IPoint {
    long long x = 0;
    long long y = 0;
};

inline bool idisjoint(const IPoint& a, const IPoint& b, long long side) {
    return std::llabs(a.x - b.x) >= side || std::llabs(a.y - b.y) >= side;
}

inline bool ivisible(const std::vector<IPoint>& pts, int i, int j, bool horiz, long long side) {
    auto main_of = [&](int t) { return horiz ? pts[t].x : pts[t].y; };
    auto cross_of = [&](int t) { return horiz ? pts[t].y : pts[t].x; };
    int lo = i, hi = j;
    if (main_of(hi) < main_of(lo)) std::swap(lo, hi);
    if (main_of(hi) < main_of(lo) + side) return false;
    long long wlo = std::max(cross_of(lo), cross_of(hi));
    long long whi = std::min(cross_of(lo), cross_of(hi)) + side;
    if (wlo >= whi) return false;
    thread_local std::vector<long long> starts;
    starts.clear();
    for (int t = 0; t < static_cast<int>(pts.size()); ++t) {
        if (t == i || t == j) continue;
        if (main_of(lo) < main_of(t) && main_of(t) < main_of(hi)) starts.push_back(cross_of(t));
    }
    std::sort(starts.begin(), starts.end());
    long long covered = wlo;
    for (long long s : starts) {
        if (covered >= whi) break;
        if (s > covered) break;
        covered = std::max(covered, s + side);
    }
    return covered < whi;
}

inline bool iadjacent(const std::vector<IPoint>& pts, int i, int j, long long side) {
    return ivisible(pts, i, j, true, side) || ivisible(pts, i, j, false, side);
}

} // namespace urv::detail

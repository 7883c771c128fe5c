#include "psba/piecewise.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace psba {

namespace {
using Wide = __int128;
}

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Point> points) : pts_(std::move(points)) {
    for (std::size_t k = 1; k < pts_.size(); ++k)
        if (pts_[k - 1].x >= pts_[k].x)
            throw std::invalid_argument("breakpoint x values must strictly increase");
}

Slot PiecewiseLinearFn::operator()(Slot x) const {
    if (empty() || x < first_x() || x > last_x())
        throw std::out_of_range("evaluation outside the function domain");
    auto it = std::lower_bound(pts_.begin(), pts_.end(), x,
                               [](const Point& p, Slot v) { return p.x < v; });
    if (it->x == x) return it->y;
    const Point& hi = *it;
    const Point& lo = *(it - 1);
    Wide num = static_cast<Wide>(hi.y - lo.y) * (x - lo.x);
    Wide den = hi.x - lo.x;
    assert(num % den == 0); // integral by construction
    return static_cast<Slot>(lo.y + num / den);
}

std::pair<Slot, Slot> PiecewiseLinearFn::max_on(SlotRun range) const {
    if (range.empty() || empty() || range.first < first_x() || range.last > last_x())
        throw std::out_of_range("range outside the function domain");
    Slot best_x = range.first;
    Slot best_y = (*this)(range.first);
    for (const Point& p : pts_) {
        if (p.x <= range.first) continue;
        if (p.x >= range.last) break;
        if (p.y > best_y) {
            best_x = p.x;
            best_y = p.y;
        }
    }
    if (range.last > range.first) {
        Slot y = (*this)(range.last);
        if (y > best_y) {
            best_x = range.last;
            best_y = y;
        }
    }
    return {best_x, best_y};
}

void PiecewiseLinearFn::append_piece(const PiecewiseLinearFn& piece) {
    if (piece.empty()) return;
    if (empty()) {
        pts_ = piece.pts_;
        return;
    }
    if (piece.first_x() != last_x() + 1)
        throw std::invalid_argument("glued piece must start right after the current domain");
    pts_.insert(pts_.end(), piece.pts_.begin(), piece.pts_.end());
}

PiecewiseLinearFn PiecewiseLinearFn::sum(const std::vector<PiecewiseLinearFn>& fns) {
    if (fns.empty()) throw std::invalid_argument("sum of zero functions has no domain");
    for (const PiecewiseLinearFn& f : fns)
        if (f.empty() || f.first_x() != fns.front().first_x() || f.last_x() != fns.front().last_x())
            throw std::invalid_argument("summands must share one domain");

    std::vector<Slot> xs;
    for (const PiecewiseLinearFn& f : fns)
        for (const Point& p : f.pts_) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Point> out(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) out[k] = {xs[k], 0};
    for (const PiecewiseLinearFn& f : fns) {
        std::size_t piece = 0; // sweep: xs is sorted, so each piece is found once
        for (std::size_t k = 0; k < xs.size(); ++k) {
            while (piece + 1 < f.pts_.size() && f.pts_[piece + 1].x <= xs[k]) ++piece;
            const Point& lo = f.pts_[piece];
            if (lo.x == xs[k]) {
                out[k].y += lo.y;
            } else {
                const Point& hi = f.pts_[piece + 1];
                Wide num = static_cast<Wide>(hi.y - lo.y) * (xs[k] - lo.x);
                Wide den = hi.x - lo.x;
                assert(num % den == 0);
                out[k].y += static_cast<Slot>(lo.y + num / den);
            }
        }
    }
    return PiecewiseLinearFn(std::move(out));
}

PiecewiseLinearFn overlap_fn(SlotRun interval, Slot event_length, SlotRun domain) {
    if (interval.empty() || domain.empty() || event_length < 1)
        throw std::invalid_argument("overlap_fn needs a non-empty interval, domain, and length");

    // Exact overlap of {t, ..., t+l-1} with the interval; wide intermediates
    // because t + l - 1 may exceed the int64 range during probing.
    auto h = [&](Wide t) -> Slot {
        Wide hi = std::min<Wide>(interval.last, t + event_length - 1);
        Wide lo = std::max<Wide>(interval.first, t);
        return hi < lo ? 0 : static_cast<Slot>(hi - lo + 1);
    };

    // Kinks: first touch, plateau edges, first clear position.
    Wide k1 = static_cast<Wide>(interval.first) - event_length;
    Wide k2 = std::min<Wide>(interval.first, static_cast<Wide>(interval.last) + 1 - event_length);
    Wide k3 = std::max<Wide>(interval.first, static_cast<Wide>(interval.last) + 1 - event_length);
    Wide k4 = static_cast<Wide>(interval.last) + 1;

    std::vector<Slot> xs{domain.first};
    for (Wide k : {k1, k2, k3, k4})
        if (k > domain.first && k < domain.last) xs.push_back(static_cast<Slot>(k));
    if (domain.last > domain.first) xs.push_back(domain.last);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<PiecewiseLinearFn::Point> pts;
    pts.reserve(xs.size());
    for (Slot x : xs) pts.push_back({x, h(x)});
    return PiecewiseLinearFn(std::move(pts));
}

} // namespace psba

#pragma once

#include <utility>
#include <vector>

#include "psba/types.hpp"

namespace psba {

// Piecewise-linear function over a contiguous integer domain, stored as
// breakpoints with exact values. Invariants:
//   - breakpoint x values strictly increase;
//   - between consecutive breakpoints the function is linear, and the
//     interpolated value at every interior integer is itself an integer
//     (construction keeps slopes integral, or breakpoints at adjacent
//     integers when a kink falls between them).
// Evaluation uses 128-bit intermediates so timeline-sized x never overflows.
class PiecewiseLinearFn {
public:
    struct Point {
        Slot x;
        Slot y;
        friend bool operator==(const Point&, const Point&) = default;
    };

    PiecewiseLinearFn() = default;
    explicit PiecewiseLinearFn(std::vector<Point> points);

    bool empty() const { return pts_.empty(); }
    Slot first_x() const { return pts_.front().x; }
    Slot last_x() const { return pts_.back().x; }
    const std::vector<Point>& points() const { return pts_; }

    // x must lie inside the domain.
    Slot operator()(Slot x) const;

    // Maximum over the integers of `range` (within the domain); ties resolve
    // to the smallest argmax. Returns (argmax, value).
    std::pair<Slot, Slot> max_on(SlotRun range) const;

    // Concatenates a piece whose domain starts right after this one ends.
    // The boundary pair of breakpoints sits on adjacent integers, so no
    // interpolation ever spans the seam.
    void append_piece(const PiecewiseLinearFn& piece);

    // Pointwise sum; all summands must share one domain. Breakpoints of the
    // result are a subset of the union of the summands' breakpoints.
    static PiecewiseLinearFn sum(const std::vector<PiecewiseLinearFn>& fns);

private:
    std::vector<Point> pts_;
};

// Number of slots the event span {t, ..., t+event_length-1} shares with
// `interval`, as a function of t restricted to `domain`: a trapezoid rising
// from the first touching position to a plateau of min(event_length, width)
// and falling back to zero. Both ends clip exactly to the domain.
PiecewiseLinearFn overlap_fn(SlotRun interval, Slot event_length, SlotRun domain);

} // namespace psba

#include "lightchaos/interval_union.hpp"

#include <algorithm>
#include <stdexcept>

namespace lightchaos {

int endpoint_cmp(const Endpoint& a, const Endpoint& b) {
    auto rank = [](const Endpoint& e) {
        switch (e.kind) {
            case Endpoint::Kind::NegInf: return -1;
            case Endpoint::Kind::Finite: return 0;
            case Endpoint::Kind::PosInf: return 1;
        }
        return 0;
    };
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb ? -1 : 1;
    if (ra != 0) return 0;
    if (a.value < b.value) return -1;
    if (a.value > b.value) return 1;
    return 0;
}

bool Interval::empty() const {
    int c = endpoint_cmp(lo, hi);
    if (c > 0) return true;
    if (c == 0) {
        if (!lo.finite()) return true;  // degenerate at infinity
        return !(lo_closed && hi_closed);
    }
    return false;
}

bool Interval::degenerate() const {
    return !empty() && endpoint_cmp(lo, hi) == 0;
}

bool Interval::contains(const Rational& x) const {
    if (empty()) return false;
    Endpoint p = Endpoint::at(x);
    int cl = endpoint_cmp(lo, p);
    int ch = endpoint_cmp(p, hi);
    if (cl > 0 || ch > 0) return false;
    if (cl == 0 && !lo_closed) return false;
    if (ch == 0 && !hi_closed) return false;
    return true;
}

std::string Interval::str() const {
    std::string s = lo_closed ? "[" : "(";
    s += lo.finite() ? rat_str(lo.value) : "-inf";
    s += ", ";
    s += hi.finite() ? rat_str(hi.value) : "+inf";
    s += hi_closed ? "]" : ")";
    return s;
}

std::optional<Interval> interval_intersection(const Interval& a, const Interval& b) {
    if (a.empty() || b.empty()) return std::nullopt;
    Interval r;
    int cl = endpoint_cmp(a.lo, b.lo);
    if (cl > 0) {
        r.lo = a.lo;
        r.lo_closed = a.lo_closed;
    } else if (cl < 0) {
        r.lo = b.lo;
        r.lo_closed = b.lo_closed;
    } else {
        r.lo = a.lo;
        r.lo_closed = a.lo_closed && b.lo_closed;
    }
    int ch = endpoint_cmp(a.hi, b.hi);
    if (ch < 0) {
        r.hi = a.hi;
        r.hi_closed = a.hi_closed;
    } else if (ch > 0) {
        r.hi = b.hi;
        r.hi_closed = b.hi_closed;
    } else {
        r.hi = a.hi;
        r.hi_closed = a.hi_closed && b.hi_closed;
    }
    if (r.empty()) return std::nullopt;
    return r;
}

namespace {

// Can a and b (a.lo <= b.lo) be merged into one interval?
bool mergeable(const Interval& a, const Interval& b) {
    int c = endpoint_cmp(a.hi, b.lo);
    if (c > 0) return true;
    if (c == 0) return a.hi_closed || b.lo_closed;
    return false;
}

Interval merge(const Interval& a, const Interval& b) {
    Interval r = a;
    int ch = endpoint_cmp(a.hi, b.hi);
    if (ch < 0) {
        r.hi = b.hi;
        r.hi_closed = b.hi_closed;
    } else if (ch == 0) {
        r.hi_closed = a.hi_closed || b.hi_closed;
    }
    int cl = endpoint_cmp(a.lo, b.lo);
    if (cl == 0) r.lo_closed = a.lo_closed || b.lo_closed;
    return r;
}

}  // namespace

void IntervalUnion::normalize() {
    if (!dirty_) return;
    dirty_ = false;
    std::vector<Interval> in;
    in.swap(parts_);
    std::erase_if(in, [](const Interval& iv) { return iv.empty(); });
    std::sort(in.begin(), in.end(), [](const Interval& a, const Interval& b) {
        int c = endpoint_cmp(a.lo, b.lo);
        if (c != 0) return c < 0;
        if (a.lo_closed != b.lo_closed) return a.lo_closed;
        return endpoint_cmp(a.hi, b.hi) < 0;
    });
    for (auto& iv : in) {
        if (!parts_.empty() && mergeable(parts_.back(), iv))
            parts_.back() = merge(parts_.back(), iv);
        else
            parts_.push_back(iv);
    }
}

bool IntervalUnion::contains(const Rational& x) const {
    for (const auto& iv : parts())
        if (iv.contains(x)) return true;
    return false;
}

bool IntervalUnion::meets(const IntervalUnion& other) const {
    const auto& a = parts();
    const auto& b = other.parts();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (interval_intersection(a[i], b[j])) return true;
        if (endpoint_cmp(a[i].hi, b[j].hi) <= 0)
            ++i;
        else
            ++j;
    }
    return false;
}

bool IntervalUnion::subset_of(const IntervalUnion& other) const {
    // After normalization a connected part that is covered must fit inside a
    // single part of the other union (gaps contain at least one point).
    for (const auto& iv : parts()) {
        bool covered = false;
        for (const auto& jv : other.parts()) {
            int cl = endpoint_cmp(jv.lo, iv.lo);
            int ch = endpoint_cmp(iv.hi, jv.hi);
            bool lo_ok = cl < 0 || (cl == 0 && (jv.lo_closed || !iv.lo_closed));
            bool hi_ok = ch < 0 || (ch == 0 && (jv.hi_closed || !iv.hi_closed));
            if (lo_ok && hi_ok) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
    IntervalUnion r;
    for (const auto& iv : parts()) r.push(iv);
    for (const auto& iv : other.parts()) r.push(iv);
    return r;
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
    IntervalUnion r;
    for (const auto& a : parts())
        for (const auto& b : other.parts())
            if (auto iv = interval_intersection(a, b)) r.push(*iv);
    return r;
}

IntervalUnion IntervalUnion::complement_within(const Interval& domain) const {
    IntervalUnion clipped = intersect(IntervalUnion(domain));
    IntervalUnion r;
    Endpoint cursor = domain.lo;
    bool cursor_closed = domain.lo_closed;
    for (const auto& iv : clipped.parts()) {
        Interval gap{cursor, iv.lo, cursor_closed, !iv.lo_closed};
        r.push(gap);
        cursor = iv.hi;
        cursor_closed = !iv.hi_closed;
    }
    r.push(Interval{cursor, domain.hi, cursor_closed, domain.hi_closed});
    return r;
}

bool IntervalUnion::operator==(const IntervalUnion& other) const {
    const auto& a = parts();
    const auto& b = other.parts();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (endpoint_cmp(a[i].lo, b[i].lo) != 0 || endpoint_cmp(a[i].hi, b[i].hi) != 0)
            return false;
        if (a[i].lo.finite() && a[i].lo_closed != b[i].lo_closed) return false;
        if (a[i].hi.finite() && a[i].hi_closed != b[i].hi_closed) return false;
    }
    return true;
}

std::optional<Rational> IntervalUnion::diameter() const {
    const auto& p = parts();
    if (p.empty()) return Rational(0);
    if (!p.front().lo.finite() || !p.back().hi.finite()) return std::nullopt;
    return p.back().hi.value - p.front().lo.value;
}

Rational IntervalUnion::representative() const {
    const auto& p = parts();
    if (p.empty()) throw std::domain_error("representative of empty region");
    const Interval& iv = p.front();
    if (iv.lo.finite() && iv.hi.finite()) {
        if (iv.degenerate()) return iv.lo.value;
        return (iv.lo.value + iv.hi.value) / 2;
    }
    if (iv.lo.finite()) return iv.lo.value + 1;
    if (iv.hi.finite()) return iv.hi.value - 1;
    return 0;
}

std::string IntervalUnion::str() const {
    const auto& p = parts();
    if (p.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += " u ";
        s += p[i].str();
    }
    return s;
}

}  // namespace lightchaos

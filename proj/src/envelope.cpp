#include "lightchaos/envelope.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lightchaos {

namespace {

constexpr std::size_t kEagerKnotBudget = 1u << 12;

std::string const_label(const PhasePoint& x) { return "const " + x.str(); }

const PhaseSpace& base_space(const EnvelopeSystem& env) { return env.base.space; }

Rational domain_lo(const EnvelopeSystem& env) { return base_space(env).lo; }
Rational domain_hi(const EnvelopeSystem& env) { return base_space(env).hi; }

}  // namespace

FunctionElement FunctionElement::constant(PhasePoint x) {
    FunctionElement e;
    e.kind = Kind::Constant;
    e.constant_value = std::move(x);
    e.label = const_label(e.constant_value);
    return e;
}

FunctionElement FunctionElement::pl(PLMap m, std::string label) {
    FunctionElement e;
    e.kind = Kind::PL;
    e.graph = std::move(m);
    e.label = label.empty() ? e.graph.str() : std::move(label);
    return e;
}

FunctionElement FunctionElement::circle_lift(PLMap lift, long long irr_mult, std::string label) {
    FunctionElement e;
    e.kind = Kind::CircleLift;
    e.graph = std::move(lift);
    e.lift_irr_mult = irr_mult;
    e.label = label.empty() ? "lift " + e.graph.str() : std::move(label);
    return e;
}

FunctionElement constant_embedding(const PhasePoint& x) { return FunctionElement::constant(x); }

FunctionElement apply_envelope(const EnvelopeSystem& env, const FunctionElement& g) {
    const CatalogMap& f = env.base.map;
    switch (g.kind) {
        case FunctionElement::Kind::Constant:
            return FunctionElement::constant(map_eval(f, g.constant_value));
        case FunctionElement::Kind::PL: {
            if (f.tag == CatalogMap::Tag::Piecewise) {
                try {
                    PLMap composed = pl_compose(f.pl, g.graph, kEagerKnotBudget);
                    return FunctionElement::pl(std::move(composed), "f o " + g.label);
                } catch (const std::length_error&) {
                    // fall through to the lazy form
                }
            }
            FunctionElement e;
            e.kind = FunctionElement::Kind::Iterated;
            e.base = std::make_shared<FunctionElement>(g);
            e.power = 1;
            e.label = "F^1(" + g.label + ")";
            return e;
        }
        case FunctionElement::Kind::Iterated: {
            FunctionElement e = g;
            e.power += 1;
            e.label = "F^" + std::to_string(e.power) + "(" + e.base->label + ")";
            return e;
        }
        case FunctionElement::Kind::CircleLift: {
            if (f.tag != CatalogMap::Tag::CircleRotation)
                throw std::domain_error("circle lifts require a rotation base map");
            FunctionElement e = g;
            if (f.rotation_irr != IrrationalMark::None) {
                e.lift_irr_mult += 1;
            } else {
                std::vector<PLMap::Knot> knots = e.graph.knots();
                for (auto& kn : knots) kn.second += f.rotation_angle;
                e.graph = PLMap(std::move(knots));
            }
            e.label = "F(" + g.label + ")";
            return e;
        }
    }
    throw std::logic_error("apply_envelope: unknown element kind");
}

FunctionElement apply_envelope_k(const EnvelopeSystem& env, const FunctionElement& g, unsigned k) {
    FunctionElement cur = g;
    for (unsigned i = 0; i < k; ++i) cur = apply_envelope(env, cur);
    return cur;
}

Rational eval_element(const EnvelopeSystem& env, const FunctionElement& g, const Rational& x) {
    switch (g.kind) {
        case FunctionElement::Kind::Constant:
            if (g.constant_value.kind != PhasePoint::Kind::Real || !g.constant_value.real.is_exact)
                throw std::domain_error("eval_element: constant is not an exact real point");
            return g.constant_value.real.exact;
        case FunctionElement::Kind::PL:
            return g.graph.eval(x);
        case FunctionElement::Kind::Iterated: {
            Rational base_val = eval_element(env, *g.base, x);
            PhasePoint p =
                iterate_eval(env.base.map, g.power, PhasePoint::real_exact(std::move(base_val)));
            return p.real.exact;
        }
        case FunctionElement::Kind::CircleLift:
            if (g.lift_irr_mult != 0)
                throw std::domain_error("eval_element: symbolic irrational lift");
            return g.graph.eval(x);
    }
    throw std::logic_error("eval_element: unknown element kind");
}

IntervalUnion element_image(const EnvelopeSystem& env, const FunctionElement& g) {
    switch (g.kind) {
        case FunctionElement::Kind::Constant: {
            Rational v = g.constant_value.real.exact;
            return IntervalUnion(Interval::point(v));
        }
        case FunctionElement::Kind::PL:
            return g.graph.image_of_domain();
        case FunctionElement::Kind::Iterated:
            return forward_image_k(env.base.map, element_image(env, *g.base), g.power);
        case FunctionElement::Kind::CircleLift:
            throw std::domain_error("element_image: circle lifts fold mod 1");
    }
    throw std::logic_error("element_image: unknown element kind");
}

namespace {

// expand to a PL graph on the base domain when the knot budget allows
std::optional<PLMap> expand_to_pl(const EnvelopeSystem& env, const FunctionElement& g) {
    switch (g.kind) {
        case FunctionElement::Kind::Constant:
            return PLMap::constant(domain_lo(env), domain_hi(env), g.constant_value.real.exact);
        case FunctionElement::Kind::PL:
            return g.graph;
        case FunctionElement::Kind::Iterated: {
            if (env.base.map.tag != CatalogMap::Tag::Piecewise) return std::nullopt;
            auto inner = expand_to_pl(env, *g.base);
            if (!inner) return std::nullopt;
            try {
                PLMap fk = pl_iterate(env.base.map.pl, g.power, 1u << 16);
                return pl_compose(fk, *inner, 1u << 16);
            } catch (const std::length_error&) {
                return std::nullopt;
            }
        }
        case FunctionElement::Kind::CircleLift:
            return std::nullopt;
    }
    return std::nullopt;
}

// max over [0,1] of the distance from a PL lift difference to the nearest
// integer (the circle's uniform metric between two lifts)
Rational lift_fold_max(const PLMap& diff) {
    Rational best = 0;
    auto dist_to_int = [](const Rational& v) {
        Rational fr = rat_mod1(v);
        return rat_min(fr, Rational(1) - fr);
    };
    const auto& knots = diff.knots();
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        Rational a = knots[i].second, b = knots[i + 1].second;
        Rational lo = rat_min(a, b), hi = rat_max(a, b);
        // does [lo, hi] contain a half-integer?
        Rational half_candidate = Rational(rat_floor(lo * 2)) / 2;
        bool contains_half = false;
        for (int step = 0; step <= 2 + 2 * static_cast<int>(rat_floor(hi - lo).convert_to<long long>());
             ++step) {
            Rational h = half_candidate + Rational(step, 2);
            if (h >= lo && h <= hi && rat_den(h * 2) == 1 && rat_den(h) == 2) {
                contains_half = true;
                break;
            }
            if (h > hi) break;
        }
        if (contains_half) return Rational(1, 2);
        best = rat_max(best, rat_max(dist_to_int(a), dist_to_int(b)));
    }
    return best;
}

}  // namespace

Scalar uniform_distance(const EnvelopeSystem& env, const FunctionElement& g,
                        const FunctionElement& h) {
    if (g.kind == FunctionElement::Kind::Constant && h.kind == FunctionElement::Kind::Constant)
        return metric(base_space(env), g.constant_value, h.constant_value);
    if (g.kind == FunctionElement::Kind::CircleLift || h.kind == FunctionElement::Kind::CircleLift) {
        if (g.kind != h.kind) throw std::domain_error("uniform_distance: mixed lift kinds");
        if (g.lift_irr_mult != h.lift_irr_mult)
            throw std::domain_error("uniform_distance: symbolic shifts differ");
        // difference of the lifts, folded into the circle
        std::set<Rational> xs;
        for (const auto& kn : g.graph.knots()) xs.insert(kn.first);
        for (const auto& kn : h.graph.knots()) xs.insert(kn.first);
        std::vector<PLMap::Knot> diff;
        for (const auto& x : xs) diff.emplace_back(x, g.graph.eval(x) - h.graph.eval(x));
        return Scalar(lift_fold_max(PLMap(std::move(diff))));
    }
    if (!base_space(env).line_like())
        throw std::domain_error("uniform_distance: non-compact or non-interval base");
    auto pg = expand_to_pl(env, g);
    auto ph = expand_to_pl(env, h);
    if (!pg || !ph)
        throw std::domain_error(
            "uniform_distance: element too deep to expand; use a pointwise separation bound");
    std::set<Rational> xs;
    for (const auto& kn : pg->knots()) xs.insert(kn.first);
    for (const auto& kn : ph->knots()) xs.insert(kn.first);
    Rational best = 0;
    for (const auto& x : xs) best = rat_max(best, rat_abs(pg->eval(x) - ph->eval(x)));
    return Scalar(best);
}

bool co_member(const EnvelopeSystem& env, const FunctionElement& g, const SubbasicSet& S) {
    if (!S.is_function_space_set())
        throw std::invalid_argument("co_member: not a function-space set");
    const bool circle = S.on_circle;
    auto point_in_G = [&](const Rational& value) {
        return S.G.contains(circle ? rat_mod1(value) : value);
    };
    if (S.kind == SubbasicSet::Kind::PoSet) {
        if (g.kind == FunctionElement::Kind::Constant && circle)
            return S.G.contains(rat_mod1(g.constant_value.angle.base));
        return point_in_G(eval_element(env, g, S.po_x));
    }
    // CoSet: g(K) subset G
    if (g.kind == FunctionElement::Kind::Constant) {
        if (circle) {
            if (g.constant_value.kind == PhasePoint::Kind::Circle) {
                if (!g.constant_value.angle.is_exact_rational())
                    throw std::domain_error("co_member: symbolic circle constant");
                return S.G.contains(rat_mod1(g.constant_value.angle.base));
            }
        }
        return point_in_G(g.constant_value.real.exact);
    }
    if (S.K.kind == CompactK::Kind::FinitePoints) {
        for (const auto& x : S.K.points)
            if (!point_in_G(eval_element(env, g, x))) return false;
        return true;
    }
    // closed-interval K: exact image containment
    IntervalUnion K_region(Interval::closed(S.K.lo, S.K.hi));
    IntervalUnion image;
    switch (g.kind) {
        case FunctionElement::Kind::PL:
            image = g.graph.image(K_region);
            break;
        case FunctionElement::Kind::Iterated:
            image = forward_image_k(env.base.map, g.base->kind == FunctionElement::Kind::PL
                                                      ? g.base->graph.image(K_region)
                                                      : element_image(env, *g.base),
                                    g.power);
            break;
        default:
            throw std::domain_error("co_member: unsupported element kind for interval K");
    }
    return image.subset_of(S.G);
}

// ---------------------------------------------------------------------------
// Theorem-style constructions
// ---------------------------------------------------------------------------

std::optional<EnvelopeWitness> transitivity_witness(const EnvelopeSystem& env,
                                                    const SubbasicSet& A, const SubbasicSet& B,
                                                    const Budget& budget) {
    if (A.on_circle || B.on_circle) return std::nullopt;  // handled by certificates only
    auto rw = region_transitivity_witness(env.base, A.G, B.G, budget);
    if (!rw) return std::nullopt;
    EnvelopeWitness ew;
    ew.A_label = A.label;
    ew.B_label = B.label;
    ew.k = rw->k;
    ew.base_start = rw->start;
    ew.base_end = rw->end;
    ew.start = FunctionElement::constant(PhasePoint::real_exact(rw->start));
    ew.end = apply_envelope_k(env, ew.start, ew.k);
    ew.certified_intersection = rw->intersection;
    if (!co_member(env, ew.start, A) || !co_member(env, ew.end, B))
        throw std::logic_error("transitivity_witness: constructed witness failed verification");
    return ew;
}

std::optional<Certificate> transitivity_witness_certificate(const EnvelopeSystem& env,
                                                            const SubbasicSet& A,
                                                            const SubbasicSet& B,
                                                            const Budget& budget) {
    if (!base_space(env).line_like()) return std::nullopt;
    // Any h in F^k(A) has h = f^k o g, so h(C) lies inside f^k(X) subset f^m(X)
    // for k >= m; if that trap misses V = B.G then no element of F^k(A) can
    // send B's compact set into V, for any k >= m; smaller k are excluded by
    // the same trap at exponent k.
    IntervalUnion trap = base_space(env).full_region();
    for (unsigned m = 1; m <= std::min(budget.k_max, 16u); ++m) {
        IntervalUnion next = forward_image(env.base.map, trap);
        bool stabilized = next == trap;
        trap = std::move(next);
        if (!trap.meets(B.G)) {
            Certificate cert;
            cert.kind = m == 1 ? Certificate::Kind::RangeBound : Certificate::Kind::AbsorbingSet;
            cert.trap = trap;
            cert.source_region = base_space(env).full_region();
            cert.entry_bound = m;
            cert.target_label = B.label;
            cert.target_region = B.G;
            cert.resolution_independent = true;
            cert.argument = "image-trap";
            cert.description = "every F_f^k(g), k >= " + std::to_string(m) +
                               ", takes values inside " + trap.str() + ", so it cannot send " +
                               (B.kind == SubbasicSet::Kind::PoSet ? "{" + rat_str(B.po_x) + "}"
                                                                   : B.K.str()) +
                               " into " + B.G.str() + "; smaller exponents are covered by the "
                               "same trap chain";
            (void)A;
            return cert;
        }
        if (stabilized) break;
    }
    return std::nullopt;
}

std::optional<EnvelopePeriodicWitness> periodic_witness(const EnvelopeSystem& env,
                                                        const SubbasicSet& A,
                                                        const Budget& budget) {
    if (A.on_circle) {
        // rational rotations: every angle is periodic
        PeriodicStructure st = periodic_structure(env.base.map);
        if (st.kind != PeriodicStructure::Kind::AllPeriodic) return std::nullopt;
        if (A.G.empty()) return std::nullopt;
        Rational theta = A.G.representative();
        PhasePoint p = PhasePoint::circle(theta);
        auto period = least_period(env.base.map, p, st.max_period);
        if (!period) return std::nullopt;
        EnvelopePeriodicWitness w;
        w.A_label = A.label;
        w.element = FunctionElement::constant(p);
        w.period = *period;
        w.base_point = theta;
        return w;
    }
    auto rec = periodic_point_in_region(env.base, A.G, budget);
    if (!rec) return std::nullopt;
    EnvelopePeriodicWitness w;
    w.A_label = A.label;
    w.element = FunctionElement::constant(rec->point);
    w.period = rec->period;
    w.base_point = rec->point.real.exact;
    FunctionElement cycled = apply_envelope_k(env, w.element, w.period);
    if (!(cycled.kind == FunctionElement::Kind::Constant &&
          cycled.constant_value == w.element.constant_value))
        throw std::logic_error("periodic_witness: envelope cycle failed verification");
    return w;
}

std::optional<Certificate> periodic_witness_certificate(const EnvelopeSystem& env,
                                                        const SubbasicSet& A,
                                                        const Budget& budget) {
    // A periodic element g of F_f in A = [F, U] would satisfy g(X) subset P(f)
    // and g(F) subset U, so P(f) meeting U is necessary.
    PeriodicStructure st = periodic_structure(env.base.map);
    if (st.kind == PeriodicStructure::Kind::Empty) {
        Certificate cert;
        cert.kind = Certificate::Kind::PeriodicSetCharacterization;
        cert.argument = "no-periodic-symbolic";
        cert.resolution_independent = true;
        cert.target_label = A.label;
        cert.description =
            "P(f) is empty (" + st.argument + "), so F_f has no periodic points at all";
        return cert;
    }
    if (A.on_circle) return std::nullopt;
    return periodic_region_certificate(env.base, A.G, A.label, budget);
}

BaseWitness base_from_envelope(const EnvelopeSystem& env, const IntervalUnion& U,
                               const IntervalUnion& V, const Rational& x0,
                               const EnvelopeWitness& ew) {
    // g in A = [{x0}, U], h = F^k(g) in B = [{x0}, V]  =>  q = g(x0) lies in U
    // and f^k(q) = h(x0) lies in V.
    Rational q = eval_element(env, ew.start, x0);
    if (!U.contains(q)) throw std::runtime_error("base_from_envelope: g(x0) escaped U");
    PhasePoint end = iterate_eval(env.base.map, ew.k, PhasePoint::real_exact(q));
    Rational h_at_x0 = eval_element(env, ew.end, x0);
    if (!(end.real.exact == h_at_x0))
        throw std::runtime_error("base_from_envelope: F^k(g)(x0) mismatch");
    if (!V.contains(end.real.exact))
        throw std::runtime_error("base_from_envelope: f^k(g(x0)) escaped V");
    BaseWitness bw;
    bw.start = q;
    bw.k = ew.k;
    bw.end = end.real.exact;
    bw.certified_intersection = forward_image_k(env.base.map, U, ew.k).intersect(V);
    return bw;
}

Verdict envelope_transitivity_check(const EnvelopeSystem& env,
                                    const std::vector<SubbasicSet>& family, const Budget& budget) {
    if (family.empty()) throw std::invalid_argument("envelope_transitivity_check: empty family");
    std::vector<Witness> witnesses;
    unsigned unknown_pairs = 0;
    std::string first_unknown;
    for (const auto& A : family) {
        for (const auto& B : family) {
            auto ew = transitivity_witness(env, A, B, budget);
            if (ew) {
                Witness w;
                w.kind = Witness::Kind::Transitivity;
                w.U_label = A.label;
                w.V_label = B.label;
                w.k = ew->k;
                w.point = PhasePoint::real_exact(ew->base_start);
                w.aux_point = PhasePoint::real_exact(ew->base_end);
                witnesses.push_back(std::move(w));
                continue;
            }
            if (auto cert = transitivity_witness_certificate(env, A, B, budget))
                return Verdict::fails(std::move(*cert), "pair (" + A.label + ", " + B.label +
                                                            ") admits no envelope witness");
            ++unknown_pairs;
            if (first_unknown.empty()) first_unknown = "(" + A.label + ", " + B.label + ")";
        }
    }
    if (unknown_pairs)
        return Verdict::unknown("no envelope witness for " + std::to_string(unknown_pairs) +
                                " pair(s), first " + first_unknown);
    return Verdict::holds(std::move(witnesses), "constant witnesses connect every ordered pair");
}

Verdict envelope_periodic_density_check(const EnvelopeSystem& env,
                                        const std::vector<SubbasicSet>& family,
                                        const Budget& budget) {
    if (family.empty())
        throw std::invalid_argument("envelope_periodic_density_check: empty family");
    std::vector<Witness> witnesses;
    unsigned unknown_members = 0;
    std::string first_unknown;
    for (const auto& A : family) {
        auto pw = periodic_witness(env, A, budget);
        if (pw) {
            Witness w;
            w.kind = Witness::Kind::Periodic;
            w.U_label = A.label;
            w.k = pw->period;
            w.point = pw->element.constant_value;
            witnesses.push_back(std::move(w));
            continue;
        }
        if (auto cert = periodic_witness_certificate(env, A, budget))
            return Verdict::fails(std::move(*cert),
                                  A.label + " contains no periodic element of F_f");
        ++unknown_members;
        if (first_unknown.empty()) first_unknown = A.label;
    }
    if (unknown_members)
        return Verdict::unknown("no periodic element for " + std::to_string(unknown_members) +
                                " member(s), first " + first_unknown);
    return Verdict::holds(std::move(witnesses), "constant periodic elements found in every member");
}

// ---------------------------------------------------------------------------
// Obstructions
// ---------------------------------------------------------------------------

std::optional<ObstructionEvidence> no_dense_orbit_evidence(const EnvelopeSystem& env,
                                                           const FunctionElement& g,
                                                           const Budget& budget) {
    if (!base_space(env).line_like())
        throw std::invalid_argument("no_dense_orbit_evidence: interval base required");
    const Rational lo = domain_lo(env), hi = domain_hi(env);
    ObstructionEvidence ev;
    ev.checked_n = std::min(budget.k_max * 4, 256u);

    if (g.kind == FunctionElement::Kind::Constant) {
        // The orbit of a constant map consists of constant maps; a basic open
        // set forcing two disjoint values contains none of them.
        Rational mid = (lo + hi) / 2;
        Rational q1 = lo + (hi - lo) / 4, q2 = lo + (hi - lo) * Rational(3, 4);
        CompactK K1 = CompactK::closed_interval(lo, mid);
        IntervalUnion G1(Interval::open(lo, q1));
        CompactK K2 = CompactK::finite({hi});
        IntervalUnion G2(Interval::open(lo + (hi - lo) * Rational(2, 3), lo + (hi - lo) * Rational(3, 4)));
        ev.argument = ObstructionEvidence::Argument::NoConstants;
        ev.obstruction = {SubbasicSet::co_set(K1, G1), SubbasicSet::co_set(K2, G2)};
        if (G1.meets(G2))
            throw std::logic_error("no_dense_orbit_evidence: target regions must be disjoint");
        // nonemptiness witness: a monotone PL join
        Rational y1 = G1.representative(), y2 = G2.representative();
        FunctionElement member = FunctionElement::pl(
            PLMap({{lo, y1}, {mid, y1}, {hi, y2}}), "pl join " + rat_str(y1) + "->" + rat_str(y2));
        if (!co_member(env, member, ev.obstruction[0]) || !co_member(env, member, ev.obstruction[1]))
            throw std::logic_error("no_dense_orbit_evidence: member witness failed");
        ev.obstruction_member = member;
        ev.note = "the obstruction excludes every constant map (its two value constraints are "
                  "disjoint), and every orbit element of a constant map is constant";
        return ev;
    }

    // Non-constant: g(I) has interior; pick an exact periodic point inside it.
    IntervalUnion image = element_image(env, g);
    auto diam = image.diameter();
    if (!diam || *diam == 0) return std::nullopt;
    Interval hull{image.parts().front().lo, image.parts().back().hi, false, false};
    IntervalUnion interior(hull);
    auto rec = periodic_point_in_region(env.base, interior, budget);
    if (!rec) return std::nullopt;

    ev.argument = ObstructionEvidence::Argument::OrbitInForbiddenSet;
    ev.periodic_point = rec->point;
    OrbitResult orb = orbit(env.base.map, rec->point, rec->period);
    for (unsigned i = 0; i < rec->period; ++i) ev.orbit.push_back(orb.points[i]);

    // q with g(q) = p, exact
    Rational p_val = rec->point.real.exact;
    std::optional<Rational> q;
    if (g.kind == FunctionElement::Kind::PL) {
        IntervalUnion pre = g.graph.preimage_of_value(p_val);
        if (!pre.empty()) q = pre.representative();
    } else if (g.kind == FunctionElement::Kind::Iterated) {
        // walk the value backwards through f^power, then through the base
        IntervalUnion target(Interval::point(p_val));
        Rational cur = p_val;
        bool ok = true;
        for (unsigned step = 0; step < g.power && ok; ++step) {
            auto pre = preimage_in(env.base.map, cur,
                                   forward_image_k(env.base.map, element_image(env, *g.base),
                                                   g.power - step - 1));
            if (!pre)
                ok = false;
            else
                cur = *pre;
        }
        if (ok && g.base->kind == FunctionElement::Kind::PL) {
            IntervalUnion pre = g.base->graph.preimage_of_value(cur);
            if (!pre.empty()) q = pre.representative();
        }
    }
    if (!q) return std::nullopt;
    ev.preimage = *q;

    // U = [I, I - O_f(p)]
    IntervalUnion orbit_points;
    for (const auto& op : ev.orbit) orbit_points.push(Interval::point(op.real.exact));
    IntervalUnion forbidden = orbit_points.complement_within(Interval::closed(lo, hi));
    ev.obstruction = {SubbasicSet::co_set(CompactK::closed_interval(lo, hi), forbidden)};
    ev.obstruction_member =
        FunctionElement::constant(PhasePoint::real_exact(forbidden.representative()));
    if (!co_member(env, ev.obstruction_member, ev.obstruction[0]))
        throw std::logic_error("no_dense_orbit_evidence: member witness failed");
    ev.note = "F_f^n(g)(q) = f^n(p) stays on the exact cycle O_f(p), so no orbit element maps "
              "all of I into I - O_f(p)";
    return ev;
}

bool replay_obstruction(const EnvelopeSystem& env, const FunctionElement& g,
                        const ObstructionEvidence& ev, unsigned n) {
    if (ev.argument == ObstructionEvidence::Argument::NoConstants) {
        if (g.kind != FunctionElement::Kind::Constant) return false;
        if (ev.obstruction.size() < 2) return false;
        if (ev.obstruction[0].G.meets(ev.obstruction[1].G)) return false;
        PhasePoint value = g.constant_value;
        for (unsigned j = 0; j <= n; ++j) {
            bool in_first = ev.obstruction[0].G.contains(value.real.exact);
            bool in_second = ev.obstruction[1].G.contains(value.real.exact);
            if (in_first && in_second) return false;  // would be a member
            value = map_eval(env.base.map, value);
        }
        return true;
    }
    // OrbitInForbiddenSet: track the image of the full domain through the
    // iterates incrementally and check the violating value directly.
    if (ev.obstruction.size() != 1) return false;
    const SubbasicSet& U = ev.obstruction[0];
    Rational val = eval_element(env, g, ev.preimage);
    if (!(val == ev.periodic_point.real.exact)) return false;
    // the orbit cycles exactly
    PhasePoint cycle_check = ev.periodic_point;
    for (std::size_t i = 0; i < ev.orbit.size(); ++i) {
        if (!(cycle_check == ev.orbit[i])) return false;
        cycle_check = map_eval(env.base.map, cycle_check);
    }
    if (!(cycle_check == ev.periodic_point)) return false;
    PhasePoint moving = PhasePoint::real_exact(val);
    for (unsigned j = 0; j <= n; ++j) {
        // F^j(g)(q) = f^j(p) must stay outside U's target region
        if (U.G.contains(moving.real.exact)) return false;
        moving = map_eval(env.base.map, moving);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Scans, onto-stability, sensitivity probe
// ---------------------------------------------------------------------------

std::vector<ScanEntry> envelope_periodic_scan(const EnvelopeSystem& env,
                                              const std::vector<FunctionElement>& family,
                                              unsigned k_max) {
    std::vector<ScanEntry> out;
    out.reserve(family.size());
    PeriodicStructure st = periodic_structure(env.base.map);
    for (const auto& g : family) {
        ScanEntry entry;
        entry.element = g;
        Rational const_val;
        bool is_const = false;
        if (g.kind == FunctionElement::Kind::Constant) {
            is_const = true;
            const_val = g.constant_value.real.exact;
        } else {
            IntervalUnion image = element_image(env, g);
            auto parts = image.parts();
            if (parts.size() == 1 && parts[0].degenerate()) {
                is_const = true;
                const_val = parts[0].lo.value;
            }
        }
        entry.constant = is_const;
        if (is_const) {
            auto period =
                least_period(env.base.map, PhasePoint::real_exact(const_val), k_max);
            if (period) {
                entry.periodic = true;
                entry.period = *period;
            }
        } else {
            // F^k(g) = g forces g(X) inside Fix(f^k); a non-degenerate image
            // cannot fit into a finite (or empty) periodic set.
            switch (st.kind) {
                case PeriodicStructure::Kind::FiniteSet:
                case PeriodicStructure::Kind::Empty:
                    entry.periodic = false;
                    break;
                case PeriodicStructure::Kind::AllPeriodic: {
                    // compare F^k(g) with g exactly
                    for (unsigned k = 1; k <= std::min(k_max, st.max_period) && !entry.periodic;
                         ++k) {
                        auto lhs = expand_to_pl(env, apply_envelope_k(env, g, k));
                        auto rhs = expand_to_pl(env, g);
                        if (lhs && rhs && *lhs == *rhs) {
                            entry.periodic = true;
                            entry.period = k;
                        }
                    }
                    break;
                }
                case PeriodicStructure::Kind::Unknown: {
                    // F^k(g) = g iff g(X) fits inside Fix(f^k). Solve per
                    // exponent; identity pieces (a continuum of fixed points)
                    // fall back to exact graph comparison.
                    Budget solver_budget;
                    IntervalUnion image = element_image(env, g);
                    for (unsigned k = 1; k <= k_max && !entry.periodic; ++k) {
                        auto fixed = find_periodic_points(env.base.map.pl, k, image, solver_budget);
                        if (fixed.complete) continue;  // finite set vs. an interval image
                        auto lhs = expand_to_pl(env, apply_envelope_k(env, g, k));
                        auto rhs = expand_to_pl(env, g);
                        if (lhs && rhs && *lhs == *rhs) {
                            entry.periodic = true;
                            entry.period = k;
                        }
                    }
                    break;
                }
                case PeriodicStructure::Kind::Region: {
                    IntervalUnion image = element_image(env, g);
                    if (image.subset_of(st.region)) {
                        // pointwise fixed region: g is periodic with period 1
                        entry.periodic = true;
                        entry.period = 1;
                    }
                    break;
                }
            }
        }
        if (entry.periodic) {
            IntervalUnion image = element_image(env, g);
            switch (st.kind) {
                case PeriodicStructure::Kind::FiniteSet: {
                    entry.image_in_periodic_set = false;
                    for (const auto& p : st.points)
                        if (image == IntervalUnion(Interval::point(p.real.exact)))
                            entry.image_in_periodic_set = true;
                    break;
                }
                case PeriodicStructure::Kind::Region:
                    entry.image_in_periodic_set = image.subset_of(st.region);
                    break;
                case PeriodicStructure::Kind::AllPeriodic:
                    entry.image_in_periodic_set = true;
                    break;
                default: {
                    // PL maps: the constant value must be an exact periodic point
                    entry.image_in_periodic_set =
                        is_const && least_period(env.base.map,
                                                 PhasePoint::real_exact(const_val), k_max)
                                        .has_value();
                    break;
                }
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<FunctionElement> scan_family(const System& base, int grid, int max_knots,
                                         std::size_t count, std::uint64_t seed) {
    std::vector<FunctionElement> out;
    out.reserve(count);
    const Rational lo = base.space.lo, hi = base.space.hi;
    // constants on the rational grid first
    for (int i = 0; i <= grid && out.size() < count; ++i)
        out.push_back(FunctionElement::constant(
            PhasePoint::real_exact(lo + (hi - lo) * Rational(i, grid))));
    // then seeded PL interpolants on the lattice
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> lattice(0, 64);
    std::uniform_int_distribution<int> knot_count(0, std::max(0, max_knots));
    while (out.size() < count) {
        int interior = knot_count(rng);
        std::set<Rational> xs{lo, hi};
        while (static_cast<int>(xs.size()) < interior + 2)
            xs.insert(lo + (hi - lo) * Rational(lattice(rng), 64));
        std::vector<PLMap::Knot> knots;
        for (const auto& x : xs)
            knots.emplace_back(x, lo + (hi - lo) * Rational(lattice(rng), 64));
        out.push_back(FunctionElement::pl(PLMap(std::move(knots)),
                                          "pl#" + std::to_string(out.size())));
    }
    return out;
}

bool onto_check(const EnvelopeSystem& env, const FunctionElement& g) {
    if (g.kind == FunctionElement::Kind::CircleLift) {
        // degree of the lift: any degree != 0 circle map is onto
        Rational degree = g.graph.eval(g.graph.domain_hi()) - g.graph.eval(g.graph.domain_lo());
        return rat_abs(degree) >= 1;
    }
    if (g.kind == FunctionElement::Kind::Constant) return false;
    IntervalUnion image = element_image(env, g);
    return image == base_space(env).full_region();
}

OntoBallEvidence onto_ball_probe(const EnvelopeSystem& env, const Rational& epsilon,
                                 unsigned count, std::uint64_t seed, const Budget& budget) {
    OntoBallEvidence ev;
    ev.samples = count;
    ev.epsilon = epsilon;
    ev.periodic_checked_up_to = budget.p_max;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> jitter(-64, 64);

    const CatalogMap& f = env.base.map;
    if (f.tag == CatalogMap::Tag::Piecewise) {
        const Rational lo = domain_lo(env), hi = domain_hi(env);
        for (unsigned s = 0; s < count; ++s) {
            std::vector<PLMap::Knot> knots = f.pl.knots();
            for (auto& kn : knots) {
                Rational d = epsilon * Rational(jitter(rng), 65);
                kn.second = rat_max(lo, rat_min(hi, kn.second + d));
            }
            FunctionElement g = FunctionElement::pl(PLMap(std::move(knots)),
                                                    "perturb#" + std::to_string(s));
            if (onto_check(env, g)) ++ev.onto_count;
            // periodic elements inside the ball would contradict onto-stability
            for (unsigned k = 1; k <= budget.p_max && !ev.periodic_element_found; ++k) {
                auto gk = expand_to_pl(env, apply_envelope_k(env, g, k));
                auto g0 = expand_to_pl(env, g);
                if (gk && g0 && *gk == *g0) ev.periodic_element_found = true;
            }
        }
    } else if (f.tag == CatalogMap::Tag::CircleRotation) {
        long long base_mult = f.rotation_irr != IrrationalMark::None ? 1 : 0;
        Rational base_shift = f.rotation_irr != IrrationalMark::None ? Rational(0) : f.rotation_angle;
        for (unsigned s = 0; s < count; ++s) {
            // lift of the rotation, shifted by a rational below epsilon, with
            // an optional PL bump of the same magnitude
            Rational c = epsilon * Rational(jitter(rng), 130);
            Rational bump = epsilon * Rational(jitter(rng), 260);
            Rational quarter(1, 4);
            PLMap lift({{0, base_shift + c},
                        {quarter, base_shift + c + bump + quarter},
                        {1, base_shift + c + 1}});
            FunctionElement g =
                FunctionElement::circle_lift(std::move(lift), base_mult, "near-rotation#" + std::to_string(s));
            if (onto_check(env, g)) ++ev.onto_count;
            if (f.rotation_irr != IrrationalMark::None) {
                // F^k(g) shifts the symbolic part by k; it can never return
                continue;
            }
            for (unsigned k = 1; k <= budget.p_max && !ev.periodic_element_found; ++k) {
                FunctionElement gk = apply_envelope_k(env, g, k);
                if (uniform_distance(env, gk, g).exact == 0) ev.periodic_element_found = true;
            }
        }
    } else {
        throw std::invalid_argument("onto_ball_probe: PL or rotation base maps only");
    }
    ev.onto_fraction = count == 0 ? 0.0 : static_cast<double>(ev.onto_count) / count;
    return ev;
}

std::optional<EnvelopeSensitivityResult> envelope_sensitivity_probe(
    const EnvelopeSystem& env, const FunctionElement& g, const std::vector<SubbasicSet>& Ug,
    const Rational& delta, const Budget& budget) {
    if (Ug.empty()) throw std::invalid_argument("envelope_sensitivity_probe: empty neighborhood");
    for (const auto& part : Ug)
        if (part.kind != SubbasicSet::Kind::CoSet || part.on_circle)
            throw std::invalid_argument("envelope_sensitivity_probe: interval co_sets required");
    for (const auto& part : Ug)
        if (!co_member(env, g, part))
            throw std::invalid_argument("envelope_sensitivity_probe: g is not in U_g");

    // constraint segments must not overlap
    struct Segment {
        Rational a, b;
        bool collapse;  // K_1 goes to y0; the others keep g
    };
    std::vector<Segment> segments;
    for (std::size_t i = 0; i < Ug.size(); ++i) {
        const CompactK& K = Ug[i].K;
        Segment s;
        if (K.kind == CompactK::Kind::ClosedInterval) {
            s.a = K.lo;
            s.b = K.hi;
        } else {
            if (K.points.empty()) throw std::invalid_argument("empty compact set");
            s.a = *std::min_element(K.points.begin(), K.points.end());
            s.b = *std::max_element(K.points.begin(), K.points.end());
        }
        s.collapse = (i == 0);
        segments.push_back(std::move(s));
    }
    std::vector<Segment> sorted = segments;
    std::sort(sorted.begin(), sorted.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (!(sorted[i].b < sorted[i + 1].a))
            throw std::invalid_argument(
                "envelope_sensitivity_probe: overlapping compact constraints");

    // base sensitivity search within V_1, strictly above delta
    Rational x0 = segments[0].a;
    Rational gx0 = eval_element(env, g, x0);
    if (!Ug[0].G.contains(gx0))
        throw std::invalid_argument("envelope_sensitivity_probe: g(x0) outside V_1");
    Rational strict_delta = delta * Rational(65, 64);
    auto sep = separation_search(env.base, gx0, Ug[0].G, strict_delta, budget);
    if (!sep) return std::nullopt;

    // h: collapse K_1 to y0, agree with g elsewhere on the K_j, join linearly
    const Rational lo = domain_lo(env), hi = domain_hi(env);
    auto g_pl = expand_to_pl(env, g);
    if (!g_pl) return std::nullopt;
    std::set<Rational> xs;
    for (const auto& seg : sorted) {
        xs.insert(seg.a);
        xs.insert(seg.b);
        if (!seg.collapse)
            for (const auto& kn : g_pl->knots())
                if (kn.first > seg.a && kn.first < seg.b) xs.insert(kn.first);
    }
    xs.insert(lo);
    xs.insert(hi);
    std::vector<PLMap::Knot> knots;
    auto value_at = [&](const Rational& x) -> std::optional<Rational> {
        for (const auto& seg : sorted) {
            if (x >= seg.a && x <= seg.b) {
                if (seg.collapse) return sep->y;
                return g_pl->eval(x);
            }
        }
        return std::nullopt;
    };
    // endpoints outside every segment extend the nearest constrained value
    for (const auto& x : xs) {
        auto v = value_at(x);
        if (v) {
            knots.emplace_back(x, *v);
        } else if (x == lo) {
            knots.emplace_back(x, value_at(sorted.front().a).value());
        } else if (x == hi) {
            knots.emplace_back(x, value_at(sorted.back().b).value());
        }
        // unconstrained interior points join linearly by omission
    }
    PLMap h_graph(std::move(knots));
    FunctionElement h = FunctionElement::pl(std::move(h_graph), "h(" + g.label + " -> " +
                                                                    rat_str(sep->y) + ")");
    for (const auto& part : Ug)
        if (!co_member(env, h, part)) return std::nullopt;  // interpolant left U_g

    EnvelopeSensitivityResult result;
    result.h = h;
    result.n = sep->n;
    result.base_x0 = x0;
    result.y0 = sep->y;
    // exact pointwise lower bound on the sup-distance at time n
    Rational gx_n = iterate_eval(env.base.map, sep->n, PhasePoint::real_exact(gx0)).real.exact;
    Rational hy_n = iterate_eval(env.base.map, sep->n, PhasePoint::real_exact(sep->y)).real.exact;
    result.separation = rat_abs(gx_n - hy_n);
    if (!(result.separation > delta)) return std::nullopt;
    return result;
}

}  // namespace lightchaos

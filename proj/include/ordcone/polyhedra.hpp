// Convex domains over exact rationals: Fourier-Motzkin elimination,
// satisfiability with rational witnesses, coordinate projection, separation
// functionals, boundedness, and conversions between half-space (H) and
// vertex (V) representations.
//
// A ConvexDomain is a finite intersection of upper half-spaces p(x) >= 0.
// Equalities are always encoded as two opposite inequalities. All verdicts
// are exact; satisfiability over the rationals coincides with satisfiability
// over the reals for such systems, so "sat" means nonempty, period.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "int_linalg.hpp"
#include "qlinalg.hpp"
#include "rational.hpp"

namespace ordcone {

struct AffineFunctional {
    QVector linear;     // coefficient per coordinate
    Rational constant;  // x |-> linear . x + constant

    Rational operator()(const QVector& x) const {
        return q_dot(linear, x) + constant;
    }
};

class ConvexDomain {
public:
    ConvexDomain(std::size_t dim, std::vector<AffineFunctional> constraints)
        : dim_(dim), constraints_(std::move(constraints)) {
        for (const AffineFunctional& f : constraints_)
            if (f.linear.size() != dim_)
                throw std::invalid_argument("ConvexDomain: constraint dimension mismatch");
    }

    static ConvexDomain whole_space(std::size_t dim) { return ConvexDomain(dim, {}); }

    std::size_t dimension() const { return dim_; }
    const std::vector<AffineFunctional>& constraints() const { return constraints_; }

    bool contains(const QVector& x) const {
        if (x.size() != dim_) throw std::invalid_argument("ConvexDomain::contains: dimension mismatch");
        for (const AffineFunctional& f : constraints_)
            if (f(x) < 0) return false;
        return true;
    }

private:
    std::size_t dim_;
    std::vector<AffineFunctional> constraints_;
};

class VPolytope {
public:
    VPolytope(std::size_t dim, std::vector<QVector> points)
        : dim_(dim), points_(std::move(points)) {
        for (const QVector& p : points_)
            if (p.size() != dim_) throw std::invalid_argument("VPolytope: point dimension mismatch");
    }

    std::size_t dimension() const { return dim_; }
    const std::vector<QVector>& points() const { return points_; }

    // Removes exact duplicates, keeping first occurrences.
    VPolytope canonicalized() const {
        std::vector<QVector> out;
        std::set<QVector> seen;
        for (const QVector& p : points_)
            if (seen.insert(p).second) out.push_back(p);
        return VPolytope(dim_, std::move(out));
    }

private:
    std::size_t dim_;
    std::vector<QVector> points_;
};

namespace detail {

// Scales a constraint by the reciprocal of the absolute value of its first
// nonzero coefficient (constant included), giving a canonical representative
// of its positive-multiple class.
inline AffineFunctional canonical_positive_multiple(const AffineFunctional& f) {
    Rational lead = 0;
    for (const Rational& c : f.linear)
        if (c != 0) {
            lead = c;
            break;
        }
    if (lead == 0) lead = f.constant;
    if (lead == 0) return f;  // the zero functional
    const Rational scale = lead > 0 ? Rational(1) / lead : Rational(-1) / lead;
    AffineFunctional g;
    g.linear = q_scale(scale, f.linear);
    g.constant = scale * f.constant;
    return g;
}

// Drops trivially true constraints (zero linear part, nonnegative constant)
// and duplicate positive multiples, keeping first occurrences. Infeasibility
// markers (zero linear part, negative constant) are kept, collapsed to one.
inline std::vector<AffineFunctional> cleanup_constraints(const std::vector<AffineFunctional>& in) {
    std::vector<AffineFunctional> out;
    std::set<std::vector<Rational>> seen;
    for (const AffineFunctional& f : in) {
        if (q_is_zero(f.linear) && f.constant >= 0) continue;
        const AffineFunctional c = canonical_positive_multiple(f);
        std::vector<Rational> key = c.linear;
        key.push_back(c.constant);
        if (seen.insert(std::move(key)).second) out.push_back(f);
    }
    return out;
}

inline AffineFunctional erase_coordinate(const AffineFunctional& f, std::size_t j) {
    AffineFunctional g;
    g.linear.reserve(f.linear.size() - 1);
    for (std::size_t i = 0; i < f.linear.size(); ++i)
        if (i != j) g.linear.push_back(f.linear[i]);
    g.constant = f.constant;
    return g;
}

// Advances an index combination {c_0 < ... < c_{s-1}} over {0..n-1} to its
// lexicographic successor; false once exhausted.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    std::size_t i = c.size();
    while (i-- > 0) {
        if (c[i] + (c.size() - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < c.size(); ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// One Fourier-Motzkin step: the result's point set is exactly the projection
// of D forgetting coordinate j. Constraints not mentioning x_j survive with
// the coordinate erased; each (lower bound, upper bound) pair contributes the
// positive combination q_y/c_y - q_z/c_z >= 0.
inline ConvexDomain eliminate_variable(const ConvexDomain& d, std::size_t j) {
    if (j >= d.dimension()) throw std::out_of_range("eliminate_variable: index out of range");
    std::vector<const AffineFunctional*> lowers, uppers;
    std::vector<AffineFunctional> result;
    for (const AffineFunctional& f : d.constraints()) {
        const Rational& c = f.linear[j];
        if (c == 0)
            result.push_back(detail::erase_coordinate(f, j));
        else if (c > 0)
            lowers.push_back(&f);
        else
            uppers.push_back(&f);
    }
    for (const AffineFunctional* y : lowers)
        for (const AffineFunctional* z : uppers) {
            const AffineFunctional qy = detail::erase_coordinate(*y, j);
            const AffineFunctional qz = detail::erase_coordinate(*z, j);
            const Rational cy = y->linear[j], cz = z->linear[j];
            AffineFunctional g;
            g.linear = q_sub(q_scale(Rational(1) / cy, qy.linear), q_scale(Rational(1) / cz, qz.linear));
            g.constant = qy.constant / cy - qz.constant / cz;
            result.push_back(std::move(g));
        }
    return ConvexDomain(d.dimension() - 1, detail::cleanup_constraints(result));
}

struct SatResult {
    bool satisfiable;
    std::optional<QVector> witness;  // exact rational point when satisfiable
};

// Fourier-Motzkin satisfiability with witness reconstruction. Variables are
// eliminated from the last index down; the witness is rebuilt by the fixed
// rule: midpoint of the feasible interval, lower bound + 1 if unbounded
// above, upper bound - 1 if unbounded below, 0 if unconstrained.
inline SatResult is_satisfiable(const ConvexDomain& d) {
    std::vector<ConvexDomain> levels;
    levels.push_back(d);
    while (levels.back().dimension() > 0)
        levels.push_back(eliminate_variable(levels.back(), levels.back().dimension() - 1));
    for (const AffineFunctional& f : levels.back().constraints())
        if (f.constant < 0) return {false, std::nullopt};
    QVector w;  // coordinates 0..k-1 recovered so far
    for (std::size_t level = levels.size() - 1; level-- > 0;) {
        const std::size_t j = w.size();  // levels[level] has dimension j + 1
        std::optional<Rational> lower, upper;
        for (const AffineFunctional& f : levels[level].constraints()) {
            const Rational& c = f.linear[j];
            if (c == 0) continue;
            Rational v = f.constant;
            for (std::size_t i = 0; i < j; ++i) v += f.linear[i] * w[i];
            const Rational bound = -v / c;
            if (c > 0) {
                if (!lower || bound > *lower) lower = bound;
            } else {
                if (!upper || bound < *upper) upper = bound;
            }
        }
        Rational xi = 0;
        if (lower && upper)
            xi = (*lower + *upper) / 2;
        else if (lower)
            xi = *lower + 1;
        else if (upper)
            xi = *upper - 1;
        w.push_back(xi);
    }
    return {true, std::move(w)};
}

// Iterated elimination over the complement of `keep`, highest index first.
// The k-th coordinate of the result corresponds to the k-th smallest kept
// index of the input.
inline ConvexDomain project(const ConvexDomain& d, const std::vector<std::size_t>& keep) {
    std::vector<bool> kept(d.dimension(), false);
    for (std::size_t k : keep) {
        if (k >= d.dimension()) throw std::out_of_range("project: keep index out of range");
        kept[k] = true;
    }
    ConvexDomain cur = d;
    for (std::size_t j = d.dimension(); j-- > 0;)
        if (!kept[j]) cur = eliminate_variable(cur, j);
    return cur;
}

// Exact range of an affine objective over D, computed by projecting the
// lifted system {(x, t) : x in D, t = objective(x)} onto the t axis.
struct ValueRange {
    bool empty;
    std::optional<Rational> lower, upper;  // absent side = unbounded
};

inline ValueRange value_range(const ConvexDomain& d, const QVector& objective,
                              const Rational& objective_constant = Rational(0)) {
    if (objective.size() != d.dimension())
        throw std::invalid_argument("value_range: dimension mismatch");
    const std::size_t n = d.dimension();
    std::vector<AffineFunctional> lifted;
    for (const AffineFunctional& f : d.constraints()) {
        AffineFunctional g;
        g.linear = f.linear;
        g.linear.push_back(0);
        g.constant = f.constant;
        lifted.push_back(std::move(g));
    }
    AffineFunctional above;  // t - objective(x) >= 0
    above.linear = q_scale(Rational(-1), objective);
    above.linear.push_back(1);
    above.constant = -objective_constant;
    AffineFunctional below;  // objective(x) - t >= 0
    below.linear = objective;
    below.linear.push_back(-1);
    below.constant = objective_constant;
    lifted.push_back(std::move(above));
    lifted.push_back(std::move(below));
    const ConvexDomain axis = project(ConvexDomain(n + 1, std::move(lifted)), {n});

    ValueRange r{false, std::nullopt, std::nullopt};
    for (const AffineFunctional& f : axis.constraints()) {
        const Rational& c = f.linear[0];
        if (c == 0) {
            if (f.constant < 0) return {true, std::nullopt, std::nullopt};
            continue;
        }
        const Rational bound = -f.constant / c;
        if (c > 0) {
            if (!r.lower || bound > *r.lower) r.lower = bound;
        } else {
            if (!r.upper || bound < *r.upper) r.upper = bound;
        }
    }
    if (r.lower && r.upper && *r.lower > *r.upper) return {true, std::nullopt, std::nullopt};
    return r;
}

// Separating functional against the origin: for nonempty D with 0 outside,
// returns the linear part of p with p(x) >= 1 on D, built from the first
// constraint violated at the origin (q with q(0) < 0) as p = (-1/q(0)) (q - q(0)).
inline QVector separate_from_origin(const ConvexDomain& d) {
    if (!is_satisfiable(d).satisfiable)
        throw std::runtime_error("separate_from_origin: empty domain");
    for (const AffineFunctional& q : d.constraints())
        if (q.constant < 0) return q_scale(Rational(-1) / q.constant, q.linear);
    throw std::runtime_error("separate_from_origin: origin not separated");
}

// For D contained in the affine hyperplane {r . x = 1} and a point a on that
// hyperplane but outside D: returns the linear part of p with p(a) = 0 and
// p(x) >= 1 on D. From the first constraint q_i violated at a, scale
// q = (q_i - q_i(a)) / (-q_i(a)) and strip the constant via
// p(x) = q(x) + q(0) (r . x - 1).
inline QVector separate_on_hyperplane(const ConvexDomain& d, const QVector& r, const QVector& a) {
    if (r.size() != d.dimension() || a.size() != d.dimension())
        throw std::invalid_argument("separate_on_hyperplane: dimension mismatch");
    if (q_dot(r, a) != 1)
        throw std::runtime_error("separate_on_hyperplane: r . a != 1");
    const ValueRange range = value_range(d, r);
    if (!range.empty &&
        (!range.lower || *range.lower < 1 || !range.upper || *range.upper > 1))
        throw std::runtime_error("separate_on_hyperplane: domain not contained in the hyperplane");
    for (const AffineFunctional& qi : d.constraints()) {
        const Rational qa = qi(a);
        if (qa >= 0) continue;
        const Rational scale = Rational(-1) / qa;  // positive
        // q = (q_i - q_i(a)) * scale, then p = q + q(0) * (r . x - 1); the
        // constant of p cancels to zero, so only the linear part is returned.
        QVector q_lin = q_scale(scale, qi.linear);
        const Rational q0 = (qi.constant - qa) * scale;
        return q_add(q_lin, q_scale(q0, r));
    }
    throw std::runtime_error("separate_on_hyperplane: point is not separated from the domain");
}

namespace detail {

// Decides whether target is a nonnegative combination of the columns. The
// equality part of the lambda system is presolved exactly: a particular
// solution plus a basis of the column relations reduce the question to
// elimination over the few relation coordinates, one sign constraint per
// column.
inline bool nonnegative_combination_exists(const std::vector<QVector>& columns,
                                           const QVector& target) {
    const std::size_t n = columns.size();
    const std::optional<QVector> part = q_solve_columns(columns, target);
    if (!part) return false;
    if (n == 0) return true;  // empty combination: target was zero
    QMatrix rows(target.size(), QVector(n));
    for (std::size_t i = 0; i < target.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = columns[j][i];
    const QMatrix rel = q_nullspace(rows, n);  // mu with sum_j mu_j columns[j] = 0
    if (rel.empty()) {
        for (const Rational& c : *part)
            if (c < 0) return false;
        return true;
    }
    std::vector<AffineFunctional> cs;
    for (std::size_t j = 0; j < n; ++j) {
        AffineFunctional g;  // part_j + sum_b rel_b[j] mu_b >= 0
        g.linear = QVector(rel.size());
        for (std::size_t b = 0; b < rel.size(); ++b) g.linear[b] = rel[b][j];
        g.constant = (*part)[j];
        cs.push_back(std::move(g));
    }
    return is_satisfiable(ConvexDomain(rel.size(), std::move(cs))).satisfiable;
}

}  // namespace detail

// True iff x is a convex combination of the points, decided exactly on the
// lambda system (the affine row is folded in as an extra coordinate).
inline bool hull_membership(const QVector& x, const VPolytope& v) {
    if (x.size() != v.dimension())
        throw std::invalid_argument("hull_membership: dimension mismatch");
    std::vector<QVector> columns;
    columns.reserve(v.points().size());
    for (const QVector& p : v.points()) {
        QVector c = p;
        c.push_back(Rational(1));
        columns.push_back(std::move(c));
    }
    QVector target = x;
    target.push_back(Rational(1));
    return detail::nonnegative_combination_exists(columns, target);
}

// H-representation of a convex hull by direct facet enumeration. The affine
// hull contributes equality pairs; every facet hyperplane is the affine span
// of an affinely independent point subset whose supporting side contains all
// points, so scanning the subsets finds each facet (deduplicated up to
// positive multiples). Output: equalities first, then facets in subset order.
inline ConvexDomain hull_to_halfspaces(const VPolytope& v) {
    const std::vector<QVector> pts = v.canonicalized().points();
    if (pts.empty()) throw std::runtime_error("hull_to_halfspaces: empty hull");
    const std::size_t d = v.dimension();
    const QVector& p0 = pts[0];

    QMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(q_sub(pts[i], p0));
    const std::size_t k = q_rank(diffs);
    const QMatrix normals = q_nullspace(diffs, d);  // orthogonal to the direction space

    std::vector<AffineFunctional> cs;
    for (const QVector& n : normals) {
        const Rational c = q_dot(n, p0);  // n . x = c on the affine hull
        AffineFunctional eq;
        eq.linear = n;
        eq.constant = -c;
        AffineFunctional neq;
        neq.linear = q_scale(Rational(-1), n);
        neq.constant = c;
        cs.push_back(std::move(eq));
        cs.push_back(std::move(neq));
    }
    if (k == 0) return ConvexDomain(d, std::move(cs));  // single point

    std::set<std::vector<Rational>> seen;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
        QMatrix rows = normals;
        for (std::size_t i = 1; i < k; ++i) rows.push_back(q_sub(pts[idx[i]], pts[idx[0]]));
        if (q_rank(rows) != d - 1) continue;  // subset does not span a hyperplane
        const std::vector<QVector> hbasis = q_nullspace(rows, d);
        if (hbasis.size() != 1) continue;
        const QVector& h = hbasis[0];
        const Rational c0 = q_dot(h, pts[idx[0]]);
        bool any_pos = false, any_neg = false;
        for (const QVector& p : pts) {
            const Rational val = q_dot(h, p) - c0;
            if (val > 0) any_pos = true;
            else if (val < 0) any_neg = true;
            if (any_pos && any_neg) break;
        }
        if (any_pos == any_neg) continue;  // not a supporting hyperplane
        AffineFunctional f;
        f.linear = any_pos ? h : q_scale(Rational(-1), h);
        f.constant = any_pos ? -c0 : c0;
        const AffineFunctional canon = detail::canonical_positive_multiple(f);
        std::vector<Rational> key = canon.linear;
        key.push_back(canon.constant);
        if (seen.insert(std::move(key)).second) cs.push_back(std::move(f));
    } while (detail::next_combination(idx, pts.size()));
    return ConvexDomain(d, std::move(cs));
}

// True iff x is a nonnegative rational combination of the generators,
// decided exactly on the lambda system.
inline bool cone_contains(std::size_t dim, const std::vector<QVector>& gens, const QVector& x) {
    if (x.size() != dim) throw std::invalid_argument("cone_contains: dimension mismatch");
    for (const QVector& g : gens)
        if (g.size() != dim) throw std::invalid_argument("cone_contains: generator dimension mismatch");
    return detail::nonnegative_combination_exists(gens, x);
}

// Homogeneous H-representation of the cone generated by `gens`, by direct
// facet enumeration: equalities cut out the linear span; every facet of a
// finitely generated cone is generated by the generators lying on it, so its
// hyperplane is spanned by an independent generator subset. All constraints
// have zero constant.
inline ConvexDomain cone_halfspaces(std::size_t dim, const std::vector<QVector>& gens) {
    std::vector<QVector> nz;
    for (const QVector& g : gens) {
        if (g.size() != dim)
            throw std::invalid_argument("cone_halfspaces: generator dimension mismatch");
        if (!q_is_zero(g)) nz.push_back(g);
    }
    const QMatrix span_rows(nz.begin(), nz.end());
    const std::size_t k = q_rank(span_rows);
    const QMatrix normals = q_nullspace(span_rows, dim);

    std::vector<AffineFunctional> cs;
    for (const QVector& n : normals) {
        AffineFunctional eq;  // n . x = 0 on the linear span
        eq.linear = n;
        eq.constant = 0;
        AffineFunctional neq;
        neq.linear = q_scale(Rational(-1), n);
        neq.constant = 0;
        cs.push_back(std::move(eq));
        cs.push_back(std::move(neq));
    }
    if (k == 0) return ConvexDomain(dim, std::move(cs));  // trivial cone

    std::set<std::vector<Rational>> seen;
    std::vector<std::size_t> idx(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) idx[i] = i;
    do {
        QMatrix rows = normals;
        for (std::size_t i : idx) rows.push_back(nz[i]);
        if (q_rank(rows) != dim - 1) continue;  // subset does not span a hyperplane
        const std::vector<QVector> hbasis = q_nullspace(rows, dim);
        if (hbasis.size() != 1) continue;
        const QVector& h = hbasis[0];
        bool any_pos = false, any_neg = false;
        for (const QVector& g : nz) {
            const Rational val = q_dot(h, g);
            if (val > 0) any_pos = true;
            else if (val < 0) any_neg = true;
            if (any_pos && any_neg) break;
        }
        if (any_pos && any_neg) continue;  // not a supporting hyperplane
        AffineFunctional f;
        f.linear = (any_pos || !any_neg) ? h : q_scale(Rational(-1), h);
        f.constant = 0;
        const AffineFunctional canon = detail::canonical_positive_multiple(f);
        std::vector<Rational> key = canon.linear;
        key.push_back(canon.constant);
        if (seen.insert(std::move(key)).second) cs.push_back(std::move(f));
    } while (detail::next_combination(idx, nz.size()));
    return ConvexDomain(dim, std::move(cs));
}

// True iff D is empty or has trivial recession cone; decided by 2 * dim
// satisfiability calls on the homogenized system.
inline bool is_bounded(const ConvexDomain& d) {
    if (!is_satisfiable(d).satisfiable) return true;
    std::vector<AffineFunctional> recession;
    for (const AffineFunctional& f : d.constraints()) {
        AffineFunctional g;
        g.linear = f.linear;
        g.constant = 0;
        recession.push_back(std::move(g));
    }
    for (std::size_t j = 0; j < d.dimension(); ++j) {
        for (int sign = 0; sign < 2; ++sign) {
            std::vector<AffineFunctional> sys = recession;
            AffineFunctional far;  // x_j >= 1 resp. -x_j >= 1 within the recession cone
            far.linear = QVector(d.dimension(), Rational(0));
            far.linear[j] = sign == 0 ? 1 : -1;
            far.constant = -1;
            sys.push_back(std::move(far));
            if (is_satisfiable(ConvexDomain(d.dimension(), std::move(sys))).satisfiable)
                return false;
        }
    }
    return true;
}

namespace detail {

// Substitutes the equality f = 0 (solved for coordinate `pivot`) into g,
// producing a functional over the remaining coordinates.
inline AffineFunctional substitute_equality(const AffineFunctional& g, const AffineFunctional& f,
                                            std::size_t pivot) {
    const Rational& fp = f.linear[pivot];
    AffineFunctional r;
    r.linear.reserve(g.linear.size() - 1);
    const Rational factor = g.linear[pivot] / fp;
    for (std::size_t l = 0; l < g.linear.size(); ++l) {
        if (l == pivot) continue;
        r.linear.push_back(g.linear[l] - factor * f.linear[l]);
    }
    r.constant = g.constant - factor * f.constant;
    return r;
}

inline std::vector<QVector> hull_points_recursive(const ConvexDomain& d) {
    if (!is_satisfiable(d).satisfiable) return {};
    if (d.dimension() == 0) return {QVector{}};
    const std::vector<AffineFunctional> cs = cleanup_constraints(d.constraints());
    std::vector<QVector> points;
    std::set<QVector> seen;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::size_t pivot = cs[i].linear.size();
        for (std::size_t l = 0; l < cs[i].linear.size(); ++l)
            if (cs[i].linear[l] != 0) {
                pivot = l;
                break;
            }
        if (pivot == cs[i].linear.size()) continue;  // constant constraint, not a facet
        std::vector<AffineFunctional> sub;
        sub.reserve(cs.size() - 1);
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (j != i) sub.push_back(substitute_equality(cs[j], cs[i], pivot));
        for (const QVector& y : hull_points_recursive(ConvexDomain(d.dimension() - 1, sub))) {
            // Reinsert the pivot coordinate from the facet equality.
            QVector x(d.dimension());
            Rational acc = cs[i].constant;
            std::size_t yi = 0;
            for (std::size_t l = 0; l < d.dimension(); ++l) {
                if (l == pivot) continue;
                x[l] = y[yi++];
                acc += cs[i].linear[l] * x[l];
            }
            x[pivot] = -acc / cs[i].linear[pivot];
            if (seen.insert(x).second) points.push_back(std::move(x));
        }
    }
    return points;
}

}  // namespace detail

// Minimal V-representation of a bounded domain by the facet recursion: the
// vertex set of D is the union of the vertex sets of its facets
// C_i = {p_i = 0} cap {p_j >= 0, j != i}, each handled in a parameterization
// of the facet hyperplane. Non-extreme points are pruned at the end and the
// result is sorted lexicographically.
inline VPolytope halfspaces_to_hull(const ConvexDomain& d) {
    if (!is_satisfiable(d).satisfiable) return VPolytope(d.dimension(), {});
    if (!is_bounded(d)) throw std::runtime_error("halfspaces_to_hull: not a polytope");
    std::vector<QVector> points = detail::hull_points_recursive(d);
    std::sort(points.begin(), points.end());
    // Prune points inside the hull of the others.
    for (std::size_t i = 0; i < points.size();) {
        std::vector<QVector> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (hull_membership(points[i], VPolytope(d.dimension(), std::move(others))))
            points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return VPolytope(d.dimension(), std::move(points));
}

}  // namespace ordcone

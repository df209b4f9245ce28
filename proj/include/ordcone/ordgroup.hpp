// Finitely presented partially ordered abelian groups: presentations are
// reduced to torsion-free normal form (Z^rank with a normalized positive
// cone) via Smith reduction and a unimodular positive normalization; the
// module also provides the finite-presentation condition checks, induced
// subgroups with box-bounded certification, directedness, and the simplicial
// machinery over rational vector-space cones (domination, simplicial-basis
// verification with a double criterion, bounded extension search).

#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "int_linalg.hpp"
#include "lattice.hpp"
#include "monoid.hpp"
#include "polyhedra.hpp"
#include "qlinalg.hpp"
#include "rational.hpp"

namespace ordcone {

class GroupPresentation {
public:
    GroupPresentation(std::size_t num_gens, std::vector<IntVector> equalities,
                      std::vector<IntVector> positives)
        : num_gens_(num_gens), equalities_(std::move(equalities)), positives_(std::move(positives)) {
        for (const IntVector& r : equalities_)
            if (r.size() != num_gens_)
                throw std::invalid_argument("GroupPresentation: equality length mismatch");
        for (const IntVector& s : positives_)
            if (s.size() != num_gens_)
                throw std::invalid_argument("GroupPresentation: positive-element length mismatch");
    }

    std::size_t num_gens() const { return num_gens_; }
    const std::vector<IntVector>& equalities() const { return equalities_; }
    const std::vector<IntVector>& positives() const { return positives_; }

private:
    std::size_t num_gens_;
    std::vector<IntVector> equalities_;
    std::vector<IntVector> positives_;
};

struct GroupNormalForm {
    std::size_t rank;
    std::vector<Int> torsion;  // elementary divisors > 1, in divisibility order
};

// Rank and torsion invariants of the presented group, read off the Smith
// normal form of the equality matrix.
inline GroupNormalForm group_normal_form(const GroupPresentation& p) {
    if (p.equalities().empty()) return {p.num_gens(), {}};
    const SmithResult s = smith_normal_form(IntMatrix::from_rows(p.equalities(), p.num_gens()));
    std::size_t relation_rank = 0;
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i) {
        if (s.d(i, i) == 0) break;  // zero divisors trail the chain
        if (s.d(i, i) > 1) torsion.push_back(s.d(i, i));
        ++relation_rank;
    }
    return {p.num_gens() - relation_rank, torsion};
}

// Unimodular U with U x strictly positive (every coordinate >= 1) for every
// x in X. Construction: a separating functional r with r . x >= 1 on the
// hull of X (scaled to a primitive integer vector), a Bezout vector e with
// r . e = 1, a kernel lattice basis e_0..e_{m-1} of r, integer coordinates
// xi of each x in the basis (e_0,...,e_{m-1},e), the smallest integer lambda
// strictly greater than every -xi/(r . x), and the basis change onto
// (e_0,...,e_{m-1}, e - lambda * sum e_i).
inline UnimodularMap positive_normalization_lattice(const std::vector<IntVector>& x) {
    if (x.empty()) throw std::invalid_argument("positive_normalization_lattice: empty input");
    const std::size_t n = x[0].size();
    std::vector<QVector> xq;
    xq.reserve(x.size());
    for (const IntVector& v : x) {
        if (v.size() != n)
            throw std::invalid_argument("positive_normalization_lattice: dimension mismatch");
        if (v.is_zero())
            throw std::runtime_error("positive_normalization_lattice: zero vector in input");
        xq.push_back(v.to_rational());
    }
    if (hull_membership(QVector(n, Rational(0)), VPolytope(n, xq)))
        throw std::runtime_error(
            "positive_normalization_lattice: 0 lies in the convex hull of the input");

    const QVector p = separate_from_origin(hull_to_halfspaces(VPolytope(n, xq)));
    Int scale = 1;
    for (const Rational& c : p) scale = boost::multiprecision::lcm(scale, rat_den(c));
    IntVector r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = rat_num(p[i]) * (scale / rat_den(p[i]));
    r = primitive_vector(r);

    std::vector<Int> height;
    height.reserve(x.size());
    for (const IntVector& v : x) {
        Int h = r.dot(v);
        if (h <= 0) throw std::logic_error("positive_normalization_lattice: separation failed");
        height.push_back(std::move(h));
    }

    const IntVector e = bezout(r).coefficients;  // r . e == 1 since r is primitive
    const std::vector<IntVector> kernel = kernel_lattice_basis(r);

    std::vector<IntVector> cols = kernel;
    cols.push_back(e);
    const IntMatrix binv = int_inverse_unimodular(IntMatrix::from_columns(cols, n));
    std::optional<Rational> max_ratio;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const IntVector xi = binv * x[k];
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const Rational ratio = Rational(-xi[i]) / Rational(height[k]);
            if (!max_ratio || ratio > *max_ratio) max_ratio = ratio;
        }
    }
    const Int lambda = max_ratio ? rational_floor(*max_ratio) + 1 : Int(0);

    IntVector kernel_sum(n);
    for (const IntVector& k : kernel) kernel_sum += k;
    std::vector<IntVector> new_cols = kernel;
    new_cols.push_back(e - kernel_sum * lambda);
    const IntMatrix basis = IntMatrix::from_columns(new_cols, n);
    const UnimodularMap u(int_inverse_unimodular(basis), basis);

    for (const IntVector& v : x) {
        const IntVector img = u.apply(v);
        for (std::size_t i = 0; i < n; ++i)
            if (img[i] < 1)
                throw std::logic_error("positive_normalization_lattice: image not strictly positive");
    }
    return u;
}

// Rational-field variant: an invertible rational matrix mapping every x into
// the strictly positive orthant; same construction without integrality, with
// lambda = max + 1. Short-circuits to the identity when the input already
// lies in the strictly positive orthant.
inline QMatrix positive_normalization_vs(const std::vector<QVector>& x) {
    if (x.empty()) throw std::invalid_argument("positive_normalization_vs: empty input");
    const std::size_t n = x[0].size();
    bool already_positive = true;
    for (const QVector& v : x) {
        if (v.size() != n)
            throw std::invalid_argument("positive_normalization_vs: dimension mismatch");
        if (q_is_zero(v)) throw std::runtime_error("positive_normalization_vs: zero vector in input");
        for (const Rational& c : v)
            if (c <= 0) already_positive = false;
    }
    if (already_positive) {
        QMatrix id(n, QVector(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    }
    if (hull_membership(QVector(n, Rational(0)), VPolytope(n, x)))
        throw std::runtime_error("positive_normalization_vs: 0 lies in the convex hull of the input");

    const QVector r = separate_from_origin(hull_to_halfspaces(VPolytope(n, x)));
    const QVector e = q_scale(Rational(1) / q_dot(r, r), r);  // r . e == 1
    const std::vector<QVector> kernel = q_nullspace(QMatrix{r}, n);

    std::vector<QVector> cols = kernel;
    cols.push_back(e);
    std::optional<Rational> max_ratio;
    for (const QVector& v : x) {
        const std::optional<QVector> xi = q_solve_columns(cols, v);
        if (!xi) throw std::logic_error("positive_normalization_vs: coordinate solve failed");
        const Rational h = q_dot(r, v);  // equals the last coordinate, > 0
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const Rational ratio = -(*xi)[i] / h;
            if (!max_ratio || ratio > *max_ratio) max_ratio = ratio;
        }
    }
    const Rational lambda = max_ratio ? *max_ratio + 1 : Rational(0);

    QVector kernel_sum(n, Rational(0));
    for (const QVector& k : kernel) kernel_sum = q_add(kernel_sum, k);
    std::vector<QVector> new_cols = kernel;
    new_cols.push_back(q_sub(e, q_scale(lambda, kernel_sum)));
    QMatrix basis(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis[i][j] = new_cols[j][i];
    const std::optional<QMatrix> inv = q_inverse(basis);
    if (!inv) throw std::logic_error("positive_normalization_vs: basis not invertible");

    for (const QVector& v : x) {
        const QVector img = q_matvec(*inv, v);
        for (const Rational& c : img)
            if (c <= 0)
                throw std::logic_error("positive_normalization_vs: image not strictly positive");
    }
    return *inv;
}

struct NormalizedGroup {
    std::size_t rank;
    FinGenMonoid cone;              // normalized positive cone in Z^rank
    UnimodularMap change_of_basis;  // raw quotient coordinates -> normalized coordinates
    std::vector<IntVector> gen_images;  // presentation generators, normalized coordinates
};

// Torsion-free realization of a presentation as (Z^rank, normalized cone):
// Smith-reduce the equalities, map generators into Z^rank, collect the
// nonzero images of the declared positive elements, check pointedness, and
// normalize via positive_normalization_lattice.
inline NormalizedGroup realize(const GroupPresentation& p) {
    const std::size_t m = p.num_gens();
    IntMatrix v = IntMatrix::identity(m);
    std::size_t relation_rank = 0;
    if (!p.equalities().empty()) {
        const SmithResult s = smith_normal_form(IntMatrix::from_rows(p.equalities(), m));
        for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i) {
            if (s.d(i, i) == 0) break;
            if (s.d(i, i) > 1)
                throw std::runtime_error("torsion-free required: presentation has torsion invariants");
            ++relation_rank;
        }
        v = s.col_transform.matrix();
    }
    const std::size_t rank = m - relation_rank;

    // Image of generator i: row i of V restricted to the free columns.
    std::vector<IntVector> raw_images;
    raw_images.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        IntVector img(rank);
        for (std::size_t j = 0; j < rank; ++j) img[j] = v(i, relation_rank + j);
        raw_images.push_back(std::move(img));
    }

    std::vector<IntVector> raw_cone;
    for (const IntVector& s : p.positives()) {
        IntVector img(rank);
        for (std::size_t i = 0; i < m; ++i)
            if (s[i] != 0) img += raw_images[i] * s[i];
        if (!img.is_zero()) raw_cone.push_back(std::move(img));
    }

    if (raw_cone.empty())
        return {rank, FinGenMonoid(rank, {}), UnimodularMap::identity(rank), raw_images};

    std::vector<QVector> coneq;
    coneq.reserve(raw_cone.size());
    for (const IntVector& g : raw_cone) coneq.push_back(g.to_rational());
    if (hull_membership(QVector(rank, Rational(0)), VPolytope(rank, coneq)))
        throw std::runtime_error(
            "presented order is not antisymmetric: 0 lies in the hull of positive generators");

    const UnimodularMap u = positive_normalization_lattice(raw_cone);
    std::vector<IntVector> cone_gens;
    cone_gens.reserve(raw_cone.size());
    for (const IntVector& g : raw_cone) cone_gens.push_back(u.apply(g));
    std::vector<IntVector> gen_images;
    gen_images.reserve(m);
    for (const IntVector& g : raw_images) gen_images.push_back(u.apply(g));
    return {rank, FinGenMonoid(rank, std::move(cone_gens)), u, std::move(gen_images)};
}

struct FpConditionsReport {
    bool cone_finitely_generated = false;
    bool minimal_elements_generate = false;
    bool descents_terminate = false;
    bool weakly_archimedean = false;
    std::size_t minimal_count = 0;

    bool all_passed() const {
        return cone_finitely_generated && minimal_elements_generate && descents_terminate &&
               weakly_archimedean;
    }
};

// Checks the finite-presentation characterization on a realized group:
// (a) the cone carries an explicit finite generator list; (b) its minimal
// elements are finite and generate (certificates verified); (c) random
// greedy descents terminate within the coordinate-sum bound, probing
// well-foundedness; (d) weak-Archimedean spot checks: for cone elements
// a != 0 and b, some n <= coordinate-sum(b) + 1 has n a not<= b.
inline FpConditionsReport verify_fp_conditions(const NormalizedGroup& g, std::size_t probes = 16) {
    FpConditionsReport rep;
    const FinGenMonoid& m = g.cone;
    rep.cone_finitely_generated = true;

    const std::vector<IntVector> mins = minimal_elements(m);
    rep.minimal_count = mins.size();
    const FinGenMonoid min_monoid(g.rank, mins);
    rep.minimal_elements_generate = true;
    for (const IntVector& gen : m.gens()) {
        const auto res = contains(min_monoid, gen);
        if (!res.first) {
            rep.minimal_elements_generate = false;
            break;
        }
        IntVector recomposed(g.rank);
        for (std::size_t i = 0; i < mins.size(); ++i)
            if (res.second->coefficients[i] != 0)
                recomposed += mins[i] * res.second->coefficients[i];
        if (recomposed != gen) {
            rep.minimal_elements_generate = false;
            break;
        }
    }

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    rep.descents_terminate = true;
    rep.weakly_archimedean = true;
    if (m.gens().empty()) return rep;

    std::uniform_int_distribution<int> coeff(0, 3);
    for (std::size_t probe = 0; probe < probes && rep.descents_terminate; ++probe) {
        IntVector cur(g.rank);
        for (const IntVector& gen : m.gens()) {
            const int c = coeff(rng);
            if (c != 0) cur += gen * Int(c);
        }
        const Int bound = cur.coordinate_sum();
        Int steps = 0;
        while (!cur.is_zero()) {
            bool stepped = false;
            for (const IntVector& gen : m.gens()) {
                const IntVector next = cur - gen;
                if (next.is_componentwise_nonnegative() && contains(m, next).first) {
                    cur = next;
                    stepped = true;
                    break;
                }
            }
            if (!stepped || ++steps > bound) {
                rep.descents_terminate = false;
                break;
            }
        }
    }

    std::uniform_int_distribution<std::size_t> pick(0, m.gens().size() - 1);
    for (std::size_t probe = 0; probe < probes && rep.weakly_archimedean; ++probe) {
        const IntVector a = m.gens()[pick(rng)];
        IntVector b(g.rank);
        for (const IntVector& gen : m.gens()) {
            const int c = coeff(rng);
            if (c != 0) b += gen * Int(c);
        }
        const Int nmax = b.coordinate_sum() + 1;
        bool found = false;
        for (Int nn = 1; nn <= nmax && !found; ++nn)
            if (!algebraic_leq(m, a * nn, b)) found = true;
        if (!found) rep.weakly_archimedean = false;
    }
    return rep;
}

// True iff the cone generators generate all of Z^rank as a group: the Smith
// form of the generator matrix has full rank with every divisor equal to 1.
inline bool is_directed(const NormalizedGroup& g) {
    if (g.cone.gens().empty()) return g.rank == 0;
    const SmithResult s = smith_normal_form(IntMatrix::from_rows(g.cone.gens(), g.rank));
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i) {
        if (s.d(i, i) == 0) break;
        if (s.d(i, i) != 1) return false;
        ++r;
    }
    return r == g.rank;
}

struct InducedSubgroupResult {
    std::optional<NormalizedGroup> subgroup;  // engaged iff the box certification succeeded
    std::optional<IntVector> offender;        // smallest element spoiling certification
};

// Induced ordered subgroup on the lattice H spanned by hgens: enumerate the
// elements of cone intersect H in [0, box]^rank, extract the irreducible
// ones, and certify the result (no irreducible may touch the box boundary,
// and every enumerated element must decompose over the irreducibles);
// returns the subgroup in normalized H-coordinates, or an inconclusive
// outcome carrying the smallest offending element.
inline InducedSubgroupResult induced_subgroup(const NormalizedGroup& g,
                                              const std::vector<IntVector>& hgens, const Int& box) {
    for (const IntVector& h : hgens)
        if (h.size() != g.rank) throw std::invalid_argument("induced_subgroup: dimension mismatch");
    if (box < 0) throw std::invalid_argument("induced_subgroup: negative box");
    const std::size_t n = g.rank;

    std::vector<IntVector> basis_rows;
    if (!hgens.empty()) {
        const HermiteResult hnf = hermite_normal_form(IntMatrix::from_rows(hgens, n));
        for (std::size_t i = 0; i < hnf.h.rows(); ++i) {
            IntVector row = hnf.h.row(i);
            if (!row.is_zero()) basis_rows.push_back(std::move(row));
        }
    }
    const std::size_t h = basis_rows.size();
    std::vector<QVector> bcols;
    bcols.reserve(h);
    for (const IntVector& row : basis_rows) bcols.push_back(row.to_rational());
    const auto h_coords = [&](const IntVector& v) -> std::optional<IntVector> {
        const std::optional<QVector> sol = q_solve_columns(bcols, v.to_rational());
        if (!sol) return std::nullopt;
        IntVector y(h);
        for (std::size_t i = 0; i < h; ++i) {
            if (rat_den((*sol)[i]) != 1) return std::nullopt;
            y[i] = rat_num((*sol)[i]);
        }
        return y;
    };

    IntVector bound(n);
    for (std::size_t i = 0; i < n; ++i) bound[i] = box;
    const detail::BoxReach reach(g.cone, bound);
    std::vector<IntVector> elems;  // lexicographic order
    std::set<IntVector> elem_set;
    IntVector cur(n);
    while (true) {
        if (reach.reachable(cur) && h_coords(cur)) {
            elems.push_back(cur);
            elem_set.insert(cur);
        }
        std::size_t i = n;
        bool done = true;
        while (i-- > 0) {
            if (++cur[i] <= box) {
                done = false;
                break;
            }
            cur[i] = 0;
        }
        if (done) break;
    }

    std::vector<IntVector> irr;
    for (const IntVector& xel : elems) {
        if (xel.is_zero()) continue;
        bool reducible = false;
        for (const IntVector& u : elems) {
            if (u.is_zero() || u == xel || !u.componentwise_leq(xel)) continue;
            if (elem_set.count(xel - u)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) irr.push_back(xel);
    }

    // An irreducible on the box boundary signals the box may truncate the
    // true irreducible set: inconclusive.
    for (const IntVector& v : irr)
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] == box) return {std::nullopt, v};

    if (!irr.empty()) {
        const FinGenMonoid irr_monoid(n, irr);
        for (const IntVector& xel : elems)
            if (!xel.is_zero() && !contains(irr_monoid, xel).first) return {std::nullopt, xel};
    }

    std::vector<IntVector> gen_images;
    gen_images.reserve(hgens.size());
    for (const IntVector& hg : hgens) {
        const std::optional<IntVector> y = h_coords(hg);
        if (!y) throw std::logic_error("induced_subgroup: generator outside its own lattice");
        gen_images.push_back(*y);
    }

    if (irr.empty())
        return {NormalizedGroup{h, FinGenMonoid(h, {}), UnimodularMap::identity(h),
                                std::move(gen_images)},
                std::nullopt};

    std::vector<IntVector> cone_h;
    cone_h.reserve(irr.size());
    for (const IntVector& v : irr) cone_h.push_back(*h_coords(v));
    const UnimodularMap u = positive_normalization_lattice(cone_h);
    std::vector<IntVector> cone_gens;
    cone_gens.reserve(cone_h.size());
    for (const IntVector& v : cone_h) cone_gens.push_back(u.apply(v));
    for (IntVector& gi : gen_images) gi = u.apply(gi);
    return {NormalizedGroup{h, FinGenMonoid(h, std::move(cone_gens)), u, std::move(gen_images)},
            std::nullopt};
}

// Rational vector-space cone: either an explicit generator list (pointed,
// checked) or the catalog's strict-quadrant predicate {0} union (Q^{++})^2.
class QSpaceCone {
public:
    enum class Kind { generators, strict_quadrant };

    static QSpaceCone from_generators(std::size_t dim, std::vector<QVector> gens) {
        std::vector<QVector> nonzero;
        for (const QVector& g : gens) {
            if (g.size() != dim)
                throw std::invalid_argument("QSpaceCone: generator dimension mismatch");
            if (!q_is_zero(g)) nonzero.push_back(g);
        }
        if (!nonzero.empty() &&
            hull_membership(QVector(dim, Rational(0)), VPolytope(dim, nonzero)))
            throw std::invalid_argument(
                "QSpaceCone: 0 lies in the convex hull of the nonzero generators");
        return QSpaceCone(Kind::generators, dim, std::move(gens));
    }

    static QSpaceCone strict_quadrant() { return QSpaceCone(Kind::strict_quadrant, 2, {}); }

    Kind kind() const { return kind_; }
    std::size_t dimension() const { return dim_; }
    const std::vector<QVector>& generators() const { return gens_; }

    // Membership in the positive cone E+.
    bool contains(const QVector& x) const {
        if (x.size() != dim_) throw std::invalid_argument("QSpaceCone::contains: dimension mismatch");
        if (kind_ == Kind::strict_quadrant) {
            if (q_is_zero(x)) return true;
            for (const Rational& c : x)
                if (c <= 0) return false;
            return true;
        }
        return cone_contains(dim_, gens_, x);
    }

private:
    QSpaceCone(Kind kind, std::size_t dim, std::vector<QVector> gens)
        : kind_(kind), dim_(dim), gens_(std::move(gens)) {}

    Kind kind_;
    std::size_t dim_;
    std::vector<QVector> gens_;
};

// x is dominated by y when y*lambda - x lies in the positive cone for some
// rational lambda >= 0. Generator cones reduce to Fourier-Motzkin
// feasibility; the strict quadrant has a closed-form rule.
inline bool dominated_by(const QSpaceCone& e, const QVector& x, const QVector& y) {
    if (x.size() != e.dimension() || y.size() != e.dimension())
        throw std::invalid_argument("dominated_by: dimension mismatch");
    if (e.kind() == QSpaceCone::Kind::strict_quadrant) {
        // Case A: y*lambda == x exactly for some lambda >= 0 (difference 0).
        if (q_is_zero(y)) {
            if (q_is_zero(x)) return true;
        } else {
            std::size_t j = 0;
            while (y[j] == 0) ++j;
            const Rational lambda = x[j] / y[j];
            if (lambda >= 0) {
                bool match = true;
                for (std::size_t i = 0; i < x.size() && match; ++i)
                    if (y[i] * lambda != x[i]) match = false;
                if (match) return true;
            }
        }
        // Case B: y*lambda - x strictly positive for some lambda >= 0. Each
        // coordinate gives a strict bound on lambda; zero coordinates of y
        // demand x_i < 0 outright.
        std::optional<Rational> lo, up;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (y[i] > 0) {
                const Rational b = x[i] / y[i];
                if (!lo || b > *lo) lo = b;
            } else if (y[i] < 0) {
                const Rational b = x[i] / y[i];
                if (!up || b < *up) up = b;
            } else if (x[i] >= 0) {
                return false;
            }
        }
        if (!up) return true;
        const Rational floor_bound = (lo && *lo >= 0) ? *lo : Rational(0);
        return *up > floor_bound;
    }

    // y lambda - sum_j mu_j g_j = x with lambda, mu >= 0: columns y, -g_j.
    std::vector<QVector> columns;
    columns.reserve(1 + e.generators().size());
    columns.push_back(y);
    for (const QVector& g : e.generators()) columns.push_back(q_scale(Rational(-1), g));
    return detail::nonnegative_combination_exists(columns, x);
}

namespace detail {

// Representatives of the extreme rays of a pointed cone spanned by the given
// nonzero generators: scale each onto the cross-section {p . x = 1} and
// prune the section points lying in the hull of the others.
inline std::vector<QVector> ray_representatives(std::size_t dim, const std::vector<QVector>& gens) {
    const QVector p = separate_from_origin(hull_to_halfspaces(VPolytope(dim, gens)));
    std::vector<QVector> sections;
    std::set<QVector> seen;
    for (const QVector& g : gens) {
        QVector s = q_scale(Rational(1) / q_dot(p, g), g);
        if (seen.insert(s).second) sections.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < sections.size();) {
        std::vector<QVector> others;
        others.reserve(sections.size() - 1);
        for (std::size_t j = 0; j < sections.size(); ++j)
            if (j != i) others.push_back(sections[j]);
        if (!others.empty() && hull_membership(sections[i], VPolytope(dim, std::move(others))))
            sections.erase(sections.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return sections;
}

}  // namespace detail

// B is a simplicial basis when it is linearly independent and no b_k is
// dominated by the sum of the others; for generator cones the equivalent
// span(B) intersect cone == cone(B) criterion is evaluated as a cross-check
// (extreme rays of the sliced intersection must lie in cone(B)) and the two
// verdicts must agree.
inline bool is_simplicial_basis(const QSpaceCone& e, const std::vector<QVector>& b) {
    for (const QVector& v : b) {
        if (v.size() != e.dimension())
            throw std::invalid_argument("is_simplicial_basis: dimension mismatch");
        if (q_is_zero(v) || !e.contains(v))
            throw std::runtime_error("is_simplicial_basis: candidate not in the positive cone or zero");
    }
    if (b.empty()) return true;
    QMatrix rows(b.begin(), b.end());
    if (q_rank(rows) != b.size()) return false;

    bool no_domination = true;
    for (std::size_t k = 0; k < b.size() && no_domination; ++k) {
        QVector sum(e.dimension(), Rational(0));
        for (std::size_t l = 0; l < b.size(); ++l)
            if (l != k) sum = q_add(sum, b[l]);
        if (dominated_by(e, b[k], sum)) no_domination = false;
    }
    if (e.kind() != QSpaceCone::Kind::generators) return no_domination;

    // Cross-check: every extreme ray of span(B) intersect cone(E) lies in
    // cone(B). The intersection is sliced by a functional positive on the
    // cone, giving a polytope whose vertices represent the rays.
    std::vector<QVector> nonzero;
    for (const QVector& g : e.generators())
        if (!q_is_zero(g)) nonzero.push_back(g);
    std::vector<AffineFunctional> cs = cone_halfspaces(e.dimension(), e.generators()).constraints();
    for (const QVector& nrm : q_nullspace(rows, e.dimension())) {
        AffineFunctional eq;
        eq.linear = nrm;
        eq.constant = 0;
        AffineFunctional neq;
        neq.linear = q_scale(Rational(-1), nrm);
        neq.constant = 0;
        cs.push_back(std::move(eq));
        cs.push_back(std::move(neq));
    }
    const QVector p = separate_from_origin(hull_to_halfspaces(VPolytope(e.dimension(), nonzero)));
    AffineFunctional slice;
    slice.linear = p;
    slice.constant = -1;
    AffineFunctional nslice;
    nslice.linear = q_scale(Rational(-1), p);
    nslice.constant = 1;
    cs.push_back(std::move(slice));
    cs.push_back(std::move(nslice));
    const VPolytope section = halfspaces_to_hull(ConvexDomain(e.dimension(), std::move(cs)));
    bool span_cone_equal = true;
    for (const QVector& vtx : section.points())
        if (!cone_contains(e.dimension(), b, vtx)) {
            span_cone_equal = false;
            break;
        }
    if (span_cone_equal != no_domination)
        throw std::logic_error("is_simplicial_basis: domination and span-cone criteria disagree");
    return no_domination;
}

// Bounded search for a simplicial basis spanning a superspace of
// span(F_gens): (1) F_gens and its span-preserving subsets; (2) extreme rays
// of cone(F_gens); (3) bases drawn from nonnegative generator combinations
// with coefficients up to `budget`. Sound (every returned basis is verified
// by is_simplicial_basis), not complete.
inline std::optional<std::vector<QVector>> simplicial_extension_search(
    const QSpaceCone& e, const std::vector<QVector>& f_gens, std::size_t budget) {
    for (const QVector& f : f_gens)
        if (f.size() != e.dimension())
            throw std::invalid_argument("simplicial_extension_search: dimension mismatch");
    QMatrix frows(f_gens.begin(), f_gens.end());
    const std::size_t frank = q_rank(frows);

    const auto try_candidate = [&](const std::vector<QVector>& cand) -> bool {
        for (const QVector& v : cand)
            if (q_is_zero(v) || !e.contains(v)) return false;
        QMatrix all(cand.begin(), cand.end());
        if (q_rank(all) != cand.size()) return false;
        for (const QVector& f : f_gens) all.push_back(f);
        if (q_rank(all) != cand.size()) return false;  // span(B) must absorb span(F)
        return is_simplicial_basis(e, cand);
    };

    // Stage 1: F itself, then span-preserving subsets, larger first.
    if (try_candidate(f_gens)) return f_gens;
    const std::size_t fn = f_gens.size();
    if (fn > 0 && fn <= 16) {
        for (std::size_t size = fn; size-- > 0;) {
            for (std::size_t mask = 0; mask < (std::size_t(1) << fn); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
                std::vector<QVector> subset;
                for (std::size_t i = 0; i < fn; ++i)
                    if (mask & (std::size_t(1) << i)) subset.push_back(f_gens[i]);
                QMatrix srows(subset.begin(), subset.end());
                if (q_rank(srows) != frank) continue;
                if (try_candidate(subset)) return subset;
            }
        }
    }

    // Stage 2: extreme rays of cone(F), when that cone is pointed.
    std::vector<QVector> nonzero_f;
    for (const QVector& f : f_gens)
        if (!q_is_zero(f)) nonzero_f.push_back(f);
    if (!nonzero_f.empty() &&
        !hull_membership(QVector(e.dimension(), Rational(0)), VPolytope(e.dimension(), nonzero_f))) {
        const std::vector<QVector> rays = detail::ray_representatives(e.dimension(), nonzero_f);
        if (try_candidate(rays)) return rays;
    }

    // Stage 3: combinations of the cone's generators with small coefficients.
    if (e.kind() == QSpaceCone::Kind::generators && !e.generators().empty() && budget > 0) {
        constexpr std::size_t kMaxPool = 24;
        std::vector<QVector> pool;
        std::set<QVector> seen;
        const std::size_t n = e.generators().size();
        std::vector<std::size_t> c(n, 0);
        while (pool.size() < kMaxPool) {
            std::size_t i = n;
            bool done = true;
            while (i-- > 0) {
                if (++c[i] <= budget) {
                    done = false;
                    break;
                }
                c[i] = 0;
            }
            if (done) break;
            QVector vec(e.dimension(), Rational(0));
            for (std::size_t j = 0; j < n; ++j)
                if (c[j] != 0) vec = q_add(vec, q_scale(Rational(c[j]), e.generators()[j]));
            if (!q_is_zero(vec) && seen.insert(vec).second) pool.push_back(std::move(vec));
        }
        const std::size_t max_size = std::min(e.dimension(), pool.size());
        std::vector<std::size_t> idx;
        const auto combos = [&](auto&& self, std::size_t start, std::size_t size)
            -> std::optional<std::vector<QVector>> {
            if (idx.size() == size) {
                std::vector<QVector> cand;
                cand.reserve(size);
                for (std::size_t i : idx) cand.push_back(pool[i]);
                if (try_candidate(cand)) return cand;
                return std::nullopt;
            }
            for (std::size_t i = start; i < pool.size(); ++i) {
                idx.push_back(i);
                if (auto r = self(self, i + 1, size)) return r;
                idx.pop_back();
            }
            return std::nullopt;
        };
        for (std::size_t size = 1; size <= max_size; ++size)
            if (auto r = combos(combos, 0, size)) return r;
    }
    return std::nullopt;
}

}  // namespace ordcone

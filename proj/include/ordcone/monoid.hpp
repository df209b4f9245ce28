// Finitely generated submonoids of Z^n in normalized position: all
// generators nonzero with nonnegative coordinates. Normalization makes the
// algebraic order well-founded (every nonzero element has coordinate-sum
// >= 1), which keeps membership search, minimal elements, intervals and the
// saturation computation finite.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "int_linalg.hpp"
#include "polyhedra.hpp"
#include "qlinalg.hpp"
#include "rational.hpp"

namespace ordcone {

class FinGenMonoid {
public:
    FinGenMonoid(std::size_t dim, std::vector<IntVector> gens)
        : dim_(dim), gens_(std::move(gens)) {
        for (const IntVector& g : gens_) {
            if (g.size() != dim_)
                throw std::invalid_argument("FinGenMonoid: generator dimension mismatch");
            if (g.is_zero() || !g.is_componentwise_nonnegative())
                throw std::invalid_argument(
                    "FinGenMonoid: generators must be nonzero with nonnegative coordinates");
        }
    }

    std::size_t dimension() const { return dim_; }
    const std::vector<IntVector>& gens() const { return gens_; }

private:
    std::size_t dim_;
    std::vector<IntVector> gens_;
};

struct MembershipCertificate {
    std::vector<Int> coefficients;  // one per generator, in generator order
};

namespace detail {

constexpr std::size_t kMaxBoxCells = std::size_t(1) << 25;

inline long long to_ll(const Int& x) { return x.convert_to<long long>(); }

// Reachability table for the componentwise box [0, bound]: a cell is
// reachable when it is a nonnegative-integer combination of the generators.
// Cells are flat mixed-radix indices so that subtracting a generator is a
// constant offset; the per-cell record remembers the first generator usable
// to step back toward 0, which makes certificates canonical.
class BoxReach {
public:
    BoxReach(const FinGenMonoid& m, const IntVector& bound)
        : dim_(m.dimension()), num_gens_(m.gens().size()) {
        if (bound.size() != dim_) throw std::invalid_argument("BoxReach: dimension mismatch");
        Int cells = 1;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (bound[i] < 0) throw std::invalid_argument("BoxReach: negative bound");
            cells *= bound[i] + 1;
            if (cells > Int(kMaxBoxCells))
                throw std::runtime_error("membership box too large");
        }
        bound_.resize(dim_);
        for (std::size_t i = 0; i < dim_; ++i) bound_[i] = to_ll(bound[i]);
        strides_.assign(dim_, 1);
        for (std::size_t i = dim_; i-- > 1;) strides_[i - 1] = strides_[i] * (bound_[i] + 1);
        const std::size_t ncells = static_cast<std::size_t>(to_ll(cells));

        for (std::size_t gi = 0; gi < num_gens_; ++gi) {
            const IntVector& g = m.gens()[gi];
            bool fits = true;
            for (std::size_t i = 0; i < dim_ && fits; ++i)
                if (g[i] > bound[i]) fits = false;
            if (!fits) continue;  // can never be subtracted inside the box
            NarrowGen ng;
            ng.index = gi;
            ng.coords.resize(dim_);
            ng.offset = 0;
            for (std::size_t i = 0; i < dim_; ++i) {
                ng.coords[i] = to_ll(g[i]);
                ng.offset += ng.coords[i] * strides_[i];
            }
            gens_.push_back(std::move(ng));
        }

        state_.assign(ncells, kUnreachable);
        state_[0] = kOrigin;
        std::vector<long long> p(dim_, 0);
        for (std::size_t idx = 1; idx < ncells; ++idx) {
            // Advance the mixed-radix coordinate counter.
            for (std::size_t i = dim_; i-- > 0;) {
                if (++p[i] <= bound_[i]) break;
                p[i] = 0;
            }
            for (std::size_t g = 0; g < gens_.size(); ++g) {
                bool fits = true;
                for (std::size_t i = 0; i < dim_ && fits; ++i)
                    if (gens_[g].coords[i] > p[i]) fits = false;
                if (!fits) continue;
                if (state_[idx - static_cast<std::size_t>(gens_[g].offset)] != kUnreachable) {
                    state_[idx] = static_cast<std::int32_t>(g);
                    break;
                }
            }
        }
    }

    // False for vectors outside the box or with negative coordinates.
    bool reachable(const IntVector& v) const {
        const auto idx = flat(v);
        return idx && state_[*idx] != kUnreachable;
    }

    // Pre: reachable(v).
    MembershipCertificate certificate(const IntVector& v) const {
        MembershipCertificate cert;
        cert.coefficients.assign(num_gens_, Int(0));
        std::size_t idx = *flat(v);
        while (state_[idx] != kOrigin) {
            const NarrowGen& g = gens_[static_cast<std::size_t>(state_[idx])];
            cert.coefficients[g.index] += 1;
            idx -= static_cast<std::size_t>(g.offset);
        }
        return cert;
    }

private:
    static constexpr std::int32_t kUnreachable = -2;
    static constexpr std::int32_t kOrigin = -1;

    struct NarrowGen {
        std::size_t index;  // position in the monoid's generator list
        std::vector<long long> coords;
        long long offset;
    };

    std::optional<std::size_t> flat(const IntVector& v) const {
        if (v.size() != dim_) throw std::invalid_argument("BoxReach: dimension mismatch");
        long long idx = 0;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (v[i] < 0 || v[i] > bound_[i]) return std::nullopt;
            idx += to_ll(v[i]) * strides_[i];
        }
        return static_cast<std::size_t>(idx);
    }

    std::size_t dim_;
    std::size_t num_gens_;
    std::vector<long long> bound_, strides_;
    std::vector<NarrowGen> gens_;
    std::vector<std::int32_t> state_;
};

inline bool colex_less(const IntVector& a, const IntVector& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        // Compare most significant (last) coordinate first.
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace detail

// Exact membership with certificate, by dynamic programming over the
// componentwise box [0, a].
inline std::pair<bool, std::optional<MembershipCertificate>> contains(const FinGenMonoid& m,
                                                                      const IntVector& a) {
    if (a.size() != m.dimension()) throw std::invalid_argument("contains: dimension mismatch");
    if (!a.is_componentwise_nonnegative()) return {false, std::nullopt};
    const detail::BoxReach reach(m, a);
    if (!reach.reachable(a)) return {false, std::nullopt};
    return {true, reach.certificate(a)};
}

// x <= y in the algebraic order iff y - x is a monoid element.
inline bool algebraic_leq(const FinGenMonoid& m, const IntVector& x, const IntVector& y) {
    if (x.size() != m.dimension() || y.size() != m.dimension())
        throw std::invalid_argument("algebraic_leq: dimension mismatch");
    return contains(m, y - x).first;
}

// Irreducible elements of M \ {0} (the unique minimal generating set).
// Under normalization every irreducible is a generator, so each generator is
// tested for a decomposition g = u + v with u, v nonzero monoid elements via
// one reachability table over [0, g].
inline std::vector<IntVector> minimal_elements(const FinGenMonoid& m) {
    std::set<IntVector> out;
    std::set<IntVector> tested;
    for (const IntVector& g : m.gens()) {
        if (!tested.insert(g).second) continue;
        const detail::BoxReach reach(m, g);
        bool reducible = false;
        // Enumerate u in the box [0, g]; u and g - u must both be reachable.
        IntVector u(m.dimension());
        const auto advance = [&]() {
            for (std::size_t i = m.dimension(); i-- > 0;) {
                if (++u[i] <= g[i]) return true;
                u[i] = 0;
            }
            return false;
        };
        if (m.dimension() == 0) continue;
        while (advance()) {  // skips u = 0; the loop ends after wrapping past g
            if (u == g) continue;
            if (reach.reachable(u) && reach.reachable(g - u)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.insert(g);
    }
    return {out.begin(), out.end()};
}

// Minimal elements of X under the algebraic order; first occurrence kept
// among exact duplicates, original order preserved. Satisfies
// "up-set of X" == "up-set of result" inside M.
inline std::vector<IntVector> upward_closure_basis(const FinGenMonoid& m,
                                                   const std::vector<IntVector>& x) {
    for (const IntVector& e : x)
        if (!contains(m, e).first)
            throw std::runtime_error("upward_closure_basis: element not in monoid: " + e.str());
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < x.size() && keep; ++j) {
            if (x[j] == x[i]) {
                if (j < i) keep = false;  // duplicate, keep first occurrence
            } else if (algebraic_leq(m, x[j], x[i])) {
                keep = false;
            }
        }
        if (keep) out.push_back(x[i]);
    }
    return out;
}

// The finite order interval [a, b] = {x : a <= x <= b}: reduce to [0, b-a],
// bound the multiplicity n_i of each generator by the largest n with
// n g_i <= b-a, enumerate multiplicity tuples, filter, translate back by a.
// Output sorted lexicographically.
inline std::vector<IntVector> interval(const FinGenMonoid& m, const IntVector& a,
                                       const IntVector& b) {
    if (a.size() != m.dimension() || b.size() != m.dimension())
        throw std::invalid_argument("interval: dimension mismatch");
    const IntVector d = b - a;
    if (!d.is_componentwise_nonnegative() || !contains(m, d).first)
        throw std::runtime_error("interval: empty interval precondition");
    const detail::BoxReach reach(m, d);

    const std::size_t ngens = m.gens().size();
    std::vector<Int> nmax(ngens, Int(0));
    for (std::size_t gi = 0; gi < ngens; ++gi) {
        const IntVector& g = m.gens()[gi];
        Int cap = -1;  // componentwise cap (generators are nonzero, so finite)
        for (std::size_t i = 0; i < m.dimension(); ++i) {
            if (g[i] == 0) continue;
            const Int c = floor_div(d[i], g[i]);
            if (cap < 0 || c < cap) cap = c;
        }
        for (Int n = cap; n >= 0; --n) {
            if (reach.reachable(d - g * n)) {
                nmax[gi] = n;
                break;
            }
        }
    }

    std::set<IntVector> points;
    std::vector<Int> k(ngens, Int(0));
    while (true) {
        IntVector x(m.dimension());
        for (std::size_t gi = 0; gi < ngens; ++gi)
            if (k[gi] != 0) x += m.gens()[gi] * k[gi];
        if (x.componentwise_leq(d) && reach.reachable(d - x)) points.insert(x + a);
        std::size_t digit = ngens;
        while (digit-- > 0) {
            if (++k[digit] <= nmax[digit]) break;
            k[digit] = 0;
            if (digit == 0) return {points.begin(), points.end()};
        }
        if (ngens == 0) break;
    }
    return {points.begin(), points.end()};
}

namespace detail {

inline std::vector<QVector> rational_gens(const FinGenMonoid& m) {
    std::vector<QVector> out;
    out.reserve(m.gens().size());
    for (const IntVector& g : m.gens()) out.push_back(g.to_rational());
    return out;
}

inline bool in_simplicial_cone(const std::vector<QVector>& columns, const QVector& x) {
    const std::optional<QVector> t = q_solve_columns(columns, x);
    if (!t) return false;
    for (const Rational& c : *t)
        if (c < 0) return false;
    return true;
}

}  // namespace detail

// True iff x is a nonnegative rational combination of the generators.
inline bool cone_membership_rational(const FinGenMonoid& m, const QVector& x) {
    if (x.size() != m.dimension())
        throw std::invalid_argument("cone_membership_rational: dimension mismatch");
    return cone_contains(m.dimension(), detail::rational_gens(m), x);
}

// Hilbert basis of the saturation cone(gens) intersect Z^dim: cover the cone
// by simplicial subcones (incremental insertion), enumerate the lattice
// points of each fundamental parallelepiped, then keep the irreducible
// candidates. The returned set generates the saturated monoid; sorted
// lexicographically.
inline std::vector<IntVector> saturation_hilbert_basis(const FinGenMonoid& m,
                                                       std::size_t max_dim = 4) {
    if (m.dimension() > max_dim) throw std::runtime_error("saturation bound exceeded");
    if (m.gens().empty()) return {};
    const std::size_t ngens = m.gens().size();
    std::vector<QVector> qgens;
    qgens.reserve(ngens);
    for (const IntVector& g : m.gens()) qgens.push_back(g.to_rational());

    // Incremental simplicial cover: simplices are index sets into gens.
    std::vector<std::vector<std::size_t>> cover;
    std::set<std::vector<std::size_t>> cover_seen;
    const auto columns_of = [&](const std::vector<std::size_t>& sigma) {
        std::vector<QVector> cols;
        cols.reserve(sigma.size());
        for (std::size_t i : sigma) cols.push_back(qgens[i]);
        return cols;
    };
    for (std::size_t k = 0; k < ngens; ++k) {
        bool covered = false;
        for (const std::vector<std::size_t>& sigma : cover)
            if (detail::in_simplicial_cone(columns_of(sigma), qgens[k])) {
                covered = true;
                break;
            }
        if (covered) continue;
        if (cover.empty()) {
            cover.push_back({k});
            cover_seen.insert({k});
            continue;
        }
        std::vector<std::vector<std::size_t>> fresh;
        for (const std::vector<std::size_t>& sigma : cover) {
            // All maximal subsets tau of sigma with tau + {g_k} independent.
            const std::size_t s = sigma.size();
            std::vector<std::vector<std::size_t>> kept;
            for (std::size_t size = s + 1; size-- > 0;) {
                // Subsets of a fixed size, in increasing bitmask order.
                for (std::size_t mask = 0; mask < (std::size_t(1) << s); ++mask) {
                    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
                    std::vector<std::size_t> tau;
                    for (std::size_t b = 0; b < s; ++b)
                        if (mask & (std::size_t(1) << b)) tau.push_back(sigma[b]);
                    bool below_kept = false;
                    for (const std::vector<std::size_t>& big : kept)
                        if (std::includes(big.begin(), big.end(), tau.begin(), tau.end())) {
                            below_kept = true;
                            break;
                        }
                    if (below_kept) continue;
                    std::vector<QVector> probe = columns_of(tau);
                    probe.push_back(qgens[k]);
                    QMatrix rows;
                    for (const QVector& c : probe) rows.push_back(c);
                    if (q_rank(rows) == probe.size()) kept.push_back(std::move(tau));
                }
            }
            for (std::vector<std::size_t>& tau : kept) {
                tau.push_back(k);
                std::sort(tau.begin(), tau.end());
                if (cover_seen.insert(tau).second) fresh.push_back(tau);
            }
        }
        for (std::vector<std::size_t>& sigma : fresh) cover.push_back(std::move(sigma));
    }

    // Candidates: the generators plus the parallelepiped lattice points of
    // every simplicial subcone.
    std::set<IntVector> candidates(m.gens().begin(), m.gens().end());
    for (const std::vector<std::size_t>& sigma : cover) {
        const std::vector<QVector> cols = columns_of(sigma);
        IntVector corner(m.dimension());
        for (std::size_t i : sigma) corner += m.gens()[i];
        Int cells = 1;
        for (std::size_t i = 0; i < m.dimension(); ++i) {
            cells *= corner[i] + 1;
            if (cells > Int(detail::kMaxBoxCells))
                throw std::runtime_error("membership box too large");
        }
        IntVector x(m.dimension());
        while (true) {
            if (!x.is_zero()) {
                const std::optional<QVector> t = q_solve_columns(cols, x.to_rational());
                if (t) {
                    bool in_par = true;
                    for (const Rational& c : *t)
                        if (c < 0 || c >= 1) {
                            in_par = false;
                            break;
                        }
                    if (in_par) candidates.insert(x);
                }
            }
            std::size_t i = m.dimension();
            bool done = true;
            while (i-- > 0) {
                if (++x[i] <= corner[i]) {
                    done = false;
                    break;
                }
                x[i] = 0;
            }
            if (done) break;
        }
    }

    // Irreducibility filter inside the saturation: x is reducible iff some
    // other candidate c has x - c still in the cone (and nonzero).
    const ConvexDomain cone = cone_halfspaces(m.dimension(), qgens);
    const auto in_cone = [&](const IntVector& v) {
        return cone.contains(v.to_rational());
    };
    std::vector<IntVector> basis;
    for (const IntVector& x : candidates) {
        bool reducible = false;
        for (const IntVector& c : candidates) {
            if (c == x || !c.componentwise_leq(x)) continue;
            if (in_cone(x - c)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    return basis;
}

struct PerforationResult {
    bool unperforated;
    std::optional<IntVector> witness;  // Hilbert-basis element outside M
    std::optional<Int> multiplier;     // d with d * witness in M, when found
};

// M is unperforated iff it equals its saturation, i.e. every Hilbert-basis
// element of the saturation already lies in M. Witness search: missing
// elements in colexicographic order, multiplier up to the largest
// coordinate-sum among the generators.
inline PerforationResult is_unperforated(const FinGenMonoid& m, std::size_t max_dim = 4) {
    const std::vector<IntVector> basis = saturation_hilbert_basis(m, max_dim);
    std::vector<IntVector> missing;
    for (const IntVector& h : basis)
        if (!contains(m, h).first) missing.push_back(h);
    if (missing.empty()) return {true, std::nullopt, std::nullopt};
    std::sort(missing.begin(), missing.end(), detail::colex_less);
    Int dmax = 2;
    for (const IntVector& g : m.gens()) {
        const Int s = g.coordinate_sum();
        if (s > dmax) dmax = s;
    }
    for (const IntVector& h : missing)
        for (Int d = 2; d <= dmax; ++d)
            if (contains(m, h * d).first) return {false, h, d};
    return {false, std::nullopt, std::nullopt};
}

struct NonArchWitness {
    IntVector a;  // -a is outside M but -d*a is in M
    IntVector b;  // b - r*a in M for all 0 <= r < d
    Int period;   // d
};

// Bounded search for a sound non-Archimedean certificate: a with -a not in M,
// -d*a in M for some 2 <= d <= d_max, and b in [0, box]^dim with b + r*(-a)
// in M for r = 0..d-1. Writing n = r + kd shows b - n*a in M for every n >= 0,
// so n*a <= b for all n while a is not <= 0. Enumeration is colexicographic
// (first coordinate varying fastest); the first witness found is returned.
inline std::optional<NonArchWitness> non_archimedean_witness(const FinGenMonoid& m,
                                                             const Int& d_max, const Int& box) {
    if (d_max < 2 || box < 1 || m.dimension() == 0) return std::nullopt;
    IntVector big_bound(m.dimension());
    for (std::size_t i = 0; i < m.dimension(); ++i) big_bound[i] = d_max * box;
    const detail::BoxReach reach(m, big_bound);

    // Colexicographic counter over [0, box]^dim: first coordinate fastest.
    const auto advance = [&](IntVector& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (++v[i] <= box) return true;
            v[i] = 0;
        }
        return false;
    };
    IntVector c(m.dimension());
    while (advance(c)) {
        if (reach.reachable(c)) continue;  // -a = c must be outside M
        for (Int d = 2; d <= d_max; ++d) {
            if (!reach.reachable(c * d)) continue;
            IntVector b(m.dimension());
            do {
                bool ok = true;
                for (Int r = 0; r < d && ok; ++r)
                    if (!reach.reachable(b + c * r)) ok = false;
                if (ok) return NonArchWitness{-c, b, d};
            } while (advance(b));
        }
    }
    return std::nullopt;
}

}  // namespace ordcone

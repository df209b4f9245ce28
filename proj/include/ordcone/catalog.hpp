// Named example instances used across the test suite and the CLI `catalog`
// command. Names are either bare ("seven_gen") or parameterized with a
// positive integer ("min_truncations(3)", "quadrant(4)").

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monoid.hpp"
#include "ordgroup.hpp"

namespace ordcone {

struct CatalogInstance {
    std::string name;
    std::optional<GroupPresentation> presentation;
    std::optional<FinGenMonoid> monoid;  // positive cone given directly in Z^n
    std::optional<QSpaceCone> qcone;
    std::optional<NormalizedGroup> group;  // (Z^n, monoid) view when available
};

// Wrap a cone that is already normalized in Z^n as a group: identity change
// of basis, standard basis vectors as the group generators.
inline NormalizedGroup group_from_monoid(const FinGenMonoid& m) {
    std::vector<IntVector> images;
    images.reserve(m.dimension());
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        IntVector e(m.dimension());
        e[i] = 1;
        images.push_back(std::move(e));
    }
    return {m.dimension(), m, UnimodularMap::identity(m.dimension()), std::move(images)};
}

namespace detail {

inline IntVector iv2(long long a, long long b) {
    IntVector v(2);
    v[0] = a;
    v[1] = b;
    return v;
}

}  // namespace detail

inline CatalogInstance example_catalog(const std::string& name) {
    std::string base = name;
    std::optional<long long> param;
    const std::size_t open = name.find('(');
    if (open != std::string::npos) {
        if (name.back() != ')')
            throw std::runtime_error("unknown catalog name: " + name);
        base = name.substr(0, open);
        const std::string inner = name.substr(open + 1, name.size() - open - 2);
        if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
            throw std::runtime_error("catalog parameter must be a positive integer: " + name);
        param = std::stoll(inner);
        if (*param < 1)
            throw std::runtime_error("catalog parameter must be a positive integer: " + name);
    }

    CatalogInstance inst;
    inst.name = name;
    if (base == "a_plus_b_eq_2c") {
        if (param) throw std::runtime_error("unknown catalog name: " + name);
        IntVector eq(3);
        eq[0] = 1;
        eq[1] = 1;
        eq[2] = -2;
        std::vector<IntVector> positives;
        for (std::size_t i = 0; i < 3; ++i) {
            IntVector e(3);
            e[i] = 1;
            positives.push_back(std::move(e));
        }
        inst.presentation = GroupPresentation(3, {eq}, positives);
        inst.monoid =
            FinGenMonoid(2, {detail::iv2(1, 0), detail::iv2(1, 2), detail::iv2(1, 1)});
        inst.group = group_from_monoid(*inst.monoid);
        return inst;
    }
    if (base == "seven_gen") {
        if (param) throw std::runtime_error("unknown catalog name: " + name);
        inst.monoid = FinGenMonoid(
            2, {detail::iv2(2, 0), detail::iv2(1, 1), detail::iv2(0, 2), detail::iv2(3, 0),
                detail::iv2(2, 1), detail::iv2(1, 2), detail::iv2(0, 3)});
        inst.group = group_from_monoid(*inst.monoid);
        return inst;
    }
    if (base == "min_truncations") {
        const long long k = param.value_or(2);
        std::vector<IntVector> gens;
        gens.push_back(detail::iv2(1, 1));
        for (long long j = 2; j <= k; ++j) {
            gens.push_back(detail::iv2(1, j));
            gens.push_back(detail::iv2(j, 1));
        }
        inst.monoid = FinGenMonoid(2, std::move(gens));
        inst.group = group_from_monoid(*inst.monoid);
        return inst;
    }
    if (base == "strict_quadrant") {
        if (param) throw std::runtime_error("unknown catalog name: " + name);
        inst.qcone = QSpaceCone::strict_quadrant();
        return inst;
    }
    if (base == "quadrant") {
        const long long n = param.value_or(2);
        std::vector<IntVector> gens;
        std::vector<QVector> qgens;
        for (long long i = 0; i < n; ++i) {
            IntVector e(static_cast<std::size_t>(n));
            e[static_cast<std::size_t>(i)] = 1;
            gens.push_back(e);
            qgens.push_back(e.to_rational());
        }
        inst.monoid = FinGenMonoid(static_cast<std::size_t>(n), std::move(gens));
        inst.qcone = QSpaceCone::from_generators(static_cast<std::size_t>(n), std::move(qgens));
        inst.group = group_from_monoid(*inst.monoid);
        return inst;
    }
    throw std::runtime_error("unknown catalog name: " + name);
}

}  // namespace ordcone

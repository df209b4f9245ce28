// ordcone: command-line surface over the exact cone/ordered-group library.
//
//   ordcone <command> [flags] <instance-file>
//
// Commands, instance kinds, and flags are documented in docs/cli.md. Every
// run is deterministic: identical inputs yield byte-identical reports.
// Exit status: 0 = computed (positive verdict), 1 = negative verdict of a
// check-style command (UNSAT, non-member, failed check, no witness, no
// basis found), 2 = error or inconclusive result.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ordcone/ordcone.hpp>

namespace {

using namespace ordcone;

[[noreturn]] void incompatible(const std::string& command, const Instance& inst) {
    throw std::runtime_error("incompatible instance kind '" + instance_kind_name(inst.kind) +
                             "' for command '" + command + "'");
}

std::size_t saturation_dim_from_env() {
    const char* env = std::getenv("ORDCONE_SATURATION_DIM");
    if (env == nullptr || *env == '\0') return 4;
    const std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos)
        throw std::runtime_error("ORDCONE_SATURATION_DIM must be a nonnegative integer");
    return static_cast<std::size_t>(std::stoull(s));
}

// The ambient group of a monoid instance is (Z^dim, monoid); a presentation
// is realized first.
NormalizedGroup group_of(const std::string& command, const Instance& inst) {
    if (inst.kind == InstanceKind::monoid) return group_from_monoid(*inst.monoid);
    if (inst.kind == InstanceKind::presentation) return realize(*inst.presentation);
    incompatible(command, inst);
}

ConvexDomain halfspaces_of(const std::string& command, const Instance& inst) {
    if (inst.kind == InstanceKind::ineq_system) return *inst.domain;
    if (inst.kind == InstanceKind::vpolytope) return hull_to_halfspaces(*inst.polytope);
    incompatible(command, inst);
}

std::vector<IntVector> matrix_rows(const IntMatrix& m) {
    std::vector<IntVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for ordered abelian groups and rational polyhedral cones"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    const auto add_common = [&](CLI::App* cmd, bool needs_file) {
        cmd->add_option("--format", format, "output format (text|json)")
            ->check(CLI::IsMember({"text", "json"}));
        if (needs_file)
            cmd->add_option("file", file, "instance file (JSON)")->required();
    };

    auto* solve = app.add_subcommand("solve", "decide satisfiability of an inequality system");
    add_common(solve, true);

    std::string keep_arg;
    auto* project_cmd = app.add_subcommand("project", "project an inequality system");
    project_cmd->add_option("--keep", keep_arg, "comma-separated coordinate indices to keep")
        ->required();
    add_common(project_cmd, true);

    auto* hull = app.add_subcommand("hull", "vertices of a bounded inequality system");
    add_common(hull, true);

    auto* facets = app.add_subcommand("facets", "half-space description of a point hull");
    add_common(facets, true);

    std::string functional_arg, sep_point_arg;
    auto* separate =
        app.add_subcommand("separate", "separating functional (origin, or point on a hyperplane)");
    separate->add_option("--functional", functional_arg,
                         "hyperplane functional r (with --point: separate on {r.x=1})");
    separate->add_option("--point", sep_point_arg, "point a with r.a=1 to separate");
    add_common(separate, true);

    std::string field = "lattice";
    auto* normalize = app.add_subcommand("normalize", "positive normalization transform");
    normalize->add_option("--field", field, "lattice (unimodular) or rational (invertible)")
        ->check(CLI::IsMember({"lattice", "rational"}));
    add_common(normalize, true);

    auto* min_gens = app.add_subcommand("min-gens", "minimal elements of a monoid");
    add_common(min_gens, true);

    std::string from_arg, to_arg;
    auto* interval_cmd = app.add_subcommand("interval", "order interval [from, to] in a monoid");
    interval_cmd->add_option("--from", from_arg, "lower endpoint")->required();
    interval_cmd->add_option("--to", to_arg, "upper endpoint")->required();
    add_common(interval_cmd, true);

    std::string point_arg;
    auto* member = app.add_subcommand("member", "membership test with certificate");
    member->add_option("--point", point_arg, "point to test")->required();
    add_common(member, true);

    auto* saturate = app.add_subcommand("saturate", "Hilbert basis of the saturation");
    add_common(saturate, true);

    std::string check_what, basis_arg;
    auto* check = app.add_subcommand("check", "verify a property of the instance");
    check->add_option("what", check_what, "unperforated | fp | directed | simplicial")
        ->required()
        ->check(CLI::IsMember({"unperforated", "fp", "directed", "simplicial"}));
    check->add_option("--basis", basis_arg, "candidate basis for 'simplicial' (v1;v2;...)");
    add_common(check, true);

    std::string witness_what;
    unsigned long long dmax = 4, wbox = 6;
    auto* witness = app.add_subcommand("witness", "search for a counterexample certificate");
    witness->add_option("what", witness_what, "non-archimedean")
        ->required()
        ->check(CLI::IsMember({"non-archimedean"}));
    witness->add_option("--dmax", dmax, "largest period to try (default 4)");
    witness->add_option("--box", wbox, "coordinate bound on b (default 6)");
    add_common(witness, true);

    auto* realize_cmd = app.add_subcommand("realize", "torsion-free normal form of a presentation");
    add_common(realize_cmd, true);

    std::string hgens_arg;
    unsigned long long sbox = 6;
    auto* subgroup_cmd = app.add_subcommand("subgroup", "induced ordered subgroup, box-certified");
    subgroup_cmd->add_option("--gens", hgens_arg, "subgroup generators (v1;v2;...)")->required();
    subgroup_cmd->add_option("--box", sbox, "certification box bound (default 6)");
    add_common(subgroup_cmd, true);

    std::string fgens_arg;
    unsigned long long budget = 2;
    auto* extend = app.add_subcommand("extend-simplicial",
                                      "search for a simplicial basis spanning F");
    extend->add_option("--fgens", fgens_arg, "generators of F (v1;v2;...; default empty)");
    extend->add_option("--budget", budget, "coefficient budget for the search (default 2)");
    add_common(extend, true);

    std::string name_arg;
    auto* catalog_cmd = app.add_subcommand("catalog", "emit a named example as an instance file");
    catalog_cmd->add_option("--name", name_arg, "catalog entry name")->required();
    add_common(catalog_cmd, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(catalog_cmd)) {
            std::cout << serialize_instance(instance_from_catalog(example_catalog(name_arg)));
            return 0;
        }

        const Instance inst = parse_instance_file(file);
        Report rep;

        if (app.got_subcommand(solve)) {
            rep.command = "solve";
            if (inst.kind != InstanceKind::ineq_system) incompatible(rep.command, inst);
            const SatResult r = is_satisfiable(*inst.domain);
            rep.set("verdict", r.satisfiable ? "SAT" : "UNSAT");
            if (r.satisfiable) rep.set_vector("witness", *r.witness);
            rep.exit_status = r.satisfiable ? 0 : 1;
        } else if (app.got_subcommand(project_cmd)) {
            rep.command = "project";
            if (inst.kind != InstanceKind::ineq_system) incompatible(rep.command, inst);
            std::vector<std::size_t> keep;
            for (const IntVector& one : parse_ivector_list_arg(keep_arg))
                for (std::size_t i = 0; i < one.size(); ++i) {
                    if (one[i] < 0) throw std::runtime_error("project: negative keep index");
                    keep.push_back(static_cast<std::size_t>(one[i].convert_to<unsigned long long>()));
                }
            const ConvexDomain out = project(*inst.domain, keep);
            rep.set("dim", std::to_string(out.dimension()));
            rep.set_ineqs("ineqs", out.constraints());
        } else if (app.got_subcommand(hull)) {
            rep.command = "hull";
            if (inst.kind != InstanceKind::ineq_system) incompatible(rep.command, inst);
            const VPolytope out = halfspaces_to_hull(*inst.domain);
            rep.set("dim", std::to_string(out.dimension()));
            rep.set_vectors("points", out.points());
        } else if (app.got_subcommand(facets)) {
            rep.command = "facets";
            if (inst.kind != InstanceKind::vpolytope) incompatible(rep.command, inst);
            const ConvexDomain out = hull_to_halfspaces(*inst.polytope);
            rep.set("dim", std::to_string(out.dimension()));
            rep.set_ineqs("ineqs", out.constraints());
        } else if (app.got_subcommand(separate)) {
            rep.command = "separate";
            const ConvexDomain d = halfspaces_of(rep.command, inst);
            QVector p;
            if (!functional_arg.empty() || !sep_point_arg.empty()) {
                if (functional_arg.empty() || sep_point_arg.empty())
                    throw std::runtime_error(
                        "separate: --functional and --point must be given together");
                p = separate_on_hyperplane(d, parse_qvector_arg(functional_arg),
                                           parse_qvector_arg(sep_point_arg));
            } else {
                p = separate_from_origin(d);
            }
            rep.set_vector("functional", p);
        } else if (app.got_subcommand(normalize)) {
            rep.command = "normalize";
            if (field == "lattice") {
                std::vector<IntVector> x;
                if (inst.kind == InstanceKind::monoid) {
                    x = inst.monoid->gens();
                } else if (inst.kind == InstanceKind::vpolytope) {
                    for (const QVector& pt : inst.polytope->points()) {
                        IntVector v(pt.size());
                        for (std::size_t i = 0; i < pt.size(); ++i) {
                            if (rat_den(pt[i]) != 1)
                                throw std::runtime_error(
                                    "normalize: lattice field requires integer coordinates");
                            v[i] = rat_num(pt[i]);
                        }
                        x.push_back(std::move(v));
                    }
                } else {
                    incompatible(rep.command, inst);
                }
                const UnimodularMap u = positive_normalization_lattice(x);
                rep.set_vectors("matrix", matrix_rows(u.matrix()));
                std::vector<IntVector> images;
                images.reserve(x.size());
                for (const IntVector& v : x) images.push_back(u.apply(v));
                rep.set_vectors("images", images);
            } else {
                std::vector<QVector> x;
                if (inst.kind == InstanceKind::monoid) {
                    for (const IntVector& g : inst.monoid->gens()) x.push_back(g.to_rational());
                } else if (inst.kind == InstanceKind::vpolytope) {
                    x = inst.polytope->points();
                } else {
                    incompatible(rep.command, inst);
                }
                const QMatrix t = positive_normalization_vs(x);
                rep.set_vectors("matrix", t);
                std::vector<QVector> images;
                images.reserve(x.size());
                for (const QVector& v : x) images.push_back(q_matvec(t, v));
                rep.set_vectors("images", images);
            }
        } else if (app.got_subcommand(min_gens)) {
            rep.command = "min-gens";
            if (inst.kind != InstanceKind::monoid) incompatible(rep.command, inst);
            rep.set_vectors("gens", minimal_elements(*inst.monoid));
        } else if (app.got_subcommand(interval_cmd)) {
            rep.command = "interval";
            if (inst.kind != InstanceKind::monoid) incompatible(rep.command, inst);
            rep.set_vectors("points", interval(*inst.monoid, parse_ivector_arg(from_arg),
                                               parse_ivector_arg(to_arg)));
        } else if (app.got_subcommand(member)) {
            rep.command = "member";
            bool inside = false;
            if (inst.kind == InstanceKind::monoid) {
                const auto r = contains(*inst.monoid, parse_ivector_arg(point_arg));
                inside = r.first;
                rep.set("member", bool_string(inside));
                if (r.second) rep.set_vector("certificate", IntVector(r.second->coefficients));
            } else if (inst.kind == InstanceKind::ineq_system) {
                inside = inst.domain->contains(parse_qvector_arg(point_arg));
                rep.set("member", bool_string(inside));
            } else if (inst.kind == InstanceKind::vpolytope) {
                inside = hull_membership(parse_qvector_arg(point_arg), *inst.polytope);
                rep.set("member", bool_string(inside));
            } else if (inst.kind == InstanceKind::qcone) {
                inside = inst.qcone->contains(parse_qvector_arg(point_arg));
                rep.set("member", bool_string(inside));
            } else {
                incompatible(rep.command, inst);
            }
            rep.exit_status = inside ? 0 : 1;
        } else if (app.got_subcommand(saturate)) {
            rep.command = "saturate";
            if (inst.kind != InstanceKind::monoid) incompatible(rep.command, inst);
            rep.set_vectors("gens",
                            saturation_hilbert_basis(*inst.monoid, saturation_dim_from_env()));
        } else if (app.got_subcommand(check)) {
            rep.command = "check " + check_what;
            if (check_what == "unperforated") {
                if (inst.kind != InstanceKind::monoid) incompatible(rep.command, inst);
                const PerforationResult r =
                    is_unperforated(*inst.monoid, saturation_dim_from_env());
                rep.set("unperforated", bool_string(r.unperforated));
                if (r.witness) rep.set_vector("witness", *r.witness);
                if (r.multiplier) rep.set("multiplier", fraction_string(*r.multiplier));
                rep.exit_status = r.unperforated ? 0 : 1;
            } else if (check_what == "fp") {
                const NormalizedGroup g = group_of(rep.command, inst);
                const FpConditionsReport r = verify_fp_conditions(g);
                rep.set("cone_finitely_generated", bool_string(r.cone_finitely_generated));
                rep.set("minimal_elements_generate", bool_string(r.minimal_elements_generate));
                rep.set("descents_terminate", bool_string(r.descents_terminate));
                rep.set("weakly_archimedean", bool_string(r.weakly_archimedean));
                rep.set("minimal_count", std::to_string(r.minimal_count));
                rep.exit_status = r.all_passed() ? 0 : 1;
            } else if (check_what == "directed") {
                const NormalizedGroup g = group_of(rep.command, inst);
                const bool d = is_directed(g);
                rep.set("directed", bool_string(d));
                rep.exit_status = d ? 0 : 1;
            } else {  // simplicial
                if (inst.kind != InstanceKind::qcone) incompatible(rep.command, inst);
                if (basis_arg.empty())
                    throw std::runtime_error("check simplicial: --basis is required");
                const bool ok = is_simplicial_basis(*inst.qcone, parse_qvector_list_arg(basis_arg));
                rep.set("simplicial", bool_string(ok));
                rep.exit_status = ok ? 0 : 1;
            }
        } else if (app.got_subcommand(witness)) {
            rep.command = "witness non-archimedean";
            if (inst.kind != InstanceKind::monoid) incompatible(rep.command, inst);
            const auto w = non_archimedean_witness(*inst.monoid, Int(dmax), Int(wbox));
            rep.set("found", bool_string(w.has_value()));
            if (w) {
                rep.set_vector("a", w->a);
                rep.set_vector("b", w->b);
                rep.set("period", fraction_string(w->period));
                rep.exit_status = 0;
            } else {
                rep.exit_status = 1;
            }
        } else if (app.got_subcommand(realize_cmd)) {
            rep.command = "realize";
            if (inst.kind != InstanceKind::presentation) incompatible(rep.command, inst);
            const NormalizedGroup g = realize(*inst.presentation);
            rep.set("rank", std::to_string(g.rank));
            rep.set_vectors("cone_gens", g.cone.gens());
            rep.set_vectors("gen_images", g.gen_images);
        } else if (app.got_subcommand(subgroup_cmd)) {
            rep.command = "subgroup";
            const NormalizedGroup g = group_of(rep.command, inst);
            const InducedSubgroupResult r =
                induced_subgroup(g, parse_ivector_list_arg(hgens_arg), Int(sbox));
            if (r.subgroup) {
                rep.set("rank", std::to_string(r.subgroup->rank));
                rep.set_vectors("cone_gens", r.subgroup->cone.gens());
                rep.set_vectors("gen_images", r.subgroup->gen_images);
                rep.exit_status = 0;
            } else {
                rep.set("inconclusive", "true");
                rep.set_vector("offender", *r.offender);
                rep.exit_status = 2;
            }
        } else if (app.got_subcommand(extend)) {
            rep.command = "extend-simplicial";
            if (inst.kind != InstanceKind::qcone) incompatible(rep.command, inst);
            const std::vector<QVector> fgens =
                fgens_arg.empty() ? std::vector<QVector>{} : parse_qvector_list_arg(fgens_arg);
            const auto basis =
                simplicial_extension_search(*inst.qcone, fgens, static_cast<std::size_t>(budget));
            rep.set("found", bool_string(basis.has_value()));
            if (basis) {
                rep.set_vectors("basis", *basis);
                rep.exit_status = 0;
            } else {
                rep.exit_status = 1;
            }
        }

        std::cout << (format == "json" ? emit_json(rep) : emit_text(rep));
        return rep.exit_status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

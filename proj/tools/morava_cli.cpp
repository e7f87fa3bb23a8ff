// Command-line driver: graded actions, characters, decompositions, the
// published tables and the theorem checks.

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "morava/brauer.hpp"
#include "morava/graded_action.hpp"
#include "morava/perm_submodule.hpp"
#include "morava/prime_field.hpp"
#include "morava/small_groups.hpp"
#include "morava/tables.hpp"
#include "morava/theorems.hpp"

using namespace morava;

namespace {

struct RunConfig {
    unsigned p = 2, n = 1, d = 2;
    int k = -1;  // -1: every grade
    std::string group;
    std::string variant = "K";
    bool reduced = false;
    std::string out;
    int jobs = 0;
    std::size_t max_group_order = 20000;
    std::string id;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned ipow(unsigned b, unsigned e)
{
    unsigned long long r = 1;
    while (e--) {
        r *= b;
        if (r > (1ULL << 31))
            throw UsageError("parameters too large");
    }
    return unsigned(r);
}

void validate(const RunConfig& c)
{
    if (!is_prime(c.p))
        throw UsageError("--p must be prime");
    if (c.n < 1 || c.d < 1)
        throw UsageError("--n and --d must be positive");
    unsigned long long size = 1;
    for (unsigned i = 0; i < c.d; ++i) {
        size *= ipow(c.p, c.n);
        if (size > (1ULL << 24))
            throw UsageError("truncated algebra too large (more than 2^24 monomials)");
    }
    if (c.k >= 0 && unsigned(c.k) >= ipow(c.p, c.n) - 1)
        throw UsageError("--k must lie in [0, p^n - 1)");
    parse_variant(c.variant);
}

std::vector<unsigned> grades(const RunConfig& c)
{
    if (c.k >= 0)
        return {unsigned(c.k)};
    std::vector<unsigned> v;
    for (unsigned k = 0; k + 1 < ipow(c.p, c.n); ++k)
        v.push_back(k);
    return v;
}

std::string header(const std::string& cmd, const RunConfig& c)
{
    return "# " + cmd + " p=" + std::to_string(c.p) + " n=" + std::to_string(c.n) + " d=" + std::to_string(c.d) +
           " group=" + c.group + " variant=" + c.variant + " reduced=" + (c.reduced ? "1" : "0");
}

int cmd_action(const RunConfig& c, std::ostream& out)
{
    if (c.k < 0)
        throw UsageError("action needs --k");
    const Preset pr = preset(c.p, c.d, c.group);
    const AlgebraContext ctx(c.p, c.n, c.d);
    const GradedAction a = build_graded_action(ctx, pr.generators, unsigned(c.k), parse_variant(c.variant), c.reduced,
                                               pr.labels);
    out << header("action", c) << " k=" << c.k << " dim=" << a.dimension() << "\n";
    out << "basis\tmonomial\texponents\n";
    for (std::size_t i = 0; i < a.basis.size(); ++i) {
        out << i << "\t" << a.basis[i] << "\t";
        for (std::size_t j = 0; j < a.basis_exponents[i].size(); ++j)
            out << (j ? "," : "") << a.basis_exponents[i][j];
        out << "\n";
    }
    for (std::size_t g = 0; g < a.matrices.size(); ++g) {
        out << "# matrix " << a.labels[g] << " (column j = image of basis element j)\n";
        const FpMatrix& m = a.matrices[g];
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                out << (j ? "\t" : "") << unsigned(m(i, j));
            out << "\n";
        }
    }
    return 0;
}

int cmd_character(const RunConfig& c, std::ostream& out)
{
    const Preset pr = preset(c.p, c.d, c.group);
    const GroupData G = close(pr.generators, c.p, c.d, c.max_group_order);
    const auto classes = p_regular_classes(G, c.p, c.max_group_order);
    const AlgebraContext ctx(c.p, c.n, c.d);
    const Variant v = parse_variant(c.variant);
    out << header("character", c) << " |G|=" << G.order() << "\n";
    out << "class\torder\tsize\tk\tdim\tvalue\tformula\tagree\tdecimal\n";
    bool ok = true;
    for (const auto& cl : classes) {
        const FpMatrix& g = G.element(cl.representative);
        const auto lambdas = lift_eigenvalues(g);
        const auto pieces = build_all_pieces(ctx, {g}, v, c.reduced);
        for (unsigned k : grades(c)) {
            const Cyclotomic chi = character_from_action(pieces[k].matrices[0], cl.order);
            const Cyclotomic f = character_via_eq31(c.p, c.n, k, lambdas, c.reduced);
            ok &= chi == f;
            out << cl.label << "\t" << cl.order << "\t" << cl.size << "\t" << k << "\t" << pieces[k].dimension() << "\t"
                << chi.to_string() << "\t" << f.to_string() << "\t" << (chi == f ? "yes" : "NO") << "\t"
                << chi.to_decimal() << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_permdecomp(const RunConfig& c, std::ostream& out)
{
    const Preset pr = preset(c.p, c.d, c.group);
    const GroupData G = close(pr.generators, c.p, c.d, c.max_group_order);
    if (!G.is_p_group())
        throw UsageError("permdecomp needs a p-group");
    std::vector<PresetSubgroup> order;
    if (c.group == "UV" && c.d == 3)
        order = uv_class_order(c.p);
    const auto classes = conjugacy_classes_of_subgroups(G, subgroup_lattice(G, c.max_group_order), order);
    const AlgebraContext ctx(c.p, c.n, c.d);
    const auto pieces = build_all_pieces(ctx, pr.generators, parse_variant(c.variant), c.reduced);

    out << header("permdecomp", c) << " ordering=";
    for (std::size_t i = 0; i < classes.size(); ++i)
        out << (i ? "," : "") << classes[i].label;
    out << "\n# indices";
    for (const auto& cl : classes)
        out << " " << cl.index_in(G);
    out << "\nn\tk\tdim_M'\tdim_M";
    for (std::size_t i = 0; i < classes.size(); ++i)
        out << "\tP" << i + 1;
    out << "\tpermutation\n";
    for (unsigned k : grades(c)) {
        const auto dec = perm_submodule(extend_representation(G, pieces[k].matrices), classes, true, {.verify = true});
        out << c.n << "\t" << k << "\t" << dec.dim_M_prime << "\t" << dec.dim_M;
        for (auto m : dec.multiplicities)
            out << "\t" << m;
        out << "\t" << (dec.is_permutation_module() ? "yes" : "no") << "\n";
        if (!dec.verified)
            return 1;
    }
    return 0;
}

int cmd_sl2f3(RunConfig c, std::ostream& out)
{
    c.p = 3;
    c.d = 2;
    c.group = "SL2F3";
    validate(c);
    const Preset pr = preset(3, 2, "SL2F3");
    const GroupData G = close(pr.generators, 3, 2);
    const AlgebraContext ctx(3, c.n, 2);
    const auto pieces = build_all_pieces(ctx, pr.generators, parse_variant(c.variant), c.reduced);
    out << header("sl2f3", c) << "\n";
    out << "n\tk\tdim\tI1\tI2\tI3\tI4\tI5\tI6\tI7\tnon_projective\n";
    for (unsigned k : grades(c)) {
        const auto r = sl2f3_decompose(extend_representation(G, pieces[k].matrices));
        out << c.n << "\t" << k << "\t" << r.dim;
        for (auto m : r.multiplicities)
            out << "\t" << m;
        out << "\t" << r.non_projective_count() << "\n";
    }
    return 0;
}

int cmd_gl2f2(RunConfig c, std::ostream& out)
{
    c.p = 2;
    c.d = 2;
    c.group = "GL2F2";
    validate(c);
    const Preset pr = preset(2, 2, "GL2F2");
    const GroupData G = close(pr.generators, 2, 2);
    const AlgebraContext ctx(2, c.n, 2);
    const auto pieces = build_all_pieces(ctx, pr.generators, parse_variant(c.variant), c.reduced);
    out << header("gl2f2", c) << "\n";
    out << "n\tk\tdim\tT\tN\tV\tclosed_form\tagree\ttransitive_census\n";
    bool ok = true;
    for (unsigned k : grades(c)) {
        const auto r = gl2f2_decompose(extend_representation(G, pieces[k].matrices));
        const auto census = gl2f2_transitive_census(r);
        out << c.n << "\t" << k << "\t" << r.dim() << "\t" << r.t << "\t" << r.n << "\t" << r.v << "\t";
        if (!c.reduced) {
            const auto f = l_formula_52(c.n, k);
            ok &= f == r;
            out << f.to_string() << "\t" << (f == r ? "yes" : "NO");
        } else {
            out << "-\t-";
        }
        out << "\t";
        if (census)
            out << census->trivial << "T+" << census->cosets_c3 << "[G/C3]+" << census->cosets_c2 << "[G/C2]+"
                << census->regular << "[G/1]";
        else
            out << "none";
        out << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_table(const RunConfig& c, bool extra, std::ostream& out)
{
    std::vector<std::string> ids;
    if (c.id == "all")
        for (const auto& t : table_specs())
            ids.push_back(t.id);
    else
        ids.push_back(table_spec(c.id).id);
    bool ok = true;
    for (const auto& id : ids) {
        TableOptions opt;
        opt.extra_rows = extra;
        opt.progress = [](const TableResultRow& r) {
            std::cerr << "  n=" << r.n << " k=" << r.k << (r.subgroup.empty() ? "" : " H=" + r.subgroup) << " "
                      << r.note << " (" << r.seconds << " s)\n";
        };
        const TableReport rep = run_table(id, opt);
        write_table_tsv(out, rep);
        std::cerr << "table " << id << ": " << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.seconds << " s)\n";
        ok &= rep.pass();
    }
    return ok ? 0 : 1;
}

int cmd_theorems(const RunConfig& c, std::ostream& out)
{
    std::vector<std::string> sels;
    if (c.id == "all")
        sels = theorem_selectors();
    else
        sels.push_back(c.id);
    bool ok = true;
    out << "selector\tinstance\tverdict\tstatus\n";
    for (const auto& s : sels) {
        const TheoremReport rep = check_theorem(s, [&](const TheoremInstance& i) {
            out << s << "\t" << i.instance << "\t" << i.verdict << "\t" << (i.pass ? "ok" : "FAIL") << "\n";
            out.flush();
        });
        out << "# " << s << ": " << rep.claim << "\n# scope: " << rep.scope << "\n# " << s << " "
            << (rep.pass() ? "PASS" : "FAIL") << "\n";
        ok &= rep.pass();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    // The transcribed tables must be self-consistent before anything runs.
    if (const auto issues = audit_tables(); !issues.empty()) {
        for (const auto& s : issues)
            std::cerr << "table audit: " << s << "\n";
        return 2;
    }

    CLI::App app{"Graded modules of truncated polynomial algebras under GL_d(F_p)"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    bool extra = false;
    app.add_option("--out", cfg.out, "Write output to this file");
    app.add_option("--jobs", cfg.jobs, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
    app.add_option("--max-group-order", cfg.max_group_order, "Enumeration bound for groups")->check(CLI::PositiveNumber);

    auto params = [&](CLI::App* sub, bool with_pd, const std::string& group) {
        if (with_pd) {
            sub->add_option("--p", cfg.p, "Prime")->required();
            sub->add_option("--d", cfg.d, "Rank of V")->required();
            sub->add_option("--group", cfg.group, "Group preset (default " + group + ")");
        }
        sub->add_option("--n", cfg.n, "Height n")->required();
        sub->add_option("--k", cfg.k, "Grade k (default: all)");
        sub->add_option("--variant", cfg.variant, "K or L")->default_val("K");
        sub->add_flag("--reduced", cfg.reduced, "Drop the monomial 1 from grade 0");
    };
    auto* action = app.add_subcommand("action", "Matrices of the group generators on one graded piece");
    params(action, true, "GL");
    auto* character = app.add_subcommand("character", "Brauer characters of the graded pieces");
    params(character, true, "GL");
    auto* permdecomp = app.add_subcommand("permdecomp", "Maximal permutation submodule for a p-group");
    params(permdecomp, true, "UV");
    auto* sl2f3 = app.add_subcommand("sl2f3", "SL_2(F_3)-summands, p = 3, d = 2");
    params(sl2f3, false, "SL2F3");
    auto* gl2f2 = app.add_subcommand("gl2f2", "GL_2(F_2)-summands, p = 2, d = 2");
    params(gl2f2, false, "GL2F2");
    auto* table = app.add_subcommand("table", "Recompute a published table and compare");
    table->add_option("id", cfg.id, "8.1 .. 8.6 or all")->required();
    table->add_flag("--extra", extra, "Also compute grades the table does not print");
    auto* theorems = app.add_subcommand("theorems", "Machine checks behind the main statements");
    theorems->add_option("selector", cfg.id, "1.1a 1.1b 1.1c 1.1d 1.1e 1.2b 1.2c 1.3 1.4 hom, or all")->required();

    CLI11_PARSE(app, argc, argv);

    if (cfg.group.empty())
        cfg.group = *permdecomp ? "UV" : "GL";
    if (cfg.jobs > 0)
        omp_set_num_threads(cfg.jobs);

    std::unique_ptr<std::ofstream> file;
    if (!cfg.out.empty()) {
        file = std::make_unique<std::ofstream>(cfg.out);
        if (!*file) {
            std::cerr << "cannot open " << cfg.out << "\n";
            return 2;
        }
    }
    std::ostream& out = file ? *file : std::cout;

    try {
        if (*action || *character || *permdecomp)
            validate(cfg);
        if (*action)
            return cmd_action(cfg, out);
        if (*character)
            return cmd_character(cfg, out);
        if (*permdecomp)
            return cmd_permdecomp(cfg, out);
        if (*sl2f3)
            return cmd_sl2f3(cfg, out);
        if (*gl2f2)
            return cmd_gl2f2(cfg, out);
        if (*table)
            return cmd_table(cfg, extra, out);
        if (*theorems)
            return cmd_theorems(cfg, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include "morava/tables.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <tuple>

#include "morava/graded_action.hpp"
#include "morava/perm_submodule.hpp"
#include "morava/small_groups.hpp"

namespace morava {

namespace {

std::vector<unsigned> range(unsigned lo, unsigned hi)  // [lo, hi]
{
    std::vector<unsigned> v;
    for (unsigned k = lo; k <= hi; ++k)
        v.push_back(k);
    return v;
}

std::vector<unsigned> parity(unsigned N, unsigned r)
{
    std::vector<unsigned> v;
    for (unsigned k = r; k < N; k += 2)
        v.push_back(k);
    return v;
}

unsigned ipow(unsigned b, unsigned e)
{
    unsigned r = 1;
    while (e--)
        r *= b;
    return r;
}

// Indices |U : G_i| of the subgroup classes of U(V), d = 3, in table order.
std::vector<std::size_t> uv_indices(unsigned p)
{
    if (p == 2)
        return {8, 4, 4, 4, 2, 2, 2, 1};
    std::vector<std::size_t> idx{std::size_t(p) * p * p};
    for (unsigned i = 0; i < p + 2; ++i)
        idx.push_back(std::size_t(p) * p);
    for (unsigned i = 0; i < p + 1; ++i)
        idx.push_back(p);
    idx.push_back(1);
    return idx;
}

std::vector<std::string> p_labels(std::size_t count)
{
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= count; ++i)
        v.push_back("P" + std::to_string(i));
    return v;
}

std::vector<TableSpec> make_specs()
{
    std::vector<TableSpec> specs;

    {
        TableSpec t;
        t.id = "8.1";
        t.caption = "SL_2(F_3)-summands of the reduced pieces, p = 3, d = 2";
        t.p = 3;
        t.d = 2;
        t.group = "SL2F3";
        t.columns = {"I1", "I2", "I3", "I4", "I5", "I6", "I7"};
        t.column_positions = {0, 1, 2, 3, 4, 5, 6};
        t.summand_types = 7;
        t.weights = {1, 2, 3, 2, 4, 6, 3};
        t.rows = {
            {1, {0}, {}, {1, 0, 0, 0, 0, 0, 1}, {}},
            {1, {1}, {}, {0, 0, 0, 0, 1, 0, 0}, {}},
            {2, {0, 4}, {}, {1, 0, 1, 0, 0, 0, 2}, {}},
            {2, {1, 3, 5, 7}, {}, {0, 0, 0, 0, 1, 1, 0}, {}},
            {2, {2, 6}, {}, {1, 0, 0, 0, 0, 0, 3}, {}},
            {3, parity(26, 0), {}, {1, 0, 2, 0, 0, 0, 7}, {}},
            {3, parity(26, 1), {}, {0, 0, 0, 0, 1, 4, 0}, {}},
        };
        specs.push_back(t);
    }
    {
        TableSpec t;
        t.id = "8.2";
        t.caption = "D_8-summands of the reduced pieces, p = 2, d = 3";
        t.p = 2;
        t.d = 3;
        t.group = "UV";
        t.columns = p_labels(8);
        t.column_positions = {0, 1, 2, 3, 4, 5, 6, 7};
        t.summand_types = 8;
        t.weights = uv_indices(2);
        t.rows = {
            {1, {0}, {}, {0, 1, 0, 0, 0, 0, 1, 1}, {}},
            {2, {0}, {}, {0, 2, 2, 1, 0, 0, 0, 1}, {}},
            {2, {1, 2}, {}, {1, 1, 1, 0, 0, 1, 1, 1}, {}},
            {3, {0}, {}, {4, 4, 4, 2, 0, 0, 0, 1}, {}},
            {3, {1, 6}, {}, {6, 1, 3, 0, 0, 3, 1, 1}, {}},
            {3, {2, 5}, {}, {5, 3, 3, 1, 0, 1, 1, 1}, {}},
            {3, {3, 4}, {}, {5, 2, 4, 1, 0, 2, 0, 1}, {}},
            {4, {0}, {}, {24, 8, 8, 4, 0, 0, 0, 1}, {}},
            {4, {1, 14}, {}, {28, 1, 7, 0, 0, 7, 1, 1}, {}},
            {4, {2, 13}, {}, {25, 7, 7, 3, 0, 1, 1, 1}, {}},
            {4, {3, 12}, {}, {27, 2, 8, 1, 0, 6, 0, 1}, {}},
            {4, {4, 11}, {}, {25, 6, 8, 3, 0, 2, 0, 1}, {}},
            {4, {5, 10}, {}, {27, 3, 7, 1, 0, 5, 1, 1}, {}},
            {4, {6, 9}, {}, {26, 5, 7, 2, 0, 3, 1, 1}, {}},
            {4, {7, 8}, {}, {26, 4, 8, 2, 0, 4, 0, 1}, {}},
            {5, {0}, {}, {112, 16, 16, 8, 0, 0, 0, 1}, {}},
        };
        specs.push_back(t);
    }
    {
        TableSpec t;
        t.id = "8.3";
        t.caption = "A maximal Syl_3(GL_3(F_3))-permutation submodule of the reduced pieces";
        t.p = 3;
        t.d = 3;
        t.group = "UV";
        t.columns = {"P1", "P2", "P5", "P6", "P7", "P10", "P11"};
        t.column_positions = {0, 1, 4, 5, 6, 9, 10};
        t.summand_types = 11;
        t.weights = uv_indices(3);
        t.rows = {
            {1, {0, 1}, 13, {0, 1, 0, 0, 0, 1, 1}, {}},
            {2, {0}, 91, {1, 3, 3, 1, 0, 0, 1}, {}},
            {2, {1}, 65, {1, 1, 2, 0, 3, 0, 2}, {}},
            {2, {2}, 71, {1, 2, 2, 0, 1, 1, 2}, {}},
            {2, {3}, 73, {1, 2, 2, 0, 1, 2, 1}, {}},
            {2, {4}, 57, {1, 1, 1, 0, 2, 1, 3}, {}},
            {2, {5}, 65, {1, 2, 1, 0, 1, 2, 2}, {}},
            {2, {6}, 67, {1, 2, 1, 0, 2, 2, 1}, {}},
            {2, {7}, 73, {1, 2, 2, 0, 2, 1, 1}, {}},
        };
        specs.push_back(t);
    }
    {
        TableSpec t;
        t.id = "8.4";
        t.caption = "A maximal Syl_5(GL_3(F_5))-permutation submodule of the reduced pieces";
        t.p = 5;
        t.d = 3;
        t.group = "UV";
        t.columns = {"P1", "P2", "P7", "P8", "P9", "P14", "P15"};
        t.column_positions = {0, 1, 6, 7, 8, 13, 14};
        t.summand_types = 15;
        t.weights = uv_indices(5);
        t.rows = {
            {1, range(0, 3), 31, {0, 1, 0, 0, 0, 1, 1}, {}},
            {2, {0}, 651, {3, 5, 5, 1, 0, 0, 1}, {}},
            {2, {1}, 527, {3, 1, 4, 0, 5, 0, 2}, {}},
            {2, {2}, 447, {2, 3, 4, 0, 3, 1, 2}, {}},
            {2, {3}, 467, {2, 4, 4, 0, 2, 1, 2}, {}},
            {2, {4}, 587, {3, 4, 4, 0, 1, 1, 2}, {}},
            {2, {5}, 591, {3, 4, 4, 0, 1, 2, 1}, {}},
        };
        t.extra = {{2, range(6, 23)}};
        specs.push_back(t);
    }
    for (auto [id, p, dims] : {std::tuple{"8.5", 3u, std::array<std::size_t, 3>{69, 84, 87}},
                               std::tuple{"8.6", 5u, std::array<std::size_t, 3>{535, 628, 643}}}) {
        TableSpec t;
        t.id = id;
        t.caption = "A maximal H-permutation submodule of K^1_{2,3}, p = " + std::to_string(p);
        t.p = p;
        t.d = 3;
        t.group = "H";
        t.rows.push_back({2, {1}, dims[0], {}, "AC"});
        // The <AB^j, C> are conjugate in GL(V); each is run and compared
        // with the single printed value.
        for (unsigned j = 1; j < p; ++j)
            t.rows.push_back({2, {1}, dims[1], {}, "ABC:" + std::to_string(j)});
        t.rows.push_back({2, {1}, dims[2], {}, "BC"});
        specs.push_back(t);
    }
    return specs;
}

double since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Printed values of a row against the computed multiplicities; columns the
// table omits must vanish.
bool compare_row(const TableSpec& spec, const ExpectedRow& e, const TableResultRow& r)
{
    std::set<std::size_t> printed(spec.column_positions.begin(), spec.column_positions.end());
    for (std::size_t c = 0; c < spec.columns.size(); ++c)
        if (r.multiplicities[spec.column_positions[c]] != e.values[c])
            return false;
    for (std::size_t i = 0; i < r.multiplicities.size(); ++i)
        if (!printed.count(i) && r.multiplicities[i] != 0)
            return false;
    if (e.dim && *e.dim != r.dim_M_prime)
        return false;
    return true;
}

std::string join(const std::vector<std::string>& v, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + v[i];
    return s;
}

}  // namespace

const std::vector<TableSpec>& table_specs()
{
    static const std::vector<TableSpec> specs = make_specs();
    return specs;
}

const TableSpec& table_spec(const std::string& id)
{
    for (const auto& t : table_specs())
        if (t.id == id)
            return t;
    throw std::invalid_argument("unknown table '" + id + "' (expected 8.1 .. 8.6)");
}

std::vector<std::string> audit_tables()
{
    std::vector<std::string> issues;
    for (const auto& t : table_specs()) {
        const unsigned p = t.p;
        std::set<std::pair<unsigned, unsigned>> seen;
        for (const auto& r : t.rows) {
            const std::string where = "table " + t.id + " row n=" + std::to_string(r.n);
            const std::size_t full = (ipow(p, r.n * t.d) - 1) / (ipow(p, r.n) - 1);
            if (t.group == "H") {
                if (!r.dim || *r.dim >= full)
                    issues.push_back(where + " " + r.subgroup + ": dimension not below " + std::to_string(full));
                continue;
            }
            if (r.values.size() != t.columns.size()) {
                issues.push_back(where + ": wrong number of columns");
                continue;
            }
            std::size_t dim = 0;
            for (std::size_t c = 0; c < r.values.size(); ++c)
                dim += r.values[c] * t.weights[t.column_positions[c]];
            // Tables without a dim M' column list whole permutation modules.
            const std::size_t expect = r.dim ? *r.dim : full;
            if (dim != expect)
                issues.push_back(where + ": weighted sum " + std::to_string(dim) + " != " + std::to_string(expect));
            if (r.dim && *r.dim > full)
                issues.push_back(where + ": dim M' exceeds the piece dimension");
            for (unsigned k : r.ks) {
                if (k >= ipow(p, r.n) - 1)
                    issues.push_back(where + ": grade " + std::to_string(k) + " out of range");
                if (!seen.insert({r.n, k}).second)
                    issues.push_back(where + ": grade " + std::to_string(k) + " listed twice");
            }
        }
    }
    return issues;
}

bool TableReport::pass() const
{
    for (const auto& r : rows)
        if (r.has_expected && !r.match)
            return false;
    return true;
}

TableReport run_table(const std::string& id, const TableOptions& options)
{
    const TableSpec& spec = table_spec(id);
    const unsigned p = spec.p, d = spec.d;
    TableReport report;
    report.spec = &spec;
    const auto t_start = std::chrono::steady_clock::now();

    auto emit = [&](TableResultRow row) {
        if (options.progress)
            options.progress(row);
        report.rows.push_back(std::move(row));
    };

    if (spec.group == "H") {
        const AlgebraContext ctx(p, 2, d);
        for (const auto& e : spec.rows) {
            const auto t0 = std::chrono::steady_clock::now();
            const Preset pr = preset(p, d, e.subgroup);
            const GroupData H = close(pr.generators, p, d);
            const auto classes = conjugacy_classes_of_subgroups(H, subgroup_lattice(H));
            const GradedAction piece = build_graded_action(ctx, pr.generators, 1, Variant::K, false);
            const PermDecomposition dec = perm_submodule(extend_representation(H, piece.matrices), classes, true);
            TableResultRow row;
            row.n = 2;
            row.k = 1;
            row.subgroup = e.subgroup;
            row.multiplicities = dec.multiplicities;
            row.dim_M_prime = dec.dim_M_prime;
            row.dim_M = dec.dim_M;
            row.has_expected = true;
            row.match = dec.dim_M_prime == *e.dim;
            row.note = dec.dim_M_prime < dec.dim_M ? "not a permutation module" : "permutation module";
            row.seconds = since(t0);
            emit(std::move(row));
        }
        report.seconds = since(t_start);
        return report;
    }

    const Preset pr = preset(p, d, spec.group);
    const GroupData G = close(pr.generators, p, d);
    std::vector<SubgroupClass> classes;
    if (spec.group == "UV") {
        classes = conjugacy_classes_of_subgroups(G, subgroup_lattice(G), uv_class_order(p));
        for (const auto& c : classes)
            report.summand_labels.push_back(c.label);
    } else {
        report.summand_labels = spec.columns;
    }

    std::vector<unsigned> ns;
    for (const auto& e : spec.rows)
        if (ns.empty() || ns.back() != e.n)
            ns.push_back(e.n);

    for (unsigned n : ns) {
        // Requested grades for this n, printed ones first in table order.
        std::vector<std::pair<unsigned, const ExpectedRow*>> jobs;
        for (const auto& e : spec.rows)
            if (e.n == n)
                for (unsigned k : e.ks)
                    jobs.push_back({k, &e});
        std::sort(jobs.begin(), jobs.end(), [](auto& a, auto& b) { return a.first < b.first; });
        if (options.extra_rows)
            for (const auto& [en, ks] : spec.extra)
                if (en == n)
                    for (unsigned k : ks)
                        jobs.push_back({k, nullptr});

        const AlgebraContext ctx(p, n, d);
        const auto pieces = build_all_pieces(ctx, pr.generators, Variant::K, true);
        for (const auto& [k, e] : jobs) {
            const auto t0 = std::chrono::steady_clock::now();
            const Representation rho = extend_representation(G, pieces[k].matrices);
            TableResultRow row;
            row.n = n;
            row.k = k;
            if (spec.group == "SL2F3") {
                const SL2F3Report r = sl2f3_decompose(rho);
                row.multiplicities.assign(r.multiplicities.begin(), r.multiplicities.end());
                row.dim_M_prime = row.dim_M = r.dim;
            } else {
                const PermDecomposition dec = perm_submodule(rho, classes, true);
                row.multiplicities = dec.multiplicities;
                row.dim_M_prime = dec.dim_M_prime;
                row.dim_M = dec.dim_M;
            }
            if (e) {
                row.has_expected = true;
                row.match = compare_row(spec, *e, row);
                // Rows of the p = 2 table are whole permutation modules.
                if (spec.id == "8.2" && row.dim_M_prime != row.dim_M)
                    row.match = false;
                row.note = row.match ? "ok" : "MISMATCH";
            } else {
                row.note = "no paper ground truth";
            }
            row.seconds = since(t0);
            emit(std::move(row));
        }
    }
    report.seconds = since(t_start);
    return report;
}

void write_table_tsv(std::ostream& out, const TableReport& report)
{
    const TableSpec& spec = *report.spec;
    out << "# table " << spec.id << ": " << spec.caption << "\n";
    out << "# p=" << spec.p << " d=" << spec.d << " group=" << spec.group;
    if (!report.summand_labels.empty())
        out << " ordering=" << join(report.summand_labels, ",");
    out << "\n";
    if (spec.group == "H") {
        out << "subgroup\tn\tk\tdim_M''\tdim\tstatus\n";
        for (const auto& r : report.rows)
            out << r.subgroup << "\t" << r.n << "\t" << r.k << "\t" << r.dim_M_prime << "\t" << r.dim_M << "\t"
                << (r.match ? "ok" : "MISMATCH") << "\n";
        return;
    }
    const bool has_dim = spec.group == "UV" && spec.id != "8.2";
    out << "n\tk";
    if (has_dim)
        out << "\tdim_M'";
    for (const auto& c : spec.columns)
        out << "\t" << c;
    out << "\tdim\tstatus\n";
    for (const auto& r : report.rows) {
        out << r.n << "\t" << r.k;
        if (has_dim)
            out << "\t" << r.dim_M_prime;
        for (std::size_t pos : spec.column_positions)
            out << "\t" << r.multiplicities[pos];
        out << "\t" << r.dim_M << "\t" << r.note << "\n";
    }
}

}  // namespace morava

#include "mproj/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "mproj/classifier.hpp"
#include "mproj/lefschetz.hpp"
#include "mproj/report_json.hpp"
#include "mproj/sl2rep.hpp"
#include "mproj/symcurve.hpp"

namespace mproj::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

/// Usage problems detected after CLI11 has parsed the arguments.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr std::size_t kMaxTableCells = 10000;
constexpr unsigned kMaxRoundtrip = 40;
constexpr long long kMaxModuleDim = 1 << 16;

struct Context {
    Format format = Format::Table;
    bool quiet = false;
    std::ostream& out;
    std::ostream& err;

    std::ostream& doc() { return quiet ? null_ : out; }

    std::ostringstream null_;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

void emit_json(Context& ctx, const json& j)
{
    ctx.doc() << j.dump(2) << "\n";
}

std::string join(const std::vector<std::string>& items, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += sep;
        out += items[i];
    }
    return out;
}

std::string join_labels(const std::vector<unsigned>& labels)
{
    std::vector<std::string> s;
    for (unsigned l : labels)
        s.push_back(std::to_string(l));
    return join(s, ",");
}

std::string join_betti(const PoincarePolynomial& p, const std::string& sep)
{
    std::vector<std::string> s;
    for (const auto& b : p.betti())
        s.push_back(b.str());
    return join(s, sep);
}

unsigned to_genus(long long g)
{
    if (g < 0)
        throw UsageError("genus must be nonnegative, got " + std::to_string(g));
    if (g > 100000)
        throw UsageError("genus too large: " + std::to_string(g));
    return static_cast<unsigned>(g);
}

unsigned to_n(long long n, long long min)
{
    if (n < min)
        throw UsageError("n must be at least " + std::to_string(min) + ", got " + std::to_string(n));
    if (n > 100000)
        throw UsageError("n too large: " + std::to_string(n));
    return static_cast<unsigned>(n);
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(Context& ctx, const std::string& a, const std::string& b)
{
    const Partition p1 = parse_partition(a);
    const Partition p2 = parse_partition(b);
    const ClassificationVerdict v = classify(p1, p2);

    switch (ctx.format) {
    case Format::Json:
        emit_json(ctx, to_json(v));
        break;
    case Format::Csv: {
        const json j = to_json(v);
        static const char* cols[] = {"verdict",    "reason",     "n1",
                                     "n2",         "partition1", "partition2",
                                     "character1", "character2", "factorization1",
                                     "factorization2"};
        std::vector<std::string> header, row;
        for (const char* c : cols) {
            header.emplace_back(c);
            const json& f = j.at(c);
            row.push_back(csv_field(f.is_null() ? "" : f.is_string() ? f.get<std::string>() : f.dump()));
        }
        ctx.doc() << join(header, ",") << "\n" << join(row, ",") << "\n";
        break;
    }
    case Format::Table: {
        auto& o = ctx.doc();
        o << "verdict: " << to_string(v.verdict) << "\n";
        o << "reason: " << to_string(v.reason) << "\n";
        o << "partition1: " << to_string(p1) << " (n=" << p1.n() << ")\n";
        o << "partition2: " << to_string(p2) << " (n=" << p2.n() << ")\n";
        if (v.evidence) {
            o << "character1: " << to_string(v.evidence->character1) << "\n";
            o << "character2: " << to_string(v.evidence->character2) << "\n";
            o << "factorization1: " << to_string(v.evidence->factorization1) << "\n";
            o << "factorization2: " << to_string(v.evidence->factorization2) << "\n";
        }
        break;
    }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// betti

int cmd_betti(Context& ctx, long long genus, long long n_arg, bool sum_only)
{
    const unsigned g = to_genus(genus);
    const unsigned n = to_n(n_arg, 1);
    const PoincarePolynomial p = poincare_symmetric_product(g, n);
    if (g >= 1) {
        for (unsigned r = 0; r <= 2 * n; ++r) {
            if (p[r] != betti_closed(g, n, r)) {
                ctx.err << "internal error: series and closed form disagree at B_" << r << "\n";
                return kDomainFailure;
            }
        }
    }
    const std::string method = g == 0 ? "projective" : "series";

    if (sum_only) {
        switch (ctx.format) {
        case Format::Json:
            emit_json(ctx, {{"g", g}, {"n", n}, {"sum", big_to_json(p.total())}});
            break;
        case Format::Csv:
            ctx.doc() << "g,n,sum\n" << g << "," << n << "," << p.total().str() << "\n";
            break;
        case Format::Table:
            ctx.doc() << p.total().str() << "\n";
            break;
        }
        return kOk;
    }

    switch (ctx.format) {
    case Format::Json: {
        json j = {{"g", g}, {"method", method}};
        j.update(to_json(p));
        emit_json(ctx, j);
        break;
    }
    case Format::Csv:
        ctx.doc() << "g,n,r,betti\n";
        for (unsigned r = 0; r <= 2 * n; ++r)
            ctx.doc() << g << "," << n << "," << r << "," << p[r].str() << "\n";
        break;
    case Format::Table: {
        auto& o = ctx.doc();
        o << "genus " << g << ", n " << n << " (" << method << ")\n";
        o << "betti: " << join_betti(p, ",") << "\n";
        o << "poincare: " << to_string(p) << "\n";
        o << "sum: " << p.total().str() << "\n";
        break;
    }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// dims

int cmd_dims(Context& ctx, long long genus, long long n_arg)
{
    const unsigned g = to_genus(genus);
    const unsigned n = to_n(n_arg, 2);
    const DimComparison c = genus_obstruction_report(g, n);
    switch (ctx.format) {
    case Format::Json:
        emit_json(ctx, to_json(c));
        break;
    case Format::Csv:
        ctx.doc() << "g,n,total_dim_cohomology,dim_sym_of_cohomology,relation\n"
                  << g << "," << n << "," << c.cohomology_dim.str() << "," << c.sym_dim.str()
                  << "," << to_string(c.relation) << "\n";
        break;
    case Format::Table: {
        auto& o = ctx.doc();
        o << "genus " << g << ", n " << n << "\n";
        o << "total_dim_cohomology: " << c.cohomology_dim.str() << "\n";
        o << "dim_sym_of_cohomology: " << c.sym_dim.str() << "\n";
        o << "relation: " << to_string(c.relation) << "\n";
        break;
    }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// factor

void emit_factorization(Context& ctx, const Character& c, const IrrepMultiset& m)
{
    const std::string labels = join_labels(m.labels());
    switch (ctx.format) {
    case Format::Json:
        emit_json(ctx, {{"character", to_string(c)},
                        {"factors", m.labels()},
                        {"multiset", to_string(m)}});
        break;
    case Format::Csv:
        ctx.doc() << "character,factors,multiset\n"
                  << csv_field(to_string(c)) << "," << csv_field(labels) << ","
                  << csv_field(to_string(m)) << "\n";
        break;
    case Format::Table:
        ctx.doc() << "character: " << to_string(c) << "\n";
        ctx.doc() << "factors: " << labels << "\n";
        break;
    }
}

int cmd_factor_roundtrip(Context& ctx, long long limit)
{
    if (limit < 1 || limit > kMaxRoundtrip)
        throw UsageError("--roundtrip expects 1.." + std::to_string(kMaxRoundtrip) + ", got " +
                         std::to_string(limit));
    std::size_t checked = 0;
    std::vector<std::string> failures;
    for (unsigned k = 1; k <= static_cast<unsigned>(limit); ++k) {
        for (const auto& parts : integer_partitions(k)) {
            ++checked;
            const IrrepMultiset expected(parts);
            try {
                if (factor_tensor_of_irreps(tensor_of_irreps(parts)) != expected)
                    failures.push_back(to_string(expected));
            } catch (const CharacterError&) {
                failures.push_back(to_string(expected));
            }
        }
    }
    switch (ctx.format) {
    case Format::Json:
        emit_json(ctx, {{"roundtrip", limit}, {"checked", checked}, {"failures", failures}});
        break;
    case Format::Csv:
        ctx.doc() << "roundtrip,checked,failures\n"
                  << limit << "," << checked << "," << failures.size() << "\n";
        break;
    case Format::Table:
        ctx.doc() << "roundtrip up to " << limit << ": " << checked << " partitions checked, "
                  << failures.size() << " failures\n";
        for (const auto& f : failures)
            ctx.doc() << "  failed: " << f << "\n";
        break;
    }
    return failures.empty() ? kOk : kDomainFailure;
}

int cmd_factor(Context& ctx, const std::string& partition, const std::string& character,
               long long roundtrip)
{
    const int given = !partition.empty() + !character.empty() + (roundtrip != 0);
    if (given != 1)
        throw UsageError("factor needs exactly one of --partition, --char, --roundtrip");
    if (roundtrip != 0)
        return cmd_factor_roundtrip(ctx, roundtrip);

    Character c;
    if (!partition.empty()) {
        c = cohomology_character(parse_partition(partition));
    } else {
        LaurentPoly poly;
        try {
            poly = parse_laurent(character);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        c = Character(std::move(poly));
    }
    emit_factorization(ctx, c, factor_tensor_of_irreps(c));
    return kOk;
}

// ---------------------------------------------------------------------------
// lefschetz-check

int cmd_lefschetz_check(Context& ctx, const std::vector<long long>& positional,
                        const std::string& partition)
{
    std::vector<unsigned> labels;
    if (!partition.empty() && !positional.empty())
        throw UsageError("lefschetz-check takes either N or --partition, not both");
    if (!partition.empty()) {
        const Partition p = parse_partition(partition);
        labels.assign(p.parts().begin(), p.parts().end());
    } else if (positional.size() == 1) {
        if (positional.front() < 0)
            throw UsageError("n must be nonnegative, got " + std::to_string(positional.front()));
        labels.push_back(static_cast<unsigned>(to_n(positional.front(), 0)));
    } else {
        throw UsageError("lefschetz-check needs N or --partition");
    }

    long long dim = 1;
    for (unsigned l : labels) {
        dim *= static_cast<long long>(l) + 1;
        if (dim > kMaxModuleDim)
            throw UsageError("module dimension exceeds " + std::to_string(kMaxModuleDim));
    }

    const auto module = multiprojective_module<Rational>(labels);
    const BracketReport report = verify_brackets(module);
    const Character ch = module_character(module);
    const Character expected = tensor_of_irreps(labels);
    const bool char_match = ch == expected;
    const bool irreducible = is_irreducible(module);
    const auto nontrivial = std::count_if(labels.begin(), labels.end(), [](unsigned l) { return l > 0; });
    const bool expected_irreducible = nontrivial <= 1;
    const IrrepMultiset decomposition = clebsch_gordan_decompose(ch);
    const bool ok = report.all_pass() && char_match && irreducible == expected_irreducible;
    const std::string label_text = join_labels(labels);

    switch (ctx.format) {
    case Format::Json:
        emit_json(ctx, {{"partition", label_text},
                        {"dim", module.dim()},
                        {"relations", to_json(report)},
                        {"character", to_string(ch)},
                        {"expected_character", to_string(expected)},
                        {"character_match", char_match},
                        {"irreducible", irreducible},
                        {"expected_irreducible", expected_irreducible},
                        {"decomposition", to_string(decomposition)},
                        {"ok", ok}});
        break;
    case Format::Csv:
        ctx.doc() << "relation,pass,max_abs_discrepancy_numerator\n";
        for (const auto& r : report.relations)
            ctx.doc() << r.relation << "," << (r.pass ? "true" : "false") << ","
                      << r.max_abs_discrepancy_numerator.str() << "\n";
        break;
    case Format::Table: {
        auto& o = ctx.doc();
        o << "module: " << label_text << " (dim " << module.dim() << ")\n";
        for (const auto& r : report.relations)
            o << r.relation << ": " << (r.pass ? "pass" : "FAIL") << "\n";
        o << "character: " << to_string(ch) << (char_match ? " (matches)" : " (MISMATCH)") << "\n";
        o << "irreducible: " << (irreducible ? "true" : "false") << " (expected "
          << (expected_irreducible ? "true" : "false") << ")\n";
        o << "decomposition: " << to_string(decomposition) << "\n";
        o << "status: " << (ok ? "OK" : "FAILED") << "\n";
        break;
    }
    }
    return ok ? kOk : kDomainFailure;
}

// ---------------------------------------------------------------------------
// table

std::pair<unsigned, unsigned> parse_range(const std::string& text, const char* what)
{
    const auto bad = [&] {
        return UsageError(std::string("bad ") + what + " range '" + text + "', expected A..B");
    };
    const auto to_u = [&](const std::string& s) {
        if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), ::isdigit))
            throw bad();
        return static_cast<unsigned>(std::stoul(s));
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const unsigned v = to_u(text);
        return {v, v};
    }
    const unsigned lo = to_u(text.substr(0, dots));
    const unsigned hi = to_u(text.substr(dots + 2));
    if (lo > hi)
        throw UsageError(std::string("empty ") + what + " range '" + text + "'");
    return {lo, hi};
}

int cmd_table(Context& ctx, const std::string& genus_range, const std::string& n_range,
              bool betti_rows)
{
    const auto [g_lo, g_hi] = parse_range(genus_range, "genus");
    const auto [n_lo, n_hi] = parse_range(n_range, "n");
    if (n_lo < 1)
        throw UsageError("n range must start at 1 or above");
    const std::size_t cells = std::size_t(g_hi - g_lo + 1) * std::size_t(n_hi - n_lo + 1);
    if (cells > kMaxTableCells)
        throw UsageError("table has " + std::to_string(cells) + " cells, limit is " +
                         std::to_string(kMaxTableCells));

    struct Row {
        DimComparison dims;
        PoincarePolynomial poincare;
    };
    std::vector<Row> rows;
    rows.reserve(cells);
    for (unsigned g = g_lo; g <= g_hi; ++g) {
        for (unsigned n = n_lo; n <= n_hi; ++n) {
            std::vector<BigInt> betti(2 * std::size_t(n) + 1);
            for (unsigned r = 0; r <= 2 * n; ++r)
                betti[r] = g == 0 ? BigInt(r % 2 == 0 ? 1 : 0) : betti_closed(g, n, r);
            rows.push_back({compare_dimensions(g, n), PoincarePolynomial(std::move(betti))});
        }
    }

    auto& o = ctx.doc();
    switch (ctx.format) {
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : rows) {
            json j = to_json(r.dims);
            json b = json::array();
            for (const auto& v : r.poincare.betti())
                b.push_back(big_to_json(v));
            j["betti"] = b;
            arr.push_back(j);
        }
        emit_json(ctx, arr);
        break;
    }
    case Format::Csv:
        if (betti_rows) {
            o << "g,n,r,betti\n";
            for (const auto& r : rows)
                for (std::size_t k = 0; k < r.poincare.betti().size(); ++k)
                    o << r.dims.genus << "," << r.dims.n << "," << k << ","
                      << r.poincare[k].str() << "\n";
        } else {
            o << "g,n,total_dim_cohomology,dim_sym_of_cohomology,relation\n";
            for (const auto& r : rows)
                o << r.dims.genus << "," << r.dims.n << "," << r.dims.cohomology_dim.str() << ","
                  << r.dims.sym_dim.str() << "," << to_string(r.dims.relation) << "\n";
        }
        break;
    case Format::Table:
        o << std::left << std::setw(6) << "g" << std::setw(6) << "n" << std::setw(16) << "total_dim"
          << std::setw(16) << "sym_dim" << std::setw(16) << "relation"
          << (betti_rows ? "betti" : "") << "\n";
        for (const auto& r : rows) {
            o << std::setw(6) << r.dims.genus << std::setw(6) << r.dims.n << std::setw(16)
              << r.dims.cohomology_dim.str() << std::setw(16) << r.dims.sym_dim.str()
              << std::setw(16) << to_string(r.dims.relation);
            if (betti_rows)
                o << join_betti(r.poincare, " ");
            o << "\n";
        }
        o << std::right;
        break;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact sl(2) character computations for multiprojective spaces and "
                 "symmetric products of curves",
                 args.empty() ? "mproj" : args.front()};
    app.require_subcommand(1);

    std::string format_name = "table";
    bool quiet = false;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--quiet", quiet, "Suppress the result document; only the exit status is reported");

    auto* classify_cmd = app.add_subcommand("classify", "Decide whether two multiprojective spaces are isomorphic");
    std::string p1, p2;
    classify_cmd->add_option("partition1", p1, "First partition, e.g. 2,1")->required();
    classify_cmd->add_option("partition2", p2, "Second partition")->required();

    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of Sym^n of a genus-g curve");
    long long betti_g = 0, betti_n = 0;
    bool betti_sum = false;
    betti_cmd->add_option("--genus", betti_g, "Genus g >= 0")->required();
    betti_cmd->add_option("--n", betti_n, "Symmetric power n >= 1")->required();
    betti_cmd->add_flag("--sum", betti_sum, "Emit only the total dimension");

    auto* dims_cmd = app.add_subcommand("dims", "Compare dim H^*(Sym^n C) with dim Sym^n H^*(C)");
    long long dims_g = 0, dims_n = 0;
    dims_cmd->add_option("--genus", dims_g, "Genus g >= 0")->required();
    dims_cmd->add_option("--n", dims_n, "Symmetric power n >= 2")->required();

    auto* factor_cmd = app.add_subcommand("factor", "Recover the irreducible tensor factors of a character");
    std::string factor_partition, factor_char;
    long long factor_roundtrip = 0;
    factor_cmd->add_option("--partition", factor_partition, "Build the character of a partition, then factor it");
    factor_cmd->add_option("--char", factor_char, "Character in canonical text form, e.g. \"q^2 + 2 + q^-2\"");
    factor_cmd->add_option("--roundtrip", factor_roundtrip, "Check factorization for all partitions of 1..N");

    auto* lef_cmd = app.add_subcommand("lefschetz-check", "Verify the sl(2) action on H^*(P^n) or a product");
    std::vector<long long> lef_n;
    std::string lef_partition;
    lef_cmd->add_option("n", lef_n, "Dimension n of P^n")->expected(0, 1);
    lef_cmd->add_option("--partition", lef_partition, "Partition labelling a product of projective spaces");

    auto* table_cmd = app.add_subcommand("table", "Dimension comparison table over genus and n ranges");
    std::string table_g, table_n;
    bool table_betti = false;
    table_cmd->add_option("--genus", table_g, "Genus range A..B")->required();
    table_cmd->add_option("--n", table_n, "n range A..B")->required();
    table_cmd->add_flag("--betti", table_betti, "Include Betti numbers (CSV: one row per degree)");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    Context ctx{format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Table,
                quiet, out, err, {}};
    try {
        if (classify_cmd->parsed())
            return cmd_classify(ctx, p1, p2);
        if (betti_cmd->parsed())
            return cmd_betti(ctx, betti_g, betti_n, betti_sum);
        if (dims_cmd->parsed())
            return cmd_dims(ctx, dims_g, dims_n);
        if (factor_cmd->parsed())
            return cmd_factor(ctx, factor_partition, factor_char, factor_roundtrip);
        if (lef_cmd->parsed())
            return cmd_lefschetz_check(ctx, lef_n, lef_partition);
        if (table_cmd->parsed())
            return cmd_table(ctx, table_g, table_n, table_betti);
    } catch (const CharacterError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainFailure;
    }
    return kUsageError;
}

}  // namespace mproj::cli

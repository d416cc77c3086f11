#include "stacky/cli.hpp"

#include "stacky/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace stacky {

using fga::Int;
using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::error_code ec;
        if (std::filesystem::is_directory(path, ec))
            throw InputError("'" + path + "' is a directory");
        std::ifstream file(path, std::ios::binary);
        if (!file) throw InputError("cannot open file '" + path + "'");
        buf << file.rdbuf();
    }
    return buf.str();
}

json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());
}

/// Kernel orders for the enumerate subcommand: the explicit claim when
/// present, otherwise the decomposition of the computed obstruction kernel.
std::vector<Int> enumeration_orders(const CurveSpec& spec) {
    const GerbeSpec& g = *spec.gerbe;
    if (g.kernel) return *g.kernel;
    if (g.obstruction) {
        BandData band{g.band};
        fga::PresentedGroup h2 = fga::PresentedGroup::cyclic_product(*g.h2);
        ObstructionData obs{h2, fga::make_hom(character_group(band), h2, *g.obstruction)};
        return fga::decompose(obstruction_kernel(obs).group).torsion;
    }
    throw InputError("gerbe: enumeration needs kernel orders or an obstruction map");
}

int cmd_compute(const std::string& path, const std::string& format, bool checks_only,
                std::istream& in, std::ostream& out) {
    CurveSpec spec = parse_curve_spec(read_input(path, in));
    PicardReport report = run_curve_spec(spec);
    if (checks_only)
        out << render_checks(report);
    else
        out << render(report, format == "json" ? RenderFormat::json : RenderFormat::text);
    return report.pass() ? 0 : 2;
}

int cmd_enumerate(const std::string& path, const std::string& format, std::istream& in,
                  std::ostream& out) {
    CurveSpec spec = parse_curve_spec(read_input(path, in));
    if (!spec.gerbe) throw InputError("enumerate needs a gerbe section");
    std::vector<Int> orders = enumeration_orders(spec);

    CoarsePicard coarse = build_coarse(spec);
    std::vector<StackyPointSpec> points;
    for (const PointSpec& p : spec.points)
        points.push_back({p.label, p.order, coarse.group.element(p.ideal)});
    RigidifiedPicard stage_one = build_pic_rigidified(coarse, points);

    std::vector<ExtensionType> types = enumerate_extensions(stage_one.pic, orders);

    auto witness_expr = [&](const ExtensionType& t, std::size_t j) {
        return format_linear_combination(t.witness[j], stage_one.pic.labels());
    };

    if (format == "json") {
        json jtypes = json::array();
        for (const ExtensionType& t : types) {
            json torsion = json::array();
            for (const Int& d : t.decomposition.torsion) torsion.push_back(json_int(d));
            json witness = json::array();
            for (std::size_t j = 0; j < t.witness.size(); ++j) {
                json coeffs = json::array();
                for (const Int& c : t.witness[j]) coeffs.push_back(json_int(c));
                witness.push_back(json{{"order", json_int(orders[j])},
                                       {"target", witness_expr(t, j)},
                                       {"coefficients", coeffs}});
            }
            jtypes.push_back(json{
                {"decomposition", json{{"free_rank", t.decomposition.free_rank}, {"torsion", torsion}}},
                {"group", t.decomposition.to_string()},
                {"witness", witness}});
        }
        json korders = json::array();
        for (const Int& m : orders) korders.push_back(json_int(m));
        json doc{{"schema_version", 1},
                 {"name", spec.name},
                 {"kernel_orders", korders},
                 {"types", jtypes}};
        out << doc.dump(2) << "\n";
    } else {
        out << "curve: " << (spec.name.empty() ? "(unnamed)" : spec.name) << "\n";
        out << "kernel orders:";
        for (const Int& m : orders) out << " " << m;
        out << "\nextension types: " << types.size() << "\n";
        for (const ExtensionType& t : types) {
            out << "  " << t.decomposition.to_string();
            for (std::size_t j = 0; j < t.witness.size(); ++j)
                out << (j == 0 ? "  [" : "; ") << "lift " << orders[j] << " -> "
                    << witness_expr(t, j);
            out << (t.witness.empty() ? "\n" : "]\n");
        }
    }
    return 0;
}

int cmd_decompose(const std::string& literal, const std::string& format, std::ostream& out) {
    fga::IntegerMatrix rel = parse_matrix_literal(literal);
    fga::PresentedGroup group(rel.cols(), rel);
    const fga::InvariantFactorDecomposition& dec = fga::decompose(group);
    if (format == "json") {
        json torsion = json::array();
        for (const Int& d : dec.torsion) torsion.push_back(json_int(d));
        json doc{{"schema_version", 1},
                 {"group", dec.to_string()},
                 {"decomposition", json{{"free_rank", dec.free_rank}, {"torsion", torsion}}}};
        out << doc.dump(2) << "\n";
    } else {
        out << dec.to_string() << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Picard groups of stacky curves as finitely generated abelian groups"};
    app.name("stacky-pic");
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    std::string literal;

    CLI::App* compute = app.add_subcommand(
        "compute", "Run both computation stages on a curve file and print the report");
    compute->add_option("file", file, "curve description file, or - for stdin")->required();
    compute->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify =
        app.add_subcommand("verify", "Run the computation and print only the checks");
    verify->add_option("file", file, "curve description file, or - for stdin")->required();

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "List all extension types the gerbe stage could produce");
    enumerate->add_option("file", file, "curve description file, or - for stdin")->required();
    enumerate->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* decompose = app.add_subcommand(
        "decompose", "Invariant factors of the group presented by a relation matrix");
    decompose->add_option("matrix", literal, "matrix literal, e.g. \"2,0;0,3\"")->required();
    decompose->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (compute->parsed()) return cmd_compute(file, format, false, in, out);
        if (verify->parsed()) return cmd_compute(file, "text", true, in, out);
        if (enumerate->parsed()) return cmd_enumerate(file, format, in, out);
        if (decompose->parsed()) return cmd_decompose(literal, format, out);
    } catch (const EnumerationTooLargeError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace stacky
